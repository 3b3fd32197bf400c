//! Random geometric data for tests and benchmarks.
//!
//! Unimodular matrices are drawn by sampling four entries from the unit disc,
//! rejecting determinants below 0.1 in modulus, and dividing by a square root
//! of the determinant. Totally positive tuples are built constructively:
//! centres laid out in cyclic order, then spinor signs propagated from the
//! first column so that every bracket against it is positive.

use num_complex::Complex64;
use rand::Rng;

use crate::complex_minkowski::ComplexMatrix2;
use crate::polygons_grassmannians::SpinorTuple;
use crate::spinor_flags::{bracket, Spinor};
use crate::tol::DEGENERACY_TOL;

/// A complex number with both parts uniform in `[-1, 1]`.
pub fn complex_unit_square<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// A complex number uniform in the closed unit disc.
pub fn complex_unit_disc<R: Rng>(rng: &mut R) -> Complex64 {
    loop {
        let z = complex_unit_square(rng);
        if z.norm_sqr() <= 1.0 {
            return z;
        }
    }
}

/// A spinor with entries uniform in the complex unit square, bounded away
/// from zero.
pub fn random_spinor<R: Rng>(rng: &mut R) -> Spinor {
    loop {
        let k = Spinor::new(complex_unit_square(rng), complex_unit_square(rng));
        if k.norm_sqr() > 1e-2 {
            return k;
        }
    }
}

/// A pair of spinors whose bracket clears the degeneracy threshold.
pub fn random_spinor_pair<R: Rng>(rng: &mut R) -> (Spinor, Spinor) {
    loop {
        let k1 = random_spinor(rng);
        let k2 = random_spinor(rng);
        if bracket(&k1, &k2).norm() > DEGENERACY_TOL * k1.norm() * k2.norm() {
            return (k1, k2);
        }
    }
}

/// A random matrix in `SL(2, C)`.
pub fn random_unimodular<R: Rng>(rng: &mut R) -> ComplexMatrix2 {
    loop {
        let m = ComplexMatrix2::new(
            complex_unit_disc(rng),
            complex_unit_disc(rng),
            complex_unit_disc(rng),
            complex_unit_disc(rng),
        );
        let det = m.det();
        if det.norm() >= 0.1 {
            return m.scale(Complex64::ONE / det.sqrt());
        }
    }
}

/// A random totally positive d-tuple (`d >= 3`), with an even chance of one
/// centre at infinity, exercising both cyclic-order patterns and all
/// rotations.
pub fn random_totally_positive<R: Rng>(rng: &mut R, d: usize) -> SpinorTuple {
    assert!(d >= 3);
    let with_infinity = rng.random_bool(0.5);
    let finite = if with_infinity { d - 1 } else { d };

    // distinct reals in decreasing order, gaps bounded below
    let mut centres: Vec<f64> = Vec::with_capacity(finite);
    while centres.len() < finite {
        let z = rng.random_range(-5.0..5.0);
        if centres.iter().all(|&w| (z - w).abs() > 1e-2) {
            centres.push(z);
        }
    }
    centres.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let mut ks: Vec<Spinor> = Vec::with_capacity(d);
    if with_infinity {
        let h: f64 = rng.random_range(0.2..2.0);
        ks.push(Spinor::from_parts(h.sqrt(), 0.0, 0.0, 0.0));
    }
    for z in centres {
        let diam: f64 = rng.random_range(0.2..2.0);
        let eta = 1.0 / diam.sqrt();
        ks.push(Spinor::from_parts(z * eta, 0.0, eta, 0.0));
    }

    // random rotation of the cyclic order
    let offset = rng.random_range(0..d);
    ks.rotate_left(offset);

    // sign propagation from the first column
    for j in 1..d {
        if bracket(&ks[0], &ks[j]).re < 0.0 {
            ks[j] = -ks[j];
        }
    }
    SpinorTuple::new(ks).expect("constructed tuple is valid")
}
