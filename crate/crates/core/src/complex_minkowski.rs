//! Complex 2x2 matrices, Minkowski space, and the `SL(2,C)` action.
//!
//! Minkowski space `R^{1,3}` with coordinates `(T, X, Y, Z)` and metric
//! `dT^2 - dX^2 - dY^2 - dZ^2` is identified with the Hermitian 2x2 matrices
//! via the Pauli basis,
//!
//! ```text
//! (T, X, Y, Z)  <->  1/2 [ T+Z    X+iY ]
//!                        [ X-iY   T-Z  ]
//! ```
//!
//! so that `Tr S = T` and `4 det S = <x, x>`. A matrix `A` in `SL(2,C)` acts
//! on Hermitian matrices by `A.S = A S A*`, which realises the orthochronous
//! Lorentz group `SO(1,3)+` on `R^{1,3}`; `A` and `-A` act identically.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A 2x2 complex matrix, row major: `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl ComplexMatrix2 {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    /// Builds a matrix from real entry pairs `(re, im)`, row major.
    pub fn from_parts(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> Self {
        Self::new(
            Complex64::new(a.0, a.1),
            Complex64::new(b.0, b.1),
            Complex64::new(c.0, c.1),
            Complex64::new(d.0, d.1),
        )
    }

    pub fn zero() -> Self {
        Self::new(
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ZERO,
        )
    }

    pub fn identity() -> Self {
        Self::new(Complex64::ONE, Complex64::ZERO, Complex64::ZERO, Complex64::ONE)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> Self {
        Self::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Inverse; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm_sqr() == 0.0 {
            return None;
        }
        Some(Self::new(self.d / det, -self.b / det, -self.c / det, self.a / det))
    }

    /// Largest entry magnitude, used to scale tolerances.
    pub fn max_norm(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }

    /// Hermitian test: `b = conj(c)` and real diagonal, relative to the
    /// entry scale.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let scale = self.max_norm().max(f64::MIN_POSITIVE);
        (self.b - self.c.conj()).norm() <= tol * scale
            && self.a.im.abs() <= tol * scale
            && self.d.im.abs() <= tol * scale
    }

    /// Unimodular test: `|det A - 1| <= tol`.
    pub fn is_unimodular(&self, tol: f64) -> bool {
        (self.det() - Complex64::ONE).norm() <= tol
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

impl Add for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// A point `(T, X, Y, Z)` of `R^{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Causal type of a vector, classified by the sign of `<x, x>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Timelike,
    Lightlike,
    Spacelike,
}

impl MinkowskiVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.t * s, self.x * s, self.y * s, self.z * s)
    }

    /// Euclidean norm, used only to scale tolerances.
    pub fn euclidean_norm(&self) -> f64 {
        (self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Lorentz inner product with another vector.
    pub fn inner(&self, other: &Self) -> f64 {
        lorentz_inner(self, other)
    }

    pub fn causal_class(&self, tol: f64) -> CausalClass {
        let q = self.inner(self);
        let scale = self.euclidean_norm();
        if q.abs() <= tol * scale * scale {
            CausalClass::Lightlike
        } else if q > 0.0 {
            CausalClass::Timelike
        } else {
            CausalClass::Spacelike
        }
    }

    pub fn is_lightlike(&self, tol: f64) -> bool {
        self.causal_class(tol) == CausalClass::Lightlike
    }

    /// On the future light cone: lightlike within `tol` and `T > 0`.
    pub fn is_future_lightlike(&self, tol: f64) -> bool {
        self.is_lightlike(tol) && self.t > 0.0
    }
}

impl Add for MinkowskiVector {
    type Output = MinkowskiVector;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.t + rhs.t, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for MinkowskiVector {
    type Output = MinkowskiVector;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.t - rhs.t, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for MinkowskiVector {
    type Output = MinkowskiVector;

    fn neg(self) -> Self {
        Self::new(-self.t, -self.x, -self.y, -self.z)
    }
}

/// The Lorentz form `T1 T2 - X1 X2 - Y1 Y2 - Z1 Z2`.
pub fn lorentz_inner(x: &MinkowskiVector, y: &MinkowskiVector) -> f64 {
    x.t * y.t - x.x * y.x - x.y * y.y - x.z * y.z
}

/// Reads `(T, X, Y, Z)` off a Hermitian matrix without checking Hermitianity.
///
/// The symmetrised extraction keeps `T` exactly zero for matrices whose
/// diagonal entries are exact negatives of each other.
pub(crate) fn herm_parts_to_minkowski(s: &ComplexMatrix2) -> MinkowskiVector {
    MinkowskiVector::new(
        s.a.re + s.d.re,
        s.b.re + s.c.re,
        s.b.im - s.c.im,
        s.a.re - s.d.re,
    )
}

/// Converts a Hermitian matrix to its Minkowski point.
///
/// Inverse of [`minkowski_to_herm`]; fails with [`Error::NotHermitian`] when
/// the Hermitian predicate does not hold within `tol`.
pub fn herm_to_minkowski(s: &ComplexMatrix2, tol: f64) -> Result<MinkowskiVector> {
    if !s.is_hermitian(tol) {
        return Err(Error::NotHermitian);
    }
    Ok(herm_parts_to_minkowski(s))
}

/// Converts a Minkowski point to its Hermitian matrix `1/2 [T+Z, X+iY; X-iY, T-Z]`.
pub fn minkowski_to_herm(x: &MinkowskiVector) -> ComplexMatrix2 {
    ComplexMatrix2::new(
        Complex64::new(0.5 * (x.t + x.z), 0.0),
        Complex64::new(0.5 * x.x, 0.5 * x.y),
        Complex64::new(0.5 * x.x, -0.5 * x.y),
        Complex64::new(0.5 * (x.t - x.z), 0.0),
    )
}

/// The action of unimodular `A` on Minkowski space, `x -> A S A*` on the
/// Hermitian side. Preserves the Lorentz form and the future light cone.
pub fn sl2c_action_minkowski(a: &ComplexMatrix2, x: &MinkowskiVector, tol: f64) -> Result<MinkowskiVector> {
    if !a.is_unimodular(tol) {
        return Err(Error::NotUnimodular);
    }
    let s = *a * minkowski_to_herm(x) * a.adjoint();
    Ok(herm_parts_to_minkowski(&s))
}

/// The 4x4 real matrix of the Lorentz transformation induced by `A`, acting
/// on column vectors `(T, X, Y, Z)`. Satisfies `M(-A) = M(A)`.
pub fn so13_matrix(a: &ComplexMatrix2, tol: f64) -> Result<[[f64; 4]; 4]> {
    if !a.is_unimodular(tol) {
        return Err(Error::NotUnimodular);
    }
    let basis = [
        MinkowskiVector::new(1.0, 0.0, 0.0, 0.0),
        MinkowskiVector::new(0.0, 1.0, 0.0, 0.0),
        MinkowskiVector::new(0.0, 0.0, 1.0, 0.0),
        MinkowskiVector::new(0.0, 0.0, 0.0, 1.0),
    ];
    let mut m = [[0.0; 4]; 4];
    for (j, e) in basis.iter().enumerate() {
        let image = sl2c_action_minkowski(a, e, tol)?;
        m[0][j] = image.t;
        m[1][j] = image.x;
        m[2][j] = image.y;
        m[3][j] = image.z;
    }
    Ok(m)
}

/// Applies a 4x4 matrix to a Minkowski vector.
pub fn apply_so13(m: &[[f64; 4]; 4], x: &MinkowskiVector) -> MinkowskiVector {
    let col = [x.t, x.x, x.y, x.z];
    let mut out = [0.0; 4];
    for (i, row) in m.iter().enumerate() {
        out[i] = row.iter().zip(col.iter()).map(|(a, b)| a * b).sum();
    }
    MinkowskiVector::new(out[0], out[1], out[2], out[3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::{IDENTITY_TOL, LINEAR_TOL};

    fn close(a: &MinkowskiVector, b: &MinkowskiVector, tol: f64) -> bool {
        let scale = a.euclidean_norm().max(b.euclidean_norm()).max(1.0);
        (*a - *b).euclidean_norm() <= tol * scale
    }

    #[test]
    fn herm_to_minkowski_examples() {
        // 1/2 [2, 0; 0, 0] -> (1, 0, 0, 1)
        let s = ComplexMatrix2::from_parts((1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0));
        assert_eq!(
            herm_to_minkowski(&s, IDENTITY_TOL).unwrap(),
            MinkowskiVector::new(1.0, 0.0, 0.0, 1.0)
        );

        let zero = ComplexMatrix2::zero();
        assert_eq!(herm_to_minkowski(&zero, IDENTITY_TOL).unwrap(), MinkowskiVector::zero());

        // 1/2 [1, i; -i, 1] -> (1, 0, 1, 0)
        let s = ComplexMatrix2::from_parts((0.5, 0.0), (0.0, 0.5), (0.0, -0.5), (0.5, 0.0));
        assert_eq!(
            herm_to_minkowski(&s, IDENTITY_TOL).unwrap(),
            MinkowskiVector::new(1.0, 0.0, 1.0, 0.0)
        );
    }

    #[test]
    fn herm_to_minkowski_rejects_non_hermitian() {
        let s = ComplexMatrix2::from_parts((0.0, 1.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0));
        assert_eq!(herm_to_minkowski(&s, IDENTITY_TOL), Err(Error::NotHermitian));
    }

    #[test]
    fn minkowski_to_herm_examples() {
        let s = minkowski_to_herm(&MinkowskiVector::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(s, ComplexMatrix2::identity().scale(Complex64::new(0.5, 0.0)));

        let x = MinkowskiVector::new(1.0, 0.0, 0.0, 1.0);
        let s = minkowski_to_herm(&x);
        assert_eq!(s.trace().re, x.t);
        assert_eq!(4.0 * s.det().re, lorentz_inner(&x, &x));

        let s = minkowski_to_herm(&MinkowskiVector::new(2.0, 2.0, 0.0, 0.0));
        assert_eq!(
            s,
            ComplexMatrix2::from_parts((1.0, 0.0), (1.0, 0.0), (1.0, 0.0), (1.0, 0.0))
        );
        assert_eq!(s.det(), Complex64::ZERO); // lightlike
    }

    #[test]
    fn lorentz_inner_examples() {
        let q0 = MinkowskiVector::new(1.0, 0.0, 0.0, 0.0);
        let p0 = MinkowskiVector::new(1.0, 0.0, 0.0, 1.0);
        assert_eq!(lorentz_inner(&q0, &q0), 1.0);
        assert_eq!(lorentz_inner(&p0, &p0), 0.0);
        assert_eq!(lorentz_inner(&p0, &q0), 1.0);
    }

    #[test]
    fn sl2c_action_examples() {
        let q0 = MinkowskiVector::new(1.0, 0.0, 0.0, 0.0);
        let id = ComplexMatrix2::identity();
        assert_eq!(sl2c_action_minkowski(&id, &q0, IDENTITY_TOL).unwrap(), q0);

        // parabolic with c = 1 sends q0 to (3/2, 1, 0, 1/2)
        let ac = ComplexMatrix2::from_parts((1.0, 0.0), (1.0, 0.0), (0.0, 0.0), (1.0, 0.0));
        assert!(close(
            &sl2c_action_minkowski(&ac, &q0, IDENTITY_TOL).unwrap(),
            &MinkowskiVector::new(1.5, 1.0, 0.0, 0.5),
            LINEAR_TOL,
        ));

        // [0, -1; 1, 0] swaps the poles of the celestial sphere
        let a = ComplexMatrix2::from_parts((0.0, 0.0), (-1.0, 0.0), (1.0, 0.0), (0.0, 0.0));
        let p0 = MinkowskiVector::new(1.0, 0.0, 0.0, 1.0);
        assert!(close(
            &sl2c_action_minkowski(&a, &p0, IDENTITY_TOL).unwrap(),
            &MinkowskiVector::new(1.0, 0.0, 0.0, -1.0),
            LINEAR_TOL,
        ));
    }

    #[test]
    fn sl2c_action_rejects_non_unimodular() {
        let a = ComplexMatrix2::identity().scale(Complex64::new(2.0, 0.0));
        let x = MinkowskiVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(sl2c_action_minkowski(&a, &x, IDENTITY_TOL), Err(Error::NotUnimodular));
    }

    #[test]
    fn so13_matrix_identity_and_sign() {
        let id = so13_matrix(&ComplexMatrix2::identity(), IDENTITY_TOL).unwrap();
        for (i, row) in id.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                assert_eq!(entry, if i == j { 1.0 } else { 0.0 });
            }
        }

        let a = ComplexMatrix2::from_parts((0.3, 0.4), (-0.2, 0.1), (0.0, 0.0), (0.0, 0.0));
        // complete to det 1: d = 1/a
        let inv = Complex64::ONE / a.a;
        let a = ComplexMatrix2::new(a.a, a.b, Complex64::ZERO, inv);
        let m1 = so13_matrix(&a, IDENTITY_TOL).unwrap();
        let m2 = so13_matrix(&-a, IDENTITY_TOL).unwrap();
        assert_eq!(m1, m2);
    }

    #[test]
    fn so13_matrix_of_parabolic() {
        // c = i: rows of the action T' = T + Re(c) X + Im(c) Y + |c|^2/2 (T - Z), etc.
        let ac = ComplexMatrix2::from_parts((1.0, 0.0), (0.0, 1.0), (0.0, 0.0), (1.0, 0.0));
        let m = so13_matrix(&ac, IDENTITY_TOL).unwrap();
        let expected = [
            [1.5, 0.0, 1.0, -0.5],
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 1.0, -1.0],
            [0.5, 0.0, 1.0, 0.5],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert!((m[i][j] - expected[i][j]).abs() <= LINEAR_TOL);
            }
        }
    }

    #[test]
    fn causal_classification() {
        let tol = IDENTITY_TOL;
        assert_eq!(MinkowskiVector::new(1.0, 0.0, 0.0, 0.0).causal_class(tol), CausalClass::Timelike);
        assert_eq!(MinkowskiVector::new(1.0, 0.0, 0.0, 1.0).causal_class(tol), CausalClass::Lightlike);
        assert_eq!(MinkowskiVector::new(0.0, 1.0, 0.0, 0.0).causal_class(tol), CausalClass::Spacelike);
        assert!(MinkowskiVector::new(1.0, 0.0, 0.0, 1.0).is_future_lightlike(tol));
        assert!(!MinkowskiVector::new(-1.0, 0.0, 0.0, 1.0).is_future_lightlike(tol));
    }
}
