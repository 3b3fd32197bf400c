//! Ideal polygons, total positivity, Pluecker coordinates and gauge
//! normalisation.
//!
//! A d-tuple of spinors doubles as a 2xd matrix whose 2x2 column minors are
//! its Pluecker coordinates; these equal the pairwise lambda lengths. Real
//! tuples with all order-respecting brackets positive ("totally positive")
//! correspond to decorated ideal d-gons whose centres sit in cyclic order
//! around the boundary of the hyperbolic plane, oriented in the negative
//! real direction. Quotienting tuples by the unimodular gauge action realises
//! decorated Teichmueller spaces as cones over Grassmannians, with lambda
//! lengths as the Pluecker coordinates.

use num_complex::Complex64;

use crate::complex_minkowski::ComplexMatrix2;
use crate::error::{Error, Result};
use crate::horospheres::BoundaryPointUHS;
use crate::spinor_flags::{bracket, Spinor};
use crate::tol::DEGENERACY_TOL;

/// Which gauge group acts on a tuple: `SL(2,R)` on real tuples or `SL(2,C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

/// An ordered tuple of nonzero spinors; the columns of a 2xd matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorTuple {
    spinors: Vec<Spinor>,
}

impl SpinorTuple {
    /// At least two nonzero spinors.
    pub fn new(spinors: Vec<Spinor>) -> Result<Self> {
        if spinors.len() < 2 {
            return Err(Error::DegenerateInput);
        }
        if spinors.iter().any(|k| !k.is_nonzero()) {
            return Err(Error::ZeroSpinor);
        }
        Ok(Self { spinors })
    }

    pub fn len(&self) -> usize {
        self.spinors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spinors.is_empty()
    }

    pub fn spinors(&self) -> &[Spinor] {
        &self.spinors
    }

    pub fn get(&self, i: usize) -> &Spinor {
        &self.spinors[i]
    }

    /// All components real within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.spinors.iter().all(|k| k.is_real(tol))
    }

    /// Applies a matrix to every column.
    pub fn transform(&self, a: &ComplexMatrix2) -> Self {
        Self {
            spinors: self.spinors.iter().map(|k| a.apply(k)).collect(),
        }
    }

    /// Negates every column.
    pub fn negated(&self) -> Self {
        Self {
            spinors: self.spinors.iter().map(|k| -*k).collect(),
        }
    }
}

/// The vector of Pluecker coordinates `p_ij = {k_i, k_j}`, `i < j`, of a
/// 2xd matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PluckerVector {
    d: usize,
    entries: Vec<Complex64>,
}

impl PluckerVector {
    pub fn dimension(&self) -> usize {
        self.d
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.d);
        i * (2 * self.d - i - 1) / 2 + (j - i - 1)
    }

    /// The coordinate `p_ij` for `i < j`.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[self.index(i, j)]
    }

    /// Iterates `((i, j), p_ij)` over all `i < j` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), Complex64)> + '_ {
        (0..self.d)
            .flat_map(move |i| ((i + 1)..self.d).map(move |j| (i, j)))
            .map(move |(i, j)| ((i, j), self.get(i, j)))
    }

    /// Largest residual `|p_ij p_kl + p_il p_jk - p_ik p_jl|` over all
    /// `i < j < k < l`, relative to the largest term in that relation.
    pub fn max_three_term_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.d {
            for j in (i + 1)..self.d {
                for k in (j + 1)..self.d {
                    for l in (k + 1)..self.d {
                        let t1 = self.get(i, j) * self.get(k, l);
                        let t2 = self.get(i, l) * self.get(j, k);
                        let t3 = self.get(i, k) * self.get(j, l);
                        let scale = t1.norm().max(t2.norm()).max(t3.norm()).max(f64::MIN_POSITIVE);
                        worst = worst.max((t1 + t2 - t3).norm() / scale);
                    }
                }
            }
        }
        worst
    }
}

/// Whether every spinor is real and every bracket `{k_i, k_j}`, `i < j`, is
/// positive (beyond `tol`, relative to the spinor norms).
pub fn is_totally_positive(t: &SpinorTuple, tol: f64) -> bool {
    if !t.is_real(tol) {
        return false;
    }
    let ks = t.spinors();
    for i in 0..ks.len() {
        for j in (i + 1)..ks.len() {
            let b = bracket(&ks[i], &ks[j]);
            let threshold = tol * ks[i].norm() * ks[j].norm();
            if !b.re.is_finite() || b.re <= threshold || b.im.abs() > threshold {
                return false;
            }
        }
    }
    true
}

const CENTRE_TOL: f64 = 1e-9;

/// Whether the centres, read cyclically, wind around the boundary circle of
/// the hyperbolic plane with its orientation in the negative real direction:
/// some rotation of the list is strictly decreasing, or has infinity first
/// followed by a strictly decreasing list.
pub fn cyclic_order_ok(centres: &[BoundaryPointUHS]) -> Result<bool> {
    let d = centres.len();
    let mut values: Vec<Option<f64>> = Vec::with_capacity(d);
    let mut infinities = 0;
    for c in centres {
        match c {
            BoundaryPointUHS::Infinity => {
                infinities += 1;
                values.push(None);
            }
            BoundaryPointUHS::Finite(z) => {
                if !z.re.is_finite() || z.im.abs() > CENTRE_TOL * z.norm().max(1.0) {
                    return Err(Error::NonRealCentre);
                }
                values.push(Some(z.re));
            }
        }
    }
    if infinities > 1 {
        return Err(Error::MultipleInfinities);
    }
    for i in 0..d {
        for j in (i + 1)..d {
            match (values[i], values[j]) {
                (None, None) => return Err(Error::MultipleInfinities),
                (Some(a), Some(b)) if (a - b).abs() <= CENTRE_TOL * a.abs().max(b.abs()).max(1.0) => {
                    return Err(Error::DuplicateCentre);
                }
                _ => {}
            }
        }
    }

    // try every rotation; d is small
    'rotation: for start in 0..d {
        let rotated: Vec<Option<f64>> = (0..d).map(|i| values[(start + i) % d]).collect();
        let tail = match rotated[0] {
            None => &rotated[1..],
            Some(_) => &rotated[..],
        };
        if tail.iter().any(|v| v.is_none()) {
            continue; // infinity not in leading position for this rotation
        }
        for w in tail.windows(2) {
            if w[0].unwrap() <= w[1].unwrap() {
                continue 'rotation;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Pluecker coordinates of the tuple; requires rank 2 (some bracket
/// significantly nonzero).
pub fn plucker(t: &SpinorTuple) -> Result<PluckerVector> {
    let ks = t.spinors();
    let d = ks.len();
    let mut entries = Vec::with_capacity(d * (d - 1) / 2);
    let mut best = 0.0_f64;
    let mut best_scale = f64::MIN_POSITIVE;
    for i in 0..d {
        for j in (i + 1)..d {
            let b = bracket(&ks[i], &ks[j]);
            entries.push(b);
            best = best.max(b.norm());
            best_scale = best_scale.max(ks[i].norm() * ks[j].norm());
        }
    }
    if best <= DEGENERACY_TOL * best_scale {
        return Err(Error::RankDeficient);
    }
    Ok(PluckerVector { d, entries })
}

/// Gauge-normalises a tuple: applies the unique determinant-one matrix (over
/// the given field) sending `k1` to `(1, 0)` and `k2` to `(0, D)` with
/// `D = {k1, k2}`. Pluecker coordinates are unchanged; the map is idempotent.
pub fn gauge_normalize(t: &SpinorTuple, field: Field, tol: f64) -> Result<SpinorTuple> {
    let ks = t.spinors();
    let d_br = bracket(&ks[0], &ks[1]);
    if d_br.norm() <= DEGENERACY_TOL * ks[0].norm() * ks[1].norm() {
        return Err(Error::DegeneratePair);
    }
    if field == Field::Real && !t.is_real(tol) {
        return Err(Error::NotRealTuple);
    }
    // A = M^{-1} for M = [k1 | k2/D]; det M = 1 by construction, rescaled to
    // absorb rounding. A k1 = (1, 0) and A k2 = (0, D) hold exactly, so the
    // first two columns are written directly.
    let m = ComplexMatrix2::new(ks[0].xi, ks[1].xi / d_br, ks[0].eta, ks[1].eta / d_br);
    let mut a = m.inverse().ok_or(Error::DegeneratePair)?;
    a = a.scale(Complex64::ONE / a.det().sqrt());
    let mut out = Vec::with_capacity(ks.len());
    out.push(Spinor::new(Complex64::ONE, Complex64::ZERO));
    out.push(Spinor::new(Complex64::ZERO, d_br));
    for k in &ks[2..] {
        out.push(a.apply(k));
    }
    SpinorTuple::new(out)
}

/// Lambda-length coordinates of the decorated ideal (skew) d-gon spanned by
/// the tuple: its Pluecker vector, gated by the field-specific condition
/// (total positivity over the reals, nowhere-vanishing coordinates over C).
pub fn teichmuller_coordinates(t: &SpinorTuple, field: Field, tol: f64) -> Result<PluckerVector> {
    let p = plucker(t)?;
    match field {
        Field::Real => {
            if !is_totally_positive(t, tol) {
                return Err(Error::NotTotallyPositive);
            }
        }
        Field::Complex => {
            let ks = t.spinors();
            for ((i, j), v) in p.pairs() {
                if v.norm() <= DEGENERACY_TOL * ks[i].norm() * ks[j].norm() {
                    return Err(Error::ZeroPlucker);
                }
            }
        }
    }
    Ok(p)
}

/// Whether the spinor is real, i.e. yields a planar decoration: a horocycle
/// in the upper half plane whose decoration points along a positive multiple
/// of `i`.
pub fn is_planar_real(k: &Spinor, tol: f64) -> Result<bool> {
    if !k.is_nonzero() {
        return Err(Error::ZeroSpinor);
    }
    Ok(k.is_real(tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horospheres::{centre_uhs, decorated_horosphere_uhs};
    use crate::tol::{IDENTITY_TOL, LINEAR_TOL};

    fn k(re_xi: f64, im_xi: f64, re_eta: f64, im_eta: f64) -> Spinor {
        Spinor::from_parts(re_xi, im_xi, re_eta, im_eta)
    }

    fn triangle() -> SpinorTuple {
        SpinorTuple::new(vec![
            k(0.0, 0.0, 1.0, 0.0),
            k(-1.0, 0.0, 1.0, 0.0),
            k(-1.0, 0.0, 0.0, 0.0),
        ])
        .unwrap()
    }

    #[test]
    fn totally_positive_examples() {
        assert!(is_totally_positive(&triangle(), IDENTITY_TOL));

        let degenerate = SpinorTuple::new(vec![
            k(1.0, 0.0, 0.0, 0.0),
            k(0.0, 0.0, 1.0, 0.0),
            k(-1.0, 0.0, 0.0, 0.0),
        ])
        .unwrap();
        assert!(!is_totally_positive(&degenerate, IDENTITY_TOL));

        let non_real = SpinorTuple::new(vec![
            k(1.0, 1.0, 0.0, 0.0),
            k(0.0, 0.0, 1.0, 0.0),
            k(1.0, 0.0, 0.0, 0.0),
        ])
        .unwrap();
        assert!(!is_totally_positive(&non_real, IDENTITY_TOL));
    }

    #[test]
    fn cyclic_order_examples() {
        let fin = |x: f64| BoundaryPointUHS::Finite(Complex64::new(x, 0.0));
        assert!(cyclic_order_ok(&[BoundaryPointUHS::Infinity, fin(2.0), fin(1.0), fin(0.0)]).unwrap());
        assert!(!cyclic_order_ok(&[fin(0.0), fin(1.0), fin(2.0)]).unwrap());
        assert!(cyclic_order_ok(&[fin(2.0), fin(1.0), fin(0.0)]).unwrap());
        // rotations of a valid pattern stay valid
        assert!(cyclic_order_ok(&[fin(1.0), fin(0.0), fin(2.0)]).unwrap());

        assert_eq!(
            cyclic_order_ok(&[fin(1.0), fin(1.0), fin(0.0)]),
            Err(Error::DuplicateCentre)
        );
        assert_eq!(
            cyclic_order_ok(&[BoundaryPointUHS::Infinity, BoundaryPointUHS::Infinity, fin(0.0)]),
            Err(Error::MultipleInfinities)
        );
        assert_eq!(
            cyclic_order_ok(&[BoundaryPointUHS::Finite(Complex64::new(0.0, 1.0)), fin(1.0), fin(0.0)]),
            Err(Error::NonRealCentre)
        );
    }

    #[test]
    fn centres_of_totally_positive_triangle_are_ordered() {
        let t = triangle();
        let centres: Vec<_> = t
            .spinors()
            .iter()
            .map(|s| centre_uhs(s).unwrap())
            .collect();
        assert!(cyclic_order_ok(&centres).unwrap());
    }

    #[test]
    fn plucker_examples() {
        let z = Complex64::new(2.0, 1.0);
        let t = SpinorTuple::new(vec![
            k(0.0, 0.0, 1.0, 0.0),
            k(1.0, 0.0, 0.0, 0.0),
            Spinor::new(z, Complex64::ONE),
            k(1.0, 0.0, 1.0, 0.0),
        ])
        .unwrap();
        let p = plucker(&t).unwrap();
        assert_eq!(p.get(0, 1), Complex64::new(-1.0, 0.0));
        assert_eq!(p.get(0, 2), -z);
        assert_eq!(p.get(0, 3), Complex64::new(-1.0, 0.0));
        assert_eq!(p.get(1, 2), Complex64::ONE);
        assert_eq!(p.get(1, 3), Complex64::ONE);
        assert_eq!(p.get(2, 3), z - Complex64::ONE);
        assert!(p.max_three_term_residual() <= LINEAR_TOL);

        let pair = SpinorTuple::new(vec![k(1.0, 0.0, 0.0, 0.0), k(0.0, 0.0, 1.0, 0.0)]).unwrap();
        assert_eq!(plucker(&pair).unwrap().get(0, 1), Complex64::ONE);

        let rank1 = SpinorTuple::new(vec![
            k(1.0, 0.0, 1.0, 0.0),
            k(2.0, 0.0, 2.0, 0.0),
            k(-3.0, 0.0, -3.0, 0.0),
        ])
        .unwrap();
        assert_eq!(plucker(&rank1), Err(Error::RankDeficient));
    }

    #[test]
    fn gauge_normalize_examples() {
        let d_br = Complex64::new(0.7, -0.4);
        let t = SpinorTuple::new(vec![
            Spinor::new(Complex64::ONE, Complex64::ZERO),
            Spinor::new(Complex64::ZERO, d_br),
            k(0.3, 0.9, -1.1, 0.2),
        ])
        .unwrap();
        let n = gauge_normalize(&t, Field::Complex, IDENTITY_TOL).unwrap();
        assert_eq!(n, t); // already normalised

        // idempotent
        let t2 = SpinorTuple::new(vec![
            k(0.4, -0.2, 0.8, 0.5),
            k(-0.9, 0.3, 0.1, 0.7),
            k(1.2, 0.0, -0.4, -0.6),
        ])
        .unwrap();
        let n1 = gauge_normalize(&t2, Field::Complex, IDENTITY_TOL).unwrap();
        let n2 = gauge_normalize(&n1, Field::Complex, IDENTITY_TOL).unwrap();
        assert_eq!(n1, n2);

        // Pluecker coordinates unchanged
        let p_before = plucker(&t2).unwrap();
        let p_after = plucker(&n1).unwrap();
        for (((_, _), a), ((_, _), b)) in p_before.pairs().zip(p_after.pairs()) {
            assert!((a - b).norm() <= LINEAR_TOL * a.norm().max(1.0));
        }

        let degenerate = SpinorTuple::new(vec![
            k(1.0, 0.0, 0.0, 0.0),
            k(2.0, 0.0, 0.0, 0.0),
            k(0.0, 0.0, 1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(
            gauge_normalize(&degenerate, Field::Complex, IDENTITY_TOL),
            Err(Error::DegeneratePair)
        );
    }

    #[test]
    fn gauge_normalize_real_stays_real() {
        let t = triangle();
        let n = gauge_normalize(&t, Field::Real, IDENTITY_TOL).unwrap();
        assert!(n.is_real(LINEAR_TOL));
        assert!(n.get(0).xi.re > 0.0);
        assert!(is_totally_positive(&n, IDENTITY_TOL));

        let complex_tuple = SpinorTuple::new(vec![
            k(0.0, 1.0, 1.0, 0.0),
            k(1.0, 0.0, 0.0, 0.0),
        ])
        .unwrap();
        assert_eq!(
            gauge_normalize(&complex_tuple, Field::Real, IDENTITY_TOL),
            Err(Error::NotRealTuple)
        );
    }

    #[test]
    fn teichmuller_examples() {
        let t = triangle();
        let p = teichmuller_coordinates(&t, Field::Real, IDENTITY_TOL).unwrap();
        for ((_, _), v) in p.pairs() {
            assert_eq!(v, Complex64::ONE);
        }

        // negated tuple: identical coordinates
        let pn = teichmuller_coordinates(&t.negated(), Field::Real, IDENTITY_TOL).unwrap();
        for (((_, _), a), ((_, _), b)) in p.pairs().zip(pn.pairs()) {
            assert_eq!(a, b);
        }

        let not_tp = SpinorTuple::new(vec![
            k(-1.0, 0.0, 0.0, 0.0),
            k(-1.0, 0.0, 1.0, 0.0),
            k(0.0, 0.0, 1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(
            teichmuller_coordinates(&not_tp, Field::Real, IDENTITY_TOL),
            Err(Error::NotTotallyPositive)
        );

        let with_zero = SpinorTuple::new(vec![
            k(1.0, 0.0, 0.0, 0.0),
            k(2.0, 0.0, 0.0, 0.0),
            k(0.0, 0.0, 1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(
            teichmuller_coordinates(&with_zero, Field::Complex, IDENTITY_TOL),
            Err(Error::ZeroPlucker)
        );
    }

    #[test]
    fn one_sign_flip_breaks_positivity() {
        let t = triangle();
        for i in 0..t.len() {
            let mut ks = t.spinors().to_vec();
            ks[i] = -ks[i];
            let flipped = SpinorTuple::new(ks).unwrap();
            assert!(!is_totally_positive(&flipped, IDENTITY_TOL));
        }
        // but negating everything preserves it, with identical decorations
        assert!(is_totally_positive(&t.negated(), IDENTITY_TOL));
        for (a, b) in t.spinors().iter().zip(t.negated().spinors()) {
            assert_eq!(
                decorated_horosphere_uhs(a).unwrap(),
                decorated_horosphere_uhs(b).unwrap()
            );
        }
    }

    #[test]
    fn planar_real_examples() {
        assert!(is_planar_real(&k(1.0, 0.0, 0.0, 0.0), IDENTITY_TOL).unwrap());
        assert!(!is_planar_real(&k(0.0, 1.0, 0.0, 0.0), IDENTITY_TOL).unwrap());

        let s = k(3.0, 0.0, -2.0, 0.0);
        assert!(is_planar_real(&s, IDENTITY_TOL).unwrap());
        let h = decorated_horosphere_uhs(&s).unwrap();
        assert_eq!(h.centre, BoundaryPointUHS::Finite(Complex64::new(-1.5, 0.0)));
        assert_eq!(h.size, 0.25);
        assert_eq!(h.direction, Complex64::I); // i/4 normalised

        assert_eq!(is_planar_real(&Spinor::zero(), IDENTITY_TOL), Err(Error::ZeroSpinor));
    }
}
