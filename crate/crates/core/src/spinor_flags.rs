//! Spinors, the bracket, the light-cone map `phi1` and null flags.
//!
//! A spinor is a pair of complex numbers `k = (xi, eta)`. The map
//! `phi1(k) = k k*` sends nonzero spinors onto the future light cone `L+`,
//! with circle fibres: `phi1(k) = phi1(k')` iff `k' = e^{i theta} k`. To keep
//! the lost phase, `phi1` is upgraded to a map into pointed oriented null
//! flags: the base point `phi1(k)` together with the tangent direction of
//! `phi1` at `k` along `zdir(k) = J conj(k)`. Spinors `k` and `-k` give the
//! same flag, and no other pair does, so flags see spinors exactly two to one.

use num_complex::Complex64;

use crate::complex_minkowski::{
    herm_parts_to_minkowski, lorentz_inner, sl2c_action_minkowski, ComplexMatrix2, MinkowskiVector,
};
use crate::error::{Error, Result};
use crate::tol::KERNEL_TOL;

/// A spinor `(xi, eta)` in `C^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub xi: Complex64,
    pub eta: Complex64,
}

impl Spinor {
    pub const fn new(xi: Complex64, eta: Complex64) -> Self {
        Self { xi, eta }
    }

    /// Builds a spinor from `(re_xi, im_xi, re_eta, im_eta)`.
    pub fn from_parts(re_xi: f64, im_xi: f64, re_eta: f64, im_eta: f64) -> Self {
        Self::new(Complex64::new(re_xi, im_xi), Complex64::new(re_eta, im_eta))
    }

    pub fn zero() -> Self {
        Self::new(Complex64::ZERO, Complex64::ZERO)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.xi.norm_sqr() + self.eta.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_nonzero(&self) -> bool {
        self.norm_sqr() > 0.0
    }

    /// Both components real within `tol`, relative to the spinor scale.
    pub fn is_real(&self, tol: f64) -> bool {
        let scale = self.norm().max(f64::MIN_POSITIVE);
        self.xi.im.abs() <= tol * scale && self.eta.im.abs() <= tol * scale
    }

    pub fn conj(&self) -> Self {
        Self::new(self.xi.conj(), self.eta.conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.xi * s, self.eta * s)
    }
}

impl std::ops::Neg for Spinor {
    type Output = Spinor;

    fn neg(self) -> Spinor {
        Spinor::new(-self.xi, -self.eta)
    }
}

impl std::ops::Add for Spinor {
    type Output = Spinor;

    fn add(self, rhs: Spinor) -> Spinor {
        Spinor::new(self.xi + rhs.xi, self.eta + rhs.eta)
    }
}

impl ComplexMatrix2 {
    /// Matrix-vector action `A k` on a spinor as a column vector.
    pub fn apply(&self, k: &Spinor) -> Spinor {
        Spinor::new(self.a * k.xi + self.b * k.eta, self.c * k.xi + self.d * k.eta)
    }
}

/// The antisymmetric bracket `{k1, k2} = xi1 eta2 - eta1 xi2`, i.e. the
/// determinant of the 2x2 matrix with columns `k1, k2`. Invariant under the
/// simultaneous action of any unimodular matrix.
pub fn bracket(k1: &Spinor, k2: &Spinor) -> Complex64 {
    k1.xi * k2.eta - k1.eta * k2.xi
}

/// Outer product `u v*` as a 2x2 matrix.
fn outer(u: &Spinor, v: &Spinor) -> ComplexMatrix2 {
    ComplexMatrix2::new(
        u.xi * v.xi.conj(),
        u.xi * v.eta.conj(),
        u.eta * v.xi.conj(),
        u.eta * v.eta.conj(),
    )
}

/// The map `phi1(k) = k k*` from spinors onto the closure of the future
/// light cone. With `xi = a+bi`, `eta = c+di` the coordinates are
/// `(a^2+b^2+c^2+d^2, 2(ac+bd), 2(bc-ad), a^2+b^2-c^2-d^2)`.
pub fn phi1(k: &Spinor) -> MinkowskiVector {
    herm_parts_to_minkowski(&outer(k, k))
}

/// The direction field `zdir(k) = J conj(k) = (i conj(eta), -i conj(xi))`,
/// normalised so that `bracket(k, zdir(k)) = -i (|xi|^2 + |eta|^2)`.
pub fn zdir(k: &Spinor) -> Spinor {
    let i = Complex64::I;
    Spinor::new(i * k.eta.conj(), -i * k.xi.conj())
}

/// Tangent map of `phi1` at `k` applied to `nu`, as a Minkowski vector.
///
/// Computed from the Hermitian matrix `(k nu* + nu k*) / 2`; the half keeps
/// the coordinate normalisation in which `dphi1(k, zdir(k))` equals
/// `(0, 2(cd-ab), a^2-b^2+c^2-d^2, 2(ad+bc))`, with `T` exactly zero. It is
/// real-linear in `nu`, and `dphi1(k, k) = phi1(k)`.
pub fn dphi1(k: &Spinor, nu: &Spinor) -> MinkowskiVector {
    let s = outer(k, nu) + outer(nu, k);
    herm_parts_to_minkowski(&s).scale(0.5)
}

/// A pointed oriented null flag, stored as a representative pair: the base
/// point `p` on the future light cone and a direction `v` tangent to the cone
/// at `p`, spanning the flag plane together with `p` and orienting it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flag {
    pub p: MinkowskiVector,
    pub v: MinkowskiVector,
}

impl Flag {
    /// Wraps a representative pair after checking the flag invariants:
    /// `p` future-lightlike, `v` tangent (`<p, v> = 0`) and independent of `p`.
    pub fn new(p: MinkowskiVector, v: MinkowskiVector, tol: f64) -> Result<Self> {
        let flag = Self { p, v };
        if !flag.is_valid(tol) {
            return Err(Error::InvalidFlag);
        }
        Ok(flag)
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        let np = self.p.euclidean_norm();
        let nv = self.v.euclidean_norm();
        if !(self.p.is_future_lightlike(tol) && nv > 0.0) {
            return false;
        }
        if lorentz_inner(&self.p, &self.v).abs() > tol * np * nv {
            return false;
        }
        // linear independence over R: Gram determinant bounded away from zero
        let dot = |u: &MinkowskiVector, w: &MinkowskiVector| {
            u.t * w.t + u.x * w.x + u.y * w.y + u.z * w.z
        };
        let pp = dot(&self.p, &self.p);
        let vv = dot(&self.v, &self.v);
        let pv = dot(&self.p, &self.v);
        pp * vv - pv * pv > tol * tol * pp * vv
    }
}

/// The flag of a nonzero spinor: base `phi1(k)`, direction `dphi1(k, zdir(k))`.
pub fn make_flag(k: &Spinor) -> Result<Flag> {
    if !k.is_nonzero() {
        return Err(Error::ZeroSpinor);
    }
    Ok(Flag {
        p: phi1(k),
        v: dphi1(k, &zdir(k)),
    })
}

/// Whether two representative pairs describe the same flag.
///
/// True iff the base points agree within `tol` (relative to their scale) and
/// there are real `a, b, c` with `a p + b v1 + c v2 = 0` where `b` and `c`
/// have opposite signs. The dependency is detected by a least-squares solve
/// of `a p + b v1 = v2` with relative residual threshold [`KERNEL_TOL`].
pub fn flags_equal(f1: &Flag, f2: &Flag, tol: f64) -> Result<bool> {
    if !f1.is_valid(tol) || !f2.is_valid(tol) {
        return Err(Error::InvalidFlag);
    }
    let scale_p = f1.p.euclidean_norm().max(f2.p.euclidean_norm());
    if (f1.p - f2.p).euclidean_norm() > tol * scale_p {
        return Ok(false);
    }

    // Solve [p v1] (a, b)^T = v2 by normal equations; the 4x2 system has
    // robustly independent columns for a valid flag.
    let p = f1.p;
    let v1 = f1.v;
    let v2 = f2.v;
    let dot = |u: &MinkowskiVector, w: &MinkowskiVector| u.t * w.t + u.x * w.x + u.y * w.y + u.z * w.z;
    let g00 = dot(&p, &p);
    let g01 = dot(&p, &v1);
    let g11 = dot(&v1, &v1);
    let r0 = dot(&p, &v2);
    let r1 = dot(&v1, &v2);
    let det = g00 * g11 - g01 * g01;
    let a = (r0 * g11 - r1 * g01) / det;
    let b = (g00 * r1 - g01 * r0) / det;

    let residual = p.scale(a) + v1.scale(b) - v2;
    let scale = p
        .euclidean_norm()
        .max(v1.euclidean_norm())
        .max(v2.euclidean_norm());
    if residual.euclidean_norm() > KERNEL_TOL * scale {
        return Ok(false);
    }
    // kernel vector (a, b, -1): opposite-sign condition on the v-coefficients
    Ok(b > 0.0)
}

/// Acts on a flag by a unimodular matrix, moving base point and direction.
pub fn flag_action(a: &ComplexMatrix2, f: &Flag, tol: f64) -> Result<Flag> {
    if !a.is_unimodular(tol) {
        return Err(Error::NotUnimodular);
    }
    if !f.is_valid(tol) {
        return Err(Error::InvalidFlag);
    }
    Ok(Flag {
        p: sl2c_action_minkowski(a, &f.p, tol)?,
        v: sl2c_action_minkowski(a, &f.v, tol)?,
    })
}
