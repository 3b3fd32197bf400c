//! Horospheres in the hyperboloid and upper half space models.
//!
//! A point `p` on the future light cone determines the horosphere
//! `{ x : <x, x> = 1, T > 0, <x, p> = 1 }` in the hyperboloid model; the map
//! `p -> horosphere` is a bijection, so horospheres are stored by their
//! defining light-cone point. In the upper half space model the horosphere of
//! a spinor `(xi, eta)` is centred at `xi/eta`: a Euclidean sphere of diameter
//! `|eta|^{-2}` tangent to `C` when `eta != 0`, or the horizontal plane at
//! height `|xi|^2` when `eta = 0`. Its decoration is the parallel oriented
//! line field specified (at the north pole, for spheres) by `i/eta^2`
//! respectively `i xi^2`.

use num_complex::Complex64;

use crate::complex_minkowski::{lorentz_inner, sl2c_action_minkowski, ComplexMatrix2, MinkowskiVector};
use crate::error::{Error, Result};
use crate::spinor_flags::Spinor;
use crate::tol::{IDENTITY_TOL, INFINITY_TOL};

/// A horosphere in the hyperboloid model, stored by its defining point on
/// the future light cone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorosphereHyp {
    p: MinkowskiVector,
}

impl HorosphereHyp {
    pub fn defining_point(&self) -> MinkowskiVector {
        self.p
    }

    /// Membership test: `x` lies on the horosphere iff it lies on the
    /// hyperboloid and on the plane `<x, p> = 1`.
    pub fn contains(&self, x: &MinkowskiVector, tol: f64) -> bool {
        (lorentz_inner(x, x) - 1.0).abs() <= tol
            && x.t > 0.0
            && (lorentz_inner(x, &self.p) - 1.0).abs() <= tol
    }
}

/// Sends `p` on the future light cone to the horosphere `<x, p> = 1`.
pub fn phi2(p: &MinkowskiVector, tol: f64) -> Result<HorosphereHyp> {
    if !p.is_future_lightlike(tol) {
        return Err(Error::NotFutureLightlike);
    }
    Ok(HorosphereHyp { p: *p })
}

/// A point of the sphere at infinity in the upper half space model,
/// `C` together with infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPointUHS {
    Finite(Complex64),
    Infinity,
}

impl BoundaryPointUHS {
    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPointUHS::Infinity)
    }
}

/// Centre of the horosphere of `k` on the boundary: `xi/eta`, or infinity
/// when `eta` vanishes relative to `xi`.
pub fn centre_uhs(k: &Spinor) -> Result<BoundaryPointUHS> {
    if !k.is_nonzero() {
        return Err(Error::ZeroSpinor);
    }
    if k.eta.norm() <= INFINITY_TOL * k.xi.norm() {
        Ok(BoundaryPointUHS::Infinity)
    } else {
        Ok(BoundaryPointUHS::Finite(k.xi / k.eta))
    }
}

/// The isometry from the hyperboloid model to the disc model,
/// `(T, X, Y, Z) -> (X, Y, Z) / (1 + T)`.
pub fn hyperboloid_to_disc(x: &MinkowskiVector) -> Result<[f64; 3]> {
    if x.t <= -1.0 {
        return Err(Error::DegenerateInput);
    }
    let s = 1.0 / (1.0 + x.t);
    Ok([x.x * s, x.y * s, x.z * s])
}

/// Spatial part of the `T = 1` representative of a future light-cone ray:
/// the point of the celestial sphere, which is also the boundary point of the
/// disc model on that ray.
pub fn celestial_sphere_point(x: &MinkowskiVector) -> Result<[f64; 3]> {
    if !x.is_future_lightlike(IDENTITY_TOL) {
        return Err(Error::NotFutureLightlike);
    }
    Ok([x.x / x.t, x.y / x.t, x.z / x.t])
}

/// The boundary isometry from the disc model to the upper half space model,
/// `(x, y, z) -> (x + iy) / (1 - z)`, sending the north pole to infinity.
pub fn disc_boundary_to_uhs(v: [f64; 3], tol: f64) -> Result<BoundaryPointUHS> {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if (norm - 1.0).abs() > tol {
        return Err(Error::NotUnitVector);
    }
    if (1.0 - v[2]).abs() <= tol {
        Ok(BoundaryPointUHS::Infinity)
    } else {
        Ok(BoundaryPointUHS::Finite(
            Complex64::new(v[0], v[1]) / (1.0 - v[2]),
        ))
    }
}

/// A decorated horosphere in the upper half space model: centre, Euclidean
/// size (diameter for spheres, height for planes) and the unit complex number
/// specifying the decoration direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoratedHorosphereUHS {
    pub centre: BoundaryPointUHS,
    pub size: f64,
    pub direction: Complex64,
}

impl DecoratedHorosphereUHS {
    /// Normalises the direction to unit modulus; directions are defined up
    /// to positive real multiples.
    pub fn new(centre: BoundaryPointUHS, size: f64, direction: Complex64) -> Result<Self> {
        if !size.is_finite() || size <= 0.0 || direction.norm_sqr() == 0.0 {
            return Err(Error::DegenerateInput);
        }
        Ok(Self {
            centre,
            size,
            direction: direction / direction.norm(),
        })
    }
}

/// The decorated horosphere of a nonzero spinor in the upper half space:
/// `(xi/eta, diameter |eta|^{-2}, direction i/eta^2)` for `eta != 0`, and
/// `(infinity, height |xi|^2, direction i xi^2)` otherwise.
pub fn decorated_horosphere_uhs(k: &Spinor) -> Result<DecoratedHorosphereUHS> {
    let centre = centre_uhs(k)?;
    let i = Complex64::I;
    match centre {
        BoundaryPointUHS::Infinity => {
            DecoratedHorosphereUHS::new(centre, k.xi.norm_sqr(), i * k.xi * k.xi)
        }
        BoundaryPointUHS::Finite(_) => DecoratedHorosphereUHS::new(
            centre,
            1.0 / k.eta.norm_sqr(),
            i / (k.eta * k.eta),
        ),
    }
}

/// A tangent direction of hyperbolic space: a base point on the hyperboloid
/// and a Lorentz-orthogonal (spacelike) vector there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentFrameHyp {
    pub base: MinkowskiVector,
    pub vector: MinkowskiVector,
}

/// The parabolic matrix `[1, c; 0, 1]`; fixes `(1, 0)` and acts simply
/// transitively on the horosphere of `p0` as translation by `c`.
pub fn parabolic_matrix(c: Complex64) -> ComplexMatrix2 {
    ComplexMatrix2::new(Complex64::ONE, c, Complex64::ZERO, Complex64::ONE)
}

/// Builds the determinant-one matrix sending `(1, 0)` to `k`, composed from
/// the elementary factorisations through `(1, 0)` and `(0, 1)`.
fn normalizing_matrix(k: &Spinor) -> ComplexMatrix2 {
    if k.eta.norm() <= INFINITY_TOL * k.xi.norm() {
        // (xi, 0) = [xi, 0; 0, 1/xi] . (1, 0)
        ComplexMatrix2::new(k.xi, Complex64::ZERO, Complex64::ZERO, Complex64::ONE / k.xi)
    } else {
        // (xi, eta) = [1/eta, xi; 0, eta] . (0, 1) and (0, 1) = [0, -1; 1, 0] . (1, 0)
        ComplexMatrix2::new(k.xi, -Complex64::ONE / k.eta, k.eta, Complex64::ZERO)
    }
}

/// The oriented line field of the decorated horosphere of `k`, at the point
/// parametrised by `c` through the normalised parabolic orbit.
///
/// For `k = (1, 0)` the base point is `q_c = (1 + |c|^2/2, Re c, Im c, |c|^2/2)`
/// and the direction is `(Im c) p0 + dY`; for general `k` both are transported
/// by the matrix of [`normalizing_matrix`].
pub fn line_field_direction(k: &Spinor, c: Complex64) -> Result<TangentFrameHyp> {
    if !k.is_nonzero() {
        return Err(Error::ZeroSpinor);
    }
    let half = 0.5 * c.norm_sqr();
    let base = MinkowskiVector::new(1.0 + half, c.re, c.im, half);
    let vector = MinkowskiVector::new(c.im, 0.0, 1.0, c.im);
    let a = normalizing_matrix(k);
    Ok(TangentFrameHyp {
        base: sl2c_action_minkowski(&a, &base, IDENTITY_TOL)?,
        vector: sl2c_action_minkowski(&a, &vector, IDENTITY_TOL)?,
    })
}
