//! Complex distances, lambda lengths, the Ptolemy equation and shape
//! parameters.
//!
//! Between two spin-decorated horospheres there is a complex distance
//! `d = rho + i theta`: the signed translation length along the common
//! perpendicular geodesic plus the rotation angle between the decorations,
//! the angle well defined modulo `4 pi` on the spin level. The complex lambda
//! length is `exp(d/2)`, and it equals the bracket of the corresponding
//! spinors. Four spin-decorated horospheres at the ideal vertices of a
//! tetrahedron satisfy the Ptolemy equation
//! `l01 l23 + l03 l12 = l02 l13`, and the tetrahedron's shape parameters are
//! ratios of products of lambda lengths.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::horospheres::{BoundaryPointUHS, DecoratedHorosphereUHS};
use crate::spinor_flags::{bracket, Spinor};
use crate::tol::DEGENERACY_TOL;

/// A complex distance `rho + i theta` with the rotation angle normalised to
/// `[0, 4 pi)`, so that `exp((rho + i theta) / 2)` recovers the lambda length
/// including its sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexDistance {
    pub rho: f64,
    pub theta: f64,
}

impl ComplexDistance {
    /// The lambda length `exp(d/2)` of this distance.
    pub fn lambda(&self) -> Complex64 {
        (Complex64::new(self.rho, self.theta) * 0.5).exp()
    }
}

/// Shape parameters `(z, z', z'')` of an ideal tetrahedron, one per pair of
/// opposite edges, satisfying `z' = 1/(1-z)` and `z'' = (z-1)/z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeTriple {
    pub z: Complex64,
    pub zp: Complex64,
    pub zpp: Complex64,
}

impl ShapeTriple {
    /// Checks the defining relations within `tol`.
    pub fn is_consistent(&self, tol: f64) -> bool {
        let one = Complex64::ONE;
        (self.zp - one / (one - self.z)).norm() <= tol * self.zp.norm().max(1.0)
            && (self.zpp - (self.z - one) / self.z).norm() <= tol * self.zpp.norm().max(1.0)
            && (self.z + one / self.zp - one).norm() <= tol * self.z.norm().max(1.0)
    }
}

fn require_nonzero(ks: &[&Spinor]) -> Result<()> {
    if ks.iter().any(|k| !k.is_nonzero()) {
        return Err(Error::ZeroSpinor);
    }
    Ok(())
}

/// The complex lambda length between the spin-decorated horospheres of two
/// nonzero spinors: the bracket `{k1, k2}`. Zero exactly when the horospheres
/// share a centre.
pub fn lambda_length(k1: &Spinor, k2: &Spinor) -> Result<Complex64> {
    require_nonzero(&[k1, k2])?;
    Ok(bracket(k1, k2))
}

/// The complex distance `rho + i theta` from the horosphere of `k1` to that
/// of `k2`: with `D = {k1, k2}`, `rho = 2 log |D|` and `theta = 2 Arg D`
/// where `Arg` is taken in `[0, 2 pi)`, so `theta` lands in `[0, 4 pi)`.
pub fn complex_distance(k1: &Spinor, k2: &Spinor) -> Result<ComplexDistance> {
    let d = lambda_length(k1, k2)?;
    if d.norm() <= DEGENERACY_TOL * k1.norm() * k2.norm() {
        return Err(Error::CommonCentre);
    }
    let mut arg = d.arg();
    if arg < 0.0 {
        arg += 2.0 * std::f64::consts::PI;
    }
    Ok(ComplexDistance {
        rho: 2.0 * d.norm().ln(),
        theta: 2.0 * arg,
    })
}

/// Modulus of the lambda length computed purely from upper-half-space data,
/// without the bracket: `exp(rho/2)` where `rho` is the signed hyperbolic
/// distance between the horospheres along their common perpendicular.
///
/// For finite centres `z1, z2` with diameters `d1, d2` the closed form is
/// `|z1 - z2| / sqrt(d1 d2)`; with one centre at infinity at height `h` and
/// the other of diameter `d` it is `sqrt(h / d)`. Negative `rho` (overlapping
/// horoballs) is covered by the same expressions.
pub fn geometric_lambda_modulus(
    h1: &DecoratedHorosphereUHS,
    h2: &DecoratedHorosphereUHS,
) -> Result<f64> {
    match (h1.centre, h2.centre) {
        (BoundaryPointUHS::Infinity, BoundaryPointUHS::Infinity) => Err(Error::CommonCentre),
        (BoundaryPointUHS::Infinity, BoundaryPointUHS::Finite(_)) => {
            Ok((h1.size / h2.size).sqrt())
        }
        (BoundaryPointUHS::Finite(_), BoundaryPointUHS::Infinity) => {
            Ok((h2.size / h1.size).sqrt())
        }
        (BoundaryPointUHS::Finite(z1), BoundaryPointUHS::Finite(z2)) => {
            let gap = (z1 - z2).norm();
            if gap == 0.0 {
                return Err(Error::CommonCentre);
            }
            Ok(gap / (h1.size * h2.size).sqrt())
        }
    }
}

/// The Ptolemy residual `l01 l23 + l03 l12 - l02 l13` of four spin-decorated
/// horospheres; vanishes identically (it is a Pluecker relation).
pub fn ptolemy_residual(k0: &Spinor, k1: &Spinor, k2: &Spinor, k3: &Spinor) -> Result<Complex64> {
    require_nonzero(&[k0, k1, k2, k3])?;
    let l01 = bracket(k0, k1);
    let l23 = bracket(k2, k3);
    let l03 = bracket(k0, k3);
    let l12 = bracket(k1, k2);
    let l02 = bracket(k0, k2);
    let l13 = bracket(k1, k3);
    Ok(l01 * l23 + l03 * l12 - l02 * l13)
}

/// Shape parameters of the ideal tetrahedron spanned by four spinors:
///
/// ```text
/// z   =  l02 l13 / (l03 l12)      (edges 01 and 23)
/// z'  = -l03 l12 / (l01 l23)      (edges 02 and 13)
/// z'' =  l01 l23 / (l02 l13)      (edges 03 and 12)
/// ```
///
/// Requires all six pairwise brackets nonzero; invariant under rescaling any
/// single spinor.
pub fn shape_parameters(k0: &Spinor, k1: &Spinor, k2: &Spinor, k3: &Spinor) -> Result<ShapeTriple> {
    require_nonzero(&[k0, k1, k2, k3])?;
    let ks = [k0, k1, k2, k3];
    for i in 0..4 {
        for j in (i + 1)..4 {
            let b = bracket(ks[i], ks[j]);
            if b.norm() <= DEGENERACY_TOL * ks[i].norm() * ks[j].norm() {
                return Err(Error::DegenerateTetrahedron);
            }
        }
    }
    let l01 = bracket(k0, k1);
    let l23 = bracket(k2, k3);
    let l03 = bracket(k0, k3);
    let l12 = bracket(k1, k2);
    let l02 = bracket(k0, k2);
    let l13 = bracket(k1, k3);
    Ok(ShapeTriple {
        z: l02 * l13 / (l03 * l12),
        zp: -(l03 * l12) / (l01 * l23),
        zpp: l01 * l23 / (l02 * l13),
    })
}

/// Antisymmetry check `|{k1, k2} + {k2, k1}| <= tol`; holds identically.
pub fn lambda_antisymmetry_check(k1: &Spinor, k2: &Spinor, tol: f64) -> bool {
    (bracket(k1, k2) + bracket(k2, k1)).norm() <= tol
}
