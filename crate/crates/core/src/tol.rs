//! Default numerical tolerances.
//!
//! Every formula in this crate is polynomial of low degree in the inputs, so
//! two tolerance classes suffice: a loose one for identities that accumulate
//! rounding through matrix products, and a tight one for maps that are exactly
//! linear in floating point. Thresholds are relative to the scale of the data.

/// Relative tolerance for algebraic identity checks (equivariance, Lorentz
/// form preservation, Pluecker relations).
pub const IDENTITY_TOL: f64 = 1e-9;

/// Relative tolerance for exactly-linear maps (Hermitian/Minkowski round
/// trips, coordinate formulas).
pub const LINEAR_TOL: f64 = 1e-12;

/// A bracket `{k1, k2}` with `|{k1, k2}| <= DEGENERACY_TOL * |k1| * |k2|`
/// counts as vanishing: the two horospheres share a centre.
pub const DEGENERACY_TOL: f64 = 1e-10;

/// `eta` counts as zero (centre at infinity) when `|eta| <= INFINITY_TOL * |xi|`.
pub const INFINITY_TOL: f64 = 1e-12;

/// Relative residual threshold for the rank analysis in flag comparison,
/// playing the role of a singular-value cutoff `KERNEL_TOL * sigma_max`.
pub const KERNEL_TOL: f64 = 1e-9;
