//! Spinors and decorated horospheres in hyperbolic 3-space.
//!
//! A nonzero pair of complex numbers `(xi, eta)` — a *spinor* — determines a
//! horosphere in hyperbolic 3-space together with a spin decoration, and the
//! antisymmetric bracket `{k1, k2} = xi1 eta2 - eta1 xi2` of two spinors is the
//! complex lambda length `exp(d/2)` between the corresponding spin-decorated
//! horospheres. This crate implements that correspondence end to end:
//!
//! * [`complex_minkowski`] — 2x2 complex matrices, the Hermitian/Minkowski
//!   identification and the `SL(2,C)` action on `R^{1,3}`;
//! * [`spinor_flags`] — spinors, the bracket, the light-cone map `phi1` and
//!   pointed oriented null flags;
//! * [`horospheres`] — horospheres in the hyperboloid and upper half space
//!   models, decorations and line fields;
//! * [`lambda_lengths`] — complex distances, lambda lengths, the Ptolemy
//!   equation and ideal-tetrahedron shape parameters;
//! * [`polygons_grassmannians`] — totally positive tuples, ideal polygons,
//!   Pluecker coordinates and gauge normalisation.
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to share across threads.

pub mod complex_minkowski;
pub mod error;
pub mod horospheres;
pub mod lambda_lengths;
pub mod polygons_grassmannians;
pub mod sampling;
pub mod spinor_flags;
pub mod tol;

pub use complex_minkowski::{
    herm_to_minkowski, lorentz_inner, minkowski_to_herm, sl2c_action_minkowski, so13_matrix,
    CausalClass, ComplexMatrix2, MinkowskiVector,
};
pub use error::{Error, Result};
pub use horospheres::{
    celestial_sphere_point, centre_uhs, decorated_horosphere_uhs, disc_boundary_to_uhs,
    hyperboloid_to_disc, line_field_direction, parabolic_matrix, phi2, BoundaryPointUHS,
    DecoratedHorosphereUHS, HorosphereHyp, TangentFrameHyp,
};
pub use lambda_lengths::{
    complex_distance, geometric_lambda_modulus, lambda_antisymmetry_check, lambda_length,
    ptolemy_residual, shape_parameters, ComplexDistance, ShapeTriple,
};
pub use polygons_grassmannians::{
    cyclic_order_ok, gauge_normalize, is_planar_real, is_totally_positive, plucker,
    teichmuller_coordinates, Field, PluckerVector, SpinorTuple,
};
pub use spinor_flags::{bracket, dphi1, flag_action, flags_equal, make_flag, phi1, zdir, Flag, Spinor};
