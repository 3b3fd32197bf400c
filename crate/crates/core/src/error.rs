//! Error type shared by all modules.

use thiserror::Error;

/// Domain errors raised by geometric and algebraic operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,
    #[error("matrix determinant is not 1 within tolerance")]
    NotUnimodular,
    #[error("spinor is zero")]
    ZeroSpinor,
    #[error("flag invariants violated")]
    InvalidFlag,
    #[error("point is not on the future light cone")]
    NotFutureLightlike,
    #[error("degenerate input")]
    DegenerateInput,
    #[error("vector is not a unit vector within tolerance")]
    NotUnitVector,
    #[error("horospheres share a centre")]
    CommonCentre,
    #[error("ideal tetrahedron is degenerate")]
    DegenerateTetrahedron,
    #[error("duplicate centre")]
    DuplicateCentre,
    #[error("centre is neither real nor infinity")]
    NonRealCentre,
    #[error("more than one centre at infinity")]
    MultipleInfinities,
    #[error("spinor tuple does not have rank 2")]
    RankDeficient,
    #[error("leading spinor pair is degenerate")]
    DegeneratePair,
    #[error("tuple is not totally positive")]
    NotTotallyPositive,
    #[error("a Pluecker coordinate vanishes")]
    ZeroPlucker,
    #[error("tuple contains a non-real spinor")]
    NotRealTuple,
}

pub type Result<T> = std::result::Result<T, Error>;
