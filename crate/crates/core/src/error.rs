use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Variants that describe violated mathematical invariants (`DegenerateKernel`,
/// `SymplecticityViolation`, `GramAsymmetry`, `DecompositionFailure`) indicate either
/// corrupted input or a bug; they are never expected on data produced by the library itself.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("subspace is not contained in the given ambient subspace")]
    NotContained,

    #[error("[0:0] is not a point of the projective line")]
    ZeroProjective,

    #[error("class function m: kernel check failed, (p,q) solution space has dimension {dim}, expected 1")]
    DegenerateKernel { dim: usize },

    #[error("mapping class representations belong to different surface models")]
    ModelMismatch,

    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid generator `{name}`: {reason}")]
    InvalidGenerator { name: String, reason: String },

    #[error("homology action violates {0}")]
    InvariantViolation(&'static str),

    #[error("{context} image is not symplectic")]
    SymplecticityViolation { context: &'static str },

    #[error("Meyer form is not symmetric on V(A,B)")]
    GramAsymmetry,

    #[error("subspace {which} is not Lagrangian")]
    NonLagrangian { which: &'static str },

    #[error("intersection form is not antisymmetric")]
    NotAntisymmetric,

    #[error("Wall decomposition a'+b'+c'=0 has no solution (b' not in C+A)")]
    DecompositionFailure,

    #[error("target {target} is not in the image of m at genus {genus} (genus 0 image is [1:Z])")]
    Unreachable { target: String, genus: usize },

    #[error("no calibration assignment satisfies the cobound identity on the calibration corpus")]
    NoConsistentAssignment,

    #[error("invalid sign {0}, expected 1 or -1")]
    InvalidSign(i64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
