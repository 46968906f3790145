//! Exact computations on the mapping class group of a genus-`g` surface with two boundary
//! components: the projective-rational class function `m`, the Meyer signature cocycle
//! under the capping and annulus stabilizations, and Wall's non-additivity correction.
//!
//! All arithmetic is over `Q` with arbitrary-precision integers.
//!
//! ```
//! use mcg_signature::{Catalog, SurfaceModel, Word};
//!
//! let catalog = Catalog::standard(SurfaceModel::calibrated(1));
//! let word: Word = "t_alpha^2*t_alpha_prime*t_beta^-1".parse().unwrap();
//! let m = catalog.evaluate(&word).unwrap().class_function_m().unwrap();
//! assert_eq!(m.to_string(), "[3:1]");
//! ```

pub mod calibration;
pub mod campaign;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod meyer;
pub mod qp1;
pub mod stabilize;
pub mod surface;
pub mod wall;
pub mod word;

pub use calibration::{Calibration, Sign};
pub use error::{Error, Result};
pub use linalg::{Inertia, Mat, Rat, Subspace, Vector};
pub use meyer::{meyer_tau, sign_m_coboundary, tau_report, tilde_tau, MeyerForm, TauReport};
pub use qp1::ProjectiveRational;
pub use stabilize::{annulus, cap, SymplecticMatrix};
pub use surface::{
    class_function_m, surjectivity_witness, Catalog, GeneratorSpec, MappingClassRep, SurfaceModel, TwistGenerator,
};
pub use wall::{pants_branch_sign, pants_triple, sig_diff_annulus, sig_diff_cap, PantsTripleSetup, WallReport, WallTriple};
pub use word::Word;
