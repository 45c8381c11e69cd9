pub mod decide;
pub mod error;
pub mod expr;
pub mod ideal;
pub mod local;
pub mod matrix;
pub mod module;
pub mod poly;
mod text;

pub use decide::{
    check_pair, decide_rank3, enumerate_splits, exists_rank_r, Decision, PairCheck, Reason,
    SplitCandidate, SplitEvidence, Verdict,
};
pub use error::{Error, ParseError, Result};
pub use expr::IdealExpr;
pub use ideal::{MonomialIdeal, SimpleFactor};
pub use local::{LocalIdeal, TruncationSpace, DEFAULT_TRUNCATION_CAP};
pub use matrix::PolyMatrix;
pub use module::{
    buchsbaum_rim, build_mr, cofree_colength, member_mr, phi, FreeVector, ModulePresentation,
};
pub use poly::{Coeff, Monomial, Poly};
