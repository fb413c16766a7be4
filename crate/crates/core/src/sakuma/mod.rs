//! The universal 2-generated Frobenius 𝔙(4,3)-axial algebra over Q[λ, μ],
//! the variety of admissible (λ, μ) and the classification of its nine
//! specialisations as the Norton-Sakuma algebras.

pub mod classify;
pub mod formulas;
pub mod points;
pub mod rederive;
pub mod universal;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::exact::ExactError;
use crate::fusion::FusionError;

pub use classify::{
    classify, discrepancy_quotient, three_c_identification, ClassificationReport, Discrepancy, PointReport,
    WORD_BOUND,
};
pub use points::{
    evaluate_matrix, evaluate_point, solve, solve_points, EvalPoint, NamedPoint, SolveReport, NORTON_SAKUMA,
};
pub use rederive::{rederive_products, RederiveEntry, RederiveReport};
pub use universal::{build_universal, derive_a3, RouteCheck, UniversalAlgebra};

#[derive(Debug, Error)]
pub enum SakumaError {
    #[error("product {0} * {1} is needed before it is known")]
    MissingProduct(String, String),
    #[error("derivation routes disagree for {0}")]
    RouteMismatch(String),
    #[error("{0} is not a nonzero constant")]
    NonConstant(String),
    #[error("p1 and p2 vanish identically at {0}")]
    Degenerate(String),
    #[error("the two elimination orders give different point sets")]
    EliminationMismatch,
    #[error("({lambda}, {mu}) is not one of the named points")]
    UnnamedPoint { lambda: String, mu: String },
    #[error("found {0} points, expected 9")]
    PointCount(usize),
    #[error("no point named {0}")]
    UnknownPoint(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}
