use thiserror::Error;

use crate::elsv::HodgeMonomial;
use crate::linalg::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("expected a transposition on {degree} points, got {perm}")]
    NotATransposition { perm: String, degree: usize },

    #[error("genus must be nonnegative, got {0}")]
    NegativeGenus(i64),

    #[error("no simple branch points possible: r = {r} for genus {genus} and profile {partition}")]
    NoSimpleBranchPoints { genus: i64, partition: String, r: i64 },

    #[error(
        "enumeration budget exceeded: {candidates} candidate tuples > budget {budget}; \
         use the class-algebra engine instead"
    )]
    BudgetExceeded { candidates: String, budget: u128 },

    #[error("(g, m) = ({genus}, {marks}) is outside Theorem 1.1 hypothesis: need 2g - 2 + m > 0")]
    UnstableRange { genus: u32, marks: usize },

    #[error("no closed form implemented for {0} parts")]
    NoClosedForm(usize),

    #[error("invalid Hodge monomial: {0}")]
    InvalidMonomial(String),

    #[error("Hodge integral table for (g, m) = ({genus}, {marks}) is missing {} monomial(s): {}",
        missing.len(),
        missing.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; "))]
    IncompleteTable { genus: u32, marks: usize, missing: Vec<HodgeMonomial> },

    #[error("table parse error on line {line}: {message}")]
    TableParse { line: usize, message: String },

    #[error("evaluation point {0:?} does not have the plan's number of marked points")]
    BadEvaluationPoint(Vec<usize>),

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("division by zero")]
    DivisionByZero,
}
