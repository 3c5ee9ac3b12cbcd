use thiserror::Error;

use crate::tuple::{FiveTuple, ReductionStep};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid resolution: {0}")]
    InvalidResolution(String),

    #[error("not a diameter-one table: {0}")]
    NotDiameterOne(String),

    #[error("the table is ACM; an explicit c is required")]
    AcmNeedsC,

    #[error("{step} does not apply to {tuple}: entry {entry} would become negative")]
    ReductionBlocked {
        step: ReductionStep,
        tuple: FiveTuple,
        entry: &'static str,
    },

    #[error("Q{degree} does not apply: {}", if *.koszul_block {
        "beta2 in this degree is exhausted by the Koszul block"
    } else {
        "no common summand of beta1 and beta2 in this degree"
    })]
    GhostBlocked { degree: i64, koszul_block: bool },

    #[error("(p1, p2) = ({p1}, {p2}) does not apply: {reason}")]
    PqBlocked { p1: u64, p2: u64, reason: String },

    #[error("no such complete intersection: {0}")]
    NoSuchCi(String),

    #[error("inconsistent linkage numerics: {0}")]
    Inconsistent(String),

    #[error("{0} is not a minimal 5-tuple")]
    NotMinimal(FiveTuple),

    #[error("specialization lattice exceeds the budget of {0} nodes")]
    BudgetExceeded(usize),

    #[error("arithmetic overflow")]
    Overflow,
}
