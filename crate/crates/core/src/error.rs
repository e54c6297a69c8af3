use thiserror::Error;

use crate::patterns::PatternId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("negative value at byte {position}")]
    NegativeValue { position: usize },
    #[error("zero exponent at byte {position}")]
    ZeroExponent { position: usize },

    #[error("sequence has no positive term")]
    NoPositiveTerm,
    #[error("lay-off index {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("cannot lay off d_{k} = 0")]
    ZeroTerm { k: usize },
    #[error("laying off d_{k} = {value} needs {value} other terms but only {available} exist")]
    LayOffTooLarge { k: usize, value: u32, available: usize },
    #[error("laying off d_{k} drives a term below zero")]
    NegativeResidual { k: usize },

    #[error("sequence {0} is not graphic")]
    NotGraphic(String),
    #[error("sequence {0} contains zero terms; only positive sequences are accepted here")]
    ZeroTerms(String),
    #[error("sequence has {n} terms, at least {min} required")]
    TooShort { n: usize, min: usize },
    #[error("sequence has {n} terms, at most {max} supported")]
    TooLong { n: usize, max: usize },
    #[error("vertex counts differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("pattern {0} has no closed-form characterization")]
    NoCharacterization(PatternId),
    #[error("pattern {0} has no threshold formula")]
    NoFormula(PatternId),
    #[error("n = {n} outside supported range {lo}..={hi}")]
    RangeOutOfBounds { n: usize, lo: usize, hi: usize },
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
