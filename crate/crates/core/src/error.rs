use thiserror::Error;

/// Errors produced by the automata toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid automaton: {0}")]
    Invalid(String),

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(usize),

    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: &'static str, limit: usize },

    #[error("binomial coefficient C({n},{k}) does not fit in a machine word")]
    BinomialOverflow { n: u64, k: u64 },

    #[error("strategy {strategy} does not apply: {reason}")]
    StrategyMismatch {
        strategy: &'static str,
        reason: String,
    },

    #[error("invalid formula: {0}")]
    Formula(String),

    #[error("invalid machine: {0}")]
    Machine(String),

    #[error("head left the tape at step {step}")]
    HeadOutOfBounds { step: usize },

    #[error("simulation exceeded its step budget of {budget}")]
    StepBudget { budget: u128 },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Capacity-style failures as opposed to malformed input.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::Capacity { .. }
                | Error::BinomialOverflow { .. }
                | Error::StepBudget { .. }
                | Error::Overflow(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Exact binomial coefficient, failing instead of wrapping.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::BinomialOverflow { n, k })?
            / u128::from(i + 1);
    }
    if acc > u128::from(u64::MAX) {
        return Err(Error::BinomialOverflow { n, k });
    }
    Ok(acc)
}
