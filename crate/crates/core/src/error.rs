use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("enumeration budget exceeded: need {needed} elements, budget {budget}")]
    EnumBudget { needed: u128, budget: u128 },
    #[error("table budget exceeded: {0}")]
    TableBudget(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Budget errors get a distinct process exit code in the CLI.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::EnumBudget { .. } | Error::TableBudget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
