use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("algebra mismatch: operands live over different algebras")]
    AlgebraMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("structure constants are not associative: (b{0} b{1}) b{2} != b{0} (b{1} b{2})")]
    NonAssociative(usize, usize, usize),
    #[error("the given unit is not a two-sided identity")]
    NotUnit,
    #[error("radical via the trace form needs characteristic 0 or p > dim; got p = {p}, dim = {dim}")]
    UnsupportedCharacteristic { p: u64, dim: usize },
    #[error("splitting failure: {0}")]
    SplittingFailure(String),
    #[error("size guard exceeded: {what} (limit {limit}, set REPDIM_BUDGET to override)")]
    SizeGuard { what: String, limit: usize },
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group order {order} is not invertible in characteristic {p}")]
    GroupOrderNotInvertible { order: u64, p: u64 },
    #[error("{0} is not an l-core")]
    NotACore(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with [`Error::SizeGuard`] when `value > limit`. The environment
/// variable `REPDIM_BUDGET` scales every limit by an integer factor.
pub fn guard(what: impl Into<String>, value: usize, limit: usize) -> Result<()> {
    let factor = std::env::var("REPDIM_BUDGET").ok().and_then(|s| s.trim().parse::<usize>().ok()).unwrap_or(1).max(1);
    let limit = limit.saturating_mul(factor);
    if value > limit {
        return Err(Error::SizeGuard { what: what.into(), limit });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_rejects_values_above_the_limit() {
        assert!(guard("x", 3, 3).is_ok());
        let e = guard("x", 4, 3).unwrap_err();
        assert!(matches!(e, Error::SizeGuard { limit: 3, .. }) || std::env::var("REPDIM_BUDGET").is_ok());
    }
}
