use thiserror::Error;

/// Errors raised by kernel operations.
///
/// Axiom failures are never errors; they are collected in a [`crate::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Tables that do not even type-check as data (wrong sizes, out-of-range ids, missing entries).
    #[error("structural error: {0}")]
    Structure(String),
    /// A name could not be resolved.
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    /// Two cells were combined whose endpoints do not match.
    #[error("not composable: {0}")]
    NotComposable(String),
    /// Domain/codomain mismatch between maps.
    #[error("mismatch: {0}")]
    Mismatch(String),
    /// An enumeration would exceed the caller-supplied budget.
    #[error("budget exceeded while enumerating {what}: predicted {predicted} candidates, budget {budget}")]
    BudgetExceeded {
        what: String,
        predicted: u128,
        budget: u64,
    },
    /// A canonical-only operation received a term mentioning generator 2-cells.
    #[error("term is not canonical (contains generator 2-cell `{0}`); use two_cell_equal")]
    NotCanonical(String),
    /// Two 2-cell terms with different boundaries were compared.
    #[error("terms are not parallel: {0}")]
    NotParallel(String),
    /// Sign data rejected by the cocycle fixture generator.
    #[error("invalid cocycle: {0}")]
    Cocycle(String),
    /// A precondition on strength (e.g. "must be a homomorphism") failed.
    #[error("strength precondition failed: {0}")]
    Strength(String),
    /// The input is outside the class the decision procedure handles.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Term syntax error, with 1-based line and column.
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
