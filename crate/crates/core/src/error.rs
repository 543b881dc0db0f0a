use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {p} exceeds the supported bound {max}")]
    ModulusTooLarge { p: u64, max: u64 },
    #[error("modulus {p} does not fit in the residue type")]
    ModulusOverflow { p: u64 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} at byte {pos} is out of range for arity {arity}")]
    VariableOutOfRange {
        index: u64,
        arity: usize,
        pos: usize,
    },
    #[error("grid set for variable {0} is empty")]
    EmptyGridSet(usize),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration of {needed} points exceeds the budget of {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error(
        "the zero polynomial (or a polynomial inducing the zero function) is not allowed here"
    )]
    ZeroPolynomial,
    #[error("the given point is not a common root of the system")]
    NotARoot,
}
