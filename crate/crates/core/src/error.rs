use alloc::string::String;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("singular matrix")]
    Singular,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("degenerate cell")]
    DegenerateCell,
    #[error("input not lexicographic: {0}")]
    NotLexicographic(&'static str),
    #[error("join recovery failed: {0}")]
    JoinRecoveryFailed(&'static str),
    #[error("lattice breach")]
    LatticeBreach,
    #[error("germ breach: {0}")]
    GermBreach(&'static str),
    #[error("non-termination suspected")]
    NonTermination,
    #[error("word is not minimal")]
    NotMinimal,
    #[error("not a single relation move: {0}")]
    NotAMove(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inapplicable move: {0}")]
    InapplicableMove(String),
    #[error("products differ")]
    ProductsDiffer,
    #[error("depth exceeded")]
    DepthExceeded,
    #[error("invalid permutation")]
    InvalidPermutation,
}

pub type Result<T> = core::result::Result<T, Error>;
