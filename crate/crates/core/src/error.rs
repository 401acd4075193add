use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the number of loops must be at least 1")]
    NoLoops,

    #[error("edge index {index} is out of range 1..={loops}")]
    IndexOutOfRange { index: u32, loops: u32 },

    #[error("expected {expected} generator values, got {got}")]
    ValueCount { expected: usize, got: usize },

    #[error("a derivation must vanish on the vertex v")]
    NonzeroVertexValue,

    #[error("the generator values violate {violations} defining relation(s); the extension is not well defined")]
    NotADerivation { violations: usize },

    #[error("rewriting did not terminate within {budget} rule applications")]
    StepBudgetExceeded { budget: usize },

    #[error("rewriting stopped at a word that is not a basis monomial: {word}")]
    StuckWord { word: String },

    #[error("maximum monomial length must be at least 1")]
    EmptySupportBound,
}

pub type Result<T> = std::result::Result<T, Error>;
