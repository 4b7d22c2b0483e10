use thiserror::Error;

/// Every failure the library can report. Variant names double as the
/// domain error names printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotDecreasing: column {index} ({value}) exceeds the column before it")]
    NotDecreasing { index: usize, value: u32 },

    #[error("ParityViolation: columns {} and {} have odd sum", 2 * .pair, 2 * .pair + 1)]
    ParityViolation { pair: usize },

    #[error("InvalidOrthogonal: row length {row} occurs an odd number of times")]
    InvalidOrthogonal { row: u32 },

    #[error("KindMismatch: expected a {expected} orbit")]
    KindMismatch { expected: &'static str },

    #[error("SizeMismatch: orbit sizes {left} and {right} differ")]
    SizeMismatch { left: u64, right: u64 },

    #[error("NotGeneric: orbit {0} has a non-generic chain")]
    NotGeneric(String),

    #[error("NotSpecialForm: orbit {0} is not special with even or constant odd chains")]
    NotSpecialForm(String),

    #[error("NoEqualPair: middle columns {b1} and {b2} differ")]
    NoEqualPair { b1: u32, b2: u32 },

    #[error("InvalidDegeneration: {0}")]
    InvalidDegeneration(String),

    #[error("NotMember: {member} is not in Norm({origin})")]
    NotMember { origin: String, member: String },

    #[error("LeadingColumnMissing: expected leading column {expected}, found {found}")]
    LeadingColumnMissing { expected: u32, found: u32 },

    #[error("NotDominant: weight {0} is not dominant")]
    NotDominant(String),

    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),

    #[error("RankBudgetExceeded: rank {rank} exceeds budget {budget}")]
    RankBudgetExceeded { rank: usize, budget: usize },

    #[error("NonIntegralResult: alternating sum {sum} is not divisible by {divisor}")]
    NonIntegralResult { sum: i64, divisor: i64 },

    #[error("NegativeMultiplicity: computed multiplicity {0} is negative")]
    NegativeMultiplicity(i64),

    #[error("Unsupported: {0}")]
    Unsupported(String),

    #[error("Overflow: integer overflow in {0}")]
    Overflow(&'static str),

    #[error("Parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The bare variant name, e.g. `"NotGeneric"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotDecreasing { .. } => "NotDecreasing",
            Error::ParityViolation { .. } => "ParityViolation",
            Error::InvalidOrthogonal { .. } => "InvalidOrthogonal",
            Error::KindMismatch { .. } => "KindMismatch",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NotGeneric(_) => "NotGeneric",
            Error::NotSpecialForm(_) => "NotSpecialForm",
            Error::NoEqualPair { .. } => "NoEqualPair",
            Error::InvalidDegeneration(_) => "InvalidDegeneration",
            Error::NotMember { .. } => "NotMember",
            Error::LeadingColumnMissing { .. } => "LeadingColumnMissing",
            Error::NotDominant(_) => "NotDominant",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::RankBudgetExceeded { .. } => "RankBudgetExceeded",
            Error::NonIntegralResult { .. } => "NonIntegralResult",
            Error::NegativeMultiplicity(_) => "NegativeMultiplicity",
            Error::Unsupported(_) => "Unsupported",
            Error::Overflow(_) => "Overflow",
            Error::Parse(_) => "Parse",
        }
    }
}
