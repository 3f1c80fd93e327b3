use thiserror::Error;

/// Errors raised by the library. Variant names double as the stable error
/// names reported by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyBases,
    #[error("sets have unequal cardinality ({0} vs {1})")]
    UnequalCardinality(usize, usize),
    #[error("basis exchange fails for B1 = {b1}, B2 = {b2}, x = {x}")]
    ExchangeViolation { b1: String, b2: String, x: String },
    #[error("ground set has {0} elements; at most 64 are supported")]
    GroundTooLarge(usize),
    #[error("ground labels are not strictly increasing")]
    UnsortedGround,
    #[error("label {0} is not in the ground set")]
    LabelNotInGround(String),
    #[error("subset is not contained in the ground set")]
    SubsetNotInGround,
    #[error("deletion and contraction sets overlap")]
    OverlappingMinorSets,
    #[error("{0} is not a circuit-hyperplane")]
    NotACircuitHyperplane(String),
    #[error("blocks do not form a partition")]
    NotAPartition,
    #[error("inconsistent Grassmann necklace: {0}")]
    InconsistentNecklace(String),
    #[error("permutation does not come from a positroid of rank {0}")]
    NotARealizablePermutationRank(usize),
    #[error("invalid decorated permutation: {0}")]
    InvalidPermutation(String),
    #[error("ground sets overlap")]
    OverlappingGrounds,
    #[error("ground sets must share exactly one element")]
    SharedElementNotUnique,
    #[error("connector {0} is a fixed point; use the deletion branch")]
    FixedConnector(String),
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("ranks differ ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("enumeration budget exceeded: search space 2^{free} exceeds {budget}")]
    BudgetExceeded { free: usize, budget: u64 },
    #[error("2-sum precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("matroid is not 2-connected")]
    NotTwoConnected,
    #[error("rank {0} is invalid for {1} elements")]
    BadRank(usize, usize),
    #[error("rank {0} is too small (need r >= 2)")]
    RankTooSmall(usize),
    #[error("matroid is not a positroid")]
    NotAPositroid,
    #[error("positroid is not ternary")]
    NotTernary,
    #[error("realizability search too large: {0}")]
    OracleScaleExceeded(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// The variant name, used as the machine-facing error identifier.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyBases => "EmptyBases",
            Error::UnequalCardinality(..) => "UnequalCardinality",
            Error::ExchangeViolation { .. } => "ExchangeViolation",
            Error::GroundTooLarge(_) => "GroundTooLarge",
            Error::UnsortedGround => "UnsortedGround",
            Error::LabelNotInGround(_) => "LabelNotInGround",
            Error::SubsetNotInGround => "SubsetNotInGround",
            Error::OverlappingMinorSets => "OverlappingMinorSets",
            Error::NotACircuitHyperplane(_) => "NotACircuitHyperplane",
            Error::NotAPartition => "NotAPartition",
            Error::InconsistentNecklace(_) => "InconsistentNecklace",
            Error::NotARealizablePermutationRank(_) => "NotARealizablePermutationRank",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::OverlappingGrounds => "OverlappingGrounds",
            Error::SharedElementNotUnique => "SharedElementNotUnique",
            Error::FixedConnector(_) => "FixedConnector",
            Error::GroundMismatch => "GroundMismatch",
            Error::RankMismatch(..) => "RankMismatch",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::NotTwoConnected => "NotTwoConnected",
            Error::BadRank(..) => "BadRank",
            Error::RankTooSmall(_) => "RankTooSmall",
            Error::NotAPositroid => "NotAPositroid",
            Error::NotTernary => "NotTernary",
            Error::OracleScaleExceeded(_) => "OracleScaleExceeded",
            Error::Parse { .. } => "Parse",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
