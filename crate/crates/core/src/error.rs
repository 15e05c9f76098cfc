use thiserror::Error;

/// Everything that can go wrong in the exact pipeline.
///
/// Variants split into three families: invalid input (the caller handed
/// us something outside the contract), internal inconsistency (an identity
/// that must hold exactly did not), and non-convergence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("moment sequence too short: need {needed} values, have {have}")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("entry ({row},{col}) is not the conjugate of entry ({col},{row})")]
    NotHermitian { row: usize, col: usize },
    #[error("trace of a Hermitian power has nonzero imaginary part at k = {0}")]
    ComplexTrace(usize),
    #[error("input is not real-rooted: Hankel determinant D_{index} breaks the positivity pattern")]
    NotRealRooted { index: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("Hankel sequence has two consecutive zeros at an interval endpoint")]
    ConsecutiveZeros,
    #[error("leading Hankel determinant D_{0} vanishes")]
    SingularHankel(usize),
    #[error("value is not a root of the minimal polynomial")]
    NotARoot,
    #[error("multiplicity formula produced a non-integer value {0}")]
    NonIntegerMultiplicity(String),
    #[error("product of multiplicity factors does not reproduce the characteristic polynomial")]
    ReconstructionFailure,
    #[error("syzygy violated for multiplicity {q}: det H_{order} = {value}")]
    SyzygyViolation { q: u64, order: usize, value: String },
    #[error("only one distinct eigenvalue; the gap is undefined")]
    SingleEigenvalue,
    #[error("derivative vanished during a Newton step")]
    DerivativeZero,
    #[error("squared-difference resultant has a nonzero odd part")]
    OddPartNonzero,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("rate sandwich violated at step {0}")]
    SandwichViolation(usize),
    #[error("a root lies on the lattice origin")]
    RootOnOriginBoundary,
    #[error("lattice cell occupancy mismatch: expected {expected} occupied cells, found {found}")]
    OccupancyMismatch { expected: usize, found: usize },
    #[error("lattice would need {0} cells, above the configured limit")]
    LatticeTooLarge(String),
    #[error("only one distinct eigenvalue; no lattice is needed")]
    DegenerateGap,
    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
    #[error("iteration did not converge within {0} steps")]
    NotConverged(usize),
}

impl Error {
    /// Whether the error signals a broken exact identity rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonzeroRemainder
                | Error::ComplexTrace(_)
                | Error::SingularHankel(_)
                | Error::NonIntegerMultiplicity(_)
                | Error::ReconstructionFailure
                | Error::SyzygyViolation { .. }
                | Error::DerivativeZero
                | Error::OddPartNonzero
                | Error::SandwichViolation(_)
                | Error::RootOnOriginBoundary
                | Error::OccupancyMismatch { .. }
        )
    }

    /// Short machine-readable name used in JSON error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonzeroRemainder => "NonzeroRemainder",
            Error::NotSquare { .. } => "NotSquare",
            Error::Singular => "Singular",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotMonic => "NotMonic",
            Error::DegreeTooSmall { .. } => "DegreeTooSmall",
            Error::InsufficientMoments { .. } => "InsufficientMoments",
            Error::LengthMismatch(_) => "LengthMismatch",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::ComplexTrace(_) => "ComplexTrace",
            Error::NotRealRooted { .. } => "NotRealRooted",
            Error::InvalidInput(_) => "InvalidInput",
            Error::ConsecutiveZeros => "ConsecutiveZeros",
            Error::SingularHankel(_) => "SingularHankel",
            Error::NotARoot => "NotARoot",
            Error::NonIntegerMultiplicity(_) => "NonIntegerMultiplicity",
            Error::ReconstructionFailure => "ReconstructionFailure",
            Error::SyzygyViolation { .. } => "SyzygyViolation",
            Error::SingleEigenvalue => "SingleEigenvalue",
            Error::DerivativeZero => "DerivativeZero",
            Error::OddPartNonzero => "OddPartNonzero",
            Error::BadParams(_) => "BadParams",
            Error::SandwichViolation(_) => "SandwichViolation",
            Error::RootOnOriginBoundary => "RootOnOriginBoundary",
            Error::OccupancyMismatch { .. } => "OccupancyMismatch",
            Error::LatticeTooLarge(_) => "LatticeTooLarge",
            Error::DegenerateGap => "DegenerateGap",
            Error::Parse { .. } => "ParseError",
            Error::NotConverged(_) => "NotConverged",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
