use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be weakly decreasing (part {index} < part {next})", next = index + 1)]
    NotWeaklyDecreasing { index: usize },
    #[error("partition part {index} is negative")]
    NegativePart { index: usize },
    #[error("dominance compares partitions of equal weight, got {left} and {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("partition of length {length} does not fit in {target} slots")]
    LengthTooSmall { length: usize, target: usize },

    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the requested value of beta")]
    PoleAtValue,

    #[error("a variable context needs at least one variable")]
    EmptyContext,
    #[error("polynomials live in different variable contexts ({left} vs {right} variables)")]
    ContextMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("exact division left a nonzero remainder (internal invariant violated)")]
    NonzeroRemainder,
    #[error("operator requires an ordinary polynomial, got negative exponents")]
    LaurentInput,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("power-sum expansion needs degree {degree} <= number of variables {nvars}")]
    DegreeExceedsVariables { degree: u32, nvars: usize },
    #[error("expansions are in different bases")]
    BasisMismatch,
    #[error("expansions have different degrees ({left} vs {right})")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("circle inner product needs beta specialized to a positive integer")]
    NonIntegerBeta,

    #[error("partition has {length} parts, at most {max} allowed here")]
    TooManyParts { length: usize, max: usize },
    #[error("index set must be nonempty")]
    EmptyIndexSet,
    #[error("index set members must be strictly increasing and below {nvars}")]
    InvalidIndexSet { nvars: usize },
    #[error("operator cardinality {requested} incompatible with index set of size {available}")]
    BadCardinality { requested: usize, available: usize },

    #[error("triangular system has a vanishing diagonal gap")]
    DegenerateDiagonal,
    #[error("non-symmetric route needs pairwise distinct parts after padding")]
    DegenerateLeadingTerm,
    #[error("basis order is not a linear extension of dominance")]
    NotLinearExtension,
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("linear system does not have a unique solution")]
    SingularSystem,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
