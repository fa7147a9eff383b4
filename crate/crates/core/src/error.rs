use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("point has {got} coordinates but the polynomial has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a constant: {0}")]
    NotConstant(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("hypergeometric series with upper parameters {a}, {b} does not terminate")]
    NonTerminating { a: String, b: String },
    #[error("lower parameter {c} hits a pole inside the summation range")]
    PoleInRange { c: String },
    #[error("unknown matrix family `{0}`")]
    UnknownFamily(String),

    #[error("dimension {0} is odd; Pfaffians need even dimension")]
    OddDimension(usize),
    #[error("dimension {dim} exceeds the naive Pfaffian limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("index {index} is outside 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("index {0} occurs twice")]
    DuplicateIndex(usize),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("entry ({i}, {j}) breaks skew-symmetry")]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("ansatz inapplicable at n = {n}: the cofactor system is singular")]
    SingularCofactorSystem { n: usize },
    #[error("Pfaffian of dimension {dim} vanishes, quotient undefined")]
    ZeroPfaffian { dim: usize },

    #[error("no data at {0}")]
    InsufficientCoverage(String),
    #[error(
        "underdetermined: {equations} usable equations for {unknowns} unknowns (need {needed})"
    )]
    Underdetermined {
        equations: usize,
        unknowns: usize,
        needed: usize,
    },
    #[error("the zero polynomial has every integer as a root")]
    ZeroPolynomial,
    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),
    #[error("bivariate region is unbounded; supply a finite window")]
    UnboundedRegion,
    #[error("operator is malformed: {0}")]
    InvalidOperator(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition with {len} parts does not fit in {n} slots")]
    PartitionTooLong { len: usize, n: usize },
    #[error("the two computations of {0} disagree")]
    Inconsistent(String),
}
