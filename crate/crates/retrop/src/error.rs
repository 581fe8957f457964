use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ZeroValuation,
    #[error("tropicalization of the zero polynomial undefined")]
    ZeroPolynomial,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a univariate polynomial")]
    NotUnivariate,
    #[error("single monomial has no roots")]
    SingleMonomial,
    #[error("{0} is not a breakpoint of the unsigned tropicalization")]
    NotBreakpoint(String),
    #[error("not positive on the closed positive axis")]
    NotPositiveOnAxis,
    #[error("bounded search failed: no valid exponent up to {0}")]
    NmaxExceeded(u32),
    #[error("point is not on the hypersurface")]
    NotOnHypersurface,
    #[error("residue polynomial has a root of the certified sign")]
    ResidueRootObstruction,
    #[error("point not excludable: no sign-differing coordinate for a matching-modulus point")]
    PointNotExcludable,
    #[error("input rows are dependent: {0}")]
    DependentRows(String),
    #[error("degenerate support: does not affinely span a positive dimension")]
    DegenerateSupport,
    #[error("support does not affinely span the ambient space")]
    NonSpanningSupport,
    #[error("operation requires a bivariate polynomial")]
    NotBivariate,
    #[error("Euler derivative is zero: the functional vanishes on the whole support")]
    DerivativeZero,
    #[error("cannot evaluate negative exponent at a non-monomial coordinate")]
    NegativeExponentEval,
    #[error("cannot solve the system in finite Puiseux series")]
    CannotSampleExactly,
    #[error("sampling retries exhausted")]
    RetriesExhausted,
    #[error("invalid point set: {0}")]
    InvalidPointSet(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<V> = std::result::Result<V, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
