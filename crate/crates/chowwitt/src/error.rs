use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CwError {
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("degree {requested} exceeds the bound {bound}")]
    DegreeBoundExceeded { requested: u32, bound: u32 },
    #[error("bidegree of degree {degree} lies outside the validity margin {margin} of the approximation")]
    BeyondValidity { degree: u32, margin: u32 },
    #[error("invalid correspondence: {0}")]
    InvalidCorrespondence(String),
    #[error("cannot certify injectivity of the comparison map in degree {degree}")]
    InjectivityUnknown { degree: u32 },
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("no stored presentation for {0}")]
    UnknownCase(String),
    #[error("twist mismatch: {0}")]
    TwistMismatch(String),
    #[error("class has no monomial representative: {0}")]
    NoRepresentative(String),
    #[error("unexpected nonzero localization tail: {0}")]
    TailUnknown(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("too many factors: {0}")]
    Arity(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("malformed presentation: {0}")]
    Format(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type CwResult<T> = Result<T, CwError>;
