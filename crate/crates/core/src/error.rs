use thiserror::Error;

/// Errors raised across the pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),
    #[error("generator index out of range in `{0}` (need 1 <= i < j <= 3)")]
    IndexOutOfRange(String),
    #[error("zero exponent in `{0}`")]
    ZeroExponent(String),
    #[error("x12 has no conjugation image inside the free factor")]
    NotFreeGenerator,
    #[error("truncation degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("exponent must be nonzero")]
    ZeroPower,
    #[error("word length {len} exceeds the subword cap {cap}")]
    SubwordCap { len: usize, cap: usize },
    #[error("word of degree {0} does not fit the packed representation")]
    WordTooLong(usize),
    #[error("inexact division by t^2")]
    InexactDivision,
    #[error("partition transform needs an unprimed code")]
    PrimedCode,
    #[error("fraction {0} describes a link, not a knot")]
    NotAKnot(String),
    #[error("Alexander polynomial is not symmetric")]
    NotSymmetric,
    #[error("Alexander polynomial has no Conway form")]
    NoConwayForm,
    #[error("composition {0} is not admissible (first entry must be >= 2)")]
    Inadmissible(String),
    #[error("requested precision {0:e} is out of reach")]
    Precision(f64),
    #[error("degree {0} exceeds the associator cap {1}")]
    DegreeCap(usize, usize),
    #[error("imaginary residue {residue:e} in T^{power} coefficient")]
    ImaginaryResidue { power: usize, residue: f64 },
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
