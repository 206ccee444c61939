use std::fmt;

/// Errors raised across the library and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero or by a multi-term radical is not supported")]
    UnsupportedDivision,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a sphere map: {0}")]
    NotASphereMap(String),

    #[error("radii squared sum to {0}, expected 1")]
    RadiiDoNotSumToOne(String),

    #[error("operation requires a {expected} map, got a {got} map")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },

    #[error("the factor maps are not harmonic forms")]
    FactorsNotHarmonic,

    #[error("the map is not a harmonic form")]
    NotHarmonicForm,

    #[error("the zero map has no minimal representative")]
    ZeroMap,

    #[error("not a form: {0}")]
    NotAForm(String),

    #[error("radius squared {0} has no square root in the radical ring, or is outside (0, 1)")]
    RadiusNotRepresentable(String),

    #[error("unknown gallery name `{0}`")]
    UnknownName(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("wrong dimensions: {0}")]
    WrongDimensions(String),

    #[error("symbolic routes disagree: {0}")]
    RouteDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing")?,
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        match &self.found {
            Some(tok) => write!(f, ", found `{tok}`"),
            None => write!(f, ", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}
