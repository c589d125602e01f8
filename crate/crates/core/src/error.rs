use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation needs a field; integer matrices go through smith_normal_form")]
    RingIsInt,

    #[error("wrong ring: {0}")]
    WrongRing(String),

    #[error("circuit axioms fail: elimination of {elem} from circuits {c1:?} and {c2:?} contains no circuit")]
    CircuitAxiom { c1: Vec<usize>, c2: Vec<usize>, elem: usize },

    #[error("input is not a simple matroid: {0}")]
    NotSimple(String),

    #[error("lines {0:?} and {1:?} share more than one point")]
    LinesOverlap(Vec<usize>, Vec<usize>),

    #[error("{0} is not a flat")]
    NotAFlat(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("series has non-integral exponent at degree {0}")]
    NonIntegralExponent(usize),

    #[error("series must have constant term 1")]
    BadConstantTerm,

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("not a Latin square: {0}")]
    NotLatin(String),

    #[error("not a net: {0}")]
    NotANet(String),

    #[error("multinet condition ({condition}) violated: {witness}")]
    MultinetViolation { condition: u8, witness: String },

    #[error("matroid is not supersolvable; the LCS formula is unproven there")]
    NotSupersolvable,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
