use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series must have at least one coefficient")]
    EmptySeries,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("divisor has a zero constant term")]
    ZeroConstantDivisor,
    #[error("inner series must vanish at the origin")]
    NonzeroInnerConstant,
    #[error("series order {order} is below the minimum {min}")]
    OrderTooLow { order: usize, min: usize },
    #[error("power series power needs a unit constant term")]
    UnitConstantRequired,
    #[error("unsupported elementary function `{0}`")]
    UnsupportedKind(String),

    #[error("B1 must be positive (at least {min:e}), got {b1}")]
    NonPositiveB1 { b1: f64, min: f64 },
    #[error("coefficient {name} is not finite")]
    NonFinite { name: &'static str },
    #[error("parameter {name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("janowski needs -1 <= B < A <= 1, got A = {a}, B = {b}")]
    JanowskiOrder { a: f64, b: f64 },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("malformed preset `{0}`: {1}")]
    MalformedPreset(String, String),
    #[error("tau must be nonzero")]
    ZeroTau,
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("Hankel matrix H_{q}({n}) needs {needed} coefficients, got {got}")]
    InsufficientCoefficients {
        q: usize,
        n: usize,
        needed: usize,
        got: usize,
    },
    #[error("coefficient list must start with a1 = 1")]
    NotNormalized,
    #[error("grid dimension {name} = {value} is below the minimum {min}")]
    GridTooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },
}
