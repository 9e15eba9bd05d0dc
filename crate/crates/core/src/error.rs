use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u64),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("ring mismatch: {0}")]
    OwnerMismatch(String),
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("element does not lie in the ring: {0}")]
    StrideViolation(String),
    #[error("radius has finite order modulo the value group of the base field")]
    FiniteOrderRadius,
    #[error("skew polynomial is not separable (zero constant coefficient)")]
    NotSeparable,
    #[error("linear coefficient a0 of the p-polynomial is zero")]
    ZeroLinearCoefficient,
    #[error("radius s does not lie in rho(l^x)*r")]
    RadiusNotInOrbit,
    #[error("no {order}-th root of {element} in the splitting field")]
    RootUnavailable { element: String, order: u64 },
    #[error("higher derivation is trivial on every probe")]
    TrivialOnProbes,
    #[error("condition (heartsuit) fails: {0}")]
    HeartFails(String),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("criterion only applies to forms with n = 1 and s = r")]
    WrongFamily,
    #[error("group action does not have the declared order {0}")]
    ActionOrderMismatch(u64),
    #[error("cocycles belong to different setups")]
    SetupMismatch,
    #[error("cocycle is not of scalar radius type")]
    NotScalarCocycle,
    #[error("invalid tame setup: {0}")]
    InvalidSetup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors caused by malformed textual input rather than by the mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
