use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `Re(x) = ±Im(x)`, so `Re(x²) = 0` and no inverse exists.
    #[error("element {0} is not invertible (Re(x) = ±Im(x))")]
    NotInvertible(String),

    #[error("velocity must be nonzero")]
    ZeroVelocity,

    #[error("speed ratio {0} is not below 1")]
    Superluminal(f64),

    #[error("light speed must be positive")]
    NonPositiveLightSpeed,

    /// Exact mode only: a square root that should be rational is not.
    #[error("square root of {0} is not rational")]
    IrrationalRoot(String),

    #[error("event direction cosines do not match those of the transformation")]
    AlphaMismatch,

    #[error("boosted field tensor lost its antisymmetric E/B layout (deviation {0:e})")]
    SkewStructureBroken(f64),

    #[error("non-finite value while differencing coordinate {var} at {point:?}")]
    NonFinite { var: usize, point: Vec<f64> },

    #[error("point is not on the restricted set: {0}")]
    NotRestricted(String),

    #[error("velocity profile reaches s = {0} >= 1 on the stencil")]
    SuperluminalProfile(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
