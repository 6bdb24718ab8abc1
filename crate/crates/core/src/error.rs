use alloc::string::String;
use core::fmt;

/// Errors produced by the algorithmic core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A configuration value is outside its allowed range.
    InvalidConfig(String),
    /// Two arrays that must agree in shape do not.
    ShapeMismatch { context: &'static str },
    /// An operation received data of the wrong dimensionality.
    DimsUnsupported { expected: usize, got: usize },
    /// A label value is >= the number of classes.
    LabelOutOfRange { value: usize, num_classes: usize },
    /// Canny thresholds must satisfy 0 <= t_low <= t_high <= 1.
    ThresholdOrder { t_low: f64, t_high: f64 },
    /// Gaussian smoothing sigma must be non-negative.
    NegativeSigma(f64),
    /// The Canny operator only handles 2D inputs.
    CannyRequires2d,
    /// A surface-distance metric is undefined for an empty mask.
    EmptyMask,
    /// An operation needs at least one sample.
    EmptyDataset,
    /// Spatial size is not divisible by the network's total downsampling factor.
    NotDivisible { size: usize, factor: usize },
    /// Target map for the manifold loss contains values other than 0/1.
    NonBinaryTarget { value: usize },
    /// Student and teacher (or checkpoint and network) parameter manifests differ.
    ManifestMismatch { context: &'static str },
    /// A named parameter is missing from a checkpoint.
    MissingParam(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::ShapeMismatch { context } => write!(f, "shape mismatch in {context}"),
            Error::DimsUnsupported { expected, got } => {
                write!(f, "expected {expected}-dimensional input, got {got}")
            }
            Error::LabelOutOfRange { value, num_classes } => {
                write!(f, "label value {value} out of range for {num_classes} classes")
            }
            Error::ThresholdOrder { t_low, t_high } => {
                write!(f, "thresholds must satisfy 0 <= t_low <= t_high <= 1, got ({t_low}, {t_high})")
            }
            Error::NegativeSigma(s) => write!(f, "sigma must be non-negative, got {s}"),
            Error::CannyRequires2d => write!(f, "the canny operator only supports 2D label maps"),
            Error::EmptyMask => write!(f, "surface-distance metric undefined for an empty mask"),
            Error::EmptyDataset => write!(f, "operation requires a non-empty sample set"),
            Error::NotDivisible { size, factor } => {
                write!(f, "spatial size {size} is not divisible by {factor}")
            }
            Error::NonBinaryTarget { value } => {
                write!(f, "manifold target must be binary, found value {value}")
            }
            Error::ManifestMismatch { context } => {
                write!(f, "parameter manifests do not match in {context}")
            }
            Error::MissingParam(name) => write!(f, "missing parameter `{name}`"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
