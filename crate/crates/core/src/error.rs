use thiserror::Error;

/// Errors raised by the diffraction and estimation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch {
        left: &'static str,
        right: &'static str,
    },

    #[error(
        "quadrature did not converge after {panels} panels (last increment {last_increment:.3e})"
    )]
    NoConvergence { panels: usize, last_increment: f64 },

    #[error("oracle refused scenario: {0}")]
    OracleRefused(String),

    #[error("no half-maximum crossing inside the grid ({side} side); increase r_max")]
    NoHalfMaxCrossing { side: &'static str },

    #[error("invalid profile for FWHM: {0}")]
    InvalidProfile(String),

    #[error("at grid point {index} (r = {radius:e} m): {source}")]
    AtGridPoint {
        index: usize,
        radius: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("pipeline field `{field}`: {source}")]
    Field {
        field: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for failures of the numerical machinery rather than bad input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::NoConvergence { .. }
            | Error::NoHalfMaxCrossing { .. }
            | Error::InvalidProfile(_)
            | Error::OracleRefused(_) => true,
            Error::AtGridPoint { source, .. } | Error::Field { source, .. } => {
                source.is_numerical()
            }
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite, got {value}"
        )))
    }
}

pub(crate) fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite and positive, got {value}"
        )))
    }
}
