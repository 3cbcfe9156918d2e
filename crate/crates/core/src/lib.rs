//! Numerical toolkit for the Arago spot behind an opaque disc and the
//! solar-neutrino estimates built on it.
//!
//! * [`fresnel`]: regularized Fresnel-Kirchhoff amplitude, intensity
//!   profiles, FWHM extraction and the `λ r1 / R` scaling laws.
//! * [`specfun`]: Bessel J0.
//! * [`neutrino`], [`kinematics`]: source model and momentum-kick estimates.
//! * [`pipeline`]: the full chained estimate as one report.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fresnel;
pub mod kinematics;
pub mod neutrino;
pub mod pipeline;
pub mod quadrature;
pub mod quantities;
pub mod specfun;

pub use error::{Error, Result};
pub use quantities::{Constants, Dimension, Profile, Quantity};
