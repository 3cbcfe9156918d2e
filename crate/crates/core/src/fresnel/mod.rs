//! Scalar diffraction behind an opaque disc.
//!
//! The amplitude on a screen at distance `r1` behind a disc of radius `R`
//! is evaluated from the planar, linearized Fresnel-Kirchhoff integral
//!
//! ```text
//! U(r) ∝ ∫_{R²}^∞ dx exp(iπx/(λ r1)) exp(-ηx) J0(2π r √x / (λ r1))
//! ```
//!
//! where `x = ρ²` and `η` (1/m²) regularizes the semi-infinite oscillatory
//! tail. Everything reported is relative to the unobstructed field at the
//! axis (same `η`, no disc), so the source distance and the global phase
//! drop out.

mod amplitude;
mod oracle;
mod profile;

use std::f64::consts::PI;

use crate::error::{ensure_finite, ensure_positive, Error, Result};

pub use amplitude::{amplitude, Amplitude, AmplitudeSolver};
pub use oracle::{oracle_amplitude, OracleGrid};
pub use profile::{fwhm, intensity_profile, IntensityProfile, Normalization};

/// Geometry and wave parameters of one diffraction problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffractionScenario {
    /// Wavelength λ, m.
    pub wavelength: f64,
    /// Source to disc distance r0, m. Cancels out of relative intensities.
    pub source_distance: f64,
    /// Disc to screen distance r1, m.
    pub screen_distance: f64,
    /// Disc radius R, m.
    pub disc_radius: f64,
    /// Convergence factor η, 1/m².
    pub eta: f64,
}

impl DiffractionScenario {
    pub fn new(
        wavelength: f64,
        source_distance: f64,
        screen_distance: f64,
        disc_radius: f64,
        eta: f64,
    ) -> Result<Self> {
        let scn = DiffractionScenario {
            wavelength,
            source_distance,
            screen_distance,
            disc_radius,
            eta,
        };
        scn.validate()?;
        Ok(scn)
    }

    /// The parameter set behind the published intensity figure:
    /// η = 0.002 1/m², λ = 1 pm, r1 = 400 000 km, R = 4 cm.
    pub fn reference() -> Self {
        DiffractionScenario {
            wavelength: 1e-12,
            source_distance: 1.496e11,
            screen_distance: 4e8,
            disc_radius: 0.04,
            eta: 0.002,
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("wavelength", self.wavelength)?;
        ensure_positive("source_distance", self.source_distance)?;
        ensure_positive("screen_distance", self.screen_distance)?;
        ensure_positive("disc_radius", self.disc_radius)?;
        ensure_positive("eta", self.eta)?;
        Ok(())
    }

    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    /// λ r1, the panel length of the x-quadrature (m²).
    pub fn fresnel_length_sq(&self) -> f64 {
        self.wavelength * self.screen_distance
    }

    /// Fresnel number R² / (λ r1).
    pub fn fresnel_number(&self) -> f64 {
        self.disc_radius * self.disc_radius / self.fresnel_length_sq()
    }

    /// Whether the Fresnel number lies in `[1e-3, 1e9]`, the range where the
    /// linearized integral is meaningful. Not enforced.
    pub fn valid_fresnel(&self) -> bool {
        (1e-3..=1e9).contains(&self.fresnel_number())
    }

    /// Copy with a different disc radius.
    pub fn with_disc_radius(&self, disc_radius: f64) -> Self {
        DiffractionScenario {
            disc_radius,
            ..*self
        }
    }
}

/// Quadrature series acceleration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Acceleration {
    None,
    AlternatingSeriesExtrapolation,
}

impl std::str::FromStr for Acceleration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "none" => Ok(Acceleration::None),
            "alternating" | "alternating_series_extrapolation" | "epsilon" => {
                Ok(Acceleration::AlternatingSeriesExtrapolation)
            }
            other => Err(Error::InvalidConfig(format!(
                "unknown acceleration `{other}` (expected `none` or `alternating`)"
            ))),
        }
    }
}

/// Controls for [`amplitude`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub max_panels: usize,
    pub nodes_per_panel: usize,
    pub acceleration: Acceleration,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            rel_tol: 1e-10,
            max_panels: 200_000,
            nodes_per_panel: 16,
            acceleration: Acceleration::AlternatingSeriesExtrapolation,
        }
    }
}

impl QuadratureSettings {
    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        QuadratureSettings { rel_tol, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-2) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol must lie in (0, 1e-2], got {}",
                self.rel_tol
            )));
        }
        if self.nodes_per_panel < 4 {
            return Err(Error::InvalidConfig(format!(
                "nodes_per_panel must be at least 4, got {}",
                self.nodes_per_panel
            )));
        }
        if self.max_panels < 8 {
            return Err(Error::InvalidConfig(format!(
                "max_panels must be at least 8, got {}",
                self.max_panels
            )));
        }
        Ok(())
    }
}

/// Kirchhoff inclination factor `(1 + cos χ) / 2`.
///
/// Not applied inside [`amplitude`], which takes the factor as 1.
pub fn inclination_factor(chi: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&chi) {
        return Err(Error::InvalidArgument(format!(
            "inclination angle must lie in [0, π], got {chi}"
        )));
    }
    Ok(0.5 * (1.0 + chi.cos()))
}

/// Distance from the plane element at `(ρ, θ)` to the screen point at
/// distance `r` from the shadow center.
pub fn path_length(r1: f64, r: f64, rho: f64, theta: f64) -> Result<f64> {
    check_path_args(r1, r, rho, theta)?;
    Ok((r1 * r1 + r * r - 2.0 * r * rho * theta.sin() + rho * rho).sqrt())
}

/// First-order expansion of [`path_length`] in `(r² + ρ²) / r1²`.
///
/// The error against the exact distance is of order
/// `((r² + ρ²) / r1)² / r1`.
pub fn linearized_path_length(r1: f64, r: f64, rho: f64, theta: f64) -> Result<f64> {
    check_path_args(r1, r, rho, theta)?;
    Ok(r1 + (r * r - 2.0 * r * rho * theta.sin() + rho * rho) / (2.0 * r1))
}

fn check_path_args(r1: f64, r: f64, rho: f64, theta: f64) -> Result<()> {
    ensure_positive("r1", r1)?;
    ensure_finite("r", r)?;
    ensure_finite("theta", theta)?;
    ensure_finite("rho", rho)?;
    if rho < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "rho must be non-negative, got {rho}"
        )));
    }
    Ok(())
}

/// Characteristic width `λ r1 / R` of the central spot.
pub fn arago_width(wavelength: f64, r1: f64, radius: f64) -> Result<f64> {
    ensure_positive("wavelength", wavelength)?;
    ensure_positive("r1", r1)?;
    ensure_positive("radius", radius)?;
    Ok(wavelength * r1 / radius)
}

/// Largest edge deviation `δR ≤ λ r1 / R` that still leaves the spot intact.
pub fn smoothness_bound(wavelength: f64, r1: f64, radius: f64) -> Result<f64> {
    arago_width(wavelength, r1, radius)
}
