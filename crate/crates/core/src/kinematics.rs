//! Momentum kicks implied by localizing a body, and how they add up.

use crate::error::{ensure_positive, Error, Result};
use crate::quantities::Constants;

/// Minimum momentum uncertainty `ħ / δx`.
///
/// Uses `δp δx ≥ ħ` rather than the textbook `ħ / 2`, matching the
/// estimates this crate reproduces.
pub fn heisenberg_kick(delta_x: f64, consts: &Constants) -> Result<f64> {
    ensure_positive("delta_x", delta_x)?;
    Ok(consts.hbar / delta_x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccumulationMode {
    /// Isotropic kicks: total grows as `sqrt(N)`.
    RandomWalk,
    /// Perfectly aligned kicks: total grows as `N`.
    Coherent,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KickAccumulation {
    /// Position precision, m.
    pub delta_x: f64,
    /// Number of observations. Real-valued so that rate × time can be used.
    pub n_events: f64,
    pub mode: AccumulationMode,
    /// Mass of the kicked body, kg.
    pub mass: f64,
}

impl KickAccumulation {
    pub fn new(delta_x: f64, n_events: f64, mode: AccumulationMode, mass: f64) -> Result<Self> {
        let acc = KickAccumulation {
            delta_x,
            n_events,
            mode,
            mass,
        };
        acc.validate()?;
        Ok(acc)
    }

    fn validate(&self) -> Result<()> {
        ensure_positive("delta_x", self.delta_x)?;
        ensure_positive("mass", self.mass)?;
        if !(self.n_events.is_finite() && self.n_events >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "n_events must be finite and non-negative, got {}",
                self.n_events
            )));
        }
        Ok(())
    }
}

/// Total momentum change after `n_events` kicks of size [`heisenberg_kick`].
pub fn accumulate(acc: &KickAccumulation, consts: &Constants) -> Result<f64> {
    acc.validate()?;
    let kick = heisenberg_kick(acc.delta_x, consts)?;
    Ok(match acc.mode {
        AccumulationMode::RandomWalk => acc.n_events.sqrt() * kick,
        AccumulationMode::Coherent => acc.n_events * kick,
    })
}

pub fn velocity_change(delta_p: f64, mass: f64) -> Result<f64> {
    ensure_positive("mass", mass)?;
    if !delta_p.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "delta_p must be finite, got {delta_p}"
        )));
    }
    Ok(delta_p / mass)
}

/// Probability that an isotropic direction lies within `phi` of a fixed
/// axis: the spherical-cap fraction `(1 - cos φ) / 2`.
pub fn sector_probability(phi: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&phi) {
        return Err(Error::InvalidArgument(format!(
            "cap half-angle must lie in [0, π], got {phi}"
        )));
    }
    // sin² form avoids cancellation for small angles.
    let s = (0.5 * phi).sin();
    Ok(s * s)
}

/// `log10(p_single ^ n_events)`.
///
/// Kept in log space because the linear value underflows. Returns
/// `f64::NEG_INFINITY` when `p_single` is 0 and `n_events` is positive.
pub fn aligned_log10_probability(n_events: f64, p_single: f64) -> Result<f64> {
    if !(n_events.is_finite() && n_events >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "n_events must be finite and non-negative, got {n_events}"
        )));
    }
    if !(0.0..=1.0).contains(&p_single) {
        return Err(Error::InvalidArgument(format!(
            "single-event probability must lie in [0, 1], got {p_single}"
        )));
    }
    if n_events == 0.0 {
        return Ok(0.0);
    }
    if p_single == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(n_events * p_single.log10())
}
