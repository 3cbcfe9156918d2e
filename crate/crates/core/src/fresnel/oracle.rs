//! Brute-force reference for [`super::amplitude`].
//!
//! Integrates the linearized double integral over the unobstructed plane
//! directly in `(ρ, θ)`: trapezoid rule in θ (exponentially convergent for
//! the periodic integrand), composite Gauss-Legendre in ρ on uniform panels,
//! hard truncation once `exp(-η ρ²)` has decayed by `e^-36`. No Bessel
//! function, no change of variable and no series acceleration is involved,
//! so agreement with the production path is a genuine check. It is only
//! affordable for small problems and refuses anything else.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::amplitude::{half_turns, unobstructed_integral};
use super::DiffractionScenario;
use crate::error::{ensure_finite, Error, Result};
use crate::quadrature::GaussLegendre;

const RADIAL_NODES: usize = 10;
const DAMPING_CUTOFF: f64 = 36.0;
const MAX_PERIODS: f64 = 1e6;

/// Resolution of the oracle: uniform ρ panels and trapezoid nodes in θ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGrid {
    pub radial_panels: usize,
    /// Nodes on the full circle; must be a multiple of 4.
    pub angular_nodes: usize,
}

struct Extent {
    rho_max: f64,
    phase_rate: f64,
    max_bessel_arg: f64,
}

fn extent(scn: &DiffractionScenario, r: f64) -> Result<Extent> {
    let h = scn.fresnel_length_sq();
    let x0 = scn.disc_radius * scn.disc_radius;
    let x_max = x0 + DAMPING_CUTOFF / scn.eta;
    let periods = (x_max - x0) / (2.0 * h);
    if periods > MAX_PERIODS {
        return Err(Error::OracleRefused(format!(
            "{periods:.3e} oscillation periods inside the truncation radius (limit {MAX_PERIODS:e})"
        )));
    }
    let rho_max = x_max.sqrt();
    let b = 2.0 * PI * r.abs() / h;
    Ok(Extent {
        rho_max,
        phase_rate: 2.0 * PI * rho_max / h + b,
        max_bessel_arg: b * rho_max,
    })
}

fn angular_nodes_needed(c: f64) -> usize {
    let n = c + 10.0 * c.cbrt() + 20.0;
    4 * (n / 4.0).ceil() as usize
}

impl OracleGrid {
    pub fn new(radial_panels: usize, angular_nodes: usize) -> Self {
        OracleGrid {
            radial_panels,
            angular_nodes,
        }
    }

    /// Smallest grid with about π/2 of phase per radial panel and enough
    /// angular nodes for the largest Bessel argument.
    pub fn auto(scn: &DiffractionScenario, r: f64) -> Result<Self> {
        let ext = extent(scn, r)?;
        let span = ext.rho_max - scn.disc_radius;
        let radial = (ext.phase_rate * span / (0.5 * PI)).ceil() as usize;
        Ok(OracleGrid {
            radial_panels: radial.max(16),
            angular_nodes: angular_nodes_needed(ext.max_bessel_arg) + 8,
        })
    }

    /// Both resolutions doubled.
    pub fn refined(&self) -> Self {
        OracleGrid {
            radial_panels: 2 * self.radial_panels,
            angular_nodes: 2 * self.angular_nodes,
        }
    }
}

/// Normalized amplitude at screen radius `r` by direct `(ρ, θ)` quadrature.
pub fn oracle_amplitude(scn: &DiffractionScenario, r: f64, grid: OracleGrid) -> Result<Complex64> {
    scn.validate()?;
    ensure_finite("r", r)?;
    let ext = extent(scn, r)?;
    if !grid.angular_nodes.is_multiple_of(4) || grid.angular_nodes == 0 {
        return Err(Error::OracleRefused(format!(
            "angular node count must be a positive multiple of 4, got {}",
            grid.angular_nodes
        )));
    }
    let need = angular_nodes_needed(ext.max_bessel_arg);
    if grid.angular_nodes < need {
        return Err(Error::OracleRefused(format!(
            "{} angular nodes cannot resolve Bessel argument {:.1} (need {need})",
            grid.angular_nodes, ext.max_bessel_arg
        )));
    }
    let radius = scn.disc_radius;
    let span = ext.rho_max - radius;
    let width = span / grid.radial_panels.max(1) as f64;
    if grid.radial_panels == 0 || ext.phase_rate * width > PI {
        return Err(Error::OracleRefused(format!(
            "{} radial panels leave {:.2} rad of phase per panel (limit π)",
            grid.radial_panels,
            ext.phase_rate * width
        )));
    }

    let h = scn.fresnel_length_sq();
    let carrier = Complex64::new(-scn.eta, PI / h);
    let b = 2.0 * PI * r.abs() / h;

    // Trapezoid in θ over the full circle, folded onto a quarter:
    // cos(c sin θ) is symmetric about θ = 0, π/2, π, and the sine part
    // integrates to zero.
    let quarter = grid.angular_nodes / 4;
    let sines: Vec<f64> = (0..=quarter)
        .map(|j| (0.5 * PI * j as f64 / quarter as f64).sin())
        .collect();
    let angular = |c: f64| -> f64 {
        let mut inner = 0.0;
        for s in &sines[1..quarter] {
            inner += (c * s).cos();
        }
        let total = 2.0 + 2.0 * c.cos() + 4.0 * inner;
        2.0 * PI * total / grid.angular_nodes as f64
    };

    let rule = GaussLegendre::new(RADIAL_NODES);
    let mut sum = Complex64::new(0.0, 0.0);
    for p in 0..grid.radial_panels {
        let lo = radius + p as f64 * width;
        let hi = if p + 1 == grid.radial_panels {
            ext.rho_max
        } else {
            lo + width
        };
        for (rho, w) in rule.mapped(lo, hi) {
            let shift = (rho - radius) * (rho + radius);
            let radial = (carrier * shift).exp() * rho;
            sum += radial * (w * angular(b * rho));
        }
    }

    let x0 = radius * radius;
    let origin = half_turns(x0 / h) * (-scn.eta * x0).exp();
    let baseline = unobstructed_integral(scn) * PI;
    Ok(half_turns(r * r / h) * sum * origin / baseline)
}
