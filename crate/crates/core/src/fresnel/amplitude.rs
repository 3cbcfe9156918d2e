use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Acceleration, DiffractionScenario, QuadratureSettings};
use crate::error::{ensure_finite, Error, Result};
use crate::quadrature::{wynn_epsilon, GaussLegendre};
use crate::specfun::j0;

/// Partial sums kept for extrapolation.
const WINDOW: usize = 25;
/// Panels that must be summed past the acceleration start before an
/// extrapolated value is trusted.
const MIN_TERMS: usize = 8;
/// Extrapolation starts once ρ exceeds this multiple of the observation
/// radius, beyond the stationary point of the phase at ρ = r.
const TAIL_START: f64 = 2.0;

/// Normalized complex amplitude at one screen point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitude {
    /// Amplitude relative to the unobstructed axial amplitude, including the
    /// unit-modulus factor `exp(iπ r² / (λ r1))`.
    pub value: Complex64,
    /// The regularized x-integral itself, before normalization.
    pub integral: Complex64,
    /// Half-period panels evaluated.
    pub panels: usize,
}

impl Amplitude {
    /// `|U(r)|²` relative to the unobstructed axial intensity.
    pub fn intensity(&self) -> f64 {
        self.value.norm_sqr()
    }
}

/// Unobstructed axial integral `∫_0^∞ exp((iπ/(λ r1) - η) x) dx`.
pub(crate) fn unobstructed_integral(scn: &DiffractionScenario) -> Complex64 {
    let a = PI / scn.fresnel_length_sq();
    Complex64::new(scn.eta, -a).inv()
}

/// `exp(iπ v)` with `v` reduced modulo 2 first.
pub(crate) fn half_turns(v: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * v.rem_euclid(2.0))
}

/// Reusable amplitude evaluator holding the panel rule.
#[derive(Debug, Clone)]
pub struct AmplitudeSolver {
    settings: QuadratureSettings,
    rule: GaussLegendre,
}

impl AmplitudeSolver {
    pub fn new(settings: QuadratureSettings) -> Result<Self> {
        settings.validate()?;
        Ok(AmplitudeSolver {
            rule: GaussLegendre::new(settings.nodes_per_panel),
            settings,
        })
    }

    pub fn settings(&self) -> &QuadratureSettings {
        &self.settings
    }

    /// Evaluates the normalized amplitude at screen radius `r`.
    ///
    /// The x-axis is cut into panels of length `λ r1`, over which the carrier
    /// `exp(iπx/(λ r1))` turns by exactly π, so successive panel integrals
    /// alternate in sign. Each panel is further split so that no sub-panel
    /// sees more than about π of total phase from the carrier, the Bessel
    /// factor and the damping. The carrier phase is measured from `x = R²`,
    /// which keeps every evaluated exponent below a few π.
    pub fn amplitude(&self, scn: &DiffractionScenario, r: f64) -> Result<Amplitude> {
        scn.validate()?;
        ensure_finite("r", r)?;
        let h = scn.fresnel_length_sq();
        let x0 = scn.disc_radius * scn.disc_radius;
        if h < f64::EPSILON * x0 {
            return Err(Error::InvalidArgument(format!(
                "λ r1 = {h:e} m² is below the floating-point resolution of R² = {x0:e} m²"
            )));
        }
        let r_abs = r.abs();
        let a = PI / h;
        let b = 2.0 * PI * r_abs / h;
        let eta = scn.eta;
        let carrier = Complex64::new(-eta, a);
        let panel_decay = (-eta * h).exp();

        let tail_k = {
            let rho = TAIL_START * r_abs;
            if rho * rho <= x0 {
                0
            } else {
                ((rho * rho - x0) / h).ceil() as usize
            }
        };

        let tol = self.settings.rel_tol;
        let scale_floor = unobstructed_integral(scn).norm();
        let accelerate = self.settings.acceleration == Acceleration::AlternatingSeriesExtrapolation;

        let mut sum = Complex64::new(0.0, 0.0);
        let mut sums: Vec<Complex64> = Vec::with_capacity(WINDOW);
        let mut weight = 1.0; // (-1)^k exp(-η k h)
        let mut last_estimate: Option<Complex64> = None;
        let mut last_increment = f64::INFINITY;
        let mut settled = 0usize;

        for k in 0..self.settings.max_panels {
            let xs = x0 + k as f64 * h;
            let xe = xs + h;
            let bessel_phase = b * (xe.sqrt() - xs.sqrt());
            let pieces = ((PI + bessel_phase + eta * h) / PI).ceil().max(1.0) as usize;
            let step = h / pieces as f64;

            let mut panel = Complex64::new(0.0, 0.0);
            for j in 0..pieces {
                let t0 = j as f64 * step;
                for (t, w) in self.rule.mapped(t0, t0 + step) {
                    let x = xs + t;
                    let f = (carrier * t).exp() * j0(b * x.sqrt());
                    panel += f * w;
                }
            }
            let term = panel * weight;
            sum += term;
            weight *= -panel_decay;

            let estimate = if accelerate && k >= tail_k {
                if sums.len() == WINDOW {
                    sums.remove(0);
                }
                sums.push(sum);
                if sums.len() < MIN_TERMS {
                    last_estimate = None;
                    continue;
                }
                wynn_epsilon(&sums).unwrap_or(sum)
            } else {
                sum
            };

            if let Some(prev) = last_estimate {
                let scale = estimate.norm().max(scale_floor);
                last_increment = (estimate - prev).norm() / scale;
                if last_increment <= tol {
                    settled += 1;
                    if settled >= 2 {
                        return Ok(self.finish(scn, r, estimate, x0, k + 1));
                    }
                } else {
                    settled = 0;
                }
            }
            last_estimate = Some(estimate);
        }
        Err(Error::NoConvergence {
            panels: self.settings.max_panels,
            last_increment,
        })
    }

    fn finish(
        &self,
        scn: &DiffractionScenario,
        r: f64,
        shifted: Complex64,
        x0: f64,
        panels: usize,
    ) -> Amplitude {
        let h = scn.fresnel_length_sq();
        // Undo the shift of the carrier origin to x = R².
        let origin = half_turns(x0 / h) * (-scn.eta * x0).exp();
        let integral = shifted * origin;
        let value = half_turns(r * r / h) * integral / unobstructed_integral(scn);
        Amplitude {
            value,
            integral,
            panels,
        }
    }
}

/// One-shot amplitude evaluation. Prefer [`AmplitudeSolver`] for many radii.
pub fn amplitude(scn: &DiffractionScenario, r: f64, q: &QuadratureSettings) -> Result<Amplitude> {
    AmplitudeSolver::new(*q)?.amplitude(scn, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_axial(scn: &DiffractionScenario) -> Complex64 {
        // ∫_{R²}^∞ exp(c x) dx = -exp(c R²) / c with c = iπ/(λ r1) - η.
        let x0 = scn.disc_radius * scn.disc_radius;
        let c = Complex64::new(-scn.eta, PI / scn.fresnel_length_sq());
        -half_turns(x0 / scn.fresnel_length_sq()) * (-scn.eta * x0).exp() / c
    }

    #[test]
    fn axial_value_matches_closed_form() {
        let q = QuadratureSettings::default();
        for scn in [
            DiffractionScenario::reference(),
            DiffractionScenario::new(5e-7, 1.0, 1.0, 1e-3, 2e3).unwrap(),
            DiffractionScenario::new(5e-7, 1.0, 1.0, 3.3e-3, 10.0).unwrap(),
        ] {
            let amp = amplitude(&scn, 0.0, &q).unwrap();
            let want = exact_axial(&scn);
            let err = (amp.integral - want).norm() / want.norm();
            assert!(err < 1e-10, "{scn:?}: rel err {err:e}");
            let norm_err =
                (amp.intensity() - (-2.0 * scn.eta * scn.disc_radius.powi(2)).exp()).abs();
            assert!(norm_err < 1e-9);
        }
    }

    #[test]
    fn unobstructed_limit_is_one() {
        let f4 = DiffractionScenario::reference();
        let scale = f4.fresnel_length_sq().sqrt();
        let q = QuadratureSettings::default();
        let amp = amplitude(&f4.with_disc_radius(1e-6 * scale), 0.0, &q).unwrap();
        assert!((amp.intensity() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn reference_center_close_to_unobstructed() {
        let amp = amplitude(
            &DiffractionScenario::reference(),
            0.0,
            &QuadratureSettings::default(),
        )
        .unwrap();
        let i = amp.intensity();
        assert!((0.8..=1.2).contains(&i), "{i}");
    }

    #[test]
    fn acceleration_needs_far_fewer_panels() {
        // Heavily damped tail: the plain partial sums converge on their own.
        let scn = DiffractionScenario::new(5e-7, 1.0, 1.0, 1e-3, 2e4).unwrap();
        let fast = QuadratureSettings::default();
        let slow = QuadratureSettings {
            acceleration: Acceleration::None,
            ..fast
        };
        for r in [0.0, 1e-4, 3e-4] {
            let a = amplitude(&scn, r, &fast).unwrap();
            let b = amplitude(&scn, r, &slow).unwrap();
            assert!((a.value - b.value).norm() < 1e-8, "r={r}");
            assert!(a.panels * 10 < b.panels, "{} vs {}", a.panels, b.panels);
        }
    }

    #[test]
    fn no_convergence_reports_panels() {
        let q = QuadratureSettings {
            acceleration: Acceleration::None,
            max_panels: 50,
            ..QuadratureSettings::default()
        };
        match amplitude(&DiffractionScenario::reference(), 1e-3, &q) {
            Err(Error::NoConvergence {
                panels,
                last_increment,
            }) => {
                assert_eq!(panels, 50);
                assert!(last_increment > q.rel_tol);
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn refuses_unresolvable_panels() {
        let scn = DiffractionScenario::new(1e-20, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            amplitude(&scn, 0.0, &QuadratureSettings::default()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn symmetric_in_r() {
        let solver = AmplitudeSolver::new(QuadratureSettings::default()).unwrap();
        let scn = DiffractionScenario::reference();
        for r in [1e-4, 1.7e-3, 6e-3] {
            let p = solver.amplitude(&scn, r).unwrap();
            let m = solver.amplitude(&scn, -r).unwrap();
            assert_eq!(p.intensity(), m.intensity());
        }
    }
}
