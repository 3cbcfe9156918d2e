//! Solar-neutrino source model: p-p chain species, de Broglie wavelength,
//! thin-target interaction fraction and the resulting rates.

use std::f64::consts::PI;

use crate::error::{ensure_positive, Error, Result};
use crate::quantities::Constants;

/// Mean solar-neutrino energy used throughout the estimates, MeV.
pub const MEAN_ENERGY_MEV: f64 = 0.5;

/// Mean free path in lead, light years; reused for the Moon.
pub const MEAN_FREE_PATH_LY: f64 = 1000.0;

/// Largest `path / mfp` accepted by [`interaction_fraction`].
pub const THIN_TARGET_LIMIT: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    /// Continuous spectrum; `energy` is the endpoint.
    Endpoint,
    /// Monoenergetic line.
    Line,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeutrinoSpecies {
    pub reaction_label: &'static str,
    /// MeV.
    pub energy: f64,
    pub kind: SpectrumKind,
    pub branch_note: &'static str,
}

/// The five neutrino-producing reactions of the p-p chain.
pub fn pp_chain_species() -> Vec<NeutrinoSpecies> {
    vec![
        NeutrinoSpecies {
            reaction_label: "p + p -> 2H + e+ + nu_e",
            energy: 0.42,
            kind: SpectrumKind::Endpoint,
            branch_note: "pp",
        },
        NeutrinoSpecies {
            reaction_label: "p + e- + p -> 2H + nu_e",
            energy: 1.44,
            kind: SpectrumKind::Line,
            branch_note: "pep",
        },
        NeutrinoSpecies {
            reaction_label: "7Be + e- -> 7Li + nu_e",
            energy: 0.86,
            kind: SpectrumKind::Line,
            branch_note: "0.86 MeV (90%), 0.38 MeV (10%)",
        },
        NeutrinoSpecies {
            reaction_label: "8B -> 8Be + e+ + nu_e",
            energy: 15.0,
            kind: SpectrumKind::Endpoint,
            branch_note: "8B",
        },
        NeutrinoSpecies {
            reaction_label: "3He + p -> 4He + e+ + nu_e",
            energy: 18.8,
            kind: SpectrumKind::Endpoint,
            branch_note: "hep",
        },
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeutrinoModel {
    pub species: Vec<NeutrinoSpecies>,
    /// MeV.
    pub mean_energy: f64,
    /// 1/(m² s).
    pub flux: f64,
    /// m.
    pub mean_free_path: f64,
}

impl NeutrinoModel {
    pub fn solar(consts: &Constants) -> Self {
        NeutrinoModel {
            species: pp_chain_species(),
            mean_energy: MEAN_ENERGY_MEV,
            flux: consts.solar_neutrino_flux,
            mean_free_path: MEAN_FREE_PATH_LY * consts.ly,
        }
    }
}

/// `λ = h c / E` for an ultra-relativistic particle, `E` in MeV.
pub fn de_broglie_wavelength(energy_mev: f64, consts: &Constants) -> Result<f64> {
    ensure_positive("energy", energy_mev)?;
    Ok(consts.h * consts.c / consts.mev_to_joule(energy_mev))
}

/// Fraction of particles interacting along `path`, linearized as
/// `path / mfp`. Refuses paths longer than 1% of the mean free path.
pub fn interaction_fraction(path: f64, mfp: f64) -> Result<f64> {
    ensure_positive("mean free path", mfp)?;
    if !(path.is_finite() && path >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "path must be finite and non-negative, got {path}"
        )));
    }
    let fraction = path / mfp;
    if fraction > THIN_TARGET_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "path/mfp = {fraction:e} exceeds the thin-target limit {THIN_TARGET_LIMIT}"
        )));
    }
    Ok(fraction)
}

/// Rate through a disc of radius `radius`: `σ π R²`.
pub fn total_pass_rate(flux: f64, radius: f64) -> Result<f64> {
    ensure_positive("flux", flux)?;
    ensure_positive("radius", radius)?;
    Ok(flux * PI * radius * radius)
}

/// Rate of particles that interact with, and so diffract from, the disc.
pub fn diffracted_rate(alpha: f64, flux: f64, radius: f64) -> Result<f64> {
    check_fraction(alpha)?;
    Ok(alpha * total_pass_rate(flux, radius)?)
}

/// Spot contrast against the undiffracted background: equal to `α`.
pub fn arago_contrast(alpha: f64) -> Result<f64> {
    check_fraction(alpha)?;
    Ok(alpha)
}

fn check_fraction(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "fraction must lie in [0, 1], got {alpha}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantities::LIGHT_YEAR_M;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn species_table() {
        let s = pp_chain_species();
        assert_eq!(s.len(), 5);
        let energies: Vec<f64> = s.iter().map(|x| x.energy).collect();
        assert_eq!(energies, vec![0.42, 1.44, 0.86, 15.0, 18.8]);
        assert!(s.iter().all(|x| x.energy > 0.0));
        assert!(s[2].branch_note.contains("0.38"));
    }

    #[test]
    fn wavelength() {
        let paper = de_broglie_wavelength(0.5, &Constants::paper()).unwrap();
        assert!(rel(paper, 2.5e-12) < 0.1, "{paper}");
        let codata = de_broglie_wavelength(0.5, &Constants::codata()).unwrap();
        // hc = 1.239 841 98e-6 eV m.
        assert!(rel(codata, 1.239_841_98e-6 / 0.5e6) < 1e-8, "{codata}");
        assert_eq!(format!("{codata:.3e}"), "2.480e-12");
        let double = de_broglie_wavelength(1.0, &Constants::codata()).unwrap();
        assert!(rel(double, codata / 2.0) < 1e-15);
        assert!(de_broglie_wavelength(0.0, &Constants::paper()).is_err());
        assert!(de_broglie_wavelength(-1.0, &Constants::paper()).is_err());
    }

    #[test]
    fn fractions() {
        let mfp = 1000.0 * LIGHT_YEAR_M;
        let moon = interaction_fraction(2e6, mfp).unwrap();
        assert!(rel(moon, 2.1e-13) < 0.02, "{moon}");
        let crater = interaction_fraction(100.0, mfp).unwrap();
        assert!(rel(crater, 1.06e-17) < 0.01, "{crater}");
        assert_eq!(interaction_fraction(0.0, 3.0).unwrap(), 0.0);
        assert!(interaction_fraction(0.02, 1.0).is_err());
        assert!(interaction_fraction(0.01, 1.0).is_ok());
        assert!(interaction_fraction(-1.0, 1.0).is_err());
        assert!(interaction_fraction(1.0, 0.0).is_err());
    }

    #[test]
    fn rates() {
        let base = total_pass_rate(7e14, 1e6).unwrap();
        assert!(rel(base, 2.2e27) < 0.01, "{base}");
        assert!(rel(total_pass_rate(7e14, 2e6).unwrap(), 4.0 * base) < 1e-15);
        assert!(rel(total_pass_rate(7e14, 1.7e6).unwrap(), 6.4e27) < 0.01);
        let f = diffracted_rate(2e-13, 7e14, 1e6).unwrap();
        assert!(rel(f, 4.4e14) < 0.01, "{f}");
        assert!((f.log10() - 15.0).abs() < 0.5);
        assert_eq!(diffracted_rate(0.0, 7e14, 1e6).unwrap(), 0.0);
        assert!(rel(diffracted_rate(2.1e-13, 7e14, 1.7e6).unwrap(), 1.33e15) < 0.01);
        assert!(diffracted_rate(1.5, 7e14, 1e6).is_err());
        assert!(total_pass_rate(-1.0, 1.0).is_err());
    }

    #[test]
    fn contrast() {
        assert_eq!(arago_contrast(2.1e-13).unwrap(), 2.1e-13);
        assert_eq!(arago_contrast(1.0).unwrap(), 1.0);
        assert_eq!(arago_contrast(0.0).unwrap(), 0.0);
        assert!(arago_contrast(-0.1).is_err());
    }

    #[test]
    fn model_from_profile() {
        let m = NeutrinoModel::solar(&Constants::paper());
        assert_eq!(m.flux, 7e14);
        assert_eq!(m.mean_energy, 0.5);
        assert_eq!(m.mean_free_path, 1000.0 * LIGHT_YEAR_M);
        assert_eq!(m.species.len(), 5);
    }
}
