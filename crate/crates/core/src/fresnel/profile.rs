use rayon::prelude::*;

use super::{AmplitudeSolver, DiffractionScenario, QuadratureSettings};
use crate::error::{ensure_positive, Error, Result};

/// What intensities in an [`IntensityProfile`] are relative to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Axial intensity with the disc removed, same η.
    UnobstructedCenter,
}

/// Relative intensity sampled on a radial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct IntensityProfile {
    pub radii: Vec<f64>,
    pub intensity_rel: Vec<f64>,
    pub reference: Normalization,
    /// Absent for profiles read back from files.
    pub scenario: Option<DiffractionScenario>,
}

impl IntensityProfile {
    /// Wraps externally produced samples, checking the profile invariants.
    pub fn from_samples(radii: Vec<f64>, intensity_rel: Vec<f64>) -> Result<Self> {
        if radii.len() != intensity_rel.len() {
            return Err(Error::InvalidProfile(format!(
                "{} radii but {} intensities",
                radii.len(),
                intensity_rel.len()
            )));
        }
        if radii.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidProfile(
                "radii must be strictly increasing".into(),
            ));
        }
        if let Some(bad) = intensity_rel
            .iter()
            .find(|v| !(v.is_finite() && **v >= 0.0))
        {
            return Err(Error::InvalidProfile(format!(
                "intensities must be finite and non-negative, found {bad}"
            )));
        }
        Ok(IntensityProfile {
            radii,
            intensity_rel,
            reference: Normalization::UnobstructedCenter,
            scenario: None,
        })
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    /// Index of the sample closest to r = 0.
    pub fn center_index(&self) -> Option<usize> {
        self.radii
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .map(|(i, _)| i)
    }

    /// Intensity at the sample closest to the axis.
    pub fn center_intensity(&self) -> Option<f64> {
        self.center_index().map(|i| self.intensity_rel[i])
    }
}

/// Samples `|U(r)|²` on `n_points` radii spread evenly over `[-r_max, r_max]`.
///
/// Points are evaluated independently on the current rayon pool and gathered
/// by index, so the result does not depend on the number of worker threads.
pub fn intensity_profile(
    scn: &DiffractionScenario,
    r_max: f64,
    n_points: usize,
    q: &QuadratureSettings,
) -> Result<IntensityProfile> {
    scn.validate()?;
    ensure_positive("r_max", r_max)?;
    if n_points < 3 || n_points.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "profile needs an odd number of points >= 3, got {n_points}"
        )));
    }
    let solver = AmplitudeSolver::new(*q)?;
    let half = ((n_points - 1) / 2) as f64;
    let radii: Vec<f64> = (0..n_points)
        .map(|i| r_max * ((i as f64 - half) / half))
        .collect();

    let results: Vec<Result<f64>> = radii
        .par_iter()
        .map(|&r| solver.amplitude(scn, r).map(|a| a.intensity()))
        .collect();

    let mut intensity_rel = Vec::with_capacity(n_points);
    for (index, res) in results.into_iter().enumerate() {
        match res {
            Ok(v) => intensity_rel.push(v),
            Err(e) => {
                return Err(Error::AtGridPoint {
                    index,
                    radius: radii[index],
                    source: Box::new(e),
                })
            }
        }
    }
    Ok(IntensityProfile {
        radii,
        intensity_rel,
        reference: Normalization::UnobstructedCenter,
        scenario: Some(*scn),
    })
}

/// Full width at half maximum of the central peak.
///
/// The central sample (closest to r = 0) must be a strict maximum. From it
/// the profile is walked outwards on both sides to the first sample at or
/// below half the peak, and the crossing is placed by linear interpolation
/// between that sample and its inner neighbour.
pub fn fwhm(profile: &IntensityProfile) -> Result<f64> {
    let n = profile.len();
    if n < 3 {
        return Err(Error::InvalidProfile(format!(
            "need at least 3 samples, got {n}"
        )));
    }
    let center = profile.center_index().expect("non-empty profile");
    let values = &profile.intensity_rel;
    let peak = values[center];
    if !(peak > 0.0) {
        return Err(Error::InvalidProfile(
            "central intensity is not positive".into(),
        ));
    }
    if let Some((i, _)) = values
        .iter()
        .enumerate()
        .find(|&(i, &v)| i != center && v >= peak)
    {
        return Err(Error::InvalidProfile(format!(
            "maximum is not strictly at the center (sample {i}, r = {:e})",
            profile.radii[i]
        )));
    }
    let half = 0.5 * peak;
    let crossing = |inner: usize, outer: usize| -> f64 {
        let (r0, r1) = (profile.radii[inner], profile.radii[outer]);
        let (v0, v1) = (values[inner], values[outer]);
        if v1 == half {
            r1
        } else {
            r0 + (half - v0) * (r1 - r0) / (v1 - v0)
        }
    };
    let right = (center + 1..n)
        .find(|&i| values[i] <= half)
        .map(|i| crossing(i - 1, i))
        .ok_or(Error::NoHalfMaxCrossing { side: "positive" })?;
    let left = (0..center)
        .rev()
        .find(|&i| values[i] <= half)
        .map(|i| crossing(i + 1, i))
        .ok_or(Error::NoHalfMaxCrossing { side: "negative" })?;
    Ok(right - left)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian(sigma: f64, r_max: f64, n: usize) -> IntensityProfile {
        let half = ((n - 1) / 2) as f64;
        let radii: Vec<f64> = (0..n).map(|i| r_max * (i as f64 - half) / half).collect();
        let values = radii
            .iter()
            .map(|r| (-r * r / (2.0 * sigma * sigma)).exp())
            .collect();
        IntensityProfile::from_samples(radii, values).unwrap()
    }

    #[test]
    fn gaussian_fwhm() {
        let sigma = 0.37;
        let want = 2.0 * (2.0 * 2f64.ln()).sqrt() * sigma;
        let p = gaussian(sigma, 4.0 * sigma, 401);
        let got = fwhm(&p).unwrap();
        // Linear interpolation error is bounded by h² max|f''| / 8 over |f'|.
        assert!((got - want).abs() < 1e-4 * want, "{got} vs {want}");
    }

    #[test]
    fn scale_invariant() {
        let p = gaussian(1.0, 5.0, 101);
        let base = fwhm(&p).unwrap();
        for k in [1e-13, 3.0, 7e8] {
            let scaled = IntensityProfile::from_samples(
                p.radii.clone(),
                p.intensity_rel.iter().map(|v| v * k).collect(),
            )
            .unwrap();
            assert!((fwhm(&scaled).unwrap() - base).abs() <= 1e-12 * base);
        }
    }

    #[test]
    fn errors() {
        let narrow = gaussian(1.0, 0.5, 11);
        assert!(matches!(
            fwhm(&narrow),
            Err(Error::NoHalfMaxCrossing { .. })
        ));
        let radii: Vec<f64> = (-5..=5).map(f64::from).collect();
        let rising: Vec<f64> = (0..11).map(f64::from).collect();
        let monotone = IntensityProfile::from_samples(radii.clone(), rising).unwrap();
        assert!(matches!(fwhm(&monotone), Err(Error::InvalidProfile(_))));
        let flat = IntensityProfile::from_samples(radii, vec![1.0; 11]).unwrap();
        assert!(matches!(fwhm(&flat), Err(Error::InvalidProfile(_))));
        assert!(IntensityProfile::from_samples(vec![1.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(IntensityProfile::from_samples(vec![0.0, 1.0], vec![1.0, -1.0]).is_err());
    }

    #[test]
    fn profile_grid_rules() {
        let scn = DiffractionScenario::reference();
        let q = QuadratureSettings::default();
        assert!(intensity_profile(&scn, 0.01, 4, &q).is_err());
        assert!(intensity_profile(&scn, 0.01, 1, &q).is_err());
        assert!(intensity_profile(&scn, 0.0, 5, &q).is_err());
        let p = intensity_profile(&scn, 0.01, 3, &q).unwrap();
        assert_eq!(p.radii, vec![-0.01, 0.0, 0.01]);
        assert_eq!(p.intensity_rel[0], p.intensity_rel[2]);
    }

    #[test]
    fn failing_point_is_annotated() {
        let scn = DiffractionScenario::reference();
        let q = QuadratureSettings {
            max_panels: 8,
            acceleration: super::super::Acceleration::None,
            ..QuadratureSettings::default()
        };
        match intensity_profile(&scn, 0.01, 5, &q) {
            Err(Error::AtGridPoint { index, source, .. }) => {
                assert_eq!(index, 0);
                assert!(matches!(*source, Error::NoConvergence { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
