use std::path::Path;
use std::time::{Duration, Instant};

use arago::fresnel::{arago_width, fwhm, intensity_profile, DiffractionScenario, IntensityProfile};
use arago::pipeline::{run_paper_pipeline, PipelineReport};
use arago::{Constants, Profile};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::formats::{parse_profile_csv, profile_csv, sci9};

/// Runs `f` on a dedicated pool with exactly `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {threads} worker threads: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Debug, Clone)]
pub struct ProfileRun {
    pub profile: IntensityProfile,
    pub csv: String,
    pub r_max_m: f64,
    pub elapsed: Duration,
}

impl ProfileRun {
    pub fn summary(&self) -> String {
        format!(
            "center_intensity_rel={:.9e} points={} r_max_m={:.6e} runtime_s={:.3}",
            self.profile.center_intensity().unwrap_or(f64::NAN),
            self.profile.len(),
            self.r_max_m,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Computes the intensity profile described by `cfg` and renders its CSV.
pub fn cmd_profile(cfg: &RunConfig) -> CliResult<ProfileRun> {
    let start = Instant::now();
    let r_max = cfg.r_max_for(&cfg.scenario)?;
    let profile = with_threads(cfg.threads, || {
        intensity_profile(&cfg.scenario, r_max, cfg.points, &cfg.quadrature)
    })??;
    let csv = profile_csv(&profile);
    Ok(ProfileRun {
        profile,
        csv,
        r_max_m: r_max,
        elapsed: start.elapsed(),
    })
}

/// FWHM of a profile CSV on disk.
pub fn cmd_fwhm(input: &Path) -> CliResult<f64> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", input.display())))?;
    let profile = parse_profile_csv(&text)?;
    fwhm(&profile).map_err(|e| CliError::Numerical(e.to_string()))
}

pub fn cmd_scenario(profile: Profile) -> CliResult<PipelineReport> {
    run_paper_pipeline(profile).map_err(|e| CliError::Numerical(e.to_string()))
}

pub fn cmd_constants(profile: Profile) -> Constants {
    profile.constants()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    LambdaM,
    RadiusM,
    R1M,
    EtaPerM2,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::LambdaM => "lambda_m",
            SweepParam::RadiusM => "radius_m",
            SweepParam::R1M => "r1_m",
            SweepParam::EtaPerM2 => "eta_per_m2",
        }
    }

    fn apply(self, base: &DiffractionScenario, v: f64) -> CliResult<DiffractionScenario> {
        let mut s = *base;
        match self {
            SweepParam::LambdaM => s.wavelength = v,
            SweepParam::RadiusM => s.disc_radius = v,
            SweepParam::R1M => s.screen_distance = v,
            SweepParam::EtaPerM2 => s.eta = v,
        }
        s.validate()?;
        Ok(s)
    }
}

impl std::str::FromStr for SweepParam {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.replace('-', "_").as_str() {
            "lambda_m" => Ok(SweepParam::LambdaM),
            "radius_m" => Ok(SweepParam::RadiusM),
            "r1_m" => Ok(SweepParam::R1M),
            "eta_per_m2" | "eta" => Ok(SweepParam::EtaPerM2),
            other => Err(CliError::Usage(format!(
                "cannot sweep `{other}` (expected lambda_m, radius_m, r1_m or eta_per_m2)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Log,
}

impl std::str::FromStr for SweepScale {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "linear" | "lin" => Ok(SweepScale::Linear),
            "log" => Ok(SweepScale::Log),
            other => Err(CliError::Usage(format!(
                "unknown sweep scale `{other}` (expected linear or log)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub param: SweepParam,
    pub from: f64,
    pub to: f64,
    pub count: usize,
    pub scale: SweepScale,
}

impl SweepSpec {
    pub fn values(&self) -> CliResult<Vec<f64>> {
        if self.count == 0 {
            return Err(CliError::Usage("sweep count must be at least 1".into()));
        }
        if !(self.from.is_finite() && self.to.is_finite()) {
            return Err(CliError::Usage("sweep bounds must be finite".into()));
        }
        if self.scale == SweepScale::Log && !(self.from > 0.0 && self.to > 0.0) {
            return Err(CliError::Usage("log sweep needs positive bounds".into()));
        }
        if self.count == 1 {
            return Ok(vec![self.from]);
        }
        let last = (self.count - 1) as f64;
        Ok((0..self.count)
            .map(|i| {
                let t = i as f64 / last;
                match self.scale {
                    SweepScale::Linear => self.from + (self.to - self.from) * t,
                    SweepScale::Log => self.from * (self.to / self.from).powf(t),
                }
            })
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub fwhm_m: f64,
    pub analytic_width_m: f64,
}

#[derive(Debug, Clone)]
pub struct SweepRun {
    pub rows: Vec<SweepRow>,
    pub csv: String,
    pub elapsed: Duration,
}

/// One profile and FWHM per sweep value, evaluated concurrently and emitted
/// in parameter order.
pub fn cmd_sweep(cfg: &RunConfig, spec: &SweepSpec) -> CliResult<SweepRun> {
    let start = Instant::now();
    let values = spec.values()?;
    let scenarios = values
        .iter()
        .map(|&v| spec.param.apply(&cfg.scenario, v))
        .collect::<CliResult<Vec<_>>>()?;
    let results: Vec<CliResult<SweepRow>> = with_threads(cfg.threads, || {
        scenarios
            .par_iter()
            .zip(values.par_iter())
            .map(|(scn, &value)| {
                let r_max = cfg.r_max_for(scn)?;
                let profile = intensity_profile(scn, r_max, cfg.points, &cfg.quadrature)?;
                let width = fwhm(&profile).map_err(|e| {
                    CliError::Numerical(format!("{} = {value:e}: {e}", spec.param.name()))
                })?;
                Ok(SweepRow {
                    value,
                    fwhm_m: width,
                    analytic_width_m: arago_width(
                        scn.wavelength,
                        scn.screen_distance,
                        scn.disc_radius,
                    )?,
                })
            })
            .collect()
    })?;
    let rows = results.into_iter().collect::<CliResult<Vec<_>>>()?;
    let mut csv = format!("{},fwhm_m,analytic_width_m\n", spec.param.name());
    for row in &rows {
        csv.push_str(&format!(
            "{},{},{}\n",
            sci9(row.value),
            sci9(row.fwhm_m),
            sci9(row.analytic_width_m)
        ));
    }
    Ok(SweepRun {
        rows,
        csv,
        elapsed: start.elapsed(),
    })
}
