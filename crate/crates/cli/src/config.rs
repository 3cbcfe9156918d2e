//! Run configuration: built-in defaults, then an optional `key = value`
//! file, then command-line flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use arago::fresnel::{arago_width, Acceleration, DiffractionScenario, QuadratureSettings};

use crate::error::{CliError, CliResult};

/// Keys accepted in config files; the same names as the long flags.
pub const CONFIG_KEYS: [&str; 14] = [
    "lambda-m",
    "r0-m",
    "r1-m",
    "radius-m",
    "eta",
    "r-max-m",
    "points",
    "rel-tol",
    "max-panels",
    "nodes-per-panel",
    "acceleration",
    "threads",
    "output",
    "format",
];

/// Values that may come from a config file or from flags.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub lambda_m: Option<f64>,
    pub r0_m: Option<f64>,
    pub r1_m: Option<f64>,
    pub radius_m: Option<f64>,
    pub eta: Option<f64>,
    pub r_max_m: Option<f64>,
    pub points: Option<usize>,
    pub rel_tol: Option<f64>,
    pub max_panels: Option<usize>,
    pub nodes_per_panel: Option<usize>,
    pub acceleration: Option<String>,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: Option<String>,
}

impl Overrides {
    /// Fields set in `other` replace those in `self`.
    pub fn merge(self, other: Overrides) -> Overrides {
        Overrides {
            lambda_m: other.lambda_m.or(self.lambda_m),
            r0_m: other.r0_m.or(self.r0_m),
            r1_m: other.r1_m.or(self.r1_m),
            radius_m: other.radius_m.or(self.radius_m),
            eta: other.eta.or(self.eta),
            r_max_m: other.r_max_m.or(self.r_max_m),
            points: other.points.or(self.points),
            rel_tol: other.rel_tol.or(self.rel_tol),
            max_panels: other.max_panels.or(self.max_panels),
            nodes_per_panel: other.nodes_per_panel.or(self.nodes_per_panel),
            acceleration: other.acceleration.or(self.acceleration),
            threads: other.threads.or(self.threads),
            output: other.output.or(self.output),
            format: other.format.or(self.format),
        }
    }

    /// Parses `key = value` lines. `#` starts a comment; keys may use `-`
    /// or `_`.
    pub fn parse_config(text: &str) -> CliResult<Overrides> {
        let mut seen = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected `key = value`", n + 1))
            })?;
            let key = key.trim().replace('_', "-");
            let key = if key == "eta-per-m2" {
                "eta".to_string()
            } else {
                key
            };
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!(
                    "config line {}: unknown key `{key}`",
                    n + 1
                )));
            }
            seen.insert(key, (n + 1, value.trim().to_string()));
        }
        let mut o = Overrides::default();
        for (key, (line, value)) in seen {
            let bad = |what: &str| {
                CliError::Usage(format!(
                    "config line {line}: `{key}` expects {what}, got `{value}`"
                ))
            };
            let real = || value.parse::<f64>().map_err(|_| bad("a number"));
            let count = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad("a non-negative integer"))
            };
            match key.as_str() {
                "lambda-m" => o.lambda_m = Some(real()?),
                "r0-m" => o.r0_m = Some(real()?),
                "r1-m" => o.r1_m = Some(real()?),
                "radius-m" => o.radius_m = Some(real()?),
                "eta" => o.eta = Some(real()?),
                "r-max-m" => o.r_max_m = Some(real()?),
                "points" => o.points = Some(count()?),
                "rel-tol" => o.rel_tol = Some(real()?),
                "max-panels" => o.max_panels = Some(count()?),
                "nodes-per-panel" => o.nodes_per_panel = Some(count()?),
                "acceleration" => o.acceleration = Some(value.clone()),
                "threads" => o.threads = Some(count()?),
                "output" => o.output = Some(PathBuf::from(&value)),
                "format" => o.format = Some(value.clone()),
                _ => unreachable!("key list checked above"),
            }
        }
        Ok(o)
    }

    pub fn from_file(path: &Path) -> CliResult<Overrides> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading config {}: {e}", path.display())))?;
        Overrides::parse_config(&text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CliError::Usage(format!(
                "unknown format `{other}` (expected csv or json)"
            ))),
        }
    }
}

/// Fully resolved settings for `profile` and `sweep`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub scenario: DiffractionScenario,
    /// Explicit grid half-width; `None` means one spot width `λ r1 / R`.
    pub r_max_m: Option<f64>,
    pub points: usize,
    pub quadrature: QuadratureSettings,
    pub threads: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

pub const DEFAULT_POINTS: usize = 401;

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl RunConfig {
    /// Applies `o` on top of the built-in defaults (the reference scenario).
    pub fn resolve(o: &Overrides) -> CliResult<RunConfig> {
        let base = DiffractionScenario::reference();
        let scenario = DiffractionScenario::new(
            o.lambda_m.unwrap_or(base.wavelength),
            o.r0_m.unwrap_or(base.source_distance),
            o.r1_m.unwrap_or(base.screen_distance),
            o.radius_m.unwrap_or(base.disc_radius),
            o.eta.unwrap_or(base.eta),
        )?;
        let defaults = QuadratureSettings::default();
        let quadrature = QuadratureSettings {
            rel_tol: o.rel_tol.unwrap_or(defaults.rel_tol),
            max_panels: o.max_panels.unwrap_or(defaults.max_panels),
            nodes_per_panel: o.nodes_per_panel.unwrap_or(defaults.nodes_per_panel),
            acceleration: match &o.acceleration {
                Some(s) => s.parse::<Acceleration>()?,
                None => defaults.acceleration,
            },
        };
        quadrature.validate()?;
        let points = o.points.unwrap_or(DEFAULT_POINTS);
        if points < 3 || points.is_multiple_of(2) {
            return Err(CliError::Usage(format!(
                "points must be odd and at least 3, got {points}"
            )));
        }
        if let Some(r) = o.r_max_m {
            if !(r.is_finite() && r > 0.0) {
                return Err(CliError::Usage(format!(
                    "r-max-m must be positive, got {r}"
                )));
            }
        }
        let threads = o.threads.unwrap_or_else(default_threads);
        if threads == 0 {
            return Err(CliError::Usage("threads must be at least 1".into()));
        }
        let format = match &o.format {
            Some(f) => f.parse()?,
            None => OutputFormat::Csv,
        };
        Ok(RunConfig {
            scenario,
            r_max_m: o.r_max_m,
            points,
            quadrature,
            threads,
            output: o.output.clone(),
            format,
        })
    }

    /// Grid half-width for `scenario`: the explicit value, else `λ r1 / R`.
    pub fn r_max_for(&self, scenario: &DiffractionScenario) -> CliResult<f64> {
        match self.r_max_m {
            Some(r) => Ok(r),
            None => Ok(arago_width(
                scenario.wavelength,
                scenario.screen_distance,
                scenario.disc_radius,
            )?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_merges() {
        let file = Overrides::parse_config(
            "# comment\nlambda-m = 2e-12\nradius_m=0.05 # trailing\npoints = 11\nthreads=2\n",
        )
        .unwrap();
        assert_eq!(file.lambda_m, Some(2e-12));
        assert_eq!(file.radius_m, Some(0.05));
        let flags = Overrides {
            points: Some(21),
            ..Overrides::default()
        };
        let merged = file.merge(flags);
        assert_eq!(merged.points, Some(21));
        assert_eq!(merged.lambda_m, Some(2e-12));
        let cfg = RunConfig::resolve(&merged).unwrap();
        assert_eq!(cfg.points, 21);
        assert_eq!(cfg.threads, 2);
        assert_eq!(cfg.scenario.disc_radius, 0.05);
        assert_eq!(cfg.scenario.eta, 0.002);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(Overrides::parse_config("speed = 3").is_err());
        assert!(Overrides::parse_config("points").is_err());
        assert!(Overrides::parse_config("points = many").is_err());
        let even = Overrides {
            points: Some(10),
            ..Overrides::default()
        };
        assert_eq!(RunConfig::resolve(&even).unwrap_err().exit_code(), 2);
        let zero_threads = Overrides {
            threads: Some(0),
            ..Overrides::default()
        };
        assert!(RunConfig::resolve(&zero_threads).is_err());
        let negative = Overrides {
            radius_m: Some(-1.0),
            ..Overrides::default()
        };
        assert_eq!(RunConfig::resolve(&negative).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn default_grid_is_one_spot_width() {
        let cfg = RunConfig::resolve(&Overrides::default()).unwrap();
        let r = cfg.r_max_for(&cfg.scenario).unwrap();
        assert!((r - 0.01).abs() < 1e-15);
        assert_eq!(cfg.points, 401);
    }
}
