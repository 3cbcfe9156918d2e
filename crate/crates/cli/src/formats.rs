//! On-disk formats: profile and sweep CSV, report and constants JSON.

use std::io::Write;
use std::path::Path;

use arago::fresnel::IntensityProfile;
use arago::pipeline::PipelineReport;
use arago::Constants;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

pub const PROFILE_HEADER: &str = "r_m,intensity_rel";

/// Scientific notation with 9 significant digits.
pub fn sci9(v: f64) -> String {
    format!("{v:.8e}")
}

pub fn profile_csv(profile: &IntensityProfile) -> String {
    let mut out = String::with_capacity(32 * (profile.len() + 1));
    out.push_str(PROFILE_HEADER);
    out.push('\n');
    for (r, i) in profile.radii.iter().zip(&profile.intensity_rel) {
        out.push_str(&sci9(*r));
        out.push(',');
        out.push_str(&sci9(*i));
        out.push('\n');
    }
    out
}

/// Parses the profile CSV. Errors name the offending 1-based line.
pub fn parse_profile_csv(text: &str) -> CliResult<IntensityProfile> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end_matches('\r') == PROFILE_HEADER => {}
        Some((_, h)) => {
            return Err(CliError::Usage(format!(
                "line 1: expected header `{PROFILE_HEADER}`, got `{h}`"
            )))
        }
        None => return Err(CliError::Usage("line 1: empty file".into())),
    }
    let mut radii = Vec::new();
    let mut values = Vec::new();
    for (n, raw) in lines {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let parse = |f: Option<&str>| -> Option<f64> { f?.trim().parse::<f64>().ok() };
        match (parse(fields.next()), parse(fields.next()), fields.next()) {
            (Some(r), Some(v), None) if r.is_finite() && v.is_finite() => {
                radii.push(r);
                values.push(v);
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "line {}: expected two finite numbers, got `{line}`",
                    n + 1
                )))
            }
        }
    }
    IntensityProfile::from_samples(radii, values).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn report_json(report: &PipelineReport) -> Value {
    let mut map = Map::new();
    for e in &report.entries {
        map.insert(e.name.to_string(), Value::from(e.value));
    }
    map.insert("profile".into(), Value::from(report.profile.name()));
    Value::Object(map)
}

pub fn constants_json(c: &Constants) -> Value {
    let mut map = Map::new();
    map.insert("profile".into(), Value::from(c.profile.name()));
    for (name, v) in c.entries() {
        map.insert(name.to_string(), Value::from(v));
    }
    Value::Object(map)
}

pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Writes via a temporary file in the destination directory and renames it
/// into place, so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Io(format!("writing {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let p =
            IntensityProfile::from_samples(vec![-0.01, 0.0, 0.01], vec![0.25, 1.0, 0.25]).unwrap();
        let text = profile_csv(&p);
        assert_eq!(
            text,
            "r_m,intensity_rel\n-1.00000000e-2,2.50000000e-1\n0.00000000e0,1.00000000e0\n1.00000000e-2,2.50000000e-1\n"
        );
        let back = parse_profile_csv(&text).unwrap();
        assert_eq!(back.radii, p.radii);
        assert_eq!(back.intensity_rel, p.intensity_rel);
    }

    #[test]
    fn malformed_csv_names_line() {
        let err = parse_profile_csv("r_m,intensity_rel\n0,1\n1,x\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(parse_profile_csv("r,i\n")
            .unwrap_err()
            .to_string()
            .contains("line 1"));
        assert!(parse_profile_csv("r_m,intensity_rel\n0,1,2\n").is_err());
        assert!(parse_profile_csv("r_m,intensity_rel\n1,1\n0,1\n").is_err());
    }

    #[test]
    fn report_keys() {
        let r = arago::pipeline::run_paper_pipeline(arago::Profile::Paper).unwrap();
        let v = report_json(&r);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), arago::pipeline::REPORT_FIELDS.len() + 1);
        assert_eq!(keys[0], "lambda_db_m");
        assert_eq!(v["profile"], "paper");
    }
}
