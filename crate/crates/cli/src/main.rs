use std::path::PathBuf;
use std::process::ExitCode;

use arago::Profile;
use arago_cli::commands::{
    cmd_constants, cmd_fwhm, cmd_profile, cmd_scenario, cmd_sweep, SweepParam, SweepScale,
    SweepSpec,
};
use arago_cli::config::{OutputFormat, Overrides, RunConfig};
use arago_cli::formats::{constants_json, report_json, to_json_text, write_atomic};
use arago_cli::{CliError, CliResult};
use clap::{Args, Parser, Subcommand};

/// Arago-spot diffraction profiles and solar-neutrino estimates.
#[derive(Parser, Debug)]
#[command(name = "arago", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the relative intensity profile and write it as CSV.
    Profile(RunArgs),
    /// Report the FWHM of the central peak of a profile CSV.
    Fwhm {
        input: PathBuf,
        #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
        format: String,
    },
    /// Run the chained neutrino estimate and print it as JSON.
    Scenario(ReportArgs),
    /// FWHM versus one scenario parameter, one profile per row.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        /// lambda_m, radius_m, r1_m or eta_per_m2.
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value = "log")]
        scale: String,
    },
    /// Dump a constants profile as JSON.
    Constants(ReportArgs),
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[arg(long, default_value = "paper", value_parser = ["paper", "codata"])]
    profile: String,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "json", value_parser = ["json"])]
    format: String,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    lambda_m: Option<f64>,
    #[arg(long)]
    r0_m: Option<f64>,
    #[arg(long)]
    r1_m: Option<f64>,
    #[arg(long)]
    radius_m: Option<f64>,
    /// Convergence factor, 1/m².
    #[arg(long)]
    eta: Option<f64>,
    /// Grid half-width; defaults to one spot width λ r1 / R.
    #[arg(long)]
    r_max_m: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    max_panels: Option<usize>,
    #[arg(long)]
    nodes_per_panel: Option<usize>,
    /// none or alternating.
    #[arg(long)]
    acceleration: Option<String>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
    /// File of `key = value` lines using the flag names; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl RunArgs {
    fn resolve(&self) -> CliResult<RunConfig> {
        let flags = Overrides {
            lambda_m: self.lambda_m,
            r0_m: self.r0_m,
            r1_m: self.r1_m,
            radius_m: self.radius_m,
            eta: self.eta,
            r_max_m: self.r_max_m,
            points: self.points,
            rel_tol: self.rel_tol,
            max_panels: self.max_panels,
            nodes_per_panel: self.nodes_per_panel,
            acceleration: self.acceleration.clone(),
            threads: self.threads,
            output: self.output.clone(),
            format: self.format.clone(),
        };
        let file = match &self.config {
            Some(path) => Overrides::from_file(path)?,
            None => Overrides::default(),
        };
        let cfg = RunConfig::resolve(&file.merge(flags))?;
        if cfg.format != OutputFormat::Csv {
            return Err(CliError::Usage("profile and sweep only write csv".into()));
        }
        Ok(cfg)
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => write_atomic(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Profile(args) => {
            let cfg = args.resolve()?;
            let result = cmd_profile(&cfg)?;
            match &cfg.output {
                Some(path) => {
                    write_atomic(path, &result.csv)?;
                    println!("{}", result.summary());
                }
                None => {
                    print!("{}", result.csv);
                    eprintln!("{}", result.summary());
                }
            }
        }
        Command::Fwhm { input, format } => {
            let width = cmd_fwhm(&input)?;
            if format == "json" {
                println!("{}", serde_json::json!({ "fwhm_m": width }));
            } else {
                println!("{width:.5e}");
            }
        }
        Command::Scenario(args) => {
            let profile: Profile = args.profile.parse()?;
            let report = cmd_scenario(profile)?;
            emit(args.output.as_ref(), &to_json_text(&report_json(&report)))?;
        }
        Command::Sweep {
            run,
            param,
            from,
            to,
            count,
            scale,
        } => {
            let cfg = run.resolve()?;
            let spec = SweepSpec {
                param: param.parse::<SweepParam>()?,
                from,
                to,
                count,
                scale: scale.parse::<SweepScale>()?,
            };
            let result = cmd_sweep(&cfg, &spec)?;
            match &cfg.output {
                Some(path) => {
                    write_atomic(path, &result.csv)?;
                    println!(
                        "rows={} elapsed_s={:.3}",
                        result.rows.len(),
                        result.elapsed.as_secs_f64()
                    );
                }
                None => print!("{}", result.csv),
            }
        }
        Command::Constants(args) => {
            let profile: Profile = args.profile.parse()?;
            emit(
                args.output.as_ref(),
                &to_json_text(&constants_json(&cmd_constants(profile))),
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arago: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
