//! Thin command-line front end over the library runners.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage/parse errors.

use clap::{Parser, Subcommand};
use jorlie::descriptor::{DeformationSpec, GrassmannSpec, GroupSpec, InstanceSpec, RingSel};
use jorlie::runner::{self, RunConfig, RunReport};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "jorlie", version, about = "Exact Jordan-theoretic deformation checks")]
struct Cli {
    /// Ring selector (q | gf:p | f64); must match the instance document.
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Seed for all sampled sweeps.
    #[arg(long, global = true, default_value_t = 17)]
    seed: u64,

    /// Sample count for seeded sweeps.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,

    /// Instance descriptor (JSON file).
    #[arg(long, global = true)]
    instance: Option<PathBuf>,

    /// Write the JSON report here as well as to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom suites of an instance.
    Validate,
    /// Deform an instance by an element or a structural transformation.
    Deform {
        /// Deformation document: {"kind": "element"|"alpha", "value": ...}.
        #[arg(long)]
        deformation: PathBuf,
    },
    /// Deformed-group sweeps for an associative matrix algebra.
    Group,
    /// Grassmannian orthocomplement and chart cross-checks.
    Grassmann,
    /// Numeric geometry: differentials and density invariance.
    Geometry {
        #[arg(long)]
        deformation: PathBuf,
    },
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn run() -> Result<RunReport, (String, u8)> {
    let cli = Cli::parse();
    let ring = match &cli.ring {
        Some(s) => Some(RingSel::parse(s).map_err(|e| (e.to_string(), 2))?),
        None => None,
    };
    let cfg = RunConfig {
        ring,
        seed: cli.seed,
        samples: cli.samples.max(1),
    };
    let instance_text = match &cli.instance {
        Some(p) => Some(read_file(p).map_err(|e| (e, 2))?),
        None => None,
    };
    let need_instance = || {
        instance_text
            .as_deref()
            .ok_or_else(|| ("--instance is required for this command".to_string(), 2))
    };

    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Validate => {
            let spec = InstanceSpec::from_json(need_instance()?).map_err(|e| (e.to_string(), 2))?;
            runner::cmd_validate(&spec, &cfg).map_err(|e| (e.to_string(), 2))?
        }
        Command::Deform { deformation } => {
            let spec = InstanceSpec::from_json(need_instance()?).map_err(|e| (e.to_string(), 2))?;
            let text = read_file(deformation).map_err(|e| (e, 2))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| (format!("deformation: {e}"), 2))?;
            let d = DeformationSpec::from_value(&value).map_err(|e| (e.to_string(), 2))?;
            runner::cmd_deform(&spec, &d, &cfg).map_err(|e| (e.to_string(), 2))?
        }
        Command::Group => {
            let spec = GroupSpec::from_json(need_instance()?).map_err(|e| (e.to_string(), 2))?;
            runner::cmd_group(&spec, &cfg).map_err(|e| (e.to_string(), 2))?
        }
        Command::Grassmann => {
            let spec =
                GrassmannSpec::from_json(need_instance()?).map_err(|e| (e.to_string(), 2))?;
            runner::cmd_grassmann(&spec, &cfg).map_err(|e| (e.to_string(), 2))?
        }
        Command::Geometry { deformation } => {
            let spec = InstanceSpec::from_json(need_instance()?).map_err(|e| (e.to_string(), 2))?;
            let text = read_file(deformation).map_err(|e| (e, 2))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| (format!("deformation: {e}"), 2))?;
            let d = DeformationSpec::from_value(&value).map_err(|e| (e.to_string(), 2))?;
            runner::cmd_geometry(&spec, &d, &cfg).map_err(|e| (e.to_string(), 2))?
        }
    };
    report.elapsed_ms = start.elapsed().as_millis();

    let rendered = report.to_json_string();
    print!("{rendered}");
    if let Some(out) = &cli.out {
        std::fs::write(out, &rendered).map_err(|e| (format!("cannot write report: {e}"), 2))?;
    }
    eprintln!("elapsed: {} ms", report.elapsed_ms);
    Ok(report)
}

fn main() -> ExitCode {
    match run() {
        Ok(report) if report.all_pass() => ExitCode::from(0),
        Ok(_) => ExitCode::from(1),
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
