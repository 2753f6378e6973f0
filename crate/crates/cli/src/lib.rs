//! Command-line front end for `pauliwalk-core`: `walk run`, `walk verify` and
//! `walk compare`.

pub mod args;
pub mod checks;
pub mod config;
mod error;
pub mod output;

use std::io::Write;

use pauliwalk_core::analysis::{distribution, max_abs_diff, normalization_error, Distribution};
use pauliwalk_core::grover::grover_evolve;
use pauliwalk_core::recursion::{grover_recursion, two_state_recursion, CoordinateMap, GroverRecursionVariant};
use pauliwalk_core::{evolve, LatticeKind};

use crate::args::{Command, CompareArgs, Format, RunArgs, VerifyArgs};
use crate::checks::{check_names, run_checks, Group, Report, CHECKS};
use crate::config::{RunConfig, Walk};
use crate::output::{OracleOutcome, OutputDigest, RunManifest};

pub use error::{CliError, Result};

/// Largest tolerated `|Σp − 1|` before a run is rejected.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

pub fn execute(command: Command) -> Result<()> {
    match command {
        Command::Run(args) => run(&args),
        Command::Verify(args) => {
            let report = verify(&args)?;
            let failed = report.failed();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::ChecksFailed(failed))
            }
        }
        Command::Compare(args) => compare(&args).map(|_| ()),
    }
}

pub fn simulate(config: &RunConfig) -> Result<Distribution> {
    Ok(match &config.walk {
        Walk::TwoState(c) => distribution(&evolve(c)?),
        Walk::Grover { steps } => grover_evolve(*steps),
    })
}

fn coordinate_names(config: &RunConfig) -> &'static [&'static str] {
    match &config.walk {
        Walk::TwoState(c) => c.lattice.kind().coordinate_names(),
        Walk::Grover { .. } => LatticeKind::Square.coordinate_names(),
    }
}

/// Recursion oracle for the coinless square walk and the Grover walk; `None`
/// for configurations without one.
fn oracle_check(config: &RunConfig, d: &Distribution) -> Option<OracleOutcome> {
    let steps = config.steps();
    let (name, reference) = match &config.walk {
        Walk::Grover { .. } => (
            "grover-recursion",
            grover_recursion(steps, GroverRecursionVariant::IndexConsistent)
                .distribution(steps, CoordinateMap::IDENTITY),
        ),
        Walk::TwoState(c)
            if c.lattice.kind() == LatticeKind::Square
                && c.thetas.iter().all(|&t| t == 0.0)
                && c.initial_position.coords().iter().all(|&x| x == 0) =>
        {
            let swap = CoordinateMap { swap: true, negate_x: false, negate_z: false };
            ("two-state-recursion", two_state_recursion(steps, c.initial_spin).distribution(steps, swap))
        }
        Walk::TwoState(_) => return None,
    };
    let diff = max_abs_diff(d, &reference);
    Some(OracleOutcome { oracle: name.into(), max_abs_diff: diff, passed: diff < 1e-10 })
}

pub fn run(args: &RunArgs) -> Result<()> {
    let config = RunConfig::from_args(args)?;
    let d = simulate(&config)?;
    let error = normalization_error(&d);
    if error.is_nan() || error > NORMALIZATION_TOLERANCE {
        return Err(CliError::Normalization(error));
    }
    let oracle = if args.oracle_check {
        let outcome = oracle_check(&config, &d);
        if outcome.is_none() {
            eprintln!("walk: no oracle for this configuration; --oracle-check skipped");
        }
        outcome
    } else {
        None
    };
    let columns = coordinate_names(&config);
    let csv = output::render_csv(&d, columns);
    let mut manifest = RunManifest {
        tool: "walk",
        version: env!("CARGO_PKG_VERSION"),
        config: config.echo(),
        sites: d.len(),
        total_probability: d.total(),
        distribution_sha256: output::sha256_hex(csv.as_bytes()),
        oracle: oracle.clone(),
        outputs: Vec::new(),
    };
    let body = match args.format {
        Format::Csv => csv,
        Format::Json => output::render_json(&d, columns, &manifest),
    };
    match &args.out {
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
        Some(path) => {
            output::write_file(path, &body)?;
            if args.format == Format::Csv {
                manifest.outputs.push(OutputDigest {
                    path: path.file_name().unwrap_or_default().to_string_lossy().into_owned(),
                    sha256: output::sha256_hex(body.as_bytes()),
                });
                let mut text = serde_json::to_string_pretty(&manifest).expect("serializable");
                text.push('\n');
                output::write_file(&output::manifest_path(path), &text)?;
            }
        }
    }
    match oracle {
        Some(o) if !o.passed => Err(CliError::Oracle(format!("{} max abs diff {:e}", o.oracle, o.max_abs_diff))),
        _ => Ok(()),
    }
}

/// Resolves `--check`/group flags into check names, in suite order.
pub fn select_checks(args: &VerifyArgs) -> Result<Vec<&'static str>> {
    if !args.checks.is_empty() {
        return args
            .checks
            .iter()
            .map(|name| {
                check_names().find(|n| n == name).ok_or_else(|| {
                    CliError::Config(format!(
                        "unknown check {name:?}; known checks: {}",
                        check_names().collect::<Vec<_>>().join(", ")
                    ))
                })
            })
            .collect();
    }
    let any_group = args.oracle_check || args.hamiltonian_check;
    Ok(CHECKS
        .iter()
        .filter(|(_, group)| {
            !any_group
                || (args.oracle_check && *group == Group::Oracle)
                || (args.hamiltonian_check && *group == Group::Hamiltonian)
        })
        .map(|(n, _)| *n)
        .collect())
}

pub fn verify(args: &VerifyArgs) -> Result<Report> {
    if args.degenerate_tolerance.is_nan() || args.degenerate_tolerance < 0.0 {
        return Err(CliError::Config("--degenerate-tolerance must be >= 0".into()));
    }
    let names = select_checks(args)?;
    let report = run_checks(&names, args.degenerate_tolerance);
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    if let Some(path) = &args.out {
        output::write_file(path, &text)?;
    }
    print!("{text}");
    Ok(report)
}

pub fn compare(args: &CompareArgs) -> Result<f64> {
    let a = output::parse_csv(&args.a, &output::read_file(&args.a)?)?;
    let b = output::parse_csv(&args.b, &output::read_file(&args.b)?)?;
    if a.dim() != b.dim() {
        return Err(CliError::Config(format!("dimension mismatch: {} vs {}", a.dim(), b.dim())));
    }
    let diff = max_abs_diff(&a, &b);
    println!(
        "{}",
        serde_json::json!({ "max_abs_diff": diff, "tolerance": args.tolerance, "match": diff < args.tolerance })
    );
    if diff < args.tolerance {
        Ok(diff)
    } else {
        Err(CliError::Mismatch(diff))
    }
}
