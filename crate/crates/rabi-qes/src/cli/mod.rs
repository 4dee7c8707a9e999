//! `rabi-qes` command-line front end.
//!
//! Emits CSV tables or JSON documents for plotting and regression testing.
//! Exit codes: 0 success, 1 verification/computation failure, 2 usage or
//! validation error. Output for a fixed invocation is byte-identical across
//! runs; the only timestamp lives behind `verify --timestamp`.

mod output;

pub use output::fmt_real;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::config::Config;
use crate::oracle::{converged_spectrum, Error as OracleError};
use crate::qes::{
    qes_energy, terminating_series, wavefunctions, Error as QesError, ModelParams, QesIndex,
};
use crate::solver::juddian_points;
use crate::verify::{run_suite, Suite};
use crate::Error;

use output::csv_document;

#[derive(Debug, Parser)]
#[command(
    name = "rabi-qes",
    version,
    about = "Quasi-exact (Juddian) spectra of the quantum Rabi model, \
             cross-checked by brute-force diagonalization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Emit a JSON document instead of CSV.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the exact integer coefficients of the level-n condition
    /// polynomial in u = kappa^2, w = mu^2.
    ConditionPoly {
        /// Level index, 1..=12.
        #[arg(long)]
        n: u32,
    },
    /// Locate and oracle-verify every Juddian crossing of level n at fixed
    /// splitting mu.
    Juddian {
        /// Level index, 1..=12.
        #[arg(long)]
        n: u32,
        /// Half level splitting, must be positive.
        #[arg(long)]
        mu: f64,
        /// Oracle spectrum convergence tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Converged low spectrum of the truncated Hamiltonian at one coupling
    /// point.
    Spectrum {
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        mu: f64,
        /// Number of lowest eigenvalues to converge.
        #[arg(long, default_value_t = 8)]
        levels: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sweep kappa over a grid and tabulate the low spectrum next to the
    /// quasi-exact baselines n - kappa^2.
    Scan {
        #[arg(long)]
        mu: f64,
        #[arg(long, value_name = "A")]
        kappa_min: f64,
        #[arg(long, value_name = "B")]
        kappa_max: f64,
        /// Grid size, at least 2.
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Comma-separated level indices for baseline columns.
        #[arg(long, value_delimiter = ',', value_name = "n1,n2,...")]
        baselines: Vec<u32>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sample both eigenfunction components and their equation residuals at
    /// one Juddian crossing.
    Wavefunction {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        mu: f64,
        /// Crossing index in ascending kappa order.
        #[arg(long)]
        root: usize,
        /// Number of sample points over z in [-2 kappa, 2 kappa].
        #[arg(long)]
        samples: usize,
    },
    /// Run a named verification suite and report JSON results.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Attach a wall-clock timestamp to the report metadata.
        #[arg(long)]
        timestamp: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Golden,
    Oracle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Golden => Suite::Golden,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match &e {
            Error::Qes(
                QesError::IndexOutOfRange { .. }
                | QesError::InvalidMu(_)
                | QesError::InvalidKappa(_),
            ) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<QesError> for CliError {
    fn from(e: QesError) -> Self {
        Error::from(e).into()
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        Error::from(e).into()
    }
}

fn config_from_env() -> Config {
    let mut config = Config::default();
    if let Ok(raw) = std::env::var("RABI_QES_NMAX") {
        match raw.parse::<usize>() {
            Ok(cap) if cap >= 1 => config.oracle_max_n = cap,
            _ => eprintln!("warning: ignoring invalid RABI_QES_NMAX={raw}"),
        }
    }
    config
}

/// Parse arguments, dispatch, and map every outcome to the exit-code
/// contract.
pub fn run() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let config = config_from_env();
    match dispatch(cli, &config) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Failed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn dispatch(cli: Cli, config: &Config) -> Result<ExitCode, CliError> {
    let (content, code) = match cli.command {
        Command::ConditionPoly { n } => {
            (cmd_condition_poly(n, cli.json, config)?, ExitCode::SUCCESS)
        }
        Command::Juddian { n, mu, tol } => (
            cmd_juddian(n, mu, tol, cli.json, config)?,
            ExitCode::SUCCESS,
        ),
        Command::Spectrum {
            kappa,
            mu,
            levels,
            tol,
        } => (
            cmd_spectrum(kappa, mu, levels, tol, cli.json, config)?,
            ExitCode::SUCCESS,
        ),
        Command::Scan {
            mu,
            kappa_min,
            kappa_max,
            steps,
            levels,
            baselines,
            tol,
        } => (
            cmd_scan(
                mu, kappa_min, kappa_max, steps, levels, &baselines, tol, cli.json, config,
            )?,
            ExitCode::SUCCESS,
        ),
        Command::Wavefunction {
            n,
            mu,
            root,
            samples,
        } => (
            cmd_wavefunction(n, mu, root, samples, cli.json, config)?,
            ExitCode::SUCCESS,
        ),
        Command::Verify { suite, timestamp } => {
            let (content, ok) = cmd_verify(suite.into(), timestamp, config);
            (
                content,
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            )
        }
    };
    emit(&cli.out, &content)?;
    Ok(code)
}

fn require_positive(flag: &str, value: f64) -> Result<(), CliError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--{flag} must be positive, got {value}"
        )))
    }
}

fn pretty_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    s.push('\n');
    s
}

fn cmd_condition_poly(n: u32, json: bool, config: &Config) -> Result<String, CliError> {
    let poly =
        crate::qes::condition_polynomial_with_max(QesIndex::new(n), config.condition_poly_max)?;
    if json {
        let terms: Vec<serde_json::Value> = poly
            .terms_desc()
            .map(|(du, dw, c)| {
                debug_assert!(c.is_integer());
                serde_json::json!({
                    "du": du,
                    "dw": dw,
                    "coeff": c.numer().to_string(),
                })
            })
            .collect();
        Ok(pretty_json(&serde_json::json!({ "n": n, "terms": terms })))
    } else {
        let rows: Vec<Vec<String>> = poly
            .terms_desc()
            .map(|(du, dw, c)| vec![du.to_string(), dw.to_string(), c.numer().to_string()])
            .collect();
        Ok(csv_document(&["du", "dw", "coeff"], &rows))
    }
}

fn cmd_juddian(n: u32, mu: f64, tol: f64, json: bool, config: &Config) -> Result<String, CliError> {
    require_positive("mu", mu)?;
    require_positive("tol", tol)?;
    let mut config = config.clone();
    config.oracle_tol = tol;
    let points = juddian_points(QesIndex::new(n), mu, &config)?;
    if points.is_empty() {
        eprintln!("note: no positive-kappa crossings for n={n}, mu={mu}");
    }
    if json {
        let rows: Vec<serde_json::Value> = points
            .iter()
            .map(|p| {
                serde_json::json!({
                    "n": p.n.get(),
                    "kappa": p.kappa,
                    "mu": p.mu,
                    "energy": p.energy,
                    "oracle_gap": p.oracle_gap,
                    "multiplicity": p.multiplicity,
                    "n_used": p.n_used,
                })
            })
            .collect();
        Ok(pretty_json(&serde_json::json!({ "points": rows })))
    } else {
        let rows: Vec<Vec<String>> = points
            .iter()
            .map(|p| {
                vec![
                    p.n.get().to_string(),
                    fmt_real(p.kappa),
                    fmt_real(p.mu),
                    fmt_real(p.energy),
                    fmt_real(p.oracle_gap),
                    p.multiplicity.to_string(),
                    p.n_used.to_string(),
                ]
            })
            .collect();
        Ok(csv_document(
            &[
                "n",
                "kappa",
                "mu",
                "energy",
                "oracle_gap",
                "multiplicity",
                "n_used",
            ],
            &rows,
        ))
    }
}

fn cmd_spectrum(
    kappa: f64,
    mu: f64,
    levels: usize,
    tol: f64,
    json: bool,
    config: &Config,
) -> Result<String, CliError> {
    if levels < 1 {
        return Err(CliError::Usage("--levels must be at least 1".into()));
    }
    require_positive("tol", tol)?;
    let params = ModelParams::new(kappa, mu)?;
    let spectrum = converged_spectrum(&params, levels, tol, config)?;
    if json {
        Ok(pretty_json(&serde_json::json!({
            "kappa": kappa,
            "mu": mu,
            "tol": tol,
            "n_used": spectrum.n_used,
            "converged_count": spectrum.converged_count,
            "eigenvalues": spectrum.eigenvalues,
        })))
    } else {
        let rows: Vec<Vec<String>> = spectrum
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(i, &e)| vec![i.to_string(), fmt_real(e)])
            .collect();
        Ok(csv_document(&["level", "eigenvalue"], &rows))
    }
}

struct ScanRow {
    kappa: f64,
    eigenvalues: Vec<f64>,
    baselines: Vec<f64>,
    converged: bool,
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    mu: f64,
    kappa_min: f64,
    kappa_max: f64,
    steps: usize,
    levels: usize,
    baselines: &[u32],
    tol: f64,
    json: bool,
    config: &Config,
) -> Result<String, CliError> {
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if kappa_min < 0.0 {
        return Err(CliError::Usage(format!(
            "--kappa-min must be nonnegative, got {kappa_min}"
        )));
    }
    if kappa_max.partial_cmp(&kappa_min) != Some(std::cmp::Ordering::Greater) {
        return Err(CliError::Usage(format!(
            "--kappa-max must exceed --kappa-min, got {kappa_max} <= {kappa_min}"
        )));
    }
    if mu < 0.0 {
        return Err(CliError::Usage(format!(
            "--mu must be nonnegative, got {mu}"
        )));
    }
    if levels < 1 {
        return Err(CliError::Usage("--levels must be at least 1".into()));
    }
    require_positive("tol", tol)?;

    // Grid points are independent; evaluate them in parallel and keep the
    // output ordered by grid index.
    let grid: Vec<f64> = (0..steps)
        .map(|i| kappa_min + (kappa_max - kappa_min) * i as f64 / (steps - 1) as f64)
        .collect();
    let rows: Vec<ScanRow> = grid
        .par_iter()
        .map(|&kappa| {
            let baseline_values: Vec<f64> = baselines
                .iter()
                .map(|&nb| {
                    let params = ModelParams::new(kappa, mu).expect("validated above");
                    qes_energy(QesIndex::new(nb), &params)
                })
                .collect();
            let params = ModelParams::new(kappa, mu).expect("validated above");
            match converged_spectrum(&params, levels, tol, config) {
                Ok(s) => ScanRow {
                    kappa,
                    eigenvalues: s.eigenvalues,
                    baselines: baseline_values,
                    converged: true,
                },
                Err(OracleError::TruncationExceeded { best, .. }) => {
                    let mut eigenvalues = best.map(|b| b.eigenvalues).unwrap_or_default();
                    eigenvalues.resize(levels, f64::NAN);
                    ScanRow {
                        kappa,
                        eigenvalues,
                        baselines: baseline_values,
                        converged: false,
                    }
                }
                Err(_) => ScanRow {
                    kappa,
                    eigenvalues: vec![f64::NAN; levels],
                    baselines: baseline_values,
                    converged: false,
                },
            }
        })
        .collect();

    let warnings = rows.iter().filter(|r| !r.converged).count();
    if warnings > 0 {
        eprintln!("warning: {warnings} of {steps} grid points did not converge");
    }

    if json {
        let json_rows: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "kappa": r.kappa,
                    "eigenvalues": r.eigenvalues,
                    "baselines": r.baselines,
                    "converged": r.converged,
                })
            })
            .collect();
        Ok(pretty_json(&serde_json::json!({
            "mu": mu,
            "baseline_levels": baselines,
            "rows": json_rows,
        })))
    } else {
        let mut header: Vec<String> = vec!["kappa".into()];
        header.extend((0..levels).map(|i| format!("eig{i}")));
        header.extend(baselines.iter().map(|n| format!("qes_n{n}")));
        header.push("converged".into());
        let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
        let csv_rows: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                let mut cells = vec![fmt_real(r.kappa)];
                cells.extend(r.eigenvalues.iter().map(|&e| fmt_real(e)));
                cells.extend(r.baselines.iter().map(|&b| fmt_real(b)));
                cells.push(if r.converged { "1".into() } else { "0".into() });
                cells
            })
            .collect();
        Ok(csv_document(&header_refs, &csv_rows))
    }
}

fn cmd_wavefunction(
    n: u32,
    mu: f64,
    root: usize,
    samples: usize,
    json: bool,
    config: &Config,
) -> Result<String, CliError> {
    require_positive("mu", mu)?;
    if samples < 1 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let points = juddian_points(QesIndex::new(n), mu, config)?;
    let point = points.get(root).ok_or_else(|| {
        CliError::Usage(format!(
            "--root {root} out of range: {} crossing(s) exist for n={n}, mu={mu}",
            points.len()
        ))
    })?;
    let params = ModelParams::new(point.kappa, point.mu)?;
    let series = terminating_series(QesIndex::new(n), &params, config)?;
    let pair = wavefunctions(&series)?;

    let kappa = params.kappa();
    let zs: Vec<f64> = if samples == 1 {
        vec![0.0]
    } else {
        (0..samples)
            .map(|i| -2.0 * kappa + 4.0 * kappa * i as f64 / (samples - 1) as f64)
            .collect()
    };

    if json {
        let rows: Vec<serde_json::Value> = zs
            .iter()
            .map(|&z| {
                serde_json::json!({
                    "z": z,
                    "psi1": pair.psi1(z),
                    "psi2": pair.psi2(z),
                    "residual1": pair.residual_first(z),
                    "residual2": pair.residual_second(z),
                })
            })
            .collect();
        Ok(pretty_json(&serde_json::json!({
            "n": n,
            "kappa": kappa,
            "mu": mu,
            "energy": series.energy,
            "rows": rows,
        })))
    } else {
        let rows: Vec<Vec<String>> = zs
            .iter()
            .map(|&z| {
                vec![
                    fmt_real(z),
                    fmt_real(pair.psi1(z)),
                    fmt_real(pair.psi2(z)),
                    fmt_real(pair.residual_first(z)),
                    fmt_real(pair.residual_second(z)),
                ]
            })
            .collect();
        Ok(csv_document(
            &["z", "psi1", "psi2", "residual1", "residual2"],
            &rows,
        ))
    }
}

fn cmd_verify(suite: Suite, timestamp: bool, config: &Config) -> (String, bool) {
    let mut report = run_suite(suite, config);
    if timestamp {
        let seconds = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        report.timestamp = Some(seconds.to_string());
    }
    let value = serde_json::to_value(&report).expect("report serializes");
    (pretty_json(&value), report.all_passed())
}
