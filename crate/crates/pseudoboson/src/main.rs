//! Thin command-line front end over the library's report builders.
//!
//! Exit codes: 0 all asserted tolerances met, 1 tolerance failure,
//! 2 input/domain error, 3 numerical convergence failure.

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use pseudoboson::error::Error;
use pseudoboson::report::{family_report, oracle_report, scan_csv, scan_report, verify_all_report};
use pseudoboson::tol::Tolerances;

#[derive(Parser)]
#[command(
    name = "pseudoboson",
    version,
    about = "Construct and verify two-parameter biorthogonal ladder-operator function families"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy, Default)]
struct TolArgs {
    /// Biorthonormality tolerance (n, m <= 12)
    #[arg(long)]
    tol_biorth: Option<f64>,
    /// Base ladder/eigenrelation tolerance, scaled by (1 + n^2)
    #[arg(long)]
    tol_ladder: Option<f64>,
    /// Determinant identity tolerance
    #[arg(long)]
    tol_determinant: Option<f64>,
    /// Allowed slack below 1 for the norm products d_n
    #[arg(long)]
    tol_riesz: Option<f64>,
    /// Hermite special-case tolerance
    #[arg(long)]
    tol_hermite: Option<f64>,
    /// Conjugation-identity residual tolerance
    #[arg(long)]
    tol_conjugation: Option<f64>,
    /// Single-constant relation tolerance
    #[arg(long)]
    tol_single_constant: Option<f64>,
    /// Intertwining residual tolerance
    #[arg(long)]
    tol_intertwining: Option<f64>,
    /// exp(M) exp(-M) self-check tolerance
    #[arg(long)]
    tol_expm: Option<f64>,
    /// Exact-moment vs quadrature tolerance
    #[arg(long)]
    tol_quadrature: Option<f64>,
}

impl TolArgs {
    fn resolve(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(v) = self.tol_biorth {
            t.biorth = v;
        }
        if let Some(v) = self.tol_ladder {
            t.ladder_base = v;
        }
        if let Some(v) = self.tol_determinant {
            t.determinant = v;
        }
        if let Some(v) = self.tol_riesz {
            t.riesz_slack = v;
        }
        if let Some(v) = self.tol_hermite {
            t.hermite_case = v;
        }
        if let Some(v) = self.tol_conjugation {
            t.conjugation = v;
        }
        if let Some(v) = self.tol_single_constant {
            t.single_constant = v;
        }
        if let Some(v) = self.tol_intertwining {
            t.intertwining = v;
        }
        if let Some(v) = self.tol_expm {
            t.expm_self = v;
        }
        if let Some(v) = self.tol_quadrature {
            t.quadrature = v;
        }
        t.from_env()
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family and run every family-level verification
    Family {
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta_im: f64,
        /// Highest constructed level
        #[arg(long, default_value_t = pseudoboson::family::DEFAULT_N_MAX)]
        nmax: usize,
        /// Write the JSON report here instead of stdout
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Classify an (alpha, eta) grid against the admissibility window
    Scan {
        /// Slice parameter(s) alpha with alpha^2 > 4 (repeatable)
        #[arg(long, required = true, allow_negative_numbers = true)]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = -0.4, allow_negative_numbers = true)]
        eta_min: f64,
        #[arg(long, default_value_t = 0.4, allow_negative_numbers = true)]
        eta_max: f64,
        #[arg(long, default_value_t = 81)]
        eta_steps: usize,
        /// Output format: csv (default) or json
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
    /// Run the truncated-matrix oracle at one parameter point
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta_im: f64,
        /// Truncation size D
        #[arg(long, default_value_t = pseudoboson::fock::DEFAULT_DIM)]
        dim: usize,
        /// Interior comparison block (must satisfy 3 * block <= dim)
        #[arg(long, default_value_t = pseudoboson::fock::DEFAULT_BLOCK)]
        block: usize,
        /// Levels checked by the single-constant relation
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Frequency scale of the two number operators
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        omega: f64,
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Families at the reference points, the alpha = 3 scan and the oracle
    VerifyAll {
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
        #[command(flatten)]
        tols: TolArgs,
    },
}

fn emit(text: &str, output: Option<&std::path::Path>) -> std::io::Result<()> {
    let body = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match output {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Domain(_)
        | Error::Degenerate(_)
        | Error::Inadmissible(_)
        | Error::Singular { .. } => 2,
        Error::Convergence(_) | Error::Tolerance(_) => 3,
    }
}

fn run() -> Result<bool, (i32, String)> {
    let cli = Cli::parse();
    let fail = |e: Error| (exit_code_for(&e), e.to_string());
    let io_fail = |e: std::io::Error| (2, format!("i/o error: {e}"));

    match cli.cmd {
        Cmd::Family {
            epsilon,
            eta_re,
            eta_im,
            nmax,
            output,
            tols,
        } => {
            let p = pseudoboson::make_parameters(epsilon, Complex64::new(eta_re, eta_im))
                .map_err(fail)?;
            let rep = family_report(&p, nmax, &tols.resolve()).map_err(fail)?;
            let text = serde_json::to_string_pretty(&rep).expect("report serializes");
            emit(&text, output.as_deref()).map_err(io_fail)?;
            Ok(rep.passed)
        }
        Cmd::Scan {
            alpha,
            eta_min,
            eta_max,
            eta_steps,
            format,
            output,
        } => {
            if eta_steps < 2 || eta_max.is_nan() || eta_min.is_nan() || eta_max <= eta_min {
                return Err((2, "need eta_max > eta_min and at least 2 steps".into()));
            }
            let step = (eta_max - eta_min) / (eta_steps - 1) as f64;
            let etas: Vec<f64> = (0..eta_steps).map(|i| eta_min + i as f64 * step).collect();
            let rep = scan_report(&alpha, &etas).map_err(fail)?;
            let text = match format.as_str() {
                "csv" => scan_csv(&rep),
                "json" => serde_json::to_string_pretty(&rep).expect("report serializes"),
                other => return Err((2, format!("unknown format '{other}' (csv|json)"))),
            };
            emit(&text, output.as_deref()).map_err(io_fail)?;
            Ok(rep.passed)
        }
        Cmd::Oracle {
            epsilon,
            eta_re,
            eta_im,
            dim,
            block,
            nmax,
            omega,
            output,
            tols,
        } => {
            let p = pseudoboson::make_parameters(epsilon, Complex64::new(eta_re, eta_im))
                .map_err(fail)?;
            let rep = oracle_report(&p, dim, block, nmax, omega, &tols.resolve()).map_err(fail)?;
            let text = serde_json::to_string_pretty(&rep).expect("report serializes");
            emit(&text, output.as_deref()).map_err(io_fail)?;
            Ok(rep.passed)
        }
        Cmd::VerifyAll { output, tols } => {
            let rep = verify_all_report(&tols.resolve()).map_err(fail)?;
            let text = serde_json::to_string_pretty(&rep).expect("report serializes");
            emit(&text, output.as_deref()).map_err(io_fail)?;
            Ok(rep.passed)
        }
    }
}

fn main() {
    match run() {
        Ok(true) => {}
        Ok(false) => {
            eprintln!("one or more asserted tolerances failed (see report)");
            std::process::exit(1);
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(code);
        }
    }
}
