//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (divergent level,
//! parameters outside the modified-theory range, non-positive Lamb
//! discrepancy), 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_curve, lamb_discrepancy, linspace, LambData, REFERENCE_CUTOFF_BOUNDS_M};
use crate::deformation::DeformationParams;
use crate::error::Error;
use crate::hydrogen::QuantumLevel;
use crate::oracle::{
    assemble_correction, assemble_ordinal, verify_expectation_set_with, verify_smeared_with, QuadratureSpec,
    VerificationCase, VerificationReport, EXPECTATION_REL_TOL, SMEARED_REL_TOL,
};
use crate::spectrum::{
    auto_method, correction, correction_1s, correction_1s_xi_eta, correction_2s, correction_2s_xi_eta,
    perturbation_expectation, smeared_coulomb_1s, smeared_coulomb_1s_pi_ab, Method,
};
use crate::units::{EnergyUnit, EnergyValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

const TOOL: &str = concat!("deform-hydrogen ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Parser)]
#[command(name = "deform-hydrogen", version, about = "Hydrogen level shifts in deformed space with a minimal length")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First-order shift of a single level.
    Correction(CorrectionArgs),
    /// 1s or 2s shift over a ξ grid for one or more η values (CSV).
    Figure(FigureArgs),
    /// Minimal-length bound from the 1s Lamb-shift discrepancy over an η grid.
    Bound(BoundArgs),
    /// Check every closed form against quadrature.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Auto,
    Ordinal,
    Modified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "1s")]
    OneS,
    #[value(name = "2s")]
    TwoS,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Dimensionless minimal length Δx_min/a (with --eta).
    #[arg(long, allow_negative_numbers = true)]
    pub xi: Option<f64>,
    /// Deformation mix β/(β+β′) (with --xi).
    #[arg(long, allow_negative_numbers = true, value_parser = parse_fraction)]
    pub eta: Option<f64>,
    /// β in atomic units (with --beta-prime).
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// β′ in atomic units (with --beta).
    #[arg(long = "beta-prime", allow_negative_numbers = true)]
    pub beta_prime: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (written atomically); stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorrectionArgs {
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Space dimension.
    #[arg(long = "D", default_value_t = 3)]
    pub dim: u32,
    #[command(flatten)]
    pub params: ParamArgs,
    /// hartree, MHz, eV or E0.
    #[arg(long, default_value = "hartree", value_parser = parse_unit)]
    pub units: EnergyUnit,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodChoice,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_enum, default_value = "1s")]
    pub which: Which,
    #[arg(long = "xi-min", default_value_t = 0.0, allow_negative_numbers = true)]
    pub xi_min: f64,
    #[arg(long = "xi-max", default_value_t = 0.1, allow_negative_numbers = true)]
    pub xi_max: f64,
    /// Number of ξ nodes (endpoints included).
    #[arg(long = "xi-steps", default_value_t = 101)]
    pub xi_steps: usize,
    /// Comma-separated η values; fractions such as 1/3 are accepted.
    #[arg(long = "eta-list", default_value = "1/3,1")]
    pub eta_list: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long = "eta-min", default_value = "1/3", value_parser = parse_fraction)]
    pub eta_min: f64,
    #[arg(long = "eta-max", default_value = "1", value_parser = parse_fraction)]
    pub eta_max: f64,
    #[arg(long = "eta-steps", default_value_t = 101)]
    pub eta_steps: usize,
    /// Explicit η grid (overrides --eta-min/--eta-max/--eta-steps).
    #[arg(long = "eta-list")]
    pub eta_list: Option<String>,
    /// Measured 1s Lamb shift in MHz.
    #[arg(long = "lamb-exp", env = "DEFORM_LAMB_EXP_MHZ", default_value_t = LambData::default().l_exp_mhz)]
    pub lamb_exp: f64,
    /// Computed 1s Lamb shift in MHz.
    #[arg(long = "lamb-theor", env = "DEFORM_LAMB_THEOR_MHZ", default_value_t = LambData::default().l_theor_mhz)]
    pub lamb_theor: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Override every closed-form pass threshold.
    #[arg(long = "rel-tol")]
    pub rel_tol: Option<f64>,
    /// Evaluate the smeared Coulomb term with the πab coefficient instead of
    /// πab/4 (checks that the suite notices).
    #[arg(long = "inject-wrong-prefactor", hide = true)]
    pub inject_wrong_prefactor: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Failure of a command, tagged with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Self {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {err}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergent { .. } => Self {
                code: EXIT_VERIFY_FAILED,
                message: e.to_string(),
            },
            _ => Self::domain(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Correction(a) => cmd_correction(a),
        Command::Figure(a) => cmd_figure(a),
        Command::Bound(a) => cmd_bound(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn parse_unit(s: &str) -> Result<EnergyUnit, String> {
    s.parse()
}

/// A float or a simple fraction `p/q`.
pub fn parse_fraction(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| format!("bad number '{s}'"))?;
            let den: f64 = den.trim().parse().map_err(|_| format!("bad number '{s}'"))?;
            if den == 0.0 {
                return Err(format!("zero denominator in '{s}'"));
            }
            num / den
        }
        None => s.parse().map_err(|_| format!("bad number '{s}'"))?,
    };
    if !value.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(value)
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_fraction)
        .collect()
}

/// Shortest round-trip decimal, switching to exponent form for very large or
/// very small magnitudes.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Writes `content` to `path` through a sibling temporary file and a rename,
/// or to stdout when no path is given.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    let Some(path) = path else {
        let mut out = io::stdout().lock();
        return out
            .write_all(content.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| CliError::io(Path::new("<stdout>"), e));
    };
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::usage(format!("--out {} is not a file path", path.display())))?;
    let mut tmp_name = OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let result = fs::write(&tmp, content).and_then(|_| fs::rename(&tmp, path));
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::io(path, e));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum ParamInput {
    XiEta(f64, f64),
    Beta(f64, f64),
}

fn param_input(p: &ParamArgs) -> Result<ParamInput, CliError> {
    match (p.xi, p.eta, p.beta, p.beta_prime) {
        (Some(xi), Some(eta), None, None) => Ok(ParamInput::XiEta(xi, eta)),
        (None, None, Some(b), Some(bp)) => Ok(ParamInput::Beta(b, bp)),
        (None, None, None, None) => Err(CliError::usage(
            "supply deformation parameters as --xi/--eta or --beta/--beta-prime",
        )),
        _ => Err(CliError::usage(
            "give exactly one complete parameter family: --xi with --eta, or --beta with --beta-prime",
        )),
    }
}

#[derive(Debug, Serialize)]
struct CorrectionRecord {
    level: String,
    n: u32,
    l: u32,
    #[serde(rename = "D")]
    dim: u32,
    method: Method,
    beta: f64,
    beta_prime: f64,
    xi: f64,
    eta: Option<f64>,
    value: f64,
    units: EnergyUnit,
    value_hartree: f64,
    ambiguous_normalization: bool,
    warnings: Vec<String>,
}

fn cmd_correction(a: &CorrectionArgs) -> Result<i32, CliError> {
    let level = QuantumLevel::new(a.n, a.l, a.dim).map_err(|e| CliError::usage(e.to_string()))?;
    let input = param_input(&a.params)?;
    let params = match input {
        ParamInput::XiEta(xi, eta) => DeformationParams::from_xi_eta(xi, eta)?,
        ParamInput::Beta(b, bp) => DeformationParams::from_beta(b, bp)?,
    };
    let method = match a.method {
        MethodChoice::Auto => auto_method(&level),
        MethodChoice::Ordinal => Method::Ordinal,
        MethodChoice::Modified => Method::Modified,
    };

    let mut warnings = Vec::new();
    if method == Method::Modified && !crate::deformation::slevel_domain_check(&params) {
        return Err(CliError::domain(format!(
            "2β < β′ outside modified-theory domain (β = {}, β′ = {}, eta = {})",
            params.beta(),
            params.beta_prime(),
            params.eta().map_or("undefined".to_string(), fmt_num),
        )));
    }
    let result = correction(&level, &params, method)?;
    let hartree = match (method, input) {
        // keep the (ξ, η) closed form when the user spoke in those terms
        (Method::Modified, ParamInput::XiEta(xi, eta)) => {
            if level.n() == 1 {
                correction_1s_xi_eta(xi, eta)?.magnitude
            } else {
                correction_2s_xi_eta(xi, eta)?.magnitude
            }
        }
        _ => result.value.magnitude,
    };
    if result.ambiguous_normalization {
        warnings.push(format!(
            "ordinal formula evaluated with 1/n^3; for D = {} the normalization 1/n_bar^3 is equally plausible",
            level.dim()
        ));
    }
    if matches!(input, ParamInput::Beta(..)) {
        warnings.push("beta and beta_prime are in atomic units (Bohr radius / hbar squared)".into());
    }

    let value = EnergyValue::hartree(hartree).value_in(a.units);
    let record = CorrectionRecord {
        level: level.label(),
        n: level.n(),
        l: level.l(),
        dim: level.dim(),
        method,
        beta: params.beta(),
        beta_prime: params.beta_prime(),
        xi: params.xi(),
        eta: params.eta(),
        value,
        units: a.units,
        value_hartree: hartree,
        ambiguous_normalization: result.ambiguous_normalization,
        warnings,
    };
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&record).expect("record serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = format!("# {TOOL} correction\n");
            for w in &record.warnings {
                let _ = writeln!(s, "# warning: {w}");
            }
            s.push_str("level,n,l,D,method,beta,beta_prime,xi,eta,value,units,ambiguous_normalization\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{:?},{},{},{},{},{},{},{}",
                record.level,
                record.n,
                record.l,
                record.dim,
                record.method,
                fmt_num(record.beta),
                fmt_num(record.beta_prime),
                fmt_num(record.xi),
                record.eta.map(fmt_num).unwrap_or_default(),
                fmt_num(record.value),
                record.units,
                record.ambiguous_normalization
            );
            s
        }
    };
    write_output(a.output.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct FigureRow {
    xi: f64,
    eta: f64,
    delta_e_over_e0: f64,
}

fn cmd_figure(a: &FigureArgs) -> Result<i32, CliError> {
    let mut etas = parse_list(&a.eta_list).map_err(CliError::usage)?;
    if etas.is_empty() {
        return Err(CliError::usage("--eta-list must name at least one eta value"));
    }
    if a.xi_steps < 2 {
        return Err(CliError::usage("--xi-steps must be at least 2"));
    }
    if !(a.xi_max > a.xi_min) {
        return Err(CliError::usage("--xi-max must exceed --xi-min"));
    }
    if a.xi_min < 0.0 {
        return Err(CliError::domain(format!("xi = {} must be >= 0", a.xi_min)));
    }
    etas.sort_by(f64::total_cmp);
    etas.dedup();
    let xis = linspace(a.xi_min, a.xi_max, a.xi_steps);
    let which = match a.which {
        Which::OneS => "1s",
        Which::TwoS => "2s",
    };

    let mut rows = Vec::with_capacity(etas.len() * xis.len());
    for &eta in &etas {
        for &xi in &xis {
            let e = match a.which {
                Which::OneS => correction_1s_xi_eta(xi, eta)?,
                Which::TwoS => correction_2s_xi_eta(xi, eta)?,
            };
            rows.push(FigureRow {
                xi,
                eta,
                delta_e_over_e0: e.value_in(EnergyUnit::E0Relative),
            });
        }
    }

    let text = match a.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "# {TOOL} figure which={which}");
            let _ = writeln!(s, "# first-order shift of the {which} level in units of E0 = e^2/2a");
            let _ = writeln!(
                s,
                "# xi in [{}, {}] ({} nodes); eta = {}",
                fmt_num(a.xi_min),
                fmt_num(a.xi_max),
                a.xi_steps,
                etas.iter().map(|e| fmt_num(*e)).collect::<Vec<_>>().join(";")
            );
            s.push_str("xi,eta,delta_e_over_e0\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{}", fmt_num(r.xi), fmt_num(r.eta), fmt_num(r.delta_e_over_e0));
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "which": which,
                "units": "E0Relative",
                "rows": rows,
            }))
            .expect("rows serialize");
            s.push('\n');
            s
        }
    };
    write_output(a.output.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn cmd_bound(a: &BoundArgs) -> Result<i32, CliError> {
    let grid = match &a.eta_list {
        Some(list) => parse_list(list).map_err(CliError::usage)?,
        None => {
            if a.eta_steps < 2 {
                return Err(CliError::usage("--eta-steps must be at least 2"));
            }
            if !(a.eta_max > a.eta_min) {
                return Err(CliError::usage("--eta-max must exceed --eta-min"));
            }
            linspace(a.eta_min, a.eta_max, a.eta_steps)
        }
    };
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(CliError::usage("eta grid must be strictly increasing"));
    }
    let mut data = LambData::default();
    if a.lamb_exp != data.l_exp_mhz || a.lamb_theor != data.l_theor_mhz {
        data = LambData::new(a.lamb_exp, a.lamb_theor);
    }
    let discrepancy = lamb_discrepancy(&data)?;
    let samples = bound_curve(&grid, &data)?;
    let any_failed = samples.iter().any(|s| s.outcome.is_err());

    let text = match a.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "# {TOOL} bound");
            let _ = writeln!(
                s,
                "# lamb_exp_mhz={} lamb_theor_mhz={} discrepancy_mhz={}",
                fmt_num(data.l_exp_mhz),
                fmt_num(data.l_theor_mhz),
                fmt_num(discrepancy)
            );
            if let (Some(se), Some(st)) = (data.l_exp_sigma_mhz, data.l_theor_sigma_mhz) {
                let _ = writeln!(s, "# quoted uncertainties (not propagated): exp +-{se} MHz, theor +-{st} MHz");
            }
            let _ = writeln!(
                s,
                "# earlier cut-off estimates, for comparison only: {}",
                REFERENCE_CUTOFF_BOUNDS_M
                    .iter()
                    .map(|(eta, dx)| format!("eta={} dx_min={} m", fmt_num(*eta), fmt_num(*dx)))
                    .collect::<Vec<_>>()
                    .join("; ")
            );
            s.push_str(if any_failed { "eta,xi,dx_min_m,error\n" } else { "eta,xi,dx_min_m\n" });
            for sample in &samples {
                match &sample.outcome {
                    Ok(p) if any_failed => {
                        let _ = writeln!(s, "{},{},{},", fmt_num(p.eta), fmt_num(p.xi), fmt_num(p.dx_min_m));
                    }
                    Ok(p) => {
                        let _ = writeln!(s, "{},{},{}", fmt_num(p.eta), fmt_num(p.xi), fmt_num(p.dx_min_m));
                    }
                    Err(e) => {
                        let msg = e.to_string().replace(',', ";");
                        let _ = writeln!(s, "{},,,{msg}", fmt_num(sample.eta));
                    }
                }
            }
            s
        }
        Format::Json => {
            let points: Vec<_> = samples
                .iter()
                .map(|sample| match &sample.outcome {
                    Ok(p) => serde_json::json!({"eta": p.eta, "xi": p.xi, "dx_min_m": p.dx_min_m}),
                    Err(e) => serde_json::json!({"eta": sample.eta, "error": e.to_string()}),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "lamb": data,
                "discrepancy_mhz": discrepancy,
                "points": points,
            }))
            .expect("bound output serializes");
            s.push('\n');
            s
        }
    };
    write_output(a.output.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

/// b values used by the smeared Coulomb check.
pub const SMEARED_B_GRID: [f64; 5] = [1e-4, 1e-2, 0.1, 0.5, 1.0];
/// Levels whose expectation values are checked against quadrature.
pub const CHECKED_LEVELS: [(u32, u32); 5] = [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)];
/// ξ ladder for the closed-form vs exact-perturbation convergence test.
pub const RATIO_XI: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// Runs the complete verification suite.
pub fn verification_suite(rel_tol: Option<f64>, inject_wrong_prefactor: bool) -> Result<VerificationReport, Error> {
    let spec = QuadratureSpec::default();
    let smeared_tol = rel_tol.unwrap_or(SMEARED_REL_TOL);
    let exp_tol = rel_tol.unwrap_or(EXPECTATION_REL_TOL);
    let mut reports = Vec::new();

    let smeared_report = if inject_wrong_prefactor {
        verify_smeared_with(&SMEARED_B_GRID, smeared_coulomb_1s_pi_ab, &spec, smeared_tol)?
    } else {
        verify_smeared_with(&SMEARED_B_GRID, smeared_coulomb_1s, &spec, smeared_tol)?
    };
    reports.push(smeared_report);

    for (n, l) in CHECKED_LEVELS {
        let level = QuantumLevel::new(n, l, 3)?;
        reports.push(verify_expectation_set_with(&level, &spec, exp_tol)?);
    }

    // exact first-order ⟨V⟩ (Struve/Bessel closed forms) against quadrature
    let mut cases = Vec::new();
    for level in [QuantumLevel::ground(), QuantumLevel::two_s()] {
        for (xi, eta) in [(0.3, 1.0), (0.1, 0.5), (0.05, 0.8), (0.1, 1.0 / 3.0)] {
            let p = DeformationParams::from_xi_eta(xi, eta)?;
            let exact = perturbation_expectation(&level, &p)?;
            let oracle = assemble_correction(&level, &p)?;
            cases.push(VerificationCase::compare(
                format!("{} <V> exact, xi={xi}, eta={eta:.6}", level.label()),
                exact,
                oracle,
                exp_tol,
            ));
        }
    }
    reports.push(VerificationReport::new(cases));

    // small-b closed forms approach the quadrature value as ξ → 0
    for level in [QuantumLevel::ground(), QuantumLevel::two_s()] {
        for eta in [1.0, 0.5] {
            let mut cases = Vec::new();
            let mut previous = f64::INFINITY;
            for xi in RATIO_XI {
                let p = DeformationParams::from_xi_eta(xi, eta)?;
                let closed = if level.n() == 1 {
                    correction_1s(&p)?
                } else {
                    correction_2s(&p)?
                };
                let oracle = assemble_correction(&level, &p)?;
                let mut case = VerificationCase::compare(
                    format!("{} closed form -> <V> as xi -> 0, xi={xi:e}, eta={eta}", level.label()),
                    closed.value.magnitude,
                    oracle,
                    f64::INFINITY,
                );
                case.pass = case.rel_err < previous;
                previous = case.rel_err;
                cases.push(case);
            }
            reports.push(VerificationReport::new(cases));
        }
    }

    // ordinary formula against the term-by-term assembly, l ≥ 1
    let mut cases = Vec::new();
    for (n, l) in [(2, 1), (3, 1), (3, 2)] {
        let level = QuantumLevel::new(n, l, 3)?;
        for (beta, beta_prime) in [(1e-6, 1e-6), (1e-6, 0.0), (2e-6, 7e-6)] {
            let p = DeformationParams::from_beta(beta, beta_prime)?;
            let closed = crate::spectrum::correction_ordinal(&level, &p)?;
            let oracle = assemble_ordinal(&level, &p)?;
            cases.push(VerificationCase::compare(
                format!("{} ordinal, beta={beta:e}, beta'={beta_prime:e}", level.label()),
                closed.value.magnitude,
                oracle,
                exp_tol,
            ));
        }
    }
    reports.push(VerificationReport::new(cases));

    Ok(VerificationReport::merge(reports))
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32, CliError> {
    if let Some(t) = a.rel_tol {
        if !(t > 0.0) {
            return Err(CliError::usage("--rel-tol must be positive"));
        }
    }
    let report = verification_suite(a.rel_tol, a.inject_wrong_prefactor)?;
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    write_output(a.output.out.as_deref(), &text)?;
    if report.overall_pass {
        Ok(EXIT_OK)
    } else {
        for c in report.failures() {
            eprintln!("FAIL {}: closed form {} vs oracle {} (rel err {:e})", c.name, c.closed_form, c.oracle, c.rel_err);
        }
        Ok(EXIT_VERIFY_FAILED)
    }
}
