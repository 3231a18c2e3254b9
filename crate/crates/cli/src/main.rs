//! `chsh-spectra`: spectra of one-shifted involution pairs from the command line.

mod format;
mod input;

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chsh_spectra::analysis::{pair_sum_spectrum, rho_commutator_direct, sweep};
use chsh_spectra::operators::{build_sum_truncation, PairFamily};
use chsh_spectra::par::map_slice;
use chsh_spectra::theory::{rho_from_lambda, select_lambda0, LimitSet};
use chsh_spectra::tridiag::{tridiag_eigenvalues_with, SpectrumSample};
use chsh_spectra::validation::{run_checks, Relation, ValidateOptions};
use chsh_spectra::Exec;

use format::{fmt_g, Cell, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] chsh_spectra::Error),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Compute(_) => 2,
            CliError::Output { .. } => 3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "chsh-spectra", version, about = "Spectra and commutator norms of one-shifted involution pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues of the order-n truncation of A + B at a single angle.
    Spectrum(RunArgs),
    /// Largest eigenvalue and spectral radius of [A, B] over an angle grid.
    Rho(RunArgs),
    /// Spectra or spectral radii over an angle grid.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Mode::Spectrum)]
        mode: Mode,
    },
    /// Runs the numerical checks and writes a JSON report.
    Validate(ValidateArgs),
    /// Data behind one of the four figures.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        number: u8,
        #[arg(long, value_enum, default_value_t = Panel::Left)]
        panel: Panel,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = FamilyKind::Constant)]
    family: FamilyKind,
    /// Angle of the leading block of A, or of every block for `two-constant`.
    /// Accepts expressions (`pi/2`) and grids (`0.1:0.1:3.1`).
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    /// Tail angle; a value or a `start:step:stop` grid.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Truncation order; odd values are raised by one.
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Pair file for `--family general-file`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long, default_value_t = ValidateOptions::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = ValidateOptions::default().trials)]
    trials: usize,
    /// Shifts one check input so the run must fail.
    #[arg(long, hide = true)]
    perturb: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyKind {
    Constant,
    #[value(name = "eq3")]
    Eq3,
    #[value(name = "eq5")]
    Eq5,
    TwoConstant,
    GeneralFile,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Spectrum,
    Rho,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Panel {
    Left,
    Right,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Spectrum(args) => {
            let table = spectrum_table(&args)?;
            emit(&table, &args.output)?;
        }
        Command::Rho(args) => {
            let table = sweep_table(&args, Mode::Rho)?;
            emit(&table, &args.output)?;
        }
        Command::Sweep { run, mode } => {
            let table = sweep_table(&run, mode)?;
            emit(&table, &run.output)?;
        }
        Command::Validate(args) => return validate(&args),
        Command::Figure { number, panel, output } => {
            let table = figure_table(number, panel)?;
            emit(&table, &output)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Output { path: path.display().to_string(), source })
        }
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Output { path: "<stdout>".into(), source }),
    }
}

fn emit(table: &Table, output: &OutputArgs) -> Result<(), CliError> {
    let text = match output.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    write_output(&text, output.out.as_ref())
}

fn even_order(n: usize) -> Result<usize, CliError> {
    let n = if n % 2 == 1 {
        eprintln!("warning: truncation order must be even; using n = {}", n + 1);
        n + 1
    } else {
        n
    };
    if n < 4 {
        return Err(CliError::Usage(format!("truncation order must be at least 4, got {n}")));
    }
    Ok(n)
}

fn omega_values(args: &RunArgs) -> Result<Vec<f64>, CliError> {
    match (args.family, &args.omega) {
        (FamilyKind::Eq3, None) => Ok(vec![FRAC_PI_2]),
        (FamilyKind::Eq3 | FamilyKind::TwoConstant, Some(s)) => input::parse_grid(s),
        (FamilyKind::TwoConstant, None) => Err(CliError::Usage("--omega is required for --family two-constant".into())),
        (_, Some(_)) => Err(CliError::Usage("--omega applies only to the eq3 and two-constant families".into())),
        (_, None) => Ok(vec![f64::NAN]),
    }
}

fn theta_values(args: &RunArgs) -> Result<Vec<f64>, CliError> {
    let s = args.theta.as_deref().ok_or_else(|| CliError::Usage("--theta is required".into()))?;
    input::parse_grid(s)
}

fn family(kind: FamilyKind, omega: f64, theta: f64) -> chsh_spectra::Result<PairFamily> {
    match kind {
        FamilyKind::Constant => PairFamily::constant(theta),
        FamilyKind::Eq3 => PairFamily::leading_block(omega, theta),
        FamilyKind::Eq5 => PairFamily::two_block_perturbation(theta),
        FamilyKind::TwoConstant => PairFamily::two_constant(omega, theta),
        FamilyKind::GeneralFile => unreachable!("general-file pairs are not families"),
    }
}

fn truncation_spectrum(kind: FamilyKind, omega: f64, theta: f64, n: usize) -> chsh_spectra::Result<SpectrumSample> {
    let m = build_sum_truncation(&family(kind, omega, theta)?, n)?;
    Ok(tridiag_eigenvalues_with(&m, m.default_tol(), Exec::Sequential))
}

fn general_pair(args: &RunArgs) -> Result<chsh_spectra::operators::GeneralPair, CliError> {
    let path =
        args.input.as_ref().ok_or_else(|| CliError::Usage("--input is required for --family general-file".into()))?;
    input::read_pair_file(path)
}

fn spectrum_table(args: &RunArgs) -> Result<Table, CliError> {
    let values = if args.family == FamilyKind::GeneralFile {
        pair_sum_spectrum(&general_pair(args)?)
    } else {
        let n = even_order(args.n)?;
        let (omegas, thetas) = (omega_values(args)?, theta_values(args)?);
        if omegas.len() != 1 || thetas.len() != 1 {
            return Err(CliError::Usage("spectrum takes a single angle; use sweep for grids".into()));
        }
        truncation_spectrum(args.family, omegas[0], thetas[0], n)?
    };
    let mut table = Table::new(["index", "eigenvalue"]);
    for (i, &v) in values.values().iter().enumerate() {
        table.push(vec![Cell::Int(i + 1), Cell::Num(v)]);
    }
    Ok(table)
}

fn sweep_table(args: &RunArgs, mode: Mode) -> Result<Table, CliError> {
    if args.family == FamilyKind::GeneralFile {
        return match mode {
            Mode::Rho => general_rho_table(&general_pair(args)?),
            Mode::Spectrum => Err(CliError::Usage("sweep needs a family with a tail angle".into())),
        };
    }
    let n = even_order(args.n)?;
    let (omegas, thetas) = (omega_values(args)?, theta_values(args)?);
    let with_omega = omegas.len() > 1;
    let mut columns: Vec<String> = Vec::new();
    if with_omega {
        columns.push("omega".into());
    }
    columns.push("theta".into());
    match mode {
        Mode::Spectrum => columns.extend((1..=n).map(|i| format!("eig_{i}"))),
        Mode::Rho => columns.extend(["lambda_max", "rho_numeric", "rho_closed"].map(String::from)),
    }
    let mut table = Table::new(columns);
    for &omega in &omegas {
        let prefix: Vec<Cell> = if with_omega { vec![Cell::Num(omega)] } else { Vec::new() };
        match mode {
            Mode::Spectrum => {
                let spectra = map_slice(Exec::default(), &thetas, |&t| truncation_spectrum(args.family, omega, t, n));
                for (&theta, spectrum) in thetas.iter().zip(spectra) {
                    let mut row = prefix.clone();
                    row.push(Cell::Num(theta));
                    row.extend(spectrum?.values().iter().map(|&v| Cell::Num(v)));
                    table.push(row);
                }
            }
            Mode::Rho => {
                for r in sweep(&thetas, n, |t| family(args.family, omega, t), Exec::default())? {
                    let mut row = prefix.clone();
                    row.extend([
                        Cell::Num(r.theta),
                        r.eigenvalues.max().into(),
                        Cell::Num(r.rho_numeric),
                        r.rho_closed.into(),
                    ]);
                    table.push(row);
                }
            }
        }
    }
    Ok(table)
}

fn general_rho_table(pair: &chsh_spectra::operators::GeneralPair) -> Result<Table, CliError> {
    let spectrum = pair_sum_spectrum(pair);
    let lambda_max = spectrum.max();
    let points = LimitSet::from_points(spectrum.into_values())?;
    let rho = rho_from_lambda(select_lambda0(&points)?)?;
    let mut table = Table::new(["lambda_max", "rho_numeric", "rho_commutator"]);
    table.push(vec![lambda_max.into(), Cell::Num(rho), Cell::Num(rho_commutator_direct(pair))]);
    Ok(table)
}

/// `sign(lambda) * sqrt(lambda^2 (4 - lambda^2))`: the eigenvalue of `i[A, B]`
/// paired with the eigenvalue `lambda` of `A + B`.
fn i_commutator_eig(lambda: f64) -> f64 {
    let l2 = lambda * lambda;
    lambda.signum() * (l2 * (4.0 - l2)).max(0.0).sqrt()
}

fn caption_grid() -> Vec<f64> {
    chsh_spectra::validation::tenths_grid()
}

fn long_spectrum_table(kind: FamilyKind, omega: f64, n: usize) -> Result<Table, CliError> {
    let thetas = caption_grid();
    let spectra = map_slice(Exec::default(), &thetas, |&t| truncation_spectrum(kind, omega, t, n));
    let mut table = Table::new(["theta", "index", "eigenvalue", "i_commutator_eig"]);
    for (&theta, spectrum) in thetas.iter().zip(spectra) {
        for (i, &v) in spectrum?.values().iter().enumerate() {
            table.push(vec![Cell::Num(theta), Cell::Int(i + 1), Cell::Num(v), Cell::Num(i_commutator_eig(v))]);
        }
    }
    Ok(table)
}

fn figure_table(number: u8, panel: Panel) -> Result<Table, CliError> {
    let grid = "0.1:0.1:3.1".to_string();
    match (number, panel) {
        (1, Panel::Left) => long_spectrum_table(FamilyKind::Eq3, FRAC_PI_2, 10),
        (1, Panel::Right) => long_spectrum_table(FamilyKind::Eq3, FRAC_PI_2, 600),
        (2, _) => {
            let args = RunArgs {
                family: FamilyKind::Eq3,
                omega: (panel == Panel::Right).then(|| grid.clone()),
                theta: Some(grid),
                n: 100,
                input: None,
                output: OutputArgs { out: None, format: Format::Csv },
            };
            sweep_table(&args, Mode::Rho)
        }
        (3, _) => long_spectrum_table(FamilyKind::Eq5, f64::NAN, 100),
        (4, Panel::Left) => long_spectrum_table(FamilyKind::TwoConstant, 0.3, 200),
        (4, Panel::Right) => long_spectrum_table(FamilyKind::TwoConstant, 2.4, 200),
        _ => Err(CliError::Usage(format!("no figure {number}"))),
    }
}

fn validate(args: &ValidateArgs) -> Result<ExitCode, CliError> {
    let opts = ValidateOptions { seed: args.seed, trials: args.trials, perturb: args.perturb };
    let checks = run_checks(&opts)?;
    let all_pass = checks.iter().all(|c| c.pass);
    let entries: Vec<_> = checks
        .iter()
        .map(|c| {
            let relation = match c.relation {
                Relation::Near => "near",
                Relation::AtMost => "at_most",
                Relation::Above => "above",
            };
            json!({
                "name": c.name,
                "expected": fmt_g(c.expected),
                "observed": fmt_g(c.observed),
                "tolerance": fmt_g(c.tolerance),
                "relation": relation,
                "pass": c.pass,
            })
        })
        .collect();
    let report = json!({ "seed": args.seed, "trials": args.trials, "pass": all_pass, "checks": entries });
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    write_output(&text, args.out.as_ref())?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    eprintln!("validate: {} of {} checks passed", checks.len() - failed, checks.len());
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
