use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use susy_nu_cli::commands::{
    cmd_figure, cmd_spectrum, cmd_verify, cmd_wavefunction, figure_csv, ledger_csv, spectrum_csv,
    to_json, wavefunction_csv, FigureData,
};
use susy_nu_cli::config::{Family, Method, OutputFormat, RunConfig, SignArg, UnitsPreset};

/// Spectral engine for trigonometric quantum wells: partner-potential
/// spectra computed three independent ways and cross-checked.
#[derive(Parser)]
#[command(name = "susy-nu", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Potential family.
    #[arg(long, value_enum, default_value = "stp")]
    potential: Family,

    /// Superpotential strength for the stp/scp families.
    #[arg(long = "A", default_value_t = 2.0)]
    strength: f64,

    /// Cotangent coefficient for the ptp family.
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    a: f64,

    /// Tangent coefficient for the ptp family.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    b: f64,

    /// Angular frequency of the trigonometric terms.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    alpha: f64,

    /// Partner branch.
    #[arg(long, value_enum, default_value = "minus")]
    sign: SignArg,

    /// Highest quantum number.
    #[arg(long = "n-max", default_value_t = 7)]
    n_max: usize,

    /// Solution methods to run.
    #[arg(long, value_enum, default_value = "all")]
    method: Method,

    /// Unit convention preset.
    #[arg(long, value_enum, env = "SUSY_NU_UNITS", default_value = "hbar2-eq-2m")]
    units: UnitsPreset,

    /// Eigensolver grid points (even, at least 32).
    #[arg(long, default_value_t = 4096)]
    grid: usize,

    /// Relative agreement tolerance for verification.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,

    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Output path (stdout when omitted; `verify` defaults to ledger.json).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Seed for the eigenvector inverse iteration.
    #[arg(long, default_value_t = susy_nu_core::oracle::DEFAULT_SEED)]
    seed: u64,
}

impl CommonArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            potential: self.potential,
            strength: self.strength,
            a: self.a,
            b: self.b,
            alpha: self.alpha,
            sign: self.sign,
            n_max: self.n_max,
            method: self.method,
            units: self.units,
            grid: self.grid,
            tol: self.tol,
            format: self.format,
            out: self.out.clone(),
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Bound-state energies by the requested methods.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Three-way spectrum verification plus the discrepancy ledger.
    ///
    /// Exit code 0 means the eigensolver, the quantization route, and (where
    /// a zero mode exists) the closed-form ladder agree within --tol for all
    /// n <= --n-max. Published-formula verdicts go to the ledger only.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Restrict to one family instead of all three.
        #[arg(long)]
        family: Option<Family>,
    },
    /// Data series behind one of the six published figures.
    Figure {
        /// Figure id, 1 through 6.
        id: u8,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Catalog wavefunction against the eigensolver's eigenvector.
    Wavefunction {
        /// Quantum number (at most 8).
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Published-formula discrepancy ledger without the verification gate.
    Ledger {
        #[command(flatten)]
        common: CommonArgs,
        /// Restrict to one family instead of all three.
        #[arg(long)]
        family: Option<Family>,
    },
}

fn write_output(config: &RunConfig, default_name: Option<&str>, content: &str) -> anyhow::Result<()> {
    let path = config.out.clone().or_else(|| default_name.map(PathBuf::from));
    match path {
        Some(p) => {
            std::fs::write(&p, content.as_bytes())?;
            eprintln!("wrote {}", p.display());
        }
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn families_in_scope(family: Option<Family>) -> Vec<Family> {
    match family {
        Some(f) => vec![f],
        None => vec![Family::Stp, Family::Scp, Family::Ptp],
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum { common } => {
            let config = common.config();
            if let Err(e) = config.validate() {
                eprintln!("{e}");
                return Ok(ExitCode::from(2));
            }
            let rows = cmd_spectrum(&config)?;
            let content = match config.format {
                OutputFormat::Csv => spectrum_csv(&rows),
                OutputFormat::Json => to_json(&rows)?,
            };
            write_output(&config, None, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, family } => {
            let config = common.config();
            if let Err(e) = config.validate() {
                eprintln!("{e}");
                return Ok(ExitCode::from(2));
            }
            let report = cmd_verify(&config, &families_in_scope(family), config.tol)?;
            for f in &report.families {
                println!(
                    "{}: {} (checked {}; max relative deviation {:.3e}{})",
                    f.potential,
                    if f.agreed { "agree" } else { "MISMATCH" },
                    f.pairs_checked.join(", "),
                    f.max_relative_deviation,
                    if f.hierarchy_available { "" } else { "; no zero mode, closed-form ladder skipped" },
                );
            }
            let content = match config.format {
                OutputFormat::Csv => ledger_csv(&report.ledger),
                OutputFormat::Json => to_json(&report.ledger)?,
            };
            let default_name = match config.format {
                OutputFormat::Csv => "ledger.csv",
                OutputFormat::Json => "ledger.json",
            };
            write_output(&config, Some(default_name), &content)?;
            if report.all_agreed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Figure { id, common } => {
            let config = common.config();
            if let Err(e) = config.validate() {
                eprintln!("{e}");
                return Ok(ExitCode::from(2));
            }
            if !(1..=6).contains(&id) {
                eprintln!("unknown figure id {id}; expected 1..=6");
                return Ok(ExitCode::from(2));
            }
            let data = cmd_figure(&config, id)?;
            let content = match config.format {
                OutputFormat::Csv => figure_csv(&data),
                OutputFormat::Json => match &data {
                    FigureData::Energies(rows) => to_json(rows)?,
                    FigureData::Waves(rows) => to_json(rows)?,
                },
            };
            write_output(&config, None, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Wavefunction { n, common } => {
            let config = common.config();
            if let Err(e) = config.validate() {
                eprintln!("{e}");
                return Ok(ExitCode::from(2));
            }
            if n > 8 {
                eprintln!("wavefunction index {n} exceeds the supported maximum of 8");
                return Ok(ExitCode::from(2));
            }
            let rows = cmd_wavefunction(&config, n)?;
            let content = match config.format {
                OutputFormat::Csv => wavefunction_csv(&rows),
                OutputFormat::Json => to_json(&rows)?,
            };
            write_output(&config, None, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ledger { common, family } => {
            let config = common.config();
            if let Err(e) = config.validate() {
                eprintln!("{e}");
                return Ok(ExitCode::from(2));
            }
            let report = cmd_verify(&config, &families_in_scope(family), config.tol)?;
            let content = match config.format {
                OutputFormat::Csv => ledger_csv(&report.ledger),
                OutputFormat::Json => to_json(&report.ledger)?,
            };
            write_output(&config, None, &content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            // A closed stdout (e.g. piping into `head`) is not a failure.
            if let Some(io) = err.downcast_ref::<std::io::Error>() {
                if io.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
