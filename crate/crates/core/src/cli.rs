//! Command-line front end for the `mcg` binary.
//!
//! Exit codes: 0 ok, 1 counterexample found (or a failed internal check), 2 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::calibration::{Calibration, Sign};
use crate::campaign::{self, OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::meyer::tau_report;
use crate::qp1::ProjectiveRational;
use crate::stabilize::{annulus, cap};
use crate::surface::{surjectivity_witness, Catalog, GeneratorSpec, SurfaceModel};
use crate::wall::{pants_branch_sign, pants_triple, PantsTripleSetup, WallTriple};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_CALIBRATION_FILE: &str = "mcg-calibration.json";

#[derive(Debug, Parser)]
#[command(name = "mcg", version, about = "Class function m, Meyer cocycle and Wall signature on M_{g,2}")]
pub struct Cli {
    /// JSON file holding {"twist": ±1, "arc": ±1, "tau": ±1}.
    #[arg(long, global = true, env = "MCG_CALIBRATION")]
    pub calibration: Option<PathBuf>,
    /// Override the twist handedness sign.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eps_twist: Option<i64>,
    /// Override the arc pairing sign.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eps_arc: Option<i64>,
    /// Override the Meyer cocycle orientation sign.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eps_tau: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the class function m.
    #[command(subcommand)]
    M(MCommand),
    /// Print the capped and annulus-stabilized symplectic images of a word.
    Stabilize(WordArgs),
    /// Meyer cocycle values.
    #[command(subcommand)]
    Tau(TauCommand),
    /// Seeded randomized verification campaigns.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Score all eight sign assignments and store the winner.
    Calibrate {
        #[arg(long, default_value = DEFAULT_CALIBRATION_FILE)]
        out: PathBuf,
        /// Print the report without writing the calibration file.
        #[arg(long)]
        report_only: bool,
    },
    /// Emit per-pair quantities over a sampled corpus.
    Table {
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wall's non-additivity signature.
    #[command(subcommand)]
    Wall(WallCommand),
}

#[derive(Debug, Subcommand)]
pub enum MCommand {
    /// m of a word, as {"m":[p,q],"sign":s}.
    Eval(WordArgs),
    /// A word realizing a target value [p:q].
    Witness {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        target: ProjectiveRational,
    },
}

#[derive(Debug, Subcommand)]
pub enum TauCommand {
    Eval {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        word_a: Word,
        #[arg(long, allow_hyphen_values = true)]
        word_b: Word,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// tilde_tau(u,v) = sign m(u) + sign m(v) + sign m((uv)^-1).
    Cobound(Sampling),
    /// QP1 monoid laws.
    Qp1 {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, env = "MCG_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Wall signature of the pants configuration against its branch table.
    Wall {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, env = "MCG_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Alternate decompositions tried per triple.
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WallCommand {
    /// Signature of a triple read from JSON {omega, a, b, c}; bases are given as rows.
    Triple {
        #[arg(long)]
        file: PathBuf,
    },
    /// Wall signature of the pants configuration against sign(m1+m2+m3).
    Pants {
        #[arg(long, num_args = 3, allow_hyphen_values = true)]
        m: Vec<ProjectiveRational>,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub genus: usize,
    /// JSON array of extra generators {name, class, handedness}.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub word: Word,
}

#[derive(Debug, Args)]
pub struct Sampling {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, env = "MCG_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,
}

#[derive(Debug, Deserialize)]
struct TripleFile {
    omega: Mat,
    a: Mat,
    b: Mat,
    c: Mat,
}

#[derive(Serialize)]
struct PantsComparison {
    m: [ProjectiveRational; 3],
    sum: ProjectiveRational,
    wall_signature: i64,
    dim_w: usize,
    branch_table: i64,
    agree: bool,
}

impl Cli {
    pub fn resolved_calibration(&self) -> Result<Calibration> {
        let mut cal = match &self.calibration {
            Some(path) => serde_json::from_str(&fs::read_to_string(path)?)?,
            None => Calibration::CALIBRATED,
        };
        if let Some(v) = self.eps_twist {
            cal.twist = Sign::try_from(v)?;
        }
        if let Some(v) = self.eps_arc {
            cal.arc = Sign::try_from(v)?;
        }
        if let Some(v) = self.eps_tau {
            cal.tau = Sign::try_from(v)?;
        }
        Ok(cal)
    }
}

fn custom_generators(path: Option<&Path>) -> Result<Vec<GeneratorSpec>> {
    match path {
        Some(p) => Ok(serde_json::from_str(&fs::read_to_string(p)?)?),
        None => Ok(Vec::new()),
    }
}

fn catalog(model: &ModelArgs, cal: Calibration) -> Result<Catalog> {
    Catalog::standard(SurfaceModel::new(model.genus, cal)).with_custom(&custom_generators(model.catalog.as_deref())?)
}

fn run_config(s: &Sampling, cal: Calibration) -> Result<RunConfig> {
    Ok(RunConfig {
        calibration: cal,
        custom_generators: custom_generators(s.model.catalog.as_deref())?,
        ..RunConfig::new(s.model.genus, s.seed, s.samples, s.max_len)
    })
}

fn print_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Executes a parsed command, writing its report to `out`; returns the exit code.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<i32> {
    let cal = cli.resolved_calibration()?;
    match &cli.command {
        Command::M(MCommand::Eval(args)) => {
            let m = catalog(&args.model, cal)?.evaluate(&args.word)?.class_function_m()?;
            print_json(out, &json!({ "m": m, "sign": m.sign() }))?;
        }
        Command::M(MCommand::Witness { model, target }) => {
            let catalog = catalog(model, cal)?;
            let word = surjectivity_witness(target, &catalog)?;
            let m = catalog.evaluate(&word)?.class_function_m()?;
            print_json(out, &json!({ "target": target, "word": word, "m": m }))?;
            if &m != target {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Stabilize(args) => {
            let rep = catalog(&args.model, cal)?.evaluate(&args.word)?;
            print_json(out, &json!({ "cap": cap(&rep)?, "annulus": annulus(&rep)? }))?;
        }
        Command::Tau(TauCommand::Eval { model, word_a, word_b }) => {
            let catalog = catalog(model, cal)?;
            let report = tau_report(&catalog.evaluate(word_a)?, &catalog.evaluate(word_b)?)?;
            print_json(out, &report)?;
        }
        Command::Verify(VerifyCommand::Cobound(s)) => {
            let report = campaign::verify_cobound(&run_config(s, cal)?)?;
            writeln!(out, "{}", report.summary())?;
            if !report.ok() {
                print_json(out, &report.counterexamples)?;
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Verify(VerifyCommand::Qp1 { samples, seed }) => {
            let report = campaign::verify_qp1(*samples, *seed);
            return law_report(out, &report.summary(), report.check, &report.failures);
        }
        Command::Verify(VerifyCommand::Wall { samples, seed, trials }) => {
            let report = campaign::verify_wall(*samples, *seed, *trials)?;
            return law_report(out, &report.summary(), report.check, &report.failures);
        }
        Command::Calibrate { out: path, report_only } => {
            let report = campaign::calibrate()?;
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
            if !report_only {
                fs::write(path, serde_json::to_string_pretty(&report.winner)? + "\n")?;
            }
        }
        Command::Table { sampling, format, out: path } => {
            let rows = campaign::table(&run_config(sampling, cal)?)?;
            match path {
                Some(p) => campaign::write_table(&rows, *format, fs::File::create(p)?)?,
                None => campaign::write_table(&rows, *format, &mut *out)?,
            }
        }
        Command::Wall(WallCommand::Triple { file }) => {
            let t: TripleFile = serde_json::from_str(&fs::read_to_string(file)?)?;
            let n = t.omega.rows();
            let span = |m: &Mat| -> Result<Subspace> {
                if m.rows() > 0 && m.cols() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
                }
                Ok(Subspace::span(n, &m.row_vectors()))
            };
            let triple = WallTriple::new(t.omega.clone(), span(&t.b)?, span(&t.c)?, span(&t.a)?)?;
            print_json(out, &triple.wall_signature()?)?;
        }
        Command::Wall(WallCommand::Pants { m }) => {
            let setup = PantsTripleSetup::new(m[0].clone(), m[1].clone(), m[2].clone());
            let report = pants_triple(&setup).wall_signature()?;
            let branch_table = pants_branch_sign(&setup);
            let cmp = PantsComparison {
                sum: setup.m.iter().cloned().sum(),
                m: setup.m.clone(),
                wall_signature: report.signature,
                dim_w: report.dim_w,
                branch_table,
                agree: report.signature == branch_table,
            };
            print_json(out, &cmp)?;
            if !cmp.agree {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn law_report<W: Write>(out: &mut W, summary: &str, check: &str, failures: &[String]) -> Result<i32> {
    writeln!(out, "{check}: {summary}")?;
    for f in failures {
        writeln!(out, "  {f}")?;
    }
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

/// Exit code for an error that aborted a command.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownGenerator { .. }
        | Error::InvalidGenerator { .. }
        | Error::InvalidSign(_)
        | Error::ZeroProjective
        | Error::DimensionMismatch { .. }
        | Error::NotAntisymmetric
        | Error::NonLagrangian { .. }
        | Error::Unreachable { .. }
        | Error::Io(_)
        | Error::Json(_)
        | Error::Csv(_) => EXIT_USAGE,
        _ => EXIT_COUNTEREXAMPLE,
    }
}

/// Parses `args`, runs the command and reports errors on stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_exit_code(&e)
        }
    }
}
