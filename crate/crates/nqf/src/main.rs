use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nqf::config::{default_max_degree, EngineConfig, Format};
use nqf::suite::{self, Engine};
use nqf::{dump, NqfError};
use nqf_core::{CartanType, Rational};

#[derive(Parser)]
#[command(name = "nqf", version, about = "Nichols-algebra models of quantum flag cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW-free word basis of B(V) degree by degree.
    Basis(Common),
    /// Print the Hilbert series of B(V).
    Hilbert(Common),
    /// Print (quantum) Schubert or BGG classes.
    Schubert {
        #[command(flatten)]
        common: Common,
        /// Restrict to one Weyl element, given as a 1-based word such as 1,2,1.
        #[arg(long, value_delimiter = ',')]
        w: Option<Vec<usize>>,
    },
    /// Print the quantum W-invariants.
    Invariants(Common),
    /// Run identity checks; `all` runs every check.
    Verify {
        checks: Vec<String>,
        #[command(flatten)]
        common: Common,
        /// Include wall-clock time in each report.
        #[arg(long)]
        timings: bool,
    },
    /// Print one of the tables: basis, hilbert, schubert, invariants.
    Dump {
        what: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Clone)]
struct Common {
    /// Cartan type: A, B, C or D.
    #[arg(long = "type", default_value = "A")]
    kind: String,
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Truncation degree. Defaults to the full algebra for small instances, 6 otherwise.
    #[arg(long, conflicts_with = "full")]
    max_degree: Option<usize>,
    /// Build the whole algebra regardless of size.
    #[arg(long)]
    full: bool,
    /// Constant c_α on long roots.
    #[arg(long, default_value = "1")]
    c_long: String,
    /// Constant c_α on short roots.
    #[arg(long, default_value = "1")]
    c_short: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory for the basis cache.
    #[arg(long, env = "NQF_CACHE")]
    cache: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Common {
    fn config(&self) -> Result<EngineConfig, NqfError> {
        let kind = CartanType::parse(&self.kind)?;
        let parse = |s: &str| -> Result<Rational, NqfError> {
            s.parse().map_err(|e| NqfError::Usage(format!("bad constant `{s}`: {e}")))
        };
        let max_degree = if self.full { None } else { self.max_degree.or(default_max_degree(kind, self.rank)) };
        let mut cfg = EngineConfig::new(kind, self.rank)
            .with_max_degree(max_degree)
            .with_constants(parse(&self.c_long)?, parse(&self.c_short)?)
            .with_seed(self.seed)
            .with_cache(self.cache.clone());
        cfg.format = self.format;
        Ok(cfg)
    }
}

fn engine(common: &Common) -> Result<Engine, NqfError> {
    let eng = Engine::new(common.config()?)?;
    for w in &eng.cache.warnings {
        eprintln!("warning: {w}");
    }
    Ok(eng)
}

fn print_table(common: &Common, what: &str, w: Option<Vec<usize>>) -> Result<bool, NqfError> {
    let eng = engine(common)?;
    let w = match w {
        Some(word) => {
            if word.iter().any(|&i| i == 0 || i > eng.rs.rank) {
                return Err(NqfError::Usage(format!("--w letters must lie in 1..={}", eng.rs.rank)));
            }
            let zero_based: Vec<usize> = word.iter().map(|i| i - 1).collect();
            Some(eng.rs.from_word(&zero_based))
        }
        None => None,
    };
    let v = dump::table(&eng, what, w.as_ref())?;
    let text = match common.format {
        Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Format::Text => dump::to_text(what, &v),
    };
    io::stdout().write_all(text.as_bytes())?;
    Ok(true)
}

fn verify(checks: &[String], common: &Common, timings: bool) -> Result<bool, NqfError> {
    let names = suite::resolve_checks(checks)?;
    let eng = engine(common)?;
    let reports = suite::run_suite(&eng, &names, timings);
    let mut out = io::stdout().lock();
    for r in &reports {
        let line = match common.format {
            Format::Json => r.to_json_line(),
            Format::Text => r.to_text(),
        };
        writeln!(out, "{line}")?;
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn run(cli: Cli) -> Result<bool, NqfError> {
    match cli.command {
        Command::Basis(c) => print_table(&c, "basis", None),
        Command::Hilbert(c) => print_table(&c, "hilbert", None),
        Command::Schubert { common, w } => print_table(&common, "schubert", w),
        Command::Invariants(c) => print_table(&c, "invariants", None),
        Command::Dump { what, common } => print_table(&common, &what, None),
        Command::Verify { checks, common, timings } => verify(&checks, &common, timings),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
