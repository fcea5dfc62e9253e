use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use torus_skein::error::{ParseError, SkeinError};
use torus_skein::format::{format_element, format_simple};
use torus_skein::json;
use torus_skein::parse::{evaluate, parse_expression};
use torus_skein::quotient::{commutator_witness, reduce_mod_commutators, trace, ParityClass};
use torus_skein::scalar::ScalarContext;
use torus_skein::selftest::{run_selftest, SelfTestConfig};

const EXIT_COMPUTE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SELFTEST: u8 = 3;

#[derive(Parser)]
#[command(
    name = "torus-skein",
    about = "Exact computer algebra for the skein algebra of the torus",
    version
)]
struct Cli {
    /// Coefficient arithmetic: exact in Q(t), or numeric at a fixed t
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,

    /// Specialization "re,im" (required in numeric mode)
    #[arg(long, global = true)]
    t: Option<String>,

    /// Emit results as single-line JSON
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Phi,
    Ee,
    Eo,
    Oe,
    Oo,
}

impl ClassArg {
    fn class(self) -> ParityClass {
        match self {
            ClassArg::Phi => ParityClass::Phi,
            ClassArg::Ee => ParityClass::Ee,
            ClassArg::Eo => ParityClass::Eo,
            ClassArg::Oe => ParityClass::Oe,
            ClassArg::Oo => ParityClass::Oo,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    #[value(name = "T")]
    T,
    Simple,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression to a canonical T-basis element
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply one of the five traces to an expression
    Trace {
        #[arg(value_enum)]
        class: ClassArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Commutator witness for (x,y)_T - (z,w)_T
    Witness {
        #[arg(allow_negative_numbers = true)]
        x: i64,
        #[arg(allow_negative_numbers = true)]
        y: i64,
        #[arg(allow_negative_numbers = true)]
        z: i64,
        #[arg(allow_negative_numbers = true)]
        w: i64,
    },
    /// Reduce an expression modulo commutators, emitting a certificate
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate and print in the requested basis
    Convert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum)]
        to: BasisArg,
    },
    /// Run the seeded randomized invariant suites
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 8)]
        max_index: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => e.report(),
    }
}

enum CliError {
    Usage(String),
    Parse(ParseError),
    Compute(SkeinError),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(m) => {
                eprintln!("error: {m}");
                ExitCode::from(EXIT_PARSE)
            }
            CliError::Parse(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_PARSE)
            }
            CliError::Compute(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_COMPUTE)
            }
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<SkeinError> for CliError {
    fn from(e: SkeinError) -> Self {
        CliError::Compute(e)
    }
}

fn context(cli: &Cli) -> Result<ScalarContext, CliError> {
    match cli.mode {
        Mode::Exact => {
            if cli.t.is_some() {
                return Err(CliError::Usage(
                    "--t is only meaningful with --mode numeric".into(),
                ));
            }
            Ok(ScalarContext::exact())
        }
        Mode::Numeric => {
            let t = cli
                .t
                .as_deref()
                .ok_or_else(|| CliError::Usage("--mode numeric requires --t <re>,<im>".into()))?;
            let t = parse_complex(t)
                .ok_or_else(|| CliError::Usage(format!("cannot parse --t value {t:?}")))?;
            Ok(ScalarContext::numeric(t)?)
        }
    }
}

fn parse_complex(s: &str) -> Option<Complex64> {
    let (re, im) = s.split_once(',')?;
    Some(Complex64::new(
        re.trim().parse().ok()?,
        im.trim().parse().ok()?,
    ))
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let ctx = context(cli)?;
    match &cli.cmd {
        Cmd::Eval { expr } => {
            let e = evaluate(&parse_expression(expr)?, &ctx)?;
            if cli.json {
                println!("{}", json::element_to_value(&e));
            } else {
                println!("{}", format_element(&e));
            }
        }
        Cmd::Trace { class, expr } => {
            let e = evaluate(&parse_expression(expr)?, &ctx)?;
            let v = trace(&e, class.class(), &ctx)?;
            if cli.json {
                println!("{}", json::scalar_to_value(&v));
            } else {
                println!("{v}");
            }
        }
        Cmd::Witness { x, y, z, w } => {
            let wit = commutator_witness(*x, *y, *z, *w, &ctx)?;
            if cli.json {
                println!("{}", json::witness_to_value(&wit));
            } else {
                println!("{wit}");
            }
        }
        Cmd::Reduce { expr } => {
            let e = evaluate(&parse_expression(expr)?, &ctx)?;
            let cert = reduce_mod_commutators(&e, &ctx)?;
            if cli.json {
                println!("{}", json::certificate_to_value(&cert));
            } else {
                println!("{cert}");
            }
        }
        Cmd::Convert { expr, to } => {
            let e = evaluate(&parse_expression(expr)?, &ctx)?;
            match to {
                BasisArg::T => {
                    if cli.json {
                        println!("{}", json::element_to_value(&e));
                    } else {
                        println!("{}", format_element(&e));
                    }
                }
                BasisArg::Simple => {
                    let s = e.to_simple(&ctx)?;
                    if cli.json {
                        println!("{}", json::simple_to_value(&s));
                    } else {
                        println!("{}", format_simple(&s));
                    }
                }
            }
        }
        Cmd::Selftest {
            seed,
            cases,
            max_index,
        } => {
            if *cases < 1 || *max_index < 1 {
                return Err(CliError::Usage(
                    "--cases and --max-index must be >= 1".into(),
                ));
            }
            let cfg = match (cli.mode, ctx.t_value()) {
                (Mode::Exact, _) => SelfTestConfig::exact(*seed, *cases, *max_index),
                (Mode::Numeric, Some(t)) => SelfTestConfig::numeric(*seed, *cases, *max_index, t),
                (Mode::Numeric, None) => unreachable!("context construction enforces --t"),
            };
            let report = run_selftest(&cfg);
            if cli.json {
                println!("{}", report.to_value());
            } else {
                println!("{report}");
            }
            if !report.ok() {
                return Ok(ExitCode::from(EXIT_SELFTEST));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
