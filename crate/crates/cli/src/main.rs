//! `qctw`: build, analyze and reproduce quasi-cyclic two-weight codes.
//!
//! Exit codes: 0 success, 1 suite failure, 2 usage or parse error,
//! 3 construction verification failure, 4 enumeration guard tripped.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qctw_core::code::{analyze_with_guard, DEFAULT_GUARD};
use qctw_core::constructions::{
    build_self_complementary_minus, build_self_complementary_plus, build_two_weight,
    default_multipliers, MultiplierSet,
};
use qctw_core::poly::{find_simplex_generators, simplex_length};
use qctw_core::reproduce::Suite;
use qctw_core::{CodeError, ConstructionError, FieldSpec, LinearCode, Matrix, Polynomial};

#[derive(Parser)]
#[command(name = "qctw", version, about = "Quasi-cyclic two-weight and self-complementary code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every cyclic simplex generator polynomial for (q, k).
    Simplex {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: u32,
    },
    /// Print the expanded generator matrix of a construction.
    Construct {
        kind: Kind,
        #[arg(long)]
        q: Option<u32>,
        /// Simplex dimension.
        #[arg(long)]
        k: u32,
        /// Number of circulant blocks (su2 only).
        #[arg(long)]
        p: Option<usize>,
        /// Generator polynomial, inline (`1 1 1 0 1`) or a file holding it.
        #[arg(long)]
        g1: Option<String>,
        /// Second-row multipliers, e.g. `0;1,0;2,0` (su2 only).
        #[arg(long)]
        multipliers: Option<String>,
    },
    /// Report the parameters and properties of a code given as a matrix file.
    Analyze {
        /// Matrix file; `-` or omitted reads stdin.
        input: Option<String>,
        /// Circulant block order used for the quasi-cyclic check.
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Rebuild tabulated codes and compare with the expected parameters.
    Reproduce {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Re-emit a parsed matrix in canonical text form.
    Export {
        input: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Su2,
    GrMinus,
    GrPlus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table1,
    Example1,
    Example2,
    GreyRankin,
    All,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::Verification(_) => 3,
            ConstructionError::Code(CodeError::TooLarge { .. }) => 4,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        let code = match e {
            CodeError::TooLarge { .. } => 4,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

fn read_input(input: Option<&str>) -> Result<String, Failure> {
    match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {path}: {e}"))),
    }
}

fn parse_matrix(input: Option<&str>) -> Result<Matrix, Failure> {
    Matrix::parse(&read_input(input)?).map_err(|e| Failure::usage(e.to_string()))
}

fn cmd_simplex(q: u32, k: u32) -> Result<String, Failure> {
    let field = FieldSpec::new(q).map_err(|e| Failure::usage(e.to_string()))?;
    let gens = find_simplex_generators(field, k).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(gens.iter().map(|g| format!("{}\n", g.to_text())).collect())
}

fn load_g1(field: FieldSpec, t: u32, g1: Option<&str>) -> Result<Polynomial, Failure> {
    match g1 {
        Some(arg) => {
            let text = if Path::new(arg).is_file() {
                fs::read_to_string(arg).map_err(|e| Failure::usage(format!("reading {arg}: {e}")))?
            } else {
                arg.to_string()
            };
            Polynomial::parse(field, &text).map_err(|e| Failure::usage(e.to_string()))
        }
        None => find_simplex_generators(field, t)
            .map(|mut g| g.remove(0))
            .map_err(|e| Failure::usage(e.to_string())),
    }
}

fn cmd_construct(
    kind: Kind,
    q: Option<u32>,
    k: u32,
    p: Option<usize>,
    g1: Option<&str>,
    multipliers: Option<&str>,
) -> Result<String, Failure> {
    let code: LinearCode = match kind {
        Kind::Su2 => {
            let q = q.unwrap_or(2);
            let field = FieldSpec::new(q).map_err(|e| Failure::usage(e.to_string()))?;
            let g1 = load_g1(field, k, g1)?;
            let multipliers = match (multipliers, p) {
                (Some(text), p) => {
                    let m = simplex_length(q, k) as usize;
                    let set = MultiplierSet::parse(field, m, text)?;
                    if p.is_some_and(|p| p != set.len()) {
                        return Err(Failure::usage(format!(
                            "--p {} disagrees with {} multipliers",
                            p.unwrap_or(0),
                            set.len()
                        )));
                    }
                    set
                }
                (None, Some(p)) => default_multipliers(field, k, p)?,
                (None, None) => return Err(Failure::usage("su2 needs --p or --multipliers")),
            };
            build_two_weight(&g1, k, &multipliers)?
        }
        Kind::GrMinus | Kind::GrPlus => {
            if q.is_some_and(|q| q != 2) {
                return Err(Failure::usage("self-complementary constructions are binary (--q 2)"));
            }
            if p.is_some() || multipliers.is_some() {
                return Err(Failure::usage("--p and --multipliers apply to su2 only"));
            }
            let field = FieldSpec::binary();
            let g1 = load_g1(field, k, g1)?;
            match kind {
                Kind::GrMinus => build_self_complementary_minus(&g1, k)?,
                _ => build_self_complementary_plus(&g1, k)?,
            }
        }
    };
    Ok(code.raw_generator().to_text())
}

fn cmd_analyze(input: Option<&str>, m: usize, guard: u64, format: Format) -> Result<String, Failure> {
    let matrix = parse_matrix(input)?;
    let code = LinearCode::from_generator(matrix)?;
    let report = analyze_with_guard(&code, m, guard)?;
    let summary = report.machine_summary();
    Ok(match format {
        Format::Human => format!("{report}{summary}\n"),
        Format::Machine => format!("{summary}\n"),
    })
}

fn cmd_reproduce(suite: SuiteArg) -> (String, bool) {
    let suites: Vec<Suite> = match suite {
        SuiteArg::Table1 => vec![Suite::Table1],
        SuiteArg::Example1 => vec![Suite::Example1],
        SuiteArg::Example2 => vec![Suite::Example2],
        SuiteArg::GreyRankin => vec![Suite::GreyRankin],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut out = String::new();
    let mut ok = true;
    for s in suites {
        let result = s.run();
        ok &= result.pass();
        out.push_str(&result.to_string());
    }
    (out, ok)
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let out = match cli.command {
        Command::Simplex { q, k } => cmd_simplex(q, k)?,
        Command::Construct {
            kind,
            q,
            k,
            p,
            g1,
            multipliers,
        } => cmd_construct(kind, q, k, p, g1.as_deref(), multipliers.as_deref())?,
        Command::Analyze {
            input,
            m,
            guard,
            format,
        } => cmd_analyze(input.as_deref(), m, guard, format)?,
        Command::Reproduce { suite } => {
            let (out, ok) = cmd_reproduce(suite);
            return Ok((out, if ok { 0 } else { 1 }));
        }
        Command::Export { input } => parse_matrix(input.as_deref())?.to_text(),
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
