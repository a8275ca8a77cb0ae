//! `idcodes`: exact code numbers, extremal constructions and audits for small graphs.

mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use idcodes::extremal::{audit_characterization, counting, verify_extremal, AuditMode, ExtremalBlueprint};
use idcodes::solver::{census, max_order, DEFAULT_BUDGET};
use idcodes::{emit_graph6, lower_bound, min_code_with, parse_graph, CodeKind, Error, SolveOptions};
use serde::Serialize;
use serde_json::{json, Value};

use output::{Format, RunRecord};

const EXIT_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INADMISSIBLE: u8 = 3;
const EXIT_LIMIT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "idcodes", version, about = "Minimum identifying, locating and open codes of small graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Maximum candidate sets per search. 0 removes the limit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Include wall time in the record. Output is then no longer reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum code of a graph given as graph6 or an edge list.
    Solve {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
        #[arg(long)]
        kind: CodeKind,
    },
    /// Materialize an extremal blueprint.
    Construct {
        /// Blueprint file; standard input when absent or `-`.
        blueprint: Option<PathBuf>,
    },
    /// Check that a blueprint's code is a minimum code of the given kind.
    Verify {
        blueprint: Option<PathBuf>,
        #[arg(long)]
        kind: CodeKind,
    },
    /// Compare graphs attaining the lower bound with the extremal family.
    Audit {
        #[arg(long)]
        kind: CodeKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Histogram of the code number over every labeled graph on n vertices.
    Census {
        #[arg(long)]
        kind: CodeKind,
        #[arg(long)]
        n: usize,
    },
    /// Lower bound for n vertices and maximum order for code size k.
    Bounds {
        #[arg(long)]
        kind: CodeKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Admission and construction counts for code size k.
    Count {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(e) if e.is_limit() => EXIT_LIMIT,
            Failure::Lib(_) | Failure::Usage(_) | Failure::Io(_) => EXIT_INVALID,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

struct Outcome {
    input: String,
    result: Value,
    code: u8,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(Failure::Io),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(Failure::Io)?;
            Ok(s)
        }
    }
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn options(budget: u64) -> SolveOptions {
    SolveOptions {
        budget: (budget > 0).then_some(budget),
        ..SolveOptions::default()
    }
}

fn run(cmd: &Command, budget: u64) -> Result<Outcome, Failure> {
    let ok = |input: String, result: Value| Outcome { input, result, code: 0 };
    match cmd {
        Command::Solve { input, kind } => {
            let g = parse_graph(&read_input(input.as_ref())?)?;
            let report = min_code_with(&g, *kind, options(budget))?;
            let code = if report.admissible { 0 } else { EXIT_INADMISSIBLE };
            Ok(Outcome {
                input: emit_graph6(&g),
                result: value(&report),
                code,
            })
        }
        Command::Construct { blueprint } => {
            let bp = ExtremalBlueprint::parse(&read_input(blueprint.as_ref())?)?;
            let me = bp.materialize()?;
            let mut result = value(&me);
            result["order"] = json!(me.order());
            Ok(ok(bp.to_text(), result))
        }
        Command::Verify { blueprint, kind } => {
            let bp = ExtremalBlueprint::parse(&read_input(blueprint.as_ref())?)?;
            let me = bp.materialize()?;
            let check = verify_extremal(&me, *kind, (budget > 0).then_some(budget))?;
            let code = if check.passed { 0 } else { EXIT_FAILED };
            Ok(Outcome {
                input: bp.to_text(),
                result: value(&check),
                code,
            })
        }
        Command::Audit { kind, n, mode, seed, trials } => {
            let mode = match mode {
                Mode::Exhaustive => AuditMode::Exhaustive,
                Mode::Sampled => AuditMode::Sampled { seed: *seed, trials: *trials },
            };
            let report = audit_characterization(*kind, *n, mode)?;
            let mut result = value(&report);
            result["verdict"] = json!(if report.passed { "PASS" } else { "FAIL" });
            let code = if report.passed { 0 } else { EXIT_FAILED };
            Ok(Outcome {
                input: format!("kind={kind} n={n}"),
                result,
                code,
            })
        }
        Command::Census { kind, n } => {
            let c = census(*kind, *n, options(budget))?;
            Ok(ok(format!("kind={kind} n={n}"), value(&c)))
        }
        Command::Bounds { kind, n, k } => {
            if n.is_none() && k.is_none() {
                return Err(Failure::Usage("bounds needs --n, --k or both".into()));
            }
            let mut result = json!({ "kind": kind });
            let mut input = format!("kind={kind}");
            if let Some(n) = n {
                if *n == 0 {
                    return Err(Error::OrderOutOfRange(0).into());
                }
                result["lower_bound"] = json!(lower_bound(*kind, *n));
                input.push_str(&format!(" n={n}"));
            }
            if let Some(k) = k {
                result["max_order"] = json!(max_order(*kind, *k)?.to_string());
                input.push_str(&format!(" k={k}"));
            }
            Ok(ok(input, result))
        }
        Command::Count { k } => Ok(ok(format!("k={k}"), value(&counting(*k)?))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    }
    let start = Instant::now();
    match run(&cli.command, cli.budget) {
        Ok(out) => {
            let record = RunRecord {
                command: command_name(&cli.command),
                input: out.input,
                result: out.result,
                wall_time_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
            };
            print!("{}", record.render(cli.format));
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Solve { .. } => "solve",
        Command::Construct { .. } => "construct",
        Command::Verify { .. } => "verify",
        Command::Audit { .. } => "audit",
        Command::Census { .. } => "census",
        Command::Bounds { .. } => "bounds",
        Command::Count { .. } => "count",
    }
}
