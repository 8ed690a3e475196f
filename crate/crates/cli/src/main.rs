use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bicyclic_core::cert::{check_cert, continuity_cert_ac1, continuity_cert_ac2};
use bicyclic_core::falsify::{falsify, falsify_cert};
use bicyclic_core::geometry::line_product;
use bicyclic_core::{format, LineRef, Nbhd, NbhdAc1, NonNeg, QLine, Side, Sign};
use bicyclic_harness::{parse_elem, parse_expr, parse_scalar, parse_tops, run_suite, GenConfig, HarnessError, ScalarMode, Value};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bicyclic", version, about = "Exact computations in B[0,inf) with an adjoined zero")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "(1,3)*(2,5)^-1" or "(3,5) <= (1,3)".
    Eval { expr: String },
    /// Decide the natural order between two elements.
    Order { lhs: String, rhs: String },
    /// Products of diagonal lines.
    Lines {
        #[command(subcommand)]
        command: LinesCommand,
    },
    /// Build a continuity certificate at zero.
    Certify {
        topology: TopologyArg,
        #[command(flatten)]
        problem: Problem,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check a certificate file.
    Validate { file: PathBuf },
    /// Search for points escaping a claimed inclusion.
    Falsify {
        topology: Option<TopologyArg>,
        #[command(flatten)]
        problem: Problem,
        /// Neighbourhood claimed to map into the target.
        #[arg(long)]
        chosen: Option<String>,
        /// Take the claim from a certificate file.
        #[arg(long, conflicts_with_all = ["topology", "chosen"])]
        cert: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a named property suite.
    Suite {
        name: String,
        #[command(flatten)]
        run: RunArgs,
        /// Integer coordinates in 0..=MAX instead of rationals.
        #[arg(long, value_name = "MAX")]
        integer: Option<u64>,
        #[arg(long, default_value_t = 120)]
        max_num: u64,
        #[arg(long, default_value_t = 8)]
        max_den: u64,
        /// JSON output.
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Subcommand)]
enum LinesCommand {
    /// The product set of two lines, e.g. `lines product L+3 L-1/2`.
    Product {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyArg {
    Ac1,
    Ac2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Args)]
struct Problem {
    #[arg(long, value_enum, default_value = "left")]
    side: SideArg,
    #[arg(long)]
    translator: Option<String>,
    /// A radius such as `4` for ac1, a list of tops such as `(3,1);(2,5)` for ac2.
    #[arg(long)]
    target: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, env = "BICYCLIC_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    cases: usize,
}

enum Failure {
    /// A well-formed question answered "no".
    No,
    Usage(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<bicyclic_core::Error> for Failure {
    fn from(e: bicyclic_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn verdict(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::No)
    }
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    }
}

fn parse_line(text: &str) -> Result<QLine, Failure> {
    let bad = || Failure::Usage(format!("expected a line like L+3 or L-1/2, got {text:?}"));
    let rest = text.strip_prefix('L').ok_or_else(bad)?;
    let (sign, alpha) = if let Some(a) = rest.strip_prefix('+') {
        (Sign::Plus, a)
    } else if let Some(a) = rest.strip_prefix('-') {
        (Sign::Minus, a)
    } else {
        return Err(bad());
    };
    Ok(LineRef::new(sign, NonNeg::new(parse_scalar(alpha)?)?))
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn nbhd(topology: TopologyArg, text: &str) -> Result<Nbhd<bicyclic_core::Rational>, Failure> {
    Ok(match topology {
        TopologyArg::Ac1 => Nbhd::Ac1(NbhdAc1::new(parse_scalar(text)?)?),
        TopologyArg::Ac2 => Nbhd::Ac2(parse_tops(text)?),
    })
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { expr } => {
            let v = parse_expr(&expr)?;
            println!("{v}");
            verdict(v != Value::Bool(false))
        }
        Command::Order { lhs, rhs } => {
            let (s, t) = (parse_elem(&lhs)?, parse_elem(&rhs)?);
            let leq = s.natural_leq(&t);
            match s.leq_witness(&t) {
                Some(f) => println!("true: {s} = {t}·{f}"),
                None => println!("false"),
            }
            verdict(leq)
        }
        Command::Lines { command: LinesCommand::Product { first, second } } => {
            let (l1, l2) = (parse_line(&first)?, parse_line(&second)?);
            println!("{}", line_product(&l1, &l2));
            Ok(())
        }
        Command::Certify { topology, problem, emit } => {
            let t = parse_elem(required(&problem.translator, "translator")?)?;
            let target = required(&problem.target, "target")?;
            let side = side(problem.side);
            let cert = match nbhd(topology, target)? {
                Nbhd::Ac1(n) => continuity_cert_ac1(side, &t, &n),
                Nbhd::Ac2(n) => continuity_cert_ac2(side, &t, &n),
                _ => unreachable!("nbhd builds only compact kinds"),
            };
            let text = format::emit(&cert);
            match emit {
                Some(path) => fs::write(&path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            let problems = check_cert(&cert)?;
            for p in &problems {
                eprintln!("invalid: {p}");
            }
            verdict(problems.is_empty())
        }
        Command::Validate { file } => {
            let cert = format::parse(&read(&file)?)?;
            let problems = check_cert(&cert)?;
            if problems.is_empty() {
                println!("valid {} certificate", cert.topology());
            }
            for p in &problems {
                println!("invalid: {p}");
            }
            verdict(problems.is_empty())
        }
        Command::Falsify { topology, problem, chosen, cert, run } => {
            let found = if let Some(path) = cert {
                let cert = format::parse(&read(&path)?)?;
                falsify_cert(&cert, run.cases, run.seed)
            } else {
                let topology = topology.ok_or_else(|| Failure::Usage("give ac1|ac2 or --cert".into()))?;
                let t = parse_elem(required(&problem.translator, "translator")?)?;
                let target = nbhd(topology, required(&problem.target, "target")?)?;
                let chosen = nbhd(topology, required(&chosen, "chosen")?)?;
                falsify(side(problem.side), &t, &chosen, &target, run.cases, run.seed)
            };
            match &found {
                Some(s) => println!("counterexample: {s}"),
                None => println!("no counterexample in {} samples (seed {})", run.cases, run.seed),
            }
            verdict(found.is_none())
        }
        Command::Suite { name, run, integer, max_num, max_den, machine } => {
            let mode = match integer {
                Some(max) => ScalarMode::Integer { max },
                None => ScalarMode::Rational { max_num, max_den },
            };
            let cfg = GenConfig::new(run.seed, run.cases).with_mode(mode);
            let report = run_suite(&name, &cfg)?;
            if machine {
                println!("{}", report.machine());
            } else {
                print!("{}", report.render());
            }
            verdict(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::No) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
