use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use lpl::model::{load_model, parse_problem, ProblemFile};
use lpl::report::{run, to_json, to_text, Command, PolyArgs};
use lpl::{Error, Result};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Validate,
    Classify,
    Extend,
    Pair,
    Algebroid,
    Bracket,
    Casimir,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate => Command::Validate,
            Cmd::Classify => Command::Classify,
            Cmd::Extend => Command::Extend,
            Cmd::Pair => Command::Pair,
            Cmd::Algebroid => Command::Algebroid,
            Cmd::Bracket => Command::Bracket,
            Cmd::Casimir => Command::Casimir,
        }
    }
}

/// Exact computations on the Lie-Poisson structure of g*.
#[derive(Debug, Parser)]
#[command(name = "lpl", version)]
struct Args {
    command: Cmd,
    /// Problem file (JSON).
    #[arg(long)]
    problem: Option<PathBuf>,
    /// Model file, or the name of a bundled model; overrides the problem's model.
    #[arg(long)]
    model: Option<PathBuf>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// First polynomial for `bracket` and `casimir`, e.g. "nu1^2 + nu2".
    #[arg(long)]
    f: Option<String>,
    /// Second polynomial for `bracket`.
    #[arg(long)]
    g: Option<String>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

fn execute(args: &Args) -> Result<String> {
    let (file, base) = match &args.problem {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
            (parse_problem(&text)?, base)
        }
        None => (ProblemFile::default(), PathBuf::from(".")),
    };
    let model = args.model.as_deref().map(load_model).transpose()?;
    let mut problem = file.resolve(&base, model)?;
    if let Some(n) = args.samples {
        problem.sampling.count = n;
    }
    if let Some(s) = args.seed {
        problem.sampling.seed = s;
    }
    let poly = PolyArgs {
        f: args.f.clone(),
        g: args.g.clone(),
    };
    let report = run(args.command.into(), &problem, &poly)?;
    Ok(if args.json {
        to_json(&report)
    } else {
        to_text(&report)
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let kind = if e.is_refusal() { "refusal" } else { "input" };
            if args.json {
                let v = serde_json::json!({"error": e.to_string(), "kind": kind});
                print!("{}", to_json(&v));
            }
            eprintln!("error: {e}");
            ExitCode::from(if e.is_refusal() { 2 } else { 1 })
        }
    }
}
