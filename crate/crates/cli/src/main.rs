use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use twisted_cli::{run, Command, JobSpec, Source};

/// Condition K, regular classes and centers of twisted group algebras.
#[derive(Parser, Debug)]
#[command(name = "twisted", version)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "inline"])))]
struct Args {
    command: Command,
    /// JSON input file
    #[arg(long)]
    input: Option<PathBuf>,
    /// JSON input given directly
    #[arg(long)]
    inline: Option<String>,
    /// Singular value cutoff for the numeric center, as a rational string
    #[arg(long, default_value = "1/100000000")]
    tol: String,
    /// Random triples or pairs checked on infinite families
    #[arg(long, default_value_t = 10_000)]
    fuzz: usize,
    /// Coordinate bound for lattice samples, maximum word length for free products
    #[arg(long = "box", default_value_t = 3)]
    bound: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Compact JSON (the default)
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match (args.input, args.inline) {
        (Some(p), None) => Source::Path(p),
        (None, Some(s)) => Source::Inline(s),
        _ => unreachable!("clap enforces exactly one source"),
    };
    let spec = JobSpec {
        command: args.command,
        source,
        tol: args.tol,
        fuzz: args.fuzz,
        bound: args.bound,
        seed: args.seed,
        pretty: args.pretty,
    };
    let outcome = run(&spec);
    println!("{}", outcome.render(spec.pretty));
    eprintln!("{}", outcome.summary);
    ExitCode::from(outcome.code as u8)
}
