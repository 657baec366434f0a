use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use srep_cli::{parse_query, parse_spec, run_query, run_spec, RunOptions};

#[derive(Parser)]
#[command(name = "srep", version, about = "Decide inclusion, meets and closures of S-representation codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every query of a spec file.
    Run {
        file: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run one query against the declarations of a spec file.
    Eval {
        file: PathBuf,
        #[arg(short, long)]
        query: String,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    /// Cross-check every query against the brute-force oracle.
    #[arg(long)]
    check: bool,
    /// Word length bound used by the oracle.
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
}

impl Opts {
    fn run_options(&self) -> RunOptions {
        RunOptions {
            force_check: self.check,
            max_len: self.max_len,
        }
    }
}

fn read(file: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(file).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", file.display());
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, query, opts) = match &cli.command {
        Command::Run { file, opts } => (file, None, opts),
        Command::Eval { file, query, opts } => (file, Some(query), opts),
    };
    let text = match read(file) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(d) => {
            eprintln!("{d}");
            return ExitCode::from(1);
        }
    };
    let options = opts.run_options();
    match query {
        None => {
            let report = run_spec(&spec, &options);
            for line in &report.lines {
                println!("{line}");
            }
            for d in &report.diagnostics {
                eprintln!("{d}");
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Some(q) => {
            let outcome = parse_query(&spec, q).and_then(|q| run_query(&q, &options));
            match outcome {
                Ok(out) => {
                    println!("{}", out.render());
                    ExitCode::from(if out.agreement == Some(false) { 2 } else { 0 })
                }
                Err(d) => {
                    eprintln!("{d}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
