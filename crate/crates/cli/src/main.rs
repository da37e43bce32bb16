use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use sphere_forge::polyring::Budget;
use sphere_forge_cli::script::OrderSpec;
use sphere_forge_cli::{execute, parse_script, Options};

const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "sphere-forge", version, about = "Checks ideals, bundle total spaces and isomorphism certificates described by a script")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Text,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Execute a script and report every command.
    Run {
        script: PathBuf,
        /// `both` writes text to stderr and JSON to stdout.
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        /// Maximum S-pair reductions per Groebner basis; 0 disables the limit.
        #[arg(long, default_value_t = Budget::DEFAULT_STEPS)]
        gb_steps: u64,
        /// Seconds per Groebner basis; 0 disables the limit.
        #[arg(long, default_value_t = Budget::DEFAULT_TIMEOUT.as_secs_f64())]
        timeout: f64,
        /// Directory receiving re-checkable certificate scripts.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Parse, check and pretty-print a script without running it.
    Fmt { script: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn default_order() -> Result<OrderSpec, String> {
    match std::env::var("SPHERE_FORGE_ORDER") {
        Err(_) => Ok(OrderSpec::Grevlex),
        Ok(v) => match v.trim() {
            "" | "grevlex" => Ok(OrderSpec::Grevlex),
            "lex" => Ok(OrderSpec::Lex),
            other => Err(format!("SPHERE_FORGE_ORDER must be `grevlex` or `lex`, not `{other}`")),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("sphere-forge: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Cmd::Fmt { script } => {
            let parsed = parse_script(&read(&script)?).map_err(|e| format!("{}:{e}", script.display()))?;
            print!("{parsed}");
            Ok(0)
        }
        Cmd::Run { script, emit, gb_steps, timeout, cert_out } => {
            if !(timeout.is_finite() && timeout >= 0.0) {
                return Err(format!("--timeout must be a non-negative number of seconds, not {timeout}"));
            }
            let options = Options {
                budget: Budget::new(
                    (gb_steps > 0).then_some(gb_steps),
                    (timeout > 0.0).then(|| Duration::from_secs_f64(timeout)),
                ),
                default_order: default_order()?,
                cert_out,
            };
            let parsed = parse_script(&read(&script)?).map_err(|e| format!("{}:{e}", script.display()))?;
            let report = execute(&parsed, options);
            match emit {
                Emit::Json => print!("{}", report.to_json()),
                Emit::Text => print!("{}", report.to_text()),
                Emit::Both => {
                    eprint!("{}", report.to_text());
                    print!("{}", report.to_json());
                }
            }
            Ok(report.exit_code() as u8)
        }
    }
}
