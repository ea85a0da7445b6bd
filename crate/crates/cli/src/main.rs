use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pshdiag_cli::{run, run_batch, AnalysisRequest, BatchManifest, Command, Format, Options, Outcome};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "pshdiag",
    version,
    about = "Indicator diagrams of plurisubharmonic singularities, in exact arithmetic"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: FormatArg,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Indicator diagram of a singularity input.
    Diagram {
        #[arg(long)]
        input: PathBuf,
    },
    /// Directional Lelong number along a positive weight.
    Lelong {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated positive rationals, e.g. "1,1/2".
        #[arg(long)]
        weight: String,
    },
    /// Minkowski sum of two diagrams.
    Sum { a: PathBuf, b: PathBuf },
    /// Whether A = c*B + x with c > 0 and x >= 0.
    Homothetic { a: PathBuf, b: PathBuf },
    /// Decomposability modulo homothety, with a certificate.
    Decompose { diagram: PathBuf },
    /// Extremity verdict for a homogeneous singularity.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Newton number (normalized covolume) of a diagram.
    NewtonNumber { diagram: PathBuf },
    /// Linear change of variables z = M * zeta.
    Substitute {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        input: PathBuf,
    },
    /// Support function at a direction t <= 0.
    Indicator {
        diagram: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Run a manifest of requests.
    Batch {
        manifest: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn path(p: &Path) -> Value {
    Value::String(p.to_string_lossy().into_owned())
}

fn single(command: Command, payload: Value, options: Options) -> Outcome {
    run(&AnalysisRequest::new(command, payload), options)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let color = format == Format::Text
        && cli.output.is_none()
        && std::env::var_os("NO_COLOR").is_none()
        && std::io::stdout().is_terminal();
    let options = Options { format, color };

    let outcome = match &cli.command {
        Cmd::Diagram { input } => single(Command::Diagram, json!({ "input": path(input) }), options),
        Cmd::Lelong { input, weight } => {
            single(Command::Lelong, json!({ "input": path(input), "weight": weight }), options)
        }
        Cmd::Sum { a, b } => single(Command::Sum, json!({ "a": path(a), "b": path(b) }), options),
        Cmd::Homothetic { a, b } => single(Command::Homothetic, json!({ "a": path(a), "b": path(b) }), options),
        Cmd::Decompose { diagram } => single(Command::Decompose, json!({ "diagram": path(diagram) }), options),
        Cmd::Classify { input } => single(Command::Classify, json!({ "input": path(input) }), options),
        Cmd::NewtonNumber { diagram } => single(Command::NewtonNumber, json!({ "diagram": path(diagram) }), options),
        Cmd::Substitute { matrix, input } => {
            single(Command::Substitute, json!({ "matrix": path(matrix), "input": path(input) }), options)
        }
        Cmd::Indicator { diagram, t } => {
            single(Command::Indicator, json!({ "diagram": path(diagram), "t": t }), options)
        }
        Cmd::Batch { manifest, jobs } => match BatchManifest::load(manifest) {
            Ok(m) => {
                let out = run_batch(&m, *jobs);
                Outcome { output: out.render(options), code: out.code }
            }
            Err(e) => Outcome { output: pshdiag_cli::render_error(&e, options), code: e.code },
        },
    };

    match &cli.output {
        Some(file) => {
            if let Err(e) = std::fs::write(file, &outcome.output) {
                eprintln!("pshdiag: cannot write {}: {e}", file.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.code as u8)
}
