//! Request dispatch, rendering and batch execution behind the `pshdiag`
//! binary. Everything here is a pure function of the request, so the binary
//! and the tests share one code path.

mod batch;
mod render;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use pshdiag_core::rational::parse_rational_list;
use pshdiag_core::{
    classify_extreme, decide_decomposability, indicator_eval, newton_number, DecompositionCertificate, Diagram, Error,
    ExtremityReport, HomothetyWitness, NewtonNumber, Rational, RationalMatrix, SingularityInput, Weight,
};
use serde_json::{json, Value};

pub use batch::{run_batch, BatchManifest, BatchOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Command {
    Diagram,
    Lelong,
    Sum,
    Homothetic,
    Decompose,
    Classify,
    NewtonNumber,
    Substitute,
    Indicator,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Diagram,
        Command::Lelong,
        Command::Sum,
        Command::Homothetic,
        Command::Decompose,
        Command::Classify,
        Command::NewtonNumber,
        Command::Substitute,
        Command::Indicator,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Diagram => "diagram",
            Command::Lelong => "lelong",
            Command::Sum => "sum",
            Command::Homothetic => "homothetic",
            Command::Decompose => "decompose",
            Command::Classify => "classify",
            Command::NewtonNumber => "newton-number",
            Command::Substitute => "substitute",
            Command::Indicator => "indicator",
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Command, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| CliError::invalid(format!("unknown command `{s}`")))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Rendering options shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub format: Format,
    /// ANSI colors in text mode.
    pub color: bool,
}

/// One command with its JSON payload.
///
/// Document-valued payload fields (`input`, `matrix`, `diagram`, `a`, `b`)
/// hold either inline JSON or a path string, resolved against `base_dir`.
#[derive(Debug, Clone)]
pub struct AnalysisRequest {
    pub command: Command,
    pub payload: Value,
    pub base_dir: PathBuf,
}

impl AnalysisRequest {
    pub fn new(command: Command, payload: Value) -> AnalysisRequest {
        AnalysisRequest { command, payload, base_dir: PathBuf::from(".") }
    }

    pub fn with_base_dir(mut self, dir: impl Into<PathBuf>) -> AnalysisRequest {
        self.base_dir = dir.into();
        self
    }
}

/// A failed request with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_INVALID, kind: "invalid-input", message: message.into() }
    }

    fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind, "message": self.message } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let (code, kind) = match e {
            Error::Unbounded => (EXIT_UNSUPPORTED, "unsupported"),
            Error::InvariantViolation(_) | Error::InfeasibleAssignment(_) => (EXIT_INTERNAL, "internal"),
            _ => (EXIT_INVALID, "invalid-input"),
        };
        CliError { code, kind, message: e.to_string() }
    }
}

/// Successful analysis results, before rendering.
#[derive(Debug, Clone)]
pub enum Report {
    Diagram(Diagram),
    Lelong { weight: Weight, value: Rational },
    Sum { a: Diagram, b: Diagram, sum: Diagram },
    Homothetic { a: Diagram, b: Diagram, witness: Option<HomothetyWitness> },
    Decompose { diagram: Diagram, certificate: DecompositionCertificate },
    Classify(Box<ExtremityReport>),
    NewtonNumber { diagram: Diagram, value: NewtonNumber },
    Substitute(SingularityInput),
    Indicator { t: Vec<Rational>, value: Rational },
}

impl Report {
    /// Infinite Newton numbers are reported but flagged with exit 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Report::NewtonNumber { value: NewtonNumber::Infinite, .. } => EXIT_UNSUPPORTED,
            _ => EXIT_OK,
        }
    }

    pub fn to_json(&self) -> Value {
        let value = match self {
            Report::Diagram(g) | Report::Sum { sum: g, .. } => serde_json::to_value(g),
            Report::Lelong { value, .. } => Ok(json!({ "lelong": value.to_string() })),
            Report::Homothetic { witness, .. } => Ok(match witness {
                Some(w) => json!({
                    "homothetic": true,
                    "c": w.c.to_string(),
                    "x": w.x.coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
                None => json!({ "homothetic": false }),
            }),
            Report::Decompose { certificate, .. } => serde_json::to_value(certificate),
            Report::Classify(report) => serde_json::to_value(report),
            Report::NewtonNumber { value, .. } => Ok(json!({ "newton_number": value })),
            Report::Substitute(u) => serde_json::to_value(u),
            Report::Indicator { value, .. } => Ok(json!({ "indicator": value.to_string() })),
        };
        value.expect("reports serialize to JSON")
    }
}

/// Rendered output and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

/// Runs one request and renders the result or the error.
pub fn run(request: &AnalysisRequest, options: Options) -> Outcome {
    match analyze(request) {
        Ok(report) => Outcome { output: render_report(&report, options), code: report.exit_code() },
        Err(e) => Outcome { output: render_error(&e, options), code: e.code },
    }
}

pub fn render_report(report: &Report, options: Options) -> String {
    match options.format {
        Format::Json => to_json_text(&report.to_json()),
        Format::Text => render::text(report, options.color),
    }
}

pub fn render_error(e: &CliError, options: Options) -> String {
    match options.format {
        Format::Json => to_json_text(&e.to_json()),
        Format::Text => format!("error ({}): {}\n", e.kind, e.message),
    }
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Validates the payload and dispatches to the core library.
pub fn analyze(request: &AnalysisRequest) -> Result<Report, CliError> {
    let p = Payload { value: &request.payload, base: &request.base_dir };
    match request.command {
        Command::Diagram => Ok(Report::Diagram(p.diagram_source("input")?)),
        Command::Lelong => {
            let g = p.diagram_source("input")?;
            let weight: Weight = p.string("weight")?.parse()?;
            let value = g.lelong_directional(weight.coords())?;
            Ok(Report::Lelong { weight, value })
        }
        Command::Sum => {
            let (a, b) = (p.document::<Diagram>("a")?, p.document::<Diagram>("b")?);
            let sum = a.minkowski_sum(&b)?;
            Ok(Report::Sum { a, b, sum })
        }
        Command::Homothetic => {
            let (a, b) = (p.document::<Diagram>("a")?, p.document::<Diagram>("b")?);
            let witness = a.is_homothetic_to(&b)?;
            Ok(Report::Homothetic { a, b, witness })
        }
        Command::Decompose => {
            let diagram = p.document::<Diagram>("diagram")?;
            let certificate = decide_decomposability(&diagram)?;
            Ok(Report::Decompose { diagram, certificate })
        }
        Command::Classify => {
            let u = p.document::<SingularityInput>("input")?;
            Ok(Report::Classify(Box::new(classify_extreme(&u)?)))
        }
        Command::NewtonNumber => {
            let diagram = p.document::<Diagram>("diagram")?;
            let value = newton_number(&diagram);
            Ok(Report::NewtonNumber { diagram, value })
        }
        Command::Substitute => {
            let m = p.document::<RationalMatrix>("matrix")?;
            let u = p.document::<SingularityInput>("input")?;
            Ok(Report::Substitute(u.substitute_linear(&m)?))
        }
        Command::Indicator => {
            let g = p.document::<Diagram>("diagram")?;
            let t = parse_rational_list(p.string("t")?)?;
            let value = indicator_eval(&g, &t)?;
            Ok(Report::Indicator { t, value })
        }
    }
}

struct Payload<'a> {
    value: &'a Value,
    base: &'a Path,
}

impl Payload<'_> {
    fn field(&self, name: &str) -> Result<&Value, CliError> {
        let obj = self.value.as_object().ok_or_else(|| CliError::invalid("payload must be a JSON object"))?;
        obj.get(name).ok_or_else(|| CliError::invalid(format!("payload is missing `{name}`")))
    }

    fn string(&self, name: &str) -> Result<&str, CliError> {
        self.field(name)?.as_str().ok_or_else(|| CliError::invalid(format!("`{name}` must be a string")))
    }

    /// Inline JSON, or a string naming a file relative to the base directory.
    fn raw_document(&self, name: &str) -> Result<Value, CliError> {
        match self.field(name)? {
            Value::String(path) => {
                let path = self.base.join(path);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
            }
            v => Ok(v.clone()),
        }
    }

    fn document<T: serde::de::DeserializeOwned>(&self, name: &str) -> Result<T, CliError> {
        let raw = self.raw_document(name)?;
        serde_json::from_value(raw).map_err(|e| CliError::invalid(format!("`{name}`: {e}")))
    }

    /// A diagram given directly, or as the diagram of a singularity input.
    fn diagram_source(&self, name: &str) -> Result<Diagram, CliError> {
        let raw = self.raw_document(name)?;
        if raw.get("polys").is_some() {
            let u: SingularityInput =
                serde_json::from_value(raw).map_err(|e| CliError::invalid(format!("`{name}`: {e}")))?;
            Ok(u.diagram()?)
        } else {
            serde_json::from_value(raw).map_err(|e| CliError::invalid(format!("`{name}`: {e}")))
        }
    }
}
