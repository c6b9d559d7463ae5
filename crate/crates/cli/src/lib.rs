//! The `hopfjump` command-line front end.
//!
//! Every command produces an [`Outcome`]: a JSON document (always carrying
//! `"schema": 1`), an optional CSV table, a human-readable rendering and an
//! exit [`Status`].

pub mod args;
pub mod commands;
pub mod pipeline;

use std::fmt::Write as _;
use std::io::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

pub use args::{Cli, Format};

/// Seed for random trials when none is given.
pub const DEFAULT_SEED: u64 = 20_240_229;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    GuardExceeded = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Usage(_) => Status::Usage,
            CliError::Guard(_) => Status::GuardExceeded,
            CliError::Internal(_) => Status::VerificationFailed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub passed: bool,
    pub json: Value,
    pub csv: Option<Csv>,
    pub pretty: String,
}

impl Outcome {
    pub fn status(&self) -> Status {
        if self.passed {
            Status::Success
        } else {
            Status::VerificationFailed
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.pretty.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => match &self.csv {
                Some(csv) => csv.render(),
                None => Csv::from_json(&self.json).render(),
            },
        }
    }
}

/// A header plus rows; fields are quoted when they contain a comma or quote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Csv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        Csv {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Flattens the scalar leaves of a JSON document into `key,value` rows.
    pub fn from_json(v: &Value) -> Self {
        let mut csv = Csv::new(&["key", "value"]);
        flatten("", v, &mut csv);
        csv
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let fields: Vec<String> = row.iter().map(|f| quote(f)).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn flatten(prefix: &str, v: &Value, csv: &mut Csv) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, csv)),
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, csv)),
        Value::String(s) => csv.push(vec![prefix.to_string(), s.clone()]),
        Value::Null => csv.push(vec![prefix.to_string(), String::new()]),
        other => csv.push(vec![prefix.to_string(), other.to_string()]),
    }
}

/// `{"schema": 1, "command": ..., "passed": ...}` followed by `body`'s fields.
pub fn envelope(command: &str, passed: bool, body: Value) -> Value {
    let mut doc = json!({ "schema": SCHEMA_VERSION, "command": command, "passed": passed });
    if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
        doc.extend(body);
    }
    doc
}

fn error_document(err: &CliError) -> Value {
    let kind = match err.status() {
        Status::Usage => "usage",
        Status::GuardExceeded => "guard_exceeded",
        _ => "error",
    };
    json!({ "schema": SCHEMA_VERSION, "error": kind, "message": err.to_string() })
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    use args::Command;
    match &cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Dual(a) => commands::dual(a),
        Command::Quotient(a) => commands::quotient(a),
        Command::CohomologyTable(a) => commands::cohomology_table(a),
        Command::Jump(a) => commands::jump(a),
        Command::FreeLocus(a) => commands::free_locus(a),
    }
}

/// Runs a parsed command line, writes the report and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let (text, status) = match execute(cli) {
        Ok(outcome) => (outcome.render(cli.format), outcome.status()),
        Err(err) => {
            eprintln!("error: {err}");
            let text = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&error_document(&err)).expect("serializes")),
                _ => String::new(),
            };
            (text, err.status())
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: could not write the report: {e}");
        return Status::VerificationFailed.code();
    }
    status.code()
}
