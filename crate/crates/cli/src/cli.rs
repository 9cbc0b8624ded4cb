//! Argument parsing and command dispatch.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use orbit_rank_core::inference::{infer_with, InferOptions, InferenceError};
use orbit_rank_core::lie::catalog_schemas;

use crate::analyze::{analyze, catalog_algebra, load_algebra, AnalyzeOptions, CATALOG_PREFIX};
use crate::filtration_format::parse_filtration;
use crate::lie_file::{parse_algebra, render_lie_file};
use crate::report::{to_json, AnalysisReport, InferenceReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT_ERROR: u8 = 1;
pub const EXIT_REFUSED: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "orbit-rank", version, about = "Exact rank invariants of exponential Lie group C*-algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a `.lie` file and check the Jacobi identity.
    Validate {
        path: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the full analysis on one or more `.lie` files or `catalog:<name>[:<params>]` inputs.
    Analyze {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
        /// Sample points for the open-orbit component estimate.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Seed for every randomized step.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random candidates for the exponentiality screen.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Treat an unrefuted exponentiality screen as established.
        #[arg(long)]
        assume_exponential: bool,
        /// The group is a proper quotient of its universal cover.
        #[arg(long)]
        not_simply_connected: bool,
    },
    /// List the built-in algebras or print one as a `.lie` file.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Infer rank bounds for a filtration document (`.filt` or `.json`).
    Infer {
        path: String,
        #[command(flatten)]
        output: OutputArgs,
        /// Leave out the standard facts about the compact operators.
        #[arg(long)]
        without_compacts_facts: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Show every catalog name with its parameters.
    List,
    /// Print a catalog algebra in `.lie` format.
    Emit {
        /// `<name>[:<params>]`, summands joined by `+`.
        name: String,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    pub json: Option<String>,
}

/// Output of one command: text for stdout, optional JSON, diagnostics and
/// the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub json: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn error(message: impl std::fmt::Display) -> Self {
        Self {
            stderr: format!("error: {message}\n"),
            code: EXIT_INPUT_ERROR,
            ..Self::default()
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Validate { path, .. } => validate(path),
        Command::Analyze {
            inputs,
            samples,
            seed,
            trials,
            assume_exponential,
            not_simply_connected,
            ..
        } => {
            let options = AnalyzeOptions {
                samples: *samples,
                seed: *seed,
                trials: *trials,
                assume_exponential: *assume_exponential,
                simply_connected: !*not_simply_connected,
            };
            analyze_inputs(inputs, &options)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => catalog_list(),
            CatalogAction::Emit { name, .. } => catalog_emit(name),
        },
        Command::Infer {
            path,
            without_compacts_facts,
            ..
        } => infer_file(path, *without_compacts_facts),
    }
}

fn validate(path: &str) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(format!("{path}: {e}")),
    };
    match parse_algebra(&text) {
        Ok(l) => {
            let summary = serde_json::json!({
                "valid": true,
                "dim": l.dim(),
                "basis": l.names(),
                "nonzero_brackets": l.brackets().len(),
            });
            Outcome {
                stdout: format!(
                    "valid: dim {}, basis {}, nonzero brackets {}\n",
                    l.dim(),
                    l.names().join(" "),
                    l.brackets().len()
                ),
                json: Some(to_json(&summary)),
                ..Outcome::default()
            }
        }
        Err(e) => {
            let mut out = Outcome::error(format!("{path}: {e}"));
            out.json = Some(to_json(&serde_json::json!({ "valid": false, "error": e.to_string() })));
            out
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum BatchEntry {
    Report(Box<AnalysisReport>),
    InputError { input_error: String },
}

/// Reports come out in input order. A batch exits with 1 if any input could
/// not be read, otherwise 2 if any analysis was refused.
fn analyze_inputs(inputs: &[String], options: &AnalyzeOptions) -> Outcome {
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = inputs
            .iter()
            .map(|input| scope.spawn(move || load_algebra(input).map(|l| analyze(&l, options))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect()
    });
    let mut out = Outcome::default();
    let mut reports = Vec::new();
    let batch = inputs.len() > 1;
    for (input, result) in inputs.iter().zip(results) {
        match result {
            Ok(report) => {
                if batch {
                    out.stdout.push_str(&format!("== {input}\n"));
                }
                out.stdout.push_str(&report.render_text());
                if report.refused.is_some() {
                    out.code = out.code.max(EXIT_REFUSED);
                }
                reports.push(BatchEntry::Report(Box::new(report)));
            }
            Err(e) => {
                out.stderr.push_str(&format!("error: {e}\n"));
                out.code = EXIT_INPUT_ERROR;
                reports.push(BatchEntry::InputError {
                    input_error: e.to_string(),
                });
            }
        }
    }
    out.json = if batch {
        Some(to_json(&reports))
    } else if out.code == EXIT_INPUT_ERROR {
        None
    } else {
        reports.pop().map(|r| to_json(&r))
    };
    out
}

fn catalog_list() -> Outcome {
    let mut stdout = String::new();
    for (name, schema, description) in catalog_schemas() {
        let head = if schema.is_empty() {
            name.to_string()
        } else {
            format!("{name}:{schema}")
        };
        stdout.push_str(&format!("{head:<28} {description}\n"));
    }
    Outcome {
        stdout,
        ..Outcome::default()
    }
}

fn catalog_emit(spec: &str) -> Outcome {
    let spec = spec.strip_prefix(CATALOG_PREFIX).unwrap_or(spec);
    match catalog_algebra(spec) {
        Ok(l) => Outcome {
            stdout: format!("# catalog {spec}\n{}", render_lie_file(&l)),
            ..Outcome::default()
        },
        Err(e) => Outcome::error(e),
    }
}

fn infer_file(path: &str, without_compacts_facts: bool) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(format!("{path}: {e}")),
    };
    let doc = match parse_filtration(path, &text) {
        Ok(d) => d,
        Err(e) => return Outcome::error(format!("{path}: {e}")),
    };
    let mut options = InferOptions::default();
    if without_compacts_facts {
        options = options.without_compacts_facts();
    }
    match infer_with(&doc, &options) {
        Ok(table) => {
            let report = InferenceReport::new(&table, doc.notes());
            Outcome {
                stdout: report.render_text(),
                json: Some(to_json(&report)),
                ..Outcome::default()
            }
        }
        Err(e @ InferenceError::Contradiction { .. }) | Err(e @ InferenceError::NoFixpoint(_)) => {
            Outcome::error(format!("{path}: {e}"))
        }
    }
}

fn json_target(command: &Command) -> Option<&str> {
    match command {
        Command::Validate { output, .. }
        | Command::Analyze { output, .. }
        | Command::Infer { output, .. } => output.json.as_deref(),
        Command::Catalog { .. } => None,
    }
}

fn emit_target(command: &Command) -> Option<&str> {
    match command {
        Command::Catalog {
            action: CatalogAction::Emit { output, .. },
        } => output.as_deref(),
        _ => None,
    }
}

/// Parses the process arguments, runs the command and writes its output.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli.command);
    let mut stdout = outcome.stdout;
    let mut stderr = outcome.stderr;
    let mut code = outcome.code;
    match (json_target(&cli.command), &outcome.json) {
        (Some("-"), Some(json)) => stdout = json.clone(),
        (Some(path), Some(json)) => {
            if let Err(e) = fs::write(path, json) {
                stderr.push_str(&format!("error: cannot write {path}: {e}\n"));
                code = EXIT_INPUT_ERROR;
            }
        }
        _ => {}
    }
    if let Some(path) = emit_target(&cli.command) {
        if code == EXIT_OK {
            if let Err(e) = fs::write(path, &stdout) {
                stderr.push_str(&format!("error: cannot write {path}: {e}\n"));
                code = EXIT_INPUT_ERROR;
            }
            stdout.clear();
        }
    }
    let _ = std::io::stdout().write_all(stdout.as_bytes());
    let _ = std::io::stderr().write_all(stderr.as_bytes());
    ExitCode::from(code)
}
