//! Stable JSON envelope shared by every command. The schema is `docs/report.schema.json`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::PairArgs;

pub const SCHEMA: &str = "ciext-report/1";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Undecidable,
    Violation,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violation => 2,
            Status::Undecidable => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Bounds {
    pub max_step: usize,
    pub window: usize,
    pub fit_window_start: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Output {
    pub command: String,
    pub text: String,
    pub csv: Option<String>,
    pub json: Value,
    /// Set by `report --json` so the JSON form is printed without the global flag.
    pub prefer_json: bool,
    pub status: Status,
}

impl Output {
    pub fn new(command: &str, text: String, json: Value) -> Self {
        Output {
            command: command.to_string(),
            text,
            csv: None,
            json,
            prefer_json: false,
            status: Status::Ok,
        }
    }
}

pub fn envelope(
    command: &str,
    pair: Option<&PairArgs>,
    seed: Option<u64>,
    bounds: Option<Bounds>,
    heuristic: bool,
    warnings: &[String],
    result: Value,
) -> Value {
    json!({
        "schema": SCHEMA,
        "engine_version": ENGINE_VERSION,
        "command": command,
        "pair": pair.map(|p| json!({"m": p.m, "n": p.n})),
        "seed": seed,
        "bounds": bounds,
        "heuristic": heuristic,
        "warnings": warnings,
        "result": result,
    })
}
