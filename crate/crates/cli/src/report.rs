//! Command reports and their JSON / text renderings.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    InvalidInput,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::InvalidInput => 1,
            Status::Inconclusive => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::InvalidInput => "invalid-input",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Outcome of one command. `result` is present exactly when the status is
/// ok; `cap` is set for inconclusive runs and `error` for invalid input.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    pub inputs: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Map<String, Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Renders a report. JSON is a single line; text has one `key: value` line
/// per field, with inputs and result fields prefixed by their section.
pub fn emit(report: &CommandReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string(report).expect("plain data");
            out.push('\n');
            out
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("command: {}\n", report.command));
            out.push_str(&format!("status: {}\n", report.status.name()));
            for (k, v) in &report.inputs {
                out.push_str(&format!("input.{k}: {}\n", compact(v)));
            }
            if let Some(result) = &report.result {
                for (k, v) in result {
                    out.push_str(&format!("{k}: {}\n", compact(v)));
                }
            }
            if let Some(cap) = report.cap {
                out.push_str(&format!("cap: {cap}\n"));
            }
            if let Some(error) = &report.error {
                out.push_str(&format!("error: {error}\n"));
            }
            out
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
