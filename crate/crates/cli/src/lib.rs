//! Command-line front end for `bcover`: argument definitions, document
//! parsers, command dispatch and report rendering.

pub mod commands;
pub mod doc;
pub mod report;

use std::path::PathBuf;

use clap::Parser;

pub use commands::{dispatch, COMMANDS};
pub use doc::{
    emit_covering, parse_braid, parse_covering, parse_letters, parse_restriction, parse_system,
    parse_transport, CoveringDocument, TransportDocument,
};
pub use report::{emit, CommandReport, Format, Status};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{0}")]
    Invalid(String),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Library(#[from] bcover::Error),
}

impl InputError {
    pub fn new(message: impl Into<String>) -> Self {
        InputError::Invalid(message.into())
    }

    /// The enumeration bound when the error means "ran out of budget".
    pub fn cap(&self) -> Option<usize> {
        match self {
            InputError::Library(bcover::Error::CapExceeded { cap }) => Some(*cap),
            InputError::Library(bcover::Error::Inconclusive { max_cosets }) => Some(*max_cosets),
            _ => None,
        }
    }
}

/// Documents (`--covering`, `--curve`, …) are given inline as JSON or as a
/// path to a file holding the JSON.
#[derive(Parser, Debug, Clone, Default)]
#[command(
    name = "bcover",
    version,
    about = "Simple branched coverings of the disk"
)]
pub struct Args {
    /// One of the commands listed by --help.
    pub command: String,

    #[arg(long)]
    pub covering: Option<String>,
    /// Second covering for `equivalent`.
    #[arg(long)]
    pub other: Option<String>,
    /// Braid word such as "2 1 1 -2"; repeat for several words.
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Vec<String>,
    /// Number of branch points (strands).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub degree: Option<u32>,
    /// Cycle type as comma-separated parts, e.g. "3,1"; empty for identity.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Orbit cap or coset budget.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Base point of a restriction: start or end.
    #[arg(long)]
    pub base: Option<String>,
    /// Restricted indices as comma-separated list.
    #[arg(long)]
    pub indices: Option<String>,
    /// Restriction document {"indices": [...], "base": "start"|"end"}.
    #[arg(long)]
    pub restriction: Option<String>,
    /// Curve document {"base": j, "word": [...]}.
    #[arg(long)]
    pub curve: Option<String>,
    /// Interval document {"base": i, "word": [...]}.
    #[arg(long)]
    pub interval: Option<String>,
    #[arg(long = "system-a")]
    pub system_a: Option<String>,
    #[arg(long = "system-b")]
    pub system_b: Option<String>,
}

pub fn usage() -> String {
    format!(
        "usage: bcover <command> [options]\ncommands: {}\n",
        COMMANDS.join(", ")
    )
}
