//! Exhaustive enumeration of graphs with independence number at most two,
//! graph6 ingest, and checkpointed counterexample hunt campaigns.

pub mod campaign;
pub mod enumerate;

use std::path::PathBuf;

use thiserror::Error;

pub use campaign::{run_hunt, Filters, HuntConfig, PerNCounts, SearchReport, Source, Violation};
pub use enumerate::{enumerate_alpha2, triangle_free_graphs, GENERATOR_LIMIT};

#[derive(Debug, Error)]
pub enum HuntError {
    #[error("generator supports 1..={limit} vertices, got {n}")]
    GeneratorRange { n: usize, limit: usize },
    #[error("parse error at line {line}: {source}")]
    Parse {
        line: usize,
        source: crate::graph6::Graph6Error,
    },
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("checkpoint config hash {found} does not match current config {expected}")]
    CheckpointMismatch { expected: String, found: String },
    #[error("checkpoint file is malformed: {0}")]
    CheckpointFormat(String),
    #[error("unknown predicate {0:?}")]
    BadPredicate(String),
    #[error("filter pattern error: {0}")]
    Filter(#[from] crate::catalog::CatalogError),
    #[error("theorem evaluation error: {0}")]
    Theorem(#[from] crate::theorems::TheoremError),
}

/// How ingested records are interpreted.
#[derive(Debug, Clone, Copy, Default, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct IngestOptions {
    /// Records encode the complements of the intended graphs (the native
    /// output of triangle-free generators).
    #[serde(default)]
    pub records_are_complements: bool,
    /// Drop graphs whose independence number exceeds two (counted, not
    /// fatal).
    #[serde(default)]
    pub require_alpha2: bool,
}

#[derive(Debug, Clone)]
pub struct IngestResult {
    pub graphs: Vec<crate::graph::Graph>,
    pub rejected_alpha: usize,
}

/// Reads a newline-separated graph6 file. Parse failures abort with their
/// line number; an optional `>>graph6<<` header line is tolerated.
pub fn ingest(path: &std::path::Path, options: IngestOptions) -> Result<IngestResult, HuntError> {
    let text = std::fs::read_to_string(path).map_err(|e| HuntError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    ingest_str(&text, options)
}

pub fn ingest_str(text: &str, options: IngestOptions) -> Result<IngestResult, HuntError> {
    let mut graphs = Vec::new();
    let mut rejected_alpha = 0usize;
    for (i, raw_line) in text.lines().enumerate() {
        let mut line = raw_line.trim();
        if let Some(rest) = line.strip_prefix(">>graph6<<") {
            line = rest.trim();
        }
        if line.is_empty() {
            continue;
        }
        let decoded = crate::graph6::from_graph6(line).map_err(|source| HuntError::Parse {
            line: i + 1,
            source,
        })?;
        let g = if options.records_are_complements {
            decoded.complement()
        } else {
            decoded
        };
        if options.require_alpha2 && !crate::invariants::alpha_le_2(&g) {
            rejected_alpha += 1;
            continue;
        }
        graphs.push(g);
    }
    Ok(IngestResult {
        graphs,
        rejected_alpha,
    })
}
