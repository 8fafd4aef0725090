//! Hunt campaigns: evaluate a predicate over an enumerated or ingested
//! graph stream with filters, worker parallelism, atomic checkpoints and a
//! deterministic report.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::graph::Graph;
use crate::hunt::{enumerate, ingest, HuntError, IngestOptions};
use crate::invariants;
use crate::minor;
use crate::pattern;
use crate::theorems::{self, Status};

pub const REPORT_SCHEMA: &str = "domhad/hunt-report/v1";
pub const CHECKPOINT_SCHEMA: &str = "domhad/hunt-checkpoint/v1";

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "DOMHAD_HUNT_WORKERS";

fn default_budget() -> u64 {
    50_000_000
}

fn default_checkpoint_interval() -> u64 {
    256
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", tag = "kind")]
#[derive(Default)]
pub enum Source {
    /// Internal generator of all graphs with independence number at most 2.
    #[default]
    Generate,
    /// graph6 file on disk.
    Ingest {
        path: PathBuf,
        #[serde(default)]
        records_are_complements: bool,
        #[serde(default)]
        require_alpha2: bool,
    },
}

/// Structural filters applied before the predicate; ranges are inclusive.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Filters {
    #[serde(default)]
    pub h_free: Vec<String>,
    #[serde(default)]
    pub omega: Option<(usize, usize)>,
    #[serde(default)]
    pub delta: Option<(usize, usize)>,
    #[serde(default)]
    pub kappa: Option<(usize, usize)>,
}

/// A hunt campaign. `predicate` is a theorem id from the verdict suite, or
/// one of the raw targets `raw:hd-ge-half` / `raw:hd-ge-chi` (a graph fails
/// when the bound does not hold).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HuntConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub predicate: String,
    #[serde(default)]
    pub filters: Filters,
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub source: Source,
    #[serde(default)]
    pub workers: Option<usize>,
    #[serde(default)]
    pub checkpoint_path: Option<PathBuf>,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default = "default_checkpoint_interval")]
    pub checkpoint_interval: u64,
    /// Testing hook: stop (with a checkpoint) after this many graphs have
    /// been consumed over the life of the campaign.
    #[serde(default)]
    pub stop_after: Option<u64>,
}

/// The semantic portion of the config: what is searched, not how the run is
/// scheduled. The report echoes exactly this, so reports are byte-identical
/// across worker counts and kill/resume cycles.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub n_min: usize,
    pub n_max: usize,
    pub predicate: String,
    pub filters: Filters,
    pub budget: u64,
    pub source: Source,
}

impl HuntConfig {
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            n_min: self.n_min,
            n_max: self.n_max,
            predicate: self.predicate.clone(),
            filters: self.filters.clone(),
            budget: self.budget,
            source: self.source.clone(),
        }
    }

    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(&self.echo()).expect("config serializes");
        let mut hasher = Sha256::new();
        hasher.update(&bytes);
        hex_string(&hasher.finalize())
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct PerNCounts {
    pub enumerated: u64,
    pub filtered_in: u64,
    pub pass: u64,
    pub not_applicable: u64,
    pub budget_exhausted: u64,
    pub fail: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub n: usize,
    pub graph6: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timing {
    pub wall_ms: u64,
    /// Accumulated per-graph evaluation time across workers.
    pub cpu_ms: u64,
    pub workers: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub schema: String,
    pub config: ConfigEcho,
    pub config_hash: String,
    pub complete: bool,
    pub per_n: BTreeMap<usize, PerNCounts>,
    pub violations: Vec<Violation>,
    /// Next unprocessed index per n; equals `enumerated` when done.
    pub cursor: BTreeMap<usize, u64>,
    /// graph6 of budget-exhausted graphs, queued for a retry run.
    pub retry: Vec<String>,
    pub timing: Timing,
}

impl SearchReport {
    /// Canonical JSON with the volatile timing section removed; two runs of
    /// the same campaign agree on this byte-for-byte.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("timing");
        let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn full_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    schema: String,
    config_hash: String,
    per_n: BTreeMap<usize, PerNCounts>,
    cursor: BTreeMap<usize, u64>,
    violations: Vec<Violation>,
    retry: Vec<String>,
    processed: u64,
}

#[derive(Clone, Copy)]
enum ParsedPredicate<'a> {
    Theorem(&'a str),
    HdGeHalf,
    HdGeChi,
}

fn parse_predicate(s: &str) -> Result<ParsedPredicate<'_>, HuntError> {
    match s {
        "raw:hd-ge-half" => Ok(ParsedPredicate::HdGeHalf),
        "raw:hd-ge-chi" => Ok(ParsedPredicate::HdGeChi),
        id => {
            // Validate the id once against a trivial instance.
            let probe = Graph::complete(1).expect("K_1");
            match theorems::check_theorem(&probe, id, 1) {
                Ok(_) => Ok(ParsedPredicate::Theorem(id)),
                Err(theorems::TheoremError::UnknownTheorem { .. }) => {
                    Err(HuntError::BadPredicate(id.to_string()))
                }
                Err(e) => Err(HuntError::Theorem(e)),
            }
        }
    }
}

enum EvalOutcome {
    Pass,
    NotApplicable,
    BudgetExhausted,
    Fail { detail: Value },
}

fn evaluate_graph(
    g: &Graph,
    predicate: ParsedPredicate<'_>,
    budget: u64,
) -> Result<EvalOutcome, HuntError> {
    match predicate {
        ParsedPredicate::Theorem(id) => {
            let verdict = theorems::check_theorem(g, id, budget)?;
            Ok(match verdict.status {
                Status::Pass => EvalOutcome::Pass,
                Status::NotApplicable => EvalOutcome::NotApplicable,
                Status::BudgetExhausted => EvalOutcome::BudgetExhausted,
                Status::Fail => {
                    let mut detail = serde_json::to_value(&verdict).expect("serializable");
                    // Node counts are profiling data, not witness data; drop
                    // them so reports stay byte-stable.
                    detail.as_object_mut().expect("object").remove("nodes");
                    EvalOutcome::Fail { detail }
                }
            })
        }
        ParsedPredicate::HdGeHalf => Ok(decide_bound(g, g.n().div_ceil(2), "ceil(n/2)", budget)),
        ParsedPredicate::HdGeChi => match invariants::chromatic_number(g) {
            Err(_) => Ok(EvalOutcome::BudgetExhausted),
            Ok(chi) => Ok(decide_bound(g, chi, "chi", budget)),
        },
    }
}

fn decide_bound(g: &Graph, target: usize, label: &str, budget: u64) -> EvalOutcome {
    if target == 0 {
        return EvalOutcome::Pass;
    }
    match minor::has_dominating_kt(g, target, budget)
        .expect("target >= 1")
        .outcome
    {
        minor::SearchOutcome::Found(_) => EvalOutcome::Pass,
        minor::SearchOutcome::Exhausted => EvalOutcome::BudgetExhausted,
        minor::SearchOutcome::Absent => EvalOutcome::Fail {
            detail: json!({
                "predicate": format!("h_d >= {label}"),
                "target": target,
                "completed_negative": true,
                "graph6": crate::graph6::to_graph6(g),
            }),
        },
    }
}

struct CompiledFilters {
    patterns: Vec<Graph>,
    omega: Option<(usize, usize)>,
    delta: Option<(usize, usize)>,
    kappa: Option<(usize, usize)>,
}

impl CompiledFilters {
    fn compile(f: &Filters) -> Result<Self, HuntError> {
        let patterns = f
            .h_free
            .iter()
            .map(|name| crate::catalog::catalog(name))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CompiledFilters {
            patterns,
            omega: f.omega,
            delta: f.delta,
            kappa: f.kappa,
        })
    }

    fn admits(&self, g: &Graph) -> bool {
        let in_range = |v: usize, r: Option<(usize, usize)>| match r {
            None => true,
            Some((lo, hi)) => v >= lo && v <= hi,
        };
        if !in_range(g.min_degree(), self.delta) {
            return false;
        }
        if let Some(range) = self.omega {
            if !in_range(invariants::clique_number(g).0, Some(range)) {
                return false;
            }
        }
        if let Some(range) = self.kappa {
            if !in_range(g.vertex_connectivity(), Some(range)) {
                return false;
            }
        }
        self.patterns
            .iter()
            .all(|h| pattern::find_induced(g, h).is_none())
    }
}

fn worker_count(config: &HuntConfig) -> usize {
    if let Ok(value) = std::env::var(WORKERS_ENV) {
        if let Ok(n) = value.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    config.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get().min(8))
            .unwrap_or(1)
    })
}

/// Runs (or resumes) a campaign. The report is independent of the worker
/// count and of any kill/resume cycle at checkpoint boundaries.
pub fn run_hunt(config: &HuntConfig, resume: bool) -> Result<SearchReport, HuntError> {
    let started = Instant::now();
    let predicate = parse_predicate(&config.predicate)?;
    let filters = CompiledFilters::compile(&config.filters)?;
    let hash = config.hash();
    let workers = worker_count(config);

    let mut state = if resume {
        match &config.checkpoint_path {
            Some(path) if path.exists() => load_checkpoint(path, &hash)?,
            _ => fresh_checkpoint(&hash),
        }
    } else {
        fresh_checkpoint(&hash)
    };

    // Ingested files are read once and grouped by vertex count.
    let ingested: Option<BTreeMap<usize, Vec<Graph>>> = match &config.source {
        Source::Generate => None,
        Source::Ingest {
            path,
            records_are_complements,
            require_alpha2,
        } => {
            let result = ingest(
                path,
                IngestOptions {
                    records_are_complements: *records_are_complements,
                    require_alpha2: *require_alpha2,
                },
            )?;
            let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
            for g in result.graphs {
                by_n.entry(g.n()).or_default().push(g);
            }
            Some(by_n)
        }
    };

    let mut cpu_us = 0u64;
    let mut stopped_early = false;

    'outer: for n in config.n_min..=config.n_max {
        let graphs: Vec<Graph> = match &ingested {
            Some(by_n) => by_n.get(&n).cloned().unwrap_or_default(),
            None => enumerate::enumerate_alpha2(n)?,
        };
        state.per_n.entry(n).or_default();
        let mut cursor = *state.cursor.get(&n).unwrap_or(&0) as usize;
        state.cursor.insert(n, cursor as u64);
        while cursor < graphs.len() {
            let mut batch_len = (graphs.len() - cursor).min(config.checkpoint_interval as usize);
            if let Some(stop) = config.stop_after {
                if state.processed >= stop {
                    stopped_early = true;
                    break 'outer;
                }
                batch_len = batch_len.min((stop - state.processed) as usize);
            }
            let batch = &graphs[cursor..cursor + batch_len];
            let (slots, busy_us) =
                evaluate_batch(batch, predicate, &filters, config.budget, workers)?;
            cpu_us += busy_us;
            for (g, slot) in batch.iter().zip(slots) {
                apply_slot(&mut state, n, g, slot);
            }
            cursor += batch_len;
            state.cursor.insert(n, cursor as u64);
            state.processed += batch_len as u64;
            if let Some(path) = &config.checkpoint_path {
                write_checkpoint(path, &state)?;
            }
        }
    }

    let complete = !stopped_early;
    if let Some(path) = &config.checkpoint_path {
        write_checkpoint(path, &state)?;
    }
    let report = SearchReport {
        schema: REPORT_SCHEMA.to_string(),
        config: config.echo(),
        config_hash: hash,
        complete,
        per_n: state.per_n,
        violations: state.violations,
        cursor: state.cursor,
        retry: state.retry,
        timing: Timing {
            wall_ms: started.elapsed().as_millis() as u64,
            cpu_ms: cpu_us / 1000,
            workers,
        },
    };
    if let Some(path) = &config.output_path {
        write_atomic(path, report.full_json().as_bytes()).map_err(|e| HuntError::Io {
            path: path.clone(),
            message: e.to_string(),
        })?;
        if !report.retry.is_empty() {
            let retry_path = path.with_extension("retry.g6");
            let mut lines = report.retry.join("\n");
            lines.push('\n');
            write_atomic(&retry_path, lines.as_bytes()).map_err(|e| HuntError::Io {
                path: retry_path.clone(),
                message: e.to_string(),
            })?;
        }
    }
    Ok(report)
}

enum Slot {
    FilteredOut,
    Evaluated(EvalOutcome),
}

/// Evaluates one batch, splitting items across workers round-robin and
/// restoring enumeration order in the merge.
fn evaluate_batch(
    batch: &[Graph],
    predicate: ParsedPredicate<'_>,
    filters: &CompiledFilters,
    budget: u64,
    workers: usize,
) -> Result<(Vec<Slot>, u64), HuntError> {
    // Filters run on the main thread (they are cheap); the predicate runs on
    // the workers.
    let mut slots: Vec<Slot> = Vec::with_capacity(batch.len());
    let mut pending: Vec<usize> = Vec::new();
    for (i, g) in batch.iter().enumerate() {
        if filters.admits(g) {
            pending.push(i);
        }
        slots.push(Slot::FilteredOut);
    }
    if pending.is_empty() {
        return Ok((slots, 0));
    }
    let effective = workers.max(1).min(pending.len());
    let chunks: Vec<Vec<usize>> = (0..effective)
        .map(|w| pending.iter().copied().skip(w).step_by(effective).collect())
        .collect();
    let outputs = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in &chunks {
            let chunk = chunk.clone();
            handles.push(scope.spawn(move || {
                let start = Instant::now();
                let mut out: Vec<(usize, Result<EvalOutcome, HuntError>)> = Vec::new();
                for i in chunk {
                    out.push((i, evaluate_graph(&batch[i], predicate, budget)));
                }
                (out, start.elapsed().as_micros() as u64)
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut busy_total = 0u64;
    for (chunk_out, busy) in outputs {
        busy_total += busy;
        for (i, res) in chunk_out {
            slots[i] = Slot::Evaluated(res?);
        }
    }
    Ok((slots, busy_total))
}

fn apply_slot(state: &mut Checkpoint, n: usize, g: &Graph, slot: Slot) {
    let counts = state.per_n.entry(n).or_default();
    counts.enumerated += 1;
    let outcome = match slot {
        Slot::FilteredOut => return,
        Slot::Evaluated(o) => o,
    };
    counts.filtered_in += 1;
    match outcome {
        EvalOutcome::Pass => counts.pass += 1,
        EvalOutcome::NotApplicable => counts.not_applicable += 1,
        EvalOutcome::BudgetExhausted => {
            counts.budget_exhausted += 1;
            state.retry.push(crate::graph6::to_graph6(g));
        }
        EvalOutcome::Fail { detail } => {
            counts.fail += 1;
            state.violations.push(Violation {
                n,
                graph6: crate::graph6::to_graph6(g),
                detail,
            });
        }
    }
}

fn fresh_checkpoint(hash: &str) -> Checkpoint {
    Checkpoint {
        schema: CHECKPOINT_SCHEMA.to_string(),
        config_hash: hash.to_string(),
        per_n: BTreeMap::new(),
        cursor: BTreeMap::new(),
        violations: Vec::new(),
        retry: Vec::new(),
        processed: 0,
    }
}

fn load_checkpoint(path: &Path, expected_hash: &str) -> Result<Checkpoint, HuntError> {
    let text = std::fs::read_to_string(path).map_err(|e| HuntError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let cp: Checkpoint =
        serde_json::from_str(&text).map_err(|e| HuntError::CheckpointFormat(e.to_string()))?;
    if cp.schema != CHECKPOINT_SCHEMA {
        return Err(HuntError::CheckpointFormat(format!(
            "unexpected schema {}",
            cp.schema
        )));
    }
    if cp.config_hash != expected_hash {
        return Err(HuntError::CheckpointMismatch {
            expected: expected_hash.to_string(),
            found: cp.config_hash,
        });
    }
    Ok(cp)
}

fn write_checkpoint(path: &Path, cp: &Checkpoint) -> Result<(), HuntError> {
    let mut text = serde_json::to_string_pretty(cp).expect("checkpoint serializes");
    text.push('\n');
    write_atomic(path, text.as_bytes()).map_err(|e| HuntError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Write-then-rename so a crash never leaves a torn file.
fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)
}
