//! Dominating clique minors: certificates, the verifier, exact decision and
//! optimization, and ordinary clique minors for contrast.
//!
//! A dominating `K_t` minor is an ordered sequence `(T_1, ..., T_t)` of
//! pairwise disjoint non-empty connected branch sets in which every vertex
//! of `T_j` has a neighbor in `T_i` whenever `i < j`. Branch sets need not
//! cover the vertex set. The dominating Hadwiger number `h_d(G)` is the
//! largest such `t`.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinorError {
    #[error("target order must be at least 1")]
    InvalidOrder,
}

// ============================================================================
// Certificates and the verifier
// ============================================================================

/// Ordered branch sets witnessing a dominating clique minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    branch_sets: Vec<VertexSet>,
}

impl MinorCertificate {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        MinorCertificate { branch_sets }
    }

    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn branch_sets(&self) -> &[VertexSet] {
        &self.branch_sets
    }

    /// Same certificate with every vertex pushed through `map` (old index ->
    /// new index), e.g. to lift a certificate of an induced subgraph back to
    /// its host.
    pub fn relabeled(&self, map: &[usize]) -> Self {
        MinorCertificate {
            branch_sets: self
                .branch_sets
                .iter()
                .map(|s| s.iter().map(|v| map[v]).collect())
                .collect(),
        }
    }
}

/// First-failure diagnostics for certificate verification. Indices are
/// zero-based positions in the branch-set sequence.
#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum CertificateViolation {
    #[error("branch set {index} contains vertex {vertex}, out of range for n={n}")]
    OutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("branch set {index} is empty")]
    Empty { index: usize },
    #[error("branch sets {i} and {j} overlap at vertex {vertex}")]
    Overlap { i: usize, j: usize, vertex: usize },
    #[error("branch set {index} does not induce a connected subgraph")]
    Disconnected { index: usize },
    #[error("vertex {vertex} of branch set {j} has no neighbor in branch set {i}")]
    Undominated { i: usize, j: usize, vertex: usize },
}

/// Checks every certificate invariant in `g`, reporting the first failure
/// in a fixed scan order (range, emptiness, overlap, connectivity,
/// domination).
pub fn verify_dominating(g: &Graph, cert: &MinorCertificate) -> Result<(), CertificateViolation> {
    let sets = cert.branch_sets();
    let full = g.vertex_set();
    for (index, &s) in sets.iter().enumerate() {
        if !s.is_subset_of(full) {
            let vertex = s.minus(full).least().expect("nonempty difference");
            return Err(CertificateViolation::OutOfRange {
                index,
                vertex,
                n: g.n(),
            });
        }
        if s.is_empty() {
            return Err(CertificateViolation::Empty { index });
        }
    }
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            let common = sets[i].intersect(sets[j]);
            if let Some(vertex) = common.least() {
                return Err(CertificateViolation::Overlap { i, j, vertex });
            }
        }
    }
    for (index, &s) in sets.iter().enumerate() {
        if !g.is_connected_subset(s) {
            return Err(CertificateViolation::Disconnected { index });
        }
    }
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            for vertex in sets[j].iter() {
                if !g.neighbors(vertex).intersects(sets[i]) {
                    return Err(CertificateViolation::Undominated { i, j, vertex });
                }
            }
        }
    }
    Ok(())
}

/// On-disk certificate: the host graph travels with its branch sets.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(default = "certificate_schema")]
    pub schema: String,
    pub n: usize,
    pub graph6: String,
    pub branch_sets: Vec<VertexSet>,
}

pub const CERTIFICATE_SCHEMA: &str = "domhad/certificate/v1";

fn certificate_schema() -> String {
    CERTIFICATE_SCHEMA.to_string()
}

impl CertificateFile {
    pub fn new(g: &Graph, cert: &MinorCertificate) -> Self {
        CertificateFile {
            schema: CERTIFICATE_SCHEMA.to_string(),
            n: g.n(),
            graph6: crate::graph6::to_graph6(g),
            branch_sets: cert.branch_sets().to_vec(),
        }
    }

    pub fn certificate(&self) -> MinorCertificate {
        MinorCertificate::new(self.branch_sets.clone())
    }
}

// ============================================================================
// Exact search
// ============================================================================

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Candidate branch sets tried; the machine-independent budget unit.
    pub nodes: u64,
}

/// Outcome of a single decision `h_d(G) >= t?`-style search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A valid certificate of order exactly `t`.
    Found(MinorCertificate),
    /// Search ran to completion: no such minor exists.
    Absent,
    /// The node budget ran out before the search completed.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

/// Result of computing `h_d(G)` under a budget.
#[derive(Debug, Clone)]
pub enum HdOutcome {
    Exact {
        value: usize,
        certificate: Option<MinorCertificate>,
        stats: SearchStats,
    },
    /// Budget ran out: the true value lies in `lower..=upper`.
    Exhausted {
        lower: usize,
        upper: usize,
        certificate: Option<MinorCertificate>,
        stats: SearchStats,
    },
}

impl HdOutcome {
    pub fn exact_value(&self) -> Option<usize> {
        match self {
            HdOutcome::Exact { value, .. } => Some(*value),
            HdOutcome::Exhausted { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&MinorCertificate> {
        match self {
            HdOutcome::Exact { certificate, .. } | HdOutcome::Exhausted { certificate, .. } => {
                certificate.as_ref()
            }
        }
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            HdOutcome::Exact { stats, .. } | HdOutcome::Exhausted { stats, .. } => *stats,
        }
    }
}

/// Completed negative answers, cached per (canonical form, t) for the life
/// of the process. Never persisted.
static NEGATIVE_CACHE: Mutex<Option<HashMap<(String, usize), ()>>> = Mutex::new(None);

fn negative_cached(key: &(String, usize)) -> bool {
    let guard = NEGATIVE_CACHE.lock().expect("cache lock");
    guard.as_ref().is_some_and(|m| m.contains_key(key))
}

fn cache_negative(key: (String, usize)) {
    let mut guard = NEGATIVE_CACHE.lock().expect("cache lock");
    guard.get_or_insert_with(HashMap::new).insert(key, ());
}

/// Decides whether `g` has a dominating `K_t` minor, returning a certificate
/// of order exactly `t`, a completed-search negative, or a budget overrun.
///
/// Search strategy: if a maximum clique already has `t` vertices, its first
/// `t` vertices form a singleton certificate. Otherwise branch sets are
/// discovered front to back; candidate first sets are connected subsets of
/// the admissible region enumerated smallest first (then lexicographically),
/// and the region for later sets shrinks to the neighbors of every earlier
/// set. Subproblems are memoized on (region, remaining count).
pub fn has_dominating_kt(g: &Graph, t: usize, budget: u64) -> Result<SearchResult, MinorError> {
    if t == 0 {
        return Err(MinorError::InvalidOrder);
    }
    let mut stats = SearchStats::default();
    if t > g.n() {
        return Ok(SearchResult {
            outcome: SearchOutcome::Absent,
            stats,
        });
    }
    let (omega, clique) = invariants::clique_number(g);
    if omega >= t {
        let sets = clique
            .iter()
            .take(t)
            .map(VertexSet::singleton)
            .collect::<Vec<_>>();
        let cert = MinorCertificate::new(sets);
        debug_assert!(verify_dominating(g, &cert).is_ok());
        return Ok(SearchResult {
            outcome: SearchOutcome::Found(cert),
            stats,
        });
    }
    let canon_key = (crate::canon::canonical_key(g), t);
    if negative_cached(&canon_key) {
        return Ok(SearchResult {
            outcome: SearchOutcome::Absent,
            stats,
        });
    }
    let mut searcher = Searcher {
        g,
        memo: HashMap::new(),
        choice: HashMap::new(),
        nodes: 0,
        budget,
    };
    let avail = g.vertex_set().bits();
    let outcome = match searcher.decide(avail, t) {
        Err(BudgetExhausted) => SearchOutcome::Exhausted,
        Ok(true) => {
            let cert = searcher.reconstruct(avail, t);
            debug_assert_eq!(cert.order(), t);
            debug_assert!(verify_dominating(g, &cert).is_ok());
            SearchOutcome::Found(cert)
        }
        Ok(false) => {
            cache_negative(canon_key);
            SearchOutcome::Absent
        }
    };
    stats.nodes = searcher.nodes;
    Ok(SearchResult { outcome, stats })
}

/// Exact `h_d(G)` with certificate, iterating the target upward from the
/// clique number (always a valid lower bound). A budget overrun yields the
/// best interval established so far.
pub fn hd(g: &Graph, budget: u64) -> HdOutcome {
    let mut stats = SearchStats::default();
    if g.n() == 0 {
        return HdOutcome::Exact {
            value: 0,
            certificate: None,
            stats,
        };
    }
    let (omega, clique) = invariants::clique_number(g);
    let mut best_value = omega;
    let mut best_cert =
        MinorCertificate::new(clique.iter().map(VertexSet::singleton).collect::<Vec<_>>());
    let mut t = omega + 1;
    while t <= g.n() {
        let remaining = budget.saturating_sub(stats.nodes);
        let result = has_dominating_kt(g, t, remaining).expect("t >= 1");
        stats.nodes += result.stats.nodes;
        match result.outcome {
            SearchOutcome::Found(cert) => {
                best_value = t;
                best_cert = cert;
                t += 1;
            }
            SearchOutcome::Absent => {
                return HdOutcome::Exact {
                    value: best_value,
                    certificate: Some(best_cert),
                    stats,
                }
            }
            SearchOutcome::Exhausted => {
                return HdOutcome::Exhausted {
                    lower: best_value,
                    upper: g.n(),
                    certificate: Some(best_cert),
                    stats,
                }
            }
        }
    }
    HdOutcome::Exact {
        value: best_value,
        certificate: Some(best_cert),
        stats,
    }
}

struct BudgetExhausted;

enum Choice {
    GreedyClique,
    Set(u64),
    LeastSingleton,
}

struct Searcher<'a> {
    g: &'a Graph,
    memo: HashMap<(u64, usize), bool>,
    choice: HashMap<(u64, usize), Choice>,
    nodes: u64,
    budget: u64,
}

impl Searcher<'_> {
    /// Does the admissible region `avail` contain `k` branch sets forming a
    /// domination chain?
    fn decide(&mut self, avail: u64, k: usize) -> Result<bool, BudgetExhausted> {
        if k == 0 {
            return Ok(true);
        }
        let size = avail.count_ones() as usize;
        if size < k {
            return Ok(false);
        }
        if k == 1 {
            self.choice.insert((avail, k), Choice::LeastSingleton);
            return Ok(true);
        }
        if let Some(&r) = self.memo.get(&(avail, k)) {
            return Ok(r);
        }
        if self.greedy_clique(avail).count_ones() as usize >= k {
            self.memo.insert((avail, k), true);
            self.choice.insert((avail, k), Choice::GreedyClique);
            return Ok(true);
        }
        let max_size = size - (k - 1);
        let mut result = false;
        // Capping collection at remaining-budget + 1 keeps memory bounded:
        // if the cap truncates, the loop below exhausts the budget before
        // running out of candidates, so a completed `false` is never based
        // on a truncated enumeration.
        let cap = (self.budget - self.nodes).saturating_add(1);
        let candidates = self.connected_subsets_sorted(avail, max_size, cap);
        for t_mask in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExhausted);
            }
            let rest = (avail & !t_mask) & self.neighbor_mask(t_mask);
            if self.decide(rest, k - 1)? {
                self.choice.insert((avail, k), Choice::Set(t_mask));
                result = true;
                break;
            }
        }
        self.memo.insert((avail, k), result);
        Ok(result)
    }

    fn reconstruct(&mut self, avail: u64, k: usize) -> MinorCertificate {
        let mut sets = Vec::with_capacity(k);
        let mut avail = avail;
        let mut k = k;
        while k > 0 {
            match self.choice.get(&(avail, k)) {
                Some(Choice::GreedyClique) => {
                    let clique = self.greedy_clique(avail);
                    sets.extend(
                        VertexSet::from_bits(clique)
                            .iter()
                            .take(k)
                            .map(VertexSet::singleton),
                    );
                    break;
                }
                Some(Choice::LeastSingleton) => {
                    let v = VertexSet::from_bits(avail).least().expect("nonempty");
                    sets.push(VertexSet::singleton(v));
                    break;
                }
                Some(Choice::Set(m)) => {
                    let m = *m;
                    sets.push(VertexSet::from_bits(m));
                    avail = (avail & !m) & self.neighbor_mask(m);
                    k -= 1;
                }
                None => unreachable!("reconstruction follows recorded choices"),
            }
        }
        MinorCertificate::new(sets)
    }

    fn neighbor_mask(&self, mask: u64) -> u64 {
        self.g.neighbors_of_set(VertexSet::from_bits(mask)).bits()
    }

    /// Least-vertex-first greedy clique inside `avail`.
    fn greedy_clique(&self, avail: u64) -> u64 {
        let mut clique = 0u64;
        let mut cand = avail;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            clique |= 1 << v;
            cand &= self.g.neighbors(v).bits();
        }
        clique
    }

    /// Non-empty connected subsets of `G[avail]` up to `max_size` vertices,
    /// sorted by size then mask value. At most `cap` subsets are collected.
    fn connected_subsets_sorted(&self, avail: u64, max_size: usize, cap: u64) -> Vec<u64> {
        let mut out = Vec::new();
        enumerate_connected_subsets(self.g, avail, max_size, &mut |m| {
            out.push(m);
            (out.len() as u64) < cap
        });
        out.sort_by_key(|&m| (m.count_ones(), m));
        out
    }
}

/// Calls `f` once per non-empty connected subset of `G[avail]` with at most
/// `max_size` vertices; `f` returns whether to keep going. Enumeration roots
/// each subset at its least vertex and extends only through exclusive
/// neighbors, so no subset repeats.
pub(crate) fn enumerate_connected_subsets(
    g: &Graph,
    avail: u64,
    max_size: usize,
    f: &mut impl FnMut(u64) -> bool,
) {
    if max_size == 0 {
        return;
    }
    let mut roots = avail;
    while roots != 0 {
        let r = roots.trailing_zeros() as usize;
        roots &= roots - 1;
        // Subsets whose least vertex is r live inside this mask.
        let allowed = avail & !((1u64 << r) - 1);
        let sub = 1u64 << r;
        let ext = g.neighbors(r).bits() & allowed & !sub;
        if !extend_connected(g, allowed, sub, ext, max_size, f) {
            return;
        }
    }
}

fn extend_connected(
    g: &Graph,
    allowed: u64,
    sub: u64,
    ext: u64,
    max_size: usize,
    f: &mut impl FnMut(u64) -> bool,
) -> bool {
    if !f(sub) {
        return false;
    }
    if (sub.count_ones() as usize) >= max_size {
        return true;
    }
    let nbr_sub = {
        let mut acc = 0u64;
        let mut s = sub;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            acc |= g.neighbors(v).bits();
        }
        acc
    };
    let mut work = ext;
    while work != 0 {
        let w = work.trailing_zeros() as usize;
        work &= work - 1;
        // Later branches exclude w; re-entry is blocked because w stays
        // adjacent to sub.
        let exclusive = g.neighbors(w).bits() & allowed & !sub & !nbr_sub & !(1u64 << w);
        if !extend_connected(g, allowed, sub | (1u64 << w), work | exclusive, max_size, f) {
            return false;
        }
    }
    true
}

// ============================================================================
// Ordinary clique minors (contrast)
// ============================================================================

/// Standard `K_t`-minor decision: pairwise disjoint connected branch sets
/// with some edge between every pair, order-free.
pub fn has_kt_minor(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    if t > g.n() {
        return false;
    }
    if invariants::clique_number(g).0 >= t {
        return true;
    }
    // Families are enumerated with strictly increasing least vertices.
    fn rec(g: &Graph, avail: u64, min_floor: u64, sets: &mut Vec<u64>, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let region = avail & !min_floor;
        if (region.count_ones() as usize) < remaining {
            return false;
        }
        let max_size = (region.count_ones() as usize) - (remaining - 1);
        let mut found = false;
        enumerate_connected_subsets(g, region, max_size, &mut |t_mask| {
            let nbr = g.neighbors_of_set(VertexSet::from_bits(t_mask)).bits();
            if sets.iter().any(|&s| s & nbr == 0) {
                return true;
            }
            let least = t_mask.trailing_zeros();
            sets.push(t_mask);
            if rec(
                g,
                avail & !t_mask,
                (1u64 << least) | ((1u64 << least) - 1),
                sets,
                remaining - 1,
            ) {
                found = true;
            }
            sets.pop();
            !found
        });
        found
    }
    rec(g, g.vertex_set().bits(), 0, &mut Vec::new(), t)
}
