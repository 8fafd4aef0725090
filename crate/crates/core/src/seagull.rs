//! Seagulls (induced three-vertex paths), exact disjoint packing, clique
//! capacity, and the four feasibility conditions of the packing
//! characterization for graphs with independence number at most two.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::canon;
use crate::catalog;
use crate::graph::{Graph, VertexSet};
use crate::invariants;
use crate::matching;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeagullError {
    #[error("capacity enumeration needs at least one vertex")]
    EmptyGraph,
    #[error("capacity enumeration over all cliques is limited to {limit} vertices, got {n}")]
    CapacityBudget { n: usize, limit: usize },
    #[error("the characterization requires independence number at most 2")]
    AlphaTooLarge,
    #[error("the pair (W_5, 2) is excluded from the characterization")]
    ExcludedPair,
}

/// All-clique capacity enumeration bound; beyond this the search space is
/// no longer desk-scale.
pub const CAPACITY_ENUMERATION_LIMIT: usize = 16;

/// An induced path on three vertices: ends are non-adjacent, both adjacent
/// to the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Seagull {
    pub end_a: usize,
    pub center: usize,
    pub end_c: usize,
}

impl Seagull {
    pub fn vertices(&self) -> VertexSet {
        [self.end_a, self.center, self.end_c].into_iter().collect()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.vertices().len() == 3
            && g.has_edge(self.end_a, self.center)
            && g.has_edge(self.center, self.end_c)
            && !g.has_edge(self.end_a, self.end_c)
    }
}

/// Every seagull of `g`, ends normalized `end_a < end_c`, sorted by vertex
/// set mask. A three-vertex set induces at most one seagull (the center is
/// the unique degree-two vertex), so the order is canonical.
pub fn all_seagulls(g: &Graph) -> Vec<Seagull> {
    let mut out = Vec::new();
    for center in 0..g.n() {
        let nbrs = g.neighbors(center);
        for end_a in nbrs.iter() {
            for end_c in nbrs.iter() {
                if end_a < end_c && !g.has_edge(end_a, end_c) {
                    out.push(Seagull {
                        end_a,
                        center,
                        end_c,
                    });
                }
            }
        }
    }
    out.sort_by_key(|s| s.vertices().bits());
    out
}

/// Exact maximum number of pairwise vertex-disjoint seagulls, with one
/// maximum packing as witness.
pub fn max_disjoint_seagulls(g: &Graph) -> (usize, Vec<Seagull>) {
    let seagulls = all_seagulls(g);
    let mut by_min: Vec<Vec<(u64, Seagull)>> = vec![Vec::new(); g.n()];
    for s in &seagulls {
        let mask = s.vertices().bits();
        by_min[mask.trailing_zeros() as usize].push((mask, *s));
    }
    let mut memo: HashMap<u64, usize> = HashMap::new();
    let best = pack(g.vertex_set().bits(), &by_min, &mut memo);

    // Rebuild one optimal packing by walking the memo table.
    let mut witness = Vec::with_capacity(best);
    let mut avail = g.vertex_set().bits();
    while avail != 0 {
        let v = avail.trailing_zeros() as usize;
        let want = pack(avail, &by_min, &mut memo);
        if want == 0 {
            break;
        }
        let mut advanced = false;
        for &(mask, s) in &by_min[v] {
            if mask & avail == mask && 1 + pack(avail & !mask, &by_min, &mut memo) == want {
                witness.push(s);
                avail &= !mask;
                advanced = true;
                break;
            }
        }
        if !advanced {
            avail &= !(1u64 << v);
        }
    }
    debug_assert_eq!(witness.len(), best);
    (best, witness)
}

/// Max packing inside `avail`: branch on the least available vertex, either
/// skipped or covered by one of the seagulls rooted at it.
fn pack(avail: u64, by_min: &[Vec<(u64, Seagull)>], memo: &mut HashMap<u64, usize>) -> usize {
    if avail == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&avail) {
        return v;
    }
    let v = avail.trailing_zeros() as usize;
    let mut best = pack(avail & !(1u64 << v), by_min, memo);
    for &(mask, _) in &by_min[v] {
        if mask & avail == mask {
            best = best.max(1 + pack(avail & !mask, by_min, memo));
        }
    }
    memo.insert(avail, best);
    best
}

// ============================================================================
// Clique capacity
// ============================================================================

/// A clique `K` with its boundary `K*` (vertices outside `K` neither
/// complete nor anticomplete to it) and the capacity `(n + |K*| - |K|) / 2`,
/// stored doubled to stay in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueCapacity {
    pub clique: VertexSet,
    pub boundary: VertexSet,
    pub capacity_twice: usize,
}

impl CliqueCapacity {
    pub fn capacity(&self) -> f64 {
        self.capacity_twice as f64 / 2.0
    }
}

/// Capacity of one clique (`set` must be a non-empty clique).
pub fn clique_capacity(g: &Graph, set: VertexSet) -> CliqueCapacity {
    debug_assert!(!set.is_empty() && g.is_clique(set));
    let mut boundary = VertexSet::EMPTY;
    let k = set.len();
    for v in set.complement_within(g.n()).iter() {
        let hits = g.neighbors(v).intersect(set).len();
        if hits > 0 && hits < k {
            boundary.insert(v);
        }
    }
    CliqueCapacity {
        clique: set,
        boundary,
        capacity_twice: g.n() + boundary.len() - k,
    }
}

/// Minimum capacity over all non-empty cliques (not only maximal ones),
/// with a witness clique attaining it.
///
/// Enumerates cliques by ascending-vertex extension. A branch is cut when
/// even the most optimistic completion (every candidate joins the clique,
/// no vertex ever leaves the guaranteed boundary) cannot beat the best.
pub fn min_clique_capacity(g: &Graph) -> Result<CliqueCapacity, SeagullError> {
    let n = g.n();
    if n == 0 {
        return Err(SeagullError::EmptyGraph);
    }
    if n > CAPACITY_ENUMERATION_LIMIT {
        return Err(SeagullError::CapacityBudget {
            n,
            limit: CAPACITY_ENUMERATION_LIMIT,
        });
    }
    let mut best: Option<CliqueCapacity> = None;
    let mut stack: Vec<(VertexSet, VertexSet)> = (0..n)
        .rev()
        .map(|v| {
            let cand = g
                .neighbors(v)
                .intersect(VertexSet::from_bits(!0u64 << (v + 1)));
            (VertexSet::singleton(v), cand)
        })
        .collect();
    while let Some((clique, cand)) = stack.pop() {
        let cc = clique_capacity(g, clique);
        if best.is_none_or(|b| cc.capacity_twice < b.capacity_twice) {
            best = Some(cc);
        }
        if let Some(b) = best {
            // Vertices outside clique ∪ cand that already straddle the clique
            // stay in the boundary of every extension.
            let outside = clique.union(cand).complement_within(n);
            let mut locked = 0usize;
            for v in outside.iter() {
                let hits = g.neighbors(v).intersect(clique).len();
                if hits > 0 && hits < clique.len() + cand.len() {
                    // May still become complete if it is adjacent to all of
                    // clique and cand; only count it when impossible.
                    if !clique.minus(g.neighbors(v)).is_empty() {
                        locked += 1;
                    }
                }
            }
            let optimistic = n + locked - (clique.len() + cand.len());
            if optimistic >= b.capacity_twice {
                continue;
            }
        }
        for v in cand.iter() {
            let next_cand = cand
                .intersect(g.neighbors(v))
                .intersect(VertexSet::from_bits(!0u64 << (v + 1)));
            stack.push((clique.with(v), next_cand));
        }
    }
    Ok(best.expect("n >= 1 gives at least singleton cliques"))
}

// ============================================================================
// Feasibility conditions
// ============================================================================

/// Verdicts for the four conditions at a target `ell`, plus the sporadic
/// exception flag.
#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityReport {
    pub ell: usize,
    pub n: usize,
    pub alpha_le_2: bool,
    /// (i) `n >= 3*ell`.
    pub cond_size: bool,
    /// (ii) vertex connectivity at least `ell`.
    pub cond_connectivity: bool,
    pub kappa: usize,
    /// (iii) every clique has capacity at least `ell`.
    pub cond_capacity: bool,
    pub min_capacity: Option<CliqueCapacity>,
    /// (iv) the complement admits a matching of size `ell`.
    pub cond_anti_matching: bool,
    pub anti_matching_size: usize,
    pub anti_matching_witness: Vec<(usize, usize)>,
    /// `G` is the 5-wheel and `ell == 2`.
    pub exception_w5_ell2: bool,
}

impl FeasibilityReport {
    pub fn all_conditions_hold(&self) -> bool {
        self.cond_size && self.cond_connectivity && self.cond_capacity && self.cond_anti_matching
    }
}

pub fn is_w5(g: &Graph) -> bool {
    g.n() == 6
        && g.edge_count() == 10
        && canon::are_isomorphic(g, &catalog::catalog("W_5").expect("fixed name"))
}

/// Evaluates all four conditions. Computable for any graph; the
/// biconditional against packing only applies when `alpha_le_2` is set.
pub fn feasibility(g: &Graph, ell: usize) -> Result<FeasibilityReport, SeagullError> {
    let kappa = g.vertex_connectivity();
    let min_capacity = if g.n() == 0 {
        None
    } else {
        Some(min_clique_capacity(g)?)
    };
    let anti_edges = matching::matching_edges(&g.complement());
    let anti_mu = anti_edges.len();
    Ok(FeasibilityReport {
        ell,
        n: g.n(),
        alpha_le_2: invariants::alpha_le_2(g),
        cond_size: g.n() >= 3 * ell,
        cond_connectivity: kappa >= ell,
        kappa,
        cond_capacity: ell == 0
            || min_capacity
                .map(|c| c.capacity_twice >= 2 * ell)
                .unwrap_or(true),
        min_capacity,
        cond_anti_matching: anti_mu >= ell,
        anti_matching_size: anti_mu,
        anti_matching_witness: anti_edges,
        exception_w5_ell2: ell == 2 && is_w5(g),
    })
}

/// Both sides of the packing characterization, for one `(G, ell)` pair.
#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckVerdict {
    pub ell: usize,
    pub conditions_hold: bool,
    pub packing_reaches_ell: bool,
    pub max_packing: usize,
    /// True when the two sides disagree, which would indicate a bug in one
    /// of the implementations (the equivalence is a proven theorem).
    pub discrepancy: bool,
}

/// Asserts the biconditional on an admissible pair: all four conditions hold
/// iff `ell` disjoint seagulls exist.
pub fn crosscheck_characterization(
    g: &Graph,
    ell: usize,
) -> Result<CrosscheckVerdict, SeagullError> {
    if !invariants::alpha_le_2(g) {
        return Err(SeagullError::AlphaTooLarge);
    }
    if ell == 2 && is_w5(g) {
        return Err(SeagullError::ExcludedPair);
    }
    let report = feasibility(g, ell)?;
    let (max_packing, _) = max_disjoint_seagulls(g);
    let conditions_hold = report.all_conditions_hold();
    let packing_reaches_ell = max_packing >= ell;
    Ok(CrosscheckVerdict {
        ell,
        conditions_hold,
        packing_reaches_ell,
        max_packing,
        discrepancy: conditions_hold != packing_reaches_ell,
    })
}
