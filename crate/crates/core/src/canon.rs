//! Canonical graph labeling by iterative partition refinement with
//! backtracking individualization, used for isomorphism-free enumeration,
//! duplicate detection and fixed-graph recognition.

use crate::graph::{Graph, VertexSet};

/// Canonical representative of the isomorphism class of `g`: the same graph
/// relabeled so that isomorphic graphs produce equal values.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        let mut out = g.clone();
        out = out.relabeled(&(0..n).collect::<Vec<_>>());
        return out;
    }
    let mut best: Option<Vec<u64>> = None;
    let mut best_perm: Vec<usize> = Vec::new();
    let initial = refine(g, vec![g.vertex_set()]);
    search(g, initial, &mut best, &mut best_perm);
    g.relabeled(&best_perm)
}

/// graph6 record of the canonical form; equal strings iff isomorphic.
pub fn canonical_key(g: &Graph) -> String {
    crate::graph6::to_graph6(&canonical_form(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

fn search(
    g: &Graph,
    partition: Vec<VertexSet>,
    best: &mut Option<Vec<u64>>,
    best_perm: &mut Vec<usize>,
) {
    if let Some(target) = partition.iter().position(|c| c.len() >= 2) {
        let cell = partition[target];
        let mut pending = cell;
        while let Some(u) = pending.least() {
            pending.remove(u);
            // Skip vertices that are twins of an already-branched one: the
            // transposition is an automorphism, so the subtree repeats.
            let mut next = Vec::with_capacity(partition.len() + 1);
            next.extend_from_slice(&partition[..target]);
            next.push(VertexSet::singleton(u));
            next.push(cell.without(u));
            next.extend_from_slice(&partition[target + 1..]);
            search(g, refine(g, next), best, best_perm);
            let mut rest = pending;
            while let Some(v) = rest.least() {
                rest.remove(v);
                if twins(g, u, v) {
                    pending.remove(v);
                }
            }
        }
        return;
    }
    // Discrete partition: evaluate the labeled adjacency.
    let n = g.n();
    let mut perm = vec![0usize; n];
    for (i, cell) in partition.iter().enumerate() {
        perm[cell.least().expect("singleton cell")] = i;
    }
    let candidate = relabeled_rows(g, &perm);
    if best.as_ref().is_none_or(|b| candidate < *b) {
        *best = Some(candidate);
        *best_perm = perm;
    }
}

fn relabeled_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut rows = vec![0u64; n];
    for u in 0..n {
        let pu = perm[u];
        for v in g.neighbors(u).iter() {
            rows[pu] |= 1u64 << perm[v];
        }
    }
    rows
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !(1u64 << u) & !(1u64 << v);
    g.neighbors(u).bits() & mask == g.neighbors(v).bits() & mask
}

/// Equitable refinement: repeatedly split cells by neighbor counts into
/// splitter cells, ordering subcells by ascending count. The result depends
/// only on the isomorphism type and the input cell sequence.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    loop {
        let mut changed = false;
        'outer: for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.len() < 2 {
                    continue;
                }
                // Bucket by |N(v) ∩ splitter|.
                let mut buckets: Vec<(usize, VertexSet)> = Vec::new();
                for v in cell.iter() {
                    let k = g.neighbors(v).intersect(splitter).len();
                    match buckets.iter_mut().find(|(key, _)| *key == k) {
                        Some((_, set)) => set.insert(v),
                        None => buckets.push((k, VertexSet::singleton(v))),
                    }
                }
                if buckets.len() > 1 {
                    buckets.sort_by_key(|&(k, _)| k);
                    cells.splice(c..=c, buckets.into_iter().map(|(_, set)| set));
                    changed = true;
                    continue 'outer;
                }
            }
        }
        if !changed {
            return cells;
        }
    }
}
