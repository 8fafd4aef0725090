//! Independent oracles shared by the integration suites. Everything here is
//! deliberately naive: raw submask enumeration, all-permutation
//! canonicalization, plain recursive coloring. None of it shares search
//! logic with the library paths it cross-checks.

// Each test binary uses its own subset of the oracles.
#![allow(dead_code)]

use std::sync::OnceLock;

use domhad::graph::{Graph, VertexSet};
use domhad::hunt::enumerate;

/// All nonempty submasks of `bits`, descending.
pub fn submasks(bits: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut mask = bits;
    loop {
        if mask != 0 {
            out.push(mask);
        }
        if mask == 0 {
            break;
        }
        mask = (mask - 1) & bits;
    }
    out
}

/// Dominating Hadwiger number by enumerating every ordered sequence of
/// pairwise disjoint non-empty connected branch sets, checking the
/// domination clause directly against all earlier sets.
pub fn naive_hd(g: &Graph) -> usize {
    fn admissible(g: &Graph, prev: &[VertexSet], t: VertexSet) -> bool {
        prev.iter()
            .all(|&p| t.iter().all(|v| g.neighbors(v).intersects(p)))
    }
    fn rec(g: &Graph, avail: VertexSet, prev: &mut Vec<VertexSet>, best: &mut usize) {
        *best = (*best).max(prev.len());
        if prev.len() + avail.len() <= *best {
            return;
        }
        for mask in submasks(avail.bits()) {
            let t = VertexSet::from_bits(mask);
            if g.is_connected_subset(t) && admissible(g, prev, t) {
                prev.push(t);
                rec(g, avail.minus(t), prev, best);
                prev.pop();
            }
        }
    }
    let mut best = 0;
    rec(g, g.vertex_set(), &mut Vec::new(), &mut best);
    best
}

/// Maximum matching size by recursion over the edge list.
pub fn naive_matching(g: &Graph) -> usize {
    fn rec(edges: &[(usize, usize)], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = rec(rest, used);
                if used & (1 << u) == 0 && used & (1 << v) == 0 {
                    (1 + rec(rest, used | (1 << u) | (1 << v))).max(skip)
                } else {
                    skip
                }
            }
        }
    }
    rec(&g.edges(), 0)
}

/// Chromatic number by plain recursive assignment (no ordering heuristics,
/// no clique bound; only the canonical new-color cap keeps it finite).
pub fn naive_chromatic(g: &Graph) -> usize {
    fn colorable(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize, used: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|u| u >= v || colors[u] != c) {
                colors[v] = c;
                if colorable(g, k, colors, v + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return 0;
    }
    let mut k = 1;
    loop {
        if colorable(g, k, &mut vec![usize::MAX; g.n()], 0, 0) {
            return k;
        }
        k += 1;
    }
}

/// Minimum over all permutations of the relabeled graph6 record.
pub fn naive_canonical_key(g: &Graph) -> String {
    fn heaps(perm: &mut Vec<usize>, k: usize, g: &Graph, best: &mut Option<String>) {
        if k == 1 {
            let s = domhad::to_graph6(&g.relabeled(perm));
            if best.as_ref().is_none_or(|b| s < *b) {
                *best = Some(s);
            }
            return;
        }
        for i in 0..k {
            heaps(perm, k - 1, g, best);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut best = None;
    if g.n() <= 1 {
        return domhad::to_graph6(g);
    }
    heaps(&mut perm, g.n(), g, &mut best);
    best.expect("at least one permutation")
}

/// Minimum clique capacity over a raw scan of all clique submasks.
pub fn naive_min_capacity_twice(g: &Graph) -> Option<usize> {
    let mut best = None;
    for mask in submasks(g.vertex_set().bits()) {
        let set = VertexSet::from_bits(mask);
        if g.is_clique(set) {
            let cc = domhad::seagull::clique_capacity(g, set);
            if best.is_none_or(|b| cc.capacity_twice < b) {
                best = Some(cc.capacity_twice);
            }
        }
    }
    best
}

/// Shared enumerations, generated once per test binary.
pub fn alpha2_levels(n_max: usize) -> &'static Vec<Vec<Graph>> {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let levels = LEVELS.get_or_init(|| {
        (1..=10)
            .map(|n| enumerate::enumerate_alpha2(n).expect("generator range"))
            .collect()
    });
    assert!(n_max <= levels.len());
    levels
}

pub fn alpha2(n: usize) -> &'static [Graph] {
    &alpha2_levels(n)[n - 1]
}

pub fn all_graphs_level(n: usize) -> &'static [Graph] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let levels = LEVELS.get_or_init(|| (1..=8).map(enumerate::all_graphs).collect());
    &levels[n - 1]
}

/// Deterministic pseudo-random graph with independence number at most two:
/// the complement of a greedily grown random triangle-free graph.
pub fn random_alpha2(n: usize, seed: u64) -> Graph {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let mut adj = vec![0u64; n];
    for _ in 0..(6 * n * n) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || adj[u] & (1 << v) != 0 {
            continue;
        }
        if adj[u] & adj[v] != 0 {
            continue; // would close a triangle
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Graph::from_adjacency(adj)
        .expect("valid adjacency")
        .complement()
}
