//! Isomorphism-free graph enumeration by one-vertex extension with
//! canonical-form deduplication per level.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::graph::{Graph, VertexSet};
use crate::hunt::HuntError;

/// Internal generator bound; the level sizes grow by roughly an order of
/// magnitude per vertex beyond this.
pub const GENERATOR_LIMIT: usize = 12;

/// Triangle-free census for n = 1..=11, used as a regression anchor.
pub const TRIANGLE_FREE_COUNTS: [u64; 11] = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172, 105071];

/// All triangle-free graphs on `n` vertices, one canonical representative
/// per isomorphism class, sorted by canonical graph6 record.
pub fn triangle_free_graphs(n: usize) -> Result<Vec<Graph>, HuntError> {
    levels(n, true)
}

/// All graphs with independence number at most two on `n` vertices, up to
/// isomorphism: the complements of the triangle-free classes, in the same
/// deterministic order.
pub fn enumerate_alpha2(n: usize) -> Result<Vec<Graph>, HuntError> {
    Ok(triangle_free_graphs(n)?
        .into_iter()
        .map(|g| g.complement())
        .collect())
}

/// Every graph on `n` vertices up to isomorphism (no constraint). Test
/// oracle duty only; counts explode quickly.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    levels(n, false).expect("unconstrained generation has no range check")
}

fn levels(n: usize, triangle_free: bool) -> Result<Vec<Graph>, HuntError> {
    if triangle_free && !(1..=GENERATOR_LIMIT).contains(&n) {
        return Err(HuntError::GeneratorRange {
            n,
            limit: GENERATOR_LIMIT,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0).expect("empty")]);
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for _ in 1..n {
        level = extend(&level, triangle_free);
    }
    Ok(level)
}

/// One extension level: every parent gains a new last vertex joined to each
/// admissible neighbor subset, children are canonicalized and deduplicated.
fn extend(parents: &[Graph], triangle_free: bool) -> Vec<Graph> {
    let mut seen: HashSet<Graph> = HashSet::new();
    for parent in parents {
        let k = parent.n();
        for mask in 0u64..(1u64 << k) {
            let nbrs = VertexSet::from_bits(mask);
            if triangle_free && !parent.is_independent(nbrs) {
                continue;
            }
            let mut adj: Vec<u64> = (0..k).map(|v| parent.neighbors(v).bits()).collect();
            for v in nbrs.iter() {
                adj[v] |= 1u64 << k;
            }
            adj.push(mask);
            let child = Graph::from_adjacency(adj).expect("extension stays valid");
            seen.insert(canonical_form(&child));
        }
    }
    let mut out: Vec<Graph> = seen.into_iter().collect();
    out.sort_by_key(crate::graph6::to_graph6);
    out
}

/// All graphs on `n` vertices that are disjoint unions of paths and cycles,
/// up to isomorphism (the complements of the minimum-degree `n-3` family).
pub fn path_cycle_unions(n: usize) -> Vec<Graph> {
    // A piece is (size, is_cycle); cycles need size >= 3. Pieces are chosen
    // in non-increasing (size, is_cycle) order so each multiset appears once.
    fn rec(
        remaining: usize,
        max_piece: (usize, bool),
        pieces: &mut Vec<(usize, bool)>,
        out: &mut Vec<Graph>,
    ) {
        if remaining == 0 {
            out.push(build_pieces(pieces));
            return;
        }
        let mut candidates = Vec::new();
        for size in (1..=remaining).rev() {
            if size >= 3 {
                candidates.push((size, true));
            }
            candidates.push((size, false));
        }
        for piece in candidates {
            if piece > max_piece {
                continue;
            }
            pieces.push(piece);
            rec(remaining - piece.0, piece, pieces, out);
            pieces.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![Graph::empty(0).expect("empty")];
    }
    rec(n, (n, true), &mut Vec::new(), &mut out);
    out
}

fn build_pieces(pieces: &[(usize, bool)]) -> Graph {
    let n: usize = pieces.iter().map(|p| p.0).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for &(size, is_cycle) in pieces {
        for i in 0..size.saturating_sub(1) {
            edges.push((offset + i, offset + i + 1));
        }
        if is_cycle {
            edges.push((offset, offset + size - 1));
        }
        offset += size;
    }
    Graph::from_edges(n, &edges).expect("pieces fit")
}
