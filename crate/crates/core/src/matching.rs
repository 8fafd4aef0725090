//! Maximum cardinality matching in general graphs via Edmonds' blossom
//! (odd-cycle contraction) method, O(n^3).

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// `mate[v]` is the vertex matched to `v`, if any. Deterministic: augmenting
/// searches start from unmatched vertices in ascending order and scan
/// neighbors ascending.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut m = Matcher {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        queue: Vec::new(),
        in_queue: vec![false; n],
        in_blossom: vec![false; n],
    };
    for v in 0..n {
        if m.mate[v] == NONE {
            m.try_augment(v);
        }
    }
    m.mate
        .into_iter()
        .map(|x| if x == NONE { None } else { Some(x) })
        .collect()
}

/// Matching size |M|.
pub fn matching_size(g: &Graph) -> usize {
    maximum_matching(g).iter().flatten().count() / 2
}

/// Matched pairs `(u, v)` with `u < v`, sorted.
pub fn matching_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mate = maximum_matching(g);
    let mut out = Vec::new();
    for (u, &m) in mate.iter().enumerate() {
        if let Some(v) = m {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

struct Matcher<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    queue: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Matcher<'_> {
    fn try_augment(&mut self, root: usize) -> bool {
        let n = self.g.n();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.in_queue.iter_mut().for_each(|q| *q = false);
        self.queue.clear();
        self.queue.push(root);
        self.in_queue[root] = true;

        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for u in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    // Odd cycle: contract the blossom at the common base.
                    let cur_base = self.lca(v, u, root);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur_base, u);
                    self.mark_path(u, cur_base, v);
                    for w in 0..n {
                        if self.in_blossom[self.base[w]] {
                            self.base[w] = cur_base;
                            if !self.in_queue[w] {
                                self.in_queue[w] = true;
                                self.queue.push(w);
                            }
                        }
                    }
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        self.augment_along(u);
                        return true;
                    }
                    let w = self.mate[u];
                    if !self.in_queue[w] {
                        self.in_queue[w] = true;
                        self.queue.push(w);
                    }
                }
            }
        }
        false
    }

    /// Lowest common ancestor of the alternating-tree bases of `a` and `b`.
    fn lca(&self, a: usize, b: usize, root: usize) -> usize {
        let n = self.g.n();
        let mut used = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            used[v] = true;
            if self.mate[v] == NONE || v == root {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        let mut u = b;
        loop {
            u = self.base[u];
            if used[u] {
                return u;
            }
            u = self.parent[self.mate[u]];
        }
    }

    fn mark_path(&mut self, mut v: usize, cur_base: usize, mut child: usize) {
        while self.base[v] != cur_base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment_along(&mut self, mut u: usize) {
        while u != NONE {
            let v = self.parent[u];
            let w = self.mate[v];
            self.mate[v] = u;
            self.mate[u] = v;
            u = w;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::graph::Graph;

    /// Exhaustive recursion over edge subsets; independent of the blossom code.
    pub fn brute_force_matching_size(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], used: u64) -> usize {
            if edges.is_empty() {
                return 0;
            }
            let (u, v) = edges[0];
            let rest = &edges[1..];
            let skip = rec(rest, used);
            if used & (1 << u) == 0 && used & (1 << v) == 0 {
                (1 + rec(rest, used | (1 << u) | (1 << v))).max(skip)
            } else {
                skip
            }
        }
        rec(&g.edges(), 0)
    }

    fn assert_valid_matching(g: &Graph, mate: &[Option<usize>]) {
        for (u, &m) in mate.iter().enumerate() {
            if let Some(v) = m {
                assert!(g.has_edge(u, v));
                assert_eq!(mate[v], Some(u));
            }
        }
    }

    #[test]
    fn cycle_and_trivial_cases() {
        assert_eq!(matching_size(&catalog("C_5").unwrap()), 2);
        assert_eq!(matching_size(&Graph::complete(1).unwrap()), 0);
        assert_eq!(matching_size(&Graph::empty(6).unwrap()), 0);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let p = catalog("petersen").unwrap();
        let mate = maximum_matching(&p);
        assert_valid_matching(&p, &mate);
        assert_eq!(mate.iter().flatten().count(), 10);
    }

    #[test]
    fn needs_blossom_handling() {
        // Two triangles joined by a path: greedy bipartite-style augmenting
        // fails without contraction.
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
                (3, 7),
            ],
        )
        .unwrap();
        assert_eq!(matching_size(&g), brute_force_matching_size(&g));
    }

    #[test]
    fn matches_brute_force_on_fixed_graphs() {
        for name in [
            "petersen",
            "W_5",
            "W_5^<",
            "hammer",
            "kite",
            "fig2_a",
            "fig2_b",
            "fig2_c",
            "K_7",
            "C_7",
            "2K_2",
            "K_2∪K_3",
        ] {
            let g = catalog(name).unwrap();
            let mate = maximum_matching(&g);
            assert_valid_matching(&g, &mate);
            assert_eq!(
                mate.iter().flatten().count() / 2,
                brute_force_matching_size(&g),
                "{name}"
            );
        }
    }

    #[test]
    fn matches_brute_force_on_complements() {
        for name in ["C_7", "petersen", "W_5", "fig2_c"] {
            let g = catalog(name).unwrap().complement();
            assert_eq!(matching_size(&g), brute_force_matching_size(&g), "{name}");
        }
    }
}
