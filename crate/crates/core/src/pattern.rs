//! Induced-subgraph containment testing and H-free filtering.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::{catalog, CatalogError};
use crate::graph::{Graph, VertexSet};

/// An injective vertex map witnessing an induced copy: `mapping[i]` is the
/// host vertex playing pattern vertex `i`, and adjacency matches exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedWitness {
    pub mapping: Vec<usize>,
}

/// Finds an induced copy of `h` in `g`, or `None` after a complete search.
///
/// Pattern vertices are assigned in a static max-degree-first order (ties
/// toward the smaller index) and host candidates ascend, so the returned
/// witness is the lexicographically least along that assignment order and
/// is stable across runs.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<InducedWitness> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(InducedWitness { mapping: vec![] });
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut mapping = vec![usize::MAX; h.n()];
    if assign(g, h, &order, 0, &mut mapping, VertexSet::EMPTY) {
        Some(InducedWitness { mapping })
    } else {
        None
    }
}

fn assign(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    'candidates: for cand in 0..g.n() {
        if used.contains(cand) || g.degree(cand) < h.degree(p) {
            continue;
        }
        for &q in &order[..depth] {
            let host_q = mapping[q];
            if h.has_edge(p, q) != g.has_edge(cand, host_q) {
                continue 'candidates;
            }
        }
        mapping[p] = cand;
        if assign(g, h, order, depth + 1, mapping, used.with(cand)) {
            return true;
        }
        mapping[p] = usize::MAX;
    }
    false
}

pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// Per-name freeness verdicts: `true` means no induced copy of the named
/// pattern exists in `g`.
pub fn is_free(g: &Graph, names: &[String]) -> Result<BTreeMap<String, bool>, CatalogError> {
    let mut out = BTreeMap::new();
    for name in names {
        let h = catalog(name)?;
        out.insert(name.clone(), find_induced(g, &h).is_none());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::clique_number;

    fn named(n: &str) -> Graph {
        catalog(n).unwrap()
    }

    fn check_witness(g: &Graph, h: &Graph, w: &InducedWitness) {
        assert_eq!(w.mapping.len(), h.n());
        for u in 0..h.n() {
            for v in (u + 1)..h.n() {
                assert_eq!(
                    h.has_edge(u, v),
                    g.has_edge(w.mapping[u], w.mapping[v]),
                    "pair ({u},{v})"
                );
            }
        }
    }

    #[test]
    fn wheel_contains_its_rim() {
        let g = named("W_5");
        let h = named("C_5");
        let w = find_induced(&g, &h).expect("rim");
        check_witness(&g, &h, &w);
        // Any induced C_5 in W_5 avoids the hub (vertex 0).
        assert!(w.mapping.iter().all(|&v| v != 0));
    }

    #[test]
    fn complete_graphs_have_no_nonedge() {
        assert!(find_induced(&Graph::complete(6).unwrap(), &named("2K_2")).is_none());
        assert!(find_induced(&Graph::complete(5).unwrap(), &named("P_3")).is_none());
    }

    #[test]
    fn fig2_a_contains_c4() {
        let g = named("fig2_a");
        let h = named("C_4");
        let w = find_induced(&g, &h).expect("induced C_4");
        check_witness(&g, &h, &w);
    }

    #[test]
    fn identity_embedding_exists() {
        for n in ["W_5", "petersen", "kite", "fig2_b"] {
            let g = named(n);
            let w = find_induced(&g, &g).expect("identity");
            check_witness(&g, &g, &w);
        }
    }

    #[test]
    fn pattern_larger_than_host_is_none() {
        assert!(find_induced(&named("C_5"), &named("W_5")).is_none());
    }

    #[test]
    fn freeness_map() {
        let names = vec!["W_5".to_string(), "C_4".to_string()];
        let verdict = is_free(&named("W_5"), &names).unwrap();
        assert!(!verdict["W_5"]);
        // W_5 has no induced C_4: any four vertices meeting the rim in three
        // consecutive vertices plus the hub contain a triangle.
        assert!(verdict["C_4"]);

        let verdict = is_free(&named("C_5"), &[String::from("W_5")]).unwrap();
        assert!(verdict["W_5"]);
    }

    #[test]
    fn unknown_pattern_name_errors() {
        assert!(is_free(&named("C_5"), &[String::from("nonsense")]).is_err());
    }

    #[test]
    fn petersen_complement_k4_matches_clique_number() {
        let pc = named("petersen").complement();
        let has_k4 = contains_induced(&pc, &Graph::complete(4).unwrap());
        assert_eq!(has_k4, clique_number(&pc).0 >= 4);
    }

    #[test]
    fn witness_is_deterministic() {
        let g = named("fig2_c");
        let h = named("C_4");
        assert_eq!(find_induced(&g, &h), find_induced(&g, &h));
    }

    /// All injections, no pruning; the independent oracle for small cases.
    fn naive_contains(g: &Graph, h: &Graph) -> bool {
        fn rec(g: &Graph, h: &Graph, mapping: &mut Vec<usize>, used: VertexSet) -> bool {
            let i = mapping.len();
            if i == h.n() {
                return true;
            }
            for cand in 0..g.n() {
                if used.contains(cand) {
                    continue;
                }
                let ok = (0..i).all(|j| h.has_edge(i, j) == g.has_edge(cand, mapping[j]));
                if ok {
                    mapping.push(cand);
                    if rec(g, h, mapping, used.with(cand)) {
                        return true;
                    }
                    mapping.pop();
                }
            }
            false
        }
        rec(g, h, &mut Vec::new(), VertexSet::EMPTY)
    }

    #[test]
    fn agrees_with_naive_oracle_on_catalog_pairs() {
        let hosts = ["W_5", "fig2_a", "petersen", "kite", "K_2∪K_3", "C_7"];
        let patterns = ["P_3", "P_4", "C_4", "C_5", "K_3", "2K_2", "K_1∪K_3", "paw4"];
        for host in hosts {
            let g = named(host);
            for pat in patterns {
                let h = if pat == "paw4" {
                    named("K_1+(K_1∪K_2)")
                } else {
                    named(pat)
                };
                assert_eq!(
                    contains_induced(&g, &h),
                    naive_contains(&g, &h),
                    "{host} / {pat}"
                );
            }
        }
    }
}
