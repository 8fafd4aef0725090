//! Named graphs with a frozen vertex numbering, and a small parser for
//! compound names built from joins, unions and disjoint copies.
//!
//! Supported base names:
//! - `K_k`, `C_k`, `P_k`, `W_k` — complete graph, cycle, path, wheel
//!   (wheel hub is vertex 0, rim is `1..=k` in cycle order);
//! - `K_k^-` / `K_k_minus` — `K_k` minus the edge `(0,1)`;
//!   `K_k^<` / `K_k_less` — `K_k` minus the adjacent edges `(0,1)`, `(0,2)`;
//! - `W_k^-` / `W_k_minus` — wheel minus the spoke `(0,1)`;
//!   `W_k^<` / `W_k_less` — wheel minus the consecutive spokes `(0,1)`, `(0,2)`;
//! - `hammer`, `kite`, `fig2_a`, `fig2_b`, `fig2_c`, `petersen`.
//!
//! Compound expressions: `+` is the join, `∪` (or `u`/`U`) the disjoint
//! union, a leading integer means disjoint copies, and parentheses group.
//! Operands are numbered left to right, so e.g. in `K_2+(K_1∪K_3)` the
//! `K_2` occupies vertices 0 and 1.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {name:?}")]
    UnknownName { name: String },
    #[error("cannot parse catalog name {name:?} at position {pos}: {msg}")]
    Parse {
        name: String,
        pos: usize,
        msg: String,
    },
    #[error("catalog graph too large: {0}")]
    Build(#[from] GraphError),
}

/// Resolves a catalog name to its graph, labeled with the input name.
pub fn catalog(name: &str) -> Result<Graph, CatalogError> {
    let trimmed = name.trim();
    if trimmed.is_empty() {
        return Err(CatalogError::UnknownName {
            name: name.to_string(),
        });
    }
    let mut parser = Parser {
        input: trimmed,
        chars: trimmed.chars().collect(),
        pos: 0,
    };
    let g = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.err("unexpected trailing characters"));
    }
    Ok(g.with_label(trimmed))
}

/// The documented names emitted by the manifest, in a stable order.
pub fn documented_names() -> Vec<&'static str> {
    vec![
        // Fixed graphs.
        "hammer",
        "kite",
        "fig2_a",
        "fig2_b",
        "fig2_c",
        "petersen",
        // Families at the orders used in the verdict suite.
        "C_4",
        "C_5",
        "C_6",
        "C_7",
        "P_4",
        "K_4",
        "K_4^-",
        "K_5",
        "K_5^-",
        "K_5^<",
        "K_7",
        "K_7^-",
        "K_7^<",
        "W_4",
        "W_4^-",
        "W_4^<",
        "W_5",
        "W_5^-",
        "W_5^<",
        // Compounds from the H-free verdicts and the small censuses.
        "2K_2",
        "K_1∪K_3",
        "K_1∪K_4",
        "K_2∪K_3",
        "K_1+(K_1∪K_2)",
        "K_1+(K_1∪K_3)",
        "K_1+2K_2",
        "K_1+P_4",
        "2K_1+P_4",
        "K_2+2K_2",
        "K_2+(K_1∪K_3)",
        "K_1+(K_1∪K_5)",
    ]
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> CatalogError {
        CatalogError::Parse {
            name: self.input.to_string(),
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Graph, CatalogError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.join(&rhs)?;
                }
                Some('∪') | Some('u') | Some('U') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.disjoint_union(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Graph, CatalogError> {
        self.skip_ws();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let k = self.integer()?;
            if k == 0 {
                return Err(self.err("multiplicity must be positive"));
            }
            let g = self.atom()?;
            return Ok(g.copies(k)?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Graph, CatalogError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let g = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(g)
            }
            Some('K') | Some('C') | Some('P') | Some('W') => self.family(),
            Some(c) if c.is_ascii_alphabetic() => self.special(),
            _ => Err(self.err("expected a graph name")),
        }
    }

    fn integer(&mut self) -> Result<usize, CatalogError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("number too large"))
    }

    fn family(&mut self) -> Result<Graph, CatalogError> {
        let letter = self.bump().expect("caller checked");
        if self.peek() == Some('_') {
            self.bump();
        }
        let k = self.integer()?;
        let suffix = self.suffix()?;
        build_family(letter, k, suffix).map_err(|msg| self.err(msg))
    }

    /// `^-`, `-`, `_minus` or `^<`, `<`, `_less`; underscore forms are only
    /// consumed when they spell a known suffix.
    fn suffix(&mut self) -> Result<Suffix, CatalogError> {
        match self.peek() {
            Some('^') => {
                self.bump();
                match self.bump() {
                    Some('-') => Ok(Suffix::Minus),
                    Some('<') => Ok(Suffix::Less),
                    _ => Err(self.err("expected '-' or '<' after '^'")),
                }
            }
            Some('-') => {
                self.bump();
                Ok(Suffix::Minus)
            }
            Some('<') => {
                self.bump();
                Ok(Suffix::Less)
            }
            Some('_') => {
                let rest: String = self.chars[self.pos..].iter().collect();
                if rest.starts_with("_minus") {
                    self.pos += "_minus".len();
                    Ok(Suffix::Minus)
                } else if rest.starts_with("_less") {
                    self.pos += "_less".len();
                    Ok(Suffix::Less)
                } else {
                    Err(self.err("expected '_minus' or '_less'"))
                }
            }
            _ => Ok(Suffix::None),
        }
    }

    fn special(&mut self) -> Result<Graph, CatalogError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let word: String = self.chars[start..self.pos].iter().collect();
        match word.as_str() {
            "hammer" => Ok(hammer()),
            "kite" => Ok(kite()),
            "fig2_a" => Ok(figure2(0)),
            "fig2_b" => Ok(figure2(1)),
            "fig2_c" => Ok(figure2(2)),
            "petersen" => Ok(petersen()),
            _ => Err(CatalogError::UnknownName { name: word }),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Suffix {
    None,
    Minus,
    Less,
}

fn build_family(letter: char, k: usize, suffix: Suffix) -> Result<Graph, String> {
    let need = |cond: bool, msg: &str| if cond { Ok(()) } else { Err(msg.to_string()) };
    match letter {
        'K' => {
            need(k >= 1, "K_k needs k >= 1")?;
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for u in 0..k {
                for v in (u + 1)..k {
                    edges.push((u, v));
                }
            }
            match suffix {
                Suffix::None => {}
                Suffix::Minus => {
                    need(k >= 2, "K_k^- needs k >= 2")?;
                    edges.retain(|&e| e != (0, 1));
                }
                Suffix::Less => {
                    need(k >= 3, "K_k^< needs k >= 3")?;
                    edges.retain(|&e| e != (0, 1) && e != (0, 2));
                }
            }
            Graph::from_edges(k, &edges).map_err(|e| e.to_string())
        }
        'C' => {
            need(suffix == Suffix::None, "cycles take no suffix")?;
            need(k >= 3, "C_k needs k >= 3")?;
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Graph::from_edges(k, &edges).map_err(|e| e.to_string())
        }
        'P' => {
            need(suffix == Suffix::None, "paths take no suffix")?;
            need(k >= 1, "P_k needs k >= 1")?;
            let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(k, &edges).map_err(|e| e.to_string())
        }
        'W' => {
            need(k >= 3, "W_k needs k >= 3")?;
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for i in 1..=k {
                edges.push((0, i));
            }
            for i in 1..=k {
                let j = if i == k { 1 } else { i + 1 };
                edges.push((i.min(j), i.max(j)));
            }
            match suffix {
                Suffix::None => {}
                Suffix::Minus => edges.retain(|&e| e != (0, 1)),
                Suffix::Less => edges.retain(|&e| e != (0, 1) && e != (0, 2)),
            }
            Graph::from_edges(k + 1, &edges).map_err(|e| e.to_string())
        }
        _ => Err(format!("unknown family letter {letter:?}")),
    }
}

/// Triangle `{0,1,2}` with the pendant path `0-3-4`.
fn hammer() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]).expect("fixed graph")
}

/// Diamond on `{1,2,3,4}` (missing edge `(1,4)`) with pendant `0` at `1`.
fn kite() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).expect("fixed graph")
}

/// The three eight-vertex graphs: 16, 17 and 18 edges for variants 0..=2.
fn figure2(variant: usize) -> Graph {
    let mut edges = vec![
        (0, 1),
        (1, 2),
        (3, 4),
        (4, 5),
        (0, 3),
        (2, 5),
        (0, 6),
        (1, 6),
        (3, 6),
        (4, 6),
        (1, 7),
        (2, 7),
        (4, 7),
        (5, 7),
        (0, 2),
        (3, 5),
    ];
    if variant >= 1 {
        edges.push((2, 3));
    }
    if variant >= 2 {
        edges.push((0, 5));
    }
    Graph::from_edges(8, &edges).expect("fixed graph")
}

/// Outer cycle `0..=4`, spokes `(i, i+5)`, inner 5-cycle `5-7-9-6-8`.
fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("fixed graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w5_shape() {
        let g = catalog("W_5").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 10);
        assert_eq!((0..6).filter(|&v| g.degree(v) == 5).count(), 1);
        assert_eq!(g.degree(0), 5);
    }

    #[test]
    fn hammer_shape() {
        let g = catalog("hammer").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn k7_less_edge_count() {
        let g = catalog("K_7_less").unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 19);
        assert_eq!(catalog("K_7^<").unwrap(), g);
        assert_eq!(catalog("K7<").unwrap(), g);
    }

    #[test]
    fn suffix_variants_agree() {
        assert_eq!(catalog("K_5^-").unwrap(), catalog("K_5_minus").unwrap());
        assert_eq!(catalog("W_4^-").unwrap(), catalog("W_4_minus").unwrap());
        assert_eq!(catalog("W_5^<").unwrap(), catalog("W_5_less").unwrap());
    }

    #[test]
    fn compound_expressions() {
        let g = catalog("2K_2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 2));

        let g = catalog("K_2+2K_2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 2 + 1 + 8));

        let g = catalog("K_2+(K_1∪K_3)").unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 1 + 3 + 8));
        assert_eq!(catalog("K_2+(K_1uK_3)").unwrap(), g);

        let g = catalog("2K_1+P_4").unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 3 + 8));

        let g = catalog("K_1+(K_1∪K_5)").unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 10 + 6));
    }

    #[test]
    fn numbering_is_left_to_right() {
        // In K_1+P_4 the hub is vertex 0.
        let g = catalog("K_1+P_4").unwrap();
        assert_eq!(g.degree(0), 4);
        // In K_2∪K_3 the K_2 occupies {0,1}.
        let g = catalog("K_2∪K_3").unwrap();
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn figure2_edge_counts() {
        assert_eq!(catalog("fig2_a").unwrap().edge_count(), 16);
        assert_eq!(catalog("fig2_b").unwrap().edge_count(), 17);
        assert_eq!(catalog("fig2_c").unwrap().edge_count(), 18);
    }

    #[test]
    fn figure2_graphs_have_independence_number_two() {
        for name in ["fig2_a", "fig2_b", "fig2_c"] {
            let g = catalog(name).unwrap();
            assert!(crate::invariants::alpha_le_2(&g), "{name}");
            assert_eq!(crate::invariants::independence_number(&g).0, 2, "{name}");
        }
    }

    #[test]
    fn frozen_numbering_contract() {
        // Wheels: hub 0, rim 1..=k in cycle order.
        let w = catalog("W_4").unwrap();
        assert!(w.has_edge(1, 2) && w.has_edge(4, 1) && !w.has_edge(1, 3));
        // Minus/less remove spokes (0,1) and (0,2).
        assert!(!catalog("W_4^-").unwrap().has_edge(0, 1));
        let less = catalog("W_4^<").unwrap();
        assert!(!less.has_edge(0, 1) && !less.has_edge(0, 2) && less.has_edge(0, 3));
        // K_k^< removes two edges sharing vertex 0.
        let kless = catalog("K_5^<").unwrap();
        assert!(!kless.has_edge(0, 1) && !kless.has_edge(0, 2) && kless.has_edge(1, 2));
        // Hammer: triangle {0,1,2}, pendant path 0-3-4.
        let h = catalog("hammer").unwrap();
        assert!(h.has_edge(0, 3) && h.has_edge(3, 4) && !h.has_edge(2, 3));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = catalog("petersen").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            catalog("zeppelin"),
            Err(CatalogError::UnknownName { .. })
        ));
        assert!(matches!(catalog("C_5^-"), Err(CatalogError::Parse { .. })));
        assert!(matches!(catalog("K_4)"), Err(CatalogError::Parse { .. })));
    }

    #[test]
    fn manifest_names_all_resolve() {
        for name in documented_names() {
            catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
