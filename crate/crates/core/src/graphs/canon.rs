//! Brute-force canonical codes for small graphs and isomorphism-class
//! enumeration built on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use super::{bits, structure, LabeledGraph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`] and [`enumerate_graphs`].
pub const CANON_BOUND: usize = 8;
/// Largest vertex count accepted by [`enumerate_trees`].
pub const TREE_ENUM_BOUND: usize = 10;

/// The lexicographically smallest upper-triangle adjacency string over all
/// relabelings. Bits are read column by column:
/// `(1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ...`, the same order graph6 uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    bits: u64,
}

impl CanonicalCode {
    /// The code with the given adjacency string (not necessarily minimal).
    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        CanonicalCode { n, bits }
    }

    /// Parses the `0`/`1` string printed by `Display` for a graph on `n` vertices.
    pub fn from_bit_string(n: usize, text: &str) -> Result<Self> {
        let code = CanonicalCode { n, bits: 0 };
        if n > CANON_BOUND || text.len() != code.len() {
            return Err(Error::parse(text, format!("expected {} bits for n = {n}", code.len())));
        }
        let mut bits = 0u64;
        for c in text.chars() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::parse(text, "code must consist of 0 and 1")),
            };
            bits = bits << 1 | bit;
        }
        Ok(CanonicalCode::from_bits(n, bits))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The graph on `1..=n` whose adjacency string is this code.
    pub fn to_graph(&self) -> LabeledGraph {
        let n = self.n;
        let total = self.len();
        let mut adj = vec![0u64; n];
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - pos) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                pos += 1;
            }
        }
        LabeledGraph::from_rows((1..=n as u32).collect(), adj)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.len();
        for pos in 0..total {
            let bit = self.bits >> (total - 1 - pos) & 1;
            f.write_str(if bit == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct CanonSearch<'a> {
    adj: &'a [u64],
    n: usize,
    total: usize,
    order: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl CanonSearch<'_> {
    /// Bits contributed by placing `v` at position `order.len()`.
    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | (self.adj[u] >> v & 1))
    }

    fn run(&mut self, prefix: u64, prefix_len: usize) {
        let depth = self.order.len();
        if depth == self.n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        // Vertices that are twins with respect to every unplaced vertex give
        // identical subtrees; try one representative per twin class.
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let is_twin = tried.iter().any(|&t| {
                let mask = !((1u64 << t) | (1u64 << v));
                self.adj[t] & mask == self.adj[v] & mask
            });
            if is_twin {
                continue;
            }
            tried.push(v);
            let col = self.column(v);
            let new_len = prefix_len + depth;
            let new_prefix = (prefix << depth) | col;
            if let Some(best) = self.best {
                let best_prefix = if new_len == 0 { 0 } else { best >> (self.total - new_len) };
                if new_prefix > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.run(new_prefix, new_len);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// Canonical code of `g` (`n <= 8`). Equal codes iff isomorphic.
pub fn canonical_form(g: &LabeledGraph) -> Result<CanonicalCode> {
    if g.n() > CANON_BOUND {
        return Err(Error::too_large("canonicalization", g.n(), CANON_BOUND));
    }
    Ok(canonical_code_unchecked(g))
}

fn canonical_code_unchecked(g: &LabeledGraph) -> CanonicalCode {
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut search = CanonSearch {
        adj: g.rows(),
        n,
        total,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    CanonicalCode {
        n,
        bits: search.best.unwrap_or(0),
    }
}

/// One representative (labeled `1..=n`) per isomorphism class of graphs on
/// `n <= 8` vertices, ordered by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<LabeledGraph>> {
    if n > CANON_BOUND {
        return Err(Error::too_large("graph enumeration", n, CANON_BOUND));
    }
    // Every graph on n vertices is a smaller class plus one vertex with some
    // neighborhood.
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(CanonicalCode { n: 0, bits: 0 });
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for code in &level {
            let base = code.to_graph();
            for nbhd in 0u64..(1 << (m - 1)) {
                let mut adj = base.rows().to_vec();
                adj.push(nbhd);
                for j in bits(nbhd) {
                    adj[j] |= 1 << (m - 1);
                }
                let g = LabeledGraph::from_rows((1..=m as u32).collect(), adj);
                next.insert(canonical_code_unchecked(&g));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| c.to_graph()).collect())
}

/// Canonical string of a tree, rooted at its center (or the smaller of the
/// two center encodings).
pub(crate) fn tree_code(t: &LabeledGraph) -> String {
    let centers = structure::tree_centers(t);
    centers
        .iter()
        .map(|&c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(t: &LabeledGraph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = bits(t.rows()[v])
        .filter(|&u| u != parent)
        .map(|u| rooted_code(t, u, v))
        .collect();
    children.sort();
    let mut s = String::from("(");
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// One representative per isomorphism class of trees on `n <= 10` vertices,
/// ordered by their canonical string.
pub fn enumerate_trees(n: usize) -> Result<Vec<LabeledGraph>> {
    if n > TREE_ENUM_BOUND {
        return Err(Error::too_large("tree enumeration", n, TREE_ENUM_BOUND));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<String, LabeledGraph> = BTreeMap::new();
    let single = LabeledGraph::on_range(1)?;
    level.insert(tree_code(&single), single);
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for &v in t.labels() {
                let mut grown = LabeledGraph::new(1..=m as u32, t.edges())?;
                grown.add_edge(v, m as u32)?;
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{generate, GraphFamily};

    /// Plain n! minimum, used as an oracle for the pruned search.
    fn brute_min_code(g: &LabeledGraph) -> u64 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        loop {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | (g.rows()[perm[i]] >> perm[j] & 1);
                }
            }
            best = best.min(code);
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        if n < 2 {
            0
        } else {
            best
        }
    }

    #[test]
    fn canonical_matches_brute_force() {
        for n in 0..=5usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0u64..(1 << pairs) {
                let mut edges = Vec::new();
                let mut b = 0;
                for j in 1..n as u32 {
                    for i in 0..j {
                        if mask >> b & 1 == 1 {
                            edges.push((i + 1, j + 1));
                        }
                        b += 1;
                    }
                }
                let g = LabeledGraph::from_edges(n, &edges).unwrap();
                assert_eq!(canonical_form(&g).unwrap().bits, brute_min_code(&g));
            }
        }
    }

    #[test]
    fn relabelings_agree() {
        let c5 = generate(&GraphFamily::Cycle(5)).unwrap();
        let other = LabeledGraph::from_edges(5, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&other).unwrap());
        let c4 = generate(&GraphFamily::Cycle(4)).unwrap();
        let p4 = generate(&GraphFamily::Path(4)).unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&p4).unwrap());
        assert_eq!(canonical_form(&c5).unwrap().to_string().len(), 10);
        assert!(canonical_form(&generate(&GraphFamily::Path(9)).unwrap()).is_err());
    }

    #[test]
    fn code_round_trips_to_isomorphic_graph() {
        for g in enumerate_graphs(5).unwrap() {
            let code = canonical_form(&g).unwrap();
            assert_eq!(canonical_form(&code.to_graph()).unwrap(), code);
        }
    }

    /// Class counts against brute force over all labeled edge sets.
    #[test]
    fn class_counts() {
        for n in 0..=5usize {
            let pairs = n * n.saturating_sub(1) / 2;
            let mut seen = BTreeSet::new();
            for mask in 0u64..(1 << pairs) {
                let g = CanonicalCode { n, bits: mask }.to_graph();
                seen.insert(canonical_form(&g).unwrap());
            }
            assert_eq!(enumerate_graphs(n).unwrap().len(), seen.len(), "n={n}");
        }
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(6).unwrap().len(), 156);
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn tree_counts() {
        // Brute force for n = 5: spanning trees of K_5 deduplicated.
        let mut seen = BTreeSet::new();
        for g in enumerate_graphs(5).unwrap() {
            if structure::is_tree(&g) {
                seen.insert(canonical_form(&g).unwrap());
            }
        }
        assert_eq!(seen.len(), 3);
        assert_eq!(enumerate_trees(5).unwrap().len(), 3);
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_graphs(5).unwrap();
        let b = enumerate_graphs(5).unwrap();
        assert_eq!(a, b);
        let codes: Vec<_> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
    }
}
