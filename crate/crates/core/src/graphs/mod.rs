//! Labeled simple graphs and the transformations used throughout the crate.
//!
//! Vertices carry distinct positive labels. Internally the labels are kept
//! sorted and adjacency is a symmetric bit matrix over label ranks, so a
//! graph holds at most [`MAX_VERTICES`] vertices.

mod canon;
mod family;
pub mod io;
mod iso;
pub(crate) mod structure;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub use canon::{canonical_form, enumerate_graphs, enumerate_trees, CanonicalCode, CANON_BOUND, TREE_ENUM_BOUND};
pub use family::{generate, GraphFamily};
pub use iso::find_isomorphism;
pub use structure::{connected_components, cutsets, induced_paths, is_connected, is_tree, leaves};

/// Largest vertex count a [`LabeledGraph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph whose vertices are distinct positive labels.
///
/// Equality is labeled equality: same label set, same edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    labels: Vec<u32>,
    adj: Vec<u64>,
}

impl LabeledGraph {
    /// Graph with the given labels and no edges.
    pub fn empty(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let set: BTreeSet<u32> = labels.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        if set.len() > MAX_VERTICES {
            return Err(Error::too_large("graph size", set.len(), MAX_VERTICES));
        }
        let labels: Vec<u32> = set.into_iter().collect();
        let adj = vec![0; labels.len()];
        Ok(LabeledGraph { labels, adj })
    }

    /// Empty graph on `1..=n`.
    pub fn on_range(n: usize) -> Result<Self> {
        Self::empty(1..=n as u32)
    }

    pub fn new(labels: impl IntoIterator<Item = u32>, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut g = Self::empty(labels)?;
        for (x, y) in edges {
            g.add_edge(x, y)?;
        }
        Ok(g)
    }

    /// Graph on `1..=n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        Self::new(1..=n as u32, edges.iter().copied())
    }

    /// Builds a graph on `1..=n` from rank-indexed adjacency rows.
    pub(crate) fn from_rows(labels: Vec<u32>, adj: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        LabeledGraph { labels, adj }
    }

    pub fn add_edge(&mut self, x: u32, y: u32) -> Result<()> {
        if x == y {
            return Err(Error::InvalidEdge(x, y));
        }
        let i = self.index_of(x).ok_or(Error::UnknownLabel(x))?;
        let j = self.index_of(y).ok_or(Error::UnknownLabel(y))?;
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Sorted vertex labels.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label_set(&self) -> BTreeSet<u32> {
        self.labels.iter().copied().collect()
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.index_of(label).is_some()
    }

    /// Adjacency rows indexed by label rank.
    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn adjacent_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn has_edge(&self, x: u32, y: u32) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.adjacent_idx(i, j),
            _ => false,
        }
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.adjacent_idx(i, j) {
                    out.push((self.labels[i], self.labels[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, x: u32) -> Vec<u32> {
        match self.index_of(x) {
            Some(i) => bits(self.adj[i]).map(|j| self.labels[j]).collect(),
            None => Vec::new(),
        }
    }

    pub fn degree(&self, x: u32) -> usize {
        self.index_of(x).map_or(0, |i| self.adj[i].count_ones() as usize)
    }

    /// True iff the labels are exactly `1..=n`.
    pub fn is_on_range(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    /// Induced subgraph on `subset`.
    pub fn induced(&self, subset: &BTreeSet<u32>) -> Result<Self> {
        let mut idx = Vec::with_capacity(subset.len());
        for &s in subset {
            idx.push(self.index_of(s).ok_or(Error::UnknownLabel(s))?);
        }
        let labels: Vec<u32> = subset.iter().copied().collect();
        let adj = idx
            .iter()
            .map(|&i| {
                let mut row = 0u64;
                for (b, &j) in idx.iter().enumerate() {
                    if self.adjacent_idx(i, j) {
                        row |= 1 << b;
                    }
                }
                row
            })
            .collect();
        Ok(LabeledGraph { labels, adj })
    }

    /// Relabels the i-th smallest vertex as `i`.
    pub fn reduce(&self) -> Self {
        LabeledGraph {
            labels: (1..=self.n() as u32).collect(),
            adj: self.adj.clone(),
        }
    }

    /// Relabels `x ↦ n+1-x`; requires labels `1..=n`.
    pub fn supplement(&self) -> Result<Self> {
        if !self.is_on_range() {
            return Err(Error::NotOnInitialSegment);
        }
        let n = self.n();
        let adj = (0..n)
            .map(|i| {
                let row = self.adj[n - 1 - i];
                bits(row).fold(0u64, |acc, j| acc | 1 << (n - 1 - j))
            })
            .collect();
        Ok(LabeledGraph {
            labels: self.labels.clone(),
            adj,
        })
    }

    /// Same labels, complementary edge set.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let full = full_mask(n);
        let adj = (0..n).map(|i| !self.adj[i] & full & !(1u64 << i)).collect();
        LabeledGraph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Adds `new` adjacent to exactly the neighbors of `v`.
    pub fn add_copy(&self, v: u32, new: u32) -> Result<Self> {
        if !self.contains(v) {
            return Err(Error::UnknownLabel(v));
        }
        if self.contains(new) {
            return Err(Error::LabelClash(new));
        }
        if new == 0 {
            return Err(Error::ZeroLetter);
        }
        let neighbors = self.neighbors(v);
        let mut g = LabeledGraph::new(
            self.labels.iter().copied().chain(std::iter::once(new)),
            self.edges(),
        )?;
        for u in neighbors {
            g.add_edge(new, u)?;
        }
        Ok(g)
    }

    /// Renames every vertex through `map`, which must be injective on the labels.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Result<Self> {
        let new_labels: Vec<u32> = self.labels.iter().map(|&l| map(l)).collect();
        let distinct: BTreeSet<u32> = new_labels.iter().copied().collect();
        if distinct.len() != new_labels.len() {
            return Err(Error::Precondition("relabeling is not injective".into()));
        }
        LabeledGraph::new(new_labels, self.edges().into_iter().map(|(x, y)| (map(x), map(y))))
    }

    /// Renames vertices through an explicit map; every label must be a key.
    pub fn relabel_with(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        for l in &self.labels {
            if !map.contains_key(l) {
                return Err(Error::UnknownLabel(*l));
            }
        }
        self.relabel(|l| map[&l])
    }

    /// Disjoint union; label sets must not intersect.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        for l in other.labels() {
            if self.contains(*l) {
                return Err(Error::LabelClash(*l));
            }
        }
        LabeledGraph::new(
            self.labels.iter().chain(other.labels.iter()).copied(),
            self.edges().into_iter().chain(other.edges()),
        )
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> LabeledGraph {
        LabeledGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn invariants_enforced() {
        assert_eq!(LabeledGraph::from_edges(2, &[(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(LabeledGraph::from_edges(2, &[(1, 3)]), Err(Error::UnknownLabel(3)));
        assert!(LabeledGraph::empty([0]).is_err());
        let g = LabeledGraph::from_edges(3, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraphs() {
        let g = c4();
        let p = g.induced(&[1, 2, 3].into()).unwrap();
        assert_eq!(p, LabeledGraph::from_edges(3, &[(1, 2), (2, 3)]).unwrap());
        assert_eq!(g.induced(&g.label_set()).unwrap(), g);
        assert!(g.induced(&BTreeSet::new()).unwrap().is_empty());
        assert_eq!(g.induced(&[1, 9].into()), Err(Error::UnknownLabel(9)));
    }

    #[test]
    fn reduction() {
        let g = LabeledGraph::new([2, 5, 9], [(2, 9)]).unwrap();
        assert_eq!(g.reduce(), LabeledGraph::from_edges(3, &[(1, 3)]).unwrap());
        assert_eq!(c4().reduce(), c4());
        let e = LabeledGraph::empty([]).unwrap();
        assert_eq!(e.reduce(), e);
    }

    #[test]
    fn supplement_relabels() {
        let g = LabeledGraph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(g.supplement().unwrap(), LabeledGraph::from_edges(3, &[(2, 3)]).unwrap());
        assert_eq!(g.supplement().unwrap().supplement().unwrap(), g);
        let k4 = generate(&GraphFamily::Complete(4)).unwrap();
        assert_eq!(k4.supplement().unwrap(), k4);
        let off = LabeledGraph::new([1, 3], [(1, 3)]).unwrap();
        assert_eq!(off.supplement(), Err(Error::NotOnInitialSegment));
    }

    #[test]
    fn complements() {
        let k4 = generate(&GraphFamily::Complete(4)).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        let c5 = generate(&GraphFamily::Cycle(5)).unwrap();
        assert_eq!(canonical_form(&c5.complement()).unwrap(), canonical_form(&c5).unwrap());
        assert_eq!(c4().complement().complement(), c4());
    }

    #[test]
    fn copies() {
        let g = LabeledGraph::from_edges(2, &[(1, 2)]).unwrap();
        let h = g.add_copy(2, 3).unwrap();
        assert_eq!(h.edges(), vec![(1, 2), (1, 3)]);
        let iso = LabeledGraph::on_range(1).unwrap().add_copy(1, 2).unwrap();
        assert_eq!(iso.edge_count(), 0);
        assert_eq!(h.degree(3), g.degree(2));
        assert_eq!(g.add_copy(1, 2), Err(Error::LabelClash(2)));
        assert_eq!(h.induced(&[1, 2].into()).unwrap(), g);
    }
}
