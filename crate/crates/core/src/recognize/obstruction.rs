//! Labeled configurations that rule out 12-representability.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{bits, full_mask, structure, LabeledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObstructionKind {
    /// Reduces to `([3], {12, 23})`.
    I3,
    /// Reduces to `([4], {13, 24})`.
    J4,
    /// Reduces to `([4], {14, 23})`.
    Q4,
    /// Induced path on at least four vertices whose endpoints carry its two
    /// smallest labels.
    BadPath,
    /// Two components of size at least two behind a small cutset whose labels
    /// are interleaved.
    CutsetOrder,
    /// A tree vertex with three or more components that are not good.
    GoodComponents,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A re-checkable witness that a labeled graph (or, for
/// [`ObstructionKind::GoodComponents`], a tree under every labeling) has no
/// 12-representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// `I3`/`J4`/`Q4`: the vertex set, ascending. `BadPath`: the path in
    /// order. `CutsetOrder`: the union of both components. `GoodComponents`:
    /// the center followed by its neighbors in the bad components.
    pub witness: Vec<u32>,
    /// The cutset, or the center vertex.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub separator: Vec<u32>,
    /// The offending components.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Vec<u32>>,
}

impl Obstruction {
    fn simple(kind: ObstructionKind, witness: Vec<u32>) -> Self {
        Obstruction {
            kind,
            witness,
            separator: Vec::new(),
            parts: Vec::new(),
        }
    }

    /// Re-validates the witness against `g`.
    pub fn recheck(&self, g: &LabeledGraph) -> bool {
        let all_present = self.witness.iter().chain(&self.separator).all(|&v| g.contains(v));
        if !all_present {
            return false;
        }
        match self.kind {
            ObstructionKind::I3 | ObstructionKind::J4 | ObstructionKind::Q4 => {
                let set: BTreeSet<u32> = self.witness.iter().copied().collect();
                set.len() == self.witness.len()
                    && g.induced(&set).map(|h| h.reduce()).ok().as_ref() == Some(&forbidden_graph(self.kind))
            }
            ObstructionKind::BadPath => is_bad_path(g, &self.witness),
            ObstructionKind::CutsetOrder => self.recheck_cutset(g),
            ObstructionKind::GoodComponents => self.recheck_good_components(g),
        }
    }

    fn recheck_cutset(&self, g: &LabeledGraph) -> bool {
        if self.parts.len() != 2 {
            return false;
        }
        let cut: BTreeSet<u32> = self.separator.iter().copied().collect();
        let rest: BTreeSet<u32> = g.label_set().difference(&cut).copied().collect();
        let Ok(h) = g.induced(&rest) else { return false };
        let comps = structure::connected_components(&h);
        let v1: BTreeSet<u32> = self.parts[0].iter().copied().collect();
        let v2: BTreeSet<u32> = self.parts[1].iter().copied().collect();
        comps.contains(&v1)
            && comps.contains(&v2)
            && v1 != v2
            && cutset_violation(&v1, &v2)
    }

    fn recheck_good_components(&self, g: &LabeledGraph) -> bool {
        let [center] = self.separator[..] else { return false };
        match tree_bad_components(g, center) {
            Ok(bad) => bad.len() >= 3,
            Err(_) => false,
        }
    }
}

/// The reduced forbidden graph of a kind.
fn forbidden_graph(kind: ObstructionKind) -> LabeledGraph {
    let edges: &[(u32, u32)] = match kind {
        ObstructionKind::I3 => &[(1, 2), (2, 3)],
        ObstructionKind::J4 => &[(1, 3), (2, 4)],
        ObstructionKind::Q4 => &[(1, 4), (2, 3)],
        _ => unreachable!("not a fixed configuration"),
    };
    let n = if kind == ObstructionKind::I3 { 3 } else { 4 };
    LabeledGraph::from_edges(n, edges).expect("valid configuration")
}

fn is_bad_path(g: &LabeledGraph, path: &[u32]) -> bool {
    let k = path.len();
    if k < 4 {
        return false;
    }
    let distinct: BTreeSet<u32> = path.iter().copied().collect();
    if distinct.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if g.has_edge(path[i], path[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    let ends = path[0].max(path[k - 1]);
    path[1..k - 1].iter().all(|&x| x > ends)
}

/// With the smallest label of `v1 ∪ v2` in `v1`, true iff `v1 < v2` fails.
fn cutset_violation(v1: &BTreeSet<u32>, v2: &BTreeSet<u32>) -> bool {
    let (Some(&min1), Some(&max1), Some(&min2)) = (v1.first(), v1.last(), v2.first()) else {
        return false;
    };
    v1.len() >= 2 && v2.len() >= 2 && min1 < min2 && max1 > min2
}

/// I3 / J4 / Q4 test on rank-indexed rows where rank order is label order,
/// restricted to configurations whose largest vertex is `t`.
pub(crate) fn forbidden_with_max(rows: &[u64], t: usize) -> bool {
    let below_t = (1u64 << t) - 1;
    let nt = rows[t] & below_t;
    for b in bits(nt) {
        let below_b = (1u64 << b) - 1;
        // I3: a < b < t with ab, bt edges and at a non-edge.
        if rows[b] & below_b & !nt != 0 {
            return true;
        }
        // J4: a < b < c < t with exactly ac and bt.
        let cs = below_t & !((1u64 << (b + 1)) - 1) & !nt & !rows[b];
        for c in bits(cs) {
            if rows[c] & below_b & !nt & !rows[b] != 0 {
                return true;
            }
        }
    }
    // Q4: a < b < c < t with exactly at and bc.
    for a in bits(nt) {
        let above_a = !((1u64 << (a + 1)) - 1);
        let cs = below_t & above_a & !nt & !rows[a];
        for c in bits(cs) {
            let between = above_a & ((1u64 << c) - 1);
            if rows[c] & between & !nt & !rows[a] != 0 {
                return true;
            }
        }
    }
    false
}

/// True iff some induced subgraph reduces to I3, J4 or Q4.
pub(crate) fn has_forbidden(rows: &[u64]) -> bool {
    (0..rows.len()).any(|t| forbidden_with_max(rows, t))
}

/// The first I3/J4/Q4 by ascending vertex subsets (3-sets before 4-sets).
pub(crate) fn find_forbidden(g: &LabeledGraph) -> Option<Obstruction> {
    let n = g.n();
    let adj = |i: usize, j: usize| g.adjacent_idx(i, j);
    let labels = g.labels();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if adj(a, b) && adj(b, c) && !adj(a, c) {
                    return Some(Obstruction::simple(ObstructionKind::I3, vec![labels[a], labels[b], labels[c]]));
                }
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let pattern = [adj(a, b), adj(a, c), adj(a, d), adj(b, c), adj(b, d), adj(c, d)];
                    let kind = match pattern {
                        [false, true, false, false, true, false] => ObstructionKind::J4,
                        [false, false, true, true, false, false] => ObstructionKind::Q4,
                        _ => continue,
                    };
                    return Some(Obstruction::simple(kind, vec![labels[a], labels[b], labels[c], labels[d]]));
                }
            }
        }
    }
    None
}

/// The first bad path on at least four vertices, in induced-path order.
pub(crate) fn find_bad_path(g: &LabeledGraph) -> Option<Obstruction> {
    let mut found: Option<Vec<usize>> = None;
    let mut path = Vec::new();
    for start in 0..g.n() {
        path.push(start);
        structure::extend_paths(g, &mut path, 1 << start, 0, g.n(), &mut |p| {
            if found.is_some() || p.len() < 4 {
                return;
            }
            let (first, last) = (p[0], p[p.len() - 1]);
            if first < last && p[1..p.len() - 1].iter().all(|&x| x > last) {
                found = Some(p.to_vec());
            }
        });
        path.pop();
        if found.is_some() {
            break;
        }
    }
    found.map(|p| Obstruction::simple(ObstructionKind::BadPath, p.iter().map(|&i| g.labels()[i]).collect()))
}

/// The first interleaved pair of components behind a cutset of size at most
/// two (the empty cutset when `g` is disconnected).
pub fn find_cutset_violation(g: &LabeledGraph) -> Option<Obstruction> {
    let full = full_mask(g.n());
    for cut in structure::cutset_masks(g, 2) {
        let comps: Vec<BTreeSet<u32>> = structure::component_masks_within(g, full & !cut)
            .into_iter()
            .filter(|m| m.count_ones() >= 2)
            .map(|m| bits(m).map(|i| g.labels()[i]).collect())
            .collect();
        for (i, v1) in comps.iter().enumerate() {
            for v2 in &comps[i + 1..] {
                // Components are ordered by smallest label, so v1 holds the minimum.
                if cutset_violation(v1, v2) {
                    let witness: Vec<u32> = v1.union(v2).copied().collect();
                    return Some(Obstruction {
                        kind: ObstructionKind::CutsetOrder,
                        witness,
                        separator: bits(cut).map(|i| g.labels()[i]).collect(),
                        parts: vec![v1.iter().copied().collect(), v2.iter().copied().collect()],
                    });
                }
            }
        }
    }
    None
}

/// First obstruction in the scan order: bad paths, then I3/J4/Q4, then
/// cutset violations.
pub fn find_obstruction_labeled(g: &LabeledGraph) -> Option<Obstruction> {
    find_bad_path(g)
        .or_else(|| find_forbidden(g))
        .or_else(|| find_cutset_violation(g))
}

/// Components of `t \ center` that are not stars centered at the neighbor of
/// `center` they contain, as (neighbor, component) pairs.
fn tree_bad_components(t: &LabeledGraph, center: u32) -> Result<Vec<(u32, Vec<u32>)>> {
    if !structure::is_tree(t) {
        return Err(Error::NotATree);
    }
    let c = t.index_of(center).ok_or(Error::UnknownLabel(center))?;
    let within = full_mask(t.n()) & !(1u64 << c);
    let mut bad = Vec::new();
    for comp in structure::component_masks_within(t, within) {
        let u = (t.rows()[c] & comp).trailing_zeros() as usize;
        let star = (comp & !(1u64 << u)) & !t.rows()[u] == 0;
        if !star {
            bad.push((t.labels()[u], bits(comp).map(|i| t.labels()[i]).collect()));
        }
    }
    Ok(bad)
}

/// A vertex of the tree with at least three components that are not good.
pub fn find_obstruction_tree(t: &LabeledGraph) -> Result<Option<Obstruction>> {
    if !structure::is_tree(t) {
        return Err(Error::NotATree);
    }
    for &v in t.labels() {
        let bad = tree_bad_components(t, v)?;
        if bad.len() >= 3 {
            let mut witness = vec![v];
            witness.extend(bad.iter().map(|(u, _)| *u));
            return Ok(Some(Obstruction {
                kind: ObstructionKind::GoodComponents,
                witness,
                separator: vec![v],
                parts: bad.into_iter().map(|(_, c)| c).collect(),
            }));
        }
    }
    Ok(None)
}
