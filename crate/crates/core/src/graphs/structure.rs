//! Connectivity, trees, induced paths and small cutsets.

use std::collections::BTreeSet;

use super::{bits, full_mask, LabeledGraph};

/// Vertex masks (by rank) of the components of `g` restricted to `within`.
pub(crate) fn component_masks_within(g: &LabeledGraph, within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = within;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.rows()[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn component_masks(g: &LabeledGraph) -> Vec<u64> {
    component_masks_within(g, full_mask(g.n()))
}

fn mask_labels(g: &LabeledGraph, mask: u64) -> BTreeSet<u32> {
    bits(mask).map(|i| g.labels()[i]).collect()
}

/// Components as label sets, ordered by smallest label.
pub fn connected_components(g: &LabeledGraph) -> Vec<BTreeSet<u32>> {
    component_masks(g).into_iter().map(|m| mask_labels(g, m)).collect()
}

pub fn is_connected(g: &LabeledGraph) -> bool {
    component_masks(g).len() <= 1
}

/// Connected with `n - 1` edges. The empty graph is not a tree.
pub fn is_tree(g: &LabeledGraph) -> bool {
    g.n() >= 1 && g.edge_count() + 1 == g.n() && is_connected(g)
}

/// Degree-one vertices, ascending.
pub fn leaves(g: &LabeledGraph) -> Vec<u32> {
    g.labels().iter().copied().filter(|&v| g.degree(v) == 1).collect()
}

/// Ranks of the one or two centers of a tree.
pub(crate) fn tree_centers(t: &LabeledGraph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut alive = full_mask(n);
    let mut count = n;
    while count > 2 {
        let strip: Vec<usize> = bits(alive)
            .filter(|&v| (t.rows()[v] & alive).count_ones() <= 1)
            .collect();
        for v in &strip {
            alive &= !(1u64 << v);
        }
        count -= strip.len();
    }
    bits(alive).collect()
}

/// All induced paths with between 2 and `max_len` vertices, as label
/// sequences. Each path is reported once, oriented so that its first label
/// is smaller than its last.
pub fn induced_paths(g: &LabeledGraph, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for start in 0..g.n() {
        path.push(start);
        extend_paths(g, &mut path, 1 << start, 0, max_len, &mut |p| {
            if p.len() >= 2 && p[0] < p[p.len() - 1] {
                out.push(p.iter().map(|&i| g.labels()[i]).collect());
            }
        });
        path.pop();
    }
    out
}

/// Depth-first extension of an induced path. `blocked` holds the
/// neighborhoods of every path vertex except the last.
pub(crate) fn extend_paths(
    g: &LabeledGraph,
    path: &mut Vec<usize>,
    on_path: u64,
    blocked: u64,
    max_len: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    visit(path);
    if path.len() >= max_len {
        return;
    }
    let last = *path.last().expect("nonempty path");
    let candidates = g.rows()[last] & !on_path & !blocked;
    for v in bits(candidates) {
        path.push(v);
        extend_paths(g, path, on_path | 1 << v, blocked | g.rows()[last], max_len, visit);
        path.pop();
    }
}

/// Vertex sets of size at most `max_size` whose removal leaves at least two
/// components. The empty set qualifies when `g` is already disconnected.
pub fn cutsets(g: &LabeledGraph, max_size: usize) -> Vec<BTreeSet<u32>> {
    cutset_masks(g, max_size)
        .into_iter()
        .map(|m| mask_labels(g, m))
        .collect()
}

pub(crate) fn cutset_masks(g: &LabeledGraph, max_size: usize) -> Vec<u64> {
    let n = g.n();
    let full = full_mask(n);
    let mut out = Vec::new();
    for size in 0..=max_size.min(n) {
        subsets_of_size(n, size, 0, 0, &mut |u| {
            if component_masks_within(g, full & !u).len() >= 2 {
                out.push(u);
            }
        });
    }
    out
}

fn subsets_of_size(n: usize, size: usize, from: usize, acc: u64, f: &mut dyn FnMut(u64)) {
    if size == 0 {
        f(acc);
        return;
    }
    for i in from..n {
        if n - i < size {
            break;
        }
        subsets_of_size(n, size - 1, i + 1, acc | 1 << i, f);
    }
}
