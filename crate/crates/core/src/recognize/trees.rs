//! Double caterpillars: trees with every vertex within distance two of a
//! central path.

use crate::error::{Error, Result};
use crate::graphs::{bits, full_mask, structure, LabeledGraph};

/// Ranks left after deleting all leaves (degree one within `alive`) once.
fn strip_leaves(t: &LabeledGraph, alive: u64) -> u64 {
    let leaves = bits(alive)
        .filter(|&v| (t.rows()[v] & alive).count_ones() == 1)
        .fold(0u64, |m, v| m | 1 << v);
    alive & !leaves
}

/// Orders the vertices of `mask` along the path they induce, starting from
/// the end with the smaller label. `None` if they do not induce a path.
pub(crate) fn path_order(t: &LabeledGraph, mask: u64) -> Option<Vec<usize>> {
    let count = mask.count_ones() as usize;
    if count == 0 {
        return Some(Vec::new());
    }
    let degree = |v: usize| (t.rows()[v] & mask).count_ones();
    if bits(mask).any(|v| degree(v) > 2) {
        return None;
    }
    let start = if count == 1 {
        mask.trailing_zeros() as usize
    } else {
        bits(mask).find(|&v| degree(v) == 1)?
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = bits(t.rows()[cur] & mask).find(|&u| u != prev) {
        if order.contains(&next) {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == count).then_some(order)
}

/// Ranks of the spine: the path left after deleting leaves twice. `None`
/// when the remainder is not a path; an empty spine when nothing remains.
pub(crate) fn spine_ranks(t: &LabeledGraph) -> Result<Option<Vec<usize>>> {
    if !structure::is_tree(t) {
        return Err(Error::NotATree);
    }
    let once = strip_leaves(t, full_mask(t.n()));
    let twice = strip_leaves(t, once);
    Ok(path_order(t, twice))
}

/// The spine when `t` is a double caterpillar (possibly empty for trees of
/// diameter at most three), `None` otherwise.
pub fn double_caterpillar_spine(t: &LabeledGraph) -> Result<Option<Vec<u32>>> {
    Ok(spine_ranks(t)?.map(|s| s.into_iter().map(|i| t.labels()[i]).collect()))
}

pub fn is_double_caterpillar(t: &LabeledGraph) -> Result<bool> {
    Ok(double_caterpillar_spine(t)?.is_some())
}
