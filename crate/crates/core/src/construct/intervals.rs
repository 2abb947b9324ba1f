use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{check_self, ConstructionResult, Method};
use crate::error::{Error, Result};
use crate::graphs::{bits, full_mask, LabeledGraph};
use crate::words::{Pattern, Word};

/// Largest graph accepted by [`realize_intervals`].
pub const REALIZE_BOUND: usize = 8;

/// A closed interval `[left, right]`. Deserializes from `{"left":..,"right":..}`
/// or from a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Self {
        Interval { left, right }
    }

    pub fn meets(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// A permutation 12-representing `g` (labels `1..=n`) with its labels as
/// given, or `None` when the labeling admits none.
pub fn represent_permutation_graph(g: &LabeledGraph) -> Result<Option<Word>> {
    if !g.is_on_range() {
        return Err(Error::NotOnInitialSegment);
    }
    let n = g.n();
    // before[i]: ranks that must precede rank i.
    let mut before = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent_idx(i, j) {
                before[i] |= 1 << j;
            } else {
                before[j] |= 1 << i;
            }
        }
    }
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let Some(next) = bits(full_mask(n) & !placed).find(|&i| before[i] & !placed == 0) else {
            return Ok(None);
        };
        placed |= 1 << next;
        order.push(g.labels()[next]);
    }
    let w = Word::new(order)?;
    check_self(&w, g, &Pattern::twelve())?;
    Ok(Some(w))
}

fn check_intervals(intervals: &[Interval]) -> Result<()> {
    let mut ends = Vec::with_capacity(2 * intervals.len());
    for (i, iv) in intervals.iter().enumerate() {
        if !iv.left.is_finite() || !iv.right.is_finite() || iv.left >= iv.right {
            return Err(Error::InvalidParameters(format!(
                "interval {} = [{}, {}] must have finite endpoints with left < right",
                i + 1,
                iv.left,
                iv.right
            )));
        }
        ends.push(iv.left);
        ends.push(iv.right);
    }
    ends.sort_by(f64::total_cmp);
    if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameters(format!("endpoint {} occurs twice", w[0])));
    }
    Ok(())
}

/// The complement of the intersection graph of `intervals`, vertex `i`
/// being the `i`-th interval (1-based).
fn disjointness_graph(intervals: &[Interval]) -> Result<LabeledGraph> {
    let n = intervals.len();
    let mut g = LabeledGraph::on_range(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if !intervals[i].meets(&intervals[j]) {
                g.add_edge(i as u32 + 1, j as u32 + 1)?;
            }
        }
    }
    Ok(g)
}

/// Labels the interval with the `i`-th smallest left endpoint `n - i + 1`
/// and reads the endpoint labels left to right. The map sends the 1-based
/// input position of each interval to its label; the word 12-represents
/// the graph whose edges join disjoint intervals.
pub fn represent_co_interval(intervals: &[Interval]) -> Result<(BTreeMap<u32, u32>, Word)> {
    check_intervals(intervals)?;
    let n = intervals.len();
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by(|&a, &b| intervals[a].left.total_cmp(&intervals[b].left));
    let mut label = vec![0u32; n];
    for (rank, &i) in by_left.iter().enumerate() {
        label[i] = (n - rank) as u32;
    }
    let mut ends: Vec<(f64, u32)> = Vec::with_capacity(2 * n);
    for (i, iv) in intervals.iter().enumerate() {
        ends.push((iv.left, label[i]));
        ends.push((iv.right, label[i]));
    }
    ends.sort_by(|a, b| a.0.total_cmp(&b.0));
    let w = Word::new(ends.into_iter().map(|(_, l)| l).collect())?;
    let labeling: BTreeMap<u32, u32> = (0..n).map(|i| (i as u32 + 1, label[i])).collect();
    let target = disjointness_graph(intervals)?.relabel_with(&labeling)?;
    check_self(&w, &target, &Pattern::twelve())?;
    Ok((labeling, w))
}

/// Maximal cliques as masks, by Bron–Kerbosch with pivoting.
fn maximal_cliques(g: &LabeledGraph) -> Vec<u64> {
    fn expand(rows: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (rows[u] & p).count_ones()).unwrap();
        for v in bits(p & !rows[pivot]) {
            expand(rows, r | 1 << v, p & rows[v], x & rows[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        expand(g.rows(), 0, full_mask(g.n()), 0, &mut out);
    }
    out.sort_unstable();
    out
}

/// Orders the cliques so every vertex lies in a consecutive run of them.
fn consecutive_order(cliques: &[u64], order: &mut Vec<usize>, used: u64, closed: u64) -> bool {
    if order.len() == cliques.len() {
        return true;
    }
    let last = order.last().map_or(0, |&c| cliques[c]);
    for c in 0..cliques.len() {
        if used >> c & 1 == 1 || cliques[c] & closed != 0 {
            continue;
        }
        order.push(c);
        if consecutive_order(cliques, order, used | 1 << c, closed | (last & !cliques[c])) {
            return true;
        }
        order.pop();
    }
    false
}

/// Intervals with pairwise distinct endpoints whose intersection graph is
/// the complement of `g`; entry `i` belongs to the `i`-th smallest label.
/// `None` when the complement is not an interval graph.
pub fn realize_intervals(g: &LabeledGraph) -> Result<Option<Vec<Interval>>> {
    let n = g.n();
    if n > REALIZE_BOUND {
        return Err(Error::too_large("interval realization", n, REALIZE_BOUND));
    }
    let h = g.complement();
    let cliques = maximal_cliques(&h);
    if cliques.len() > n {
        return Ok(None);
    }
    let mut order = Vec::new();
    if !consecutive_order(&cliques, &mut order, 0, 0) {
        return Ok(None);
    }
    let m = (4 * n + 4) as f64;
    let intervals = (0..n)
        .map(|v| {
            let slots: Vec<usize> = (0..order.len()).filter(|&p| cliques[order[p]] >> v & 1 == 1).collect();
            let (a, b) = (slots[0] as f64, *slots.last().unwrap() as f64);
            Interval::new(a * m + v as f64, b * m + m / 2.0 + v as f64)
        })
        .collect();
    Ok(Some(intervals))
}

/// Realizes `g` as a co-interval graph and represents it, or `None` when
/// `g` is not co-interval.
pub fn represent_co_interval_graph(g: &LabeledGraph) -> Result<Option<ConstructionResult>> {
    let Some(intervals) = realize_intervals(g)? else {
        return Ok(None);
    };
    let (by_position, w) = represent_co_interval(&intervals)?;
    let labeling = g
        .labels()
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, by_position[&(i as u32 + 1)]))
        .collect();
    ConstructionResult::new(g, labeling, w, Pattern::twelve(), Method::CoInterval).map(Some)
}
