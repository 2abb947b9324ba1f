//! Brute-force oracles shared by the integration tests. None of them use the
//! search, obstruction or decoding code of the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use wordrep::graphs::{enumerate_graphs, LabeledGraph};
use wordrep::words::occurs;
use wordrep::{Pattern, Word};

/// Index of the pair `x < y` (1-based) in an upper-triangle bit mask.
pub fn pair_bit(n: usize, x: usize, y: usize) -> u32 {
    let (x, y) = (x.min(y) - 1, x.max(y) - 1);
    (x * (2 * n - x - 1) / 2 + (y - x - 1)) as u32
}

pub fn mask_of(g: &LabeledGraph) -> u64 {
    let n = g.n();
    g.edges()
        .into_iter()
        .fold(0, |m, (x, y)| m | 1u64 << pair_bit(n, x as usize, y as usize))
}

pub fn graph_of_mask(n: usize, mask: u64) -> LabeledGraph {
    let mut edges = Vec::new();
    for x in 1..=n {
        for y in x + 1..=n {
            if mask >> pair_bit(n, x, y) & 1 == 1 {
                edges.push((x as u32, y as u32));
            }
        }
    }
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// Edge mask of the graph on `[n]` 12-represented by `w`: `xy` is an edge
/// iff the restriction of `w` to `{x, y}` has no factor "smaller, larger".
pub fn twelve_mask(w: &[u32], n: usize) -> u64 {
    let mut mask = 0;
    for x in 1..=n as u32 {
        for y in x + 1..=n as u32 {
            let r: Vec<u32> = w.iter().copied().filter(|&c| c == x || c == y).collect();
            if !r.windows(2).any(|p| p[0] == x && p[1] == y) {
                mask |= 1u64 << pair_bit(n, x as usize, y as usize);
            }
        }
    }
    mask
}

/// Every word over `[n]` of length at most `max_len` that uses all of
/// `[n]`.
pub fn for_each_covering_word(n: usize, max_len: usize, mut f: impl FnMut(&[u32])) {
    fn rec(n: usize, left: usize, w: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if (1..=n as u32).all(|x| w.contains(&x)) {
            f(w);
        }
        if left == 0 {
            return;
        }
        for x in 1..=n as u32 {
            w.push(x);
            rec(n, left - 1, w, f);
            w.pop();
        }
    }
    rec(n, max_len, &mut Vec::new(), &mut f);
}

/// Every arrangement of the multiset with multiplicity `mult[x-1]` for
/// letter `x`.
pub fn for_each_arrangement(mult: &[usize], mut f: impl FnMut(&[u32])) {
    fn rec(left: &mut [usize], w: &mut Vec<u32>, total: usize, f: &mut dyn FnMut(&[u32])) {
        if w.len() == total {
            f(w);
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                w.push(i as u32 + 1);
                rec(left, w, total, f);
                w.pop();
                left[i] += 1;
            }
        }
    }
    let total = mult.iter().sum();
    rec(&mut mult.to_vec(), &mut Vec::new(), total, &mut f);
}

/// Edge masks of every labeled graph on `[n]` 12-represented by a word in
/// which each letter occurs once or twice. No pruning.
pub fn twelve_masks_bounded(n: usize) -> HashSet<u64> {
    let mut out = HashSet::new();
    for_each_bounded_word(n, |w| {
        out.insert(twelve_mask(w, n));
    });
    out
}

/// Every word over `[n]` in which each letter occurs once or twice.
pub fn for_each_bounded_word(n: usize, mut f: impl FnMut(&[u32])) {
    for code in 0..1usize << n {
        let mult: Vec<usize> = (0..n).map(|i| 1 + (code >> i & 1)).collect();
        for_each_arrangement(&mult, &mut f);
    }
}

/// Edge masks of every labeled graph on `[n]` 12-represented by some word of
/// length at most `max_len`.
pub fn twelve_masks_unrestricted(n: usize, max_len: usize) -> HashSet<u64> {
    let mut out = HashSet::new();
    for_each_covering_word(n, max_len, |w| {
        out.insert(twelve_mask(w, n));
    });
    out
}

pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n as u32).collect(), &mut Vec::new(), &mut out);
    out
}

/// Whether some relabeling of `g` (on `[n]`) lies in `masks`.
pub fn some_labeling_in(g: &LabeledGraph, masks: &HashSet<u64>) -> bool {
    permutations(g.n()).into_iter().any(|p| {
        let h = g.relabel(|x| p[x as usize - 1]).unwrap();
        masks.contains(&mask_of(&h))
    })
}

/// Edge set of the graph `u`-represented by `w`, by testing occurrences in
/// every pair restriction.
pub fn decode_by_occurrence(w: &[u32], u: &Pattern) -> BTreeSet<(u32, u32)> {
    let letters: BTreeSet<u32> = w.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for &x in &letters {
        for &y in letters.range(x + 1..) {
            let r = Word::new(w.iter().copied().filter(|&c| c == x || c == y).collect()).unwrap();
            if !occurs(&r, u) {
                edges.insert((x, y));
            }
        }
    }
    edges
}

/// Edge masks of labeled graphs on `[n]` that are 11-occurrence represented
/// by a word in which each letter occurs once or twice.
pub fn eleven_occurrence_masks(n: usize) -> HashSet<u64> {
    let u: Pattern = "11".parse().unwrap();
    let mut out = HashSet::new();
    for_each_bounded_word(n, |w| {
        let mask = decode_by_occurrence(w, &u)
            .into_iter()
            .fold(0, |m, (x, y)| m | 1u64 << pair_bit(n, x as usize, y as usize));
        out.insert(mask);
    });
    out
}

/// All labeled graphs on `[n]`.
pub fn labeled_graphs(n: usize) -> Vec<LabeledGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(|m| graph_of_mask(n, m)).collect()
}

/// One representative per isomorphism class on `n` vertices.
pub fn classes(n: usize) -> Vec<LabeledGraph> {
    enumerate_graphs(n).unwrap()
}

pub fn graph(n: usize, edges: &[(u32, u32)]) -> LabeledGraph {
    LabeledGraph::from_edges(n, edges).unwrap()
}

pub fn word(s: &str) -> Word {
    Word::parse(s).unwrap()
}

/// Relabels the `i`-th smallest letter as `i`.
pub fn reduction(w: &[u32]) -> Vec<u32> {
    let sorted: BTreeSet<u32> = w.iter().copied().collect();
    let rank: Vec<u32> = sorted.into_iter().collect();
    w.iter().map(|c| rank.binary_search(c).unwrap() as u32 + 1).collect()
}

/// Edge set of the graph `u`-represented by `w`, by scanning the factors of
/// every pair restriction.
pub fn decode_by_match(w: &[u32], u: &[u32]) -> BTreeSet<(u32, u32)> {
    let letters: BTreeSet<u32> = w.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for &x in &letters {
        for &y in letters.range(x + 1..) {
            let r: Vec<u32> = w.iter().copied().filter(|&c| c == x || c == y).collect();
            if !r.windows(u.len()).any(|f| reduction(f) == u) {
                edges.insert((x, y));
            }
        }
    }
    edges
}

pub fn edge_set(g: &LabeledGraph) -> BTreeSet<(u32, u32)> {
    g.edges().into_iter().collect()
}
