use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{ConstructionResult, Method};
use crate::error::{Error, Result};
use crate::graphs::{bits, full_mask, structure, LabeledGraph};
use crate::recognize::{is_12_representable, spine_ranks, SearchOptions, Status, FULL_SEARCH_BOUND};
use crate::represent::Representation;
use crate::words::{Pattern, Word};

/// The 12-representant of the uniform double caterpillar with a two-vertex
/// spine and `k` middle vertices per spine vertex. The spine ends carry
/// labels `1` and `4k + 4`.
pub fn dc_base_word(k: usize) -> Result<Word> {
    if k < 1 {
        return Err(Error::InvalidParameters("dc_base_word needs k >= 1".into()));
    }
    let k = k as u32;
    let mut w = vec![2];
    for a in 2..=k + 1 {
        w.extend([2 * a, 2 * a - 1]);
    }
    w.extend((2 * k + 4..=4 * k + 2).step_by(2));
    w.push(4 * k + 4);
    w.extend((1..=2 * k + 1).step_by(2));
    for a in k + 2..=2 * k + 1 {
        w.extend([2 * a, 2 * a - 1]);
    }
    w.push(4 * k + 3);
    Word::new(w)
}

fn glue_letters(wg: &[u32], top: u32, wh: &[u32]) -> Vec<u32> {
    let swap = |x: u32, from: u32, to: u32| if x == from { to } else { x };
    wg.iter()
        .map(|&x| swap(x, top, top + 1))
        .chain(wh.iter().map(|&x| swap(x, top + 1, top)))
        .collect()
}

fn copy_letters(w: &[u32], v: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * w.len());
    for &x in w {
        match x.cmp(&v) {
            std::cmp::Ordering::Less => out.push(x),
            std::cmp::Ordering::Equal => out.extend([v, v + 1]),
            std::cmp::Ordering::Greater => out.push(x + 1),
        }
    }
    out
}

fn require_twelve(rep: &Representation) -> Result<()> {
    if rep.pattern().is_twelve() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("pattern must be 12, got {}", rep.pattern())))
    }
}

/// Joins `G` (labels `1..=k`) and `H` (labels `k+1..=l`) by the edge
/// `xy`, where `x = k` and `y = k + 1`. In the result `x` carries label
/// `k + 1` and `y` label `k`; every other label is unchanged.
pub fn glue(rep_g: &Representation, rep_h: &Representation, x: u32, y: u32) -> Result<Representation> {
    require_twelve(rep_g)?;
    require_twelve(rep_h)?;
    let g = rep_g.graph();
    let h = rep_h.graph();
    if g.n() == 0 || !g.is_on_range() {
        return Err(Error::Precondition("G must be labeled 1..k".into()));
    }
    let k = g.n() as u32;
    let contiguous = h.labels().iter().enumerate().all(|(i, &l)| l == k + 1 + i as u32);
    if h.n() == 0 || !contiguous {
        return Err(Error::Precondition(format!("H must be labeled {}..l", k + 1)));
    }
    if x != k || y != k + 1 {
        return Err(Error::Precondition(format!(
            "glue vertices must be {k} (maximum of G) and {} (minimum of H), got {x} and {y}",
            k + 1
        )));
    }
    let w = Word::new(glue_letters(rep_g.word().letters(), k, rep_h.word().letters()))?;
    let mut graph = g.disjoint_union(h)?;
    graph.add_edge(x, y)?;
    let graph = graph.relabel(|l| match l {
        l if l == k => k + 1,
        l if l == k + 1 => k,
        l => l,
    })?;
    Representation::new(graph, Pattern::twelve(), w).map_err(|_| Error::SelfCheckFailed)
}

/// Adds a copy of `v` labeled `v + 1`, shifting larger labels up by one.
pub fn add_copy_repr(rep: &Representation, v: u32) -> Result<Representation> {
    require_twelve(rep)?;
    let g = rep.graph();
    if !g.contains(v) {
        return Err(Error::UnknownLabel(v));
    }
    let graph = g.relabel(|x| if x > v { x + 1 } else { x })?.add_copy(v, v + 1)?;
    let w = Word::new(copy_letters(rep.word().letters(), v))?;
    Representation::new(graph, Pattern::twelve(), w).map_err(|_| Error::SelfCheckFailed)
}

/// Adjacency lists of the graph 12-represented by a word over `1..=n`
/// containing every letter, without the 64-vertex graph limit.
fn twelve_adjacency(w: &[u32], n: usize) -> Vec<Vec<usize>> {
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0; n + 1];
    for (i, &x) in w.iter().enumerate() {
        let x = x as usize;
        first[x] = first[x].min(i);
        last[x] = i;
    }
    let mut adj = vec![Vec::new(); n + 1];
    for x in 1..=n {
        for y in x + 1..=n {
            if last[y] < first[x] {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
    }
    adj
}

fn path_between(adj: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    if parent[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

/// One spine vertex of a double caterpillar: its leaf and its middle
/// vertices with their leaves.
#[derive(Default)]
struct Hang<T> {
    leaf: Option<T>,
    middles: Vec<(T, T)>,
}

/// Splits the neighbors of `v` off `spine` into a leaf and middles.
fn hang<T: Copy + Ord>(v: T, spine: &BTreeSet<T>, neighbors: impl Fn(T) -> Vec<T>) -> Option<Hang<T>> {
    let mut out = Hang { leaf: None, middles: Vec::new() };
    for u in neighbors(v) {
        if spine.contains(&u) {
            continue;
        }
        let around = neighbors(u);
        match around.len() {
            1 if out.leaf.is_none() => out.leaf = Some(u),
            2 => {
                let leaf = *around.iter().find(|&&x| x != v)?;
                if neighbors(leaf).len() != 1 {
                    return None;
                }
                out.middles.push((u, leaf));
            }
            _ => return None,
        }
    }
    Some(out)
}

fn construct_by_embedding(t: &LabeledGraph, spine: Vec<usize>) -> Option<ConstructionResult> {
    let n = t.n();
    let rows = t.rows();
    // Sibling leaves are copies of each other; keep the smallest of each group.
    let mut alive = full_mask(n);
    let mut copies = Vec::new();
    if n >= 3 {
        for p in 0..n {
            let mut leaves = bits(rows[p]).filter(|&u| rows[u].count_ones() == 1);
            if let Some(kept) = leaves.next() {
                for extra in leaves {
                    alive &= !(1u64 << extra);
                    copies.push((extra, kept));
                }
            }
        }
    }
    let spine = if spine.is_empty() {
        vec![structure::tree_centers(t)[0]]
    } else {
        spine
    };
    let spine_set: BTreeSet<usize> = spine.iter().copied().collect();
    let alive_neighbors = |v: usize| bits(rows[v] & alive).collect::<Vec<_>>();
    let hangs: Vec<Hang<usize>> = spine
        .iter()
        .map(|&v| hang(v, &spine_set, alive_neighbors))
        .collect::<Option<_>>()?;

    let k = hangs.iter().map(|h| h.middles.len()).max().unwrap_or(0).max(1);
    let r = spine.len().div_ceil(2);
    let piece = 4 * k as u32 + 4;
    let base = dc_base_word(k).ok()?;
    let mut letters: Vec<u32> = base.letters().to_vec();
    for p in 1..r as u32 {
        let next: Vec<u32> = base.letters().iter().map(|&x| x + p * piece).collect();
        letters = glue_letters(&letters, p * piece, &next);
    }
    let total = r * piece as usize;
    let adj = twelve_adjacency(&letters, total);
    let path = path_between(&adj, 1, total)?;
    if path.len() != 2 * r {
        return None;
    }
    let path_set: BTreeSet<usize> = path.iter().copied().collect();
    let uniform: Vec<Hang<usize>> = path
        .iter()
        .map(|&v| hang(v, &path_set, |x| adj[x].clone()))
        .collect::<Option<_>>()?;
    if uniform.iter().any(|h| h.leaf.is_none() || h.middles.len() != k) {
        return None;
    }

    let mut image: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, (&v, h)) in spine.iter().zip(&hangs).enumerate() {
        let u = &uniform[i];
        image.insert(v, path[i]);
        if let Some(leaf) = h.leaf {
            image.insert(leaf, u.leaf?);
        }
        for (&(m, ml), &(um, uml)) in h.middles.iter().zip(&u.middles) {
            image.insert(m, um);
            image.insert(ml, uml);
        }
    }
    if image.len() != alive.count_ones() as usize {
        return None;
    }
    let keep: BTreeSet<u32> = image.values().map(|&x| x as u32).collect();
    let word = Word::new(letters).ok()?.restrict(&keep).reduce();
    let rank: BTreeMap<u32, u32> = keep.iter().enumerate().map(|(i, &x)| (x, i as u32 + 1)).collect();
    let mut labeling: BTreeMap<u32, u32> = image
        .iter()
        .map(|(&v, &x)| (t.labels()[v], rank[&(x as u32)]))
        .collect();

    let mut word = word.into_letters();
    for (extra, kept) in copies {
        let v = labeling[&t.labels()[kept]];
        word = copy_letters(&word, v);
        for l in labeling.values_mut() {
            if *l > v {
                *l += 1;
            }
        }
        labeling.insert(t.labels()[extra], v + 1);
    }
    let word = Word::new(word).ok()?;
    ConstructionResult::new(t, labeling, word, Pattern::twelve(), Method::DoubleCaterpillar).ok()
}

/// A 12-representation of the tree `t` relabeled, or `None` when `t` is not
/// a double caterpillar. Embeds `t` into a uniform double caterpillar built
/// from glued copies of [`dc_base_word`] and restricts.
pub fn represent_double_caterpillar(t: &LabeledGraph) -> Result<Option<ConstructionResult>> {
    let Some(spine) = spine_ranks(t)? else {
        return Ok(None);
    };
    if let Some(done) = construct_by_embedding(t, spine) {
        return Ok(Some(done));
    }
    if t.n() > FULL_SEARCH_BOUND {
        return Err(Error::SelfCheckFailed);
    }
    let cert = is_12_representable(t, &SearchOptions::default())?;
    match (cert.status, cert.labeling, cert.representation) {
        (Status::Yes, Some(labeling), Some(rep)) => {
            let word = rep.word().clone();
            ConstructionResult::new(t, labeling, word, Pattern::twelve(), Method::DoubleCaterpillar).map(Some)
        }
        _ => Err(Error::SelfCheckFailed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{enumerate_trees, find_isomorphism, generate, GraphFamily};
    use crate::represent::decode;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn rep(word: &str) -> Representation {
        Representation::of_word(w(word), Pattern::twelve()).unwrap()
    }

    #[test]
    fn base_words() {
        assert_eq!(dc_base_word(1).unwrap(), w("2 4 3 6 8 1 3 6 5 7"));
        let d1 = decode(&dc_base_word(1).unwrap(), &Pattern::twelve()).unwrap();
        assert_eq!(d1.edges(), vec![(1, 2), (1, 4), (1, 8), (3, 4), (5, 6), (5, 8), (7, 8)]);
        let w2 = dc_base_word(2).unwrap();
        assert_eq!(w2, w("2 4 3 6 5 8 10 12 1 3 5 8 7 10 9 11"));
        let d2 = decode(&w2, &Pattern::twelve()).unwrap();
        assert_eq!(d2.neighbors(1), vec![2, 4, 6, 12]);
        assert_eq!(d2.neighbors(12), vec![1, 7, 9, 11]);
        assert!(dc_base_word(0).is_err());
    }

    #[test]
    fn base_word_is_uniform_caterpillar() {
        for k in 1..=5 {
            let d = decode(&dc_base_word(k).unwrap(), &Pattern::twelve()).unwrap();
            let u = generate(&GraphFamily::UniformDoubleCaterpillar { spine_pairs: 1, k }).unwrap();
            assert!(find_isomorphism(&d, &u).is_some(), "k = {k}");
        }
    }

    #[test]
    fn glue_examples() {
        assert_eq!(glue(&rep("1"), &rep("2"), 1, 2).unwrap().word(), &w("2 1"));
        let p4 = glue(&rep("2 1"), &rep("4 3"), 2, 3).unwrap();
        assert_eq!(p4.word(), &w("3 1 4 2"));
        assert_eq!(p4.graph().edges(), vec![(1, 3), (2, 3), (2, 4)]);
        assert!(glue(&rep("2 1"), &rep("4 3"), 1, 3).is_err());
        assert!(glue(&rep("2 1"), &rep("5 4"), 2, 3).is_err());
    }

    #[test]
    fn glued_base_words_are_two_pair_caterpillars() {
        for k in 1..=3 {
            let piece = 4 * k as u32 + 4;
            let a = Representation::of_word(dc_base_word(k).unwrap(), Pattern::twelve()).unwrap();
            let b_word = Word::new(dc_base_word(k).unwrap().letters().iter().map(|x| x + piece).collect()).unwrap();
            let b = Representation::of_word(b_word, Pattern::twelve()).unwrap();
            let glued = glue(&a, &b, piece, piece + 1).unwrap();
            let u = generate(&GraphFamily::UniformDoubleCaterpillar { spine_pairs: 2, k }).unwrap();
            assert!(find_isomorphism(glued.graph(), &u).is_some(), "k = {k}");
        }
    }

    #[test]
    fn copy_examples() {
        let one = add_copy_repr(&rep("1"), 1).unwrap();
        assert_eq!(one.word(), &w("1 2"));
        assert_eq!(one.graph().edge_count(), 0);
        let k2 = add_copy_repr(&rep("2 1"), 1).unwrap();
        assert_eq!(k2.word(), &w("3 1 2"));
        assert_eq!(k2.graph().edges(), vec![(1, 3), (2, 3)]);
        let r = rep("3 1 2");
        for v in 1..=3 {
            let c = add_copy_repr(&r, v).unwrap();
            assert_eq!(c.graph().degree(v + 1), r.graph().degree(v));
        }
        let eleven = Representation::of_word(w("1 2"), "11".parse().unwrap()).unwrap();
        assert!(add_copy_repr(&eleven, 1).is_err());
        assert!(add_copy_repr(&r, 9).is_err());
    }

    #[test]
    fn family_examples() {
        for f in [GraphFamily::Path(5), GraphFamily::Star(6), GraphFamily::Path(12)] {
            let t = generate(&f).unwrap();
            assert!(represent_double_caterpillar(&t).unwrap().is_some(), "{f}");
        }
        let spider = generate(&GraphFamily::Spider(3, 3, 3)).unwrap();
        assert_eq!(represent_double_caterpillar(&spider).unwrap(), None);
        let c4 = generate(&GraphFamily::Cycle(4)).unwrap();
        assert_eq!(represent_double_caterpillar(&c4), Err(Error::NotATree));
    }

    #[test]
    fn every_small_tree_by_embedding() {
        for n in 1..=10 {
            for t in enumerate_trees(n).unwrap() {
                let spine = spine_ranks(&t).unwrap();
                if let Some(spine) = spine {
                    assert!(construct_by_embedding(&t, spine).is_some(), "{:?}", t.edges());
                }
            }
        }
    }

    #[test]
    fn large_uniform_caterpillars() {
        for (r, k) in [(2, 3), (3, 2), (4, 1)] {
            let t = generate(&GraphFamily::UniformDoubleCaterpillar { spine_pairs: r, k }).unwrap();
            let spine = spine_ranks(&t).unwrap().unwrap();
            let built = construct_by_embedding(&t, spine).unwrap();
            assert_eq!(built.word().alphabet().len(), t.n());
        }
    }
}
