//! Exact word search for labeled graphs and labeling enumeration for
//! unlabeled ones.
//!
//! For letters `x < y` whose restriction is built from first and last
//! occurrences only, `w_{x,y}` has a 12-match iff the first `x` precedes the
//! last `y`. So `xy` is an edge iff every `y` comes before every `x`. With
//! at most two copies per letter, a word is an interleaving of open/close
//! events, and feasibility of the remaining suffix depends only on which
//! letters are unused, open or closed.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::obstruction::{find_obstruction_labeled, find_obstruction_tree, forbidden_with_max, has_forbidden};
use super::{Certificate, SearchStats, Status};
use crate::construct::represent_double_caterpillar;
use crate::error::{Error, Result};
use crate::graphs::{full_mask, is_tree, LabeledGraph};
use crate::represent::Representation;
use crate::words::{Pattern, Word};

/// Largest graph decided exactly by [`is_12_representable`] and
/// [`is_12_representable_labeled`].
pub const FULL_SEARCH_BOUND: usize = 7;
/// Largest graph accepted by the obstruction-only mode.
pub const OBSTRUCTION_ONLY_BOUND: usize = 12;
/// Default per-labeling node budget.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSearch {
    Found(Word),
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSearchResult {
    pub outcome: WordSearch,
    pub nodes: u64,
}

struct Dfs {
    n: usize,
    larger_nbrs: Vec<u64>,
    smaller_non: Vec<u64>,
    dead: HashSet<(u64, u64)>,
    nodes: u64,
    budget: u64,
    word: Vec<usize>,
}

impl Dfs {
    /// `None` when the budget runs out.
    fn go(&mut self, opened: u64, closed: u64) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if closed == full_mask(self.n) {
            return Some(true);
        }
        if self.dead.contains(&(opened, closed)) {
            return Some(false);
        }
        for x in 0..self.n {
            let bit = 1u64 << x;
            let can_close = self.smaller_non[x] & !opened & !bit == 0;
            if opened & bit == 0 {
                if self.larger_nbrs[x] & !closed != 0 {
                    continue;
                }
                if can_close {
                    self.word.push(x);
                    if self.go(opened | bit, closed | bit)? {
                        return Some(true);
                    }
                    self.word.pop();
                }
                self.word.push(x);
                if self.go(opened | bit, closed)? {
                    return Some(true);
                }
                self.word.pop();
            } else if closed & bit == 0 && can_close {
                self.word.push(x);
                if self.go(opened, closed | bit)? {
                    return Some(true);
                }
                self.word.pop();
            }
        }
        self.dead.insert((opened, closed));
        Some(false)
    }
}

/// Searches for a word with every letter used once or twice that
/// 12-represents `g` exactly as labeled. No obstruction screening.
pub fn labeled_word_search(g: &LabeledGraph, budget: u64) -> WordSearchResult {
    let n = g.n();
    let rows = g.rows();
    let full = full_mask(n);
    let larger_nbrs = (0..n).map(|x| rows[x] & full & !((1u64 << x) | ((1u64 << x) - 1))).collect();
    let smaller_non = (0..n).map(|x| !rows[x] & ((1u64 << x) - 1)).collect();
    let mut dfs = Dfs {
        n,
        larger_nbrs,
        smaller_non,
        dead: HashSet::new(),
        nodes: 0,
        budget,
        word: Vec::with_capacity(2 * n),
    };
    let outcome = match dfs.go(0, 0) {
        Some(true) => {
            let letters = dfs.word.iter().map(|&i| g.labels()[i]).collect();
            WordSearch::Found(Word::new(letters).expect("labels are positive"))
        }
        Some(false) => WordSearch::Exhausted,
        None => WordSearch::BudgetExceeded,
    };
    WordSearchResult { outcome, nodes: dfs.nodes }
}

fn identity_labeling(g: &LabeledGraph) -> BTreeMap<u32, u32> {
    g.labels().iter().map(|&l| (l, l)).collect()
}

/// Decides whether `g`, with its given labels, is 12-representable.
pub fn is_12_representable_labeled(g: &LabeledGraph, budget: u64) -> Result<Certificate> {
    if g.n() > FULL_SEARCH_BOUND {
        return Err(Error::too_large("labeled search", g.n(), FULL_SEARCH_BOUND));
    }
    let mut stats = SearchStats {
        labelings: 1,
        ..SearchStats::default()
    };
    if let Some(o) = find_obstruction_labeled(g) {
        stats.pruned = 1;
        return Ok(Certificate {
            status: Status::No,
            labeling: Some(identity_labeling(g)),
            representation: None,
            obstruction: Some(o),
            exhausted: false,
            stats,
        });
    }
    stats.searched = 1;
    let result = labeled_word_search(g, budget);
    stats.nodes = result.nodes;
    let mut cert = Certificate {
        status: Status::Unknown,
        labeling: Some(identity_labeling(g)),
        representation: None,
        obstruction: None,
        exhausted: false,
        stats,
    };
    match result.outcome {
        WordSearch::Found(w) => {
            cert.status = Status::Yes;
            cert.representation = Some(Representation::new(g.clone(), Pattern::twelve(), w)?);
        }
        WordSearch::Exhausted => {
            cert.status = Status::No;
            cert.exhausted = true;
        }
        WordSearch::BudgetExceeded => cert.stats.budget_hits = 1,
    }
    Ok(cert)
}

/// Options for the unlabeled decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Word-search node budget per labeling.
    pub budget: u64,
    /// Worker threads.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

/// `perm[i]` is the zero-based label of vertex `i`; returns rows in label space.
fn relabel_rows(rows: &[u64], perm: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; rows.len()];
    for (i, &row) in rows.iter().enumerate() {
        let mut r = 0u64;
        let mut m = row;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            r |= 1 << perm[j];
        }
        out[perm[i]] = r;
    }
    out
}

fn edge_key(rows: &[u64]) -> u64 {
    let mut key = 0u64;
    for j in 1..rows.len() {
        for row in &rows[..j] {
            key = key << 1 | (row >> j & 1);
        }
    }
    key
}

fn supplement_rows(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let perm: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
    relabel_rows(rows, &perm)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

struct Candidate {
    perm: Vec<usize>,
    rows: Vec<u64>,
}

enum Outcome {
    Skipped,
    Pruned,
    Found(Word, u64),
    Exhausted(u64),
    Budget(u64),
}

/// Labelings of `[n]` in lexicographic order, keeping one per labeled graph
/// and dropping those whose supplement was already kept.
fn candidate_labelings(g: &LabeledGraph) -> Vec<Candidate> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let rows = relabel_rows(g.rows(), &perm);
        let key = edge_key(&rows);
        if seen.insert(key) {
            seen.insert(edge_key(&supplement_rows(&rows)));
            out.push(Candidate { perm: perm.clone(), rows });
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn labeled_on_range(rows: &[u64]) -> LabeledGraph {
    LabeledGraph::from_rows((1..=rows.len() as u32).collect(), rows.to_vec())
}

fn labeling_map(g: &LabeledGraph, perm: &[usize]) -> BTreeMap<u32, u32> {
    g.labels().iter().zip(perm).map(|(&l, &p)| (l, p as u32 + 1)).collect()
}

/// Decides whether some labeling of `g` is 12-representable.
///
/// Up to [`FULL_SEARCH_BOUND`] vertices the answer is exact (modulo the
/// budget). Up to [`OBSTRUCTION_ONLY_BOUND`] only obstructions are used, so
/// the answer is `No` or `Unknown`. Larger trees are decided exactly by
/// [`tree_certificate`].
pub fn is_12_representable(g: &LabeledGraph, opts: &SearchOptions) -> Result<Certificate> {
    let n = g.n();
    if n > FULL_SEARCH_BOUND && is_tree(g) {
        return tree_certificate(g);
    }
    if n > OBSTRUCTION_ONLY_BOUND {
        return Err(Error::too_large("recognition", n, OBSTRUCTION_ONLY_BOUND));
    }
    if n > FULL_SEARCH_BOUND {
        return Ok(obstruction_only(g));
    }
    let candidates = candidate_labelings(g);
    let best = AtomicUsize::new(usize::MAX);
    let evaluate = |i: usize, c: &Candidate| -> Outcome {
        if i > best.load(Ordering::Relaxed) {
            return Outcome::Skipped;
        }
        if has_forbidden(&c.rows) {
            return Outcome::Pruned;
        }
        let r = labeled_word_search(&labeled_on_range(&c.rows), opts.budget);
        match r.outcome {
            WordSearch::Found(w) => {
                best.fetch_min(i, Ordering::Relaxed);
                Outcome::Found(w, r.nodes)
            }
            WordSearch::Exhausted => Outcome::Exhausted(r.nodes),
            WordSearch::BudgetExceeded => Outcome::Budget(r.nodes),
        }
    };
    let outcomes: Vec<Outcome> = if opts.jobs <= 1 {
        candidates.iter().enumerate().map(|(i, c)| evaluate(i, c)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?;
        pool.install(|| {
            candidates
                .par_iter()
                .enumerate()
                .map(|(i, c)| evaluate(i, c))
                .collect()
        })
    };

    let winner = outcomes.iter().position(|o| matches!(o, Outcome::Found(..)));
    let considered = winner.map_or(outcomes.len(), |w| w + 1);
    let mut stats = SearchStats::default();
    let mut exhausted = false;
    for o in &outcomes[..considered] {
        stats.labelings += 1;
        match o {
            Outcome::Skipped => unreachable!("labelings before the winner are always evaluated"),
            Outcome::Pruned => stats.pruned += 1,
            Outcome::Found(_, nodes) => {
                stats.searched += 1;
                stats.nodes += nodes;
            }
            Outcome::Exhausted(nodes) => {
                stats.searched += 1;
                stats.nodes += nodes;
                exhausted = true;
            }
            Outcome::Budget(nodes) => {
                stats.searched += 1;
                stats.nodes += nodes;
                stats.budget_hits += 1;
            }
        }
    }

    if let Some(w) = winner {
        let Outcome::Found(word, _) = &outcomes[w] else { unreachable!() };
        let c = &candidates[w];
        let rep = Representation::new(labeled_on_range(&c.rows), Pattern::twelve(), word.clone())?;
        return Ok(Certificate {
            status: Status::Yes,
            labeling: Some(labeling_map(g, &c.perm)),
            representation: Some(rep),
            obstruction: None,
            exhausted: false,
            stats,
        });
    }
    let first = &candidates[0];
    let status = if stats.budget_hits > 0 { Status::Unknown } else { Status::No };
    let obstruction = if status == Status::No {
        find_obstruction_labeled(&labeled_on_range(&first.rows))
    } else {
        None
    };
    Ok(Certificate {
        status,
        labeling: Some(labeling_map(g, &first.perm)),
        representation: None,
        obstruction,
        exhausted: status == Status::No && exhausted,
        stats,
    })
}

/// A tree is 12-representable iff it is a double caterpillar: either a
/// good-components obstruction or a constructed word.
pub fn tree_certificate(t: &LabeledGraph) -> Result<Certificate> {
    let mut cert = Certificate {
        status: Status::Unknown,
        labeling: None,
        representation: None,
        obstruction: None,
        exhausted: false,
        stats: SearchStats::default(),
    };
    if let Some(o) = find_obstruction_tree(t)? {
        cert.status = Status::No;
        cert.obstruction = Some(o);
    } else if let Some(built) = represent_double_caterpillar(t)? {
        cert.status = Status::Yes;
        cert.labeling = Some(built.labeling);
        cert.representation = Some(built.representation);
    }
    Ok(cert)
}

/// Backtracking over labelings, assigning labels in increasing order and
/// pruning as soon as a forbidden configuration appears among the labeled
/// vertices.
fn obstruction_only(g: &LabeledGraph) -> Certificate {
    struct Walk<'a> {
        g: &'a LabeledGraph,
        order: Vec<usize>,
        rows: Vec<u64>,
        used: u64,
        stats: SearchStats,
    }
    impl Walk<'_> {
        fn survives(&mut self) -> bool {
            let n = self.g.n();
            let t = self.order.len();
            if t == n {
                return true;
            }
            for v in 0..n {
                if self.used >> v & 1 == 1 {
                    continue;
                }
                self.stats.labelings += 1;
                let mut row = 0u64;
                for (p, &u) in self.order.iter().enumerate() {
                    if self.g.adjacent_idx(u, v) {
                        row |= 1 << p;
                        self.rows[p] |= 1 << t;
                    }
                }
                self.rows[t] = row;
                let ok = !forbidden_with_max(&self.rows, t);
                if ok {
                    self.order.push(v);
                    self.used |= 1 << v;
                    if self.survives() {
                        return true;
                    }
                    self.used &= !(1 << v);
                    self.order.pop();
                } else {
                    self.stats.pruned += 1;
                }
                for p in 0..t {
                    self.rows[p] &= !(1 << t);
                }
                self.rows[t] = 0;
            }
            false
        }
    }
    let n = g.n();
    let mut walk = Walk {
        g,
        order: Vec::with_capacity(n),
        rows: vec![0; n],
        used: 0,
        stats: SearchStats::default(),
    };
    let survivor = walk.survives();
    let identity: Vec<usize> = (0..n).collect();
    let mut cert = Certificate {
        status: Status::Unknown,
        labeling: Some(labeling_map(g, &identity)),
        representation: None,
        obstruction: None,
        exhausted: false,
        stats: walk.stats,
    };
    if survivor {
        let mut perm = vec![0; n];
        for (label, &v) in walk.order.iter().enumerate() {
            perm[v] = label;
        }
        cert.labeling = Some(labeling_map(g, &perm));
    } else {
        cert.status = Status::No;
        cert.obstruction = find_obstruction_labeled(&g.reduce());
    }
    cert
}
