use std::collections::BTreeSet;

use super::check_self;
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::words::{Pattern, Word};

/// Leftmost occurrences of each letter, in order.
pub fn initial_permutation(w: &Word) -> Word {
    let mut seen = BTreeSet::new();
    let letters = w.letters().iter().copied().filter(|&x| seen.insert(x)).collect();
    Word::new(letters).expect("letters of a word are positive")
}

/// A word `1^k`-representing `g`, a graph on `1..=n`, for `k >= 3`.
///
/// Starts from `1 2 ... n` and removes the non-edges `ij` in lexicographic
/// order by prepending `i^(k-1) π i p(w)`, where `π` lists the other
/// letters ascending and `p(w)` is the initial permutation.
pub fn represent_1k(g: &LabeledGraph, k: usize) -> Result<Word> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("k = {k}: 1^k representation needs k >= 3")));
    }
    if !g.is_on_range() {
        return Err(Error::NotOnInitialSegment);
    }
    let n = g.n() as u32;
    let mut w: Vec<u32> = (1..=n).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            if g.has_edge(i, j) {
                continue;
            }
            let p = initial_permutation(&Word::new(w.clone())?);
            let mut next = vec![i; k - 1];
            next.extend((1..=n).filter(|&x| x != i && x != j));
            next.push(i);
            next.extend_from_slice(p.letters());
            next.extend_from_slice(&w);
            w = next;
        }
    }
    let w = Word::new(w)?;
    check_self(&w, g, &Pattern::ones(k)?)?;
    Ok(w)
}
