//! Membership tests for the graph classes around 12-representability.

use crate::error::{Error, Result};
use crate::graphs::{bits, full_mask, LabeledGraph};

/// Largest graph accepted by the comparability-based checkers.
pub const CLASS_BOUND: usize = 10;

fn check_bound(g: &LabeledGraph, what: &'static str) -> Result<()> {
    if g.n() > CLASS_BOUND {
        return Err(Error::too_large(what, g.n(), CLASS_BOUND));
    }
    Ok(())
}

/// Partial orientation as out-neighborhood masks.
#[derive(Clone)]
struct Orientation {
    out: Vec<u64>,
}

impl Orientation {
    fn has(&self, a: usize, b: usize) -> bool {
        self.out[a] >> b & 1 == 1
    }

    /// Orients `a -> b` and everything it forces. `false` on conflict.
    fn set(&mut self, g: &LabeledGraph, a: usize, b: usize) -> bool {
        let rows = g.rows();
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            if self.has(a, b) {
                continue;
            }
            if self.has(b, a) {
                return false;
            }
            self.out[a] |= 1 << b;
            // Neighbors of a that miss b must also leave a; neighbors of b
            // that miss a must also enter b.
            for c in bits(rows[a] & !rows[b] & !(1u64 << b)) {
                stack.push((a, c));
            }
            for c in bits(rows[b] & !rows[a] & !(1u64 << a)) {
                stack.push((c, b));
            }
            // Transitivity with arcs already present.
            for c in bits(self.out[b]) {
                if !g.adjacent_idx(a, c) {
                    return false;
                }
                stack.push((a, c));
            }
            for c in 0..g.n() {
                if self.has(c, a) {
                    if !g.adjacent_idx(c, b) {
                        return false;
                    }
                    stack.push((c, b));
                }
            }
        }
        true
    }

    fn first_unoriented(&self, g: &LabeledGraph) -> Option<(usize, usize)> {
        for i in 0..g.n() {
            for j in bits(g.rows()[i] & !((1u64 << i) | ((1u64 << i) - 1))) {
                if !self.has(i, j) && !self.has(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

fn is_transitive(g: &LabeledGraph, out: &[u64]) -> bool {
    (0..g.n()).all(|a| bits(out[a]).all(|b| out[b] & !out[a] == 0))
}

fn orient(g: &LabeledGraph, o: Orientation) -> Option<Orientation> {
    let Some((i, j)) = o.first_unoriented(g) else {
        return is_transitive(g, &o.out).then_some(o);
    };
    for (a, b) in [(i, j), (j, i)] {
        let mut next = o.clone();
        if next.set(g, a, b) {
            if let Some(done) = orient(g, next) {
                return Some(done);
            }
        }
    }
    None
}

/// A transitive orientation of `g` as arcs `(from, to)`, if one exists.
pub fn transitive_orientation(g: &LabeledGraph) -> Result<Option<Vec<(u32, u32)>>> {
    check_bound(g, "comparability test")?;
    let start = Orientation { out: vec![0; g.n()] };
    Ok(orient(g, start).map(|o| {
        let mut arcs = Vec::new();
        for a in 0..g.n() {
            for b in bits(o.out[a]) {
                arcs.push((g.labels()[a], g.labels()[b]));
            }
        }
        arcs
    }))
}

pub fn is_comparability(g: &LabeledGraph) -> Result<bool> {
    Ok(transitive_orientation(g)?.is_some())
}

/// Orients every edge from the smaller to the larger label and reports
/// whether that orientation is transitive.
pub fn orient_by_labels(g: &LabeledGraph) -> (Vec<(u32, u32)>, bool) {
    let arcs = g.edges();
    let out: Vec<u64> = (0..g.n())
        .map(|i| g.rows()[i] & !((1u64 << i) | ((1u64 << i) - 1)))
        .collect();
    (arcs, is_transitive(g, &out))
}

/// Both `g` and its complement are comparability graphs.
pub fn is_permutation_graph(g: &LabeledGraph) -> Result<bool> {
    Ok(is_comparability(g)? && is_comparability(&g.complement())?)
}

/// Repeatedly removes simplicial vertices.
pub fn is_chordal(g: &LabeledGraph) -> Result<bool> {
    check_bound(g, "chordality test")?;
    let mut alive = full_mask(g.n());
    while alive != 0 {
        let simplicial = bits(alive).find(|&v| {
            let nb = g.rows()[v] & alive;
            bits(nb).all(|u| nb & !(1u64 << u) & !g.rows()[u] == 0)
        });
        match simplicial {
            Some(v) => alive &= !(1u64 << v),
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Chordal with a comparability complement.
pub fn is_interval(g: &LabeledGraph) -> Result<bool> {
    Ok(is_chordal(g)? && is_comparability(&g.complement())?)
}

pub fn is_co_interval(g: &LabeledGraph) -> Result<bool> {
    is_interval(&g.complement())
}

/// The non-isolated vertices form a clique.
pub fn is_11_occurrence_representable(g: &LabeledGraph) -> bool {
    let core = (0..g.n()).filter(|&i| g.rows()[i] != 0).fold(0u64, |m, i| m | 1 << i);
    bits(core).all(|i| g.rows()[i] == core & !(1u64 << i))
}
