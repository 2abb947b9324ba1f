//! Isomorphism testing for graphs beyond the canonical-code bound.

use std::collections::BTreeMap;

use super::{bits, LabeledGraph};

/// Stable colors by iterated neighborhood refinement, starting from degree.
fn refine(g: &LabeledGraph, h: &LabeledGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut cg: Vec<usize> = (0..g.n()).map(|i| g.rows()[i].count_ones() as usize).collect();
    let mut ch: Vec<usize> = (0..h.n()).map(|i| h.rows()[i].count_ones() as usize).collect();
    loop {
        let sig = |g: &LabeledGraph, c: &[usize], i: usize| {
            let mut nb: Vec<usize> = bits(g.rows()[i]).map(|j| c[j]).collect();
            nb.sort_unstable();
            (c[i], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|i| sig(g, &cg, i)).collect();
        let sh: Vec<_> = (0..h.n()).map(|i| sig(h, &ch, i)).collect();
        let mut palette: BTreeMap<_, usize> = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| palette[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| palette[s]).collect();
        let mut hist_g = ng.clone();
        let mut hist_h = nh.clone();
        hist_g.sort_unstable();
        hist_h.sort_unstable();
        if hist_g != hist_h {
            return None;
        }
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        let stable = classes(&ng) == classes(&cg);
        cg = ng;
        ch = nh;
        if stable {
            return Some((cg, ch));
        }
    }
}

/// A label map `g -> h` that carries edges onto edges and non-edges onto
/// non-edges, if one exists.
pub fn find_isomorphism(g: &LabeledGraph, h: &LabeledGraph) -> Option<BTreeMap<u32, u32>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine(g, h)?;
    let n = g.n();
    // Match vertices of the rarest color class first.
    let mut order: Vec<usize> = (0..n).collect();
    let freq = |c: usize| cg.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (freq(cg[v]), cg[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used) {
        Some(
            (0..n)
                .map(|i| (g.labels()[i], h.labels()[map[i]]))
                .collect(),
        )
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &LabeledGraph,
    h: &LabeledGraph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for t in 0..h.n() {
        if *used >> t & 1 == 1 || ch[t] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.adjacent_idx(u, v) == h.adjacent_idx(map[u], t));
        if !consistent {
            continue;
        }
        map[v] = t;
        *used |= 1 << t;
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << t);
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{generate, GraphFamily};

    fn check(g: &LabeledGraph, h: &LabeledGraph, m: &BTreeMap<u32, u32>) {
        for &x in g.labels() {
            for &y in g.labels() {
                if x != y {
                    assert_eq!(g.has_edge(x, y), h.has_edge(m[&x], m[&y]));
                }
            }
        }
    }

    #[test]
    fn finds_relabelings() {
        let g = generate(&GraphFamily::Grid(3, 4)).unwrap();
        let h = g.relabel(|x| 100 - 7 * x).unwrap();
        let m = find_isomorphism(&g, &h).unwrap();
        check(&g, &h, &m);
    }

    #[test]
    fn rejects_non_isomorphic() {
        let c6 = generate(&GraphFamily::Cycle(6)).unwrap();
        let two_c3 = LabeledGraph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(find_isomorphism(&c6, &two_c3).is_none());
        let p = generate(&GraphFamily::Path(4)).unwrap();
        let s = generate(&GraphFamily::Star(3)).unwrap();
        assert!(find_isomorphism(&p, &s).is_none());
    }

    #[test]
    fn agrees_with_canonical_codes() {
        use crate::graphs::{canonical_form, enumerate_graphs};
        let all = enumerate_graphs(5).unwrap();
        for a in &all {
            for b in &all {
                let same = canonical_form(a).unwrap() == canonical_form(b).unwrap();
                assert_eq!(find_isomorphism(a, b).is_some(), same);
            }
        }
    }
}
