use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::LabeledGraph;
use crate::error::{Error, Result};

/// Parameterized graph families. Vertices are labeled `1..=n` in
/// construction order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// `K_n`, `n >= 1`.
    Complete(usize),
    /// `K_{1,leaves}`; the center is vertex 1.
    Star(usize),
    /// `rows x cols` grid.
    Grid(usize, usize),
    /// `P_2 x P_rungs`, the straight width-2 strip.
    Ladder(usize),
    /// L-shaped width-2 strip: two arms of `2k` unit squares sharing the
    /// corner square (`8k` vertices).
    Corner(usize),
    /// Two horizontal runs of `2k` unit squares, the upper run starting
    /// directly above the last square of the lower one (`8k + 2` vertices).
    SkewLadder(usize),
    /// Spine `v_1..v_{2r}`; every spine vertex has one leaf and `k` middle
    /// children, each middle child carrying one leaf.
    UniformDoubleCaterpillar { spine_pairs: usize, k: usize },
    /// Three paths of `a`, `b`, `c` vertices joined at a center (vertex 1).
    Spider(usize, usize, usize),
}

impl GraphFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Cycle(_) => "cycle",
            GraphFamily::Path(_) => "path",
            GraphFamily::Complete(_) => "complete",
            GraphFamily::Star(_) => "star",
            GraphFamily::Grid(..) => "grid",
            GraphFamily::Ladder(_) => "ladder",
            GraphFamily::Corner(_) => "corner",
            GraphFamily::SkewLadder(_) => "skew_ladder",
            GraphFamily::UniformDoubleCaterpillar { .. } => "uniform_double_caterpillar",
            GraphFamily::Spider(..) => "spider",
        }
    }

    /// Builds a family from its tag and integer parameters.
    pub fn from_parts(tag: &str, params: &[usize]) -> Result<Self> {
        let want = |count: usize| -> Result<()> {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::InvalidParameters(format!(
                    "{tag} takes {count} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match tag {
            "cycle" => {
                want(1)?;
                GraphFamily::Cycle(params[0])
            }
            "path" => {
                want(1)?;
                GraphFamily::Path(params[0])
            }
            "complete" => {
                want(1)?;
                GraphFamily::Complete(params[0])
            }
            "star" => {
                want(1)?;
                GraphFamily::Star(params[0])
            }
            "grid" => {
                want(2)?;
                GraphFamily::Grid(params[0], params[1])
            }
            "ladder" => {
                want(1)?;
                GraphFamily::Ladder(params[0])
            }
            "corner" => {
                want(1)?;
                GraphFamily::Corner(params[0])
            }
            "skew_ladder" | "skewladder" => {
                want(1)?;
                GraphFamily::SkewLadder(params[0])
            }
            "uniform_double_caterpillar" | "udc" => {
                want(2)?;
                GraphFamily::UniformDoubleCaterpillar {
                    spine_pairs: params[0],
                    k: params[1],
                }
            }
            "spider" => {
                want(3)?;
                GraphFamily::Spider(params[0], params[1], params[2])
            }
            other => return Err(Error::InvalidParameters(format!("unknown family `{other}`"))),
        };
        Ok(family)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameters(format!("{}: {msg}", self.name())));
        match *self {
            GraphFamily::Cycle(n) if n < 3 => bad("n >= 3 required"),
            GraphFamily::Path(0) | GraphFamily::Complete(0) => bad("n >= 1 required"),
            GraphFamily::Grid(r, c) if r == 0 || c == 0 => bad("rows and cols must be positive"),
            GraphFamily::Ladder(0) => bad("at least one rung required"),
            GraphFamily::Corner(0) | GraphFamily::SkewLadder(0) => bad("k >= 1 required"),
            GraphFamily::UniformDoubleCaterpillar { spine_pairs, k } if spine_pairs == 0 || k == 0 => {
                bad("spine_pairs >= 1 and k >= 1 required")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Cycle(n)
            | GraphFamily::Path(n)
            | GraphFamily::Complete(n)
            | GraphFamily::Star(n)
            | GraphFamily::Ladder(n)
            | GraphFamily::Corner(n)
            | GraphFamily::SkewLadder(n) => write!(f, "{}({n})", self.name()),
            GraphFamily::Grid(r, c) => write!(f, "grid({r},{c})"),
            GraphFamily::UniformDoubleCaterpillar { spine_pairs, k } => {
                write!(f, "uniform_double_caterpillar({spine_pairs},{k})")
            }
            GraphFamily::Spider(a, b, c) => write!(f, "spider({a},{b},{c})"),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    /// Accepts `name(p1,p2,...)` or `name p1 p2 ...`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.replace(['(', ')', ','], " ");
        let mut parts = cleaned.split_whitespace();
        let tag = parts.next().ok_or_else(|| Error::parse(s, "empty family"))?;
        let params = parts
            .map(|p| p.parse::<usize>().map_err(|_| Error::parse(p, "expected a nonnegative integer")))
            .collect::<Result<Vec<_>>>()?;
        GraphFamily::from_parts(tag, &params)
    }
}

/// Accumulates vertices keyed by an arbitrary coordinate, numbering them in
/// insertion order.
struct Builder<K: Ord> {
    ids: BTreeMap<K, u32>,
    edges: Vec<(u32, u32)>,
}

impl<K: Ord + Copy> Builder<K> {
    fn new() -> Self {
        Builder {
            ids: BTreeMap::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, key: K) -> u32 {
        let next = self.ids.len() as u32 + 1;
        *self.ids.entry(key).or_insert(next)
    }

    fn edge(&mut self, a: K, b: K) {
        let (x, y) = (self.vertex(a), self.vertex(b));
        self.edges.push((x, y));
    }

    fn finish(self) -> Result<LabeledGraph> {
        LabeledGraph::from_edges(self.ids.len(), &self.edges)
    }
}

/// Graph spanned by a set of unit squares of the grid, each given by its
/// lower-left corner. Squares are visited in order, so labels follow the strip.
fn from_cells(cells: &[(i32, i32)]) -> Result<LabeledGraph> {
    let mut b = Builder::new();
    for &(x, y) in cells {
        let corners = [(x, y), (x, y + 1), (x + 1, y), (x + 1, y + 1)];
        for c in corners {
            b.vertex(c);
        }
        b.edge((x, y), (x + 1, y));
        b.edge((x, y + 1), (x + 1, y + 1));
        b.edge((x, y), (x, y + 1));
        b.edge((x + 1, y), (x + 1, y + 1));
    }
    b.finish()
}

/// Builds the graph described by `family`.
pub fn generate(family: &GraphFamily) -> Result<LabeledGraph> {
    family.validate()?;
    match *family {
        GraphFamily::Cycle(n) => {
            let edges: Vec<_> = (1..=n as u32).map(|i| (i, i % n as u32 + 1)).collect();
            LabeledGraph::from_edges(n, &edges)
        }
        GraphFamily::Path(n) => {
            let edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
            LabeledGraph::from_edges(n, &edges)
        }
        GraphFamily::Complete(n) => {
            let mut edges = Vec::new();
            for i in 1..=n as u32 {
                for j in (i + 1)..=n as u32 {
                    edges.push((i, j));
                }
            }
            LabeledGraph::from_edges(n, &edges)
        }
        GraphFamily::Star(leaves) => {
            let edges: Vec<_> = (2..=leaves as u32 + 1).map(|i| (1, i)).collect();
            LabeledGraph::from_edges(leaves + 1, &edges)
        }
        GraphFamily::Grid(rows, cols) => {
            let mut b = Builder::new();
            for r in 0..rows {
                for c in 0..cols {
                    b.vertex((r, c));
                }
            }
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        b.edge((r, c), (r, c + 1));
                    }
                    if r + 1 < rows {
                        b.edge((r, c), (r + 1, c));
                    }
                }
            }
            b.finish()
        }
        GraphFamily::Ladder(rungs) => generate(&GraphFamily::Grid(2, rungs)),
        GraphFamily::Corner(k) => {
            let arm = 2 * k as i32;
            let cells: Vec<(i32, i32)> = (0..arm)
                .rev()
                .map(|y| (0, y))
                .chain((1..arm).map(|x| (x, 0)))
                .collect();
            from_cells(&cells)
        }
        GraphFamily::SkewLadder(k) => {
            let run = 2 * k as i32;
            let cells: Vec<(i32, i32)> = (0..run)
                .map(|x| (x, 0))
                .chain((run - 1..2 * run - 1).map(|x| (x, 1)))
                .collect();
            from_cells(&cells)
        }
        GraphFamily::UniformDoubleCaterpillar { spine_pairs, k } => {
            // Keys: (spine index, branch, depth); branch 0 is the spine
            // vertex's own leaf, branches 1..=k are middle children.
            let mut b = Builder::new();
            let spine = 2 * spine_pairs;
            for s in 0..spine {
                b.vertex((s, usize::MAX, 0));
            }
            for s in 0..spine {
                if s + 1 < spine {
                    b.edge((s, usize::MAX, 0), (s + 1, usize::MAX, 0));
                }
                b.edge((s, usize::MAX, 0), (s, 0, 1));
                for m in 1..=k {
                    b.edge((s, usize::MAX, 0), (s, m, 1));
                    b.edge((s, m, 1), (s, m, 2));
                }
            }
            b.finish()
        }
        GraphFamily::Spider(a, bb, c) => {
            let mut b = Builder::new();
            b.vertex((0usize, 0usize));
            for (leg, len) in [a, bb, c].into_iter().enumerate() {
                for i in 1..=len {
                    let prev = if i == 1 { (0, 0) } else { (leg + 1, i - 1) };
                    b.edge(prev, (leg + 1, i));
                }
            }
            b.finish()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{canonical_form, find_isomorphism};

    fn is_bipartite(g: &LabeledGraph) -> bool {
        let mut color = vec![None; g.n()];
        for start in 0..g.n() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for u in crate::graphs::bits(g.rows()[v]) {
                    match color[u] {
                        None => {
                            color[u] = Some(1 - c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    #[test]
    fn basic_families() {
        let c4 = generate(&GraphFamily::Cycle(4)).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        let star = generate(&GraphFamily::Star(5)).unwrap();
        assert_eq!(star.degree(1), 5);
        let grid = generate(&GraphFamily::Grid(3, 3)).unwrap();
        assert_eq!((grid.n(), grid.edge_count()), (9, 12));
        assert!(generate(&GraphFamily::Cycle(2)).is_err());
    }

    #[test]
    fn spider_shape() {
        let s = generate(&GraphFamily::Spider(3, 3, 3)).unwrap();
        assert_eq!(s.n(), 10);
        assert_eq!(s.edge_count(), 9);
        assert_eq!(s.degree(1), 3);
    }

    #[test]
    fn uniform_double_caterpillar_base() {
        let g = generate(&GraphFamily::UniformDoubleCaterpillar { spine_pairs: 1, k: 1 }).unwrap();
        let decoded_shape =
            LabeledGraph::from_edges(8, &[(1, 2), (1, 4), (1, 8), (3, 4), (5, 6), (5, 8), (7, 8)]).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&decoded_shape).unwrap());
        let big = generate(&GraphFamily::UniformDoubleCaterpillar { spine_pairs: 3, k: 2 }).unwrap();
        assert_eq!(big.n(), 4 * 3 * 3);
        assert_eq!(big.edge_count(), big.n() - 1);
    }

    #[test]
    fn strip_shapes() {
        for k in 1..=6 {
            let corner = generate(&GraphFamily::Corner(k)).unwrap();
            let skew = generate(&GraphFamily::SkewLadder(k)).unwrap();
            assert_eq!(corner.n(), 8 * k);
            assert_eq!(corner.edge_count(), 12 * k - 2);
            assert_eq!(skew.n(), 8 * k + 2);
            assert_eq!(skew.edge_count(), 12 * k + 1);
            for g in [&corner, &skew] {
                assert!(g.labels().iter().all(|&v| g.degree(v) <= 4));
                assert!(is_bipartite(g));
                assert_eq!(crate::graphs::connected_components(g).len(), 1);
            }
            assert_eq!(corner.labels().iter().filter(|&&v| corner.degree(v) == 4).count(), 1);
        }
        let ladder = generate(&GraphFamily::Ladder(4)).unwrap();
        assert!(ladder.labels().iter().all(|&v| ladder.degree(v) <= 3));
        assert!(is_bipartite(&ladder));
        // The two-square corner and the 2-rung-per-run skew ladder are the
        // small cases of the same shapes.
        let l = generate(&GraphFamily::Corner(1)).unwrap();
        let manual = LabeledGraph::from_edges(
            8,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5), (6, 7), (7, 8), (8, 5)],
        )
        .unwrap();
        assert!(find_isomorphism(&l, &manual).is_some());
    }

    #[test]
    fn parse_family() {
        assert_eq!("spider(3,3,3)".parse::<GraphFamily>().unwrap(), GraphFamily::Spider(3, 3, 3));
        assert_eq!("grid 3 3".parse::<GraphFamily>().unwrap(), GraphFamily::Grid(3, 3));
        assert!("cycle".parse::<GraphFamily>().is_err());
        assert!("blob 3".parse::<GraphFamily>().is_err());
        assert_eq!(GraphFamily::Corner(3).to_string(), "corner(3)");
    }
}
