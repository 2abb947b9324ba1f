//! Decoding words into graphs and checking claimed representations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::words::{complement_word, has_match_letters, Pattern, Word};

/// Positions of each letter, keyed by letter.
fn positions(w: &Word) -> BTreeMap<u32, Vec<usize>> {
    let mut pos: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &x) in w.letters().iter().enumerate() {
        pos.entry(x).or_default().push(i);
    }
    pos
}

/// Merges two sorted position lists into the pair restriction.
fn merged(w: &[u32], a: &[usize], b: &[usize], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(w[a[i]]);
            i += 1;
        } else {
            out.push(w[b[j]]);
            j += 1;
        }
    }
}

/// The graph `u`-represented by `w`: vertices are the letters of `w`, and
/// `xy` is an edge iff the restriction of `w` to `{x, y}` has no `u`-match.
pub fn decode(w: &Word, u: &Pattern) -> Result<LabeledGraph> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let pos = positions(w);
    let mut g = LabeledGraph::empty(pos.keys().copied())?;
    let entries: Vec<(&u32, &Vec<usize>)> = pos.iter().collect();
    let mut buf = Vec::new();
    for (i, (&x, px)) in entries.iter().enumerate() {
        for (&y, py) in &entries[i + 1..] {
            merged(w.letters(), px, py, &mut buf);
            if !has_match_letters(&buf, u.letters()) {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Exact labeled check: same vertex set and `decode(w, u) = g`.
pub fn verifies(w: &Word, g: &LabeledGraph, u: &Pattern) -> bool {
    if w.alphabet() != g.label_set() {
        return false;
    }
    if w.is_empty() {
        return true;
    }
    decode(w, u).is_ok_and(|d| d == *g)
}

/// Keeps only the first and last occurrence of every letter. Preserves the
/// 12-decoded graph.
pub fn normalize_12(w: &Word) -> Word {
    let pos = positions(w);
    let keep: BTreeSet<usize> = pos
        .values()
        .flat_map(|p| [p[0], p[p.len() - 1]])
        .collect();
    Word::new(keep.into_iter().map(|i| w.letters()[i]).collect()).expect("letters already positive")
}

/// Doubles every letter that occurs once, in place. Requires every letter
/// to occur at most twice.
pub fn pad_to_exactly_two(w: &Word) -> Result<Word> {
    let pos = positions(w);
    if let Some((x, _)) = pos.iter().find(|(_, p)| p.len() > 2) {
        return Err(Error::Precondition(format!("letter {x} occurs more than twice")));
    }
    let mut out = Vec::with_capacity(2 * pos.len());
    for &x in w.letters() {
        out.push(x);
        if pos[&x].len() == 1 {
            out.push(x);
        }
    }
    Word::new(out)
}

/// `complement_word(reverse(w))`. When `w` 12-represents `G` on `[n]`, the
/// result 12-represents the supplement of `G`.
pub fn transform_reverse_complement(w: &Word) -> Result<Word> {
    complement_word(&w.reverse())
}

/// A word together with the graph and pattern it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    graph: LabeledGraph,
    pattern: Pattern,
    word: Word,
}

impl Representation {
    /// Checks that `word` `pattern`-represents `graph`.
    pub fn new(graph: LabeledGraph, pattern: Pattern, word: Word) -> Result<Self> {
        if !verifies(&word, &graph, &pattern) {
            return Err(Error::NotARepresentation {
                pattern: pattern.to_string(),
            });
        }
        Ok(Representation { graph, pattern, word })
    }

    /// The graph a word represents, packaged with it.
    pub fn of_word(word: Word, pattern: Pattern) -> Result<Self> {
        let graph = decode(&word, &pattern)?;
        Ok(Representation { graph, pattern, word })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_parts(self) -> (LabeledGraph, Pattern, Word) {
        (self.graph, self.pattern, self.word)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(truncate(text), e.to_string()))
    }
}

pub(crate) fn truncate(text: &str) -> String {
    text.chars().take(40).collect()
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RepresentationWire {
    pub pattern: Pattern,
    pub labels: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    pub word: Word,
}

impl From<&Representation> for RepresentationWire {
    fn from(r: &Representation) -> Self {
        RepresentationWire {
            pattern: r.pattern.clone(),
            labels: r.graph.labels().to_vec(),
            edges: r.graph.edges(),
            word: r.word.clone(),
        }
    }
}

impl TryFrom<RepresentationWire> for Representation {
    type Error = Error;

    fn try_from(w: RepresentationWire) -> Result<Self> {
        let graph = LabeledGraph::new(w.labels, w.edges)?;
        Representation::new(graph, w.pattern, w.word)
    }
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepresentationWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = RepresentationWire::deserialize(d)?;
        Representation::try_from(wire).map_err(serde::de::Error::custom)
    }
}

/// Restricts word and graph to `subset`; the result still verifies.
pub fn restrict_representation(rep: &Representation, subset: &BTreeSet<u32>) -> Result<Representation> {
    let graph = rep.graph.induced(subset)?;
    let word = rep.word.restrict(subset);
    Ok(Representation {
        graph,
        pattern: rep.pattern.clone(),
        word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{generate, GraphFamily};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn g(n: usize, edges: &[(u32, u32)]) -> LabeledGraph {
        LabeledGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn decodes_square() {
        let d = decode(&w("1 4 2 1 3 2 4 3"), &p("11")).unwrap();
        assert_eq!(d, g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]));
        assert_eq!(decode(&Word::empty(), &p("12")), Err(Error::EmptyWord));
    }

    #[test]
    fn monotone_words() {
        let down = decode(&w("5 4 3 2 1"), &p("12")).unwrap();
        assert_eq!(down, generate(&GraphFamily::Complete(5)).unwrap());
        let up = decode(&w("1 2 3 4 5"), &p("12")).unwrap();
        assert_eq!(up.edge_count(), 0);
    }

    #[test]
    fn base_caterpillar_word() {
        let d = decode(&w("2 4 3 6 8 1 3 6 5 7"), &p("12")).unwrap();
        assert_eq!(d, g(8, &[(1, 2), (1, 4), (1, 8), (3, 4), (5, 6), (5, 8), (7, 8)]));
    }

    #[test]
    fn verification() {
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(verifies(&w("1 4 2 1 3 2 4 3"), &c4, &p("11")));
        assert!(!verifies(&w("1 2"), &g(2, &[(1, 2)]), &p("12")));
        let fig = w("7 6 7 5 5 4 3 4 2 6 1 2 1 3");
        let d = decode(&fig, &p("12")).unwrap();
        assert!(verifies(&fig, &d, &p("12")));
        assert!(!verifies(&w("1 2"), &g(3, &[]), &p("12")));
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_12(&w("1 1 2 1 3")), w("1 2 1 3"));
        let fig = w("7 6 7 5 5 4 3 4 2 6 1 2 1 3");
        assert_eq!(normalize_12(&fig), fig);
        assert_eq!(pad_to_exactly_two(&w("1 2")).unwrap(), w("1 1 2 2"));
        assert_eq!(pad_to_exactly_two(&fig).unwrap(), fig);
        assert!(pad_to_exactly_two(&w("1 1 1")).is_err());
    }

    #[test]
    fn reverse_complement() {
        assert_eq!(transform_reverse_complement(&w("1 2")).unwrap(), w("1 2"));
        assert_eq!(transform_reverse_complement(&w("2 1")).unwrap(), w("2 1"));
        assert!(transform_reverse_complement(&Word::empty()).is_err());
    }

    #[test]
    fn restriction() {
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let rep = Representation::new(c4.clone(), p("11"), w("1 4 2 1 3 2 4 3")).unwrap();
        let sub = restrict_representation(&rep, &BTreeSet::from([1, 2, 3])).unwrap();
        assert_eq!(sub.graph(), &g(3, &[(1, 2), (2, 3)]));
        assert!(verifies(sub.word(), sub.graph(), sub.pattern()));
        let full = restrict_representation(&rep, &c4.label_set()).unwrap();
        assert_eq!(full, rep);
        let one = restrict_representation(&rep, &BTreeSet::from([4])).unwrap();
        assert_eq!(one.graph().n(), 1);
        assert!(restrict_representation(&rep, &BTreeSet::from([9])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let rep = Representation::of_word(w("2 1"), p("12")).unwrap();
        let json = rep.to_json();
        assert_eq!(json, r#"{"pattern":"12","labels":[1,2],"edges":[[1,2]],"word":[2,1]}"#);
        assert_eq!(Representation::from_json(&json).unwrap(), rep);
        let bad = r#"{"pattern":"12","labels":[1,2],"edges":[],"word":[2,1]}"#;
        assert!(Representation::from_json(bad).is_err());
    }
}
