//! Constructions of representing words. Every constructor checks its own
//! output with [`verifies`](crate::represent::verifies) before returning.

mod grids;
mod intervals;
mod trees;
mod universal;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::represent::{verifies, Representation, RepresentationWire};
use crate::words::{Pattern, Word};

pub use grids::{corner_word, ladder_word, represent_corner, represent_ladder, represent_skew_ladder, skew_ladder_word};
pub use intervals::{
    realize_intervals, represent_co_interval, represent_co_interval_graph, represent_permutation_graph, Interval,
    REALIZE_BOUND,
};
pub use trees::{add_copy_repr, dc_base_word, glue, represent_double_caterpillar};
pub use universal::{initial_permutation, represent_1k};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "perm")]
    Permutation,
    #[serde(rename = "1k")]
    Ones,
    #[serde(rename = "cointerval")]
    CoInterval,
    #[serde(rename = "dcat")]
    DoubleCaterpillar,
    #[serde(rename = "corner")]
    Corner,
    #[serde(rename = "skewladder")]
    SkewLadder,
    #[serde(rename = "ladder")]
    Ladder,
    #[serde(rename = "glue")]
    Glue,
    #[serde(rename = "copy")]
    Copy,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Permutation,
        Method::Ones,
        Method::CoInterval,
        Method::DoubleCaterpillar,
        Method::Corner,
        Method::SkewLadder,
        Method::Ladder,
        Method::Glue,
        Method::Copy,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Method::Permutation => "perm",
            Method::Ones => "1k",
            Method::CoInterval => "cointerval",
            Method::DoubleCaterpillar => "dcat",
            Method::Corner => "corner",
            Method::SkewLadder => "skewladder",
            Method::Ladder => "ladder",
            Method::Glue => "glue",
            Method::Copy => "copy",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::parse(s, "unknown construction method"))
    }
}

/// A verified representation of a relabeled input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    /// Input label to label in the word.
    pub labeling: BTreeMap<u32, u32>,
    pub representation: Representation,
    pub method: Method,
}

#[derive(Serialize)]
struct ConstructionWire<'a> {
    #[serde(flatten)]
    rep: RepresentationWire,
    method: Method,
    labeling: &'a BTreeMap<u32, u32>,
}

impl ConstructionResult {
    /// Checks that `word` represents `input` relabeled by `labeling`.
    pub fn new(input: &LabeledGraph, labeling: BTreeMap<u32, u32>, word: Word, pattern: Pattern, method: Method) -> Result<Self> {
        let graph = input.relabel_with(&labeling)?;
        if !verifies(&word, &graph, &pattern) {
            return Err(Error::SelfCheckFailed);
        }
        let representation = Representation::new(graph, pattern, word)?;
        Ok(ConstructionResult {
            labeling,
            representation,
            method,
        })
    }

    pub fn word(&self) -> &Word {
        self.representation.word()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("construction serializes")
    }
}

impl Serialize for ConstructionResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConstructionWire {
            rep: RepresentationWire::from(&self.representation),
            method: self.method,
            labeling: &self.labeling,
        }
        .serialize(s)
    }
}

/// Every label mapped to itself.
pub fn identity_labeling(g: &LabeledGraph) -> BTreeMap<u32, u32> {
    g.labels().iter().map(|&l| (l, l)).collect()
}

fn check_self(w: &Word, g: &LabeledGraph, u: &Pattern) -> Result<()> {
    if verifies(w, g, u) {
        Ok(())
    } else {
        Err(Error::SelfCheckFailed)
    }
}
