//! Deciding 12-representability and related graph classes.

mod classes;
mod obstruction;
mod search;
mod trees;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::represent::{truncate, verifies, Representation};
use crate::words::{Pattern, Word};

pub use classes::{
    is_11_occurrence_representable, is_chordal, is_co_interval, is_comparability, is_interval,
    is_permutation_graph, orient_by_labels, transitive_orientation, CLASS_BOUND,
};
pub use obstruction::{
    find_cutset_violation, find_obstruction_labeled, find_obstruction_tree, Obstruction, ObstructionKind,
};
pub use search::{
    is_12_representable, is_12_representable_labeled, labeled_word_search, tree_certificate, SearchOptions, WordSearch,
    WordSearchResult, DEFAULT_BUDGET, FULL_SEARCH_BOUND, OBSTRUCTION_ONLY_BOUND,
};
pub use trees::{double_caterpillar_spine, is_double_caterpillar};

pub(crate) use trees::spine_ranks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Word-search nodes over all searched labelings.
    pub nodes: u64,
    /// Labelings considered (partial labelings in obstruction-only mode).
    pub labelings: u64,
    /// Labelings refuted by obstructions alone.
    pub pruned: u64,
    /// Labelings handed to the word search.
    pub searched: u64,
    /// Labelings whose search ran out of budget.
    pub budget_hits: u64,
}

/// The outcome of a recognition run.
///
/// `Yes` carries a representation of the graph relabeled by `labeling`.
/// `No` carries an obstruction for that labeling when one exists, and
/// `exhausted` tells whether some labeling needed the full word search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub status: Status,
    /// Input label to assigned label.
    pub labeling: Option<BTreeMap<u32, u32>>,
    pub representation: Option<Representation>,
    pub obstruction: Option<Obstruction>,
    pub exhausted: bool,
    pub stats: SearchStats,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct CertificateWire {
    status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labeling: Option<BTreeMap<u32, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    word: Option<Word>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    obstruction: Option<Obstruction>,
    exhausted: bool,
    stats: SearchStats,
}

impl Certificate {
    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn word(&self) -> Option<&Word> {
        self.representation.as_ref().map(Representation::word)
    }

    pub(crate) fn wire(&self) -> CertificateWire {
        CertificateWire {
            status: self.status,
            labeling: self.labeling.clone(),
            word: self.word().cloned(),
            obstruction: self.obstruction.clone(),
            exhausted: self.exhausted,
            stats: self.stats.clone(),
        }
    }

    /// Rebuilds a certificate issued for `g`, checking any word it carries.
    pub(crate) fn from_wire(wire: CertificateWire, g: &LabeledGraph) -> Result<Self> {
        let representation = match wire.word {
            Some(word) => {
                let target = match &wire.labeling {
                    Some(map) => g.relabel_with(map)?,
                    None => g.clone(),
                };
                Some(Representation::new(target, Pattern::twelve(), word)?)
            }
            None => None,
        };
        Ok(Certificate {
            status: wire.status,
            labeling: wire.labeling,
            representation,
            obstruction: wire.obstruction,
            exhausted: wire.exhausted,
            stats: wire.stats,
        })
    }

    pub fn from_json(text: &str, g: &LabeledGraph) -> Result<Self> {
        let wire = serde_json::from_str(text).map_err(|e| Error::parse(truncate(text), e.to_string()))?;
        Certificate::from_wire(wire, g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.wire()).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.wire()).expect("certificate serializes")
    }

    /// Re-validates the certificate against the graph it was issued for.
    pub fn recheck(&self, g: &LabeledGraph) -> bool {
        let relabeled = match &self.labeling {
            Some(map) => match g.relabel_with(map) {
                Ok(h) => h,
                Err(_) => return false,
            },
            None => g.clone(),
        };
        match self.status {
            Status::Yes => self
                .word()
                .is_some_and(|w| verifies(w, &relabeled, &Pattern::twelve())),
            Status::No => match &self.obstruction {
                Some(o) if o.kind == ObstructionKind::GoodComponents => o.recheck(g),
                Some(o) => o.recheck(&relabeled),
                None => self.exhausted,
            },
            Status::Unknown => self.representation.is_none(),
        }
    }
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.wire().serialize(s)
    }
}
