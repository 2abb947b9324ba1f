//! Classification of all small graphs up to isomorphism.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{canonical_form, enumerate_graphs, is_tree, CanonicalCode, LabeledGraph, CANON_BOUND};
use crate::recognize::{
    is_11_occurrence_representable, is_12_representable, is_chordal, is_co_interval, is_comparability,
    is_double_caterpillar, is_interval, is_permutation_graph, Certificate, CertificateWire, SearchOptions,
    Status,
};
use crate::represent::truncate;

/// Largest order accepted by [`build_atlas`].
pub const ATLAS_BOUND: usize = CANON_BOUND;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flags {
    pub repr12: Status,
    pub comparability: bool,
    pub permutation: bool,
    pub interval: bool,
    pub co_interval: bool,
    pub chordal: bool,
    pub occ11: bool,
    pub tree: bool,
    pub double_caterpillar: bool,
}

impl Flags {
    /// Every flag except `repr12`, which comes from a certificate.
    fn structural(g: &LabeledGraph, repr12: Status) -> Result<Self> {
        let tree = is_tree(g);
        Ok(Flags {
            repr12,
            comparability: is_comparability(g)?,
            permutation: is_permutation_graph(g)?,
            interval: is_interval(g)?,
            co_interval: is_co_interval(g)?,
            chordal: is_chordal(g)?,
            occ11: is_11_occurrence_representable(g),
            tree,
            double_caterpillar: tree && is_double_caterpillar(g)?,
        })
    }

    /// Containments between the classes that fail for these flags.
    pub fn violations(&self) -> Vec<&'static str> {
        let yes = self.repr12 == Status::Yes;
        let no = self.repr12 == Status::No;
        let mut out = Vec::new();
        if self.permutation && !yes {
            out.push("permutation => repr12");
        }
        if self.co_interval && !yes {
            out.push("co_interval => repr12");
        }
        if !self.comparability && !no {
            out.push("repr12 => comparability");
        }
        if self.permutation && !self.comparability {
            out.push("permutation => comparability");
        }
        if self.interval && !self.chordal {
            out.push("interval => chordal");
        }
        if self.double_caterpillar && !self.tree {
            out.push("double_caterpillar => tree");
        }
        out
    }
}

/// One isomorphism class: its canonical representative, flags and the
/// certificate behind `repr12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasRecord {
    pub code: CanonicalCode,
    pub graph: LabeledGraph,
    pub flags: Flags,
    pub certificate: Certificate,
}

#[derive(Serialize)]
struct RecordOut<'a> {
    n: usize,
    code: &'a CanonicalCode,
    edges: Vec<(u32, u32)>,
    flags: &'a Flags,
    certificate: CertificateWire,
}

#[derive(Deserialize)]
struct RecordIn {
    n: usize,
    code: String,
    edges: Vec<(u32, u32)>,
    flags: Flags,
    certificate: CertificateWire,
}

impl AtlasRecord {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn to_json(&self) -> String {
        let out = RecordOut {
            n: self.n(),
            code: &self.code,
            edges: self.graph.edges(),
            flags: &self.flags,
            certificate: self.certificate.wire(),
        };
        serde_json::to_string(&out).expect("record serializes")
    }

    pub fn from_json(line: &str) -> Result<Self> {
        let rec: RecordIn = serde_json::from_str(line).map_err(|e| Error::parse(truncate(line), e.to_string()))?;
        let code = CanonicalCode::from_bit_string(rec.n, &rec.code)?;
        let graph = LabeledGraph::new(1..=rec.n as u32, rec.edges)?;
        if graph != code.to_graph() {
            return Err(Error::parse(rec.code, "edges do not match the code"));
        }
        let certificate = Certificate::from_wire(rec.certificate, &graph)?;
        Ok(AtlasRecord {
            code,
            graph,
            flags: rec.flags,
            certificate,
        })
    }

    /// Recomputes the structural flags and re-validates the certificate.
    pub fn recheck(&self) -> bool {
        let fresh = Flags::structural(&self.graph, self.certificate.status);
        fresh.is_ok_and(|f| f == self.flags)
            && self.flags.repr12 == self.certificate.status
            && self.certificate.recheck(&self.graph)
    }
}

/// Classifies the isomorphism class of `g` (at most [`ATLAS_BOUND`]
/// vertices). `repr12` is exact up to the search bound and `unknown`
/// beyond it.
pub fn classify(g: &LabeledGraph, opts: &SearchOptions) -> Result<AtlasRecord> {
    let code = canonical_form(g)?;
    let graph = code.to_graph();
    let certificate = is_12_representable(&graph, opts)?;
    let flags = Flags::structural(&graph, certificate.status)?;
    Ok(AtlasRecord {
        code,
        graph,
        flags,
        certificate,
    })
}

/// Records for every graph on `1..=max_n` vertices, sorted by order and
/// canonical code. The output does not depend on `opts.jobs`.
pub fn build_atlas(max_n: usize, opts: &SearchOptions) -> Result<Vec<AtlasRecord>> {
    if max_n > ATLAS_BOUND {
        return Err(Error::too_large("atlas", max_n, ATLAS_BOUND));
    }
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_graphs(n)?);
    }
    let inner = SearchOptions { jobs: 1, ..*opts };
    let classify_all = || -> Result<Vec<AtlasRecord>> { graphs.par_iter().map(|g| classify(g, &inner)).collect() };
    let mut records = if opts.jobs <= 1 {
        graphs.iter().map(|g| classify(g, &inner)).collect::<Result<Vec<_>>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?
            .install(classify_all)?
    };
    records.sort_by_key(|r| (r.n(), r.code));
    Ok(records)
}

pub fn write_jsonl(records: &[AtlasRecord], mut out: impl Write) -> Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(())
}

pub fn read_jsonl(input: impl BufRead) -> Result<Vec<AtlasRecord>> {
    let mut records = Vec::new();
    for line in input.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            records.push(AtlasRecord::from_json(&line)?);
        }
    }
    Ok(records)
}

/// A cell of the hierarchy: one combination of class memberships.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Region {
    pub n: usize,
    pub repr12: Status,
    pub comparability: bool,
    pub permutation: bool,
    pub co_interval: bool,
}

impl Region {
    fn of(r: &AtlasRecord) -> Self {
        Region {
            n: r.n(),
            repr12: r.flags.repr12,
            comparability: r.flags.comparability,
            permutation: r.flags.permutation,
            co_interval: r.flags.co_interval,
        }
    }
}

/// Number of classes in each nonempty region.
pub fn region_counts(records: &[AtlasRecord]) -> BTreeMap<Region, usize> {
    let mut counts = BTreeMap::new();
    for r in records {
        *counts.entry(Region::of(r)).or_insert(0) += 1;
    }
    counts
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Yes => "yes",
        Status::No => "no",
        Status::Unknown => "unknown",
    }
}

pub fn regions_csv(counts: &BTreeMap<Region, usize>) -> String {
    let mut out = String::from("n,repr12,comparability,permutation,co_interval,count\n");
    for (r, c) in counts {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            status_name(r.repr12),
            r.comparability,
            r.permutation,
            r.co_interval,
            c
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{generate, GraphFamily};

    fn fam(f: GraphFamily) -> LabeledGraph {
        generate(&f).unwrap()
    }

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn classify_examples() {
        let c5 = classify(&fam(GraphFamily::Cycle(5)), &opts()).unwrap();
        assert_eq!(c5.flags.repr12, Status::No);
        assert!(!c5.flags.comparability && !c5.flags.permutation);
        let c6 = classify(&fam(GraphFamily::Cycle(6)), &opts()).unwrap();
        assert_eq!(c6.flags.repr12, Status::No);
        assert!(c6.flags.comparability);
        let k3 = classify(&fam(GraphFamily::Complete(3)), &opts()).unwrap();
        let f = k3.flags;
        assert_eq!(f.repr12, Status::Yes);
        assert!(f.comparability && f.permutation && f.interval && f.co_interval && f.chordal && f.occ11);
        assert!(!f.tree && !f.double_caterpillar);
        assert!(classify(&LabeledGraph::on_range(9).unwrap(), &opts()).is_err());
    }

    #[test]
    fn small_atlas_is_consistent() {
        let atlas = build_atlas(4, &opts()).unwrap();
        assert_eq!(atlas.len(), 1 + 2 + 4 + 11);
        for r in &atlas {
            assert_eq!(r.flags.repr12, Status::Yes);
            assert!(r.flags.violations().is_empty());
            assert!(r.recheck());
        }
        let mut text = Vec::new();
        write_jsonl(&atlas, &mut text).unwrap();
        let back = read_jsonl(text.as_slice()).unwrap();
        assert_eq!(back, atlas);
        let counts = region_counts(&atlas);
        assert_eq!(counts.values().sum::<usize>(), atlas.len());
        assert!(regions_csv(&counts).starts_with("n,repr12"));
    }

    #[test]
    fn rejects_tampered_records() {
        let r = classify(&fam(GraphFamily::Path(3)), &opts()).unwrap();
        let line = r.to_json();
        assert!(AtlasRecord::from_json(&line).is_ok());
        let bad = line.replace("\"edges\":[[1,3],[2,3]]", "\"edges\":[[1,2],[2,3]]");
        assert_ne!(bad, line);
        assert!(AtlasRecord::from_json(&bad).is_err());
    }
}
