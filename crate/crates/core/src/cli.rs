//! The `wordrep` command line.
//!
//! Exit codes: `0` success or a positive answer, `1` a negative or
//! undecided answer, `2` usage, input or size-bound errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::atlas::{build_atlas, classify, region_counts, regions_csv, write_jsonl};
use crate::construct::{
    add_copy_repr, glue, represent_1k, represent_co_interval, represent_co_interval_graph, represent_corner,
    represent_double_caterpillar, represent_ladder, represent_permutation_graph, represent_skew_ladder,
    identity_labeling, ConstructionResult, Interval, Method,
};
use crate::error::{Error, Result};
use crate::graphs::io::{format_edge_list, format_graph6, parse_graph_file, to_dot};
use crate::graphs::{generate, is_tree, GraphFamily, LabeledGraph};
use crate::recognize::{
    find_obstruction_labeled, find_obstruction_tree, is_12_representable, is_12_representable_labeled,
    Certificate, SearchOptions, Status, DEFAULT_BUDGET,
};
use crate::represent::{decode, verifies, Representation};
use crate::words::{Pattern, Word};

#[derive(Parser, Debug)]
#[command(name = "wordrep", version, about = "Graphs represented by words via pattern matching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decode a word into the graph it represents.
    Decode {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check that a word represents a graph, or check a saved construction.
    Verify {
        #[command(flatten)]
        word: OptWordArgs,
        /// Graph to check against.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// A construction or representation JSON file.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Build a representing word.
    Construct {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Pattern length for `1k`, family parameter for grid words.
        #[arg(long)]
        k: Option<usize>,
        /// JSON list of intervals for `cointerval`.
        #[arg(long)]
        intervals: Option<PathBuf>,
        /// Input word(s) for `glue` (two) and `copy` (one).
        #[arg(long)]
        word: Vec<String>,
        /// Vertex to copy.
        #[arg(long)]
        vertex: Option<u32>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Decide whether some labeling of a graph is 12-representable.
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Keep the labels as given instead of searching all labelings.
        #[arg(long)]
        labeled: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Look for an obstruction to 12-representability.
    Obstruct {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Classify a graph into the class hierarchy.
    Classify {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Classify every graph up to a given order (JSON lines).
    Atlas {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Also write region counts as CSV.
        #[arg(long)]
        regions: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a family member, e.g. `gen cycle 5` or `gen "spider(3,3,3)"`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args, Debug)]
struct WordArgs {
    #[arg(long, default_value = "12", value_parser = parse_pattern)]
    pattern: Pattern,
    /// Space-separated letters, or a single run of one-digit letters.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Args, Debug)]
struct OptWordArgs {
    #[arg(long, default_value = "12", value_parser = parse_pattern)]
    pattern: Pattern,
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Word-search node budget per labeling.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            jobs: self.jobs as usize,
        }
    }
}

#[derive(Args, Debug)]
struct OutArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Edgelist,
    G6,
    Word,
}

fn parse_pattern(s: &str) -> std::result::Result<Pattern, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a subcommand produced: text for the output, and whether the
/// answer was positive.
struct Outcome {
    text: String,
    positive: bool,
}

impl Outcome {
    fn yes(text: String) -> Self {
        Outcome { text, positive: true }
    }

    fn no(text: String) -> Self {
        Outcome { text, positive: false }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<LabeledGraph> {
    parse_graph_file(&path.to_string_lossy(), &read(path)?)
}

#[derive(Serialize)]
struct GraphJson {
    labels: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

fn render_graph(g: &LabeledGraph, format: Format, highlight: &[u32]) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let j = GraphJson {
                labels: g.labels().to_vec(),
                edges: g.edges(),
            };
            serde_json::to_string(&j).expect("graph serializes") + "\n"
        }
        Format::Dot => to_dot(g, highlight),
        Format::Edgelist => format_edge_list(g),
        Format::G6 => {
            if !g.is_on_range() {
                return Err(Error::Precondition("graph6 output needs labels 1..n".into()));
            }
            format_graph6(g) + "\n"
        }
        Format::Word => return Err(Error::Precondition("a graph has no word format".into())),
    })
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn cmd_decode(word: &WordArgs, format: Option<Format>) -> Result<Outcome> {
    let w = Word::parse(&word.word)?;
    let g = decode(&w, &word.pattern)?;
    Ok(Outcome::yes(render_graph(&g, format.unwrap_or(Format::Edgelist), &[])?))
}

#[derive(Serialize)]
struct VerifyReport {
    verifies: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn report(ok: bool, reason: Option<String>) -> Outcome {
    let text = serde_json::to_string(&VerifyReport { verifies: ok, reason }).expect("report serializes") + "\n";
    Outcome { text, positive: ok }
}

fn cmd_verify(word: &OptWordArgs, graph: Option<&Path>, input: Option<&Path>) -> Result<Outcome> {
    if let Some(path) = input {
        let text = read(path)?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
        let rep = match Representation::from_json(&text) {
            Ok(rep) => rep,
            Err(Error::NotARepresentation { .. }) => return Ok(report(false, Some("word does not represent its graph".into()))),
            Err(e) => return Err(e),
        };
        if let Some(gpath) = graph {
            let g = read_graph(gpath)?;
            let labeling: BTreeMap<u32, u32> = match value.get("labeling") {
                Some(m) => serde_json::from_value(m.clone())
                    .map_err(|e| Error::parse("labeling", e.to_string()))?,
                None => identity_labeling(&g),
            };
            let target = g.relabel_with(&labeling)?;
            if target != *rep.graph() {
                return Ok(report(false, Some("labeling does not map the graph onto the represented graph".into())));
            }
        }
        return Ok(report(true, None));
    }
    let (Some(text), Some(gpath)) = (&word.word, graph) else {
        return Err(Error::Precondition("verify needs --word with --graph, or --input".into()));
    };
    let w = Word::parse(text)?;
    let g = read_graph(gpath)?;
    Ok(report(verifies(&w, &g, &word.pattern), None))
}

fn need<T>(value: Option<T>, what: &str, method: Method) -> Result<T> {
    value.ok_or_else(|| Error::Precondition(format!("--method {method} needs {what}")))
}

fn read_intervals(path: &Path) -> Result<Vec<Interval>> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Input {
        List(Vec<Interval>),
        Wrapped { intervals: Vec<Interval> },
    }
    let text = read(path)?;
    let input: Input =
        serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    Ok(match input {
        Input::List(v) | Input::Wrapped { intervals: v } => v,
    })
}

/// Result of a construction, or `None` when the input is outside the
/// method's class.
fn build(
    method: Method,
    graph: Option<&Path>,
    k: Option<usize>,
    intervals: Option<&Path>,
    words: &[String],
    vertex: Option<u32>,
) -> Result<Option<ConstructionResult>> {
    let twelve = Pattern::twelve();
    let load = || -> Result<LabeledGraph> { read_graph(need(graph, "--graph", method)?) };
    match method {
        Method::Permutation => {
            let g = load()?;
            Ok(match represent_permutation_graph(&g)? {
                Some(w) => Some(ConstructionResult::new(&g, identity_labeling(&g), w, twelve, method)?),
                None => None,
            })
        }
        Method::Ones => {
            let g = load()?;
            let k = k.unwrap_or(3);
            let w = represent_1k(&g, k)?;
            Ok(Some(ConstructionResult::new(&g, identity_labeling(&g), w, Pattern::ones(k)?, method)?))
        }
        Method::CoInterval => match intervals {
            Some(path) => {
                let iv = read_intervals(path)?;
                let (labeling, w) = represent_co_interval(&iv)?;
                let mut g = LabeledGraph::on_range(iv.len())?;
                for i in 0..iv.len() {
                    for j in i + 1..iv.len() {
                        if !iv[i].meets(&iv[j]) {
                            g.add_edge(i as u32 + 1, j as u32 + 1)?;
                        }
                    }
                }
                Ok(Some(ConstructionResult::new(&g, labeling, w, twelve, method)?))
            }
            None => represent_co_interval_graph(&load()?),
        },
        Method::DoubleCaterpillar => represent_double_caterpillar(&load()?),
        Method::Corner => represent_corner(need(k, "--k", method)?).map(Some),
        Method::SkewLadder => represent_skew_ladder(need(k, "--k", method)?).map(Some),
        Method::Ladder => represent_ladder(need(k, "--k", method)?).map(Some),
        Method::Glue => {
            let [a, b] = words else {
                return Err(Error::Precondition("--method glue needs exactly two --word values".into()));
            };
            let rep_g = Representation::of_word(Word::parse(a)?.reduce(), twelve.clone())?;
            let top = rep_g.graph().n() as u32;
            let h = Word::parse(b)?.reduce();
            let rep_h = Representation::of_word(Word::new(h.letters().iter().map(|x| x + top).collect())?, twelve)?;
            let r = glue(&rep_g, &rep_h, top, top + 1)?;
            let g = r.graph().clone();
            let (_, pattern, w) = r.into_parts();
            Ok(Some(ConstructionResult::new(&g, identity_labeling(&g), w, pattern, method)?))
        }
        Method::Copy => {
            let [a] = words else {
                return Err(Error::Precondition("--method copy needs exactly one --word".into()));
            };
            let rep = Representation::of_word(Word::parse(a)?, twelve)?;
            let r = add_copy_repr(&rep, need(vertex, "--vertex", method)?)?;
            let g = r.graph().clone();
            let (_, pattern, w) = r.into_parts();
            Ok(Some(ConstructionResult::new(&g, identity_labeling(&g), w, pattern, method)?))
        }
    }
}

fn cmd_construct(
    method: Method,
    graph: Option<&Path>,
    k: Option<usize>,
    intervals: Option<&Path>,
    words: &[String],
    vertex: Option<u32>,
    format: Option<Format>,
) -> Result<Outcome> {
    let Some(result) = build(method, graph, k, intervals, words, vertex)? else {
        let text = format!("{{\"constructed\":false,\"method\":\"{method}\"}}\n");
        return Ok(Outcome::no(text));
    };
    let rep = &result.representation;
    let text = match format.unwrap_or(Format::Word) {
        Format::Word => format!("{}\n", result.word()),
        Format::Json => result.to_json() + "\n",
        other => render_graph(rep.graph(), other, &[])?,
    };
    Ok(Outcome::yes(text))
}

fn certificate_dot(g: &LabeledGraph, cert: &Certificate) -> Result<String> {
    let shown = match &cert.labeling {
        Some(map) => g.relabel_with(map)?,
        None => g.clone(),
    };
    let highlight: Vec<u32> = cert
        .obstruction
        .as_ref()
        .map(|o| o.witness.iter().chain(&o.separator).copied().collect())
        .unwrap_or_default();
    Ok(to_dot(&shown, &highlight))
}

fn cmd_recognize(graph: &Path, search: &SearchArgs, labeled: bool, format: Option<Format>) -> Result<Outcome> {
    let g = read_graph(graph)?;
    let cert = if labeled {
        is_12_representable_labeled(&g, search.budget)?
    } else {
        is_12_representable(&g, &search.options())?
    };
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => cert.to_json() + "\n",
        Format::Dot => certificate_dot(&g, &cert)?,
        Format::Word => match cert.word() {
            Some(w) => format!("{w}\n"),
            None => format!("{}\n", serde_json::to_string(&cert.status).expect("status serializes")),
        },
        other => return Err(Error::Precondition(format!("recognize cannot print {other:?}"))),
    };
    Ok(Outcome {
        text,
        positive: cert.status == Status::Yes,
    })
}

fn cmd_obstruct(graph: &Path, format: Option<Format>) -> Result<Outcome> {
    let g = read_graph(graph)?;
    let mut found = find_obstruction_labeled(&g);
    if found.is_none() && is_tree(&g) {
        found = find_obstruction_tree(&g)?;
    }
    let Some(o) = found else {
        return Ok(Outcome::no("null\n".into()));
    };
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string(&o).expect("obstruction serializes") + "\n",
        Format::Dot => {
            let highlight: Vec<u32> = o.witness.iter().chain(&o.separator).copied().collect();
            to_dot(&g, &highlight)
        }
        other => return Err(Error::Precondition(format!("obstruct cannot print {other:?}"))),
    };
    Ok(Outcome::yes(text))
}

fn cmd_classify(graph: &Path, search: &SearchArgs, format: Option<Format>) -> Result<Outcome> {
    let g = read_graph(graph)?;
    let record = classify(&g, &search.options())?;
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => record.to_json() + "\n",
        Format::Dot => certificate_dot(&record.graph, &record.certificate)?,
        other => render_graph(&record.graph, other, &[])?,
    };
    Ok(Outcome::yes(text))
}

fn cmd_atlas(max_n: usize, search: &SearchArgs, regions: Option<&Path>) -> Result<Outcome> {
    let records = build_atlas(max_n, &search.options())?;
    let mut text = Vec::new();
    write_jsonl(&records, &mut text)?;
    if let Some(path) = regions {
        write_file(path, &regions_csv(&region_counts(&records)))?;
    }
    Ok(Outcome::yes(String::from_utf8(text).expect("JSON is UTF-8")))
}

fn cmd_gen(family: &[String], format: Option<Format>) -> Result<Outcome> {
    let f: GraphFamily = family.join(" ").parse()?;
    let g = generate(&f)?;
    Ok(Outcome::yes(render_graph(&g, format.unwrap_or(Format::Edgelist), &[])?))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<(Outcome, Option<PathBuf>)> {
    let out_of = |o: &OutArgs| o.out.clone();
    Ok(match &cli.command {
        Command::Decode { word, out } => (cmd_decode(word, out.format)?, out_of(out)),
        Command::Verify { word, graph, input } => (cmd_verify(word, graph.as_deref(), input.as_deref())?, None),
        Command::Construct {
            method,
            graph,
            k,
            intervals,
            word,
            vertex,
            out,
        } => (
            cmd_construct(*method, graph.as_deref(), *k, intervals.as_deref(), word, *vertex, out.format)?,
            out_of(out),
        ),
        Command::Recognize {
            graph,
            search,
            labeled,
            out,
        } => (cmd_recognize(graph, search, *labeled, out.format)?, out_of(out)),
        Command::Obstruct { graph, out } => (cmd_obstruct(graph, out.format)?, out_of(out)),
        Command::Classify { graph, search, out } => (cmd_classify(graph, search, out.format)?, out_of(out)),
        Command::Atlas {
            max_n,
            search,
            regions,
            out,
        } => (cmd_atlas(*max_n, search, regions.as_deref())?, out.clone()),
        Command::Gen { family, out } => (cmd_gen(family, out.format)?, out_of(out)),
    })
}

/// Runs the command line, writing results to `stdout` and diagnostics to
/// `stderr`, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((outcome, target)) => {
            let text = ensure_newline(outcome.text);
            let written = match target {
                Some(path) => write_file(&path, &text),
                None => stdout.write_all(text.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            if outcome.positive {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("wordrep").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn decode_square() {
        let (code, out, _) = run_args(&["decode", "--pattern", "11", "--word", "1 4 2 1 3 2 4 3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n=4\n1 2\n1 4\n2 3\n3 4\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = run_args(&["decode", "--word", "1 x 2"]);
        assert_eq!(code, 2);
        assert!(err.contains("`x`"), "{err}");
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["construct", "--method", "corner"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn grid_words() {
        let (code, out, _) = run_args(&["construct", "--method", "skewladder", "--k", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "3 5 1 7 2 9 11 4 9 6 13 10 15 8 10 17 12 18 14 16\n");
        let (code, out, _) = run_args(&["construct", "--method", "glue", "--word", "2 1", "--word", "2 1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "3 1 4 2\n");
        let (code, out, _) = run_args(&["construct", "--method", "copy", "--word", "2 1", "--vertex", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "3 1 2\n");
    }

    #[test]
    fn gen_formats() {
        let (code, out, _) = run_args(&["gen", "cycle", "5", "--format", "g6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "Dhc\n");
        assert_eq!(run_args(&["gen", "spider(3,3,3)"]).0, 0);
        assert_eq!(run_args(&["gen", "cycle", "2"]).0, 2);
    }
}
