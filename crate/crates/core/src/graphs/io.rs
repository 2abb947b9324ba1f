//! Text formats: edge lists, graph6 and DOT.
//!
//! Edge-list files start with a header `n=<count>`, may follow it with
//! `labels=<l1> <l2> ...` (default `1..=n`), and then hold one `u v` pair per
//! line. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::LabeledGraph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .peekable();
    let header = lines.next().ok_or_else(|| Error::parse("", "missing `n=<count>` header"))?;
    let count = header
        .strip_prefix("n=")
        .ok_or_else(|| Error::parse(header, "expected `n=<count>` header"))?
        .trim();
    let n: usize = count
        .parse()
        .map_err(|_| Error::parse(count, "vertex count is not a nonnegative integer"))?;
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    if let Some(rest) = lines.peek().and_then(|l| l.strip_prefix("labels=")) {
        labels = rest
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse_label)
            .collect::<Result<_>>()?;
        if labels.len() != n {
            return Err(Error::parse(rest, format!("expected {n} labels")));
        }
        lines.next();
    }
    let mut g = LabeledGraph::empty(labels.iter().copied())?;
    if g.n() != n {
        return Err(Error::parse(header, "labels are not distinct"));
    }
    for line in lines {
        let toks: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, "expected an edge `u v`"));
        }
        let u = parse_label(toks[0])?;
        let v = parse_label(toks[1])?;
        for (tok, x) in [(toks[0], u), (toks[1], v)] {
            if !g.contains(x) {
                return Err(Error::parse(tok, "not a vertex label"));
            }
        }
        if u == v {
            return Err(Error::parse(line, "self-loops are not allowed"));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

fn parse_label(tok: &str) -> Result<u32> {
    match tok.parse::<u32>() {
        Ok(0) => Err(Error::parse(tok, "labels must be positive")),
        Ok(x) => Ok(x),
        Err(_) => Err(Error::parse(tok, "not a positive integer")),
    }
}

pub fn format_edge_list(g: &LabeledGraph) -> String {
    let mut s = format!("n={}\n", g.n());
    if !g.is_on_range() {
        let labels: Vec<String> = g.labels().iter().map(u32::to_string).collect();
        let _ = writeln!(s, "labels={}", labels.join(" "));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Decodes one graph6 line. Vertex `i` of the file becomes label `i + 1`.
pub fn parse_graph6(line: &str) -> Result<LabeledGraph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} is outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::Graph6("vertex count too large".into()));
    };
    if n > super::MAX_VERTICES {
        return Err(Error::too_large("graph size", n, super::MAX_VERTICES));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = LabeledGraph::on_range(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i as u32 + 1, j as u32 + 1)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` in graph6, vertices in label order.
pub fn format_graph6(g: &LabeledGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent_idx(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads a graph from a file body, choosing the format by extension
/// (`.g6` / `.graph6` for graph6, anything else an edge list).
pub fn parse_graph_file(name: &str, text: &str) -> Result<LabeledGraph> {
    let lower = name.to_ascii_lowercase();
    if lower.ends_with(".g6") || lower.ends_with(".graph6") {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::Graph6("empty file".into()))?;
        parse_graph6(line)
    } else {
        parse_edge_list(text)
    }
}

/// DOT rendering; vertices in `highlight` are filled red.
pub fn to_dot(g: &LabeledGraph, highlight: &[u32]) -> String {
    let mut s = String::from("graph G {\n");
    for &v in g.labels() {
        if highlight.contains(&v) {
            let _ = writeln!(s, "  {v} [style=filled, fillcolor=red];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if highlight.contains(&u) && highlight.contains(&v) {
            let _ = writeln!(s, "  {u} -- {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(s, "  {u} -- {v};");
        }
    }
    s.push_str("}\n");
    s
}
