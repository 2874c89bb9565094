//! graph6 and plain edge-list text formats.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(Error::precondition(format!("unknown format `{other}`"))),
        }
    }
}

/// Guesses the format: graph6 never uses ASCII digits or whitespace inside a line.
pub fn detect_format(text: &str) -> Format {
    let body = text.trim_start_matches(HEADER);
    let first = body
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.bytes().any(|b| b.is_ascii_digit() || b == b' ') => Format::EdgeList,
        Some(_) => Format::Graph6,
        None => Format::EdgeList,
    }
}

pub fn decode(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => decode_graph6(text),
        Format::EdgeList => decode_edgelist(text),
    }
}

pub fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g),
        Format::EdgeList => encode_edgelist(g),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string; an optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let col = |i: usize| offset + i + 1;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                1,
                col(i),
                format!("byte {b} outside graph6 range"),
            ));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(Error::parse(1, col(0), "empty graph6 string"));
    };
    let (n, start) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::parse(
                1,
                col(1),
                "unsupported or truncated vertex count",
            ));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "graph6 input",
            size: n,
            cap: MAX_VERTICES,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != need {
        return Err(Error::parse(
            1,
            col(start + data.len().min(need)),
            format!("expected {need} adjacency bytes, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    if let Some(&last) = data.last() {
        let pad = need * 6 - pairs;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(
                1,
                col(start + need - 1),
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Decodes every non-empty line of a graph6 file.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match decode_graph6(line) {
            Ok(g) => out.push(g),
            Err(Error::Parse {
                column, message, ..
            }) => return Err(Error::parse(i + 1, column, message)),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Writes the vertex count on the first line, then one `u v` line per edge.
pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses `u v` lines. Blank lines and lines starting with `#` are skipped.
/// A leading line holding a single integer fixes the vertex count; without
/// it the count is one more than the largest index mentioned.
pub fn decode_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (ln, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = Vec::new();
        let mut pos = 0;
        for tok in line.split_whitespace() {
            let at = line[pos..].find(tok).unwrap() + pos;
            pos = at + tok.len();
            let v: usize = tok.parse().map_err(|_| {
                Error::parse(ln + 1, at + 1, format!("`{tok}` is not a vertex index"))
            })?;
            fields.push((v, at + 1));
        }
        match fields.as_slice() {
            [(n, _)] if !seen_content => declared = Some(*n),
            [(u, cu), (v, _)] => {
                if u == v {
                    return Err(Error::parse(ln + 1, *cu, format!("loop at vertex {u}")));
                }
                edges.push((*u, *v, ln + 1, *cu));
            }
            _ => {
                return Err(Error::parse(
                    ln + 1,
                    fields.first().map(|f| f.1).unwrap_or(1),
                    "expected `u v`",
                ))
            }
        }
        seen_content = true;
    }
    let inferred = edges.iter().map(|e| e.0.max(e.1) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(inferred);
    if n > MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "edge list",
            size: n,
            cap: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty(n);
    for (u, v, line, column) in edges {
        if u.max(v) >= n {
            return Err(Error::parse(
                line,
                column,
                format!("vertex out of range for n = {n}"),
            ));
        }
        g.set_edge(u, v, true);
    }
    Ok(g)
}
