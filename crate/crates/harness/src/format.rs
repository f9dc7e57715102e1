//! Line-based text formats for families, graphs, path families and rainbow
//! assignments.
//!
//! Every format starts with `vertices <N>`. Lines whose first non-blank
//! character is `#` are comments; blank lines are ignored. Edges are written
//! `u-v`; the parsers accept either endpoint order and the serializers always
//! write the smaller endpoint first.
//!
//! ```text
//! vertices 4
//! matching 0: 0-1 2-3
//! matching 1: 1-2 0-3
//! ```

use std::fmt::Write as _;

use rainbow_core::rainbow::ColoredPathFamily;
use rainbow_core::{AlternatingPath, ColoredFamily, Edge, Graph, Matching, RainbowMatching};

/// A parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

type Result<T> = std::result::Result<T, ParseError>;

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

/// Content lines as (line number, text), comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim_start();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

fn parse_number(line: usize, column: usize, tok: &str, what: &str) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return err(line, column, format!("expected {what}, found {tok:?}"));
    }
    tok.parse()
        .or_else(|_| err(line, column, format!("{what} {tok} is too large")))
}

fn parse_edge(line: usize, column: usize, tok: &str, vertex_count: usize) -> Result<Edge> {
    let Some((a, b)) = tok.split_once('-') else {
        return err(
            line,
            column,
            format!("malformed edge {tok:?}, expected u-v"),
        );
    };
    let u = parse_number(line, column, a, "vertex")?;
    let v = parse_number(line, column + a.len() + 1, b, "vertex")?;
    for (w, col) in [(u, column), (v, column + a.len() + 1)] {
        if w >= vertex_count {
            return err(
                line,
                col,
                format!("vertex {w} out of range for {vertex_count} vertices"),
            );
        }
    }
    Edge::new(u, v).or_else(|_| err(line, column, format!("self-loop at vertex {u}")))
}

/// Parses the space-separated edges of `text`, which sits at `offset` (0-based)
/// within line `line`.
fn parse_edges(
    line: usize,
    offset: usize,
    text: &str,
    vertex_count: usize,
) -> Result<Vec<(usize, Edge)>> {
    tokens(text)
        .into_iter()
        .map(|(col, tok)| {
            Ok((
                offset + col,
                parse_edge(line, offset + col, tok, vertex_count)?,
            ))
        })
        .collect()
}

fn parse_matching(line: usize, offset: usize, text: &str, vertex_count: usize) -> Result<Matching> {
    let mut m = Matching::new();
    for (col, e) in parse_edges(line, offset, text, vertex_count)? {
        if m.contains(e) {
            return err(line, col, format!("duplicate edge {e}"));
        }
        if let Some(&other) = m.edges().iter().find(|o| o.touches(e)) {
            return err(line, col, format!("edge {e} overlaps {other}"));
        }
        m.insert(e).expect("checked above");
    }
    Ok(m)
}

/// Parses `vertices <N>` from the first content line.
fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let Some((line, text)) = lines.next() else {
        return err(1, 1, "empty input, expected \"vertices <N>\"");
    };
    match tokens(text).as_slice() {
        [(_, "vertices"), (col, n)] => parse_number(line, *col, n, "vertex count"),
        [(col, _), ..] => err(line, *col, "expected \"vertices <N>\""),
        [] => unreachable!("content lines are non-blank"),
    }
}

/// Splits `"<keyword> <id>: rest"`, returning the id, its column and the
/// 0-based byte offset of `rest`.
fn parse_labelled<'a>(
    line: usize,
    text: &'a str,
    keyword: &str,
) -> Result<(usize, &'a str, usize)> {
    let lead = text.len() - text.trim_start().len();
    let body = &text[lead..];
    let Some(rest) = body
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(char::is_whitespace))
    else {
        return err(line, lead + 1, format!("expected \"{keyword} <id>: ...\""));
    };
    let Some(colon) = rest.find(':') else {
        return err(line, lead + 1, "missing ':'");
    };
    let id_text = rest[..colon].trim();
    let id_col = lead + keyword.len() + (rest.len() - rest.trim_start().len()) + 1;
    let id = parse_number(line, id_col, id_text, "index")?;
    let after = lead + keyword.len() + colon + 1;
    Ok((id, &text[after..], after))
}

pub fn parse_family(text: &str) -> Result<ColoredFamily> {
    let mut lines = content_lines(text);
    let vertex_count = parse_header(&mut lines)?;
    let mut matchings = Vec::new();
    for (line, l) in lines {
        let (id, rest, offset) = parse_labelled(line, l, "matching")?;
        if id != matchings.len() {
            return err(
                line,
                1,
                format!("matching {id} out of order, expected {}", matchings.len()),
            );
        }
        matchings.push(parse_matching(line, offset, rest, vertex_count)?);
    }
    Ok(ColoredFamily::new(vertex_count, matchings).expect("edges range-checked while parsing"))
}

fn write_edges<'a>(out: &mut String, edges: impl IntoIterator<Item = &'a Edge>) {
    for e in edges {
        write!(out, " {}-{}", e.lo(), e.hi()).unwrap();
    }
}

pub fn serialize_family(family: &ColoredFamily) -> String {
    let mut out = format!("vertices {}\n", family.vertex_count());
    for (i, m) in family.matchings().iter().enumerate() {
        write!(out, "matching {i}:").unwrap();
        write_edges(&mut out, m.edges());
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let vertex_count = parse_header(&mut lines)?;
    let mut g = Graph::new(vertex_count);
    for (line, l) in lines {
        let lead = l.len() - l.trim_start().len();
        let Some(rest) = l[lead..].strip_prefix("edges:") else {
            return err(line, lead + 1, "expected \"edges: u-v ...\"");
        };
        let offset = lead + "edges:".len();
        for (col, e) in parse_edges(line, offset, rest, vertex_count)? {
            if g.add_edge(e).is_err() {
                return err(line, col, format!("duplicate edge {e}"));
            }
        }
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("vertices {}\nedges:", g.vertex_count());
    write_edges(&mut out, g.edges());
    out.push('\n');
    out
}

/// A bare edge list such as `"0-1 2-3"`, as given on the command line.
pub fn parse_edge_list(text: &str, vertex_count: usize) -> Result<Vec<Edge>> {
    Ok(parse_edges(1, 0, text, vertex_count)?
        .into_iter()
        .map(|(_, e)| e)
        .collect())
}

/// Like [`parse_edge_list`] but the edges must form a matching.
pub fn parse_matching_list(text: &str, vertex_count: usize) -> Result<Matching> {
    parse_matching(1, 0, text, vertex_count)
}

/// Path families: the matching on a `base:` line, then one `K`-first path per
/// color as a vertex sequence.
///
/// ```text
/// vertices 6
/// base: 1-2 3-4
/// path 0: 0 1 2 3 4 5
/// ```
pub fn parse_path_family(text: &str) -> Result<ColoredPathFamily> {
    let mut lines = content_lines(text);
    let vertex_count = parse_header(&mut lines)?;
    let Some((line, l)) = lines.next() else {
        return err(2, 1, "missing \"base: ...\" line");
    };
    let lead = l.len() - l.trim_start().len();
    let Some(rest) = l[lead..].strip_prefix("base:") else {
        return err(line, lead + 1, "expected \"base: u-v ...\"");
    };
    let base = parse_matching(line, lead + "base:".len(), rest, vertex_count)?;
    let mut fam =
        ColoredPathFamily::new(vertex_count, base).expect("edges range-checked while parsing");
    for (line, l) in lines {
        let (color, rest, offset) = parse_labelled(line, l, "path")?;
        let mut vertices = Vec::new();
        for (col, tok) in tokens(rest) {
            let v = parse_number(line, offset + col, tok, "vertex")?;
            if v >= vertex_count {
                return err(
                    line,
                    offset + col,
                    format!("vertex {v} out of range for {vertex_count} vertices"),
                );
            }
            vertices.push(v);
        }
        let path =
            AlternatingPath::k_first(vertices).or_else(|e| err(line, offset + 1, e.to_string()))?;
        fam.push(color, path)
            .or_else(|e| err(line, 1, e.to_string()))?;
    }
    Ok(fam)
}

pub fn serialize_path_family(fam: &ColoredPathFamily) -> String {
    let mut out = format!("vertices {}\nbase:", fam.vertex_count());
    write_edges(&mut out, fam.f().edges());
    out.push('\n');
    for (color, p) in fam.paths() {
        write!(out, "path {color}:").unwrap();
        for v in p.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Rainbow assignments, one `<color>: u-v` line per edge. Range checks are
/// left to the verifier, which knows the family.
pub fn parse_assignment(text: &str) -> Result<RainbowMatching> {
    let mut pairs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line, l) in content_lines(text) {
        let lead = l.len() - l.trim_start().len();
        let Some(colon) = l.find(':') else {
            return err(line, lead + 1, "expected \"<color>: u-v\"");
        };
        let color = parse_number(line, lead + 1, l[..colon].trim(), "color")?;
        if !seen.insert(color) {
            return err(line, lead + 1, format!("color {color} assigned twice"));
        }
        let edges = parse_edges(line, colon + 1, &l[colon + 1..], usize::MAX)?;
        match edges.as_slice() {
            [(_, e)] => pairs.push((color, *e)),
            _ => return err(line, colon + 2, "expected exactly one edge"),
        }
    }
    Ok(RainbowMatching::from_assignment(pairs))
}

pub fn serialize_assignment(rm: &RainbowMatching) -> String {
    let mut out = String::new();
    for (color, e) in rm.assignment() {
        writeln!(out, "{color}: {}-{}", e.lo(), e.hi()).unwrap();
    }
    out
}
