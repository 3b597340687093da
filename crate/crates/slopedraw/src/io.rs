//! Reading graphs, writing and reading drawings, SVG output and the girth
//! table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::coords::{ExactCoord, Point};
use crate::drawing::Drawing;
use crate::graph::{supercycle_bound_table, Graph, GraphError, VertexId};
use crate::slope::{parse_rat, Slope, SlopeSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("vertex {0} has degree greater than three")]
    DegreeViolation(VertexId),
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn build(n: usize, edges: &[(VertexId, VertexId)], line: usize) -> Result<Graph, ParseError> {
    Graph::new(n, edges).map_err(|e| match e {
        GraphError::DegreeViolation(v) => ParseError::DegreeViolation(v),
        source => ParseError::Graph { line, source },
    })
}

/// Lines with comments stripped, numbered from 1, blank ones skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// `n m` on the first line, then `m` lines `u v` with 0-based ids.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let nums = |l: usize, s: &str| -> Result<(usize, usize), ParseError> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(syntax(l, format!("expected two integers, got {s:?}")));
        }
        let a = parts[0].parse().map_err(|_| syntax(l, format!("bad integer {:?}", parts[0])))?;
        let b = parts[1].parse().map_err(|_| syntax(l, format!("bad integer {:?}", parts[1])))?;
        Ok((a, b))
    };
    let (n, m) = nums(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (l, s) in lines {
        let (u, v) = nums(l, s)?;
        if u >= n || v >= n {
            return Err(syntax(l, format!("vertex out of range 0..{n}")));
        }
        edges.push((u, v));
        last = l;
        if let Err(e) = build(n, &edges, l) {
            return Err(e);
        }
    }
    if edges.len() != m {
        return Err(syntax(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    build(n, &edges, last)
}

/// Decodes one graph6 string (optional `>>graph6<<` header).
pub fn parse_graph6(s: &str) -> Result<Graph, ParseError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(syntax(1, "not a graph6 string"));
    }
    let (n, rest) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(syntax(1, "graph6 strings above 258047 vertices are not supported"));
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != need {
        return Err(syntax(1, format!("graph6 body has {} bytes, expected {need}", rest.len())));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    build(n, &edges, 1)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Edge list when the first content line holds two integers, graph6
/// otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = content_lines(text).next();
    match first {
        Some((_, l)) if l.split_whitespace().count() == 2 => parse_edge_list(text),
        Some((_, l)) => parse_graph6(l),
        None => Err(syntax(1, "empty input")),
    }
}

/// One graph6 string per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    content_lines(text)
        .map(|(l, s)| {
            parse_graph6(s).map_err(|e| match e {
                ParseError::Syntax { msg, .. } => syntax(l, msg),
                ParseError::Graph { source, .. } => ParseError::Graph { line: l, source },
                other => other,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed drawing JSON: {0}")]
pub struct JsonError(pub String);

fn coord_to_json(c: &ExactCoord) -> Value {
    let map: Map<String, Value> =
        c.terms().iter().map(|(i, r)| (i.to_string(), Value::String(r.to_string()))).collect();
    Value::Object(map)
}

fn coord_from_json(v: &Value) -> Result<ExactCoord, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError("coordinate must be an object".into()))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, r) in obj {
        let idx: u32 = k.parse().map_err(|_| JsonError(format!("bad basis index {k:?}")))?;
        let r = r.as_str().ok_or_else(|| JsonError("coefficient must be a string".into()))?;
        terms.push((idx, parse_rat(r).map_err(JsonError)?));
    }
    Ok(ExactCoord::from_terms(terms))
}

/// The drawing in the exchange format. `mode` is `basic` or `four`.
pub fn drawing_to_json(g: &Graph, d: &Drawing, mode: &str) -> Value {
    let vertices: Vec<Value> = d
        .points
        .iter()
        .enumerate()
        .map(|(id, p)| {
            let (fx, fy) = p.approx();
            json!({"id": id, "x": coord_to_json(&p.x), "y": coord_to_json(&p.y), "approx": [fx, fy]})
        })
        .collect();
    let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([u, v])).collect();
    let slopes: Vec<Value> = d.slopes.iter().map(|s| Value::String(s.to_string())).collect();
    json!({"vertices": vertices, "edges": edges, "slopes": slopes, "mode": mode})
}

/// Inverse of [`drawing_to_json`]; `approx` is ignored.
pub fn drawing_from_json(v: &Value) -> Result<(Graph, Drawing, String), JsonError> {
    let field = |k: &str| v.get(k).ok_or_else(|| JsonError(format!("missing field {k:?}")));
    let vs = field("vertices")?.as_array().ok_or_else(|| JsonError("vertices must be a list".into()))?;
    let mut points: BTreeMap<usize, Point> = BTreeMap::new();
    for vert in vs {
        let id = vert
            .get("id")
            .and_then(Value::as_u64)
            .ok_or_else(|| JsonError("vertex without integer id".into()))? as usize;
        let x = coord_from_json(vert.get("x").unwrap_or(&Value::Null))?;
        let y = coord_from_json(vert.get("y").unwrap_or(&Value::Null))?;
        if points.insert(id, Point::new(x, y)).is_some() {
            return Err(JsonError(format!("vertex {id} listed twice")));
        }
    }
    let n = points.len();
    if points.keys().copied().ne(0..n) {
        return Err(JsonError("vertex ids must be 0..n".into()));
    }
    let mut edges = Vec::new();
    for e in field("edges")?.as_array().ok_or_else(|| JsonError("edges must be a list".into()))? {
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .and_then(|a| Some((a[0].as_u64()? as usize, a[1].as_u64()? as usize)))
            .ok_or_else(|| JsonError("edge must be a pair of ids".into()))?;
        edges.push(pair);
    }
    let g = Graph::new(n, &edges).map_err(|e| JsonError(e.to_string()))?;
    let mut slopes = Vec::new();
    for s in field("slopes")?.as_array().ok_or_else(|| JsonError("slopes must be a list".into()))? {
        let s = s.as_str().ok_or_else(|| JsonError("slope must be a string".into()))?;
        slopes.push(s.parse::<Slope>().map_err(JsonError)?);
    }
    let mode = field("mode")?.as_str().ok_or_else(|| JsonError("mode must be a string".into()))?;
    Ok((g, Drawing::new(points.into_values().collect(), SlopeSet::new(slopes)), mode.to_string()))
}

const SVG_SIZE: f64 = 1024.0;
const SVG_MARGIN: f64 = 48.0;
const SLOPE_COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const SLOPE_DASHES: [&str; 6] = ["none", "12 6", "4 4", "16 4 4 4", "2 6", "8 8"];

/// Renders the approximate coordinates, one stroke style per slope.
pub fn render_svg(g: &Graph, d: &Drawing) -> String {
    let pts: Vec<(f64, f64)> = d.points.iter().map(Point::approx).collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        lo_x = lo_x.min(x);
        hi_x = hi_x.max(x);
        lo_y = lo_y.min(y);
        hi_y = hi_y.max(y);
    }
    let extent = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
    let k = (SVG_SIZE - 2.0 * SVG_MARGIN) / extent;
    let map = |(x, y): (f64, f64)| (SVG_MARGIN + (x - lo_x) * k, SVG_SIZE - SVG_MARGIN - (y - lo_y) * k);
    let style_of = |u: usize, v: usize| {
        crate::slope::slope_of(&d.points[u], &d.points[v])
            .and_then(|s| d.slopes.iter().position(|t| *t == s))
            .unwrap_or(SLOPE_COLORS.len() - 1)
            .min(SLOPE_COLORS.len() - 1)
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {s} {s}" width="{s}" height="{s}">"#,
        s = SVG_SIZE
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for &(u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (map(pts[u]), map(pts[v]));
        let i = style_of(u, v);
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}" stroke-width="3" stroke-dasharray="{}"/>"#,
            SLOPE_COLORS[i], SLOPE_DASHES[i]
        );
    }
    for (id, &p) in pts.iter().enumerate() {
        let (x, y) = map(p);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="7" fill="black"><title>{id}</title></circle>"#);
    }
    out.push_str("</svg>\n");
    out
}

/// The girth table for even `N = 6, 8, …, max`, five rows per line
/// except the last, with a comma closing every full line.
pub fn fmax_table(max: usize) -> String {
    let rows: Vec<String> = (6..=max)
        .step_by(2)
        .map(|n| {
            let (a, b, c, d) = supercycle_bound_table(n);
            format!("[{a},{b},{c},{d}]")
        })
        .collect();
    let mut out = String::new();
    for (i, chunk) in rows.chunks(5).enumerate() {
        let last = (i + 1) * 5 >= rows.len();
        out.push_str(&chunk.join(", "));
        out.push_str(if last { "\n" } else { ",\n" });
    }
    out
}
