//! DIMACS-style text formats for graphs (`.gr`) and certificates (`.cert`).
//!
//! Graph files:
//!
//! ```text
//! c comment
//! p sp <n> <m>
//! s <source>
//! a <tail> <head> <weight>
//! ```
//!
//! Certificate files:
//!
//! ```text
//! p cert <n>
//! d <vertex> <value|inf>
//! ```
//!
//! Vertices are one-based on disk and zero-based in memory. Blank lines are
//! ignored. Writers emit the canonical form: no comments, single spaces, `\n`.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::dist::{Certificate, Dist, MAX_LABEL};
use crate::graph::{Arc, Graph, VertexId, MAX_WEIGHT};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    /// Zero-based source declared by an `s` line, if any.
    pub source: Option<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    MissingHeader,
    DuplicateHeader,
    HeaderMismatch { expected: usize, found: usize },
    CountMismatch { declared: usize, found: usize },
    VertexOutOfRange(u64),
    WeightOutOfRange(String),
    CertOutOfRange(String),
    MissingVertex(usize),
    DuplicateVertex(usize),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::MissingHeader => f.write_str("missing `p` header line"),
            ParseErrorKind::DuplicateHeader => f.write_str("duplicate header line"),
            ParseErrorKind::HeaderMismatch { expected, found } => {
                write!(f, "header declares {found} vertices, expected {expected}")
            }
            ParseErrorKind::CountMismatch { declared, found } => {
                write!(f, "header declares {declared} arcs, found {found}")
            }
            ParseErrorKind::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            ParseErrorKind::WeightOutOfRange(w) => write!(f, "weight {w} exceeds 2^31"),
            ParseErrorKind::CertOutOfRange(v) => write!(f, "label {v} exceeds 2^62"),
            ParseErrorKind::MissingVertex(v) => write!(f, "no label for vertex {v}"),
            ParseErrorKind::DuplicateVertex(v) => write!(f, "vertex {v} labelled twice"),
        }
    }
}

/// A parse failure at a one-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

/// Non-blank, non-comment lines as (one-based line number, tokens).
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty() && t[0] != "c")
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn parse_count(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().or_else(|_| syntax(line, format!("bad {what} `{tok}`")))
}

/// One-based vertex token to a zero-based id.
fn parse_vertex(line: usize, tok: &str, n: usize) -> Result<VertexId, ParseError> {
    let v = tok.parse::<u64>().or_else(|_| syntax(line, format!("bad vertex `{tok}`")))?;
    if v == 0 || v > n as u64 {
        return err(line, ParseErrorKind::VertexOutOfRange(v));
    }
    Ok(v as usize - 1)
}

/// Signed decimal checked against `bound`; out-of-range digits map to `out_of_range`.
fn parse_bounded(
    line: usize,
    tok: &str,
    bound: i64,
    out_of_range: fn(String) -> ParseErrorKind,
) -> Result<i64, ParseError> {
    let digits = tok.strip_prefix(['-', '+']).unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return syntax(line, format!("bad integer `{tok}`"));
    }
    match tok.parse::<i64>() {
        Ok(v) if v.unsigned_abs() <= bound as u64 => Ok(v),
        _ => err(line, out_of_range(tok.to_string())),
    }
}

pub fn parse_gr(text: &str) -> Result<GraphDocument, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut source: Option<VertexId> = None;
    let mut arcs: Vec<Arc> = Vec::new();

    for (line, t) in records(text) {
        match t[0] {
            "p" => {
                if header.is_some() {
                    return err(line, ParseErrorKind::DuplicateHeader);
                }
                if t.len() != 4 || t[1] != "sp" {
                    return syntax(line, "expected `p sp <n> <m>`");
                }
                let n = parse_count(line, t[2], "vertex count")?;
                let m = parse_count(line, t[3], "arc count")?;
                if n > u32::MAX as usize {
                    return syntax(line, format!("vertex count {n} too large"));
                }
                header = Some((n, m));
            }
            "s" => {
                let Some((n, _)) = header else { return err(line, ParseErrorKind::MissingHeader) };
                if source.is_some() {
                    return err(line, ParseErrorKind::DuplicateHeader);
                }
                if t.len() != 2 {
                    return syntax(line, "expected `s <v>`");
                }
                source = Some(parse_vertex(line, t[1], n)?);
            }
            "a" => {
                let Some((n, m)) = header else { return err(line, ParseErrorKind::MissingHeader) };
                if t.len() != 4 {
                    return syntax(line, "expected `a <u> <v> <w>`");
                }
                let tail = parse_vertex(line, t[1], n)?;
                let head = parse_vertex(line, t[2], n)?;
                let weight = parse_bounded(line, t[3], MAX_WEIGHT, ParseErrorKind::WeightOutOfRange)?;
                if arcs.len() == m {
                    return err(line, ParseErrorKind::CountMismatch { declared: m, found: m + 1 });
                }
                arcs.push(Arc { tail, head, weight });
            }
            other => return syntax(line, format!("unknown line type `{other}`")),
        }
    }

    let end = last_line(text);
    let Some((n, m)) = header else { return err(end, ParseErrorKind::MissingHeader) };
    if arcs.len() != m {
        return err(end, ParseErrorKind::CountMismatch { declared: m, found: arcs.len() });
    }
    let graph = Graph::new(n, arcs).expect("arcs validated while parsing");
    Ok(GraphDocument { graph, source })
}

pub fn write_gr(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let mut out = String::with_capacity(16 + 24 * g.m());
    writeln!(out, "p sp {} {}", g.n(), g.m()).unwrap();
    if let Some(s) = doc.source {
        writeln!(out, "s {}", s + 1).unwrap();
    }
    for a in g.arcs() {
        writeln!(out, "a {} {} {}", a.tail + 1, a.head + 1, a.weight).unwrap();
    }
    out
}

/// Parses a certificate, requiring the header to declare exactly `n` vertices.
pub fn parse_cert(text: &str, n: usize) -> Result<Certificate, ParseError> {
    parse_cert_inner(text, Some(n))
}

/// Parses a certificate of whatever length its header declares.
pub fn parse_cert_any(text: &str) -> Result<Certificate, ParseError> {
    parse_cert_inner(text, None)
}

fn parse_cert_inner(text: &str, expected: Option<usize>) -> Result<Certificate, ParseError> {
    let mut labels: Option<Vec<Option<Dist>>> = None;

    for (line, t) in records(text) {
        match t[0] {
            "p" => {
                if labels.is_some() {
                    return err(line, ParseErrorKind::DuplicateHeader);
                }
                if t.len() != 3 || t[1] != "cert" {
                    return syntax(line, "expected `p cert <n>`");
                }
                let n = parse_count(line, t[2], "vertex count")?;
                if let Some(expected) = expected {
                    if n != expected {
                        return err(line, ParseErrorKind::HeaderMismatch { expected, found: n });
                    }
                }
                if n > u32::MAX as usize {
                    return syntax(line, format!("vertex count {n} too large"));
                }
                labels = Some(vec![None; n]);
            }
            "d" => {
                let Some(slots) = labels.as_mut() else {
                    return err(line, ParseErrorKind::MissingHeader);
                };
                if t.len() != 3 {
                    return syntax(line, "expected `d <v> <value>`");
                }
                let v = parse_vertex(line, t[1], slots.len())?;
                let d = if t[2] == "inf" {
                    Dist::Infinity
                } else {
                    Dist::Finite(parse_bounded(line, t[2], MAX_LABEL, ParseErrorKind::CertOutOfRange)?)
                };
                if slots[v].replace(d).is_some() {
                    return err(line, ParseErrorKind::DuplicateVertex(v + 1));
                }
            }
            other => return syntax(line, format!("unknown line type `{other}`")),
        }
    }

    let end = last_line(text);
    let Some(slots) = labels else { return err(end, ParseErrorKind::MissingHeader) };
    let mut out = Vec::with_capacity(slots.len());
    for (v, d) in slots.into_iter().enumerate() {
        match d {
            Some(d) => out.push(d),
            None => return err(end, ParseErrorKind::MissingVertex(v + 1)),
        }
    }
    Ok(Certificate::new(out).expect("labels bounded while parsing"))
}

pub fn write_cert(cert: &Certificate) -> String {
    let mut out = String::with_capacity(16 + 16 * cert.len());
    writeln!(out, "p cert {}", cert.len()).unwrap();
    for (v, d) in cert.labels().iter().enumerate() {
        writeln!(out, "d {} {}", v + 1, d).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cert, g1};

    fn kind<T: fmt::Debug>(r: Result<T, ParseError>) -> ParseErrorKind {
        r.unwrap_err().kind
    }

    #[test]
    fn parses_minimal_graph() {
        let doc = parse_gr("p sp 2 1\na 1 2 -7\n").unwrap();
        assert_eq!(doc.graph, Graph::new(2, [(0, 1, -7)]).unwrap());
        assert_eq!(doc.source, None);
    }

    #[test]
    fn comment_and_source() {
        let doc = parse_gr("c x\np sp 1 0\ns 1\n").unwrap();
        assert_eq!(doc.graph.n(), 1);
        assert_eq!(doc.source, Some(0));
        // no trailing newline, blank lines, tabs
        let doc = parse_gr("p sp 2 1\n\n  a\t1 2 +3").unwrap();
        assert_eq!(doc.graph.arcs()[0].weight, 3);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(
            parse_gr("p sp 2 2\na 1 2 3\n").unwrap_err(),
            ParseError { line: 2, kind: ParseErrorKind::CountMismatch { declared: 2, found: 1 } }
        );
        assert_eq!(
            parse_gr("p sp 2 0\na 1 2 3\n").unwrap_err(),
            ParseError { line: 2, kind: ParseErrorKind::CountMismatch { declared: 0, found: 1 } }
        );
        assert_eq!(kind(parse_gr("p sp 2 0\np sp 2 0\n")), ParseErrorKind::DuplicateHeader);
        assert_eq!(kind(parse_gr("p sp 2 0\ns 1\ns 2\n")), ParseErrorKind::DuplicateHeader);
        assert_eq!(kind(parse_gr("a 1 2 3\n")), ParseErrorKind::MissingHeader);
        assert_eq!(kind(parse_gr("")), ParseErrorKind::MissingHeader);
        assert_eq!(kind(parse_gr("p sp 2 1\na 1 3 0\n")), ParseErrorKind::VertexOutOfRange(3));
        assert_eq!(kind(parse_gr("p sp 2 1\na 0 1 0\n")), ParseErrorKind::VertexOutOfRange(0));
        assert_eq!(kind(parse_gr("p sp 2 0\ns 5\n")), ParseErrorKind::VertexOutOfRange(5));
        assert_eq!(
            kind(parse_gr("p sp 2 1\na 1 2 2147483649\n")),
            ParseErrorKind::WeightOutOfRange("2147483649".into())
        );
        assert!(parse_gr("p sp 2 1\na 1 2 -2147483648\n").is_ok());
        assert!(matches!(kind(parse_gr("p sp 2 1\na 1 2 x\n")), ParseErrorKind::Syntax(_)));
        assert!(matches!(kind(parse_gr("p sp 2 1\na 1 2\n")), ParseErrorKind::Syntax(_)));
        assert!(matches!(kind(parse_gr("p max 2 1\n")), ParseErrorKind::Syntax(_)));
        assert!(matches!(kind(parse_gr("p sp -1 0\n")), ParseErrorKind::Syntax(_)));
        assert!(matches!(kind(parse_gr("p sp 1 0\nq\n")), ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn writes_canonical_graph() {
        let doc = GraphDocument { graph: Graph::new(2, [(0, 1, -7)]).unwrap(), source: None };
        assert_eq!(write_gr(&doc), "p sp 2 1\na 1 2 -7\n");
        let single = GraphDocument { graph: Graph::new(1, Vec::<Arc>::new()).unwrap(), source: None };
        assert_eq!(write_gr(&single), "p sp 1 0\n");
        let with_s = GraphDocument { graph: g1(), source: Some(0) };
        let text = write_gr(&with_s);
        assert_eq!(text, "p sp 4 5\ns 1\na 1 2 5\na 1 3 2\na 3 2 -4\na 2 4 1\na 3 4 10\n");
        assert_eq!(parse_gr(&text).unwrap(), with_s);
    }

    #[test]
    fn write_after_parse_canonicalizes() {
        let messy = "c hello\n\np   sp 2 1\ns 2\nc mid\na 1  2\t+4";
        let once = write_gr(&parse_gr(messy).unwrap());
        assert_eq!(once, "p sp 2 1\ns 2\na 1 2 4\n");
        assert_eq!(write_gr(&parse_gr(&once).unwrap()), once);
    }

    #[test]
    fn parses_certificates() {
        let c = parse_cert("p cert 2\nd 1 0\nd 2 inf\n", 2).unwrap();
        assert_eq!(c.labels(), &[Dist::ZERO, Dist::Infinity]);
        let c = parse_cert("c any order\np cert 2\nd 2 -5\nd 1 0", 2).unwrap();
        assert_eq!(c, cert(&[0, -5]));
        assert_eq!(parse_cert_any("p cert 1\nd 1 3\n").unwrap(), cert(&[3]));
    }

    #[test]
    fn certificate_errors() {
        assert_eq!(
            parse_cert("p cert 2\nd 1 0\nd 1 0\n", 2).unwrap_err(),
            ParseError { line: 3, kind: ParseErrorKind::DuplicateVertex(1) }
        );
        assert_eq!(
            kind(parse_cert("p cert 1\nd 1 4611686018427387905\n", 1)),
            ParseErrorKind::CertOutOfRange("4611686018427387905".into())
        );
        assert!(parse_cert("p cert 1\nd 1 -4611686018427387904\n", 1).is_ok());
        assert_eq!(
            kind(parse_cert("p cert 1\nd 1 99999999999999999999999\n", 1)),
            ParseErrorKind::CertOutOfRange("99999999999999999999999".into())
        );
        assert_eq!(
            kind(parse_cert("p cert 2\nd 1 0\n", 3)),
            ParseErrorKind::HeaderMismatch { expected: 3, found: 2 }
        );
        assert_eq!(kind(parse_cert("p cert 2\nd 1 0\n", 2)), ParseErrorKind::MissingVertex(2));
        assert_eq!(kind(parse_cert("p cert 2\nd 3 0\n", 2)), ParseErrorKind::VertexOutOfRange(3));
        assert_eq!(kind(parse_cert("d 1 0\n", 1)), ParseErrorKind::MissingHeader);
        assert!(matches!(kind(parse_cert("p cert 1\nd 1 Inf\n", 1)), ParseErrorKind::Syntax(_)));
        assert!(matches!(kind(parse_cert("p cert 1\nd 1 - \n", 1)), ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn writes_certificates() {
        assert_eq!(write_cert(&cert(&[0, -2])), "p cert 2\nd 1 0\nd 2 -2\n");
        assert_eq!(write_cert(&Certificate::new(vec![Dist::Infinity]).unwrap()), "p cert 1\nd 1 inf\n");
    }
}
