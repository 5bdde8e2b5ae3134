//! The `.hg` text format.
//!
//! ```text
//! c optional comment
//! p hyp <n> <m> <s>
//! e v1 v2 ... vs      (m lines, 1-based ids)
//! ```
//!
//! [`write_hg`] emits the header and edges in lexicographic order, LF endings,
//! no trailing whitespace, no comments. Parsing tolerates blank lines and edge
//! vertices in any order.

use std::collections::HashSet;

use hyperindep_core::{Error as CoreError, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; for end-of-input errors, the last line.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("malformed problem line, expected `p hyp <n> <m> <s>`")]
    MalformedHeader,
    #[error("second problem line")]
    DuplicateHeader,
    #[error("missing problem line")]
    MissingHeader,
    #[error("vertex count must be positive")]
    NoVertices,
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),
    #[error("malformed vertex id `{0}`")]
    MalformedVertex(String),
    #[error("edge has {found} vertices, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error("vertex {vertex} out of range [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} repeated within the edge")]
    RepeatedVertex(usize),
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("unrecognised line")]
    UnexpectedLine,
}

struct Header {
    n: usize,
    m: usize,
    s: usize,
}

fn parse_header(tokens: &[&str]) -> Result<Header, ParseErrorKind> {
    let [_, kind, n, m, s] = tokens else {
        return Err(ParseErrorKind::MalformedHeader);
    };
    if *kind != "hyp" {
        return Err(ParseErrorKind::MalformedHeader);
    }
    let num = |t: &str| t.parse::<usize>().map_err(|_| ParseErrorKind::MalformedHeader);
    let header = Header {
        n: num(n)?,
        m: num(m)?,
        s: num(s)?,
    };
    if header.n == 0 {
        return Err(ParseErrorKind::NoVertices);
    }
    if header.s < 2 {
        return Err(ParseErrorKind::Uniformity(header.s));
    }
    Ok(header)
}

fn parse_edge(tokens: &[&str], header: &Header) -> Result<Vec<usize>, ParseErrorKind> {
    let ids = tokens[1..]
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| ParseErrorKind::MalformedVertex(t.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if ids.len() != header.s {
        return Err(ParseErrorKind::Arity {
            expected: header.s,
            found: ids.len(),
        });
    }
    if let Some(&v) = ids.iter().find(|&&v| v == 0 || v > header.n) {
        return Err(ParseErrorKind::VertexOutOfRange { vertex: v, n: header.n });
    }
    let zero_based = ids.into_iter().map(|v| v - 1).collect();
    Hypergraph::canonical_edge(header.n, header.s, 0, zero_based).map_err(|e| match e {
        CoreError::RepeatedVertex { vertex, .. } => ParseErrorKind::RepeatedVertex(vertex + 1),
        other => unreachable!("edge already validated: {other}"),
    })
}

/// Parses `.hg` text into a canonical hypergraph with 0-based ids.
pub fn parse_hg(text: &str) -> Result<Hypergraph, ParseError> {
    let mut header: Option<Header> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                header = Some(parse_header(&tokens).map_err(err)?);
            }
            Some("e") => {
                let Some(h) = header.as_ref() else {
                    return Err(err(ParseErrorKind::MissingHeader));
                };
                let edge = parse_edge(&tokens, h).map_err(err)?;
                if !seen.insert(edge.clone()) {
                    return Err(err(ParseErrorKind::DuplicateEdge));
                }
                if edges.len() == h.m {
                    return Err(err(ParseErrorKind::EdgeCount {
                        declared: h.m,
                        found: h.m + 1,
                    }));
                }
                edges.push(edge);
            }
            Some(_) => return Err(err(ParseErrorKind::UnexpectedLine)),
        }
    }

    let end = |kind| ParseError {
        line: last_line,
        kind,
    };
    let h = header.ok_or_else(|| end(ParseErrorKind::MissingHeader))?;
    if edges.len() != h.m {
        return Err(end(ParseErrorKind::EdgeCount {
            declared: h.m,
            found: edges.len(),
        }));
    }
    Ok(Hypergraph::new(h.n, h.s, edges).expect("edges validated while parsing"))
}

/// Canonical `.hg` serialization.
pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = format!("p hyp {} {} {}\n", h.order(), h.edge_count(), h.uniformity());
    for e in h.edges() {
        out.push('e');
        for v in e {
            out.push(' ');
            out.push_str(&(v + 1).to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse_hg(text).unwrap_err()
    }

    #[test]
    fn parses_examples() {
        let h = parse_hg("p hyp 3 1 3\ne 1 2 3").unwrap();
        assert_eq!((h.order(), h.uniformity()), (3, 3));
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
        let h = parse_hg("p hyp 4 0 3").unwrap();
        assert_eq!((h.order(), h.edge_count()), (4, 0));
    }

    #[test]
    fn duplicate_edge_reports_its_line() {
        assert_eq!(
            err("p hyp 4 2 3\ne 1 2 3\ne 1 2 3"),
            ParseError {
                line: 3,
                kind: ParseErrorKind::DuplicateEdge
            }
        );
        assert_eq!(err("p hyp 4 2 3\ne 1 2 3\ne 3 1 2").line, 3);
    }

    #[test]
    fn reports_each_error_kind() {
        assert_eq!(err("p hyp 4 1").kind, ParseErrorKind::MalformedHeader);
        assert_eq!(err("p graph 4 1 3").kind, ParseErrorKind::MalformedHeader);
        assert_eq!(err("p hyp 0 0 3").kind, ParseErrorKind::NoVertices);
        assert_eq!(err("p hyp 3 0 1").kind, ParseErrorKind::Uniformity(1));
        assert_eq!(
            err("c hi\np hyp 4 1 3\ne 1 2").kind,
            ParseErrorKind::Arity { expected: 3, found: 2 }
        );
        let e = err("p hyp 4 1 3\ne 1 2 5");
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::VertexOutOfRange { vertex: 5, n: 4 }));
        assert_eq!(
            err("p hyp 4 1 3\ne 0 2 3").kind,
            ParseErrorKind::VertexOutOfRange { vertex: 0, n: 4 }
        );
        assert_eq!(err("p hyp 4 1 3\ne 1 2 2").kind, ParseErrorKind::RepeatedVertex(2));
        assert_eq!(
            err("p hyp 4 1 3\ne 1 x 2").kind,
            ParseErrorKind::MalformedVertex("x".into())
        );
        assert_eq!(err("e 1 2 3\np hyp 4 1 3").kind, ParseErrorKind::MissingHeader);
        assert_eq!(err("").kind, ParseErrorKind::MissingHeader);
        assert_eq!(err("p hyp 4 1 3\np hyp 4 1 3").kind, ParseErrorKind::DuplicateHeader);
        assert_eq!(
            err("p hyp 4 2 3\ne 1 2 3").kind,
            ParseErrorKind::EdgeCount { declared: 2, found: 1 }
        );
        assert_eq!(
            err("p hyp 4 1 3\ne 1 2 3\ne 2 3 4").kind,
            ParseErrorKind::EdgeCount { declared: 1, found: 2 }
        );
        assert_eq!(err("p hyp 4 0 3\nx").kind, ParseErrorKind::UnexpectedLine);
    }

    #[test]
    fn writer_is_canonical() {
        let h = parse_hg("c comment\np hyp 5 2 3\n\ne 5 4 3\ne 3 1 2\n").unwrap();
        assert_eq!(write_hg(&h), "p hyp 5 2 3\ne 1 2 3\ne 3 4 5\n");
    }
}
