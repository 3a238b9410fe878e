//! Text formats: the edge-list graph format and the X3C instance format.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n m
//! u v          (m lines)
//! w u VALUE    (optional, VALUE is a natural number or `inf`)
//! ```
//!
//! Vertices without a `w` line get weight 1. X3C instances use a header
//! line `n m` followed by `m` lines of three universe elements.

use std::fmt::Write as _;

use crate::eds::X3cInstance;
use crate::error::{Error, Result};
use crate::graph::{Graph, Weight, WeightMap};

/// A parsed edge-list file.
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: Graph,
    pub weights: WeightMap,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found `{tok}`"),
    })
}

fn parse_weight_line(line: usize, toks: &[&str], n: usize) -> Result<(usize, Weight)> {
    if toks.len() != 3 {
        return Err(Error::Parse {
            line,
            message: "weight lines have the form `w VERTEX VALUE`".into(),
        });
    }
    let v = parse_num(line, toks[1])?;
    if v >= n {
        return Err(Error::Parse {
            line,
            message: format!("vertex {v} out of range (n = {n})"),
        });
    }
    let w = toks[2].parse::<Weight>().map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })?;
    Ok((v, w))
}

/// Parses the edge-list format.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    if header.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            message: "header must be `n m`".into(),
        });
    }
    let n = parse_num(hline, header[0])?;
    let m = parse_num(hline, header[1])?;
    let mut edges = Vec::with_capacity(m);
    let mut weights = WeightMap::unit(n);
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        if toks[0] == "w" {
            let (v, w) = parse_weight_line(line, &toks, n)?;
            weights.set(v, w);
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: "edge lines have the form `u v`".into(),
            });
        }
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = (parse_num(line, toks[0])?, parse_num(line, toks[1])?);
        Graph::from_edge_list(n, &[(u, v)]).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    let graph = Graph::from_edge_list(n, &edges)?;
    Ok(GraphFile { graph, weights })
}

/// Parses a sidecar weight file: `w u VALUE` lines and comments only.
pub fn parse_weight_file(text: &str, n: usize) -> Result<Vec<(usize, Weight)>> {
    content_lines(text)
        .map(|(line, toks)| {
            if toks[0] != "w" {
                return Err(Error::Parse {
                    line,
                    message: "sidecar weight files contain only `w VERTEX VALUE` lines".into(),
                });
            }
            parse_weight_line(line, &toks, n)
        })
        .collect()
}

/// Writes the edge-list format. Weight lines are emitted for every vertex
/// whose weight differs from 1.
pub fn write_graph(graph: &Graph, weights: Option<&WeightMap>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", graph.n(), graph.m());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(weights) = weights {
        let one = Weight::Finite(1.into());
        for (v, w) in weights.iter().enumerate() {
            if *w != one {
                let _ = writeln!(out, "w {v} {w}");
            }
        }
    }
    out
}

/// Parses the X3C format.
pub fn parse_x3c(text: &str) -> Result<X3cInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    if header.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            message: "header must be `n m`".into(),
        });
    }
    let n = parse_num(hline, header[0])?;
    let m = parse_num(hline, header[1])?;
    let mut triples = Vec::with_capacity(m);
    for (line, toks) in lines {
        if toks.len() != 3 {
            return Err(Error::Parse {
                line,
                message: "triple lines have three elements".into(),
            });
        }
        let t = [
            parse_num(line, toks[0])?,
            parse_num(line, toks[1])?,
            parse_num(line, toks[2])?,
        ];
        triples.push(t);
    }
    if triples.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("declared {m} triples, found {}", triples.len()),
        });
    }
    X3cInstance::new(n, triples)
}

pub fn write_x3c(inst: &X3cInstance) -> String {
    let mut out = format!("{} {}\n", inst.universe(), inst.triples().len());
    for t in inst.triples() {
        let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
    }
    out
}
