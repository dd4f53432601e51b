//! Graph file formats.
//!
//! Text: a header line `n m`, then `m` lines `u v` (0-based, `u u` is a
//! loop), optionally a line `root r`. Lines starting with `#` are comments.
//! JSON: `{"n": 2, "edges": [[0, 1], [1, 1]], "root": 1}` with `root`
//! optional.

use std::collections::BTreeSet;

use homtool_core::{Graph, RootedGraph};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, ParseError};

/// A parsed graph with its optional root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub root: Option<usize>,
}

impl GraphFile {
    pub fn rooted(&self) -> Option<RootedGraph> {
        self.root.map(|r| RootedGraph::new(self.graph.clone(), r).expect("validated on parse"))
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(err(line, format!("expected two integers in {what}")));
    };
    let a = a.parse().map_err(|_| err(line, format!("bad integer {a:?} in {what}")))?;
    let b = b.parse().map_err(|_| err(line, format!("bad integer {b:?} in {what}")))?;
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((hl, header)) = lines.next() else {
        return Err(err(0, "missing header"));
    };
    let (n, m) = parse_pair(hl, header, "header")?;
    let mut graph = Graph::empty(n);
    let mut seen = BTreeSet::new();
    let mut root = None;
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("root") {
            if root.is_some() {
                return Err(err(ln, "duplicate root line"));
            }
            let r: usize = rest.trim().parse().map_err(|_| err(ln, "bad root"))?;
            if r >= n {
                return Err(err(ln, format!("root {r} out of range for {n} vertices")));
            }
            root = Some(r);
            continue;
        }
        let (u, v) = parse_pair(ln, line, "edge")?;
        if u >= n || v >= n {
            return Err(err(ln, format!("vertex out of range in edge {u} {v} ({n} vertices)")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(ln, format!("duplicate edge {} {}", key.0, key.1)));
        }
        graph.add_edge(u, v);
    }
    if seen.len() != m {
        return Err(err(hl, format!("header declares {m} edges, found {}", seen.len())));
    }
    Ok(GraphFile { graph, root })
}

pub fn write_graph(g: &Graph, root: Option<usize>) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(r) = root {
        out.push_str(&format!("root {r}\n"));
    }
    out
}

/// JSON mirror of the text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(), root: None }
    }

    pub fn from_rooted(g: &RootedGraph) -> GraphJson {
        GraphJson { root: Some(g.root()), ..GraphJson::from_graph(g.graph()) }
    }

    pub fn to_file(&self) -> Result<GraphFile, CliError> {
        let mut text = format!("{} {}\n", self.n, self.edges.len());
        for [u, v] in &self.edges {
            text.push_str(&format!("{u} {v}\n"));
        }
        if let Some(r) = self.root {
            text.push_str(&format!("root {r}\n"));
        }
        Ok(parse_graph(&text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use homtool_core::graph::named;

    #[test]
    fn format_examples() {
        assert_eq!(parse_graph("1 0").unwrap().graph, Graph::empty(1));
        assert_eq!(parse_graph("2 2\n0 1\n1 1").unwrap().graph, named::edge_with_loop());
        assert!(parse_graph("0 0").unwrap().graph.is_null());
    }

    #[test]
    fn comments_and_root() {
        let f = parse_graph("# a path\n3 2\n0 1\n# middle\n1 2\nroot 2\n").unwrap();
        assert_eq!(f.graph, named::path(3));
        assert_eq!(f.root, Some(2));
        assert_eq!(parse_graph(&write_graph(&f.graph, f.root)).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "x 0", "2", "2 1\n0 2", "2 2\n0 1\n1 0", "2 1", "2 0\n0 1", "2 1\n0 1\nroot 5", "2 1\n0 1 1"] {
            assert!(parse_graph(bad).is_err(), "{bad:?}");
        }
        let e = parse_graph("3 2\n0 1\n0 7").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn json_round_trip() {
        let g = named::reduction_example();
        let j = GraphJson::from_graph(&g);
        let text = serde_json::to_string(&j).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_file().unwrap().graph, g);
        let r: GraphJson = serde_json::from_str(r#"{"n":2,"edges":[[0,1]],"root":1}"#).unwrap();
        assert_eq!(r.to_file().unwrap().root, Some(1));
    }
}
