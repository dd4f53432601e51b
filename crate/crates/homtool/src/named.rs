//! Built-in graphs addressable by name, and loading of graph arguments.

use homtool_core::graph::named;
use homtool_core::Graph;

use crate::error::CliError;
use crate::format::{parse_graph, GraphFile, GraphJson};

pub const NAMES: &[&str] = &["null", "k1", "k2", "p3", "p4", "k3", "h1", "spider123", "fig1H"];

/// Vertex numbering: `h1` is the edge 0-1 with a loop at 1; `spider123` has
/// centre 0 and legs 1 | 2 3 | 4 5 6; `fig1H` is the 8-vertex example target
/// whose involutions reduce it to an edge with a looped end.
pub fn builtin(name: &str) -> Option<Graph> {
    Some(match name {
        "null" => Graph::null(),
        "k1" => Graph::empty(1),
        "k2" => named::complete(2),
        "p3" => named::path(3),
        "p4" => named::path(4),
        "k3" => named::complete(3),
        "h1" => named::edge_with_loop(),
        "spider123" => named::spider(&[1, 2, 3]),
        "fig1H" => named::reduction_example(),
        _ => return None,
    })
}

/// A built-in name, a `.json` file, or a text-format file.
pub fn load(arg: &str) -> Result<GraphFile, CliError> {
    if let Some(graph) = builtin(arg) {
        return Ok(GraphFile { graph, root: None });
    }
    let text = std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.to_string(), source })?;
    if arg.ends_with(".json") {
        let j: GraphJson = serde_json::from_str(&text)?;
        j.to_file()
    } else {
        Ok(parse_graph(&text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            assert!(builtin(n).is_some(), "{n}");
        }
        assert_eq!(builtin("fig1H").unwrap().n(), 8);
        assert!(load("no-such-file-or-name").is_err());
    }
}
