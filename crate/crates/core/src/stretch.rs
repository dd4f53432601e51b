//! The 2-stretch of a graph and the apex construction `G*` used to reduce
//! independent-set parity to colouring parity.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A 2-stretch: every edge `u v` of the source replaced by `u s v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stretched {
    pub graph: Graph,
    /// Original vertices keep indices `0..n`.
    pub g_vertices: Vec<usize>,
    /// `stretch_vertices[i]` subdivides the `i`-th edge of the source in
    /// [`Graph::edges`] order.
    pub stretch_vertices: Vec<usize>,
}

fn reject_loops(g: &Graph) -> Result<()> {
    match (0..g.n()).find(|&v| g.has_loop(v)) {
        Some(v) => Err(Error::LoopNotAllowed { vertex: v }),
        None => Ok(()),
    }
}

pub fn two_stretch(g: &Graph) -> Result<Stretched> {
    reject_loops(g)?;
    let n = g.n();
    let edges = g.edges();
    let mut graph = Graph::empty(n + edges.len());
    let mut stretch_vertices = Vec::with_capacity(edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let s = n + i;
        graph.add_edge(u, s);
        graph.add_edge(s, v);
        stretch_vertices.push(s);
    }
    Ok(Stretched { graph, g_vertices: (0..n).collect(), stretch_vertices })
}

/// `G*`: the 2-stretch plus an apex `R` on the original vertices and an apex
/// `B` reached from every stretch vertex by its own path of length `k`.
///
/// Layout: original vertices, stretch vertices, `R`, `B`, then the interior
/// vertices of each stretch-to-`B` path in stretch order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStarGraph {
    pub graph: Graph,
    pub g_vertices: Vec<usize>,
    pub stretch_vertices: Vec<usize>,
    pub r: usize,
    pub b: usize,
    pub k: usize,
}

pub fn build_gstar(g: &Graph, k: usize) -> Result<GStarGraph> {
    if k < 1 {
        return Err(Error::InvalidPathLength(k));
    }
    let base = two_stretch(g)?;
    let m = base.stretch_vertices.len();
    let first = base.graph.n();
    let (r, b) = (first, first + 1);
    let total = first + 2 + m * (k - 1);
    let mut graph = Graph::empty(total);
    for (u, v) in base.graph.edges() {
        graph.add_edge(u, v);
    }
    for &v in &base.g_vertices {
        graph.add_edge(r, v);
    }
    let mut next = b + 1;
    for &s in &base.stretch_vertices {
        let mut prev = s;
        for _ in 1..k {
            graph.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        graph.add_edge(prev, b);
    }
    Ok(GStarGraph {
        graph,
        g_vertices: base.g_vertices,
        stretch_vertices: base.stretch_vertices,
        r,
        b,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::named::*;

    #[test]
    fn stretch_examples() {
        assert!(are_isomorphic(&two_stretch(&complete(2)).unwrap().graph, &path(3)).unwrap());
        assert!(are_isomorphic(&two_stretch(&complete(3)).unwrap().graph, &cycle(6)).unwrap());
        assert_eq!(two_stretch(&Graph::empty(3)).unwrap().graph, Graph::empty(3));
        assert_eq!(two_stretch(&looped_point()), Err(Error::LoopNotAllowed { vertex: 0 }));
    }

    #[test]
    fn gstar_sizes() {
        let k2 = build_gstar(&complete(2), 1).unwrap();
        assert_eq!(k2.graph.n(), 5);
        assert!(k2.graph.has_edge(k2.r, 0) && k2.graph.has_edge(k2.r, 1));
        assert!(k2.graph.has_edge(k2.b, k2.stretch_vertices[0]));
        let empty = build_gstar(&Graph::empty(2), 2).unwrap();
        assert_eq!(empty.graph.n(), 4);
        assert_eq!(empty.graph.degree(empty.b), 0);
        assert_eq!(build_gstar(&path(3), 2).unwrap().graph.n(), 9);
        assert_eq!(build_gstar(&path(3), 0), Err(Error::InvalidPathLength(0)));
    }

    #[test]
    fn gstar_paths_have_length_k() {
        for k in 1..5 {
            let gs = build_gstar(&cycle(4), k).unwrap();
            assert_eq!(gs.graph.n(), 4 + 4 + 2 + 4 * (k - 1));
            assert_eq!(gs.graph.degree(gs.b), 4);
            assert_eq!(gs.graph.degree(gs.r), 4);
            for &s in &gs.stretch_vertices {
                let d = gs.graph.distances_from(s);
                assert_eq!(d[gs.b], Some(k));
            }
            assert!(!gs.graph.has_loops());
        }
    }
}
