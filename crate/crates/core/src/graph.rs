//! Finite undirected graphs with optional loops, rooted graphs, vertex
//! partitions and the quotient construction.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A finite undirected graph on vertices `0..n`.
///
/// Loops are allowed, parallel edges are not representable. The adjacency
/// relation is stored as a symmetric bit matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let stride = n.div_ceil(64);
        Graph { n, stride, bits: vec![0; n * stride] }
    }

    pub fn null() -> Graph {
        Graph::empty(0)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adds the edge `{u, v}` (a loop when `u == v`).
    ///
    /// # Panics
    ///
    /// Panics if either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
        self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.bits[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_loop(v))
    }

    /// Row `v` of the adjacency matrix as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbours of `v` in increasing order, including `v` itself when it
    /// carries a loop.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            core::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }

    /// Number of neighbours; a loop contributes one.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of edges, loops included.
    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.neighbors(v).filter(|&w| w >= v).count()).sum()
    }

    /// All edges `(u, v)` with `u <= v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v >= u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Vertices with no incident edge (a looped vertex is not isolated).
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Subgraph induced by `vertices`, reindexed in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Graph {
        debug_assert_eq!(map.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(map[u], map[v]);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connectivity; the null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        !self.has_loops() && self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_forest() && self.is_connected()
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices on the shortest path from `s` to `t`, both ends included.
    pub fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for w in self.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t];
        let mut v = t;
        while v != s {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A graph with one distinguished vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<RootedGraph> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }

    /// The single vertex, rooted. Identity for [`RootedGraph::join`].
    pub fn point() -> RootedGraph {
        RootedGraph { graph: Graph::empty(1), root: 0 }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Identifies the roots of `self` and `other`.
    ///
    /// The vertices of `self` keep their indices; the non-root vertices of
    /// `other` follow in their original order.
    pub fn join(&self, other: &RootedGraph) -> RootedGraph {
        let graph = attach(&self.graph, self.root, other);
        RootedGraph { graph, root: self.root }
    }
}

/// The rooted graph obtained by identifying the roots of `a` and `b`.
pub fn root_join(a: &RootedGraph, b: &RootedGraph) -> RootedGraph {
    a.join(b)
}

/// Glues a copy of `gadget` onto `g`, identifying the gadget's root with
/// vertex `at`. New vertices are appended after those of `g`.
///
/// # Panics
///
/// Panics if `at` is not a vertex of `g`.
pub fn attach(g: &Graph, at: usize, gadget: &RootedGraph) -> Graph {
    assert!(at < g.n(), "attachment vertex {at} out of range");
    let gn = gadget.graph.n();
    let mut map = vec![0; gn];
    let mut next = g.n();
    for (v, slot) in map.iter_mut().enumerate() {
        if v == gadget.root {
            *slot = at;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut out = Graph::empty(next);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in gadget.graph.edges() {
        out.add_edge(map[u], map[v]);
    }
    out
}

/// A partition of `0..n` into nonempty disjoint blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(alloc::format!(
                        "vertex {v} appears in more than one block"
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(alloc::format!("vertex {v} is not covered")));
        }
        Ok(Partition { n, blocks, block_of })
    }

    /// Builds the partition from a block label per vertex. Labels must be
    /// `0..k` for some `k`, each used at least once.
    pub fn from_labels(labels: &[usize]) -> Result<Partition> {
        let k = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].push(v);
        }
        Partition::new(labels.len(), blocks)
    }

    /// One block per vertex.
    pub fn discrete(n: usize) -> Partition {
        Partition { n, blocks: (0..n).map(|v| vec![v]).collect(), block_of: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }
}

/// The quotient `g / theta`: one vertex per block, blocks adjacent when some
/// edge of `g` joins them. An edge inside a block becomes a loop.
pub fn quotient(g: &Graph, theta: &Partition) -> Result<Graph> {
    if theta.n() != g.n() {
        return Err(Error::InvalidPartition(alloc::format!(
            "partition is over {} vertices, graph has {}",
            theta.n(),
            g.n()
        )));
    }
    let mut q = Graph::empty(theta.len());
    for (u, v) in g.edges() {
        q.add_edge(theta.block_of(u), theta.block_of(v));
    }
    Ok(q)
}

/// Rooted quotient, rooted at the block containing the old root.
pub fn rooted_quotient(rg: &RootedGraph, theta: &Partition) -> Result<RootedGraph> {
    let graph = quotient(rg.graph(), theta)?;
    let root = theta.block_of(rg.root());
    RootedGraph::new(graph, root)
}

/// Small graphs that recur in examples and tests.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete graph with a loop at every vertex.
    pub fn looped_complete(n: usize) -> Graph {
        let mut g = complete(n);
        for v in 0..n {
            g.add_edge(v, v);
        }
        g
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Star with centre 0 and `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Graph {
        spider(&alloc::vec![1; leaves])
    }

    /// Centre 0 with pendant paths of the given lengths. Leg vertices are
    /// numbered consecutively outward, leg by leg.
    pub fn spider(legs: &[usize]) -> Graph {
        let n = 1 + legs.iter().sum::<usize>();
        let mut g = Graph::empty(n);
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// A single vertex carrying a loop.
    pub fn looped_point() -> Graph {
        looped_complete(1)
    }

    /// Edge `a - b` with a loop at `b` (`a = 0`, `b = 1`). Its colourings of a
    /// loop-free graph correspond to independent sets.
    pub fn edge_with_loop() -> Graph {
        let mut g = path(2);
        g.add_edge(1, 1);
        g
    }

    /// Looped vertex plus an isolated unlooped vertex.
    pub fn loop_plus_point() -> Graph {
        let mut g = Graph::empty(2);
        g.add_edge(0, 0);
        g
    }

    /// Eight-vertex example target: `a..h` are `0..7`, with edges
    /// `a-c, b-c, c-g, g-d, d-e, d-f, g-h` and a loop at `h`.
    pub fn reduction_example() -> Graph {
        let (a, b, c, d, e, f, g_, h) = (0, 1, 2, 3, 4, 5, 6, 7);
        let mut g = Graph::empty(8);
        for (u, v) in [(a, c), (b, c), (c, g_), (g_, d), (d, e), (d, f), (g_, h), (h, h)] {
            g.add_edge(u, v);
        }
        g
    }
}
