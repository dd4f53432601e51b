//! Canonical codes for small graphs.
//!
//! The code of a graph is the lexicographically smallest adjacency bit string
//! over all vertex orderings that list vertices by nondecreasing
//! `(degree, loop)` key. Bits are read column by column from the upper
//! triangle of the reordered adjacency matrix, diagonal included, so the bits
//! of a column are fixed as soon as the vertex at that position is chosen and
//! partial orderings can be compared against the best code found so far.
//! Two branches that differ by swapping a pair of twin vertices yield the same
//! codes, so only the first such branch is explored.

use alloc::vec;
use alloc::vec::Vec;

use crate::caps::{self, Caps};
use crate::error::Result;
use crate::graph::{Graph, RootedGraph};

/// Isomorphism-class key for graphs. Ordered by vertex count, then by the raw
/// bit string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Packed bits, most significant first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Rebuilds the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let mut idx = 0;
        for j in 0..self.n {
            for i in 0..=j {
                if self.bit(idx) {
                    g.add_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }

    fn bit(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (63 - idx % 64) & 1 == 1
    }

    fn from_bits(n: usize, bits: &[bool]) -> CanonicalCode {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (idx, &b) in bits.iter().enumerate() {
            if b {
                words[idx / 64] |= 1 << (63 - idx % 64);
            }
        }
        CanonicalCode { n, words }
    }
}

/// Isomorphism-class key for rooted graphs; the root always sits at
/// position 0 of the canonical ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedCanonicalCode(CanonicalCode);

impl RootedCanonicalCode {
    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.0
    }

    pub fn to_rooted_graph(&self) -> RootedGraph {
        RootedGraph::new(self.0.to_graph(), 0).expect("rooted codes have at least one vertex")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_labelling(g)?.0)
}

/// Canonical code together with the ordering that realises it:
/// `order[i]` is the vertex placed at position `i`.
pub fn canonical_labelling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    caps::check("canonical labelling", g.n(), Caps::current().canonical)?;
    Ok(search(g, None))
}

pub fn rooted_canonical_form(rg: &RootedGraph) -> Result<RootedCanonicalCode> {
    caps::check("canonical labelling", rg.graph().n(), Caps::current().canonical)?;
    Ok(RootedCanonicalCode(search(rg.graph(), Some(rg.root())).0))
}

/// The canonical representative: `g` relabelled by its canonical ordering.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<_> = (0..g.n()).map(|v| (g.degree(v), g.has_loop(v))).collect();
    let mut dh: Vec<_> = (0..h.n()).map(|v| (h.degree(v), h.has_loop(v))).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

pub fn are_rooted_isomorphic(a: &RootedGraph, b: &RootedGraph) -> Result<bool> {
    if a.graph().n() != b.graph().n() {
        return Ok(false);
    }
    Ok(rooted_canonical_form(a)? == rooted_canonical_form(b)?)
}

struct Search<'a> {
    g: &'a Graph,
    /// `slots[i]` lists the vertices allowed at position `i`.
    slots: Vec<&'a [usize]>,
    twins: Vec<Vec<bool>>,
    used: Vec<bool>,
    order: Vec<usize>,
    bits: Vec<bool>,
    best_bits: Option<Vec<bool>>,
    best_order: Vec<usize>,
    updates: usize,
}

fn search(g: &Graph, root: Option<usize>) -> (CanonicalCode, Vec<usize>) {
    let n = g.n();
    let key = |v: usize| (g.degree(v), g.has_loop(v));
    let mut sorted: Vec<usize> = (0..n).filter(|&v| Some(v) != root).collect();
    sorted.sort_by_key(|&v| (key(v), v));
    let root_slot: Vec<usize> = root.into_iter().collect();

    // Class boundaries over `sorted`.
    let mut classes: Vec<&[usize]> = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || key(sorted[i]) != key(sorted[start]) {
            classes.push(&sorted[start..i]);
            start = i;
        }
    }
    let mut slots: Vec<&[usize]> = Vec::with_capacity(n);
    if root.is_some() {
        slots.push(&root_slot);
    }
    for class in &classes {
        for _ in 0..class.len() {
            slots.push(class);
        }
    }

    // (u v) is an automorphism iff u and v agree on every third vertex and on loops.
    let mut twins = vec![vec![false; n]; n];
    #[allow(clippy::needless_range_loop)]
    for u in 0..n {
        for v in u + 1..n {
            let t = g.has_loop(u) == g.has_loop(v)
                && (0..n).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w));
            twins[u][v] = t;
            twins[v][u] = t;
        }
    }

    let mut s = Search {
        g,
        slots,
        twins,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        bits: Vec::with_capacity(n * (n + 1) / 2),
        best_bits: None,
        best_order: Vec::new(),
        updates: 0,
    };
    s.descend(false);
    let bits = s.best_bits.unwrap_or_default();
    (CanonicalCode::from_bits(n, &bits), s.best_order)
}

impl Search<'_> {
    /// `ahead` is true once the current prefix is already strictly smaller
    /// than the best code.
    fn descend(&mut self, mut ahead: bool) {
        let j = self.order.len();
        if j == self.g.n() {
            self.best_bits = Some(self.bits.clone());
            self.best_order.clone_from(&self.order);
            self.updates += 1;
            return;
        }
        let candidates = self.slots[j];
        for (ci, &v) in candidates.iter().enumerate() {
            if self.used[v] {
                continue;
            }
            if candidates[..ci].iter().any(|&u| !self.used[u] && self.twins[u][v]) {
                continue;
            }
            let col_start = self.bits.len();
            for i in 0..j {
                self.bits.push(self.g.has_edge(self.order[i], v));
            }
            self.bits.push(self.g.has_loop(v));

            let mut now_ahead = ahead;
            let mut prune = false;
            if !ahead {
                if let Some(best) = &self.best_bits {
                    match self.bits[col_start..].cmp(&best[col_start..col_start + j + 1]) {
                        core::cmp::Ordering::Greater => prune = true,
                        core::cmp::Ordering::Less => now_ahead = true,
                        core::cmp::Ordering::Equal => {}
                    }
                } else {
                    now_ahead = true;
                }
            }
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                let updates = self.updates;
                self.descend(now_ahead);
                if self.updates != updates {
                    // The new best extends the current prefix.
                    ahead = false;
                }
                self.order.pop();
                self.used[v] = false;
            }
            self.bits.truncate(col_start);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        g.n() == h.n()
            && permutations(g.n()).iter().any(|p| {
                (0..g.n()).all(|u| (0..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
            })
    }

    #[test]
    fn relabelled_path_has_same_code() {
        let a = path(3);
        let b = a.relabel(&[2, 0, 1]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_simple_cases() {
        assert_ne!(canonical_form(&complete(3)).unwrap(), canonical_form(&path(3)).unwrap());
        assert_ne!(
            canonical_form(&looped_point()).unwrap(),
            canonical_form(&Graph::empty(1)).unwrap()
        );
        assert!(!are_isomorphic(&complete(3), &path(3)).unwrap());
    }

    #[test]
    fn code_round_trips_to_an_isomorphic_graph() {
        let g = reduction_example();
        let code = canonical_form(&g).unwrap();
        let rep = code.to_graph();
        assert!(brute_isomorphic(&g, &rep));
        assert_eq!(canonical_form(&rep).unwrap(), code);
    }

    #[test]
    fn rooted_codes_respect_the_root() {
        let end = RootedGraph::new(path(3), 0).unwrap();
        let other_end = RootedGraph::new(path(3), 2).unwrap();
        let centre = RootedGraph::new(path(3), 1).unwrap();
        assert!(are_rooted_isomorphic(&end, &other_end).unwrap());
        assert!(!are_rooted_isomorphic(&end, &centre).unwrap());
        let code = rooted_canonical_form(&centre).unwrap();
        assert!(are_rooted_isomorphic(&code.to_rooted_graph(), &centre).unwrap());
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        let k = complete(10);
        assert_eq!(canonical_form(&k).unwrap().to_graph(), k);
        let s = star(9);
        assert!(are_isomorphic(&s, &s.relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0])).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(canonical_form(&Graph::empty(11)).is_err());
    }

    #[test]
    fn agrees_with_brute_force_on_all_four_vertex_labelled_graphs() {
        // Every labelled graph on 4 vertices with loops: 2^10 of them.
        let pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|u| (u..4).map(move |v| (u, v))).collect();
        let graphs: Vec<Graph> = (0u32..1 << pairs.len())
            .map(|mask| {
                let mut g = Graph::empty(4);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                g
            })
            .collect();
        let codes: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        // Sample pairs to keep the brute-force cost small.
        for i in (0..graphs.len()).step_by(7) {
            for j in (0..graphs.len()).step_by(11) {
                assert_eq!(
                    codes[i] == codes[j],
                    brute_isomorphic(&graphs[i], &graphs[j]),
                    "{:?} vs {:?}",
                    graphs[i],
                    graphs[j]
                );
            }
        }
    }
}
