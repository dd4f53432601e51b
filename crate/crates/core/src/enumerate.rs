//! Isomorph-free enumeration of small graphs, rooted graphs and trees, and
//! enumeration of set partitions.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_form, rooted_canonical_form, CanonicalCode, RootedCanonicalCode};
use crate::caps::{self, Caps};
use crate::error::Result;
use crate::graph::{Graph, Partition, RootedGraph};

/// One representative per isomorphism class of graphs on at most `n_max`
/// vertices, ordered by vertex count and then by canonical code. Each
/// representative is the canonical relabelling of its class.
pub fn enumerate_graphs(n_max: usize, allow_loops: bool) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n_max, allow_loops, &Caps::current())
}

pub fn enumerate_graphs_with(n_max: usize, allow_loops: bool, caps: &Caps) -> Result<Vec<Graph>> {
    Ok(graph_codes_with(n_max, allow_loops, caps)?.iter().map(CanonicalCode::to_graph).collect())
}

/// Canonical codes of all classes with at most `n_max` vertices, in
/// enumeration order.
pub fn graph_codes_with(n_max: usize, allow_loops: bool, caps: &Caps) -> Result<Vec<CanonicalCode>> {
    caps::check("graph enumeration", n_max, caps.enumeration_cap(allow_loops))?;
    caps::check("canonical labelling", n_max, Caps::current().canonical)?;
    let mut out = Vec::new();
    for level in GraphLevels::new(allow_loops).take(n_max + 1) {
        out.extend(level?);
    }
    Ok(out)
}

/// Canonical codes of graphs level by level: the `n`-th item holds every
/// class on exactly `n` vertices in increasing code order. Not capped; only
/// the canonical labelling cap applies.
pub struct GraphLevels {
    allow_loops: bool,
    level: Option<Vec<Graph>>,
}

impl GraphLevels {
    pub fn new(allow_loops: bool) -> GraphLevels {
        GraphLevels { allow_loops, level: None }
    }
}

impl Iterator for GraphLevels {
    type Item = Result<Vec<CanonicalCode>>;

    fn next(&mut self) -> Option<Self::Item> {
        let Some(prev) = self.level.take() else {
            self.level = Some(vec![Graph::null()]);
            return Some(canonical_form(&Graph::null()).map(|c| vec![c]));
        };
        let n = prev.first().map_or(0, Graph::n) + 1;
        let loops = self.allow_loops;
        let mut seen = BTreeSet::new();
        let choices = 1u64 << (n - 1 + usize::from(loops));
        for base in &prev {
            for mask in 0..choices {
                let mut g = Graph::empty(n);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, n - 1);
                    }
                }
                if loops && mask >> (n - 1) & 1 == 1 {
                    g.add_edge(n - 1, n - 1);
                }
                match canonical_form(&g) {
                    Ok(c) => {
                        seen.insert(c);
                    }
                    Err(e) => return Some(Err(e)),
                }
            }
        }
        let codes: Vec<CanonicalCode> = seen.into_iter().collect();
        self.level = Some(codes.iter().map(CanonicalCode::to_graph).collect());
        Some(Ok(codes))
    }
}

/// One representative per rooted-isomorphism class of rooted graphs with
/// `1..=n_max` vertices, ordered by vertex count then rooted code. Each
/// representative is rooted at vertex 0.
pub fn enumerate_rooted_graphs(n_max: usize, allow_loops: bool) -> Result<Vec<RootedGraph>> {
    enumerate_rooted_graphs_with(n_max, allow_loops, &Caps::current())
}

pub fn enumerate_rooted_graphs_with(
    n_max: usize,
    allow_loops: bool,
    caps: &Caps,
) -> Result<Vec<RootedGraph>> {
    let graphs = enumerate_graphs_with(n_max, allow_loops, caps)?;
    let mut codes: BTreeSet<RootedCanonicalCode> = BTreeSet::new();
    for g in &graphs {
        for root in 0..g.n() {
            codes.insert(rooted_canonical_form(&RootedGraph::new(g.clone(), root)?)?);
        }
    }
    Ok(codes.iter().map(RootedCanonicalCode::to_rooted_graph).collect())
}

/// All set partitions of `0..n` in restricted-growth-string order; the first
/// is the single-block partition, the last the discrete one.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions { labels: vec![0; n], maxima: vec![0; n], done: false }
}

/// Iterator over restricted growth strings.
pub struct SetPartitions {
    labels: Vec<usize>,
    /// `maxima[i]` is the largest label among `labels[..i]`.
    maxima: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_labels(&self.labels).expect("restricted growth strings are valid");
        // Advance to the next restricted growth string.
        let n = self.labels.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.maxima[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.maxima[j] = self.maxima[j - 1].max(self.labels[j - 1]);
                }
                break;
            }
        }
        Some(current)
    }
}

/// Canonical string for a tree (AHU encoding rooted at a centre; the smaller
/// encoding when there are two centres).
pub fn tree_code(t: &Graph) -> String {
    if t.n() == 0 {
        return String::new();
    }
    centres(t)
        .into_iter()
        .map(|c| rooted_tree_code(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_tree_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> =
        t.neighbors(v).filter(|&w| w != parent).map(|w| rooted_tree_code(t, w, v)).collect();
    children.sort_unstable();
    let mut s = String::from("(");
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// The one or two centre vertices of a tree, found by stripping leaves.
pub fn centres(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for w in t.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// One representative of every unlabelled tree on exactly `n` vertices,
/// ordered by [`tree_code`].
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen: alloc::collections::BTreeMap<String, Graph> = Default::default();
        for t in &level {
            for v in 0..m - 1 {
                let mut g = Graph::empty(m);
                for (a, b) in t.edges() {
                    g.add_edge(a, b);
                }
                g.add_edge(v, m - 1);
                seen.entry(tree_code(&g)).or_insert(g);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(1, true).unwrap().len(), 3);
        let four = enumerate_graphs(4, false).unwrap();
        assert_eq!(four.iter().filter(|g| g.n() == 4).count(), 11);
        // Loop-free counts 1, 1, 2, 4, 11, 34, 156.
        let six = enumerate_graphs(6, false).unwrap();
        let per_n: Vec<usize> = (0..=6).map(|n| six.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(per_n, vec![1, 1, 2, 4, 11, 34, 156]);
        // With loops: 1, 2, 6, 20, 90, 544.
        let looped = enumerate_graphs(5, true).unwrap();
        let per_n: Vec<usize> = (0..=5).map(|n| looped.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(per_n, vec![1, 2, 6, 20, 90, 544]);
    }

    #[test]
    fn codes_strictly_increase() {
        let codes = graph_codes_with(5, true, &Caps::DEFAULT).unwrap();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_caps() {
        assert!(enumerate_graphs(7, false).is_err());
        assert!(enumerate_graphs(6, true).is_err());
    }

    #[test]
    fn rooted_counts() {
        // Rooted graphs without loops on 1, 2, 3 vertices: 1, 2, 6.
        let rooted = enumerate_rooted_graphs(3, false).unwrap();
        let per_n: Vec<usize> = (1..=3).map(|n| rooted.iter().filter(|g| g.graph().n() == n).count()).collect();
        assert_eq!(per_n, vec![1, 2, 6]);
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| set_partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        let first = set_partitions(3).next().unwrap();
        assert_eq!(first.len(), 1);
        assert_eq!(set_partitions(3).last().unwrap(), Partition::discrete(3));
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_trees(8).iter().all(Graph::is_tree));
    }

    #[test]
    fn tree_code_is_label_invariant() {
        let s = named::spider(&[1, 2, 3]);
        let relabelled = s.relabel(&[6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(tree_code(&s), tree_code(&relabelled));
        assert_ne!(tree_code(&named::path(4)), tree_code(&named::star(3)));
        assert_eq!(centres(&named::path(4)), vec![1, 2]);
        assert_eq!(centres(&s), vec![0, 4]);
    }
}
