//! Automorphisms, orbits, fixed-point subgraphs and reduction of a target by
//! automorphisms of prime order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::canon::{canonical_form, CanonicalCode};
use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycle lengths, in order of each cycle's smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = self.image[v];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Order in the symmetric group: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.image[v] == v).collect()
    }

    pub fn is_automorphism_of(&self, h: &Graph) -> bool {
        self.len() == h.n()
            && h.edges().iter().all(|&(u, v)| h.has_edge(self.image[u], self.image[v]))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Visits every automorphism of `h` in lexicographic order of image arrays
/// until `visit` breaks.
pub fn for_each_automorphism<B>(
    h: &Graph,
    mut visit: impl FnMut(&Permutation) -> ControlFlow<B>,
) -> Result<Option<B>> {
    caps::check("automorphism search", h.n(), Caps::current().automorphisms)?;
    let n = h.n();
    let key: Vec<(usize, bool)> = (0..n).map(|v| (h.degree(v), h.has_loop(v))).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut perm = Permutation::identity(n);
    Ok(match extend(h, &key, 0, &mut image, &mut used, &mut perm, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    })
}

fn extend<B>(
    h: &Graph,
    key: &[(usize, bool)],
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
    perm: &mut Permutation,
    visit: &mut impl FnMut(&Permutation) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = h.n();
    if v == n {
        perm.image.copy_from_slice(image);
        return visit(perm);
    }
    for c in 0..n {
        if used[c] || key[c] != key[v] {
            continue;
        }
        if !(0..v).all(|u| h.has_edge(u, v) == h.has_edge(image[u], c)) {
            continue;
        }
        used[c] = true;
        image[v] = c;
        extend(h, key, v + 1, image, used, perm, visit)?;
        used[c] = false;
        image[v] = usize::MAX;
    }
    ControlFlow::Continue(())
}

/// Every automorphism of `h`, in lexicographic order of image arrays.
pub fn automorphisms(h: &Graph) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_automorphism::<()>(h, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn automorphism_count(h: &Graph) -> Result<u64> {
    let mut count = 0u64;
    for_each_automorphism::<()>(h, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// True iff the only automorphism is the identity.
pub fn is_asymmetric(h: &Graph) -> Result<bool> {
    let found = for_each_automorphism(h, |p| {
        if p.is_identity() {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(found.is_none())
}

/// The first automorphism of exact order `p` in search order.
pub fn find_order_p_automorphism(h: &Graph, p: u64) -> Result<Option<Permutation>> {
    check_prime(p)?;
    for_each_automorphism(h, |perm| {
        if perm.order() == p {
            ControlFlow::Break(perm.clone())
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// All automorphisms of exact order `p`.
pub fn order_p_automorphisms(h: &Graph, p: u64) -> Result<Vec<Permutation>> {
    check_prime(p)?;
    let mut out = Vec::new();
    for_each_automorphism::<()>(h, |perm| {
        if perm.order() == p {
            out.push(perm.clone());
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The subgraph induced by the fixed points of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointSubgraph {
    pub graph: Graph,
    /// `kept[i]` is the vertex of the original graph that became vertex `i`.
    pub kept: Vec<usize>,
}

pub fn fixed_point_subgraph(h: &Graph, sigma: &Permutation) -> Result<FixedPointSubgraph> {
    if !sigma.is_automorphism_of(h) {
        return Err(Error::NotAnAutomorphism);
    }
    let kept = sigma.fixed_points();
    Ok(FixedPointSubgraph { graph: h.induced_subgraph(&kept), kept })
}

/// Orbits of the full automorphism group, as a partition whose blocks are
/// sorted and ordered by smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    partition: Partition,
}

impl OrbitPartition {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        self.partition.blocks()
    }

    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.is_empty()
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.partition.block_of(v)
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_of(u) == self.orbit_of(v)
    }

    /// Index of the orbit equal to `set`, if `set` is one.
    pub fn index_of(&self, set: &[usize]) -> Option<usize> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.orbits().iter().position(|o| *o == sorted)
    }
}

pub fn orbits(h: &Graph) -> Result<OrbitPartition> {
    let n = h.n();
    let mut reach = vec![vec![false; n]; n];
    for_each_automorphism::<()>(h, |p| {
        for (v, row) in reach.iter_mut().enumerate() {
            row[p.apply(v)] = true;
        }
        ControlFlow::Continue(())
    })?;
    let mut label = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if label[v] != usize::MAX {
            continue;
        }
        let block: Vec<usize> = (0..n).filter(|&w| reach[v][w]).collect();
        for &w in &block {
            label[w] = blocks.len();
        }
        blocks.push(block);
    }
    Ok(OrbitPartition { partition: Partition::new(n, blocks)? })
}

/// One reduction step `H -> H^sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub automorphism: Permutation,
    pub result: Graph,
    /// Vertices of the preceding graph that survive, in their new order.
    pub kept: Vec<usize>,
}

/// A maximal reduction sequence for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub p: u64,
    pub start: Graph,
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// The reduced form: the last graph of the sequence.
    pub fn final_graph(&self) -> &Graph {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    /// For each vertex of the reduced form, the vertex of the starting graph
    /// it descends from.
    pub fn surviving_vertices(&self) -> Vec<usize> {
        let mut map: Vec<usize> = (0..self.start.n()).collect();
        for step in &self.steps {
            map = step.kept.iter().map(|&v| map[v]).collect();
        }
        map
    }
}

/// Reduces `h` by automorphisms of order `p` until none remains, always using
/// the first such automorphism in search order.
pub fn reduced_form(h: &Graph, p: u64) -> Result<ReductionTrace> {
    check_prime(p)?;
    let mut steps = Vec::new();
    let mut current = h.clone();
    while let Some(sigma) = find_order_p_automorphism(&current, p)? {
        let fixed = fixed_point_subgraph(&current, &sigma)?;
        current = fixed.graph.clone();
        steps.push(ReductionStep { automorphism: sigma, result: fixed.graph, kept: fixed.kept });
    }
    Ok(ReductionTrace { p, start: h.clone(), steps })
}

/// Canonical codes of every terminal graph reachable by some maximal
/// reduction sequence, exploring every order-`p` automorphism at every step.
pub fn reduction_terminals(h: &Graph, p: u64) -> Result<BTreeSet<CanonicalCode>> {
    check_prime(p)?;
    let mut visited: BTreeSet<CanonicalCode> = BTreeSet::new();
    let mut terminals = BTreeSet::new();
    let mut stack = vec![h.clone()];
    visited.insert(canonical_form(h)?);
    while let Some(g) = stack.pop() {
        let autos = order_p_automorphisms(&g, p)?;
        if autos.is_empty() {
            terminals.insert(canonical_form(&g)?);
            continue;
        }
        for sigma in autos {
            let next = fixed_point_subgraph(&g, &sigma)?.graph;
            if visited.insert(canonical_form(&next)?) {
                stack.push(next);
            }
        }
    }
    Ok(terminals)
}

/// True iff all maximal reduction sequences end in one isomorphism class.
pub fn verify_confluence(h: &Graph, p: u64) -> Result<bool> {
    Ok(reduction_terminals(h, p)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::named::*;

    #[test]
    fn permutation_basics() {
        assert_eq!(Permutation::new(vec![1, 0, 0]), Err(Error::NotAPermutation));
        let p = Permutation::new(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_lengths(), vec![3, 2]);
        assert_eq!(p.compose(&p).order(), 3);
        assert!(Permutation::identity(0).is_identity());
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&complete(3)).unwrap().len(), 6);
        assert_eq!(automorphism_count(&spider(&[1, 2, 3])).unwrap(), 1);
        assert_eq!(automorphism_count(&cycle(5)).unwrap(), 10);
        assert_eq!(automorphism_count(&Graph::null()).unwrap(), 1);
        assert_eq!(automorphism_count(&edge_with_loop()).unwrap(), 1);
        assert!(automorphisms(&Graph::empty(11)).is_err());
    }

    #[test]
    fn automorphisms_come_in_lexicographic_order() {
        let autos = automorphisms(&cycle(5)).unwrap();
        assert!(autos.windows(2).all(|w| w[0].image() < w[1].image()));
        assert!(autos.iter().all(|a| a.is_automorphism_of(&cycle(5))));
    }

    #[test]
    fn order_p_examples() {
        let swap = find_order_p_automorphism(&complete(2), 2).unwrap().unwrap();
        assert_eq!(swap.image(), &[1, 0]);
        assert_eq!(find_order_p_automorphism(&spider(&[1, 2, 3]), 2).unwrap(), None);
        let five = find_order_p_automorphism(&complete(5), 5).unwrap().unwrap();
        assert_eq!(five.cycle_lengths(), vec![5]);
        assert_eq!(find_order_p_automorphism(&complete(5), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn example_target_involutions() {
        let h = reduction_example();
        // sigma swaps a/e, b/f, c/d; tau swaps e/f.
        let sigma = Permutation::new(vec![4, 5, 3, 2, 0, 1, 6, 7]).unwrap();
        let tau = Permutation::new(vec![0, 1, 2, 3, 5, 4, 6, 7]).unwrap();
        let autos = automorphisms(&h).unwrap();
        assert!(autos.contains(&sigma) && autos.contains(&tau));
        let fixed = fixed_point_subgraph(&h, &sigma).unwrap();
        assert_eq!(fixed.kept, vec![6, 7]);
        assert_eq!(fixed.graph, edge_with_loop());
    }

    #[test]
    fn fixed_points_edge_cases() {
        let id = Permutation::identity(4);
        assert_eq!(fixed_point_subgraph(&path(4), &id).unwrap().graph, path(4));
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert!(fixed_point_subgraph(&complete(2), &swap).unwrap().graph.is_null());
        let bad = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(fixed_point_subgraph(&path(3), &bad), Err(Error::NotAnAutomorphism));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbits(&complete(3)).unwrap().orbits(), &[vec![0, 1, 2]]);
        assert_eq!(orbits(&edge_with_loop()).unwrap().orbits(), &[vec![0], vec![1]]);
        assert_eq!(orbits(&spider(&[1, 2, 3])).unwrap().len(), 7);
        assert_eq!(orbits(&path(4)).unwrap().orbits(), &[vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn reduced_form_examples() {
        assert!(reduced_form(&looped_complete(4), 2).unwrap().final_graph().is_null());
        let k23 = reduced_form(&complete_bipartite(2, 3), 2).unwrap();
        assert_eq!(k23.final_graph(), &Graph::empty(1));
        let ex = reduced_form(&reduction_example(), 2).unwrap();
        assert!(are_isomorphic(ex.final_graph(), &edge_with_loop()).unwrap());
        assert!(find_order_p_automorphism(ex.final_graph(), 2).unwrap().is_none());
        let survivors = ex.surviving_vertices();
        let mut sorted = survivors.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![6, 7]);
    }

    #[test]
    fn confluence_examples() {
        assert!(verify_confluence(&reduction_example(), 2).unwrap());
        assert_eq!(reduction_terminals(&reduction_example(), 2).unwrap().len(), 1);
    }

    #[test]
    fn group_order_divisibility_matches_existence() {
        for g in crate::enumerate::enumerate_graphs(5, true).unwrap() {
            let order = automorphism_count(&g).unwrap();
            for p in [2, 3, 5] {
                let found = find_order_p_automorphism(&g, p).unwrap();
                assert_eq!(found.is_some(), order % p == 0, "{g:?} p={p}");
            }
        }
    }
}
