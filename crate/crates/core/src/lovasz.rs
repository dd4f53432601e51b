//! Mod-p Lovász vector prefixes and the search for distinguishing instances
//! and rooted gadgets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::canon::{rooted_canonical_form, RootedCanonicalCode};
use crate::caps::{self, Caps};
use crate::enumerate::{enumerate_graphs, enumerate_rooted_graphs_with, set_partitions, GraphLevels};
use crate::error::{Error, Result};
use crate::graph::{named, rooted_quotient, Graph, RootedGraph};
use crate::hom::{hom_mod, hom_mod_where, rooted_hom_parity};
use crate::symmetry::{find_order_p_automorphism, is_prime, orbits};

/// Residues of `hom(G_i, h)` for the enumerated instances `G_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LovaszPrefix {
    pub p: u64,
    pub n_max: usize,
    /// Whether instances with loops were enumerated.
    pub loops: bool,
    /// `(index in the enumeration, residue)`, in enumeration order.
    pub entries: Vec<(usize, u64)>,
}

impl LovaszPrefix {
    pub fn residues(&self) -> Vec<u64> {
        self.entries.iter().map(|&(_, r)| r).collect()
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Entry `i` is `hom(G_i, h) mod p` where `G_i` runs over
/// `enumerate_graphs(n_max, h.has_loops())`. A loop-free target gives zero on
/// every instance with a loop, so those instances are only listed when `h`
/// itself has a loop.
pub fn lovasz_prefix(h: &Graph, p: u64, n_max: usize) -> Result<LovaszPrefix> {
    check_prime(p)?;
    let loops = h.has_loops();
    let instances = enumerate_graphs(n_max, loops)?;
    let entries = instances
        .iter()
        .enumerate()
        .map(|(i, g)| Ok((i, hom_mod(g, h, p)?.r)))
        .collect::<Result<_>>()?;
    Ok(LovaszPrefix { p, n_max, loops, entries })
}

/// Rooted analogue over `enumerate_rooted_graphs(n_max, h.has_loops())`.
pub fn rooted_lovasz_prefix(h: &RootedGraph, p: u64, n_max: usize) -> Result<LovaszPrefix> {
    check_prime(p)?;
    let loops = h.graph().has_loops();
    let instances = enumerate_rooted_graphs_with(n_max, loops, &Caps::current())?;
    let hr = h.root();
    let entries = instances
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let gr = g.root();
            Ok((i, hom_mod_where(g.graph(), h.graph(), p, |v, c| v != gr || c == hr)?.r))
        })
        .collect::<Result<_>>()?;
    Ok(LovaszPrefix { p, n_max, loops, entries })
}

/// The first instance `G`, in enumeration order, with
/// `hom(G, h1) != hom(G, h2) (mod p)`, searching instances with at most
/// `max(|V(h1)|, |V(h2)|)` vertices. Neither target may have an automorphism
/// of order `p`; under that condition `None` means the targets are
/// isomorphic.
pub fn distinguish_targets(h1: &Graph, h2: &Graph, p: u64) -> Result<Option<Graph>> {
    check_prime(p)?;
    for h in [h1, h2] {
        if find_order_p_automorphism(h, p)?.is_some() {
            return Err(Error::HasOrderPAutomorphism { p });
        }
    }
    let bound = h1.n().max(h2.n());
    let loops = h1.has_loops() || h2.has_loops();
    for level in GraphLevels::new(loops).take(bound + 1) {
        for code in level? {
            let g = code.to_graph();
            if hom_mod(&g, h1, p)?.r != hom_mod(&g, h2, p)?.r {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

fn separates(gamma: &RootedGraph, h: &Graph, x: usize, y: usize) -> Result<bool> {
    let hx = RootedGraph::new(h.clone(), x)?;
    let hy = RootedGraph::new(h.clone(), y)?;
    Ok(rooted_hom_parity(gamma, &hx) != rooted_hom_parity(gamma, &hy))
}

/// A rooted path with `len` edges, rooted at an end.
pub fn rooted_path(len: usize) -> RootedGraph {
    RootedGraph::new(named::path(len + 1), 0).expect("nonempty")
}

/// A star rooted at its centre.
pub fn rooted_star(leaves: usize) -> RootedGraph {
    RootedGraph::new(named::star(leaves), 0).expect("nonempty")
}

/// Default vertex budget for the final exhaustive stage of
/// [`find_distinguisher`].
pub fn default_budget(h: &Graph) -> usize {
    h.n() + 1
}

/// A rooted graph `gamma` with `hom(gamma, (h, x))` and `hom(gamma, (h, y))`
/// of different parity.
///
/// Candidates are tried in this order: rooted paths by length, stars rooted
/// at the centre, the rooted quotients of `(h, x)` and `(h, y)` by vertex
/// count, and finally every rooted graph up to `budget` vertices. The
/// quotient family alone always contains a witness when `h` has no
/// involution, so reaching the last stage is unexpected and running out of
/// it is reported as [`Error::SearchExhausted`].
pub fn find_distinguisher(h: &Graph, x: usize, y: usize) -> Result<RootedGraph> {
    find_distinguisher_with_budget(h, x, y, default_budget(h))
}

pub fn find_distinguisher_with_budget(
    h: &Graph,
    x: usize,
    y: usize,
    budget: usize,
) -> Result<RootedGraph> {
    h.check_vertex(x)?;
    h.check_vertex(y)?;
    if find_order_p_automorphism(h, 2)?.is_some() {
        return Err(Error::HasOrderPAutomorphism { p: 2 });
    }
    if orbits(h)?.same_orbit(x, y) {
        return Err(Error::SameOrbit { x, y });
    }
    let n = h.n();
    for len in 1..=n {
        let gamma = rooted_path(len);
        if separates(&gamma, h, x, y)? {
            return Ok(gamma);
        }
    }
    // A star's count is a power of the root's degree, so one leaf decides.
    let star = rooted_star(1);
    if separates(&star, h, x, y)? {
        return Ok(star);
    }
    let mut quotients: BTreeSet<(usize, RootedCanonicalCode)> = BTreeSet::new();
    for root in [x, y] {
        let rooted = RootedGraph::new(h.clone(), root)?;
        for theta in set_partitions(n) {
            let q = rooted_quotient(&rooted, &theta)?;
            quotients.insert((q.graph().n(), rooted_canonical_form(&q)?));
        }
    }
    for (_, code) in &quotients {
        let gamma = code.to_rooted_graph();
        if separates(&gamma, h, x, y)? {
            return Ok(gamma);
        }
    }
    let mut caps = Caps::current();
    caps.enumerate_loop_free = caps.enumerate_loop_free.max(budget);
    caps.enumerate_loops = caps.enumerate_loops.max(budget);
    caps::check("distinguisher budget", budget, caps.canonical)?;
    for gamma in enumerate_rooted_graphs_with(budget, h.has_loops(), &caps)? {
        if separates(&gamma, h, x, y)? {
            return Ok(gamma);
        }
    }
    Err(Error::SearchExhausted { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::hom::{hom_count, rooted_hom_count};

    #[test]
    fn prefix_trivial_entries() {
        let h = spider(&[1, 2, 3]);
        let pre = lovasz_prefix(&h, 2, 3).unwrap();
        assert!(!pre.loops);
        // The null graph comes first, then K1.
        assert_eq!(pre.entries[0], (0, 1));
        assert_eq!(pre.entries[1], (1, 1));
        let pre3 = lovasz_prefix(&complete(3), 3, 2).unwrap();
        assert_eq!(pre3.entries[1].1, 0);
        let relabelled = h.relabel(&[3, 2, 1, 0, 6, 5, 4]);
        assert_eq!(lovasz_prefix(&relabelled, 2, 4).unwrap(), lovasz_prefix(&h, 2, 4).unwrap());
        assert!(lovasz_prefix(&looped_point(), 2, 3).unwrap().loops);
        assert_eq!(lovasz_prefix(&h, 4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn rooted_prefix_matches_counts() {
        let h = RootedGraph::new(edge_with_loop(), 1).unwrap();
        let pre = rooted_lovasz_prefix(&h, 3, 3).unwrap();
        let instances = enumerate_rooted_graphs_with(3, true, &Caps::current()).unwrap();
        for ((i, r), g) in pre.entries.iter().zip(&instances) {
            let exact = rooted_hom_count(g, &h).0;
            assert_eq!(num_bigint::BigUint::from(*r), exact % 3u32, "instance {i}");
        }
    }

    #[test]
    fn distinguish_examples() {
        assert_eq!(distinguish_targets(&path(1), &path(1), 2).unwrap(), None);
        let w = distinguish_targets(&Graph::empty(1), &Graph::empty(2), 3).unwrap();
        assert_eq!(w, Some(Graph::empty(1)));
        assert_eq!(
            distinguish_targets(&Graph::empty(1), &Graph::empty(2), 2),
            Err(Error::HasOrderPAutomorphism { p: 2 })
        );
        // The spider is the only asymmetric tree on 7 vertices, so compare it
        // with an involution-free unicyclic graph of the same order.
        let spider7 = spider(&[1, 2, 3]);
        let mut other = spider7.clone();
        other.add_edge(1, 2);
        assert!(find_order_p_automorphism(&other, 2).unwrap().is_none());
        let w = distinguish_targets(&spider7, &other, 2).unwrap().unwrap();
        assert!(w.n() <= 7);
        assert_ne!(hom_count(&w, &spider7).is_odd(), hom_count(&w, &other).is_odd());
    }

    #[test]
    fn spider_leaf_distinguisher_is_rooted_p3() {
        let h = spider(&[1, 2, 3]);
        let gamma = find_distinguisher(&h, 1, 3).unwrap();
        assert_eq!(gamma, rooted_path(2));
        let walks = |x| rooted_hom_count(&gamma, &RootedGraph::new(h.clone(), x).unwrap());
        assert_eq!(walks(1), 3u64.into());
        assert_eq!(walks(3), 2u64.into());
    }

    #[test]
    fn distinguishers_verify_on_every_pair() {
        let h = spider(&[1, 2, 3]);
        for x in 0..7 {
            for y in 0..7 {
                if x == y {
                    assert_eq!(find_distinguisher(&h, x, y), Err(Error::SameOrbit { x, y }));
                    continue;
                }
                let gamma = find_distinguisher(&h, x, y).unwrap();
                assert!(gamma.graph().n() <= 8);
                assert!(separates(&gamma, &h, x, y).unwrap());
            }
        }
        assert_eq!(find_distinguisher(&path(3), 0, 1), Err(Error::HasOrderPAutomorphism { p: 2 }));
    }
}
