//! Trees and forests as targets: structure of involution-free trees, the
//! independent-set reduction through `G*`, and the classifier.

use alloc::vec::Vec;

use crate::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::gadgets::{brute_pin_two, CountingOracle, PinningKit};
use crate::gf2::Gf2Matrix;
use crate::graph::{named, Graph, RootedGraph};
use crate::hom::HomCount;
use crate::stretch::{build_gstar, GStarGraph};
use crate::symmetry::{find_order_p_automorphism, is_asymmetric, reduced_form, ReductionTrace};

fn check_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Vertices of degree 2 with a leaf neighbour.
pub fn degree2_leaf_neighbours(t: &Graph) -> Result<Vec<usize>> {
    check_tree(t)?;
    Ok((0..t.n())
        .filter(|&v| t.degree(v) == 2 && t.neighbors(v).any(|w| t.degree(w) == 1))
        .collect())
}

pub fn is_asymmetric_tree(t: &Graph) -> Result<bool> {
    check_tree(t)?;
    is_asymmetric(t)
}

/// Endpoints and path for the reduction: `e0` has degree 2 and a leaf
/// neighbour, `ek` has even degree, and every interior vertex of the path
/// between them has odd degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorSelection {
    pub e0: usize,
    pub ek: usize,
    pub k: usize,
    /// `e0, o_1, ..., o_{k-1}, ek`.
    pub path: Vec<usize>,
}

impl AnchorSelection {
    pub fn validate(&self, t: &Graph) -> Result<()> {
        let bad = |why: &str| Err(Error::VerificationFailed(alloc::format!("invalid anchors: {why}")));
        if self.e0 >= t.n() || self.ek >= t.n() || self.e0 == self.ek {
            return bad("endpoints");
        }
        if t.degree(self.e0) != 2 || !t.neighbors(self.e0).any(|w| t.degree(w) == 1) {
            return bad("e0 is not a degree-2 leaf neighbour");
        }
        if t.degree(self.ek) % 2 != 0 {
            return bad("ek has odd degree");
        }
        if t.shortest_path(self.e0, self.ek).as_ref() != Some(&self.path) || self.path.len() != self.k + 1 {
            return bad("path");
        }
        if self.path[1..self.k].iter().any(|&v| t.degree(v) % 2 == 0) {
            return bad("even interior vertex");
        }
        Ok(())
    }
}

/// `e0` is the lowest-indexed degree-2 leaf neighbour; `ek` the nearest
/// other even-degree vertex, lowest index among the nearest.
pub fn select_anchors(t: &Graph) -> Result<AnchorSelection> {
    check_tree(t)?;
    if t.n() < 2 || find_order_p_automorphism(t, 2)?.is_some() {
        return Err(Error::HasOrderPAutomorphism { p: 2 });
    }
    let e0 = *degree2_leaf_neighbours(t)?.first().ok_or(Error::HasOrderPAutomorphism { p: 2 })?;
    let dist = t.distances_from(e0);
    let ek = (0..t.n())
        .filter(|&v| v != e0 && t.degree(v) % 2 == 0)
        .min_by_key(|&v| (dist[v], v))
        .ok_or(Error::HasOrderPAutomorphism { p: 2 })?;
    let path = t.shortest_path(e0, ek).expect("trees are connected");
    let sel = AnchorSelection { e0, ek, k: path.len() - 1, path };
    sel.validate(t)?;
    Ok(sel)
}

/// True iff an even number of neighbours `v` of the vertex after `e0` on the
/// path have an odd number of length-`k` walks from `v` to `ek`.
pub fn verify_walk_parity(t: &Graph, sel: &AnchorSelection) -> Result<bool> {
    check_tree(t)?;
    sel.validate(t)?;
    let ak = Gf2Matrix::adjacency(t).pow(sel.k);
    let v1 = sel.path[1];
    let odd = t.neighbors(v1).filter(|&v| ak.get(v, sel.ek)).count();
    Ok(odd % 2 == 0)
}

/// How `reduce_indset` evaluates the doubly pinned parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PinRoute {
    /// Gadget sums and an unrestricted parity oracle.
    Gadgets,
    /// Direct restricted counting.
    BruteForce,
}

/// Builds `G*` for `g` with the path length chosen by [`select_anchors`] and
/// returns the parity of `t`-colourings of `G*` with `R -> e0` and `B -> ek`.
/// That parity equals the parity of the number of independent sets of `g`.
pub fn reduce_indset(g: &Graph, t: &Graph, route: PinRoute) -> Result<(GStarGraph, bool)> {
    let kit = match route {
        PinRoute::Gadgets => Some(PinningKit::new(t)?),
        PinRoute::BruteForce => None,
    };
    reduce_indset_with(g, t, &select_anchors(t)?, kit.as_ref())
}

/// As [`reduce_indset`] with precomputed anchors, and a pinning kit for `t`
/// when the gadget route is wanted.
pub fn reduce_indset_with(
    g: &Graph,
    t: &Graph,
    sel: &AnchorSelection,
    kit: Option<&PinningKit>,
) -> Result<(GStarGraph, bool)> {
    let gs = build_gstar(g, sel.k)?;
    let bit = match kit {
        Some(kit) => kit.pin_two(&gs.graph, gs.r, gs.b, &[sel.e0], &[sel.ek], &mut CountingOracle)?,
        None => brute_pin_two(&gs.graph, gs.r, gs.b, &[sel.e0], &[sel.ek], t),
    };
    Ok((gs, bit))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    PolynomialTime,
    ParityPComplete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardComponent {
    /// Vertices of the reduced form making up the component.
    pub vertices: Vec<usize>,
    /// Anchors, in the reduced form's numbering.
    pub anchors: AnchorSelection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyVerdict {
    pub verdict: Verdict,
    pub trace: ReductionTrace,
    pub witness: Option<HardComponent>,
}

/// Classifies parity colouring by the forest `f`: easy when reducing by
/// involutions leaves at most one vertex, hard otherwise. A hard verdict
/// carries the first component of the reduced form with more than one vertex.
pub fn classify(f: &Graph) -> Result<DichotomyVerdict> {
    if f.has_loops() || !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let trace = reduced_form(f, 2)?;
    let reduced = trace.final_graph();
    if reduced.n() <= 1 {
        return Ok(DichotomyVerdict { verdict: Verdict::PolynomialTime, trace, witness: None });
    }
    let vertices = reduced
        .components()
        .into_iter()
        .find(|c| c.len() > 1)
        .ok_or_else(|| Error::VerificationFailed("reduced forest has no nontrivial component".into()))?;
    let sub = reduced.induced_subgraph(&vertices);
    let local = select_anchors(&sub)?;
    let anchors = AnchorSelection {
        e0: vertices[local.e0],
        ek: vertices[local.ek],
        k: local.k,
        path: local.path.iter().map(|&v| vertices[v]).collect(),
    };
    Ok(DichotomyVerdict { verdict: Verdict::ParityPComplete, trace, witness: Some(HardComponent { vertices, anchors }) })
}

/// Closed-form counts for the four targets with at most one vertex per
/// component after reduction: the null graph, `K1`, the looped vertex, and a
/// looped vertex beside an unlooped one.
pub fn easy_target_count(g: &Graph, h: &Graph) -> Result<HomCount> {
    let one = |b: bool| HomCount::from(u64::from(b));
    if h.is_null() {
        return Ok(one(g.is_null()));
    }
    if are_isomorphic(h, &Graph::empty(1))? {
        return Ok(one(g.is_edgeless()));
    }
    if are_isomorphic(h, &named::looped_point())? {
        return Ok(one(true));
    }
    if are_isomorphic(h, &named::loop_plus_point())? {
        let isolated = g.isolated_vertices().len();
        return Ok(HomCount(num_bigint::BigUint::from(1u32) << isolated));
    }
    Err(Error::NotAnEasyTarget)
}

/// Parity of `h`-colourings of the connected graph `g` that only use colours
/// from the component `comp` of `h`, by pinning one vertex of `g` to each
/// orbit inside `comp` in turn.
pub fn component_restricted_parity(g: &Graph, h: &Graph, comp: &[usize]) -> Result<bool> {
    component_restricted_parity_with(g, &PinningKit::new(h)?, comp)
}

pub fn component_restricted_parity_with(g: &Graph, kit: &PinningKit, comp: &[usize]) -> Result<bool> {
    if g.is_null() || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let h = kit.target();
    let mut sorted = comp.to_vec();
    sorted.sort_unstable();
    if !h.components().contains(&sorted) {
        return Err(Error::NotAComponent);
    }
    let rooted = RootedGraph::new(g.clone(), 0)?;
    let mut acc = false;
    for orbit in kit.orbits().orbits() {
        if sorted.binary_search(&orbit[0]).is_ok() {
            acc ^= kit.pin_one(&rooted, orbit, &mut CountingOracle)?;
        }
    }
    Ok(acc)
}
