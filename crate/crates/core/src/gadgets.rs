//! Gadget vectors, formal GF(2) sums of rooted graphs, the standard-basis
//! construction, and pinning through an unrestricted parity oracle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{rooted_canonical_form, RootedCanonicalCode};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gf2::{GadgetVector, Gf2Matrix};
use crate::graph::{attach, Graph, RootedGraph};
use crate::hom::{hom_mod_where, hom_parity, rooted_hom_parity};
use crate::lovasz::find_distinguisher;
use crate::symmetry::{find_order_p_automorphism, orbits, OrbitPartition};

pub use crate::gf2::{vec_add, vec_mul};

/// `v_H(gamma)`: bit `i` is the parity of `hom(gamma, (h, i))`.
pub fn gadget_vector(gamma: &RootedGraph, h: &Graph) -> GadgetVector {
    GadgetVector::from_bits(
        (0..h.n())
            .map(|c| rooted_hom_parity(gamma, &RootedGraph::new(h.clone(), c).expect("in range")))
            .collect(),
    )
}

/// One bit per orbit. Fails if `v` is not constant on some orbit.
pub fn collapse_by_orbits(v: &GadgetVector, orbits: &OrbitPartition) -> Result<GadgetVector> {
    let n = orbits.partition().n();
    if v.len() != n {
        return Err(Error::LengthMismatch { left: v.len(), right: n });
    }
    let mut out = Vec::with_capacity(orbits.len());
    for orbit in orbits.orbits() {
        let b = v.get(orbit[0]);
        if orbit.iter().any(|&c| v.get(c) != b) {
            return Err(Error::NotOrbitConstant { orbit: orbit.clone() });
        }
        out.push(b);
    }
    Ok(GadgetVector::from_bits(out))
}

/// Inverse of [`collapse_by_orbits`].
pub fn expand_from_orbits(v: &GadgetVector, orbits: &OrbitPartition) -> Result<GadgetVector> {
    if v.len() != orbits.len() {
        return Err(Error::LengthMismatch { left: v.len(), right: orbits.len() });
    }
    let n = orbits.partition().n();
    Ok(GadgetVector::from_bits((0..n).map(|c| v.get(orbits.orbit_of(c))).collect()))
}

/// Characteristic vector of a vertex set.
pub fn indicator(n: usize, set: &[usize]) -> GadgetVector {
    let mut v = GadgetVector::zeros(n);
    for &c in set {
        v.set(c, true);
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum TermKey {
    Canonical(RootedCanonicalCode),
    /// Terms too large to canonicalise cancel only against identical copies.
    Raw(RootedGraph),
}

/// A formal sum of rooted graphs with coefficients in GF(2).
///
/// Terms are normalised to their canonical rooted form, so isomorphic terms
/// cancel in pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GadgetSum {
    terms: BTreeMap<TermKey, RootedGraph>,
}

fn normalise(gamma: &RootedGraph) -> Result<(TermKey, RootedGraph)> {
    if gamma.graph().n() <= Caps::current().canonical {
        let code = rooted_canonical_form(gamma)?;
        let rep = code.to_rooted_graph();
        Ok((TermKey::Canonical(code), rep))
    } else {
        Ok((TermKey::Raw(gamma.clone()), gamma.clone()))
    }
}

impl GadgetSum {
    pub fn zero() -> GadgetSum {
        GadgetSum::default()
    }

    pub fn single(gamma: &RootedGraph) -> Result<GadgetSum> {
        let mut s = GadgetSum::zero();
        s.toggle(gamma)?;
        Ok(s)
    }

    /// Adds one copy of `gamma`.
    pub fn toggle(&mut self, gamma: &RootedGraph) -> Result<()> {
        let (key, rep) = normalise(gamma)?;
        self.toggle_key(key, rep);
        Ok(())
    }

    fn toggle_key(&mut self, key: TermKey, rep: RootedGraph) {
        if self.terms.remove(&key).is_none() {
            self.terms.insert(key, rep);
        }
    }

    pub fn from_terms<'a>(terms: impl IntoIterator<Item = &'a RootedGraph>) -> Result<GadgetSum> {
        let mut s = GadgetSum::zero();
        for t in terms {
            s.toggle(t)?;
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &RootedGraph> + '_ {
        self.terms.values()
    }

    /// Sum in GF(2): shared terms cancel.
    pub fn add(&self, other: &GadgetSum) -> GadgetSum {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.toggle_key(k.clone(), v.clone());
        }
        out
    }
}

pub fn sum_vector(s: &GadgetSum, h: &Graph) -> GadgetVector {
    s.terms().fold(GadgetVector::zeros(h.n()), |acc, t| {
        acc.add(&gadget_vector(t, h)).expect("same length")
    })
}

/// All pairwise root joins, reduced mod 2.
pub fn product_of_sums(s1: &GadgetSum, s2: &GadgetSum) -> Result<GadgetSum> {
    let mut out = GadgetSum::zero();
    for a in s1.terms() {
        for b in s2.terms() {
            out.toggle(&a.join(b))?;
        }
    }
    Ok(out)
}

/// Addition and multiplication on the values an expression is evaluated
/// over.
pub trait Gf2Algebra {
    type Elem: Clone;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
}

/// Coordinatewise operations on vectors.
pub struct Vectors;

impl Gf2Algebra for Vectors {
    type Elem = GadgetVector;
    fn add(&self, a: &GadgetVector, b: &GadgetVector) -> Result<GadgetVector> {
        a.add(b)
    }
    fn mul(&self, a: &GadgetVector, b: &GadgetVector) -> Result<GadgetVector> {
        a.mul(b)
    }
}

/// Formal sums, with multiplication by root joins.
pub struct Sums;

impl Gf2Algebra for Sums {
    type Elem = GadgetSum;
    fn add(&self, a: &GadgetSum, b: &GadgetSum) -> Result<GadgetSum> {
        Ok(a.add(b))
    }
    fn mul(&self, a: &GadgetSum, b: &GadgetSum) -> Result<GadgetSum> {
        product_of_sums(a, b)
    }
}

/// A node of an expression over generator indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisExpression {
    Gen(usize),
    Add(usize, usize),
    Mul(usize, usize),
}

/// Expressions for the standard basis vectors, stored as a shared DAG whose
/// children always precede their parents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    nodes: Vec<BasisExpression>,
    basis: Vec<usize>,
}

impl Basis {
    pub fn nodes(&self) -> &[BasisExpression] {
        &self.nodes
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Root node of the expression for `e_i`.
    pub fn root(&self, i: usize) -> usize {
        self.basis[i]
    }

    /// The expression for `e_i` written out, generators as `g0, g1, ...`.
    pub fn render(&self, i: usize) -> String {
        self.render_node(self.basis[i])
    }

    fn render_node(&self, id: usize) -> String {
        match self.nodes[id] {
            BasisExpression::Gen(g) => format!("g{g}"),
            BasisExpression::Add(a, b) => format!("({} + {})", self.render_node(a), self.render_node(b)),
            BasisExpression::Mul(a, b) => format!("({} * {})", self.render_node(a), self.render_node(b)),
        }
    }

    /// Evaluates the expressions for the coordinates in `which`, sharing
    /// common subexpressions.
    pub fn evaluate<A: Gf2Algebra>(
        &self,
        alg: &A,
        gens: &[A::Elem],
        which: &[usize],
    ) -> Result<Vec<A::Elem>> {
        let mut needed = vec![false; self.nodes.len()];
        let mut stack: Vec<usize> = which.iter().map(|&i| self.basis[i]).collect();
        while let Some(id) = stack.pop() {
            if needed[id] {
                continue;
            }
            needed[id] = true;
            if let BasisExpression::Add(a, b) | BasisExpression::Mul(a, b) = self.nodes[id] {
                stack.push(a);
                stack.push(b);
            }
        }
        let mut values: Vec<Option<A::Elem>> = vec![None; self.nodes.len()];
        for id in 0..self.nodes.len() {
            if !needed[id] {
                continue;
            }
            let v = match self.nodes[id] {
                BasisExpression::Gen(g) => gens[g].clone(),
                BasisExpression::Add(a, b) => alg.add(values[a].as_ref().unwrap(), values[b].as_ref().unwrap())?,
                BasisExpression::Mul(a, b) => alg.mul(values[a].as_ref().unwrap(), values[b].as_ref().unwrap())?,
            };
            values[id] = Some(v);
        }
        Ok(which.iter().map(|&i| values[self.basis[i]].clone().unwrap()).collect())
    }
}

struct Builder<'a> {
    gens: &'a [GadgetVector],
    nodes: Vec<BasisExpression>,
    gen_nodes: Vec<Option<usize>>,
}

impl Builder<'_> {
    fn gen(&mut self, g: usize) -> (usize, GadgetVector) {
        let id = *self.gen_nodes[g].get_or_insert_with(|| {
            self.nodes.push(BasisExpression::Gen(g));
            self.nodes.len() - 1
        });
        (id, self.gens[g].clone())
    }

    fn add(&mut self, a: &(usize, GadgetVector), b: &(usize, GadgetVector)) -> (usize, GadgetVector) {
        self.nodes.push(BasisExpression::Add(a.0, b.0));
        (self.nodes.len() - 1, a.1.add(&b.1).expect("same length"))
    }

    fn mul(&mut self, a: &(usize, GadgetVector), b: &(usize, GadgetVector)) -> (usize, GadgetVector) {
        self.nodes.push(BasisExpression::Mul(a.0, b.0));
        (self.nodes.len() - 1, a.1.mul(&b.1).expect("same length"))
    }

    /// Replaces `e[i]` by a generator whose first `m` coordinates already
    /// form the unit vector `e_i`, when one exists.
    fn shortcut(&mut self, e: &mut [(usize, GadgetVector)], m: usize) {
        for (i, slot) in e.iter_mut().enumerate() {
            let unit = GadgetVector::unit(m, i);
            if let Some(g) = self.gens.iter().position(|g| g.prefix(m) == unit.bits()) {
                *slot = self.gen(g);
            }
        }
    }
}

/// Expressions over `gens` for every standard basis vector.
///
/// Requires the all-ones vector among the generators and, for every pair of
/// coordinates, a generator that differs on them. Coordinates are added one
/// at a time; the new coordinate is handled according to how many of the
/// current expressions have a 1 there (none, at least two, or exactly one).
/// Whenever a generator already equals some `e_i` on the coordinates handled
/// so far it is used directly.
pub fn basis_from_generators(gens: &[GadgetVector]) -> Result<Basis> {
    let n = gens.first().map_or(0, GadgetVector::len);
    if let Some(g) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::LengthMismatch { left: n, right: g.len() });
    }
    if n == 0 {
        return Ok(Basis { nodes: Vec::new(), basis: Vec::new() });
    }
    let ones = gens.iter().position(GadgetVector::is_ones).ok_or(Error::MissingAllOnes)?;
    for i in 0..n {
        for j in i + 1..n {
            if !gens.iter().any(|g| g.get(i) != g.get(j)) {
                return Err(Error::InseparablePair { i, j });
            }
        }
    }
    let mut b = Builder { gens, nodes: Vec::new(), gen_nodes: vec![None; gens.len()] };
    let first = gens.iter().position(|g| g.get(0)).expect("all-ones exists");
    let mut e = vec![b.gen(first)];
    b.shortcut(&mut e, 1);
    for m in 2..=n {
        let t = m - 1;
        b.shortcut(&mut e, m);
        let trailing: Vec<usize> = (0..t).filter(|&i| e[i].1.get(t)).collect();
        match trailing.as_slice() {
            [] => {
                let mut acc = b.gen(ones);
                for ei in e.clone() {
                    acc = b.add(&acc, &ei);
                }
                e.push(acc);
            }
            [i] => {
                let i = *i;
                let s = gens.iter().position(|g| g.get(i) != g.get(t)).expect("checked separable");
                let sg = b.gen(s);
                let w = b.mul(&e[i], &sg);
                if gens[s].get(i) {
                    let et = b.add(&e[i], &w);
                    e[i] = w;
                    e.push(et);
                } else {
                    e[i] = b.add(&e[i], &w);
                    e.push(w);
                }
            }
            [i, j, ..] => {
                let et = b.mul(&e[*i], &e[*j]);
                for &m in &trailing {
                    e[m] = b.add(&e[m], &et);
                }
                e.push(et);
            }
        }
        b.shortcut(&mut e, m);
    }
    debug_assert!(e.iter().enumerate().all(|(i, (_, v))| *v == GadgetVector::unit(n, i)));
    Ok(Basis { nodes: b.nodes, basis: e.into_iter().map(|(id, _)| id).collect() })
}

/// An unrestricted parity counter for the fixed target: returns the parity of
/// `hom(g, h)`.
pub trait ParityOracle {
    fn parity(&mut self, g: &Graph, h: &Graph) -> bool;
}

impl<F: FnMut(&Graph, &Graph) -> bool> ParityOracle for F {
    fn parity(&mut self, g: &Graph, h: &Graph) -> bool {
        self(g, h)
    }
}

/// The oracle backed by [`hom_parity`].
#[derive(Clone, Copy, Debug, Default)]
pub struct CountingOracle;

impl ParityOracle for CountingOracle {
    fn parity(&mut self, g: &Graph, h: &Graph) -> bool {
        hom_parity(g, h)
    }
}

/// Gadget sums implementing every orbit's characteristic vector for one
/// involution-free target, computed once and reused across pinning queries.
#[derive(Clone, Debug)]
pub struct PinningKit {
    h: Graph,
    orbits: OrbitPartition,
    generators: Vec<RootedGraph>,
    basis: Basis,
    sums: Vec<GadgetSum>,
}

impl PinningKit {
    pub fn new(h: &Graph) -> Result<PinningKit> {
        if find_order_p_automorphism(h, 2)?.is_some() {
            return Err(Error::HasOrderPAutomorphism { p: 2 });
        }
        let orbits = orbits(h)?;
        let reps: Vec<usize> = orbits.orbits().iter().map(|o| o[0]).collect();
        let mut generators = vec![RootedGraph::point()];
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                generators.push(find_distinguisher(h, reps[a], reps[b])?);
            }
        }
        let vectors = generators
            .iter()
            .map(|g| collapse_by_orbits(&gadget_vector(g, h), &orbits))
            .collect::<Result<Vec<_>>>()?;
        let basis = basis_from_generators(&vectors)?;
        let gen_sums = generators.iter().map(GadgetSum::single).collect::<Result<Vec<_>>>()?;
        let all: Vec<usize> = (0..orbits.len()).collect();
        let sums = basis.evaluate(&Sums, &gen_sums, &all)?;
        for (i, s) in sums.iter().enumerate() {
            if sum_vector(s, h) != indicator(h.n(), &orbits.orbits()[i]) {
                return Err(Error::VerificationFailed(format!("orbit {i} vector mismatch")));
            }
        }
        Ok(PinningKit { h: h.clone(), orbits, generators, basis, sums })
    }

    pub fn target(&self) -> &Graph {
        &self.h
    }

    pub fn orbits(&self) -> &OrbitPartition {
        &self.orbits
    }

    /// The rooted K1 followed by one distinguisher per pair of orbits.
    pub fn generators(&self) -> &[RootedGraph] {
        &self.generators
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn orbit_index(&self, orbit: &[usize]) -> Result<usize> {
        self.orbits.index_of(orbit).ok_or(Error::NotAnOrbit)
    }

    /// The sum implementing the characteristic vector of `orbit`.
    pub fn sum_for(&self, orbit: &[usize]) -> Result<&GadgetSum> {
        Ok(&self.sums[self.orbit_index(orbit)?])
    }

    pub fn sum_for_index(&self, i: usize) -> &GadgetSum {
        &self.sums[i]
    }

    /// Parity of colourings of `g` whose root gets a colour in `orbit`, with
    /// one oracle call per term of the orbit's gadget sum.
    pub fn pin_one(&self, g: &RootedGraph, orbit: &[usize], oracle: &mut impl ParityOracle) -> Result<bool> {
        let sum = self.sum_for(orbit)?;
        Ok(sum.terms().fold(false, |acc, gamma| acc ^ oracle.parity(g.join(gamma).graph(), &self.h)))
    }

    /// Parity of colourings of `g` with `x` in `orbit_x` and `y` in
    /// `orbit_y`, with one oracle call per pair of terms.
    pub fn pin_two(
        &self,
        g: &Graph,
        x: usize,
        y: usize,
        orbit_x: &[usize],
        orbit_y: &[usize],
        oracle: &mut impl ParityOracle,
    ) -> Result<bool> {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex);
        }
        let sx = self.sum_for(orbit_x)?;
        let sy = self.sum_for(orbit_y)?;
        let mut acc = false;
        for gx in sx.terms() {
            let with_x = attach(g, x, gx);
            for gy in sy.terms() {
                acc ^= oracle.parity(&attach(&with_x, y, gy), &self.h);
            }
        }
        Ok(acc)
    }
}

pub fn implement_orbit_vector(h: &Graph, orbit: &[usize]) -> Result<GadgetSum> {
    Ok(PinningKit::new(h)?.sum_for(orbit)?.clone())
}

pub fn pin_one_parity(
    g: &RootedGraph,
    orbit: &[usize],
    h: &Graph,
    oracle: &mut impl ParityOracle,
) -> Result<bool> {
    PinningKit::new(h)?.pin_one(g, orbit, oracle)
}

#[allow(clippy::too_many_arguments)]
pub fn pin_two_parity(
    g: &Graph,
    x: usize,
    y: usize,
    orbit_x: &[usize],
    orbit_y: &[usize],
    h: &Graph,
    oracle: &mut impl ParityOracle,
) -> Result<bool> {
    PinningKit::new(h)?.pin_two(g, x, y, orbit_x, orbit_y, oracle)
}

/// Brute-force parity of colourings of `g` whose root gets a colour in `set`.
pub fn brute_pin_one(g: &RootedGraph, set: &[usize], h: &Graph) -> bool {
    let root = g.root();
    let mask = indicator(h.n(), set);
    hom_mod_where(g.graph(), h, 2, |v, c| v != root || mask.get(c)).expect("modulus 2").r == 1
}

/// Brute-force parity with `x` coloured from `set_x` and `y` from `set_y`.
pub fn brute_pin_two(g: &Graph, x: usize, y: usize, set_x: &[usize], set_y: &[usize], h: &Graph) -> bool {
    let (mx, my) = (indicator(h.n(), set_x), indicator(h.n(), set_y));
    hom_mod_where(g, h, 2, |v, c| (v != x || mx.get(c)) && (v != y || my.get(c))).expect("modulus 2").r == 1
}

/// `A[i][j]`: parity of colourings of `g` with `x -> i` and `y -> j`.
pub type PinMatrix = Gf2Matrix;

pub fn pin_matrix(g: &Graph, x: usize, y: usize, h: &Graph) -> PinMatrix {
    let mut a = Gf2Matrix::zeros(h.n());
    for i in 0..h.n() {
        for j in 0..h.n() {
            a.set(i, j, brute_pin_two(g, x, y, &[i], &[j], h));
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::lovasz::rooted_path;

    fn v(s: &str) -> GadgetVector {
        GadgetVector::from_str_bits(s)
    }

    #[test]
    fn gadget_vector_examples() {
        let s = spider(&[1, 2, 3]);
        assert!(gadget_vector(&RootedGraph::point(), &s).is_ones());
        assert_eq!(gadget_vector(&rooted_path(1), &s), v("1101001"));
        let tri = RootedGraph::new(complete(3), 0).unwrap();
        assert!(gadget_vector(&tri, &s).is_zero());
    }

    #[test]
    fn collapse_round_trip() {
        let p = path(4);
        let o = orbits(&p).unwrap();
        let full = gadget_vector(&rooted_path(1), &p);
        let c = collapse_by_orbits(&full, &o).unwrap();
        assert_eq!(c, v("10"));
        assert_eq!(expand_from_orbits(&c, &o).unwrap(), full);
        assert_eq!(collapse_by_orbits(&v("1000"), &o), Err(Error::NotOrbitConstant { orbit: vec![0, 3] }));
    }

    #[test]
    fn sums_cancel_and_multiply() {
        let h = spider(&[1, 2, 3]);
        assert!(sum_vector(&GadgetSum::zero(), &h).is_zero());
        let e = rooted_path(1);
        let twice = GadgetSum::from_terms([&e, &e]).unwrap();
        assert!(twice.is_empty());
        // Isomorphic but differently labelled terms also cancel.
        let other = RootedGraph::new(Graph::from_edges(2, &[(0, 1)]).unwrap(), 1).unwrap();
        assert!(GadgetSum::from_terms([&e, &other]).unwrap().is_empty());
        let one = GadgetSum::single(&RootedGraph::point()).unwrap();
        let s = GadgetSum::from_terms([&e, &rooted_path(2)]).unwrap();
        let prod = product_of_sums(&s, &one).unwrap();
        assert_eq!(sum_vector(&prod, &h), sum_vector(&s, &h));
        let joined = product_of_sums(&GadgetSum::single(&e).unwrap(), &GadgetSum::single(&e).unwrap()).unwrap();
        assert_eq!(joined.len(), 1);
        assert_eq!(sum_vector(&joined, &h), vec_mul(&gadget_vector(&e, &h), &gadget_vector(&e, &h)).unwrap());
    }

    #[test]
    fn basis_worked_cases() {
        let b = basis_from_generators(&[v("1")]).unwrap();
        assert_eq!(b.render(0), "g0");

        let gens = [v("11"), v("10")];
        let b = basis_from_generators(&gens).unwrap();
        assert_eq!(b.render(0), "g1");
        assert_eq!(b.render(1), "(g0 + g1)");

        let gens = [v("111"), v("101"), v("011")];
        let b = basis_from_generators(&gens).unwrap();
        assert_eq!(b.render(2), "(g1 * g2)");
        assert_eq!(b.render(0), "(g1 + (g1 * g2))");
        assert_eq!(b.render(1), "(g2 + (g1 * g2))");
        let vals = b.evaluate(&Vectors, &gens, &[0, 1, 2]).unwrap();
        assert_eq!(vals, vec![v("100"), v("010"), v("001")]);
    }

    #[test]
    fn basis_preconditions() {
        assert_eq!(basis_from_generators(&[v("10"), v("01")]), Err(Error::MissingAllOnes));
        assert_eq!(basis_from_generators(&[v("111"), v("110")]), Err(Error::InseparablePair { i: 0, j: 1 }));
        assert_eq!(
            basis_from_generators(&[v("11"), v("1")]),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
        assert!(basis_from_generators(&[]).unwrap().is_empty());
    }

    #[test]
    fn orbit_vectors_for_small_targets() {
        let k1 = implement_orbit_vector(&Graph::empty(1), &[0]).unwrap();
        assert_eq!(k1, GadgetSum::single(&RootedGraph::point()).unwrap());
        let s = spider(&[1, 2, 3]);
        let centre = implement_orbit_vector(&s, &[0]).unwrap();
        assert_eq!(sum_vector(&centre, &s), GadgetVector::unit(7, 0));
        let h1 = edge_with_loop();
        let looped = implement_orbit_vector(&h1, &[1]).unwrap();
        assert_eq!(sum_vector(&looped, &h1), v("01"));
        assert_eq!(implement_orbit_vector(&path(3), &[1]), Err(Error::HasOrderPAutomorphism { p: 2 }));
        assert_eq!(implement_orbit_vector(&s, &[0, 1]), Err(Error::NotAnOrbit));
    }

    #[test]
    fn pin_examples() {
        let h1 = edge_with_loop();
        let mut oracle = CountingOracle;
        assert!(pin_one_parity(&RootedGraph::point(), &[0], &h1, &mut oracle).unwrap());
        let k2 = RootedGraph::new(complete(2), 0).unwrap();
        assert!(pin_one_parity(&k2, &[0], &h1, &mut oracle).unwrap());
        let looped = RootedGraph::new(looped_point(), 0).unwrap();
        assert!(!pin_one_parity(&looped, &[0], &h1, &mut oracle).unwrap());

        let s = spider(&[1, 2, 3]);
        let kit = PinningKit::new(&s).unwrap();
        assert!(kit.pin_two(&Graph::empty(2), 0, 1, &[3], &[5], &mut oracle).unwrap());
        assert!(kit.pin_two(&complete(2), 0, 1, &[0], &[1], &mut oracle).unwrap());
        assert!(!kit.pin_two(&complete(2), 0, 1, &[1], &[2], &mut oracle).unwrap());
        assert_eq!(kit.pin_two(&complete(2), 0, 0, &[0], &[1], &mut oracle), Err(Error::SameVertex));
    }

    #[test]
    fn oracle_calls_match_term_count() {
        let s = spider(&[1, 2, 3]);
        let kit = PinningKit::new(&s).unwrap();
        let g = RootedGraph::new(path(3), 1).unwrap();
        for c in 0..7 {
            let mut calls = 0;
            let mut spy = |g: &Graph, h: &Graph| {
                calls += 1;
                hom_parity(g, h)
            };
            let bit = kit.pin_one(&g, &[c], &mut spy).unwrap();
            assert_eq!(calls, kit.sum_for(&[c]).unwrap().len());
            assert_eq!(bit, brute_pin_one(&g, &[c], &s));
        }
    }

    #[test]
    fn pin_matrix_bilinear_form() {
        let s = spider(&[1, 2, 3]);
        let g = path(4);
        let a = pin_matrix(&g, 0, 3, &s);
        let total = (0..7).flat_map(|i| (0..7).map(move |j| (i, j))).filter(|&(i, j)| a.get(i, j)).count() % 2 == 1;
        assert_eq!(total, hom_parity(&g, &s));
        let u = indicator(7, &[0]);
        let w = indicator(7, &[4]);
        assert_eq!(a.bilinear(&u, &w).unwrap(), brute_pin_two(&g, 0, 3, &[0], &[4], &s));
    }
}
