//! Homomorphism counting: exact, modular, pinned, rooted and injective.
//!
//! The main counter walks each connected component of the instance in a
//! connected vertex order. After a prefix of the order has been coloured, only
//! the colours of *frontier* vertices (placed vertices with an unplaced
//! neighbour) can influence the rest of the search, so partial colourings are
//! merged by frontier state and counted together. This is backtracking with
//! the subproblems shared; the cost is governed by the largest frontier
//! rather than by the number of homomorphisms.
//!
//! Injective counts cannot be merged this way and use plain backtracking.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use hashbrown::HashMap;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::caps::{self, Caps};
use crate::enumerate::set_partitions;
use crate::error::{Error, Result};
use crate::graph::{quotient, Graph, RootedGraph};

/// An exact homomorphism count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomCount(pub BigUint);

impl HomCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn residue(&self, k: u64) -> Result<Residue> {
        check_modulus(k)?;
        let r = (&self.0 % BigUint::from(k)).to_u64().unwrap_or(0);
        Ok(Residue { k, r })
    }

    pub fn is_odd(&self) -> bool {
        self.0.bit(0)
    }
}

impl From<u64> for HomCount {
    fn from(v: u64) -> Self {
        HomCount(BigUint::from(v))
    }
}

impl fmt::Display for HomCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A residue class `r mod k`, `0 <= r < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub k: u64,
    pub r: u64,
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.r, self.k)
    }
}

/// Instance vertices forced to specific target colours.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PinAssignment {
    pins: BTreeMap<usize, usize>,
}

impl PinAssignment {
    pub fn new() -> PinAssignment {
        PinAssignment::default()
    }

    pub fn pin(mut self, vertex: usize, colour: usize) -> PinAssignment {
        self.pins.insert(vertex, colour);
        self
    }

    pub fn insert(&mut self, vertex: usize, colour: usize) -> Option<usize> {
        self.pins.insert(vertex, colour)
    }

    pub fn get(&self, vertex: usize) -> Option<usize> {
        self.pins.get(&vertex).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pins.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.pins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pins.is_empty()
    }

    fn validate(&self, g: &Graph, h: &Graph) -> Result<()> {
        for (v, c) in self.iter() {
            g.check_vertex(v)?;
            h.check_vertex(c)?;
        }
        Ok(())
    }
}

fn check_modulus(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidModulus(k))
    } else {
        Ok(())
    }
}

/// Number of homomorphisms from `g` to `h`.
pub fn hom_count(g: &Graph, h: &Graph) -> HomCount {
    HomCount(count(g, h, &|_, _| true, &Exact))
}

/// `hom(g, h) mod k`.
pub fn hom_mod(g: &Graph, h: &Graph, k: u64) -> Result<Residue> {
    check_modulus(k)?;
    Ok(Residue { k, r: count(g, h, &|_, _| true, &Modular(k)) })
}

/// Parity of `hom(g, h)`; the unrestricted mod-2 counting oracle.
pub fn hom_parity(g: &Graph, h: &Graph) -> bool {
    count(g, h, &|_, _| true, &Modular(2)) == 1
}

/// Homomorphisms extending `pins`.
pub fn pinned_hom_count(g: &Graph, h: &Graph, pins: &PinAssignment) -> Result<HomCount> {
    pins.validate(g, h)?;
    Ok(HomCount(count(g, h, &|v, c| pins.get(v).is_none_or(|p| p == c), &Exact)))
}

pub fn pinned_hom_mod(g: &Graph, h: &Graph, pins: &PinAssignment, k: u64) -> Result<Residue> {
    pins.validate(g, h)?;
    check_modulus(k)?;
    let r = count(g, h, &|v, c| pins.get(v).is_none_or(|p| p == c), &Modular(k));
    Ok(Residue { k, r })
}

/// Homomorphisms in which vertex `v` receives only colours `c` with
/// `allowed(v, c)`.
pub fn hom_count_where(g: &Graph, h: &Graph, allowed: impl Fn(usize, usize) -> bool) -> HomCount {
    HomCount(count(g, h, &allowed, &Exact))
}

pub fn hom_mod_where(
    g: &Graph,
    h: &Graph,
    k: u64,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<Residue> {
    check_modulus(k)?;
    Ok(Residue { k, r: count(g, h, &allowed, &Modular(k)) })
}

/// Homomorphisms of rooted graphs: the root of `g` must map to the root of `h`.
pub fn rooted_hom_count(g: &RootedGraph, h: &RootedGraph) -> HomCount {
    let (gr, hr) = (g.root(), h.root());
    HomCount(count(g.graph(), h.graph(), &|v, c| v != gr || c == hr, &Exact))
}

pub fn rooted_hom_parity(g: &RootedGraph, h: &RootedGraph) -> bool {
    let (gr, hr) = (g.root(), h.root());
    count(g.graph(), h.graph(), &|v, c| v != gr || c == hr, &Modular(2)) == 1
}

/// Number of injective homomorphisms from `g` to `h`.
pub fn inj_count(g: &Graph, h: &Graph) -> HomCount {
    HomCount(BigUint::from(injective(g, h, None)))
}

pub fn rooted_inj_count(g: &RootedGraph, h: &RootedGraph) -> HomCount {
    HomCount(BigUint::from(injective(g.graph(), h.graph(), Some((g.root(), h.root())))))
}

/// `hom(g, h)` recomputed as the sum of `inj(g / theta, h)` over every set
/// partition `theta` of `V(g)`, the discrete partition included.
pub fn hom_via_quotients(g: &Graph, h: &Graph) -> Result<HomCount> {
    caps::check("partition enumeration", g.n(), Caps::current().partitions)?;
    let mut total = BigUint::zero();
    for theta in set_partitions(g.n()) {
        let q = quotient(g, &theta)?;
        total += inj_count(&q, h).0;
    }
    Ok(HomCount(total))
}

/// Parity of the number of independent sets of a loop-free graph.
///
/// Computed by the branching recurrence `I(G) = I(G - v) + I(G - N[v])`,
/// independently of homomorphism counting.
pub fn indset_parity(g: &Graph) -> Result<bool> {
    if let Some(v) = (0..g.n()).find(|&v| g.has_loop(v)) {
        return Err(Error::LoopNotAllowed { vertex: v });
    }
    let alive = vec![true; g.n()];
    Ok(indset_parity_rec(g, alive))
}

fn indset_parity_rec(g: &Graph, alive: Vec<bool>) -> bool {
    // Branch on a live vertex of maximum live degree.
    let live_degree = |v: usize| g.neighbors(v).filter(|&w| alive[w]).count();
    let pick = (0..g.n()).filter(|&v| alive[v]).max_by_key(|&v| (live_degree(v), usize::MAX - v));
    match pick {
        None => true,
        Some(v) if live_degree(v) == 0 => false, // 2^m with m >= 1 is even
        Some(v) => {
            let mut without = alive.clone();
            without[v] = false;
            let mut closed = alive;
            closed[v] = false;
            for w in g.neighbors(v) {
                closed[w] = false;
            }
            indset_parity_rec(g, without) ^ indset_parity_rec(g, closed)
        }
    }
}

/// Accumulator arithmetic for the frontier counter.
trait Arith {
    type V: Clone;
    fn zero(&self) -> Self::V;
    fn one(&self) -> Self::V;
    fn add_assign(&self, a: &mut Self::V, b: &Self::V);
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn is_zero(&self, a: &Self::V) -> bool;
}

struct Exact;

impl Arith for Exact {
    type V = BigUint;
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add_assign(&self, a: &mut BigUint, b: &BigUint) {
        *a += b;
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
}

struct Modular(u64);

impl Arith for Modular {
    type V = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add_assign(&self, a: &mut u64, b: &u64) {
        *a = ((*a as u128 + *b as u128) % self.0 as u128) as u64;
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

fn count<A: Arith>(g: &Graph, h: &Graph, allowed: &dyn Fn(usize, usize) -> bool, arith: &A) -> A::V {
    // Candidate colours per vertex: pins, then the loop condition.
    let candidates: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let looped = g.has_loop(v);
            (0..h.n()).filter(|&c| allowed(v, c) && (!looped || h.has_loop(c))).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return arith.zero();
    }
    let mut total = arith.one();
    for comp in g.components() {
        let part = if comp.len() == 1 {
            let mut v = arith.zero();
            for _ in &candidates[comp[0]] {
                arith.add_assign(&mut v, &arith.one());
            }
            v
        } else {
            let plan = Plan::new(g, &comp);
            let bits = usize::BITS as usize - h.n().saturating_sub(1).leading_zeros() as usize;
            let bits = bits.max(1);
            if plan.slots * bits <= 128 {
                plan.run::<A, u128>(g, h, &candidates, arith, bits)
            } else {
                plan.run::<A, Vec<u32>>(g, h, &candidates, arith, bits)
            }
        };
        if arith.is_zero(&part) {
            return arith.zero();
        }
        total = arith.mul(&total, &part);
    }
    total
}

/// Packed colours of the frontier slots.
trait StateKey: Clone + Eq + Hash {
    fn blank(slots: usize) -> Self;
    fn get(&self, slot: usize, bits: usize) -> usize;
    fn set(&mut self, slot: usize, bits: usize, colour: usize);
}

impl StateKey for u128 {
    fn blank(_: usize) -> Self {
        0
    }
    #[inline]
    fn get(&self, slot: usize, bits: usize) -> usize {
        ((self >> (slot * bits)) & ((1u128 << bits) - 1)) as usize
    }
    #[inline]
    fn set(&mut self, slot: usize, bits: usize, colour: usize) {
        let mask = ((1u128 << bits) - 1) << (slot * bits);
        *self = (*self & !mask) | ((colour as u128) << (slot * bits));
    }
}

impl StateKey for Vec<u32> {
    fn blank(slots: usize) -> Self {
        vec![0; slots]
    }
    fn get(&self, slot: usize, _: usize) -> usize {
        self[slot] as usize
    }
    fn set(&mut self, slot: usize, _: usize, colour: usize) {
        self[slot] = colour as u32;
    }
}

/// Vertex order and frontier bookkeeping for one connected component.
struct Plan {
    steps: Vec<Step>,
    slots: usize,
}

struct Step {
    vertex: usize,
    /// Slot taken by `vertex` if it still has unplaced neighbours.
    slot: Option<usize>,
    /// Slots of already placed neighbours, for the adjacency checks.
    checks: Vec<usize>,
    /// Slots that fall out of the frontier after this step.
    released: Vec<usize>,
}

impl Plan {
    fn new(g: &Graph, comp: &[usize]) -> Plan {
        let n = g.n();
        let mut placed = vec![false; n];
        let mut in_comp = vec![false; n];
        for &v in comp {
            in_comp[v] = true;
        }
        // Unplaced neighbours (other than the vertex itself) per vertex.
        let mut pending: Vec<usize> = (0..n)
            .map(|v| if in_comp[v] { g.neighbors(v).filter(|&w| w != v).count() } else { 0 })
            .collect();
        let mut slot_of = vec![usize::MAX; n];
        let mut free: Vec<usize> = Vec::new();
        let mut slots = 0;
        let mut steps = Vec::with_capacity(comp.len());
        let mut touched = vec![false; n];

        let start = comp.iter().copied().min_by_key(|&v| (g.degree(v), v)).unwrap_or(0);
        let mut boundary: Vec<usize> = vec![start];
        touched[start] = true;

        while let Some(idx) = pick_next(g, &boundary, &placed, &pending) {
            let v = boundary.swap_remove(idx);
            placed[v] = true;
            let mut checks = Vec::new();
            let mut released = Vec::new();
            for w in g.neighbors(v) {
                if w == v {
                    continue;
                }
                if placed[w] {
                    checks.push(slot_of[w]);
                    pending[w] -= 1;
                    if pending[w] == 0 {
                        released.push(slot_of[w]);
                        free.push(slot_of[w]);
                    }
                } else if !touched[w] {
                    touched[w] = true;
                    boundary.push(w);
                }
            }
            let remaining = g.neighbors(v).filter(|&w| w != v && !placed[w]).count();
            pending[v] = remaining;
            let slot = if remaining > 0 {
                let s = free.pop().unwrap_or_else(|| {
                    slots += 1;
                    slots - 1
                });
                // A slot released in this very step is reused immediately.
                released.retain(|&r| r != s);
                slot_of[v] = s;
                Some(s)
            } else {
                None
            };
            steps.push(Step { vertex: v, slot, checks, released });
        }
        Plan { steps, slots }
    }

    fn run<A: Arith, K: StateKey>(
        &self,
        g: &Graph,
        h: &Graph,
        candidates: &[Vec<usize>],
        arith: &A,
        bits: usize,
    ) -> A::V {
        let _ = g;
        let mut states: HashMap<K, A::V> = HashMap::new();
        states.insert(K::blank(self.slots), arith.one());
        for step in &self.steps {
            let mut next: HashMap<K, A::V> = HashMap::with_capacity(states.len());
            for (key, value) in &states {
                for &c in &candidates[step.vertex] {
                    if !step.checks.iter().all(|&s| h.has_edge(key.get(s, bits), c)) {
                        continue;
                    }
                    let mut k2 = key.clone();
                    for &r in &step.released {
                        k2.set(r, bits, 0);
                    }
                    if let Some(s) = step.slot {
                        k2.set(s, bits, c);
                    }
                    match next.get_mut(&k2) {
                        Some(acc) => arith.add_assign(acc, value),
                        None => {
                            next.insert(k2, value.clone());
                        }
                    }
                }
            }
            next.retain(|_, v| !arith.is_zero(v));
            states = next;
            if states.is_empty() {
                return arith.zero();
            }
        }
        let mut total = arith.zero();
        for v in states.values() {
            arith.add_assign(&mut total, v);
        }
        total
    }
}

/// Chooses the boundary vertex whose placement keeps the frontier smallest.
fn pick_next(g: &Graph, boundary: &[usize], placed: &[bool], pending: &[usize]) -> Option<usize> {
    boundary
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| {
            let mut closes = 0usize;
            let mut placed_nbrs = 0usize;
            let mut opens = false;
            for w in g.neighbors(v) {
                if w == v {
                    continue;
                }
                if placed[w] {
                    placed_nbrs += 1;
                    if pending[w] == 1 {
                        closes += 1;
                    }
                } else {
                    opens = true;
                }
            }
            let growth = usize::from(opens) as isize - closes as isize;
            (growth, usize::MAX - placed_nbrs, v)
        })
        .map(|(i, _)| i)
}

fn injective(g: &Graph, h: &Graph, pin: Option<(usize, usize)>) -> u128 {
    if g.n() > h.n() {
        return 0;
    }
    // Order: pinned vertex first, then breadth-first within components.
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let starts = pin.map(|(v, _)| v).into_iter().chain(0..g.n());
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = alloc::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    inj_rec(g, h, &order, 0, &mut image, &mut used, pin)
}

fn inj_rec(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    pin: Option<(usize, usize)>,
) -> u128 {
    if depth == order.len() {
        return 1;
    }
    let v = order[depth];
    let mut total = 0;
    for c in 0..h.n() {
        if used[c] || pin.is_some_and(|(pv, pc)| pv == v && pc != c) {
            continue;
        }
        if g.has_loop(v) && !h.has_loop(c) {
            continue;
        }
        let ok = g.neighbors(v).all(|w| w == v || image[w] == usize::MAX || h.has_edge(image[w], c));
        if !ok {
            continue;
        }
        used[c] = true;
        image[v] = c;
        total += inj_rec(g, h, order, depth + 1, image, used, pin);
        image[v] = usize::MAX;
        used[c] = false;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Independent oracle: try every map `V(g) -> V(h)`.
    fn exhaustive(g: &Graph, h: &Graph, allowed: impl Fn(usize, usize) -> bool) -> u64 {
        let n = g.n();
        let m = h.n() as u64;
        if n == 0 {
            return 1;
        }
        if m == 0 {
            return 0;
        }
        let total = m.pow(n as u32);
        let mut count = 0;
        let mut map = vec![0usize; n];
        for code in 0..total {
            let mut x = code;
            for slot in map.iter_mut() {
                *slot = (x % m) as usize;
                x /= m;
            }
            let ok = (0..n).all(|v| allowed(v, map[v]))
                && g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]));
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn worked_examples() {
        let h1 = edge_with_loop();
        assert_eq!(hom_count(&path(3), &h1), HomCount::from(5));
        assert_eq!(hom_count(&complete(3), &complete(2)), HomCount::from(0));
        assert_eq!(hom_count(&Graph::empty(1), &reduction_example()), HomCount::from(8));
        assert_eq!(hom_count(&looped_point(), &complete(4)), HomCount::from(0));
        assert_eq!(hom_mod(&path(3), &h1, 2).unwrap(), Residue { k: 2, r: 1 });
        assert_eq!(hom_mod(&path(3), &h1, 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn null_graph_conventions() {
        assert_eq!(hom_count(&Graph::null(), &Graph::null()), HomCount::from(1));
        assert_eq!(hom_count(&Graph::null(), &complete(3)), HomCount::from(1));
        assert_eq!(hom_count(&Graph::empty(1), &Graph::null()), HomCount::from(0));
    }

    #[test]
    fn injective_examples() {
        assert_eq!(inj_count(&Graph::empty(1), &complete(3)), HomCount::from(3));
        assert_eq!(inj_count(&path(3), &complete(2)), HomCount::from(0));
        assert_eq!(inj_count(&complete(3), &complete(3)), HomCount::from(6));
        assert_eq!(inj_count(&path(3), &path(3)), HomCount::from(2));
    }

    #[test]
    fn rooted_examples() {
        let s = spider(&[1, 2, 3]);
        for x in 0..s.n() {
            let target = RootedGraph::new(s.clone(), x).unwrap();
            assert_eq!(rooted_hom_count(&RootedGraph::point(), &target), HomCount::from(1));
            let edge = RootedGraph::new(complete(2), 0).unwrap();
            assert_eq!(rooted_hom_count(&edge, &target), HomCount::from(s.degree(x) as u64));
            let walks2: usize = s.neighbors(x).map(|w| s.degree(w)).sum();
            let p3 = RootedGraph::new(path(3), 0).unwrap();
            assert_eq!(rooted_hom_count(&p3, &target), HomCount::from(walks2 as u64));
        }
        let looped_target = RootedGraph::new(edge_with_loop(), 1).unwrap();
        let edge = RootedGraph::new(complete(2), 0).unwrap();
        assert_eq!(rooted_hom_count(&edge, &looped_target), HomCount::from(2));
    }

    #[test]
    fn pinned_examples() {
        let h1 = edge_with_loop();
        let k2 = complete(2);
        let pins = PinAssignment::new().pin(0, 0);
        assert_eq!(pinned_hom_count(&k2, &h1, &pins).unwrap(), HomCount::from(1));
        assert_eq!(
            pinned_hom_count(&k2, &h1, &PinAssignment::new()).unwrap(),
            hom_count(&k2, &h1)
        );
        let all = PinAssignment::new().pin(0, 0).pin(1, 0);
        assert_eq!(pinned_hom_count(&k2, &h1, &all).unwrap(), HomCount::from(0));
        let bad = PinAssignment::new().pin(0, 5);
        assert!(pinned_hom_count(&k2, &h1, &bad).is_err());
    }

    #[test]
    fn quotient_sum_examples() {
        assert_eq!(hom_via_quotients(&complete(2), &complete(3)).unwrap(), HomCount::from(6));
        assert_eq!(hom_via_quotients(&Graph::empty(1), &complete(3)).unwrap(), HomCount::from(3));
        assert!(hom_via_quotients(&Graph::empty(7), &complete(3)).is_err());
    }

    #[test]
    fn independent_set_parities() {
        assert!(!indset_parity(&Graph::empty(1)).unwrap());
        assert!(indset_parity(&complete(2)).unwrap());
        assert!(indset_parity(&path(3)).unwrap());
        assert!(indset_parity(&Graph::null()).unwrap());
        assert!(indset_parity(&looped_point()).is_err());
    }

    #[test]
    fn large_frontiers_fall_back_to_wide_keys() {
        // K_20 into K_3: the frontier exceeds the packed key width.
        let g = complete(20);
        let h = looped_complete(2);
        assert_eq!(hom_count(&g, &h), HomCount::from(1 << 20));
    }

    #[test]
    fn agrees_with_exhaustive_oracle_on_small_pairs() {
        let instances = crate::enumerate::enumerate_graphs(4, true).unwrap();
        let targets = crate::enumerate::enumerate_graphs(3, true).unwrap();
        for g in &instances {
            for h in &targets {
                let expected = exhaustive(g, h, |_, _| true);
                assert_eq!(hom_count(g, h), HomCount::from(expected), "{g:?} -> {h:?}");
                assert_eq!(hom_mod(g, h, 3).unwrap().r, expected % 3);
                if g.n() > 0 && h.n() > 0 {
                    let pins = PinAssignment::new().pin(0, h.n() - 1);
                    let pinned = exhaustive(g, h, |v, c| v != 0 || c == h.n() - 1);
                    assert_eq!(pinned_hom_count(g, h, &pins).unwrap(), HomCount::from(pinned));
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize, loops: bool) -> impl Strategy<Value = Graph> {
            (0..=max_n).prop_flat_map(move |n| {
                proptest::collection::vec(any::<bool>(), n * (n + 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::empty(n);
                    let mut i = 0;
                    for u in 0..n {
                        for v in u..n {
                            if bits[i] && (loops || u != v) {
                                g.add_edge(u, v);
                            }
                            i += 1;
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn matches_exhaustive(g in arb_graph(5, true), h in arb_graph(4, true)) {
                prop_assert_eq!(hom_count(&g, &h), HomCount::from(exhaustive(&g, &h, |_, _| true)));
            }

            #[test]
            fn multiplicative_over_disjoint_union(
                a in arb_graph(5, true), b in arb_graph(5, true), h in arb_graph(4, true)
            ) {
                let lhs = hom_count(&a.disjoint_union(&b), &h);
                prop_assert_eq!(lhs.0, hom_count(&a, &h).0 * hom_count(&b, &h).0);
            }

            #[test]
            fn quotient_sum_matches(g in arb_graph(5, true), h in arb_graph(4, true)) {
                prop_assert_eq!(hom_via_quotients(&g, &h).unwrap(), hom_count(&g, &h));
            }

            #[test]
            fn rooted_counts_sum_to_total(g in arb_graph(5, true), h in arb_graph(4, true)) {
                prop_assume!(g.n() > 0);
                let mut sum = BigUint::zero();
                for x in 0..h.n() {
                    let rg = RootedGraph::new(g.clone(), 0).unwrap();
                    let rh = RootedGraph::new(h.clone(), x).unwrap();
                    sum += rooted_hom_count(&rg, &rh).0;
                }
                prop_assert_eq!(sum, hom_count(&g, &h).0);
            }

            #[test]
            fn residues_match_exact(g in arb_graph(6, true), h in arb_graph(5, true), k in 2u64..10) {
                prop_assert_eq!(hom_mod(&g, &h, k).unwrap(), hom_count(&g, &h).residue(k).unwrap());
            }

            #[test]
            fn indset_parity_matches_edge_with_loop(g in arb_graph(6, false)) {
                prop_assert_eq!(indset_parity(&g).unwrap(), hom_parity(&g, &edge_with_loop()));
            }
        }
    }
}
