//! Named verification suites. Each suite returns one [`CaseResult`] per
//! checked property; a case passes when none of its checks fail.

use homtool_core::canon::are_isomorphic;
use homtool_core::enumerate::{enumerate_graphs_with, enumerate_rooted_graphs_with, enumerate_trees};
use homtool_core::gadgets::{
    basis_from_generators, brute_pin_one, brute_pin_two, gadget_vector, indicator, product_of_sums,
    sum_vector, vec_mul, CountingOracle, GadgetSum, PinningKit, Vectors,
};
use homtool_core::gf2::GadgetVector;
use homtool_core::graph::named;
use homtool_core::hom::{
    hom_count, hom_mod, hom_mod_where, hom_via_quotients, indset_parity, inj_count, rooted_hom_count,
};
use homtool_core::lovasz::{distinguish_targets, find_distinguisher};
use homtool_core::symmetry::{
    automorphism_count, automorphisms, find_order_p_automorphism, fixed_point_subgraph, orbits,
    reduced_form, verify_confluence,
};
use homtool_core::trees::{
    classify, component_restricted_parity_with, degree2_leaf_neighbours, easy_target_count,
    is_asymmetric_tree, reduce_indset_with, select_anchors, verify_walk_parity, Verdict,
};
use homtool_core::{Caps, Error, Graph, RootedGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::random::{random_connected_graph, random_graph, random_rooted_graph, rng_for};

/// How much failure detail a case keeps.
const KEEP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failed: u64,
    /// Up to ten failing instances.
    pub failures: Vec<String>,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(detail());
            }
        }
    }

    /// Records a check whose evaluation may fail with an error.
    fn check_result(&mut self, r: Result<bool, Error>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, detail),
            Err(e) => self.check(false, || format!("{} (error: {e})", detail())),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(f);
            }
        }
        self
    }

    fn finish(self, name: impl Into<String>) -> CaseResult {
        CaseResult {
            name: name.into(),
            passed: self.failed == 0,
            checked: self.checked,
            failed: self.failed,
            failures: self.failures,
        }
    }
}

/// Parameters shared by all suites; `None` selects the suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: Option<usize>,
    pub max_vertices: Option<usize>,
}

pub const SUITES: &[&str] = &[
    "involution",
    "prime",
    "composite",
    "confluence",
    "quotient",
    "lovasz",
    "gadget-algebra",
    "basis",
    "pinning",
    "tree-structure",
    "indset-reduction",
    "dichotomy",
    "component",
];

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    Ok(match name {
        "involution" => reduction_sweep(2, cfg)?,
        "prime" => reduction_sweep(3, cfg)?,
        "composite" => composite()?,
        "confluence" => confluence(cfg)?,
        "quotient" => quotient(cfg)?,
        "lovasz" => lovasz(cfg)?,
        "gadget-algebra" => gadget_algebra(cfg)?,
        "basis" => basis(cfg)?,
        "pinning" => pinning(cfg)?,
        "tree-structure" => tree_structure(cfg)?,
        "indset-reduction" => indset_reduction(cfg)?,
        "dichotomy" => dichotomy(cfg)?,
        "component" => component(cfg)?,
        other => {
            return Err(CliError::Usage(format!("unknown suite {other:?}; known: {}", SUITES.join(", "))))
        }
    })
}

fn caps_for(n: usize) -> Caps {
    let mut caps = Caps::current();
    caps.enumerate_loop_free = caps.enumerate_loop_free.max(n);
    caps.enumerate_loops = caps.enumerate_loops.max(n);
    caps
}

/// Every isomorphism class on at most `n` vertices.
fn graphs(n: usize, loops: bool) -> Result<Vec<Graph>, CliError> {
    Ok(enumerate_graphs_with(n, loops, &caps_for(n))?)
}

fn involution_free(gs: Vec<Graph>) -> Result<Vec<Graph>, CliError> {
    let flags: Vec<Result<bool, Error>> =
        gs.par_iter().map(|g| find_order_p_automorphism(g, 2).map(|a| a.is_none())).collect();
    let mut out = Vec::new();
    for (g, f) in gs.into_iter().zip(flags) {
        if f? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Reducing a target by an automorphism of prime order `p` preserves
/// `hom(g, h) mod p`. Targets: all graphs with loops up to `max_vertices`
/// (default 7) that have such an automorphism; `trials` (default 50) random
/// instances on 1 to 5 vertices each.
fn reduction_sweep(p: u64, cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let max_n = cfg.max_vertices.unwrap_or(7);
    let trials = cfg.trials.unwrap_or(50);
    let targets = graphs(max_n, true)?;
    let tallies: Vec<(usize, Tally, bool)> = targets
        .par_iter()
        .enumerate()
        .map(|(idx, h)| {
            let mut t = Tally::default();
            let sigma = match find_order_p_automorphism(h, p) {
                Ok(Some(s)) => s,
                Ok(None) => return (h.n(), t, false),
                Err(e) => {
                    t.check(false, || format!("{h:?}: {e}"));
                    return (h.n(), t, true);
                }
            };
            let hs = fixed_point_subgraph(h, &sigma).expect("automorphism").graph;
            let mut rng = rng_for(cfg.seed, idx as u64);
            for _ in 0..trials {
                let n = rng.gen_range(1..=5);
                let g = random_graph(&mut rng, n, 0.15);
                let a = hom_mod(&g, h, p).expect("prime modulus").r;
                let b = hom_mod(&g, &hs, p).expect("prime modulus").r;
                t.check(a == b, || format!("h={h:?} sigma={:?} g={g:?}: {a} vs {b}", sigma.image()));
            }
            (h.n(), t, true)
        })
        .collect();
    let mut out = Vec::new();
    for n in 0..=max_n {
        let mut tally = Tally::default();
        let mut count = 0;
        for (m, t, used) in tallies.iter().filter(|(m, _, _)| *m == n) {
            debug_assert_eq!(*m, n);
            if *used {
                count += 1;
            }
            tally = tally.merge(Tally { checked: t.checked, failed: t.failed, failures: t.failures.clone() });
        }
        out.push(tally.finish(format!("{count} targets on {n} vertices with an automorphism of order {p}")));
    }
    Ok(out)
}

/// `K5` has a fixed-point-free automorphism of order 6, yet
/// `hom(K1, K5) = 5` is not 0 mod 6: reduction fails for composite orders.
fn composite() -> Result<Vec<CaseResult>, CliError> {
    let k5 = named::complete(5);
    let mut exists = Tally::default();
    let sigma = automorphisms(&k5)?.into_iter().find(|a| a.order() == 6 && a.fixed_points().is_empty());
    exists.check(sigma.is_some(), || "no fixed-point-free automorphism of order 6".into());
    let mut count = Tally::default();
    let c = hom_count(&Graph::empty(1), &k5);
    count.check(c == 5u64.into(), || format!("hom(K1, K5) = {c}"));
    let mut fails = Tally::default();
    if let Some(s) = sigma {
        let fixed = fixed_point_subgraph(&k5, &s)?.graph;
        let a = hom_mod(&Graph::empty(1), &k5, 6)?.r;
        let b = hom_mod(&Graph::empty(1), &fixed, 6)?.r;
        fails.check(a == 5 && b == 0 && a != b, || format!("residues {a} and {b}"));
    }
    Ok(vec![
        exists.finish("K5 has a fixed-point-free automorphism of order 6"),
        count.finish("hom(K1, K5) = 5"),
        fails.finish("hom(K1, K5) mod 6 differs from hom(K1, null) mod 6"),
    ])
}

/// Every maximal reduction sequence ends in one isomorphism class.
fn confluence(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let free_n = cfg.max_vertices.unwrap_or(5);
    let loop_n = cfg.max_vertices.map_or(4, |n| n.saturating_sub(1));
    let mut out = Vec::new();
    for (n, loops) in [(free_n, false), (loop_n, true)] {
        let gs = graphs(n, loops)?;
        for p in [2, 3] {
            let t = gs
                .par_iter()
                .map(|g| {
                    let mut t = Tally::default();
                    t.check_result(verify_confluence(g, p), || format!("{g:?}"));
                    t
                })
                .reduce(Tally::default, Tally::merge);
            let kind = if loops { "graphs with loops" } else { "loop-free graphs" };
            out.push(t.finish(format!("{kind} up to {n} vertices, p = {p}")));
        }
    }
    Ok(out)
}

/// `hom = sum of inj over quotients`, and `inj(h, h) = |Aut(h)|`.
fn quotient(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let trials = cfg.trials.unwrap_or(30);
    let mut rng = rng_for(cfg.seed, 0);
    let targets: Vec<Graph> = (0..trials)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            random_graph(&mut rng, n, 0.25)
        })
        .collect();
    let instances = graphs(5, true)?;
    let sums = instances
        .par_iter()
        .map(|g| {
            let mut t = Tally::default();
            for h in &targets {
                t.check_result(hom_via_quotients(g, h).map(|q| q == hom_count(g, h)), || {
                    format!("g={g:?} h={h:?}")
                });
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let aut_n = cfg.max_vertices.unwrap_or(6);
    let inj = graphs(aut_n, true)?
        .par_iter()
        .map(|h| {
            let mut t = Tally::default();
            t.check_result(automorphism_count(h).map(|a| inj_count(h, h) == a.into()), || format!("{h:?}"));
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(vec![
        sums.finish(format!("quotient sum equals hom for all g up to 5 vertices and {trials} random targets")),
        inj.finish(format!("inj(h, h) = |Aut(h)| for all h up to {aut_n} vertices")),
    ])
}

/// Mod-2 Lovász prefixes separate involution-free targets exactly up to
/// isomorphism, and rooted distinguishers exist for points in different
/// orbits.
fn lovasz(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let n = cfg.max_vertices.unwrap_or(5);
    let free = involution_free(graphs(n, true)?)?;
    let pairs: Vec<(usize, usize)> =
        (0..free.len()).flat_map(|i| (i..free.len()).map(move |j| (i, j))).collect();
    let plain = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut t = Tally::default();
            let (a, b) = (&free[i], &free[j]);
            let r = distinguish_targets(a, b, 2).map(|w| match w {
                None => i == j,
                Some(w) => {
                    i != j
                        && w.n() <= a.n().max(b.n())
                        && hom_count(&w, a).is_odd() != hom_count(&w, b).is_odd()
                }
            });
            t.check_result(r, || format!("{a:?} vs {b:?}"));
            t
        })
        .reduce(Tally::default, Tally::merge);
    let rooted = free
        .par_iter()
        .map(|h| {
            let mut t = Tally::default();
            let Ok(orb) = orbits(h) else {
                t.check(false, || format!("{h:?}: orbit computation failed"));
                return t;
            };
            for x in 0..h.n() {
                for y in 0..h.n() {
                    if x == y {
                        continue;
                    }
                    let r = find_distinguisher(h, x, y);
                    if orb.same_orbit(x, y) {
                        t.check(matches!(r, Err(Error::SameOrbit { .. })), || format!("{h:?} {x} {y}"));
                        continue;
                    }
                    let ok = r.map(|gamma| {
                        let hx = RootedGraph::new(h.clone(), x).expect("vertex");
                        let hy = RootedGraph::new(h.clone(), y).expect("vertex");
                        gamma.graph().n() <= h.n() + 1
                            && rooted_hom_count(&gamma, &hx).is_odd() != rooted_hom_count(&gamma, &hy).is_odd()
                    });
                    t.check_result(ok, || format!("{h:?} x={x} y={y}"));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(vec![
        plain.finish(format!(
            "{} involution-free targets up to {n} vertices: all {} pairs separated iff non-isomorphic",
            free.len(),
            pairs.len()
        )),
        rooted.finish("rooted distinguishers verify within |V(h)| + 1 vertices"),
    ])
}

fn random_sum(rng: &mut impl Rng) -> Result<(GadgetSum, Vec<RootedGraph>), Error> {
    let k = rng.gen_range(1..=3);
    let terms: Vec<RootedGraph> = (0..k).map(|_| random_rooted_graph(rng, 4, 0.15)).collect();
    Ok((GadgetSum::from_terms(&terms)?, terms))
}

/// Vectors of products of sums are products of vectors; gadget vectors are
/// constant on orbits.
fn gadget_algebra(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let trials = cfg.trials.unwrap_or(200);
    let max_h = cfg.max_vertices.unwrap_or(6);
    let law = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::default();
            let mut rng = rng_for(cfg.seed, i as u64);
            let n = rng.gen_range(1..=max_h);
            let h = random_graph(&mut rng, n, 0.2);
            let r = (|| {
                let (s1, terms) = random_sum(&mut rng)?;
                // Every third trial pairs a sum with its own reversal so that
                // the joins collide and cancel.
                let s2 = if i % 3 == 0 {
                    let rev: Vec<RootedGraph> = terms.iter().rev().cloned().collect();
                    GadgetSum::from_terms(&rev)?
                } else {
                    random_sum(&mut rng)?.0
                };
                let lhs = sum_vector(&product_of_sums(&s1, &s2)?, &h);
                let rhs = vec_mul(&sum_vector(&s1, &h), &sum_vector(&s2, &h))?;
                Ok(lhs == rhs)
            })();
            t.check_result(r, || format!("trial {i}: h={h:?}"));
            t
        })
        .reduce(Tally::default, Tally::merge);
    let constancy = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::default();
            let mut rng = rng_for(cfg.seed ^ 0x5eed, i as u64);
            let n = rng.gen_range(1..=max_h);
            let h = random_graph(&mut rng, n, 0.2);
            let gamma = random_rooted_graph(&mut rng, 6, 0.1);
            let r = orbits(&h).map(|o| {
                let v = gadget_vector(&gamma, &h);
                o.orbits().iter().all(|orb| orb.iter().all(|&c| v.get(c) == v.get(orb[0])))
            });
            t.check_result(r, || format!("h={h:?} gamma={gamma:?}"));
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(vec![
        law.finish(format!("{trials} random product-of-sums checks")),
        constancy.finish(format!("{trials} random orbit-constancy checks")),
    ])
}

fn random_generators(rng: &mut impl Rng) -> Vec<GadgetVector> {
    let n = rng.gen_range(1..=8);
    let mut gens = vec![GadgetVector::ones(n)];
    let separable = |gens: &[GadgetVector]| {
        (0..n).all(|i| (i + 1..n).all(|j| gens.iter().any(|g| g.get(i) != g.get(j))))
    };
    while gens.len() < 3 || !separable(&gens) {
        gens.push(GadgetVector::from_bits((0..n).map(|_| rng.gen_bool(0.5)).collect()));
    }
    gens.shuffle(rng);
    gens
}

/// The standard-basis construction, on worked cases, random generator sets,
/// and the orbit vectors of every involution-free target.
fn basis(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let v = GadgetVector::from_str_bits;
    let mut worked = Tally::default();
    let b2 = basis_from_generators(&[v("11"), v("10")])?;
    worked.check(b2.render(0) == "g1" && b2.render(1) == "(g0 + g1)", || {
        format!("n = 2: {} ; {}", b2.render(0), b2.render(1))
    });
    let b3 = basis_from_generators(&[v("111"), v("101"), v("011")])?;
    worked.check(
        b3.render(2) == "(g1 * g2)" && b3.render(0) == "(g1 + (g1 * g2))" && b3.render(1) == "(g2 + (g1 * g2))",
        || format!("n = 3: {} ; {} ; {}", b3.render(0), b3.render(1), b3.render(2)),
    );

    let trials = cfg.trials.unwrap_or(200);
    let random = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::default();
            let gens = random_generators(&mut rng_for(cfg.seed, i as u64));
            let n = gens[0].len();
            let r = basis_from_generators(&gens).and_then(|b| {
                let all: Vec<usize> = (0..n).collect();
                let vals = b.evaluate(&Vectors, &gens, &all)?;
                Ok(vals.iter().enumerate().all(|(i, x)| *x == GadgetVector::unit(n, i)))
            });
            t.check_result(r, || format!("generators {gens:?}"));
            t
        })
        .reduce(Tally::default, Tally::merge);

    let max_n = cfg.max_vertices.unwrap_or(7);
    let targets = involution_free(graphs(max_n, true)?)?;
    let orbit_vectors = targets
        .par_iter()
        .map(|h| {
            let mut t = Tally::default();
            match PinningKit::new(h) {
                Err(e) => t.check(false, || format!("{h:?}: {e}")),
                Ok(kit) => {
                    for (i, orbit) in kit.orbits().orbits().iter().enumerate() {
                        // Recount every term exactly, independently of the
                        // parity routines used to build the sum.
                        let sum = kit.sum_for_index(i);
                        let bits: Vec<bool> = (0..h.n())
                            .map(|c| {
                                let hc = RootedGraph::new(h.clone(), c).expect("vertex");
                                sum.terms().filter(|g| rooted_hom_count(g, &hc).is_odd()).count() % 2 == 1
                            })
                            .collect();
                        t.check(GadgetVector::from_bits(bits) == indicator(h.n(), orbit), || {
                            format!("{h:?} orbit {orbit:?}")
                        });
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(vec![
        worked.finish("worked cases n = 2 and n = 3"),
        random.finish(format!("{trials} random generator sets, n <= 8")),
        orbit_vectors.finish(format!(
            "orbit vectors of all {} involution-free targets up to {max_n} vertices, loops allowed",
            targets.len()
        )),
    ])
}

/// Pinning through the parity oracle against direct restricted counting.
fn pinning(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let max_h = cfg.max_vertices.unwrap_or(6);
    // Looped targets one vertex smaller: each extra orbit multiplies the
    // number of oracle calls per two-vertex pin.
    let looped = max_h.saturating_sub(1);
    let mut targets = involution_free(graphs(max_h, false)?)?;
    targets.extend(involution_free(graphs(looped, true)?)?.into_iter().filter(|g| g.has_loops()));
    let kits: Vec<PinningKit> = targets.par_iter().map(PinningKit::new).collect::<Result<_, _>>()?;
    let rooted = enumerate_rooted_graphs_with(4, true, &caps_for(4))?;
    let instances = graphs(4, true)?;

    let one = kits
        .par_iter()
        .map(|kit| {
            let h = kit.target();
            let mut t = Tally::default();
            for g in &rooted {
                for orbit in kit.orbits().orbits() {
                    let r = kit.pin_one(g, orbit, &mut CountingOracle).map(|b| b == brute_pin_one(g, orbit, h));
                    t.check_result(r, || format!("h={h:?} g={g:?} orbit={orbit:?}"));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let two = kits
        .par_iter()
        .map(|kit| {
            let h = kit.target();
            let mut t = Tally::default();
            for g in &instances {
                for x in 0..g.n() {
                    for y in (0..g.n()).filter(|&y| y != x) {
                        for ox in kit.orbits().orbits() {
                            for oy in kit.orbits().orbits() {
                                let r = kit
                                    .pin_two(g, x, y, ox, oy, &mut CountingOracle)
                                    .map(|b| b == brute_pin_two(g, x, y, ox, oy, h));
                                t.check_result(r, || format!("h={h:?} g={g:?} x={x} y={y} {ox:?} {oy:?}"));
                            }
                        }
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    // Random larger cases over a wider target pool.
    let trials = cfg.trials.unwrap_or(500);
    let mut pool = involution_free(graphs(max_h + 1, false)?)?;
    pool.extend(involution_free(graphs(max_h, true)?)?.into_iter().filter(|g| g.has_loops()));
    pool.retain(|g| g.n() > 0);
    let mut picks: Vec<(usize, u64)> = {
        let mut rng = rng_for(cfg.seed, u64::MAX);
        (0..trials).map(|i| (rng.gen_range(0..pool.len()), i as u64)).collect()
    };
    picks.sort_unstable();
    let mut by_target: Vec<(usize, Vec<u64>)> = Vec::new();
    for (h, i) in picks {
        match by_target.last_mut() {
            Some((last, v)) if *last == h => v.push(i),
            _ => by_target.push((h, vec![i])),
        }
    }
    let random = by_target
        .par_iter()
        .map(|(hi, cases)| {
            let h = &pool[*hi];
            let mut t = Tally::default();
            let kit = match PinningKit::new(h) {
                Ok(k) => k,
                Err(e) => {
                    t.check(false, || format!("{h:?}: {e}"));
                    return t;
                }
            };
            let orbs = kit.orbits().orbits();
            for &i in cases {
                let mut rng = rng_for(cfg.seed, i);
                let n = rng.gen_range(5..=6);
                let g = random_graph(&mut rng, n, 0.1);
                let ox = &orbs[rng.gen_range(0..orbs.len())];
                let oy = &orbs[rng.gen_range(0..orbs.len())];
                let x = rng.gen_range(0..n);
                if rng.gen_bool(0.5) {
                    let rg = RootedGraph::new(g.clone(), x).expect("vertex");
                    let r = kit.pin_one(&rg, ox, &mut CountingOracle).map(|b| b == brute_pin_one(&rg, ox, h));
                    t.check_result(r, || format!("case {i}: h={h:?} g={g:?} x={x} {ox:?}"));
                } else {
                    let y = (x + rng.gen_range(1..n)) % n;
                    let r = kit
                        .pin_two(&g, x, y, ox, oy, &mut CountingOracle)
                        .map(|b| b == brute_pin_two(&g, x, y, ox, oy, h));
                    t.check_result(r, || format!("case {i}: h={h:?} g={g:?} x={x} y={y} {ox:?} {oy:?}"));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(vec![
        one.finish(format!(
            "one-vertex pinning, {} targets (loop-free up to {max_h} vertices, with loops up to {looped}) x rooted instances up to 4 vertices",
            kits.len()
        )),
        two.finish("two-vertex pinning, same targets x instances up to 4 vertices"),
        random.finish(format!("{trials} random cases: instances on 5-6 vertices, targets up to {} vertices", max_h + 1)),
    ])
}

/// Structure of asymmetric trees.
fn tree_structure(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let max_n = cfg.max_vertices.unwrap_or(10);
    let mut t = Tally::default();
    let mut smallest = None;
    let mut count = 0;
    for n in 2..=max_n {
        for tree in enumerate_trees(n) {
            if find_order_p_automorphism(&tree, 2)?.is_some() {
                continue;
            }
            count += 1;
            smallest.get_or_insert(n);
            t.check_result(is_asymmetric_tree(&tree), || format!("{tree:?}: not asymmetric"));
            t.check_result(degree2_leaf_neighbours(&tree).map(|v| v.len() >= 2), || {
                format!("{tree:?}: fewer than two degree-2 leaf neighbours")
            });
            let sel = select_anchors(&tree);
            t.check(sel.is_ok(), || format!("{tree:?}: anchor selection failed"));
            if let Ok(sel) = sel {
                t.check_result(verify_walk_parity(&tree, &sel), || format!("{tree:?}: walk parity"));
            }
        }
    }
    let mut s = Tally::default();
    s.check(smallest == Some(7), || format!("smallest nontrivial asymmetric tree has {smallest:?} vertices"));
    Ok(vec![
        t.finish(format!("{count} asymmetric trees on 2 to {max_n} vertices")),
        s.finish("smallest nontrivial asymmetric tree has 7 vertices"),
    ])
}

/// `G*` turns independent-set parity into pinned colouring parity.
fn indset_reduction(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let max_g = cfg.max_vertices.unwrap_or(5);
    let instances = graphs(max_g, false)?;
    let trees: Vec<Graph> = (7..=9)
        .flat_map(enumerate_trees)
        .filter(|t| matches!(find_order_p_automorphism(t, 2), Ok(None)))
        .collect();
    let mut out = Vec::new();
    for tree in &trees {
        let sel = select_anchors(tree)?;
        let kit = PinningKit::new(tree)?;
        let (gadget, brute) = instances
            .par_iter()
            .map(|g| {
                let expected = indset_parity(g).expect("loop-free");
                let mut a = Tally::default();
                let mut b = Tally::default();
                a.check_result(reduce_indset_with(g, tree, &sel, Some(&kit)).map(|r| r.1 == expected), || {
                    format!("g={g:?}")
                });
                b.check_result(reduce_indset_with(g, tree, &sel, None).map(|r| r.1 == expected), || {
                    format!("g={g:?}")
                });
                (a, b)
            })
            .reduce(
                || (Tally::default(), Tally::default()),
                |(a1, b1), (a2, b2)| (a1.merge(a2), b1.merge(b2)),
            );
        let label = format!("tree {:?} (k = {})", tree.edges(), sel.k);
        out.push(gadget.finish(format!("{label}, gadget pinning")));
        out.push(brute.finish(format!("{label}, direct pinning")));
    }
    Ok(out)
}

fn same_class(a: &Graph, b: &Graph) -> bool {
    are_isomorphic(a, b).unwrap_or(false)
}

/// Endpoints of the dichotomy and the easy targets.
fn dichotomy(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let mut ends = Tally::default();
    let p4 = classify(&named::path(4))?;
    ends.check(p4.verdict == Verdict::PolynomialTime && p4.trace.final_graph().is_null(), || {
        format!("P4: {:?}", p4.verdict)
    });
    let sp = classify(&named::spider(&[1, 2, 3]))?;
    ends.check(sp.verdict == Verdict::ParityPComplete && sp.witness.is_some(), || {
        format!("spider: {:?}", sp.verdict)
    });

    let mut families = Tally::default();
    for n in 1..=8 {
        let r = reduced_form(&named::looped_complete(n), 2)?;
        let expect = if n % 2 == 0 { Graph::null() } else { named::looped_point() };
        families.check(same_class(r.final_graph(), &expect), || format!("looped K{n}"));
    }
    for a in 1..=8 {
        for b in a..=(9 - a) {
            let r = reduced_form(&named::complete_bipartite(a, b), 2)?;
            let expect = if (a + b) % 2 == 1 { Graph::empty(1) } else { Graph::null() };
            families.check(same_class(r.final_graph(), &expect), || format!("K{a},{b}"));
        }
    }

    // Easy verdicts really give the parity through the closed forms.
    let forests: Vec<Graph> = graphs(7, false)?.into_iter().filter(Graph::is_forest).collect();
    let instances = graphs(5, false)?;
    let easy = forests
        .par_iter()
        .map(|f| {
            let mut t = Tally::default();
            match classify(f) {
                Err(e) => t.check(false, || format!("{f:?}: {e}")),
                Ok(v) if v.verdict == Verdict::PolynomialTime => {
                    let reduced = v.trace.final_graph();
                    for g in &instances {
                        let r = easy_target_count(g, reduced).map(|c| c.is_odd() == (hom_mod(g, f, 2).unwrap().r == 1));
                        t.check_result(r, || format!("f={f:?} g={g:?}"));
                    }
                }
                Ok(_) => {}
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let trials = cfg.trials.unwrap_or(100);
    let mut closed = Tally::default();
    let targets = [Graph::null(), Graph::empty(1), named::looped_point(), named::loop_plus_point()];
    let mut rng = rng_for(cfg.seed, 0);
    for i in 0..trials {
        let h = &targets[i % targets.len()];
        let n = rng.gen_range(0..=6);
        let mut g = random_graph(&mut rng, n, 0.1);
        let extra = rng.gen_range(0..=2);
        g = g.disjoint_union(&Graph::empty(extra));
        let r = easy_target_count(&g, h).map(|c| c == hom_count(&g, h));
        closed.check_result(r, || format!("g={g:?} h={h:?}"));
    }
    let law = easy_target_count(&named::complete(2).disjoint_union(&Graph::empty(2)), &named::loop_plus_point())?;
    closed.check(law == 4u64.into(), || format!("K2 + 2K1 into loop + point: {law}"));

    Ok(vec![
        ends.finish("P4 is easy with null reduced form; the spider is hard"),
        families.finish("looped complete and complete bipartite targets reduce by parity"),
        easy.finish(format!("easy verdicts on {} forests up to 7 vertices match hom parity", forests.len())),
        closed.finish(format!("closed-form counts on {trials} random instances")),
    ])
}

/// Parity restricted to one component of `spider + K1`.
fn component(cfg: &SuiteConfig) -> Result<Vec<CaseResult>, CliError> {
    let h = named::spider(&[1, 2, 3]).disjoint_union(&Graph::empty(1));
    let kit = PinningKit::new(&h)?;
    let comps = h.components();
    let trials = cfg.trials.unwrap_or(50);
    let mut t = Tally::default();
    let mut rng = rng_for(cfg.seed, 0);
    for i in 0..trials {
        let n = rng.gen_range(1..=5);
        let g = random_connected_graph(&mut rng, n, 0.1);
        let ci = i % comps.len();
        let comp = &comps[ci];
        let brute = hom_mod_where(&g, &h, 2, |_, c| comp.contains(&c)).expect("modulus 2").r == 1;
        let r = component_restricted_parity_with(&g, &kit, comp).map(|b| b == brute);
        t.check_result(r, || format!("g={g:?} component={comp:?}"));
    }
    Ok(vec![t.finish(format!("{trials} random connected instances against spider + K1"))])
}
