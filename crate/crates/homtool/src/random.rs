//! Seeded random graphs.
//!
//! Every sweep draws from `ChaCha8Rng::seed_from_u64(seed)` with the stream
//! set to a per-item index, so results do not depend on thread scheduling or
//! platform.

use homtool_core::{Graph, RootedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `G(n, 1/2)` with each vertex looped independently with probability
/// `loop_p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, loop_p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        if rng.gen_bool(loop_p) {
            g.add_edge(u, u);
        }
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, loop_p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, loop_p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_rooted_graph(rng: &mut impl Rng, max_n: usize, loop_p: f64) -> RootedGraph {
    let n = rng.gen_range(1..=max_n);
    let root = rng.gen_range(0..n);
    RootedGraph::new(random_graph(rng, n, loop_p), root).expect("root in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a = random_graph(&mut rng_for(7, 3), 6, 0.2);
        let b = random_graph(&mut rng_for(7, 3), 6, 0.2);
        assert_eq!(a, b);
        let c = random_connected_graph(&mut rng_for(1, 1), 5, 0.0);
        assert!(c.is_connected());
    }
}
