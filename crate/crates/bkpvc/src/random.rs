//! Seeded random forests for property campaigns.
//!
//! The distribution is not uniform over forests; it only needs to be
//! diverse and reproducible. Same inputs, same forest, on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forest::{Forest, ForestKind, RootedDirectedForest, UndirectedForest};

/// Generates a random forest of the requested kind.
///
/// Vertex 0 starts the first component. Every later vertex starts a new
/// component with probability `component_bias`, and otherwise attaches to a
/// uniformly chosen earlier vertex (as a child in the directed case).
pub fn gen_random(kind: ForestKind, n: usize, seed: u64, component_bias: f64) -> Result<Forest> {
    if n < 1 {
        return Err(Error::InvalidParams(format!(
            "random forest needs n ≥ 1, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&component_bias) {
        return Err(Error::InvalidParams(format!(
            "component_bias must lie in [0, 1], got {component_bias}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        ForestKind::Directed => {
            let mut parent = vec![None];
            for v in 1..n {
                let p = if rng.random_bool(component_bias) {
                    None
                } else {
                    Some(rng.random_range(0..v))
                };
                parent.push(p);
            }
            Ok(Forest::Directed(RootedDirectedForest::build(&parent)?))
        }
        ForestKind::Undirected => {
            let mut edges = Vec::new();
            for v in 1..n {
                if !rng.random_bool(component_bias) {
                    edges.push((rng.random_range(0..v), v));
                }
            }
            Ok(Forest::Undirected(UndirectedForest::build(n, &edges)?))
        }
    }
}
