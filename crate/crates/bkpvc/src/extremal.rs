//! The recursively constructed families on which the lower bounds are tight.
//!
//! Directed family: the first member is a directed path on k vertices. Each
//! later member is a directed path on 2k vertices with the previous member
//! hanging off vertex number k of that path (counted 1-indexed from the root
//! end), attached by an arc into the previous member's root. Member i has
//! k(2i − 1) vertices, i leaves and i − 1 branching vertices, and its set of
//! leaves is a minimum cover of size exactly (n + k) / 2k = i.
//!
//! Undirected family: the first member is a path on k + 1 vertices. Each
//! later member attaches two fresh k-vertex paths, each by one edge, to the
//! highest-id leaf of the previous member. Member i has k(2i − 1) + 1
//! vertices and i + 1 leaves, and its leaves form a minimum cover of size
//! (n + 3k − 1) / 2k = i + 1.

use crate::error::{Error, Result};
use crate::forest::{RootedDirectedForest, UndirectedForest};

fn check_params(i: usize, k: usize) -> Result<()> {
    if i < 1 || k < 2 {
        return Err(Error::InvalidParams(format!(
            "extremal family needs i ≥ 1 and k ≥ 2, got i = {i}, k = {k}"
        )));
    }
    Ok(())
}

/// Member i of the directed family for window size k.
///
/// Ids are assigned outermost path first: vertices `0..2k` form the path of
/// the latest layer (root 0), and the embedded previous member follows,
/// shifted by 2k. Stripping ids `0..2k` therefore leaves exactly member
/// i − 1 shifted by 2k.
pub fn gen_directed_extremal(i: usize, k: usize) -> Result<RootedDirectedForest> {
    check_params(i, k)?;
    let parent = directed_parents(i, k);
    RootedDirectedForest::build(&parent)
}

fn directed_parents(i: usize, k: usize) -> Vec<Option<usize>> {
    if i == 1 {
        return (0..k).map(|v| v.checked_sub(1)).collect();
    }
    let inner = directed_parents(i - 1, k);
    let mut parent: Vec<Option<usize>> = (0..2 * k).map(|v| v.checked_sub(1)).collect();
    parent.extend(inner.iter().map(|p| match p {
        // The embedded member's root hangs off vertex number k (id k − 1).
        None => Some(k - 1),
        Some(q) => Some(q + 2 * k),
    }));
    parent
}

/// Member i of the undirected family for window size k.
///
/// Ids grow by appending: each layer's two new paths occupy the next 2k ids,
/// so stripping the top 2k ids leaves exactly member i − 1.
pub fn gen_undirected_extremal(i: usize, k: usize) -> Result<UndirectedForest> {
    check_params(i, k)?;
    let mut n = k + 1;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|v| (v, v + 1)).collect();
    for _ in 1..i {
        let attach = highest_id_leaf(n, &edges);
        for path in 0..2 {
            let base = n + path * k;
            edges.push((attach, base));
            for v in 0..k - 1 {
                edges.push((base + v, base + v + 1));
            }
        }
        n += 2 * k;
    }
    UndirectedForest::build(n, &edges)
}

fn highest_id_leaf(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    (0..n)
        .rev()
        .find(|&v| degree[v] <= 1)
        .expect("a forest always has a leaf")
}
