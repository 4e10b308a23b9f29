//! Helpers shared by the integration test suites.
#![allow(dead_code)]

use bkpvc::{Forest, ForestKind, RootedDirectedForest, UndirectedForest};

/// Base seed for every deterministic campaign in the test suites.
pub const SUITE_SEED: u64 = 0x6b70_7663;

/// Component biases cycled across trials for structural diversity.
pub const BIASES: [f64; 5] = [0.05, 0.1, 0.2, 0.35, 0.5];

pub fn bias_for(trial: usize) -> f64 {
    BIASES[trial % BIASES.len()]
}

/// SplitMix64-style hash for deriving independent sub-seeds.
pub fn mix_seed(parts: &[u64]) -> u64 {
    let mut h = 0x9e37_79b9_7f4a_7c15u64;
    for &p in parts {
        let mut z = h ^ p.wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        h = z ^ (z >> 31);
    }
    h
}

/// Calls `f` with every parent array on `n` vertices in which each vertex
/// attaches only to a lower id (n! arrays). Every rooted directed forest is
/// isomorphic to one of these (relabel in topological order), and dropping
/// the orientation likewise reaches every undirected forest, so iterating
/// them is exhaustive up to isomorphism; the full labeled space is
/// astronomically larger and adds only relabelings.
pub fn for_each_parent_array(n: usize, mut f: impl FnMut(&[Option<usize>])) {
    let mut digits = vec![0usize; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    loop {
        for (i, &d) in digits.iter().enumerate() {
            parent[i] = d.checked_sub(1);
        }
        f(&parent);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if digits[i] < i {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

pub fn directed_from_parents(parent: &[Option<usize>]) -> RootedDirectedForest {
    RootedDirectedForest::build(parent).expect("parent arrays with parent < child are acyclic")
}

pub fn undirected_from_parents(parent: &[Option<usize>]) -> UndirectedForest {
    let edges: Vec<(usize, usize)> = parent
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.map(|p| (p, v)))
        .collect();
    UndirectedForest::build(parent.len(), &edges)
        .expect("underlying edges of a directed forest form a forest")
}

/// The random instance stream for the directed bound:
/// 100 forests per (n, k) cell over n ∈ 1..=60, k ∈ 2..=5.
pub fn directed_bound_grid(mut f: impl FnMut(Forest, usize)) {
    for n in 1..=60 {
        for k in 2..=5 {
            for trial in 0..100 {
                let seed = mix_seed(&[SUITE_SEED, 1, n as u64, k as u64, trial as u64]);
                let forest =
                    bkpvc::gen_random(ForestKind::Directed, n, seed, bias_for(trial)).unwrap();
                f(forest, k);
            }
        }
    }
}

/// The undirected counterpart: same grid with n ≥ 2.
pub fn undirected_bound_grid(mut f: impl FnMut(Forest, usize)) {
    for n in 2..=60 {
        for k in 2..=5 {
            for trial in 0..100 {
                let seed = mix_seed(&[SUITE_SEED, 2, n as u64, k as u64, trial as u64]);
                let forest =
                    bkpvc::gen_random(ForestKind::Undirected, n, seed, bias_for(trial)).unwrap();
                f(forest, k);
            }
        }
    }
}

/// The random oracle-comparison stream: 500 forests (alternating kinds)
/// per k ∈ 2..=6 with n ≤ 18.
pub fn oracle_random_stream(mut f: impl FnMut(Forest, usize)) {
    for k in 2..=6 {
        for trial in 0..500 {
            let seed = mix_seed(&[SUITE_SEED, 5, k as u64, trial as u64]);
            let n = 1 + (mix_seed(&[seed, 7]) % 18) as usize;
            let kind = if trial % 2 == 0 {
                ForestKind::Directed
            } else {
                ForestKind::Undirected
            };
            let forest = bkpvc::gen_random(kind, n, seed, bias_for(trial)).unwrap();
            f(forest, k);
        }
    }
}

/// The exhaustive oracle-comparison stream: every parent-array forest with
/// n ≤ 8, both kinds, k ∈ {2, 3}.
pub fn oracle_exhaustive_stream(mut f: impl FnMut(Forest, usize)) {
    for n in 1..=8 {
        for_each_parent_array(n, |parent| {
            let directed = Forest::Directed(directed_from_parents(parent));
            let undirected = Forest::Undirected(undirected_from_parents(parent));
            for k in [2, 3] {
                f(directed.clone(), k);
                f(undirected.clone(), k);
            }
        });
    }
}
