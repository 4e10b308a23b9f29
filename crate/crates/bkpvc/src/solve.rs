//! Exact minimum-cover computation.
//!
//! [`solve`] works on the bare segment decomposition: every cover must
//! contain the forced vertices (leaves, which in the undirected case include
//! isolated vertices), branching vertices never help cover a branching-free
//! window, and the windows of distinct segments are independent. So the
//! minimum is the forced set plus, per segment, the fewest extra vertices
//! stabbing every length-k window, found by a left-to-right greedy that
//! picks the rightmost position of each run of k uncovered positions.
//!
//! [`solve_bruteforce`] is the independent oracle: size-ordered subset
//! enumeration over supersets of the forced set, checked with the naive
//! verifier.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::segment::decompose_bare_segments;
use crate::verify::{verify_naive, CoverSet};

/// Largest instance the brute-force oracle accepts by default.
pub const DEFAULT_BRUTEFORCE_CUTOFF: usize = 18;

/// A minimum cover together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: CoverSet,
}

/// Computes the minimum branching k-path vertex cover exactly.
///
/// The witness is deterministic: the forced vertices plus the greedy
/// extras of each segment, scanned in segment order.
pub fn solve(forest: &Forest, k: usize) -> Result<SolveResult> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    if forest.n() == 0 {
        return Err(Error::EmptyForest);
    }
    let decomposition = decompose_bare_segments(forest)?;
    let mut witness: CoverSet = forest.leaves().into_iter().collect();
    for segment in &decomposition.segments {
        for pos in greedy_window_extras(segment.len(), &segment.forced, k) {
            witness.insert(segment.vertices[pos]);
        }
    }
    Ok(SolveResult {
        value: witness.len(),
        witness,
    })
}

/// The window-covering greedy on a single path.
///
/// Scans `len` positions left to right; `forced` positions (ascending)
/// count as already chosen. Whenever k consecutive positions are unchosen,
/// the rightmost of them is picked. The returned extras, together with the
/// forced positions, put a chosen position in every window of k consecutive
/// positions, and no smaller extra set can (segments shorter than k need
/// nothing, having no window).
pub fn greedy_window_extras(len: usize, forced: &[usize], k: usize) -> Vec<usize> {
    let mut extras = Vec::new();
    let mut forced_iter = forced.iter().copied().peekable();
    let mut gap = 0;
    for pos in 0..len {
        if forced_iter.next_if_eq(&pos).is_some() {
            gap = 0;
        } else {
            gap += 1;
            if gap == k {
                extras.push(pos);
                gap = 0;
            }
        }
    }
    extras
}

/// Brute-force oracle with the default cutoff of
/// [`DEFAULT_BRUTEFORCE_CUTOFF`] vertices.
pub fn solve_bruteforce(forest: &Forest, k: usize) -> Result<SolveResult> {
    solve_bruteforce_with_cutoff(forest, k, DEFAULT_BRUTEFORCE_CUTOFF)
}

/// Brute-force oracle: enumerates supersets of the forced set in increasing
/// size (then lexicographically) and returns the first that the naive
/// verifier accepts.
pub fn solve_bruteforce_with_cutoff(
    forest: &Forest,
    k: usize,
    cutoff: usize,
) -> Result<SolveResult> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    let n = forest.n();
    if n == 0 {
        return Err(Error::EmptyForest);
    }
    if n > cutoff {
        return Err(Error::TooLarge { n, cutoff });
    }
    let forced = forest.leaves();
    let candidates: Vec<usize> = (0..n).filter(|v| !forest.is_leaf(*v)).collect();
    for extra in 0..=candidates.len() {
        for combo in candidates.iter().combinations(extra) {
            let cover: CoverSet = forced
                .iter()
                .copied()
                .chain(combo.into_iter().copied())
                .collect();
            if verify_naive(forest, k, &cover)?.is_valid() {
                return Ok(SolveResult {
                    value: cover.len(),
                    witness: cover,
                });
            }
        }
    }
    unreachable!("the full vertex set is always a valid cover")
}
