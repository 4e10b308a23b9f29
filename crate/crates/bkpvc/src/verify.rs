//! Cover verification.
//!
//! A set `P` is a branching k-path vertex cover of a forest when every leaf
//! (and, undirected, every isolated vertex, which the degree-≤-1 leaf rule
//! already includes) belongs to `P`, and every path on k vertices contains a
//! branching vertex or a member of `P`. Directed forests use directed paths
//! and out-degree-based classes.
//!
//! Two checkers are provided. [`verify_naive`] enumerates the k-vertex paths
//! directly and is the oracle. [`verify_fast`] checks forced vertices and
//! then slides a window over each bare segment; it returns the same verdict
//! on every input, though a failing witness may differ.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{Forest, RootedDirectedForest, UndirectedForest, VertexClass};
use crate::segment::decompose_bare_segments;

/// A set of vertex ids proposed or returned as a cover.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoverSet {
    members: BTreeSet<usize>,
}

impl CoverSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full vertex set of an n-vertex forest (the trivial cover).
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    /// Checks `members ⊆ [0, n)`.
    pub fn check_in_range(&self, n: usize) -> Result<()> {
        match self.members.iter().next_back() {
            Some(&max) if max >= n => Err(Error::InvalidVertex { vertex: max, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for CoverSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self {
            members: iter.into_iter().collect(),
        }
    }
}

/// Why a set fails to be a cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "witness", rename_all = "kebab-case")]
pub enum Violation {
    /// A leaf (or isolated vertex) missing from the set.
    UncoveredLeaf(usize),
    /// k consecutive-adjacent vertices with no branching vertex and no
    /// member of the set. Directed witnesses are listed in arc order.
    UncoveredPath(Vec<usize>),
}

/// Outcome of a verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }
}

fn check_inputs(forest: &Forest, k: usize, cover: &CoverSet) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    if forest.n() == 0 {
        return Err(Error::EmptyForest);
    }
    cover.check_in_range(forest.n())
}

/// Reports the lowest-id leaf missing from the cover, if any.
fn uncovered_leaf(forest: &Forest, cover: &CoverSet) -> Option<Violation> {
    forest
        .leaves()
        .into_iter()
        .find(|&v| !cover.contains(v))
        .map(Violation::UncoveredLeaf)
}

/// Oracle verifier: enumerates every k-vertex path.
///
/// Undirected paths are walked by DFS from every start vertex with ascending
/// neighbor order, keeping the orientation whose first id is smaller, so the
/// reported witness is the deterministically first violating path. Prefixes
/// that already contain a branching vertex or a cover member cannot extend
/// to a violation and are pruned.
pub fn verify_naive(forest: &Forest, k: usize, cover: &CoverSet) -> Result<Verdict> {
    check_inputs(forest, k, cover)?;
    if let Some(violation) = uncovered_leaf(forest, cover) {
        return Ok(Verdict::Invalid(violation));
    }
    let found = match forest {
        Forest::Undirected(f) => first_uncovered_path_undirected(f, k, cover),
        Forest::Directed(f) => first_uncovered_path_directed(f, k, cover),
    };
    Ok(match found {
        Some(path) => Verdict::Invalid(Violation::UncoveredPath(path)),
        None => Verdict::Valid,
    })
}

fn first_uncovered_path_undirected(
    f: &UndirectedForest,
    k: usize,
    cover: &CoverSet,
) -> Option<Vec<usize>> {
    let classes = f.classify();
    let bare = |v: usize| classes[v] != VertexClass::Branching && !cover.contains(v);
    let mut on_path = vec![false; f.n()];
    let mut path = Vec::with_capacity(k);

    fn extend(
        f: &UndirectedForest,
        k: usize,
        bare: &dyn Fn(usize) -> bool,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
    ) -> bool {
        if path.len() == k {
            // Keep one orientation per path.
            return path[0] < path[k - 1];
        }
        let last = *path.last().unwrap();
        for &w in f.neighbors(last) {
            if on_path[w] || !bare(w) {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if extend(f, k, bare, on_path, path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    for start in 0..f.n() {
        if !bare(start) {
            continue;
        }
        path.clear();
        path.push(start);
        on_path[start] = true;
        if extend(f, k, &bare, &mut on_path, &mut path) {
            return Some(path);
        }
        on_path[start] = false;
    }
    None
}

fn first_uncovered_path_directed(
    f: &RootedDirectedForest,
    k: usize,
    cover: &CoverSet,
) -> Option<Vec<usize>> {
    let classes = f.classify();
    let bare = |v: usize| classes[v] != VertexClass::Branching && !cover.contains(v);
    let mut path = Vec::with_capacity(k);

    fn extend(
        f: &RootedDirectedForest,
        k: usize,
        bare: &dyn Fn(usize) -> bool,
        path: &mut Vec<usize>,
    ) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().unwrap();
        for &c in f.children(last) {
            if !bare(c) {
                continue;
            }
            path.push(c);
            if extend(f, k, bare, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    for start in 0..f.n() {
        if !bare(start) {
            continue;
        }
        path.clear();
        path.push(start);
        if extend(f, k, &bare, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Segment verifier: same verdict as [`verify_naive`] on every input.
///
/// Checks that all forced vertices are covered, then that every length-k
/// contiguous window of every bare segment contains a cover member. Paths
/// through a branching vertex never need checking, and every branching-free
/// k-path is a window of exactly one segment.
pub fn verify_fast(forest: &Forest, k: usize, cover: &CoverSet) -> Result<Verdict> {
    check_inputs(forest, k, cover)?;
    if let Some(violation) = uncovered_leaf(forest, cover) {
        return Ok(Verdict::Invalid(violation));
    }
    let decomposition = decompose_bare_segments(forest)?;
    for segment in &decomposition.segments {
        let vs = &segment.vertices;
        if vs.len() < k {
            continue;
        }
        let mut since_covered = 0;
        for (pos, &v) in vs.iter().enumerate() {
            if cover.contains(v) {
                since_covered = 0;
            } else {
                since_covered += 1;
                if since_covered == k {
                    let window = vs[pos + 1 - k..=pos].to_vec();
                    return Ok(Verdict::Invalid(Violation::UncoveredPath(window)));
                }
            }
        }
    }
    Ok(Verdict::Valid)
}
