//! Bare segment decomposition.
//!
//! Non-branching vertices have degree at most 2 (undirected) or out-degree
//! at most 1 (directed), so deleting every branching vertex from a forest
//! leaves a disjoint union of paths. We call those paths *bare segments*.
//! Their key property: every k-vertex path of the forest that avoids
//! branching vertices is a contiguous window of exactly one segment. The
//! fast verifier and the exact solver both reduce to window checks on
//! segments.

use crate::error::{Error, Result};
use crate::forest::{Forest, RootedDirectedForest, UndirectedForest, VertexClass};

/// One maximal path of non-branching vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// Vertex ids in path order. Directed segments are listed in arc order;
    /// undirected segments run from their lower-id endpoint.
    pub vertices: Vec<usize>,
    /// Positions (indices into `vertices`) holding leaves of the original
    /// forest. These vertices are forced into every cover.
    pub forced: Vec<usize>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// The full decomposition: disjoint segments jointly containing every
/// non-branching vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BareSegmentDecomposition {
    pub segments: Vec<Segment>,
}

impl BareSegmentDecomposition {
    /// Total number of vertices across segments
    /// (= n − number of branching vertices).
    pub fn vertex_count(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }
}

/// Deletes all branching vertices and collects the remaining paths.
pub fn decompose_bare_segments(forest: &Forest) -> Result<BareSegmentDecomposition> {
    if forest.n() == 0 {
        return Err(Error::EmptyForest);
    }
    let segments = match forest {
        Forest::Undirected(f) => undirected_segments(f),
        Forest::Directed(f) => directed_segments(f),
    };
    Ok(BareSegmentDecomposition { segments })
}

fn undirected_segments(f: &UndirectedForest) -> Vec<Segment> {
    let classes = f.classify();
    let branching = |v: usize| classes[v] == VertexClass::Branching;
    let mut visited = vec![false; f.n()];
    let mut segments = Vec::new();
    for start in 0..f.n() {
        if branching(start) || visited[start] {
            continue;
        }
        let bare_degree = f
            .neighbors(start)
            .iter()
            .filter(|&&w| !branching(w))
            .count();
        if bare_degree >= 2 {
            // Interior of a chain; it will be swept up from an endpoint.
            continue;
        }
        // Ascending scan means a chain is always entered at its lower-id
        // endpoint, which fixes the orientation.
        let mut vertices = vec![start];
        visited[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = f
            .neighbors(cur)
            .iter()
            .find(|&&w| !branching(w) && w != prev)
        {
            visited[next] = true;
            vertices.push(next);
            prev = cur;
            cur = next;
        }
        segments.push(finish_segment(vertices, &classes));
    }
    segments
}

fn directed_segments(f: &RootedDirectedForest) -> Vec<Segment> {
    let classes = f.classify();
    let branching = |v: usize| classes[v] == VertexClass::Branching;
    let mut segments = Vec::new();
    for start in 0..f.n() {
        if branching(start) {
            continue;
        }
        // A segment head is a non-branching vertex whose parent is absent or
        // branching. (A non-branching parent has out-degree ≤ 1, so it lies
        // on the same chain just above.)
        let is_head = match f.parent(start) {
            None => true,
            Some(p) => branching(p),
        };
        if !is_head {
            continue;
        }
        let mut vertices = vec![start];
        let mut cur = start;
        while let Some(&next) = f.children(cur).iter().find(|&&c| !branching(c)) {
            vertices.push(next);
            cur = next;
        }
        segments.push(finish_segment(vertices, &classes));
    }
    segments
}

fn finish_segment(vertices: Vec<usize>, classes: &[VertexClass]) -> Segment {
    let forced = vertices
        .iter()
        .enumerate()
        .filter(|&(_, &v)| classes[v] == VertexClass::Leaf)
        .map(|(pos, _)| pos)
        .collect();
    Segment { vertices, forced }
}
