//! Reduction from undirected forests to rooted directed forests.
//!
//! Per connected component: an isolated vertex is simply removed; otherwise
//! the lowest-id leaf `u` is removed, its unique neighbor `v` becomes the
//! root, and all remaining edges of the component are oriented away from
//! `v`. The resulting forest `H` has `n − p` vertices (`p` = component
//! count), every leaf of `H` is a leaf of the original forest or the new
//! root of a two-vertex component, and every kept vertex that branches in
//! the original forest still branches in `H`; see [`branching_preserved`].
//!
//! For any valid cover `P` of the original forest, each removed vertex is a
//! leaf and so lies in `P`; the restriction `Q = P ∩ V(H)` is a valid cover
//! of `H` with `|Q| = |P| − p`. Combining that with the directed bound on
//! `H` yields the undirected bound.

use crate::error::{Error, Result};
use crate::forest::{RootedDirectedForest, UndirectedForest};
use crate::verify::CoverSet;

/// The directed forest produced from an undirected one, with the bookkeeping
/// needed to transport covers across the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    /// H, over compacted ids `0..n-p`.
    pub forest: RootedDirectedForest,
    /// Per component, ordered by smallest vertex id: the removed vertex and
    /// the new root, both as original ids. Isolated components have no root.
    pub removed_per_component: Vec<(usize, Option<usize>)>,
    /// p, the number of connected components of the input.
    pub component_count: usize,
    /// Original id of each H vertex; strictly increasing.
    pub to_original: Vec<usize>,
}

impl ReductionResult {
    /// H's id for an original vertex, if it was kept.
    pub fn h_id(&self, original: usize) -> Option<usize> {
        self.to_original.binary_search(&original).ok()
    }

    /// Restricts a cover of the original forest to H: `Q = P ∩ V(H)`,
    /// expressed in H ids.
    pub fn restrict_cover(&self, cover: &CoverSet) -> CoverSet {
        self.to_original
            .iter()
            .enumerate()
            .filter(|&(_, &orig)| cover.contains(orig))
            .map(|(h, _)| h)
            .collect()
    }
}

/// Roots every component of an undirected forest as described in the module
/// docs. Needs `n ≥ 2`; `k` is validated but does not influence the
/// construction. `H` may be empty when every component is an isolated
/// vertex, and callers handle that case separately.
pub fn reduce_to_directed(forest: &UndirectedForest, k: usize) -> Result<ReductionResult> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    let n = forest.n();
    if n < 2 {
        return Err(Error::DomainViolation {
            what: "undirected-to-directed reduction",
            n,
            min: 2,
        });
    }

    let comp = forest.component_ids();
    let component_count = forest.component_count();
    let mut removed_per_component = vec![(usize::MAX, None); component_count];
    for v in 0..n {
        let entry = &mut removed_per_component[comp[v]];
        if entry.0 != usize::MAX {
            continue;
        }
        if forest.degree(v) == 0 {
            *entry = (v, None);
        } else if forest.degree(v) == 1 {
            // Ascending scan: the first degree-1 vertex of a component is
            // its lowest-id leaf.
            *entry = (v, Some(forest.neighbors(v)[0]));
        }
    }
    debug_assert!(removed_per_component.iter().all(|e| e.0 != usize::MAX));

    let removed: Vec<usize> = removed_per_component.iter().map(|e| e.0).collect();
    let mut is_removed = vec![false; n];
    for &v in &removed {
        is_removed[v] = true;
    }
    let to_original: Vec<usize> = (0..n).filter(|&v| !is_removed[v]).collect();
    let mut h_id = vec![usize::MAX; n];
    for (h, &orig) in to_original.iter().enumerate() {
        h_id[orig] = h;
    }

    // Orient each rooted component away from its root.
    let mut parent: Vec<Option<usize>> = vec![None; to_original.len()];
    for &(_, root) in &removed_per_component {
        let Some(root) = root else { continue };
        let mut stack = vec![root];
        let mut seen = vec![root];
        while let Some(v) = stack.pop() {
            for &w in forest.neighbors(v) {
                if is_removed[w] || parent[h_id[w]].is_some() || w == root {
                    continue;
                }
                parent[h_id[w]] = Some(h_id[v]);
                stack.push(w);
                seen.push(w);
            }
        }
        debug_assert!(!seen.is_empty());
    }
    let directed = RootedDirectedForest::build(&parent)?;

    Ok(ReductionResult {
        forest: directed,
        removed_per_component,
        component_count,
        to_original,
    })
}

/// Checks the preserved-branching property of a reduction: every kept vertex
/// with degree ≥ 3 in the original forest has out-degree ≥ 2 in H. Holds
/// for every valid reduction; exposed as an explicitly checkable fact.
pub fn branching_preserved(forest: &UndirectedForest, reduction: &ReductionResult) -> Result<bool> {
    let n = forest.n();
    let h = &reduction.forest;
    if reduction.to_original.len() != h.n()
        || reduction.removed_per_component.len() != reduction.component_count
        || h.n() + reduction.component_count != n
        || reduction.component_count != forest.component_count()
    {
        return Err(Error::MismatchedInputs(
            "reduction does not fit the given forest".into(),
        ));
    }
    if reduction.to_original.windows(2).any(|w| w[0] >= w[1])
        || reduction.to_original.iter().any(|&v| v >= n)
    {
        return Err(Error::MismatchedInputs(
            "reduction vertex map is not a sorted subset of the forest".into(),
        ));
    }
    Ok(reduction
        .to_original
        .iter()
        .enumerate()
        .all(|(h_vertex, &orig)| !forest.is_branching(orig) || h.out_degree(h_vertex) >= 2))
}
