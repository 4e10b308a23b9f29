//! Certificate-producing peeling for the directed lower bound.
//!
//! Given a rooted directed forest and a valid cover `P`,
//! [`peel_certificate`] dismantles the forest step by step and records why
//! each step forces cover members to be spent:
//!
//! * **path-removal**: a dangling chain of at most k vertices ending at a
//!   leaf is deleted; exactly one of its vertices (the leaf) lies in the
//!   residual cover.
//! * **branching-fan**: when every leaf's chain runs into a branching
//!   ancestor, the deepest such ancestor `u` is picked and the `b ≥ 2` bare
//!   chains hanging below it are deleted together. The `b` removed leaves
//!   lie in the residual cover, and `u` (kept, now itself a leaf) joins it.
//! * **base**: once at most k vertices remain, the residual cover still
//!   holds at least one member, its guaranteed leaf.
//!
//! Each step pays a known amount against `|P|` while shrinking the forest
//! by a bounded amount: a path step pays 1 for at most k vertices, a fan
//! step pays b − 1 for at most b·k vertices, and the base pays the final 1.
//! Composing the steps therefore certifies `|P| ≥ (n + k) / 2k`; the
//! [`PeelTrace::certified`] tally is an integer between the exact bound and
//! `|P|`. [`PeelTrace::replay`] re-checks all of this against the original
//! forest without trusting the generator.

use serde::{Deserialize, Serialize};

use crate::bounds::{lower_bound, BoundValue};
use crate::error::{Error, Result};
use crate::forest::{Forest, ForestKind, RootedDirectedForest};
use crate::verify::{verify_fast, CoverSet, Verdict};

/// One removal step of a peeling trace.
///
/// `removed` lists vertices in arc order: a path-removal chain runs from its
/// topmost vertex down to the leaf, and a fan concatenates the chains below
/// the kept branching vertex in ascending order of its children.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum PeelStep {
    PathRemoval {
        removed: Vec<usize>,
        p_removed: usize,
    },
    BranchingFan {
        removed: Vec<usize>,
        p_removed: usize,
        kept_branching: usize,
        fan_width: usize,
    },
    Base {
        removed: Vec<usize>,
        p_removed: usize,
    },
}

impl PeelStep {
    /// How much of the cover this step provably consumes.
    fn payment(&self) -> usize {
        match self {
            PeelStep::PathRemoval { .. } => 1,
            PeelStep::BranchingFan { fan_width, .. } => fan_width - 1,
            PeelStep::Base { .. } => 0,
        }
    }
}

/// An ordered list of removal steps certifying the directed lower bound for
/// a particular cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelTrace {
    pub steps: Vec<PeelStep>,
    /// |P| for the cover the trace was built from.
    pub cover_size: usize,
    /// The bound being certified, (n + k) / 2k.
    pub bound: BoundValue,
    /// 1 + the payments of all steps. Satisfies
    /// `bound ≤ certified ≤ cover_size` exactly.
    pub certified: usize,
}

enum Stop {
    Root,
    CoverParent,
    BranchingParent(usize),
}

struct Residual<'a> {
    forest: &'a RootedDirectedForest,
    alive: Vec<bool>,
    out_deg: Vec<usize>,
    in_cover: Vec<bool>,
    alive_count: usize,
}

impl<'a> Residual<'a> {
    fn new(forest: &'a RootedDirectedForest, cover: &CoverSet) -> Self {
        let n = forest.n();
        let mut in_cover = vec![false; n];
        for v in cover.iter() {
            in_cover[v] = true;
        }
        Self {
            forest,
            alive: vec![true; n],
            out_deg: (0..n).map(|v| forest.out_degree(v)).collect(),
            in_cover,
            alive_count: n,
        }
    }

    fn leaves(&self) -> Vec<usize> {
        (0..self.forest.n())
            .filter(|&v| self.alive[v] && self.out_deg[v] == 0)
            .collect()
    }

    /// Walks from a residual leaf through its ancestors, stopping at a root,
    /// a cover-member parent, or a branching parent. Returns the chain in
    /// leaf-to-top order.
    fn leaf_chain(&self, leaf: usize) -> (Vec<usize>, Stop) {
        let mut chain = vec![leaf];
        let mut cur = leaf;
        loop {
            match self.forest.parent(cur) {
                None => return (chain, Stop::Root),
                Some(p) => {
                    debug_assert!(self.alive[p], "parent of an alive vertex must be alive");
                    if self.out_deg[p] >= 2 {
                        return (chain, Stop::BranchingParent(p));
                    }
                    if self.in_cover[p] {
                        return (chain, Stop::CoverParent);
                    }
                    chain.push(p);
                    cur = p;
                }
            }
        }
    }

    /// The maximal bare chain hanging from `top` down to its leaf, in arc
    /// order. Panics if a branching vertex is encountered.
    fn bare_chain_down(&self, top: usize) -> Vec<usize> {
        let mut chain = vec![top];
        let mut cur = top;
        loop {
            assert!(
                self.out_deg[cur] <= 1,
                "branching vertex strictly below the fan root"
            );
            match self
                .forest
                .children(cur)
                .iter()
                .copied()
                .find(|&c| self.alive[c])
            {
                None => return chain,
                Some(next) => {
                    chain.push(next);
                    cur = next;
                }
            }
        }
    }

    fn remove_all(&mut self, vertices: &[usize]) {
        for &v in vertices {
            debug_assert!(self.alive[v]);
            self.alive[v] = false;
            self.in_cover[v] = false;
            self.alive_count -= 1;
        }
        for &v in vertices {
            if let Some(p) = self.forest.parent(v) {
                if self.alive[p] {
                    self.out_deg[p] -= 1;
                }
            }
        }
    }
}

/// Builds a peeling trace for a valid cover of a rooted directed forest.
///
/// Determinism: leaves are processed in ascending id, a path removal uses
/// the first leaf whose chain stops at a root or a cover member, and a fan
/// picks the stop vertex of greatest depth (smallest id on ties).
pub fn peel_certificate(
    forest: &RootedDirectedForest,
    k: usize,
    cover: &CoverSet,
) -> Result<PeelTrace> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    let n = forest.n();
    if n == 0 {
        return Err(Error::EmptyForest);
    }
    cover.check_in_range(n)?;
    let wrapped = Forest::Directed(forest.clone());
    if let Verdict::Invalid(violation) = verify_fast(&wrapped, k, cover)? {
        return Err(Error::NotACover(violation));
    }

    let depth = forest.depths();
    let mut residual = Residual::new(forest, cover);
    let mut steps = Vec::new();

    while residual.alive_count > k {
        let mut fan_stops: Vec<usize> = Vec::new();
        let mut path_removal: Option<Vec<usize>> = None;
        for leaf in residual.leaves() {
            let (chain, stop) = residual.leaf_chain(leaf);
            assert!(
                chain.len() <= k,
                "a constructed leaf path exceeded k; the cover check is broken"
            );
            match stop {
                Stop::Root | Stop::CoverParent => {
                    path_removal = Some(chain);
                    break;
                }
                Stop::BranchingParent(u) => fan_stops.push(u),
            }
        }

        if let Some(chain) = path_removal {
            assert!(residual.in_cover[chain[0]], "residual leaf outside cover");
            assert!(chain[1..].iter().all(|&v| !residual.in_cover[v]));
            let removed: Vec<usize> = chain.iter().rev().copied().collect();
            residual.remove_all(&removed);
            steps.push(PeelStep::PathRemoval {
                removed,
                p_removed: 1,
            });
        } else {
            let u = fan_stops
                .into_iter()
                .max_by_key(|&u| (depth[u], std::cmp::Reverse(u)))
                .expect("nonempty residual forest has a leaf");
            let mut removed = Vec::new();
            let mut fan_width = 0;
            for &child in forest.children(u) {
                if !residual.alive[child] {
                    continue;
                }
                let chain = residual.bare_chain_down(child);
                assert!(chain.len() <= k, "fan chain exceeded k");
                let leaf = *chain.last().unwrap();
                assert!(residual.in_cover[leaf], "residual leaf outside cover");
                assert!(chain[..chain.len() - 1]
                    .iter()
                    .all(|&v| !residual.in_cover[v]));
                fan_width += 1;
                removed.extend(chain);
            }
            assert!(fan_width >= 2, "fan root is not branching");
            residual.remove_all(&removed);
            residual.in_cover[u] = true;
            steps.push(PeelStep::BranchingFan {
                removed,
                p_removed: fan_width,
                kept_branching: u,
                fan_width,
            });
        }
    }

    let remaining: Vec<usize> = (0..n).filter(|&v| residual.alive[v]).collect();
    assert!(!remaining.is_empty() && remaining.len() <= k);
    let guaranteed_leaf = remaining
        .iter()
        .any(|&v| residual.out_deg[v] == 0 && residual.in_cover[v]);
    assert!(guaranteed_leaf, "residual forest lost its covered leaf");
    let p_removed = remaining.iter().filter(|&&v| residual.in_cover[v]).count();
    steps.push(PeelStep::Base {
        removed: remaining,
        p_removed,
    });

    let certified = 1 + steps.iter().map(PeelStep::payment).sum::<usize>();
    let bound = lower_bound(ForestKind::Directed, n, k)?;
    assert!(certified <= cover.len());
    assert!(bound.holds_for(certified));
    Ok(PeelTrace {
        steps,
        cover_size: cover.len(),
        bound,
        certified,
    })
}

impl PeelTrace {
    /// Independently re-checks the trace against the original forest.
    ///
    /// Replays every removal, re-deriving fan chains from the forest
    /// structure rather than trusting the recorded step, verifies the
    /// per-step claims (chain shape, residual leaf at the end, length ≤ k,
    /// exact cover-membership counts, fan width ≥ 2), that the removals
    /// empty the forest, and that the composed accounting yields
    /// `bound ≤ certified ≤ |P|`.
    pub fn replay(&self, forest: &RootedDirectedForest, k: usize, cover: &CoverSet) -> Result<()> {
        if k < 2 {
            return Err(Error::InvalidK { k });
        }
        let n = forest.n();
        if n == 0 {
            return Err(Error::EmptyForest);
        }
        cover.check_in_range(n)?;
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.cover_size != cover.len() {
            return fail(format!(
                "trace cover_size {} != |P| = {}",
                self.cover_size,
                cover.len()
            ));
        }
        let expected_bound = lower_bound(ForestKind::Directed, n, k)?;
        if self.bound != expected_bound {
            return fail(format!(
                "trace bound {} != expected {}",
                self.bound, expected_bound
            ));
        }

        let mut residual = Residual::new(forest, cover);
        for (index, step) in self.steps.iter().enumerate() {
            let is_last = index + 1 == self.steps.len();
            if matches!(step, PeelStep::Base { .. }) != is_last {
                return fail(format!(
                    "step {index}: base must appear exactly once, at the end"
                ));
            }
            match step {
                PeelStep::PathRemoval { removed, p_removed } => {
                    self.check_path_step(&residual, index, removed, *p_removed, k)?;
                    residual.remove_all(removed);
                }
                PeelStep::BranchingFan {
                    removed,
                    p_removed,
                    kept_branching,
                    fan_width,
                } => {
                    self.check_fan_step(
                        &residual,
                        index,
                        removed,
                        *p_removed,
                        *kept_branching,
                        *fan_width,
                        k,
                    )?;
                    residual.remove_all(removed);
                    residual.in_cover[*kept_branching] = true;
                }
                PeelStep::Base { removed, p_removed } => {
                    let alive: Vec<usize> = (0..n).filter(|&v| residual.alive[v]).collect();
                    if *removed != alive {
                        return fail(format!(
                            "step {index}: base must remove exactly the remaining vertices"
                        ));
                    }
                    if removed.is_empty() || removed.len() > k {
                        return fail(format!(
                            "step {index}: base size {} outside 1..={k}",
                            removed.len()
                        ));
                    }
                    let covered = removed.iter().filter(|&&v| residual.in_cover[v]).count();
                    if covered != *p_removed || covered == 0 {
                        return fail(format!(
                            "step {index}: base p_removed {p_removed} but {covered} cover members remain"
                        ));
                    }
                    if !removed
                        .iter()
                        .any(|&v| residual.out_deg[v] == 0 && residual.in_cover[v])
                    {
                        return fail(format!("step {index}: base has no covered leaf"));
                    }
                    residual.remove_all(removed);
                }
            }
        }
        if residual.alive_count != 0 {
            return fail(format!(
                "{} vertices survive the replay",
                residual.alive_count
            ));
        }
        let certified = 1 + self.steps.iter().map(PeelStep::payment).sum::<usize>();
        if certified != self.certified {
            return fail(format!(
                "recomputed certified value {certified} != recorded {}",
                self.certified
            ));
        }
        if certified > self.cover_size {
            return fail(format!(
                "certified value {certified} exceeds cover size {}",
                self.cover_size
            ));
        }
        if !self.bound.holds_for(certified) {
            return fail(format!(
                "certified value {certified} does not reach the bound {}",
                self.bound
            ));
        }
        Ok(())
    }

    fn check_path_step(
        &self,
        residual: &Residual<'_>,
        index: usize,
        removed: &[usize],
        p_removed: usize,
        k: usize,
    ) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        if removed.is_empty() || removed.len() > k {
            return fail(format!(
                "step {index}: path length {} outside 1..={k}",
                removed.len()
            ));
        }
        for pair in removed.windows(2) {
            if residual.forest.parent(pair[1]) != Some(pair[0]) {
                return fail(format!(
                    "step {index}: removed vertices do not form a directed path"
                ));
            }
        }
        for &v in removed {
            if !residual.alive[v] {
                return fail(format!("step {index}: vertex {v} already removed"));
            }
            if residual.out_deg[v] >= 2 {
                return fail(format!("step {index}: removed vertex {v} is branching"));
            }
        }
        let leaf = *removed.last().unwrap();
        if residual.out_deg[leaf] != 0 {
            return fail(format!("step {index}: path does not end at a leaf"));
        }
        let covered = removed.iter().filter(|&&v| residual.in_cover[v]).count();
        if covered != 1 || !residual.in_cover[leaf] || p_removed != 1 {
            return fail(format!(
                "step {index}: a path removal must spend exactly its leaf"
            ));
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn check_fan_step(
        &self,
        residual: &Residual<'_>,
        index: usize,
        removed: &[usize],
        p_removed: usize,
        u: usize,
        fan_width: usize,
        k: usize,
    ) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        if u >= residual.forest.n() || !residual.alive[u] {
            return fail(format!("step {index}: kept vertex {u} is not alive"));
        }
        if fan_width < 2 || p_removed != fan_width {
            return fail(format!(
                "step {index}: fan width {fan_width} invalid or p_removed mismatched"
            ));
        }
        // Re-derive the chains below u from the forest itself.
        let mut expected = Vec::new();
        let mut chains = 0;
        for &child in residual.forest.children(u) {
            if !residual.alive[child] {
                continue;
            }
            let mut cur = child;
            let mut len = 0;
            loop {
                if residual.out_deg[cur] >= 2 {
                    return fail(format!(
                        "step {index}: branching vertex {cur} below fan root {u}"
                    ));
                }
                expected.push(cur);
                len += 1;
                let in_cover = residual.in_cover[cur];
                match residual
                    .forest
                    .children(cur)
                    .iter()
                    .copied()
                    .find(|&c| residual.alive[c])
                {
                    None => {
                        if !in_cover {
                            return fail(format!(
                                "step {index}: fan leaf {cur} not in the residual cover"
                            ));
                        }
                        break;
                    }
                    Some(next) => {
                        if in_cover {
                            return fail(format!(
                                "step {index}: interior fan vertex {cur} is in the cover"
                            ));
                        }
                        cur = next;
                    }
                }
            }
            if len > k {
                return fail(format!("step {index}: fan chain longer than {k}"));
            }
            chains += 1;
        }
        if chains != fan_width {
            return fail(format!(
                "step {index}: fan width {fan_width} but {chains} chains below {u}"
            ));
        }
        if expected != removed {
            return fail(format!(
                "step {index}: removed vertices do not match the chains below {u}"
            ));
        }
        Ok(())
    }
}
