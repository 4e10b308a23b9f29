//! Branching k-path vertex covers of forests.
//!
//! A *branching k-path vertex cover* of a forest is a vertex set `P` that
//! contains every leaf (and, in the undirected case, every isolated vertex)
//! such that every path on k vertices contains a branching vertex or a
//! member of `P`. This crate computes the minimum size of such a cover
//! exactly, verifies candidate covers, evaluates the tight lower bounds
//! `(n + k) / 2k` (rooted directed forests) and `(n + 3k − 1) / 2k`
//! (undirected forests, n ≥ 2) with machine-checkable peeling certificates,
//! reduces the undirected problem to the directed one, and constructs the
//! extremal families attaining the bounds.
//!
//! ```
//! use bkpvc::{gen_directed_extremal, lower_bound, solve, Forest, ForestKind};
//!
//! let family = gen_directed_extremal(3, 2)?; // 10 vertices, 3 leaves
//! let result = solve(&Forest::Directed(family), 2)?;
//! let bound = lower_bound(ForestKind::Directed, 10, 2)?;
//! assert_eq!(result.value, 3);
//! assert!(bound.equals_integer(result.value));
//! # Ok::<(), bkpvc::Error>(())
//! ```
//!
//! The accompanying guide under `book/` walks through the concepts; its code
//! snippets are compiled and run as doctests of this crate.

pub mod bounds;
mod error;
pub mod extremal;
pub mod forest;
pub mod io;
pub mod peel;
pub mod random;
pub mod reduce;
pub mod segment;
pub mod solve;
pub mod verify;

pub use bounds::{lower_bound, BoundValue};
pub use error::{Error, Result};
pub use extremal::{gen_directed_extremal, gen_undirected_extremal};
pub use forest::{Forest, ForestKind, RootedDirectedForest, UndirectedForest, VertexClass};
pub use io::ForestDoc;
pub use peel::{peel_certificate, PeelStep, PeelTrace};
pub use random::gen_random;
pub use reduce::{branching_preserved, reduce_to_directed, ReductionResult};
pub use segment::{decompose_bare_segments, BareSegmentDecomposition, Segment};
pub use solve::{
    greedy_window_extras, solve, solve_bruteforce, solve_bruteforce_with_cutoff, SolveResult,
    DEFAULT_BRUTEFORCE_CUTOFF,
};
pub use verify::{verify_fast, verify_naive, CoverSet, Verdict, Violation};

/// Compile and run the guide's code snippets as doctests.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(forests, "../../../book/src/forests.md");
    chapter!(covers, "../../../book/src/covers.md");
    chapter!(solver, "../../../book/src/solver.md");
    chapter!(bounds, "../../../book/src/bounds.md");
    chapter!(extremal, "../../../book/src/extremal.md");
    chapter!(cli, "../../../book/src/cli.md");

    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
