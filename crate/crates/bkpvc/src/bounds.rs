//! The two lower bounds on the minimum cover size.
//!
//! For a rooted directed forest on n ≥ 1 vertices and k ≥ 2, every cover has
//! at least (n + k) / 2k members. For an undirected forest on n ≥ 2
//! vertices the bound is (n + 3k − 1) / 2k. Both are tight whenever the
//! expression is an integer; see [`crate::extremal`] for the families that
//! attain them. Since cover sizes are integers, the ceiling of either
//! expression is also a valid lower bound.
//!
//! Values are kept as exact rationals in integer arithmetic; tightness
//! checks need exact equality, which floating point cannot promise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::ForestKind;

/// An exact lower bound `numerator / denominator` with its ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub numerator: usize,
    /// Always 2k.
    pub denominator: usize,
    /// Smallest integer ≥ numerator / denominator.
    pub ceiling: usize,
}

impl BoundValue {
    /// Whether the exact bound is an integer (the tight case).
    pub fn is_integral(&self) -> bool {
        self.numerator.is_multiple_of(self.denominator)
    }

    /// Exact rational equality with an integer value.
    pub fn equals_integer(&self, value: usize) -> bool {
        value * self.denominator == self.numerator
    }

    /// Whether an integer cover size satisfies the bound,
    /// i.e. `value ≥ numerator / denominator` exactly.
    pub fn holds_for(&self, value: usize) -> bool {
        value * self.denominator >= self.numerator
    }
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}/{} (ceiling {})",
            self.numerator, self.denominator, self.ceiling
        )
    }
}

/// The lower bound for an n-vertex forest of the given kind.
///
/// Directed forests need n ≥ 1, undirected forests n ≥ 2; smaller values
/// are outside the domain of the respective bound.
pub fn lower_bound(kind: ForestKind, n: usize, k: usize) -> Result<BoundValue> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    let numerator = match kind {
        ForestKind::Directed => {
            if n < 1 {
                return Err(Error::DomainViolation {
                    what: "directed lower bound",
                    n,
                    min: 1,
                });
            }
            n + k
        }
        ForestKind::Undirected => {
            if n < 2 {
                return Err(Error::DomainViolation {
                    what: "undirected lower bound",
                    n,
                    min: 2,
                });
            }
            n + 3 * k - 1
        }
    };
    let denominator = 2 * k;
    Ok(BoundValue {
        numerator,
        denominator,
        ceiling: numerator.div_ceil(denominator),
    })
}
