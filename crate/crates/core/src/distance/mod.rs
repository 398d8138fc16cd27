//! Exact generator distance between finite monounary algebras.
//!
//! The computation never searches the network directly. It matches
//! components with a min-cost assignment (unmatched components are built
//! from scratch at the cost of their minimum generating set), matches the
//! in-trees of equal-length cores rotation by rotation, and reduces a pair
//! of trees to the pair of forests below their roots.

mod assignment;
mod large;
mod pushup;
mod solver;

pub use assignment::{assignment_min, assignment_min_brute, Assignment, CostMatrix};
pub use large::{is_largely_embeddable, LargeEmbedWitness, WitnessKind};
pub use pushup::push_up_witness;
pub use solver::{connected_distance, distance, forest_distance, tree_distance, DistanceSolver};

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

/// A value in `ω ∪ {∞}`. `Finite(_) < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub const ZERO: Distance = Distance::Finite(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl From<u64> for Distance {
    fn from(d: u64) -> Self {
        Distance::Finite(d)
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Distance {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(Distance::Infinite)
        } else {
            s.parse().map(Distance::Finite)
        }
    }
}
