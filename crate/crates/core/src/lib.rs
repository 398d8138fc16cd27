//! Generator distance between finite algebras.
//!
//! Two algebras in a class are joined by a blue edge when one is a large
//! subalgebra of the other (it plus a single extra element generates the
//! whole thing), and by a red edge when they are isomorphic. The generator
//! distance counts the fewest blue edges on a path between them.
//!
//! - [`monounary`] represents finite monounary algebras and decides
//!   isomorphism through canonical codes.
//! - [`distance`] computes the exact distance between monounary algebras
//!   without searching the network.
//! - [`network`] builds networks over operation-table algebras and over
//!   all small monounary algebras; the latter serves as a brute-force
//!   oracle.
//! - [`qz`] evaluates distances between subgroups of `Q/Z` given as
//!   choice sequences.

pub mod distance;
pub mod error;
pub mod monounary;
pub mod network;
pub mod qz;
mod tokens;

pub use distance::{distance, Distance};
pub use error::{Error, Result};
pub use monounary::MonoAlg;
