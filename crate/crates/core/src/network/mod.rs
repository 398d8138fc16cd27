//! Finite algebras given by operation tables, their subalgebras, and
//! networks of large embeddings.

mod algebra;
mod builtin;
mod graph;
mod iso;
mod monounary_net;
mod parse;
mod subalgebra_net;

pub use algebra::{enumerate_subalgebras, is_large_subalgebra, FiniteAlgebra, Operation, SubUniverse, MAX_TABLE_LEN};
pub use builtin::{
    alternating_group, boolean_algebra, builtin, cycle_notation, cyclic_group, direct_product, parse_cycles,
    symmetric_group,
};
pub use graph::{component_diameter, network_distance, Color, Network};
pub use iso::fa_isomorphic;
pub use monounary_net::{
    build_monounary_network, enumerate_monounary, enumerate_monounary_exhaustive, MonoNetwork, EXHAUSTIVE_CAP_LIMIT,
    MONOUNARY_CAP_LIMIT,
};
pub use parse::{parse_fa, to_fa};
pub use subalgebra_net::{build_subalgebra_network, SubalgebraNetwork};
