//! Connected coalitions on small simple graphs.
//!
//! A *connected coalition* is a pair of disjoint vertex sets, neither of which
//! is a connected dominating set (CDS), whose union is one. A connected
//! coalition partition splits `V(G)` into parts that are either a single full
//! vertex or a non-CDS with a non-CDS coalition partner; `CC(G)` is the largest
//! such partition, or 0 if none exists.
//!
//! This crate is `no_std` (it needs `alloc`) and carries the algorithmic core:
//!
//! * [`graph`], [`generators`], [`enumerate`], [`prufer`]: graph representation,
//!   standard families, products and exhaustive labeled corpora.
//! * [`domination`]: CDS predicates, `γ_c(G)` and the connected domatic number.
//! * [`coalition`]: the exact `CC(G)` oracle, partition validation, the
//!   domatic-to-coalition expansion and the coalition graph.
//! * [`family`]: membership in the peelable family `F` (exactly the graphs
//!   with `CC(G) = 0`).
//! * [`matrix`]: edge-domination/incidence matrices and the polynomial
//!   deciders for `CC(G) = n` and `CC(G) = n - 1`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coalition;
pub mod domination;
pub mod enumerate;
mod error;
pub mod family;
pub mod generators;
pub mod graph;
mod mask;
pub mod matrix;
pub mod partition;
pub mod prufer;
mod vertex_set;

pub use coalition::{
    cc_number, cc_number_with, coalition_graph, expand_domatic_to_cc_partition,
    forms_connected_coalition, is_cc_partition, CcOptions, CcPartition, CcResult, CoalitionGraph,
    PartRole, Partition, PartitionCheck,
};
pub use domination::{
    connected_domatic_number, gamma_c, is_connected_dominating_set, is_dominating_set,
    DomaticPartition,
};
pub use error::{Error, Result};
pub use family::{in_family_f, FamilyVerdict, PeelStep, PeelTerminal, PeelTrace};
pub use graph::{Edge, Graph};
pub use matrix::{
    check_cc_equals_n, check_cc_equals_n_minus_1, edge_domination_matrix, incidence_matrix,
    three_vertex_dominates, Decision, EdgeDominationMatrix, EdgeOrder, IncidenceMatrix, Variant,
};
pub use vertex_set::VertexSet;

/// Default order limit for the exhaustive partition searches.
pub const DEFAULT_GUARD: usize = 12;

/// Hard ceiling for the subset-table searches regardless of overrides.
pub const MAX_SEARCH_ORDER: usize = 20;
