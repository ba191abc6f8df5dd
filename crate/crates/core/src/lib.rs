//! Edge-disjoint path realization of demand multigraphs in `K_{n,n}`.
//!
//! A demand graph is a loopless multigraph on the vertex set `A ∪ B` of the
//! complete bipartite graph `K_{n,n}`. Every demand edge asks for a path
//! between its endpoints; a realization is a family of pairwise
//! edge-disjoint such paths. Solvers in this crate work by *lifting* demand
//! edges (replacing `xy` by `xz, zy`) until the working graph becomes a
//! simple subgraph of `K_{n,n}`; the paths are then read back from edge
//! labels.
//!
//! The crate is `no_std` and only needs `alloc`. Timing, file formats and the
//! command-line front end live in the `edp-cli` crate.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod degree;
pub mod edge;
pub mod error;
pub mod graph;
pub mod maxedp;
pub mod oracle;
pub mod realization;
pub mod regular;
pub mod report;

pub use coloring::{ColorEdge, EdgeColoring, Lists};
pub use degree::{realize_deg1, realize_deg2, DegreeConditions, DegreeOptions, DegreeVariant};
pub use edge::{pad_to_exact, realize_edge};
pub use error::{GraphError, SolveError};
pub use graph::{
    DemandEdge, DemandGraph, EdgeLabel, InstanceId, LabeledMultigraph, Part, Side, VertexId,
};
pub use maxedp::{degree_bounded_subgraph, maxedp_approx, maxedp_exact, MaxEdpResult, Partitioner};
pub use oracle::{edp_decide, EdpOutcome, SearchBudget};
pub use realization::{extract_paths, verify_realization, Realization, Violation};
pub use regular::regularize;
pub use report::{Method, Outcome, SolveReport};
