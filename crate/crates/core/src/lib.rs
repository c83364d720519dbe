//! Iterated total and line graphs, their diameters and their incidence energy.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`graph`]: the immutable [`Graph`] value type with BFS metrics.
//! - [`families`]: the path-with-decorations families `F1..F5`, lollipops and
//!   the usual path/cycle/complete/star constructors.
//! - [`named`]: standard named graphs used as witnesses and corpus seeds.
//! - [`transforms`]: line graph, total graph and their iterates.
//! - [`search`]: induced/subgraph containment, diameter paths and diameter
//!   subgraphs.
//! - [`iso`]: colour refinement, canonical forms and exact isomorphism.
//! - [`spectral`]: incidence/adjacency/signless Laplacian matrices, a
//!   floating symmetric eigensolver, exact characteristic polynomials,
//!   incidence energy and the closed-form spectra and bounds for total graphs
//!   of regular graphs.
//! - [`verify`]: exhaustive small-graph corpora and one checker per theorem.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod families;
pub mod graph;
pub mod iso;
pub mod named;
pub mod search;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use bitset::BitSet;
pub use families::{Family, FamilyError};
pub use graph::{DistanceTable, EdgeList, Graph, GraphError};
pub use transforms::{IterateError, Operator, Provenance, ProvenancedGraph};
