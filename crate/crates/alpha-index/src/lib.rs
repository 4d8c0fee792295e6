//! Spectral extremal graph toolkit for the A_alpha matrix.
//!
//! The A_alpha matrix of a graph is the convex combination
//! `alpha*D + (1-alpha)*A` of its degree and adjacency matrices; its largest
//! eigenvalue (the alpha-index) interpolates between the adjacency spectral
//! radius and half the signless Laplacian one. This crate builds the
//! extremal families for graphs without a given linear forest, evaluates
//! every relevant closed-form bound, computes spectral radii numerically as
//! an independent oracle, and exhaustively scans small graphs to test the
//! extremal predictions at desk scale.
//!
//! Modules:
//! - [`graph`], [`graph6`], [`canon`]: bit-row graphs, serialization,
//!   canonical forms;
//! - [`spectral`]: dense Jacobi eigensolver, the numeric oracle;
//! - [`families`]: the S / S+ / F constructions and quotient oracles;
//! - [`closed_forms`]: validated and published formula evaluation;
//! - [`forest`]: linear-forest specs and exact containment;
//! - [`turan`]: edge-count bounds and the brute-force ex(n, F) oracle;
//! - [`enumerate`]: non-isomorphic graph streams;
//! - [`harness`]: verification grids, scans, and report serialization.
//!
//! The `examples/` directory holds one runnable walkthrough per capability;
//! the thin `alpha-index` binary exposes the same entry points as
//! subcommands.

pub mod canon;
pub mod closed_forms;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod harness;
mod roots;
pub mod spectral;
pub mod turan;

pub use error::{Error, Result};
pub use graph::Graph;
