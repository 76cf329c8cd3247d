//! Exact combinatorics of directed multigraphs: oriented spanning tree
//! enumerators, sandpile (critical) groups, and directed line-graph
//! constructions, all over arbitrary-precision integers.
//!
//! The crate is split along the natural layers of the computation:
//!
//! * [`digraph`] — the directed multigraph data model (loops and parallel
//!   edges allowed) with degrees, structural predicates, deletion and
//!   contraction.
//! * [`linegraph`] — the directed line-graph operator, iterated line
//!   digraphs with path-labelled vertices, and the classical graph
//!   families (de Bruijn, Kautz, complete, bidirected bipartite).
//! * [`exactalg`] — dense big-integer matrices, fraction-free
//!   determinants, and Smith normal form with unimodular certificates.
//! * [`multipoly`] — sparse multivariate integer polynomials and
//!   determinants of polynomial matrices.
//! * [`treecount`] — weighted Laplacians, tree counts and enumerator
//!   polynomials, and checkers for the line-graph enumerator identities.
//! * [`sandpile`] — sandpile group presentations, the edge-to-vertex and
//!   vertex-to-edge homomorphisms between a graph and its line graph, and
//!   closed-form family structures.
//! * [`oracle`] — brute-force enumeration of oriented spanning trees and
//!   unicycles, used as ground truth on small graphs.
//! * [`randgraph`] — seeded random graph generators matching the
//!   hypotheses of the checkers.
//!
//! Everything is deterministic: iteration follows insertion order, random
//! generators are seeded, and all arithmetic is exact.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod digraph;
pub mod error;
pub mod exactalg;
pub mod linegraph;
pub mod multipoly;
pub mod oracle;
pub mod randgraph;
pub mod report;
pub mod sandpile;
pub mod treecount;

pub use digraph::{DirectedMultigraph, EdgeRecord};
pub use error::{Error, Result};
pub use exactalg::{IntMatrix, SnfDecomposition};
pub use multipoly::{PolyMatrix, SparsePoly};
pub use report::{Check, VerifyReport};
pub use sandpile::{AbelianGroupStructure, GroupHom, SandpilePresentation};
