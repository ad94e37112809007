//! Combinatorics of the zero-divisor, annihilator, and weakly zero-divisor
//! graphs of rings of continuous functions over a space with finitely many
//! relevant isolated points.
//!
//! Every nonzero function class is encoded by its support, a nonempty
//! proper subset of the `n` points, held as a `u64` bitmask. The three
//! graph kinds differ only in their adjacency rule on supports:
//! disjointness, incomparability, or existence of disjoint nonzero
//! annihilator witnesses. On top of that sit:
//!
//! - [`graph`]: the reduced graph (one vertex per class) and its blow-up
//!   (finitely many scalar-multiple copies per class),
//! - [`metrics`]: distances, girth, triangle structure, complements,
//!   domination, cliques, and the closed-form predictions for each,
//! - [`coloring`]: a two-phase greedy chain coloring that meets the clique
//!   bound exactly, plus an independent chain decomposition,
//! - [`iso`]: isomorphism search, and restriction/extension between
//!   reduced graphs and blow-ups,
//! - [`predict`] and [`suite`]: side-by-side tables of claimed versus
//!   computed parameters, and a windowed verification suite,
//! - [`export`]: byte-stable JSON and DOT output.
//!
//! # Example
//!
//! ```
//! use anngraph::metrics::{clique_number, diameter, Distance};
//! use anngraph::{GraphKind, ReducedGraph};
//!
//! let g = ReducedGraph::build(5, GraphKind::Annihilator)?;
//! assert_eq!(diameter(&g), Distance::Finite(2));
//! assert_eq!(clique_number(&g, 1 << 20).size, 10); // C(5, 2)
//! # Ok::<(), anngraph::ModelError>(())
//! ```

pub mod adjacency;
pub mod coloring;
pub mod error;
pub mod export;
pub mod graph;
pub mod iso;
pub mod metrics;
pub mod model;
pub mod predict;
pub mod suite;

pub use error::{ColoringError, ExportError, IsoError, ModelError};
pub use graph::{BlowUpGraph, DenseGraph, Graph, ReducedGraph};
pub use model::{Cardinal, GraphKind, PointSet, SpaceModel};
