//! Wheels, disc-planar terminal graphs and K5-subdivisions.
//!
//! `wheelkit` is a toolkit for the finite objects that show up around 4- and
//! 5-separations with a planar side: terminal graphs drawn in a disc, wheels
//! whose terminal vertices are all spokes ("S-good" wheels), exact
//! K5-subdivision and disjoint-path search, graph reductions that lift
//! subdivisions back, precolored 4-coloring extensions, and a catalog of six
//! small terminal graphs that carry no S-good wheel.
//!
//! All searches are exact and exhaustive with explicit size limits
//! ([`Limits`]); exceeding a limit is an error, never a silent answer.
//!
//! The runnable programs in `examples/` walk through each capability.

pub mod catalog;
pub mod coloring;
pub mod config;
pub mod embedding;
pub mod error;
pub mod experiment;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod io;
pub mod iso;
pub mod linkage;
pub mod oracle;
pub mod planarity;
pub mod recipe;
pub mod separation;
pub mod subdivision;
pub mod terminal;
pub mod wheel;

pub use error::{Error, Limits, Result};
pub use graph::{CycleArc, Graph, VertexEdgeSet};
pub use terminal::TerminalGraph;
