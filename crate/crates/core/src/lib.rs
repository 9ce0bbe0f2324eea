//! Two-colored quasi-best-match graphs (2-qBMGs): recognition, forbidden
//! induced paths and cycles, dominating bicliques, type-(A) decomposition,
//! orientations, odd-even digraphs, tree construction and exhaustive
//! enumeration.
//!
//! Graphs are small (at most 64 vertices) and stored as bitmask adjacency.
//! Exhaustive sweeps run on rayon when the `parallel` feature is enabled
//! (the default) and fall back to a plain loop otherwise; see [`par`].

pub mod axioms;
pub mod biclique;
pub mod canon;
pub mod decompose;
pub mod dgf;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod orient;
pub mod par;
pub mod paths;
pub mod sweeps;
pub mod tree;
pub mod vset;

pub use axioms::{recognize, Axiom, AxiomWitness, RecognitionReport};
pub use biclique::Biclique;
pub use canon::CanonicalForm;
pub use decompose::{Decomposition, KosPartition};
pub use digraph::{build_digraph, Color, Digraph, Neighborhood, UGraph, VertexId};
pub use error::{Error, Result};
pub use par::Exec;
pub use tree::{LeafColoring, PhyloTree, TruncationMap};
pub use vset::VertexSet;
