//! Hypergraphs in which every vertex coloring has a monochromatic or a rainbow
//! edge, with large girth.
//!
//! The crate provides validated hypergraph values ([`hypergraph`]), Berge
//! girth and exact cycle counts ([`girth`]), an exact coloring solver
//! ([`solver`]), the explicit recursive constructions ([`construct`]), the
//! random constructions and counting bound ([`probabilistic`]), and JSON/DOT
//! artifacts ([`io`]) used by the `rmhg` command line tool ([`cli`]).

pub mod cli;
pub mod coloring;
pub mod construct;
pub mod girth;
pub mod hypergraph;
pub mod io;

pub mod probabilistic;
pub mod solver;
pub mod util;

pub use coloring::{Coloring, EdgeClass};
pub use girth::{CycleWitness, Girth};
pub use hypergraph::{Edge, Hypergraph, HypergraphError, PartiteHypergraph, Uniformity, VertexId};
pub use solver::Verdict;
