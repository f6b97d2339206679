//! Exact computation of minimal generators of symbolic Rees algebras of
//! edge ideals and ideals of vertex covers of graphs and clutters.
//!
//! A generator `x^a t^b` is stored as a [`CoverVector`] `(a, b)`. The crate
//! offers two independent routes to the generators of a graph's cover
//! algebra (the combinatorial classification in [`covers`] and integral
//! Hilbert bases in [`hilbert`]) and builds the graph-theoretic detectors
//! of [`sra`] on top of them.

pub mod cli;
pub mod covers;
pub mod error;
pub mod graph;
pub mod hilbert;
mod limits;
pub mod linalg;
pub mod polyhedra;
pub mod sra;

pub use covers::{CoverKind, CoverVector, GeneratorSet};
pub use error::{Error, Result};
pub use graph::{Clutter, Graph, VertexSet};
pub use limits::Limits;
