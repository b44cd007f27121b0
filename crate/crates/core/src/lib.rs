//! Exact computations in the GKM-graph equivariant cohomology of the
//! even-dimensional complex quadric `Q_{2n}`.

pub mod cohomology;
pub mod exec;
pub mod graph;
pub mod lattice;
pub mod ordinary;
pub mod poly;
pub mod reduction;
pub mod suite;
pub mod words;

pub use cohomology::{Cochain, GeneratorId, VertexSet};
pub use exec::Exec;
pub use graph::{QuadricGraph, Vertex};
pub use poly::{LinearForm, Monomial, Polynomial};
