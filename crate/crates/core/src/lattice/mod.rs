//! Brute-force integer linear algebra for the lattice of classes in each
//! degree, computed from the edge congruences alone.

mod classes;
mod echelon;
mod kernel;
mod matrix;
mod sparse;

pub use classes::{
    betti_expected, class_basis, class_basis_with, congruence_rows, hilbert_rank_expected,
    hilbert_table, CochainCoordinates, DegreeLattice, HilbertRow,
};
pub use echelon::EchelonLattice;
pub use kernel::integer_kernel;
pub use matrix::{invariant_factors, smith_normal_form, IntegerMatrix, SmithForm};
pub use sparse::{ext_gcd, SparseVec};

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("cochain has the wrong number of vertices or variables")]
    ShapeMismatch,
    #[error("value at vertex {vertex} is not homogeneous of cohomological degree {expected}")]
    DegreeMismatch { expected: u32, vertex: Vertex },
    #[error("not in the lattice")]
    NotInLattice,
    #[error("alpha({tail},{head}) has no coefficient +-1")]
    NonUnitAxial { tail: Vertex, head: Vertex },
}
