//! Graph equivariant cohomology of `Q_{2n}`: cochains, the generators
//! `M_v`, `Delta_K`, `X`, `iota(p)`, and the relations among them.

mod cochain;
mod generators;
mod relations;

pub use cochain::{is_class, Cochain, CochainJsonError, CongruenceViolation};
pub use generators::{
    all_generators, iota, make_delta, make_m, make_x, star_sets, star_sets_of_size, GeneratorId,
    VertexSet,
};
pub use relations::{
    product_formula, product_formula_factor_text, uniqueness_probe_m, verify_relation1,
    verify_relation2, verify_relation3, verify_relation4, ProductFormula, Relation1Outcome,
    Relation3, RelationCheck,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("{0} contains a bar pair")]
    PropertyStar(VertexSet),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set {set} has size {got}, expected {expected}")]
    WrongSize {
        set: VertexSet,
        expected: usize,
        got: usize,
    },
    #[error("vertex {0} is not in {1}")]
    NotMember(usize, VertexSet),
    #[error("{0} has no index other than {1}")]
    Singleton(VertexSet, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0} is neither V minus a vertex nor a set with no bar pair")]
    InvalidIndexSet(VertexSet),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
