//! Explicit matrix representations of `S(p-) ⋊ g0`: quotients of `P(V0)`, their
//! component graphs, equivalence, indecomposability and the two-source family.

mod equiv;
mod family;
mod graph;
mod matrices;
mod quotient;

pub use equiv::{
    are_equivalent, are_equivalent_generic, hom_space, hom_space_generic, invertible_combination, indecomposability, is_indecomposable, HomSpace,
    Indecomposability,
};
pub use family::{build_family, equivariant_map, family_equivalence, FamilyBase, FamilySpec};
pub use graph::{component_graph, ComponentGraph, GraphArrow, GraphNode};
pub use matrices::{dualize, relation_failures, rep_matrices, verify_lie_relations, RepMatrices};
pub use quotient::{build_quotient, first_order_sweep, QuotientModule, SweepEntry, DEFAULT_DEGREE_CAP};

use thiserror::Error;

use crate::poly::PolyError;
use crate::sl2::IrrepLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("degree cap {cap} is below generator degree {degree}")]
    CapTooSmall { cap: u32, degree: u32 },
    #[error("quotient is not finite-dimensional up to degree {cap}")]
    NotFinite { cap: u32 },
    #[error("representation is not graded compatibly: {0}")]
    NotGraded(String),
    #[error("{to} does not occur in p- tensor {from}")]
    NoEquivariantMap { from: IrrepLabel, to: IrrepLabel },
    #[error("family bases differ")]
    BaseMismatch,
    #[error("family sinks must be inequivalent, got {0} twice")]
    EqualSinks(IrrepLabel),
}
