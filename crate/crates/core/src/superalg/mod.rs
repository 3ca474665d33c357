//! The simplest super Poincare algebra: 5x5 block matrices
//! `[[a, 0, 0], [w1, 0, 0], [z, w2, b]]` with `a, b` in sl(2), odd rows/columns
//! `w1`, `w2` and the even translations `z`.
//!
//! Conventions: `b` carries the left sl(2) (`b = X`), `a` the right one
//! (`a = -X^T`). Then `W1 = M(1,2)` is the right doublet `(0,1)`, `W2 = M(2,1)`
//! the left doublet `(1,0)`, and `{w2^i, w1^j} = z_(i,j)` with
//! `z_(1,1), z_(1,2), z_(2,1), z_(2,2) = z1, z2, z3, z4`.

mod decompose;
mod pbw;
mod triples;
mod urest;

pub use decompose::{
    decompose_u_nsuper, exterior_g0_action, label_list_mismatches, listed_labels, DecompositionEntry,
    LabelMismatch,
};
pub use pbw::{normal_order, normal_order_with, Letter, OddGen, OddKind, RewriteOrder, SuperElement, SuperMonomial};
pub use triples::{
    check_super_invariance, enumerate_triples, invariance_certificate, InvarianceCertificate, SuperIdealTriple,
};
pub use urest::{
    build_urest_filtration_rep, build_urest_rep, defining_rep, defining_subquotient, quotient_action,
    super_relation_failures, super_verify_relations, urest_degree_filtration, DegreeFiltration, SuperGen,
    SuperRepMatrices, URestRep,
};

use thiserror::Error;

use crate::ideal::{IdealError, IdealSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("ideals are not nested: need I1 <= I4 <= I7, got {i1} / {i4} / {i7}")]
    NotNested { i1: IdealSpec, i4: IdealSpec, i7: IdealSpec },
    #[error("{0} does not reach a full degree within the cap")]
    NotFinite(IdealSpec),
    #[error("the subspace is not invariant under {0}")]
    NotInvariant(String),
}

/// Index of `z_(i,j)` (1-based `i, j`) among `z1..z4`.
pub fn z_index(i: usize, j: usize) -> usize {
    2 * (i - 1) + (j - 1)
}
