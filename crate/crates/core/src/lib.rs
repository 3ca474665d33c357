//! Exact construction of indecomposable representations of the Poincare algebra
//! `sl(2) x sl(2) ⋉ p-` and of a super Poincare algebra.

pub mod gens;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod sl2;
pub mod superalg;
