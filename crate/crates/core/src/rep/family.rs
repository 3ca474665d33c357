use serde::Serialize;

use crate::linalg::{unit, Matrix, Rational, SparseVec, Subspace};
use crate::poly::PolySpace;
use crate::sl2::{highest_weights, irrep_matrices, isotypic_span, IrrepLabel};

use super::{are_equivalent, RepError, RepMatrices};

/// The g0-equivariant map `p- ⊗ source -> target`, as four matrices
/// (`target.dim x source.dim`, one per `z_i`), in the standard irrep bases.
pub fn equivariant_map(source: IrrepLabel, target: IrrepLabel) -> Result<Vec<Matrix>, RepError> {
    let space = PolySpace::new(source, 1);
    let n = space.dim(1);
    let action = space.g0_matrices(1);
    let hw = highest_weights(&action, &Subspace::full(n));
    if hw.multiplicity(target) != 1 {
        return Err(RepError::NoEquivariantMap { from: source, to: target });
    }
    let mut cols: Vec<SparseVec> = Vec::new();
    let mut offset = 0;
    for (l, vecs) in &hw.by_weight {
        if *l == target {
            offset = cols.len();
        }
        cols.extend(isotypic_span(&action, *l, vecs));
    }
    let inv = Matrix::from_columns(n, &cols).inverse().expect("isotypic basis");
    let nv = source.dim();
    let td = target.dim();
    let mut out = Vec::new();
    for i in 0..4 {
        let mut m = Matrix::zeros(td, nv);
        for k in 0..nv {
            // Degree-one monomials are ordered z1..z4.
            let coords = inv.mul_vec(&unit(i * nv + k));
            for (r, x) in coords.range(offset..offset + td) {
                m.set(r - offset, k, x.clone());
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Two sources, two inequivalent sinks, and the equivariant maps from each source
/// to each sink.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyBase {
    pub sources: [IrrepLabel; 2],
    pub sinks: [IrrepLabel; 2],
    #[serde(skip)]
    f: [Vec<Matrix>; 2],
    #[serde(skip)]
    g: [Vec<Matrix>; 2],
}

impl FamilyBase {
    pub fn new(sources: [IrrepLabel; 2], sinks: [IrrepLabel; 2]) -> Result<Self, RepError> {
        if sinks[0] == sinks[1] {
            return Err(RepError::EqualSinks(sinks[0]));
        }
        Ok(FamilyBase {
            sources,
            sinks,
            f: [equivariant_map(sources[0], sinks[0])?, equivariant_map(sources[1], sinks[0])?],
            g: [equivariant_map(sources[0], sinks[1])?, equivariant_map(sources[1], sinks[1])?],
        })
    }

    pub fn dim(&self) -> usize {
        self.sources.iter().chain(&self.sinks).map(|l| l.dim()).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub base: FamilyBase,
    /// `(alpha, beta, gamma, delta)`: weights of source 1 and source 2 into the
    /// first sink, then into the second.
    #[serde(serialize_with = "ser_params")]
    pub params: [Rational; 4],
}

fn ser_params<S: serde::Serializer>(p: &[Rational; 4], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<String> = p.iter().map(crate::linalg::format_rational).collect();
    v.serialize(s)
}

impl FamilySpec {
    pub fn new(base: FamilyBase, params: [Rational; 4]) -> Self {
        FamilySpec { base, params }
    }
}

/// Block matrices: sources first (grade 0), then the two sinks (grade 1).
pub fn build_family(f: &FamilySpec) -> RepMatrices {
    let b = &f.base;
    let dims: Vec<usize> = b.sources.iter().chain(&b.sinks).map(|l| l.dim()).collect();
    let offs: Vec<usize> = dims
        .iter()
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let n = dims.iter().sum();
    let [alpha, beta, gamma, delta] = &f.params;
    let mut p_minus = Vec::new();
    for i in 0..4 {
        let mut m = Matrix::zeros(n, n);
        m.set_block(offs[2], offs[0], &b.f[0][i].scaled(alpha));
        m.set_block(offs[2], offs[1], &b.f[1][i].scaled(beta));
        m.set_block(offs[3], offs[0], &b.g[0][i].scaled(gamma));
        m.set_block(offs[3], offs[1], &b.g[1][i].scaled(delta));
        p_minus.push(m);
    }
    let irreps: Vec<Vec<Matrix>> = b
        .sources
        .iter()
        .chain(&b.sinks)
        .map(|l| irrep_matrices(*l).action)
        .collect();
    let g0 = (0..6)
        .map(|g| {
            let blocks: Vec<&Matrix> = irreps.iter().map(|a| &a[g]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    let grades = dims
        .iter()
        .enumerate()
        .flat_map(|(k, &d)| std::iter::repeat_n(if k < 2 { 0 } else { 1 }, d))
        .collect();
    RepMatrices::new(p_minus, g0, grades)
}

/// Equivalence of two members, decided by intertwiner existence.
pub fn family_equivalence(f1: &FamilySpec, f2: &FamilySpec) -> Result<bool, RepError> {
    if f1.base != f2.base {
        return Err(RepError::BaseMismatch);
    }
    Ok(are_equivalent(&build_family(f1), &build_family(f2)))
}
