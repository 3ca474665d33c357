use std::cell::OnceCell;
use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::linalg::{int, scale, unit, Matrix, SparseVec, Subspace};
use crate::poly::PolySpace;
use crate::rep::{relation_failures, RepMatrices};
use crate::sl2::{highest_weights, irrep_matrices, isotypic_span, GeneratorId, IrrepLabel, IrrepMatrices};

use super::triples::SuperIdealTriple;
use super::{z_index, SuperError};

/// A generator of the super Poincare algebra. Odd indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperGen {
    Z(usize),
    G(GeneratorId),
    W1(usize),
    W2(usize),
}

impl SuperGen {
    /// `z1..z4`, the six g0 generators, `w1^1, w1^2, w2^1, w2^2`.
    pub fn all() -> Vec<SuperGen> {
        let mut v: Vec<SuperGen> = (0..4).map(SuperGen::Z).collect();
        v.extend(GeneratorId::ALL.iter().map(|&g| SuperGen::G(g)));
        v.extend([SuperGen::W1(1), SuperGen::W1(2), SuperGen::W2(1), SuperGen::W2(2)]);
        v
    }

    pub fn name(self) -> String {
        match self {
            SuperGen::Z(i) => format!("z{}", i + 1),
            SuperGen::G(g) => g.name().to_string(),
            SuperGen::W1(j) => format!("w1^{j}"),
            SuperGen::W2(i) => format!("w2^{i}"),
        }
    }
}

/// Even part as for `S(p-) ⋊ g0`, plus the four odd operators. Grades count
/// polynomial degree twice plus odd factors, so `z` raises them by 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperRepMatrices {
    #[serde(flatten)]
    pub even: RepMatrices,
    #[serde(rename = "odd", serialize_with = "ser_odd")]
    pub w: ([Matrix; 2], [Matrix; 2]),
}

fn ser_odd<S: Serializer>(w: &([Matrix; 2], [Matrix; 2]), s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Odd<'a> {
        w1: &'a [Matrix; 2],
        w2: &'a [Matrix; 2],
    }
    Odd { w1: &w.0, w2: &w.1 }.serialize(s)
}

impl SuperRepMatrices {
    pub fn dim(&self) -> usize {
        self.even.dim
    }

    pub fn get(&self, g: SuperGen) -> &Matrix {
        match g {
            SuperGen::Z(i) => &self.even.p_minus[i],
            SuperGen::G(g) => self.even.g(g),
            SuperGen::W1(j) => &self.w.0[j - 1],
            SuperGen::W2(i) => &self.w.1[i - 1],
        }
    }

    /// In the order of [`SuperGen::all`].
    pub fn generators(&self) -> Vec<&Matrix> {
        SuperGen::all().into_iter().map(|g| self.get(g)).collect()
    }
}

/// Quotient of `U_rest · V` by an invariant subspace, with its block sizes
/// `[P/I1 ⊗ V, P/I4 ⊗ w1^1 ⊗ V, P/I4 ⊗ w1^2 ⊗ V, P/I7 ⊗ w1^1 w1^2 ⊗ V]`.
#[derive(Clone, Debug, Serialize)]
pub struct URestRep {
    pub triple: Option<SuperIdealTriple>,
    pub source: IrrepLabel,
    pub block_dims: [usize; 4],
    #[serde(flatten)]
    pub rep: SuperRepMatrices,
}

const KIND: [usize; 4] = [0, 1, 1, 2];
const ODD_COUNT: [i64; 4] = [0, 1, 1, 2];

struct DegreeOps {
    mult: Vec<Matrix>,
    g0: Vec<Matrix>,
}

/// `U_rest · V` split into the four blocks, with a chosen subspace of each
/// `P_d ⊗ V` for the three kinds (block 0, blocks 1-2, block 3). From degree
/// `stable` on every subspace is everything.
pub(super) struct BlockModel {
    space: PolySpace,
    parts: [Vec<Subspace>; 3],
    stable: u32,
    w1: IrrepMatrices,
    ops: Vec<OnceCell<DegreeOps>>,
}

type Image = Vec<(usize, u32, SparseVec)>;

impl BlockModel {
    pub(super) fn new(source: IrrepLabel, parts: [Vec<Subspace>; 3]) -> Self {
        let stable = parts[0].len() as u32;
        assert!(parts.iter().all(|p| p.len() as u32 == stable));
        BlockModel {
            space: PolySpace::new(source, stable),
            parts,
            stable,
            w1: irrep_matrices(IrrepLabel::new(0, 1)),
            ops: (0..stable).map(|_| OnceCell::new()).collect(),
        }
    }

    fn ops(&self, d: u32) -> &DegreeOps {
        self.ops[d as usize].get_or_init(|| DegreeOps {
            mult: (0..4).map(|i| self.space.mult_matrix(i, d)).collect(),
            g0: self.space.g0_matrices(d),
        })
    }

    fn part(&self, b: usize, d: u32) -> &Subspace {
        &self.parts[KIND[b]][d as usize]
    }

    /// `g` applied to `v` in block `b`, degree `d`; `d < stable`.
    pub(super) fn apply(&self, g: SuperGen, b: usize, d: u32, v: &SparseVec) -> Image {
        let ops = self.ops(d);
        let mul = |i: usize, c: i64| {
            let mut w = ops.mult[i].mul_vec(v);
            if c != 1 {
                scale(&mut w, &int(c));
            }
            w
        };
        match g {
            SuperGen::Z(i) => vec![(b, d + 1, mul(i, 1))],
            SuperGen::G(g) => {
                let mut out = vec![(b, d, ops.g0[g.index()].mul_vec(v))];
                if b == 1 || b == 2 {
                    for (k, x) in self.w1.get(g).column(b - 1) {
                        let mut w = v.clone();
                        scale(&mut w, &x);
                        out.push((1 + k, d, w));
                    }
                }
                out
            }
            SuperGen::W1(1) => match b {
                0 => vec![(1, d, v.clone())],
                2 => vec![(3, d, v.clone())],
                _ => vec![],
            },
            SuperGen::W1(2) => match b {
                0 => vec![(2, d, v.clone())],
                1 => {
                    let mut w = v.clone();
                    scale(&mut w, &int(-1));
                    vec![(3, d, w)]
                }
                _ => vec![],
            },
            SuperGen::W2(i) => match b {
                1 => vec![(0, d + 1, mul(z_index(i, 1), 1))],
                2 => vec![(0, d + 1, mul(z_index(i, 2), 1))],
                3 => vec![(1, d + 1, mul(z_index(i, 2), -1)), (2, d + 1, mul(z_index(i, 1), 1))],
                _ => vec![],
            },
            SuperGen::W1(_) => panic!("odd index out of range"),
        }
    }

    /// First generator (by name) that moves the chosen subspace out of itself,
    /// looking at source degrees up to `max_degree`.
    pub(super) fn first_violation(&self, max_degree: u32) -> Option<String> {
        let gens: Vec<SuperGen> = {
            // Odd generators first: they are the ones that tie the blocks together.
            let mut g = SuperGen::all();
            g.rotate_left(10);
            g
        };
        for d in 0..self.stable.min(max_degree.saturating_add(1)) {
            for g in &gens {
                for b in 0..4 {
                    for v in self.part(b, d).basis() {
                        for (tb, td, w) in self.apply(*g, b, d, v) {
                            if td < self.stable && !self.part(tb, td).contains_vec(&w) {
                                return Some(g.name());
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Matrices on the quotient by the chosen subspace. Only meaningful when
    /// `first_violation` finds nothing.
    pub(super) fn quotient_rep(&self) -> (SuperRepMatrices, [usize; 4]) {
        let mut basis: Vec<(usize, u32, usize)> = Vec::new();
        let mut block_dims = [0usize; 4];
        for b in 0..4 {
            for d in 0..self.stable {
                for c in self.part(b, d).free_columns() {
                    basis.push((b, d, c));
                    block_dims[b] += 1;
                }
            }
        }
        let index: BTreeMap<(usize, u32, usize), usize> =
            basis.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let n = basis.len();
        let mut mats: Vec<Matrix> = Vec::new();
        for g in SuperGen::all() {
            let mut m = Matrix::zeros(n, n);
            for (col, &(b, d, c)) in basis.iter().enumerate() {
                for (tb, td, w) in self.apply(g, b, d, &unit(c)) {
                    if td >= self.stable {
                        continue;
                    }
                    for (k, x) in self.part(tb, td).quotient_coords(&w) {
                        m.add_to(index[&(tb, td, k)], col, &x);
                    }
                }
            }
            mats.push(m);
        }
        let grades = basis.iter().map(|&(b, d, _)| 2 * d as i64 + ODD_COUNT[b]).collect();
        let mut it = mats.into_iter();
        let p_minus: Vec<Matrix> = it.by_ref().take(4).collect();
        let g0: Vec<Matrix> = it.by_ref().take(6).collect();
        let w: Vec<Matrix> = it.collect();
        let [a, b, c, e]: [Matrix; 4] = w.try_into().expect("four odd generators");
        (
            SuperRepMatrices {
                even: RepMatrices::new(p_minus, g0, grades),
                w: ([a, b], [c, e]),
            },
            block_dims,
        )
    }
}

/// Every failed relation of the super Poincare algebra, as readable strings.
pub fn super_relation_failures(m: &SuperRepMatrices) -> Vec<String> {
    let mut out = relation_failures(&m.even);
    let w1 = |j: usize| m.get(SuperGen::W1(j));
    let w2 = |i: usize| m.get(SuperGen::W2(i));
    for j in 1..=2 {
        for k in j..=2 {
            if !w1(j).anticommutator(w1(k)).is_zero() {
                out.push(format!("{{w1^{j}, w1^{k}}}"));
            }
            if !w2(j).anticommutator(w2(k)).is_zero() {
                out.push(format!("{{w2^{j}, w2^{k}}}"));
            }
        }
    }
    for i in 1..=2 {
        for j in 1..=2 {
            if &w2(i).anticommutator(w1(j)) != m.get(SuperGen::Z(z_index(i, j))) {
                out.push(format!("{{w2^{i}, w1^{j}}}"));
            }
        }
    }
    let odd = [SuperGen::W1(1), SuperGen::W1(2), SuperGen::W2(1), SuperGen::W2(2)];
    for k in 0..4 {
        for &o in &odd {
            if !m.get(SuperGen::Z(k)).commutator(m.get(o)).is_zero() {
                out.push(format!("[z{}, {}]", k + 1, o.name()));
            }
        }
    }
    let w1_type = irrep_matrices(IrrepLabel::new(0, 1));
    let w2_type = irrep_matrices(IrrepLabel::new(1, 0));
    for g in GeneratorId::ALL {
        for (ty, make) in [(&w1_type, SuperGen::W1 as fn(usize) -> SuperGen), (&w2_type, SuperGen::W2)] {
            for j in 1..=2 {
                let lhs = m.get(SuperGen::G(g)).commutator(m.get(make(j)));
                let mut rhs = Matrix::zeros(m.dim(), m.dim());
                for (k, x) in ty.get(g).column(j - 1) {
                    rhs = rhs.combine(m.get(make(k + 1)), &x);
                }
                if lhs != rhs {
                    out.push(format!("[{}, {}]", g.name(), make(j).name()));
                }
            }
        }
    }
    out
}

pub fn super_verify_relations(m: &SuperRepMatrices) -> bool {
    super_relation_failures(m).is_empty()
}

/// The quotient of `U_rest = P ⊕ P·W1 ⊕ P·(W1∧W1)` by `I1 ⊕ I4·W1 ⊕ I7·(W1∧W1)`.
pub fn build_urest_rep(t: &SuperIdealTriple, degree_cap: u32) -> Result<URestRep, SuperError> {
    let model = super::triples::triple_model(t, degree_cap)?;
    if let Some(g) = model.first_violation(u32::MAX) {
        return Err(SuperError::NotInvariant(g));
    }
    let (rep, block_dims) = model.quotient_rep();
    Ok(URestRep {
        triple: Some(t.clone()),
        source: IrrepLabel::TRIVIAL,
        block_dims,
        rep,
    })
}

/// `U_rest^s = P_{>=s+2} ⊕ P_{>=s+1}·W1 ⊕ P_{>=s}·(W1∧W1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeFiltration {
    pub s: u32,
    pub thresholds: [u32; 3],
}

pub fn urest_degree_filtration(s: u32) -> DegreeFiltration {
    DegreeFiltration {
        s,
        thresholds: [s + 2, s + 1, s],
    }
}

impl DegreeFiltration {
    /// Whether `self` contains `other` as subspaces.
    pub fn contains(&self, other: &DegreeFiltration) -> bool {
        self.thresholds.iter().zip(&other.thresholds).all(|(a, b)| a <= b)
    }

    fn model(&self, source: IrrepLabel) -> BlockModel {
        let stable = self.thresholds[0];
        let space = PolySpace::new(source, stable);
        let parts = self.thresholds.map(|t| {
            (0..stable)
                .map(|d| {
                    if d < t {
                        Subspace::zero(space.dim(d))
                    } else {
                        Subspace::full(space.dim(d))
                    }
                })
                .collect()
        });
        BlockModel::new(source, parts)
    }

    /// Direct check on every generator with `V = source`, for source degrees up
    /// to `max_degree`.
    pub fn is_invariant(&self, source: IrrepLabel, max_degree: u32) -> bool {
        self.model(source).first_violation(max_degree).is_none()
    }
}

/// `U_rest · V / U_rest^s · V`.
pub fn build_urest_filtration_rep(source: IrrepLabel, s: u32) -> Result<URestRep, SuperError> {
    let model = urest_degree_filtration(s).model(source);
    if let Some(g) = model.first_violation(u32::MAX) {
        return Err(SuperError::NotInvariant(g));
    }
    let (rep, block_dims) = model.quotient_rep();
    Ok(URestRep {
        triple: None,
        source,
        block_dims,
        rep,
    })
}

/// The 5x5 matrices, basis ordered as the `a` block, the middle entry, then the
/// `b` block.
pub fn defining_rep() -> SuperRepMatrices {
    let e = |r: usize, c: usize| {
        let mut m = Matrix::zeros(5, 5);
        m.set(r, c, int(1));
        m
    };
    let p_minus = (0..4).map(|k| e(3 + k / 2, k % 2)).collect();
    let x = |g: GeneratorId| -> Matrix {
        match g {
            GeneratorId::EL | GeneratorId::ER => Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            GeneratorId::FL | GeneratorId::FR => Matrix::from_i64(&[&[0, 0], &[1, 0]]),
            GeneratorId::HL | GeneratorId::HR => Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        }
    };
    let g0 = GeneratorId::ALL
        .iter()
        .map(|&g| {
            let mut m = Matrix::zeros(5, 5);
            if g.is_left() {
                m.set_block(3, 3, &x(g));
            } else {
                m.set_block(0, 0, &x(g).transpose().neg());
            }
            m
        })
        .collect();
    SuperRepMatrices {
        even: RepMatrices::new(p_minus, g0, vec![0, 0, 1, 2, 2]),
        w: ([e(2, 0), e(2, 1)], [e(3, 2), e(4, 2)]),
    }
}

/// Action on `ambient / sub` in the coordinates of `sub`'s free columns.
/// `sub` must be invariant under every matrix.
pub fn quotient_action(mats: &[&Matrix], sub: &Subspace) -> Vec<Matrix> {
    let free = sub.free_columns();
    let pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    mats.iter()
        .map(|m| {
            let mut out = Matrix::zeros(free.len(), free.len());
            for (j, &c) in free.iter().enumerate() {
                for (k, x) in sub.quotient_coords(&m.column(c)) {
                    out.set(pos[&k], j, x);
                }
            }
            out
        })
        .collect()
}

/// With `V` the right doublet, `U_rest · V / U_rest^0 · V` is 14-dimensional;
/// dividing out its `(1, 2)` and `(0, 2)` pieces leaves five dimensions.
pub fn defining_subquotient() -> Result<SuperRepMatrices, SuperError> {
    let big = build_urest_filtration_rep(IrrepLabel::new(0, 1), 0)?.rep;
    let n = big.dim();
    let hw = highest_weights(&big.even.g0, &Subspace::full(n));
    let mut vecs: Vec<SparseVec> = Vec::new();
    for l in [IrrepLabel::new(1, 2), IrrepLabel::new(0, 2)] {
        vecs.extend(isotypic_span(&big.even.g0, l, &hw.by_weight[&l]));
    }
    let sub = Subspace::span(n, vecs);
    for g in SuperGen::all() {
        if !sub.is_invariant_under(big.get(g)) {
            return Err(SuperError::NotInvariant(g.name()));
        }
    }
    let mats = quotient_action(&big.generators(), &sub);
    let grades = sub.free_columns().iter().map(|&c| big.even.grades[c]).collect();
    let mut it = mats.into_iter();
    let p_minus: Vec<Matrix> = it.by_ref().take(4).collect();
    let g0: Vec<Matrix> = it.by_ref().take(6).collect();
    let w: Vec<Matrix> = it.collect();
    let [a, b, c, e]: [Matrix; 4] = w.try_into().expect("four odd generators");
    Ok(SuperRepMatrices {
        even: RepMatrices::new(p_minus, g0, grades),
        w: ([a, b], [c, e]),
    })
}
