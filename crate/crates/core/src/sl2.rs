//! Irreducible representations of sl(2) x sl(2) and highest-weight bookkeeping.
//!
//! Labels use doubled spins: `(a, b)` is the irreducible of spin `(a/2, b/2)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{int, kernel, Matrix, SparseVec, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct IrrepLabel {
    pub a: u32,
    pub b: u32,
}

impl From<(u32, u32)> for IrrepLabel {
    fn from((a, b): (u32, u32)) -> Self {
        IrrepLabel { a, b }
    }
}

impl From<IrrepLabel> for (u32, u32) {
    fn from(l: IrrepLabel) -> Self {
        (l.a, l.b)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl IrrepLabel {
    pub const TRIVIAL: IrrepLabel = IrrepLabel { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        IrrepLabel { a, b }
    }

    pub fn dim(&self) -> usize {
        (self.a as usize + 1) * (self.b as usize + 1)
    }

    /// The label in spin notation, e.g. `(1/2, 1)`.
    pub fn spin_notation(&self) -> String {
        fn half(n: u32) -> String {
            if n.is_multiple_of(2) {
                (n / 2).to_string()
            } else {
                format!("{}/2", n)
            }
        }
        format!("({}, {})", half(self.a), half(self.b))
    }

    pub fn mirror(&self) -> IrrepLabel {
        IrrepLabel::new(self.b, self.a)
    }
}

pub fn dim(l: IrrepLabel) -> usize {
    l.dim()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GeneratorId {
    #[serde(rename = "E_L")]
    EL,
    #[serde(rename = "F_L")]
    FL,
    #[serde(rename = "H_L")]
    HL,
    #[serde(rename = "E_R")]
    ER,
    #[serde(rename = "F_R")]
    FR,
    #[serde(rename = "H_R")]
    HR,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 6] = [
        GeneratorId::EL,
        GeneratorId::FL,
        GeneratorId::HL,
        GeneratorId::ER,
        GeneratorId::FR,
        GeneratorId::HR,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorId::EL => "E_L",
            GeneratorId::FL => "F_L",
            GeneratorId::HL => "H_L",
            GeneratorId::ER => "E_R",
            GeneratorId::FR => "F_R",
            GeneratorId::HR => "H_R",
        }
    }

    pub fn is_left(self) -> bool {
        matches!(self, GeneratorId::EL | GeneratorId::FL | GeneratorId::HL)
    }
}

/// Structure constants: `[x, y] = c * z` for the basis pairs that do not commute.
pub fn bracket(x: GeneratorId, y: GeneratorId) -> Option<(i64, GeneratorId)> {
    use GeneratorId::*;
    let (h, e, f) = if x.is_left() && y.is_left() {
        (HL, EL, FL)
    } else if !x.is_left() && !y.is_left() {
        (HR, ER, FR)
    } else {
        return None;
    };
    let sign = |p: GeneratorId, q: GeneratorId, c: i64, r: GeneratorId| {
        if x == p && y == q {
            Some((c, r))
        } else if x == q && y == p {
            Some((-c, r))
        } else {
            None
        }
    };
    sign(h, e, 2, e)
        .or_else(|| sign(h, f, -2, f))
        .or_else(|| sign(e, f, 1, h))
}

/// Six matrices indexed by `GeneratorId::index()`.
pub type G0Action = Vec<Matrix>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepMatrices {
    pub label: IrrepLabel,
    pub action: G0Action,
}

impl IrrepMatrices {
    pub fn get(&self, g: GeneratorId) -> &Matrix {
        &self.action[g.index()]
    }
}

/// Basis `v_{j,k} = F_L^j F_R^k v_{0,0}`, stored at index `j * (b + 1) + k`.
pub fn irrep_matrices(l: IrrepLabel) -> IrrepMatrices {
    let (a, b) = (l.a as i64, l.b as i64);
    let n = l.dim();
    let idx = |j: i64, k: i64| (j * (b + 1) + k) as usize;
    let mut action: G0Action = (0..6).map(|_| Matrix::zeros(n, n)).collect();
    for j in 0..=a {
        for k in 0..=b {
            let src = idx(j, k);
            action[GeneratorId::HL.index()].set(src, src, int(a - 2 * j));
            action[GeneratorId::HR.index()].set(src, src, int(b - 2 * k));
            if j < a {
                action[GeneratorId::FL.index()].set(idx(j + 1, k), src, int(1));
            }
            if j > 0 {
                action[GeneratorId::EL.index()].set(idx(j - 1, k), src, int(j * (a - j + 1)));
            }
            if k < b {
                action[GeneratorId::FR.index()].set(idx(j, k + 1), src, int(1));
            }
            if k > 0 {
                action[GeneratorId::ER.index()].set(idx(j, k - 1), src, int(k * (b - k + 1)));
            }
        }
    }
    IrrepMatrices { label: l, action }
}

/// Clebsch-Gordan in each factor.
pub fn tensor_decompose(l1: IrrepLabel, l2: IrrepLabel) -> Vec<IrrepLabel> {
    let range = |x: u32, y: u32| {
        let lo = x.abs_diff(y);
        (lo..=x + y).step_by(2).collect::<Vec<_>>()
    };
    let mut out = Vec::new();
    for a in range(l1.a, l2.a) {
        for b in range(l1.b, l2.b) {
            out.push(IrrepLabel::new(a, b));
        }
    }
    out.sort();
    out
}

/// Relations of sl(2) x sl(2) that fail for `action`, as readable strings.
pub fn g0_relation_failures(action: &[Matrix]) -> Vec<String> {
    let mut out = Vec::new();
    for &x in &GeneratorId::ALL {
        for &y in &GeneratorId::ALL {
            if x >= y {
                continue;
            }
            let lhs = action[x.index()].commutator(&action[y.index()]);
            let rhs = match bracket(x, y) {
                Some((c, z)) => action[z.index()].scaled(&int(c)),
                None => Matrix::zeros(lhs.rows(), lhs.cols()),
            };
            if lhs != rhs {
                out.push(format!("[{}, {}]", x.name(), y.name()));
            }
        }
    }
    out
}

/// Highest-weight data of a g0-invariant subspace of some ambient module.
#[derive(Clone, Debug)]
pub struct HighestWeights {
    /// Highest weight vectors grouped by weight; each group is a basis.
    pub by_weight: BTreeMap<IrrepLabel, Vec<SparseVec>>,
}

impl HighestWeights {
    pub fn multiplicities(&self) -> BTreeMap<IrrepLabel, usize> {
        self.by_weight.iter().map(|(l, v)| (*l, v.len())).collect()
    }

    pub fn multiplicity(&self, l: IrrepLabel) -> usize {
        self.by_weight.get(&l).map_or(0, |v| v.len())
    }

    pub fn total_dim(&self) -> usize {
        self.by_weight.iter().map(|(l, v)| l.dim() * v.len()).sum()
    }
}

/// Solve for the vectors of `space` killed by every matrix in `ops`.
pub fn joint_kernel_in(space: &Subspace, ops: &[&Matrix]) -> Vec<SparseVec> {
    let basis = space.basis();
    if basis.is_empty() {
        return Vec::new();
    }
    let n = space.ambient();
    // Columns are op(b_k); stack the ops vertically.
    let mut cols: Vec<SparseVec> = vec![SparseVec::new(); basis.len()];
    for (t, op) in ops.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            for (i, x) in op.mul_vec(b) {
                cols[k].insert(t * n + i, x);
            }
        }
    }
    let m = Matrix::from_columns(n * ops.len().max(1), &cols);
    kernel(&m)
        .basis()
        .iter()
        .map(|c| {
            let mut v = SparseVec::new();
            for (&k, x) in c {
                crate::linalg::axpy(&mut v, x, &basis[k]);
            }
            v
        })
        .collect()
}

/// Highest weight vectors of a g0-invariant subspace, split by weight.
///
/// `action` is indexed by `GeneratorId::index()`. The Cartan elements need not be
/// diagonal in the ambient basis.
pub fn highest_weights(action: &[Matrix], space: &Subspace) -> HighestWeights {
    let n = space.ambient();
    let hw = Subspace::span(
        n,
        joint_kernel_in(
            space,
            &[&action[GeneratorId::EL.index()], &action[GeneratorId::ER.index()]],
        ),
    );
    let mut by_weight = BTreeMap::new();
    let mut found = 0;
    let hl = &action[GeneratorId::HL.index()];
    let hr = &action[GeneratorId::HR.index()];
    let shift = |h: &Matrix, c: i64| h.sub(&Matrix::identity(n).scaled(&int(c)));
    let max_weight = n as i64;
    'outer: for a in 0..=max_weight {
        if found == hw.dim() {
            break;
        }
        let ha = shift(hl, a);
        let left = joint_kernel_in(&hw, &[&ha]);
        if left.is_empty() {
            continue;
        }
        let left = Subspace::span(n, left);
        let mut left_found = 0;
        for b in 0..=max_weight {
            let hb = shift(hr, b);
            let both = joint_kernel_in(&left, &[&hb]);
            if !both.is_empty() {
                let sub = Subspace::span(n, both);
                left_found += sub.dim();
                found += sub.dim();
                by_weight.insert(IrrepLabel::new(a as u32, b as u32), sub.basis().to_vec());
            }
            if left_found == left.dim() {
                continue 'outer;
            }
        }
    }
    debug_assert_eq!(found, hw.dim(), "non-integral or negative highest weights");
    HighestWeights { by_weight }
}

/// The g0-submodule generated by highest weight vectors `hw` of weight `l`.
pub fn isotypic_span(action: &[Matrix], l: IrrepLabel, hw: &[SparseVec]) -> Vec<SparseVec> {
    let fl = &action[GeneratorId::FL.index()];
    let fr = &action[GeneratorId::FR.index()];
    let mut out = Vec::new();
    for v in hw {
        let mut left = v.clone();
        for _j in 0..=l.a {
            let mut w = left.clone();
            for _k in 0..=l.b {
                out.push(w.clone());
                w = fr.mul_vec(&w);
            }
            left = fl.mul_vec(&left);
        }
    }
    out.retain(|v| !v.is_empty() && v.values().any(|x| !x.is_zero()));
    out
}

/// Smallest g0-invariant subspace containing `vecs`.
pub fn g0_closure(action: &[Matrix], ambient: usize, vecs: &[SparseVec]) -> Subspace {
    let mut s = Subspace::zero(ambient);
    let mut frontier: Vec<SparseVec> = Vec::new();
    for v in vecs {
        if s.insert(v.clone()) {
            frontier.push(v.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for m in action {
            let w = m.mul_vec(&v);
            if s.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    s
}
