use serde::{Deserialize, Serialize};

use crate::linalg::{int, Matrix};
use crate::poly::derivation_table;
use crate::sl2::{g0_relation_failures, GeneratorId};

use super::QuotientModule;

/// Matrices of `z1..z4` and of the six g0 generators, with a grading of the basis
/// that p- strictly raises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrices {
    pub dim: usize,
    pub p_minus: Vec<Matrix>,
    /// Indexed by `GeneratorId::index()`.
    pub g0: Vec<Matrix>,
    pub grades: Vec<i64>,
}

impl RepMatrices {
    pub fn new(p_minus: Vec<Matrix>, g0: Vec<Matrix>, grades: Vec<i64>) -> Self {
        assert_eq!(p_minus.len(), 4);
        assert_eq!(g0.len(), 6);
        RepMatrices {
            dim: grades.len(),
            p_minus,
            g0,
            grades,
        }
    }

    pub fn g(&self, g: GeneratorId) -> &Matrix {
        &self.g0[g.index()]
    }

    /// All ten generator matrices, `z1..z4` first.
    pub fn generators(&self) -> Vec<&Matrix> {
        self.p_minus.iter().chain(self.g0.iter()).collect()
    }

    pub fn direct_sum(&self, other: &RepMatrices) -> RepMatrices {
        let join = |a: &Matrix, b: &Matrix| Matrix::block_diag(&[a, b]);
        RepMatrices::new(
            self.p_minus.iter().zip(&other.p_minus).map(|(a, b)| join(a, b)).collect(),
            self.g0.iter().zip(&other.g0).map(|(a, b)| join(a, b)).collect(),
            self.grades.iter().chain(&other.grades).copied().collect(),
        )
    }

    /// `p x p^-1` on every generator; grades follow the columns of `p`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> RepMatrices {
        RepMatrices::new(
            self.p_minus.iter().map(|m| m.conjugate(p, p_inv)).collect(),
            self.g0.iter().map(|m| m.conjugate(p, p_inv)).collect(),
            self.grades.clone(),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct G0Json {
    #[serde(rename = "E_L")]
    el: Matrix,
    #[serde(rename = "F_L")]
    fl: Matrix,
    #[serde(rename = "H_L")]
    hl: Matrix,
    #[serde(rename = "E_R")]
    er: Matrix,
    #[serde(rename = "F_R")]
    fr: Matrix,
    #[serde(rename = "H_R")]
    hr: Matrix,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    dim: usize,
    p_minus: Vec<Matrix>,
    g0: G0Json,
    grades: Vec<i64>,
}

impl Serialize for RepMatrices {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let g = |id: GeneratorId| self.g0[id.index()].clone();
        RepJson {
            dim: self.dim,
            p_minus: self.p_minus.clone(),
            g0: G0Json {
                el: g(GeneratorId::EL),
                fl: g(GeneratorId::FL),
                hl: g(GeneratorId::HL),
                er: g(GeneratorId::ER),
                fr: g(GeneratorId::FR),
                hr: g(GeneratorId::HR),
            },
            grades: self.grades.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepMatrices {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RepJson::deserialize(d)?;
        if r.p_minus.len() != 4 || r.grades.len() != r.dim {
            return Err(serde::de::Error::custom("expected 4 p_minus matrices and dim grades"));
        }
        let g = r.g0;
        Ok(RepMatrices::new(
            r.p_minus,
            vec![g.el, g.fl, g.hl, g.er, g.fr, g.hr],
            r.grades,
        ))
    }
}

pub fn rep_matrices(q: &QuotientModule) -> RepMatrices {
    let n = q.dim();
    let space = q.space();
    let mut p_minus = vec![Matrix::zeros(n, n); 4];
    let mut g0 = vec![Matrix::zeros(n, n); 6];
    for d in 0..q.saturation {
        let mults: Vec<Matrix> = (0..4).map(|i| space.mult_matrix(i, d)).collect();
        let acts = space.g0_matrices(d);
        for (col, &(_, c)) in q.basis.iter().enumerate().filter(|(_, b)| b.0 == d) {
            for (i, m) in mults.iter().enumerate() {
                for (k, x) in q.reduce(d + 1, &m.column(c)) {
                    let row = q.index_of(d + 1, k).expect("remainder lies on free columns");
                    p_minus[i].set(row, col, x);
                }
            }
            for (g, m) in acts.iter().enumerate() {
                for (k, x) in q.reduce(d, &m.column(c)) {
                    let row = q.index_of(d, k).expect("remainder lies on free columns");
                    g0[g].set(row, col, x);
                }
            }
        }
    }
    RepMatrices::new(p_minus, g0, q.basis.iter().map(|b| b.0 as i64).collect())
}

/// Every failed relation, as readable strings.
pub fn relation_failures(m: &RepMatrices) -> Vec<String> {
    let mut out = g0_relation_failures(&m.g0);
    for i in 0..4 {
        for j in i + 1..4 {
            if !m.p_minus[i].commutator(&m.p_minus[j]).is_zero() {
                out.push(format!("[z{}, z{}]", i + 1, j + 1));
            }
        }
        if !m.p_minus[i].is_nilpotent() {
            out.push(format!("z{} not nilpotent", i + 1));
        }
    }
    for g in GeneratorId::ALL {
        let t = derivation_table(g);
        for i in 0..4 {
            let lhs = m.g(g).commutator(&m.p_minus[i]);
            let mut rhs = Matrix::zeros(m.dim, m.dim);
            for (j, &c) in t[i].iter().enumerate() {
                if c != 0 {
                    rhs = rhs.combine(&m.p_minus[j], &int(c));
                }
            }
            if lhs != rhs {
                out.push(format!("[{}, z{}]", g.name(), i + 1));
            }
        }
    }
    out
}

pub fn verify_lie_relations(m: &RepMatrices) -> bool {
    relation_failures(m).is_empty()
}

/// The contragredient: `x -> -x^T` on every generator, grades negated.
pub fn dualize(m: &RepMatrices) -> RepMatrices {
    let dual = |x: &Matrix| x.transpose().neg();
    RepMatrices::new(
        m.p_minus.iter().map(dual).collect(),
        m.g0.iter().map(dual).collect(),
        m.grades.iter().map(|g| -g).collect(),
    )
}
