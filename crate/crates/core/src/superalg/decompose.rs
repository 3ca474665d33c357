use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::{Matrix, Subspace};
use crate::poly::Monomial;
use crate::sl2::{highest_weights, irrep_matrices, GeneratorId, IrrepLabel};

use super::pbw::{OddGen, SuperElement, SuperMonomial};

/// One isotypic piece of `U(p-)_[n,d] ⊗ (odd part of space i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DecompositionEntry {
    pub space: usize,
    pub n: u32,
    pub d: u32,
    pub label: IrrepLabel,
    pub multiplicity: usize,
    /// `2 * (n + 2d)` plus the number of odd factors.
    pub weighted_degree: u32,
}

/// The 16 normal-ordered odd monomials and the g0 action on their span.
pub fn exterior_g0_action() -> (Vec<SuperMonomial>, Vec<Matrix>) {
    let basis: Vec<SuperMonomial> = (0u32..16)
        .map(|mask| {
            let odd = (0..4).filter(|k| mask & (1 << k) != 0).map(|k| OddGen::ALL[k]).collect();
            SuperMonomial::new(Monomial::ONE, odd).expect("subsets of an ordered list are ordered")
        })
        .collect();
    let pos: BTreeMap<&SuperMonomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let action = GeneratorId::ALL
        .iter()
        .map(|&g| {
            let mut m = Matrix::zeros(16, 16);
            for (c, b) in basis.iter().enumerate() {
                let image = SuperElement::from_monomial(b.clone()).act_g0(g);
                for (t, x) in image.terms() {
                    m.set(pos[t], c, x.clone());
                }
            }
            m
        })
        .collect();
    (basis, action)
}

fn restrict(m: &Matrix, idx: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(idx.len(), idx.len());
    for (i, &r) in idx.iter().enumerate() {
        for (j, &c) in idx.iter().enumerate() {
            out.set(i, j, m.get(r, c));
        }
    }
    out
}

fn tensor_action(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    let ia = Matrix::identity(a[0].rows());
    let ib = Matrix::identity(b[0].rows());
    a.iter().zip(b).map(|(x, y)| x.kron(&ib).add(&ia.kron(y))).collect()
}

/// Isotypic decomposition of every summand `U(p-)_[n,d] ⊗ (odd part i)` for
/// `n <= max_n`, `d <= max_d`, by highest weight extraction.
pub fn decompose_u_nsuper(max_n: u32, max_d: u32) -> Vec<DecompositionEntry> {
    let (basis, action) = exterior_g0_action();
    let mut out = Vec::new();
    for space in 1..=9 {
        let idx: Vec<usize> = (0..basis.len()).filter(|&i| basis[i].space() == space).collect();
        let odd_count = basis[idx[0]].odd.len() as u32;
        let odd_action: Vec<Matrix> = action.iter().map(|m| restrict(m, &idx)).collect();
        for n in 0..=max_n {
            let even = irrep_matrices(IrrepLabel::new(n, n)).action;
            let total = tensor_action(&even, &odd_action);
            let hw = highest_weights(&total, &Subspace::full(total[0].rows()));
            for d in 0..=max_d {
                for (&label, &multiplicity) in &hw.multiplicities() {
                    out.push(DecompositionEntry {
                        space,
                        n,
                        d,
                        label,
                        multiplicity,
                        weighted_degree: 2 * (n + 2 * d) + odd_count,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// The nine-row label table as printed, with labels that would need a negative
/// entry dropped.
pub fn listed_labels(space: usize, n: u32) -> Vec<IrrepLabel> {
    let n = n as i64;
    let pairs: Vec<(i64, i64)> = match space {
        1 | 3 | 7 | 9 => vec![(n, n)],
        2 | 8 => vec![(n - 1, n), (n + 1, n)],
        4 => vec![(n, n - 1), (n, n + 1)],
        5 => vec![(n - 1, n - 1), (n - 1, n + 1), (n + 1, n - 1), (n + 1, n + 1)],
        6 => vec![(n, n - 1), (n + 1, n)],
        _ => panic!("space index {space} out of range"),
    };
    let mut out: Vec<IrrepLabel> = pairs
        .into_iter()
        .filter(|&(a, b)| a >= 0 && b >= 0)
        .map(|(a, b)| IrrepLabel::new(a as u32, b as u32))
        .collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelMismatch {
    pub space: usize,
    pub n: u32,
    pub computed: Vec<IrrepLabel>,
    pub listed: Vec<IrrepLabel>,
}

/// Every `(space, n)` where the computed labels (with multiplicity) differ from
/// the printed table.
pub fn label_list_mismatches(entries: &[DecompositionEntry]) -> Vec<LabelMismatch> {
    let mut computed: BTreeMap<(usize, u32), Vec<IrrepLabel>> = BTreeMap::new();
    for e in entries.iter().filter(|e| e.d == 0) {
        computed
            .entry((e.space, e.n))
            .or_default()
            .extend(std::iter::repeat_n(e.label, e.multiplicity));
    }
    computed
        .into_iter()
        .filter_map(|((space, n), mut labels)| {
            labels.sort();
            let listed = listed_labels(space, n);
            (labels != listed).then_some(LabelMismatch {
                space,
                n,
                computed: labels,
                listed,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomial_count;
    use crate::sl2::g0_relation_failures;

    fn find(t: &[DecompositionEntry], space: usize, n: u32, d: u32, l: IrrepLabel) -> Option<&DecompositionEntry> {
        t.iter().find(|e| e.space == space && e.n == n && e.d == d && e.label == l)
    }

    #[test]
    fn exterior_algebra_is_a_g0_module() {
        let (basis, action) = exterior_g0_action();
        assert_eq!(basis.len(), 16);
        assert!(g0_relation_failures(&action).is_empty());
        let dims: Vec<usize> = (1..=9).map(|s| basis.iter().filter(|b| b.space() == s).count()).collect();
        assert_eq!(dims, vec![1, 2, 1, 2, 4, 2, 1, 2, 1]);
    }

    #[test]
    fn small_entries() {
        let t = decompose_u_nsuper(2, 2);
        let e = find(&t, 1, 0, 0, IrrepLabel::TRIVIAL).unwrap();
        assert_eq!(e.multiplicity, 1);
        assert!(t.iter().filter(|e| e.space == 1 && e.n == 0 && e.d == 0).count() == 1);
        let two: Vec<IrrepLabel> =
            t.iter().filter(|e| e.space == 2 && e.n == 1 && e.d == 0).map(|e| e.label).collect();
        assert_eq!(two, vec![IrrepLabel::new(0, 1), IrrepLabel::new(2, 1)]);
    }

    #[test]
    fn totals_are_sixteen_times_monomials() {
        let t = decompose_u_nsuper(6, 3);
        for k in 0..=6u32 {
            let total: usize = t
                .iter()
                .filter(|e| e.n + 2 * e.d == k)
                .map(|e| e.multiplicity * e.label.dim())
                .sum();
            assert_eq!(total, 16 * monomial_count(k), "degree {k}");
        }
    }

    #[test]
    fn five_down_down_matches_one() {
        let t = decompose_u_nsuper(3, 2);
        for n in 0..=2 {
            for d in 0..=2 {
                let l = IrrepLabel::new(n + 1, n + 1);
                let a = find(&t, 5, n, d, l).unwrap();
                let b = find(&t, 1, n + 1, d, l).unwrap();
                assert_eq!((a.multiplicity, a.weighted_degree), (b.multiplicity, b.weighted_degree));
            }
        }
    }

    #[test]
    fn printed_table_mismatches() {
        let t = decompose_u_nsuper(3, 0);
        let bad: Vec<usize> = label_list_mismatches(&t).iter().map(|m| m.space).collect();
        // Row 6 lists (n+1, n) where the tensor product gives (n, n+1).
        assert!(bad.iter().all(|&s| s == 6));
        assert_eq!(bad.len(), 4);
    }
}
