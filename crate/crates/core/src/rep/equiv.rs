use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{determinant, int, kernel, Matrix, Rational, SparseVec, Subspace};
use crate::sl2::GeneratorId;

use super::RepMatrices;

/// Intertwiners `T: a -> b`, vectorised row-major (`T[r][c]` at `r * cols + c`).
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub rows: usize,
    pub cols: usize,
    pub space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space
            .basis()
            .iter()
            .map(|v| {
                let mut m = Matrix::zeros(self.rows, self.cols);
                for (&k, x) in v {
                    m.set(k / self.cols, k % self.cols, x.clone());
                }
                m
            })
            .collect()
    }

    pub fn contains(&self, t: &Matrix) -> bool {
        let v: SparseVec = t.entries().map(|(r, c, x)| (r * self.cols + c, x.clone())).collect();
        self.space.contains_vec(&v)
    }
}

fn diagonal(m: &Matrix) -> Option<Vec<Rational>> {
    if m.entries().any(|(r, c, _)| r != c) {
        return None;
    }
    Some((0..m.rows()).map(|i| m.get(i, i)).collect())
}

/// All `T` with `T a_k = b_k T` for every k. `cartan` names generator positions
/// whose matrices, when diagonal in both, prune the unknowns to equal weights.
pub fn hom_space_generic(a: &[&Matrix], b: &[&Matrix], cartan: &[usize]) -> HomSpace {
    assert_eq!(a.len(), b.len());
    let na = a.first().map_or(0, |m| m.rows());
    let nb = b.first().map_or(0, |m| m.rows());
    let mut allowed: Vec<bool> = vec![true; nb * na];
    let mut skip = vec![false; a.len()];
    for &h in cartan {
        if let (Some(da), Some(db)) = (diagonal(a[h]), diagonal(b[h])) {
            for r in 0..nb {
                for c in 0..na {
                    if db[r] != da[c] {
                        allowed[r * na + c] = false;
                    }
                }
            }
            skip[h] = true;
        }
    }
    let vars: Vec<usize> = (0..nb * na).filter(|&k| allowed[k]).collect();
    let var_pos: std::collections::HashMap<usize, usize> =
        vars.iter().enumerate().map(|(i, &k)| (k, i)).collect();

    // Equation (r, c) of generator k: sum_q T[r][q] A[q][c] - sum_p B[r][p] T[p][c].
    let mut rows: Vec<SparseVec> = Vec::new();
    for (k, (am, bm)) in a.iter().zip(b).enumerate() {
        if skip[k] {
            continue;
        }
        let a_rows: Vec<&SparseVec> = (0..na).map(|q| am.row(q)).collect();
        for r in 0..nb {
            let mut eqs: Vec<SparseVec> = vec![SparseVec::new(); na];
            for q in 0..na {
                let Some(&v) = var_pos.get(&(r * na + q)) else { continue };
                for (&c, x) in a_rows[q] {
                    add(&mut eqs[c], v, x);
                }
            }
            for (&p, x) in bm.row(r) {
                for (c, eq) in eqs.iter_mut().enumerate() {
                    if let Some(&v) = var_pos.get(&(p * na + c)) {
                        add(eq, v, &-x);
                    }
                }
            }
            rows.extend(eqs.into_iter().filter(|e| !e.is_empty()));
        }
    }
    let sol = kernel(&Matrix::from_rows(vars.len(), rows));
    let space = Subspace::span(
        nb * na,
        sol.basis()
            .iter()
            .map(|v| v.iter().map(|(&i, x)| (vars[i], x.clone())).collect()),
    );
    HomSpace {
        rows: nb,
        cols: na,
        space,
    }
}

fn add(v: &mut SparseVec, k: usize, x: &Rational) {
    let e = v.entry(k).or_insert_with(Rational::zero);
    *e += x;
    if e.is_zero() {
        v.remove(&k);
    }
}

const CARTAN: [usize; 2] = [4 + 2, 4 + 5];

pub fn hom_space(a: &RepMatrices, b: &RepMatrices) -> HomSpace {
    debug_assert_eq!(GeneratorId::HL.index() + 4, CARTAN[0]);
    debug_assert_eq!(GeneratorId::HR.index() + 4, CARTAN[1]);
    hom_space_generic(&a.generators(), &b.generators(), &CARTAN)
}

/// Whether `a` and `b` are isomorphic, decided from the intertwiners of each
/// pair. See [`invertible_combination`].
pub fn are_equivalent(a: &RepMatrices, b: &RepMatrices) -> bool {
    are_equivalent_generic(&a.generators(), &b.generators(), &CARTAN)
}

pub fn are_equivalent_generic(a: &[&Matrix], b: &[&Matrix], cartan: &[usize]) -> bool {
    let na = a.first().map_or(0, |m| m.rows());
    let nb = b.first().map_or(0, |m| m.rows());
    if na != nb {
        return false;
    }
    if na == 0 {
        return true;
    }
    let ab = hom_space_generic(a, b, cartan);
    let dims = [
        hom_space_generic(a, a, cartan).dim(),
        hom_space_generic(b, b, cartan).dim(),
        hom_space_generic(b, a, cartan).dim(),
    ];
    if dims.iter().any(|&d| d != ab.dim()) || ab.dim() == 0 {
        return false;
    }
    invertible_combination(&ab.basis_matrices()).is_some()
}

/// An invertible element of the span of `ts`, if there is one.
///
/// `det(sum c_i T_i)` is homogeneous of degree `n` in `c`, so it vanishes
/// identically iff it vanishes at every non-negative integer point with
/// `sum c_i = n`. A few spread-out points are tried before that grid.
pub fn invertible_combination(ts: &[Matrix]) -> Option<Matrix> {
    let k = ts.len();
    let n = ts.first()?.rows();
    let images = Subspace::span(n, ts.iter().flat_map(|t| (0..n).map(|c| t.column(c))));
    if !images.is_full() {
        return None;
    }
    let combo = |c: &[i64]| {
        let mut m = Matrix::zeros(n, n);
        for (t, &x) in ts.iter().zip(c) {
            if x != 0 {
                m = m.combine(t, &int(x));
            }
        }
        m
    };
    let primes = [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    for shift in 0..3 {
        let c: Vec<i64> = (0..k).map(|i| primes[(i + shift) % primes.len()] + i as i64 * shift as i64).collect();
        let m = combo(&c);
        if !determinant(&m).is_zero() {
            return Some(m);
        }
    }
    let mut c = vec![0i64; k];
    simplex_search(&mut c, 0, n as i64, &|c| {
        let m = combo(c);
        (!determinant(&m).is_zero()).then_some(m)
    })
}

fn simplex_search(c: &mut Vec<i64>, i: usize, left: i64, f: &dyn Fn(&[i64]) -> Option<Matrix>) -> Option<Matrix> {
    if i + 1 == c.len() {
        c[i] = left;
        return f(c);
    }
    for x in 0..=left {
        c[i] = x;
        if let Some(m) = simplex_search(c, i + 1, left - x, f) {
            return Some(m);
        }
    }
    None
}

/// Commutant data: `dim A`, the trace-form radical `J` and the semisimple
/// quotient `A/J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Indecomposability {
    pub commutant_dim: usize,
    pub radical_dim: usize,
    pub semisimple_dim: usize,
    /// Whether `A/J` is commutative. A commutative `A/J` of dimension above one
    /// can still come from a field extension over the rationals.
    pub semisimple_commutative: bool,
}

impl Indecomposability {
    pub fn indecomposable(&self) -> bool {
        self.semisimple_dim == 1
    }
}

pub fn indecomposability(m: &RepMatrices) -> Indecomposability {
    let basis = hom_space(m, m).basis_matrices();
    let k = basis.len();
    let mut gram = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = basis[i].mul(&basis[j]).trace();
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    let rank = gram.rank();
    let mut commutative = true;
    'outer: for i in 0..k {
        for j in i + 1..k {
            let c = basis[i].commutator(&basis[j]);
            if c.is_zero() {
                continue;
            }
            for t in &basis {
                if !c.mul(t).trace().is_zero() {
                    commutative = false;
                    break 'outer;
                }
            }
        }
    }
    Indecomposability {
        commutant_dim: k,
        radical_dim: k - rank,
        semisimple_dim: rank,
        semisimple_commutative: commutative,
    }
}

pub fn is_indecomposable(m: &RepMatrices) -> bool {
    indecomposability(m).indecomposable()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Poly, VPoly};
    use crate::rep::{build_quotient, dualize, rep_matrices};
    use crate::sl2::{irrep_matrices, IrrepLabel};

    fn scalar_rep(gens: &[Poly]) -> RepMatrices {
        let g: Vec<VPoly> = gens.iter().cloned().map(VPoly::scalar).collect();
        rep_matrices(&build_quotient(IrrepLabel::TRIVIAL, &g, 6).unwrap())
    }

    fn five() -> RepMatrices {
        scalar_rep(&[Poly::var(0).mul_var(0), Poly::det()])
    }

    fn six() -> RepMatrices {
        scalar_rep(&[Poly::var(0).mul_var(0), Poly::var(0).mul(&Poly::det())])
    }

    fn irrep_rep(l: IrrepLabel) -> RepMatrices {
        let n = l.dim();
        RepMatrices::new(vec![Matrix::zeros(n, n); 4], irrep_matrices(l).action, vec![0; n])
    }

    #[test]
    fn schur() {
        let m = irrep_rep(IrrepLabel::new(2, 1));
        let h = hom_space(&m, &m);
        assert_eq!(h.dim(), 1);
        assert!(h.contains(&Matrix::identity(6)));
    }

    #[test]
    fn different_quotients() {
        // The quotient map six -> five, and five's top onto six's socle.
        assert_eq!(hom_space(&six(), &five()).dim(), 1);
        assert_eq!(hom_space(&five(), &six()).dim(), 1);
        assert!(!are_equivalent(&five(), &six()));
        let m = six();
        assert!(hom_space(&m, &dualize(&dualize(&m))).contains(&Matrix::identity(6)));
    }

    #[test]
    fn conjugation_is_equivalence() {
        let m = six();
        let p = Matrix::from_i64(&[
            &[1, 2, 0, 0, 0, 1],
            &[0, 1, 0, 3, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[1, 0, 0, 1, 0, 0],
            &[0, 0, 2, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        let inv = p.inverse().unwrap();
        let c = m.conjugate(&p, &inv);
        assert!(are_equivalent(&m, &c));
        assert!(are_equivalent(&c, &m));
    }

    #[test]
    fn indecomposability_checks() {
        assert!(is_indecomposable(&six()));
        assert!(is_indecomposable(&five()));
        let sum = five().direct_sum(&five());
        let r = indecomposability(&sum);
        assert!(!r.indecomposable());
        assert_eq!(r.semisimple_dim, 4);
        assert!(!r.semisimple_commutative);
        let split = irrep_rep(IrrepLabel::new(1, 0)).direct_sum(&irrep_rep(IrrepLabel::new(0, 1)));
        let r = indecomposability(&split);
        assert_eq!(r.semisimple_dim, 2);
        assert!(r.semisimple_commutative);
    }

    #[test]
    fn singular_pencil() {
        let a = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(invertible_combination(&[a.clone(), b]).is_none());
        let c = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        assert!(invertible_combination(&[a.clone(), c.clone()]).is_some());
        // Images span everything, yet every combination is singular.
        let d = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(invertible_combination(&[a, d]).is_none());
    }
}
