use crate::linalg::{SparseVec, Subspace};
use crate::poly::{highest_weight_vectors, PolySpace, VPoly};
use crate::sl2::IrrepLabel;

use super::RepError;

pub const DEFAULT_DEGREE_CAP: u32 = 16;

/// `P(V0) / I<p_1, ..., p_j>` with the ideal computed degree by degree.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub source: IrrepLabel,
    pub gens: Vec<VPoly>,
    pub degree_cap: u32,
    /// First degree in which the ideal is everything.
    pub saturation: u32,
    /// Ideal in degrees `0..=saturation`.
    pub ideal_per_degree: Vec<Subspace>,
    /// Coset representatives `(degree, coordinate)`: unit vectors at the
    /// non-pivot coordinates of each degree.
    pub basis: Vec<(u32, usize)>,
    space: PolySpace,
}

impl QuotientModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn space(&self) -> &PolySpace {
        &self.space
    }

    pub fn basis_vpolys(&self) -> Vec<VPoly> {
        self.basis
            .iter()
            .map(|&(d, c)| self.space.to_vpoly(d, &crate::linalg::unit(c)))
            .collect()
    }

    /// Index of basis element `(degree, coordinate)`, if it is one.
    pub fn index_of(&self, d: u32, c: usize) -> Option<usize> {
        self.basis.binary_search(&(d, c)).ok()
    }

    /// Dimension of the quotient in each degree below saturation.
    pub fn dims_by_degree(&self) -> Vec<usize> {
        (0..self.saturation)
            .map(|d| self.basis.iter().filter(|b| b.0 == d).count())
            .collect()
    }

    /// Canonical remainder of a degree-`d` vector modulo the ideal.
    pub fn reduce(&self, d: u32, v: &SparseVec) -> SparseVec {
        if d >= self.saturation {
            return SparseVec::new();
        }
        self.ideal_per_degree[d as usize].quotient_coords(v)
    }
}

pub fn build_quotient(source: IrrepLabel, gens: &[VPoly], degree_cap: u32) -> Result<QuotientModule, RepError> {
    if gens.is_empty() {
        return Err(RepError::NoGenerators);
    }
    let mut graded: Vec<(u32, SparseVec)> = Vec::new();
    let space = PolySpace::new(source, degree_cap);
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            return Err(RepError::ZeroGenerator(k));
        }
        let (d, v) = space.to_vec(g)?;
        if d > degree_cap {
            return Err(RepError::CapTooSmall { cap: degree_cap, degree: d });
        }
        graded.push((d, v));
    }
    let mut ideal: Vec<Subspace> = Vec::new();
    let mut saturation = None;
    for d in 0..=degree_cap {
        let mut cur = Subspace::zero(space.dim(d));
        if d > 0 {
            for i in 0..4 {
                let m = space.mult_matrix(i, d - 1);
                for v in ideal[d as usize - 1].basis() {
                    cur.insert(m.mul_vec(v));
                }
            }
        }
        let new: Vec<SparseVec> = graded.iter().filter(|g| g.0 == d).map(|g| g.1.clone()).collect();
        if !new.is_empty() {
            cur = cur.sum(&space.g0_closure(d, &new)).expect("same ambient");
        }
        let full = cur.is_full();
        ideal.push(cur);
        if full {
            saturation = Some(d);
            break;
        }
    }
    let saturation = saturation.ok_or(RepError::NotFinite { cap: degree_cap })?;
    let basis = (0..saturation)
        .flat_map(|d| ideal[d as usize].free_columns().into_iter().map(move |c| (d, c)))
        .collect();
    Ok(QuotientModule {
        source,
        gens: gens.to_vec(),
        degree_cap,
        saturation,
        ideal_per_degree: ideal,
        basis,
        space,
    })
}

/// One entry of a first-order sweep: the degree-1 components kept, and the quotient.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub kept: Vec<IrrepLabel>,
    pub quotient: QuotientModule,
}

/// Quotients of `P(V0)` by all of degree 2 and a proper subset of the degree-1
/// components, keeping at least one of them.
pub fn first_order_sweep(source: IrrepLabel) -> Result<Vec<SweepEntry>, RepError> {
    let space = PolySpace::new(source, 2);
    let full1 = Subspace::full(space.dim(1));
    let deg1 = highest_weight_vectors(&space, 1, &full1)?;
    let deg2 = highest_weight_vectors(&space, 2, &Subspace::full(space.dim(2)))?;
    let n = deg1.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let mut gens: Vec<VPoly> = deg2.iter().map(|(_, p)| p.clone()).collect();
        let mut kept = Vec::new();
        for (k, (l, p)) in deg1.iter().enumerate() {
            if mask & (1 << k) != 0 {
                kept.push(*l);
            } else {
                gens.push(p.clone());
            }
        }
        let quotient = build_quotient(source, &gens, 2)?;
        out.push(SweepEntry { kept, quotient });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn scalar(p: Poly) -> VPoly {
        VPoly::scalar(p)
    }

    #[test]
    fn small_quotients() {
        let q = build_quotient(IrrepLabel::TRIVIAL, &[scalar(Poly::var(0))], 4).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.saturation, 1);

        let z1sq = Poly::var(0).mul(&Poly::var(0));
        let q = build_quotient(IrrepLabel::TRIVIAL, &[scalar(z1sq.clone()), scalar(Poly::det())], 4).unwrap();
        assert_eq!(q.dim(), 5);
        assert_eq!(q.dims_by_degree(), vec![1, 4]);

        let z1det = Poly::var(0).mul(&Poly::det());
        let q = build_quotient(IrrepLabel::TRIVIAL, &[scalar(z1sq), scalar(z1det)], 4).unwrap();
        assert_eq!(q.dim(), 6);
        assert_eq!(q.dims_by_degree(), vec![1, 4, 1]);
    }

    #[test]
    fn spinor_source_all_quadratics() {
        let source = IrrepLabel::new(1, 0);
        let space = PolySpace::new(source, 2);
        let hw2 = highest_weight_vectors(&space, 2, &Subspace::full(space.dim(2))).unwrap();
        let gens: Vec<VPoly> = hw2.into_iter().map(|(_, p)| p).collect();
        let q = build_quotient(source, &gens, 4).unwrap();
        assert_eq!(q.dim(), 10);
    }

    #[test]
    fn errors() {
        let t = IrrepLabel::TRIVIAL;
        assert_eq!(build_quotient(t, &[], 4).unwrap_err(), RepError::NoGenerators);
        assert_eq!(
            build_quotient(t, &[scalar(Poly::zero())], 4).unwrap_err(),
            RepError::ZeroGenerator(0)
        );
        assert_eq!(
            build_quotient(t, &[scalar(Poly::det())], 6).unwrap_err(),
            RepError::NotFinite { cap: 6 }
        );
        let z1 = Poly::var(0).mul(&Poly::var(0)).mul(&Poly::var(0));
        assert_eq!(
            build_quotient(t, &[scalar(z1)], 2).unwrap_err(),
            RepError::CapTooSmall { cap: 2, degree: 3 }
        );
    }

    #[test]
    fn sweep_dimensions() {
        let dims = |l: IrrepLabel| {
            let mut d: Vec<usize> = first_order_sweep(l).unwrap().iter().map(|e| e.quotient.dim()).collect();
            d.sort();
            d
        };
        assert_eq!(dims(IrrepLabel::new(1, 0)), vec![4, 8, 10]);
        assert_eq!(dims(IrrepLabel::new(2, 0)), vec![7, 11, 15]);
    }
}
