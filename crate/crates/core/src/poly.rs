//! Polynomials in `z1..z4` (the entries of the 2x2 matrix `z`), polynomials with
//! values in an irreducible g0-module, and the derivation action of g0.
//!
//! Conventions: the left factor mixes the rows of `z`, the right factor its
//! columns. `z1` is a highest weight vector of weight (1,1) and `det z` is
//! invariant.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{axpy, format_rational, int, Matrix, Rational, SparseVec, Subspace};
use crate::sl2::{self, irrep_matrices, GeneratorId, IrrepLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("subspace is not invariant under {0}")]
    NotInvariant(&'static str),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("value module mismatch: expected {expected}, got {got}")]
    TargetMismatch { expected: IrrepLabel, got: IrrepLabel },
}

/// Exponent vector of `z1^e1 z2^e2 z3^e3 z4^e4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; 4];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }
}

/// Graded lexicographic with `z1 > z2 > z3 > z4`: lower degree first, then the
/// larger exponent vector first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "z{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `d`, in basis order.
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e1 in (0..=d).rev() {
        for e2 in (0..=d - e1).rev() {
            for e3 in (0..=d - e1 - e2).rev() {
                out.push(Monomial([e1, e2, e3, d - e1 - e2 - e3]));
            }
        }
    }
    out
}

pub fn monomial_count(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) * (d + 3) / 6
}

/// `g(z_i) = sum_j table[i][j] z_j` for the derivation by `g`.
pub fn derivation_table(g: GeneratorId) -> [[i64; 4]; 4] {
    let mut t = [[0i64; 4]; 4];
    match g {
        // rows of z: (z1 z2) on top of (z3 z4)
        GeneratorId::EL => {
            t[2][0] = 1;
            t[3][1] = 1;
        }
        GeneratorId::FL => {
            t[0][2] = 1;
            t[1][3] = 1;
        }
        GeneratorId::HL => {
            t[0][0] = 1;
            t[1][1] = 1;
            t[2][2] = -1;
            t[3][3] = -1;
        }
        GeneratorId::ER => {
            t[1][0] = 1;
            t[3][2] = 1;
        }
        GeneratorId::FR => {
            t[0][1] = 1;
            t[2][3] = 1;
        }
        GeneratorId::HR => {
            t[0][0] = 1;
            t[2][2] = 1;
            t[1][1] = -1;
            t[3][3] = -1;
        }
    }
    t
}

/// Terms of `g(m)` for a monomial `m`.
fn act_monomial(g: GeneratorId, m: &Monomial) -> Vec<(i64, Monomial)> {
    let table = derivation_table(g);
    let mut out = Vec::new();
    for i in 0..4 {
        let e = m.0[i];
        if e == 0 {
            continue;
        }
        for (j, &c) in table[i].iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut n = m.0;
            n[i] -= 1;
            n[j] += 1;
            out.push((c * e as i64, Monomial(n)));
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}*{:?}", c, m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::monomial(Monomial::ONE, Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// `z_{i+1}` for `i` in `0..4`.
    pub fn var(i: usize) -> Poly {
        Poly::monomial(Monomial::var(i), Rational::one())
    }

    pub fn det() -> Poly {
        let mut p = Poly::monomial(Monomial([1, 0, 0, 1]), Rational::one());
        p.add_term(Monomial([0, 1, 1, 0]), int(-1));
        p
    }

    /// `z1^r (det z)^s`, the highest weight vector of `[r, s]`.
    pub fn component_hw(r: u32, s: u32) -> Poly {
        let mut p = Poly::monomial(Monomial([r, 0, 0, 0]), Rational::one());
        for _ in 0..s {
            p = p.mul(&Poly::det());
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn scaled(&self, c: &Rational) -> Poly {
        let mut p = Poly::zero();
        for (m, x) in &self.terms {
            p.add_term(*m, x * c);
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scaled(&int(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        p
    }

    pub fn mul_var(&self, i: usize) -> Poly {
        let v = Monomial::var(i);
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(&v), c.clone())).collect(),
        }
    }

    /// Degree if homogeneous (zero polynomial has no degree).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn act(&self, g: GeneratorId) -> Poly {
        act_generator(g, self)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let [a, b, c2, d] = m.0;
            seq.serialize_element(&(a, b, c2, d, format_rational(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<(u32, u32, u32, u32, String)> = Vec::deserialize(d)?;
        let mut p = Poly::zero();
        for (a, b, c, e, x) in raw {
            let q = crate::linalg::parse_rational(&x).map_err(serde::de::Error::custom)?;
            p.add_term(Monomial([a, b, c, e]), q);
        }
        Ok(p)
    }
}

/// Derivation action of a g0 generator on scalar polynomials.
pub fn act_generator(g: GeneratorId, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        for (k, n) in act_monomial(g, m) {
            out.add_term(n, c * int(k));
        }
    }
    out
}

/// A polynomial with values in the irreducible `target`, one scalar polynomial per
/// basis vector of `irrep_matrices(target)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPoly {
    pub target: IrrepLabel,
    pub components: Vec<Poly>,
}

impl VPoly {
    pub fn zero(target: IrrepLabel) -> VPoly {
        VPoly {
            target,
            components: vec![Poly::zero(); target.dim()],
        }
    }

    /// `p ⊗ v_k`.
    pub fn from_scalar(target: IrrepLabel, p: Poly, k: usize) -> VPoly {
        let mut v = VPoly::zero(target);
        v.components[k] = p;
        v
    }

    pub fn scalar(p: Poly) -> VPoly {
        VPoly::from_scalar(IrrepLabel::TRIVIAL, p, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut d = None;
        for c in &self.components {
            if c.is_zero() {
                continue;
            }
            let e = c.homogeneous_degree()?;
            if d.is_some_and(|d| d != e) {
                return None;
            }
            d = Some(e);
        }
        d
    }

    pub fn add(&self, other: &VPoly) -> VPoly {
        assert_eq!(self.target, other.target);
        VPoly {
            target: self.target,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> VPoly {
        VPoly {
            target: self.target,
            components: self.components.iter().map(|c| c.mul(p)).collect(),
        }
    }
}

/// Coupled action: derivation on the polynomial part plus the irrep action on values.
pub fn act_generator_v(g: GeneratorId, p: &VPoly) -> VPoly {
    let m = irrep_matrices(p.target);
    let mat = m.get(g);
    let mut out: Vec<Poly> = p.components.iter().map(|c| act_generator(g, c)).collect();
    for (k, l, x) in mat.entries() {
        out[k] = out[k].add(&p.components[l].scaled(x));
    }
    VPoly {
        target: p.target,
        components: out,
    }
}

/// The summand `[r, s]` of the polynomial ring, with highest weight vector
/// `z1^r (det z)^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct ComponentLabel {
    pub r: u32,
    pub s: u32,
}

impl From<(u32, u32)> for ComponentLabel {
    fn from((r, s): (u32, u32)) -> Self {
        ComponentLabel { r, s }
    }
}

impl From<ComponentLabel> for (u32, u32) {
    fn from(c: ComponentLabel) -> Self {
        (c.r, c.s)
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.r, self.s)
    }
}

impl ComponentLabel {
    pub fn new(r: u32, s: u32) -> Self {
        ComponentLabel { r, s }
    }

    pub fn degree(&self) -> u32 {
        self.r + 2 * self.s
    }

    pub fn dim(&self) -> usize {
        (self.r as usize + 1).pow(2)
    }

    pub fn g0_type(&self) -> IrrepLabel {
        IrrepLabel::new(self.r, self.r)
    }

    /// Tree successors under multiplication by `p^-`.
    pub fn successors(&self) -> Vec<ComponentLabel> {
        let mut out = vec![ComponentLabel::new(self.r + 1, self.s)];
        if self.r >= 1 {
            out.push(ComponentLabel::new(self.r - 1, self.s + 1));
        }
        out
    }
}

/// All `[r, s]` of polynomial degree `d`, largest `r` first.
pub fn degree_components(d: u32) -> Vec<ComponentLabel> {
    (0..=d / 2)
        .map(|s| ComponentLabel::new(d - 2 * s, s))
        .collect()
}

/// Coordinates of degree-`d` `V0`-valued polynomials: index `mono * dim(V0) + k`.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(d: u32) -> Self {
        let monomials = monomials(d);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        DegreeBasis {
            degree: d,
            monomials,
            index,
        }
    }

    pub fn index_of(&self, m: &Monomial) -> usize {
        self.index[m]
    }
}

/// The graded space of `V0`-valued polynomials, with per-degree coordinates and
/// action matrices.
#[derive(Clone, Debug)]
pub struct PolySpace {
    source: IrrepLabel,
    values: sl2::IrrepMatrices,
    bases: Vec<DegreeBasis>,
}

impl PolySpace {
    pub fn new(source: IrrepLabel, max_degree: u32) -> Self {
        PolySpace {
            source,
            values: irrep_matrices(source),
            bases: (0..=max_degree + 1).map(DegreeBasis::new).collect(),
        }
    }

    pub fn scalar(max_degree: u32) -> Self {
        Self::new(IrrepLabel::TRIVIAL, max_degree)
    }

    pub fn source(&self) -> IrrepLabel {
        self.source
    }

    pub fn max_degree(&self) -> u32 {
        self.bases.len() as u32 - 2
    }

    fn basis(&self, d: u32) -> &DegreeBasis {
        &self.bases[d as usize]
    }

    pub fn dim(&self, d: u32) -> usize {
        monomial_count(d) * self.source.dim()
    }

    /// Weight of coordinate `idx` in degree `d` (as signed `(H_L, H_R)` eigenvalues).
    pub fn weight_of(&self, d: u32, idx: usize) -> (i64, i64) {
        let nv = self.source.dim();
        let m = self.basis(d).monomials[idx / nv];
        let k = idx % nv;
        let hl = (m.0[0] + m.0[1]) as i64 - (m.0[2] + m.0[3]) as i64;
        let hr = (m.0[0] + m.0[2]) as i64 - (m.0[1] + m.0[3]) as i64;
        let vl = self.values.get(GeneratorId::HL).get(k, k);
        let vr = self.values.get(GeneratorId::HR).get(k, k);
        let to_i = |q: Rational| q.to_integer().try_into().unwrap_or(0i64);
        (hl + to_i(vl), hr + to_i(vr))
    }

    pub fn to_vec(&self, p: &VPoly) -> Result<(u32, SparseVec), PolyError> {
        if p.target != self.source {
            return Err(PolyError::TargetMismatch {
                expected: self.source,
                got: p.target,
            });
        }
        let d = p.homogeneous_degree().ok_or(PolyError::Inhomogeneous)?;
        Ok((d, self.to_vec_in(d, p)))
    }

    pub fn to_vec_in(&self, d: u32, p: &VPoly) -> SparseVec {
        let nv = self.source.dim();
        let basis = self.basis(d);
        let mut v = SparseVec::new();
        for (k, c) in p.components.iter().enumerate() {
            for (m, x) in c.terms() {
                v.insert(basis.index_of(m) * nv + k, x.clone());
            }
        }
        v
    }

    pub fn to_vpoly(&self, d: u32, v: &SparseVec) -> VPoly {
        let nv = self.source.dim();
        let basis = self.basis(d);
        let mut out = VPoly::zero(self.source);
        for (&i, x) in v {
            out.components[i % nv].add_term(basis.monomials[i / nv], x.clone());
        }
        out
    }

    /// Matrix of `g` on degree `d`.
    pub fn g0_matrix(&self, g: GeneratorId, d: u32) -> Matrix {
        let nv = self.source.dim();
        let basis = self.basis(d);
        let n = self.dim(d);
        let val = self.values.get(g);
        let mut cols = Vec::with_capacity(n);
        for (mi, m) in basis.monomials.iter().enumerate() {
            for k in 0..nv {
                let mut col = SparseVec::new();
                for (c, t) in act_monomial(g, m) {
                    axpy(&mut col, &int(c), &crate::linalg::unit(basis.index_of(&t) * nv + k));
                }
                for (l, x) in val.column(k) {
                    axpy(&mut col, &x, &crate::linalg::unit(mi * nv + l));
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(n, &cols)
    }

    pub fn g0_matrices(&self, d: u32) -> Vec<Matrix> {
        GeneratorId::ALL.iter().map(|&g| self.g0_matrix(g, d)).collect()
    }

    /// Multiplication by `z_{i+1}` from degree `d` to `d + 1`.
    pub fn mult_matrix(&self, i: usize, d: u32) -> Matrix {
        let nv = self.source.dim();
        let from = self.basis(d);
        let to = self.basis(d + 1);
        let var = Monomial::var(i);
        let mut m = Matrix::zeros(self.dim(d + 1), self.dim(d));
        for (mi, mono) in from.monomials.iter().enumerate() {
            let t = to.index_of(&mono.mul(&var));
            for k in 0..nv {
                m.set(t * nv + k, mi * nv + k, Rational::one());
            }
        }
        m
    }

    /// Smallest g0-invariant subspace of degree `d` containing `vecs`.
    pub fn g0_closure(&self, d: u32, vecs: &[SparseVec]) -> Subspace {
        sl2::g0_closure(&self.g0_matrices(d), self.dim(d), vecs)
    }
}

/// Highest weight vectors of a g0-invariant subspace of degree-`d` polynomials,
/// sorted by weight.
pub fn highest_weight_vectors(
    space: &PolySpace,
    d: u32,
    sub: &Subspace,
) -> Result<Vec<(IrrepLabel, VPoly)>, PolyError> {
    let action = space.g0_matrices(d);
    for g in GeneratorId::ALL {
        if !sub.is_invariant_under(&action[g.index()]) {
            return Err(PolyError::NotInvariant(g.name()));
        }
    }
    let hw = sl2::highest_weights(&action, sub);
    let mut out = Vec::new();
    for (l, vecs) in hw.by_weight {
        for v in vecs {
            out.push((l, space.to_vpoly(d, &v)));
        }
    }
    Ok(out)
}

/// The g0-module generated by `z1^r det^s`, as a subspace of scalar degree-`(r+2s)`
/// polynomials.
pub fn component_span(space: &PolySpace, c: ComponentLabel) -> Subspace {
    assert_eq!(space.source(), IrrepLabel::TRIVIAL);
    let d = c.degree();
    let hw = space.to_vec_in(d, &VPoly::scalar(Poly::component_hw(c.r, c.s)));
    let fl = space.g0_matrix(GeneratorId::FL, d);
    let fr = space.g0_matrix(GeneratorId::FR, d);
    let action = {
        let mut a = vec![Matrix::zeros(0, 0); 6];
        a[GeneratorId::FL.index()] = fl;
        a[GeneratorId::FR.index()] = fr;
        a
    };
    Subspace::span(space.dim(d), sl2::isotypic_span(&action, c.g0_type(), &[hw]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::g0_relation_failures;

    #[test]
    fn det_is_invariant() {
        for g in GeneratorId::ALL {
            assert!(act_generator(g, &Poly::det()).is_zero(), "{}", g.name());
        }
    }

    #[test]
    fn z1_is_highest() {
        let z1 = Poly::var(0);
        assert!(act_generator(GeneratorId::EL, &z1).is_zero());
        assert!(act_generator(GeneratorId::ER, &z1).is_zero());
        let p = Poly::var(2).mul(&Poly::var(3));
        assert_eq!(act_generator(GeneratorId::HL, &p), p.scaled(&int(-2)));
    }

    #[test]
    fn coupled_action() {
        let l = IrrepLabel::new(1, 0);
        let c = VPoly::from_scalar(l, Poly::one(), 0);
        assert!(act_generator_v(GeneratorId::EL, &c).is_zero());
        let p = VPoly::from_scalar(l, Poly::var(0), 0);
        let h = act_generator_v(GeneratorId::HL, &p);
        assert_eq!(h, VPoly::from_scalar(l, Poly::var(0).scaled(&int(2)), 0));
    }

    #[test]
    fn degree_one_with_spinor_values() {
        let space = PolySpace::new(IrrepLabel::new(1, 0), 2);
        let hw = highest_weight_vectors(&space, 1, &Subspace::full(space.dim(1))).unwrap();
        let labels: Vec<IrrepLabel> = hw.iter().map(|(l, _)| *l).collect();
        assert_eq!(labels, vec![IrrepLabel::new(0, 1), IrrepLabel::new(2, 1)]);
    }

    #[test]
    fn scalar_highest_weights() {
        let space = PolySpace::scalar(3);
        let hw = highest_weight_vectors(&space, 0, &Subspace::full(1)).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].0, IrrepLabel::TRIVIAL);

        let hw = highest_weight_vectors(&space, 1, &Subspace::full(4)).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].0, IrrepLabel::new(1, 1));
        assert_eq!(hw[0].1.components[0], Poly::var(0));

        let hw = highest_weight_vectors(&space, 2, &Subspace::full(10)).unwrap();
        let labels: Vec<IrrepLabel> = hw.iter().map(|(l, _)| *l).collect();
        assert_eq!(labels, vec![IrrepLabel::new(0, 0), IrrepLabel::new(2, 2)]);
        let det = space.to_vec_in(2, &VPoly::scalar(Poly::det()));
        assert!(Subspace::span(10, [det]).contains_vec(&space.to_vec_in(2, &hw[0].1)));
    }

    #[test]
    fn non_invariant_rejected() {
        let space = PolySpace::scalar(2);
        let z2 = space.to_vec_in(1, &VPoly::scalar(Poly::var(1)));
        let sub = Subspace::span(4, [z2]);
        assert!(matches!(
            highest_weight_vectors(&space, 1, &sub),
            Err(PolyError::NotInvariant(_))
        ));
    }

    #[test]
    fn component_spans() {
        let space = PolySpace::scalar(8);
        assert_eq!(component_span(&space, ComponentLabel::new(0, 0)).dim(), 1);
        assert_eq!(component_span(&space, ComponentLabel::new(1, 0)), Subspace::full(4));
        let c = component_span(&space, ComponentLabel::new(0, 1));
        assert_eq!(c.dim(), 1);
        for r in 0..4 {
            for s in 0..3 {
                let c = ComponentLabel::new(r, s);
                assert_eq!(component_span(&space, c).dim(), c.dim());
            }
        }
    }

    #[test]
    fn components_intersect_trivially() {
        let space = PolySpace::scalar(7);
        for d in 0..=7 {
            let comps = degree_components(d);
            let mut total = Subspace::zero(space.dim(d));
            for c in &comps {
                let span = component_span(&space, *c);
                assert!(total.intersection(&span).unwrap().is_zero());
                total = total.sum(&span).unwrap();
            }
            assert!(total.is_full());
        }
    }

    #[test]
    fn degree_component_counts() {
        assert_eq!(degree_components(0), vec![ComponentLabel::new(0, 0)]);
        assert_eq!(
            degree_components(2),
            vec![ComponentLabel::new(2, 0), ComponentLabel::new(0, 1)]
        );
        assert_eq!(
            degree_components(3),
            vec![ComponentLabel::new(3, 0), ComponentLabel::new(1, 1)]
        );
        for d in 0..=12 {
            let s: usize = degree_components(d).iter().map(|c| c.dim()).sum();
            assert_eq!(s, monomial_count(d));
            assert_eq!(monomials(d).len(), monomial_count(d));
        }
    }

    #[test]
    fn bracket_relations_on_polynomials() {
        for source in [IrrepLabel::TRIVIAL, IrrepLabel::new(1, 0), IrrepLabel::new(1, 2)] {
            let space = PolySpace::new(source, 5);
            let max = if source == IrrepLabel::TRIVIAL { 5 } else { 3 };
            for d in 0..=max {
                assert!(g0_relation_failures(&space.g0_matrices(d)).is_empty());
            }
        }
    }

    #[test]
    fn poly_json() {
        let p = Poly::det();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[1,0,0,1,"1"],[0,1,1,0,"-1"]]"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
