use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ideal::{codimension, contains_component, enumerate_ideals, ideal_oracle, is_subideal, IdealOracle, IdealSpec};
use crate::linalg::Subspace;
use crate::poly::ComponentLabel;
use crate::sl2::IrrepLabel;

use super::urest::BlockModel;
use super::SuperError;

/// Ideals `I1 <= I4 <= I7` of the polynomial ring, placed on `1`, `W1` and
/// `W1∧W1` of `U_rest`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperIdealTriple {
    pub i1: IdealSpec,
    pub i4: IdealSpec,
    pub i7: IdealSpec,
}

impl SuperIdealTriple {
    pub fn new(i1: IdealSpec, i4: IdealSpec, i7: IdealSpec) -> Result<Self, SuperError> {
        let t = SuperIdealTriple { i1, i4, i7 };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), SuperError> {
        for i in [&self.i1, &self.i4, &self.i7] {
            i.check_finite()?;
        }
        if !is_subideal(&self.i1, &self.i4) || !is_subideal(&self.i4, &self.i7) {
            return Err(SuperError::NotNested {
                i1: self.i1.clone(),
                i4: self.i4.clone(),
                i7: self.i7.clone(),
            });
        }
        Ok(())
    }
}

fn oracle(spec: &IdealSpec, cap: u32) -> Result<IdealOracle, SuperError> {
    let o = ideal_oracle(spec, cap.max(spec.max_generator_degree()))?;
    if o.saturation.is_none() {
        return Err(SuperError::NotFinite(spec.clone()));
    }
    Ok(o)
}

fn model_from(oracles: [&IdealOracle; 3]) -> BlockModel {
    let stable = oracles.iter().filter_map(|o| o.saturation).max().unwrap_or(0);
    let parts = oracles.map(|o| (0..stable).map(|d| o.part(d).expect("saturated")).collect::<Vec<Subspace>>());
    BlockModel::new(IrrepLabel::TRIVIAL, parts)
}

pub(super) fn triple_model(t: &SuperIdealTriple, cap: u32) -> Result<BlockModel, SuperError> {
    t.check()?;
    let o = [oracle(&t.i1, cap)?, oracle(&t.i4, cap)?, oracle(&t.i7, cap)?];
    Ok(model_from([&o[0], &o[1], &o[2]]))
}

/// Outcome of the direct invariance check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceCertificate {
    pub invariant: bool,
    /// First generator found to leave the subspace.
    pub violation: Option<String>,
    /// Every ideal is everything from this degree on, so checking the source
    /// degrees below it covers all degrees.
    pub stable_degree: u32,
    /// Codimensions of `I1`, `I4`, `I7`.
    pub codims: [usize; 3],
}

fn certify(t: &SuperIdealTriple, o: [&IdealOracle; 3]) -> InvarianceCertificate {
    let model = model_from(o);
    let stable = o.iter().filter_map(|x| x.saturation).max().unwrap_or(0);
    let violation = model.first_violation(u32::MAX);
    let invariant = violation.is_none();
    if invariant {
        assert_necessary_conditions(t, o, stable);
    }
    InvarianceCertificate {
        invariant,
        violation,
        stable_degree: stable,
        codims: o.map(|x| x.codimension().expect("saturated")),
    }
}

/// `[n,d] ∈ I7` forces `[n,d+1]` into `I4` and `I1`, and `p- p- I7 <= I1`.
fn assert_necessary_conditions(t: &SuperIdealTriple, o: [&IdealOracle; 3], stable: u32) {
    for deg in 0..=stable {
        for c in crate::poly::degree_components(deg) {
            if contains_component(&t.i7, c) {
                let up = ComponentLabel::new(c.r, c.s + 1);
                assert!(
                    contains_component(&t.i4, up) && contains_component(&t.i1, up),
                    "{c} in I7 but {up} missing from I4 or I1 for {t:?}"
                );
            }
        }
    }
    let space = o[0].space();
    for d in 0..stable {
        let i7 = o[2].part(d).expect("saturated");
        let i1 = o[0].part(d + 2).expect("saturated");
        for i in 0..4 {
            let mi = space.mult_matrix(i, d);
            for j in 0..4 {
                let mj = space.mult_matrix(j, d + 1);
                for v in i7.basis() {
                    assert!(i1.contains_vec(&mj.mul_vec(&mi.mul_vec(v))), "p- p- I7 not in I1 for {t:?}");
                }
            }
        }
    }
}

/// Checks every generator on `I1 ⊕ I4·W1 ⊕ I7·(W1∧W1)`. All three ideals must
/// fill a whole degree by `degree_cap`.
pub fn invariance_certificate(t: &SuperIdealTriple, degree_cap: u32) -> Result<InvarianceCertificate, SuperError> {
    t.check()?;
    let o = [oracle(&t.i1, degree_cap)?, oracle(&t.i4, degree_cap)?, oracle(&t.i7, degree_cap)?];
    Ok(certify(t, [&o[0], &o[1], &o[2]]))
}

pub fn check_super_invariance(t: &SuperIdealTriple, degree_cap: u32) -> Result<bool, SuperError> {
    Ok(invariance_certificate(t, degree_cap)?.invariant)
}

/// Every invariant triple with the given `I7` and `codim(I1) <= codim_bound`,
/// with its certificate.
pub fn enumerate_triples(
    i7: &IdealSpec,
    codim_bound: usize,
) -> Result<Vec<(SuperIdealTriple, InvarianceCertificate)>, SuperError> {
    i7.check_finite()?;
    if codimension(i7)? > codim_bound {
        return Ok(Vec::new());
    }
    let cap = codim_bound.max(1) as u32;
    let candidates: Vec<IdealSpec> = enumerate_ideals(codim_bound)
        .into_iter()
        .filter(|i| is_subideal(i, i7))
        .collect();
    let mut oracles: BTreeMap<IdealSpec, IdealOracle> = BTreeMap::new();
    oracles.insert(i7.clone(), oracle(i7, cap)?);
    let mut out = Vec::new();
    for i1 in &candidates {
        for i4 in candidates.iter().filter(|i4| is_subideal(i1, i4)) {
            let t = SuperIdealTriple::new(i1.clone(), i4.clone(), i7.clone())?;
            for s in [i1, i4] {
                if !oracles.contains_key(s) {
                    oracles.insert(s.clone(), oracle(s, cap)?);
                }
            }
            let cert = certify(&t, [&oracles[i1], &oracles[i4], &oracles[i7]]);
            if cert.invariant {
                out.push((t, cert));
            }
        }
    }
    out.sort_by(|a, b| (a.1.codims, &a.0).cmp(&(b.1.codims, &b.0)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{build_urest_rep, super_verify_relations};

    fn spec(p: &[(u32, u32)]) -> IdealSpec {
        IdealSpec::from_pairs(p).unwrap()
    }

    fn triple(a: &[(u32, u32)], b: &[(u32, u32)], c: &[(u32, u32)]) -> SuperIdealTriple {
        SuperIdealTriple::new(spec(a), spec(b), spec(c)).unwrap()
    }

    const Z1: &[(u32, u32)] = &[(1, 0)];
    const M2: &[(u32, u32)] = &[(2, 0), (0, 1)];

    #[test]
    fn examples() {
        let t = triple(Z1, Z1, Z1);
        assert!(check_super_invariance(&t, 8).unwrap());
        let r = build_urest_rep(&t, 8).unwrap();
        assert_eq!(r.block_dims, [1, 1, 1, 1]);
        assert!(super_verify_relations(&r.rep));

        let t = triple(M2, M2, Z1);
        assert!(check_super_invariance(&t, 8).unwrap());
        let r = build_urest_rep(&t, 8).unwrap();
        assert_eq!(r.block_dims, [5, 5, 5, 1]);
        assert!(super_verify_relations(&r.rep));

        let t = triple(&[(3, 0)], &[(3, 0)], Z1);
        let c = invariance_certificate(&t, 8).unwrap();
        assert!(!c.invariant);
        assert!(c.violation.unwrap().starts_with("w2"));
        assert!(matches!(build_urest_rep(&t, 8), Err(SuperError::NotInvariant(_))));
    }

    #[test]
    fn nesting_enforced() {
        let e = SuperIdealTriple::new(spec(Z1), spec(M2), spec(Z1));
        assert!(matches!(e, Err(SuperError::NotNested { .. })));
        let e = SuperIdealTriple::new(spec(&[(0, 1)]), spec(Z1), spec(Z1));
        assert!(e.is_err());
    }

    #[test]
    fn serde_shape() {
        let t = triple(M2, M2, Z1);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"i1":[[2,0],[0,1]],"i4":[[2,0],[0,1]],"i7":[[1,0]]}"#);
        let back: SuperIdealTriple = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn bound_one_gives_the_equal_triple() {
        let ts = enumerate_triples(&spec(Z1), 1).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].0, triple(Z1, Z1, Z1));
    }

    #[test]
    fn triples_under_z1() {
        let ts: Vec<SuperIdealTriple> = enumerate_triples(&spec(Z1), 15).unwrap().into_iter().map(|t| t.0).collect();
        let expected = vec![
            triple(Z1, Z1, Z1),
            triple(M2, Z1, Z1),
            triple(M2, M2, Z1),
            triple(&[(2, 0)], M2, Z1),
            triple(&[(3, 0), (0, 1)], M2, Z1),
            triple(&[(3, 0), (1, 1)], M2, Z1),
        ];
        let mut a = ts.clone();
        let mut b = expected;
        a.sort();
        b.sort();
        assert_eq!(a, b);
        for t in &ts {
            let r = build_urest_rep(t, 8).unwrap();
            assert!(super_verify_relations(&r.rep));
        }
    }
}
