//! g0-invariant ideals of finite codimension in the polynomial ring, described by
//! their generating components `z1^r det^s`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::poly::{component_span, degree_components, monomial_count, ComponentLabel, Poly, PolySpace, VPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("malformed ideal spec: {0}")]
    Malformed(String),
    #[error("ideal has infinite codimension (no pure power of z1 among the generators)")]
    InfiniteCodimension,
    #[error("degree cap {cap} is below the required {needed}")]
    CapTooSmall { cap: u32, needed: u32 },
    #[error("ideal does not fill a whole degree by degree {cap}")]
    NotSaturated { cap: u32 },
    #[error("sink formula not applicable: {0}")]
    FormulaInapplicable(String),
    #[error("arrow {from} -> {to}: multiplication gives {found}, tree predicts {expected}")]
    ArrowMismatch {
        from: ComponentLabel,
        to: ComponentLabel,
        found: bool,
        expected: bool,
    },
}

/// Generators `(r_i, s_i)` with `r` strictly decreasing and `s` strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<ComponentLabel>", into = "Vec<ComponentLabel>")]
pub struct IdealSpec {
    gens: Vec<ComponentLabel>,
}

impl TryFrom<Vec<ComponentLabel>> for IdealSpec {
    type Error = IdealError;

    fn try_from(gens: Vec<ComponentLabel>) -> Result<Self, Self::Error> {
        IdealSpec::new(gens)
    }
}

impl From<IdealSpec> for Vec<ComponentLabel> {
    fn from(s: IdealSpec) -> Self {
        s.gens
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|c| match (c.r, c.s) {
                (0, 0) => "1".to_string(),
                (r, 0) => monomial_name("z1", r),
                (0, s) => monomial_name("det", s),
                (r, s) => format!("{}*{}", monomial_name("z1", r), monomial_name("det", s)),
            })
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

fn monomial_name(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

impl IdealSpec {
    pub fn new(gens: Vec<ComponentLabel>) -> Result<Self, IdealError> {
        if gens.is_empty() {
            return Err(IdealError::Malformed("no generators".into()));
        }
        for w in gens.windows(2) {
            if w[1].r >= w[0].r || w[1].s <= w[0].s {
                return Err(IdealError::Malformed(format!(
                    "generators must have r decreasing and s increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(IdealSpec { gens })
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self, IdealError> {
        Self::new(pairs.iter().map(|&p| p.into()).collect())
    }

    pub fn gens(&self) -> &[ComponentLabel] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|c| c.degree()).max().unwrap_or(0)
    }

    pub fn check_finite(&self) -> Result<(), IdealError> {
        let first = self.gens[0];
        if first.s != 0 {
            return Err(IdealError::InfiniteCodimension);
        }
        if first.r == 0 {
            return Err(IdealError::Malformed("the unit ideal has codimension 0".into()));
        }
        Ok(())
    }
}

/// Closure of the generators under the two tree arrows.
pub fn contains_component(spec: &IdealSpec, c: ComponentLabel) -> bool {
    spec.gens
        .iter()
        .any(|g| c.s >= g.s && c.r + c.s >= g.r + g.s)
}

pub fn is_subideal(a: &IdealSpec, b: &IdealSpec) -> bool {
    a.gens.iter().all(|&g| contains_component(b, g))
}

/// The inequality `s_1 + ... + s_j <= r_1 - r_j` together with irredundancy of
/// every generator.
pub fn validate_minimal(spec: &IdealSpec) -> Result<bool, IdealError> {
    spec.check_finite()?;
    let r1 = spec.gens[0].r;
    let mut sum = 0;
    for g in &spec.gens[1..] {
        sum += g.s;
        if sum > r1 - g.r {
            return Ok(false);
        }
    }
    Ok(is_irredundant(spec))
}

/// No generator lies in the ideal of the others.
pub fn is_irredundant(spec: &IdealSpec) -> bool {
    (0..spec.gens.len()).all(|i| {
        !spec
            .gens
            .iter()
            .enumerate()
            .any(|(j, g)| j != i && spec.gens[i].s >= g.s && spec.gens[i].r + spec.gens[i].s >= g.r + g.s)
    })
}

/// Surviving components, by degree and then by decreasing `r`.
pub fn quotient_components(spec: &IdealSpec) -> Result<Vec<ComponentLabel>, IdealError> {
    spec.check_finite()?;
    // Every surviving [r, s] has r + s < r_1, hence degree below 2 r_1.
    let r1 = spec.gens[0].r;
    let mut out = Vec::new();
    for d in 0..2 * r1 {
        for c in degree_components(d) {
            if !contains_component(spec, c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

pub fn codimension(spec: &IdealSpec) -> Result<usize, IdealError> {
    Ok(quotient_components(spec)?.iter().map(|c| c.dim()).sum())
}

/// The closed-form sink list `z1^(r1-s2) det^(s2-1), ..., det^(s_t+r_t-1)`, taken
/// literally.
pub fn sinks_formula(spec: &IdealSpec) -> Result<Vec<ComponentLabel>, IdealError> {
    spec.check_finite()?;
    let gens = &spec.gens;
    let r1 = gens[0].r as i64;
    let mut out = Vec::new();
    let mut partial = 0i64;
    for g in &gens[1..] {
        partial += g.s as i64;
        let r = r1 - partial;
        let s = g.s as i64 - 1;
        if r < 0 || s < 0 {
            return Err(IdealError::FormulaInapplicable(format!(
                "term z1^{r} det^{s} for generator {g}"
            )));
        }
        out.push(ComponentLabel::new(r as u32, s as u32));
    }
    let last = gens[gens.len() - 1];
    let s = last.s as i64 + last.r as i64 - 1;
    if s < 0 {
        return Err(IdealError::FormulaInapplicable(format!("term det^{s}")));
    }
    out.push(ComponentLabel::new(0, s as u32));
    Ok(out)
}

/// Sinks read off the component graph of the quotient. Each arrow between
/// components is certified by multiplying out and projecting.
pub fn sinks_graph(spec: &IdealSpec) -> Result<Vec<ComponentLabel>, IdealError> {
    let comps = quotient_components(spec)?;
    let max_deg = comps.iter().map(|c| c.degree()).max().unwrap_or(0);
    let space = PolySpace::scalar(max_deg + 1);
    let mut sinks = Vec::new();
    for &c in &comps {
        let arrows = certified_arrows(&space, c)?;
        if !arrows.iter().any(|t| !contains_component(spec, *t)) {
            sinks.push(c);
        }
    }
    Ok(sinks)
}

/// Components of degree `deg(c) + 1` hit by `p- . c`, checked against the tree.
pub fn certified_arrows(space: &PolySpace, c: ComponentLabel) -> Result<Vec<ComponentLabel>, IdealError> {
    let d = c.degree();
    let src = component_span(space, c);
    let mults: Vec<Matrix> = (0..4).map(|i| space.mult_matrix(i, d)).collect();
    let image: Vec<SparseVec> = src
        .basis()
        .iter()
        .flat_map(|v| mults.iter().map(move |m| m.mul_vec(v)))
        .collect();
    let targets = degree_components(d + 1);
    let spans: Vec<Subspace> = targets.iter().map(|t| component_span(space, *t)).collect();
    let expected = c.successors();
    let mut out = Vec::new();
    for (k, t) in targets.iter().enumerate() {
        let mut others = Subspace::zero(space.dim(d + 1));
        for (j, s) in spans.iter().enumerate() {
            if j != k {
                others = others.sum(s).expect("same ambient");
            }
        }
        let found = image.iter().any(|v| !others.contains_vec(v));
        let predicted = expected.contains(t);
        if found != predicted {
            return Err(IdealError::ArrowMismatch {
                from: c,
                to: *t,
                found,
                expected: predicted,
            });
        }
        if found {
            out.push(*t);
        }
    }
    Ok(out)
}

/// All irredundant specs with codimension at most `max_codim`, sorted by
/// `(codimension, gens)`.
pub fn enumerate_ideals(max_codim: usize) -> Vec<IdealSpec> {
    let mut out = Vec::new();
    let mut r1 = 1u32;
    // The components [r, 0] with r < r_1 always survive.
    while (1..=r1).map(|k| (k as usize).pow(2)).sum::<usize>() <= max_codim {
        let mut stack = vec![vec![ComponentLabel::new(r1, 0)]];
        while let Some(gens) = stack.pop() {
            let spec = IdealSpec::new(gens.clone()).expect("generated in order");
            let codim = codimension(&spec).expect("finite by construction");
            if codim <= max_codim {
                out.push((codim, spec));
            }
            let last = *gens.last().expect("nonempty");
            for r in 0..last.r {
                for s in last.s + 1..last.r + last.s - r {
                    let mut next = gens.clone();
                    next.push(ComponentLabel::new(r, s));
                    stack.push(next);
                }
            }
        }
        r1 += 1;
    }
    out.sort();
    out.into_iter().map(|(_, s)| s).collect()
}

/// Per-degree ideal computed directly: products of monomials with the g0-closure
/// of each generator.
#[derive(Clone, Debug)]
pub struct IdealOracle {
    pub spec: IdealSpec,
    pub degree_cap: u32,
    pub per_degree: Vec<Subspace>,
    pub saturation: Option<u32>,
    space: PolySpace,
}

pub fn ideal_oracle(spec: &IdealSpec, degree_cap: u32) -> Result<IdealOracle, IdealError> {
    let needed = spec.max_generator_degree();
    if degree_cap < needed {
        return Err(IdealError::CapTooSmall { cap: degree_cap, needed });
    }
    let space = PolySpace::scalar(degree_cap);
    let mut per_degree: Vec<Subspace> = Vec::new();
    let mut saturation = None;
    for d in 0..=degree_cap {
        let n = space.dim(d);
        if saturation.is_some() {
            per_degree.push(Subspace::full(n));
            continue;
        }
        let mut cur = Subspace::zero(n);
        if d > 0 {
            let prev = &per_degree[d as usize - 1];
            for i in 0..4 {
                let m = space.mult_matrix(i, d - 1);
                for v in prev.basis() {
                    cur.insert(m.mul_vec(v));
                }
            }
        }
        let hws: Vec<SparseVec> = spec
            .gens()
            .iter()
            .filter(|g| g.degree() == d)
            .map(|g| space.to_vec_in(d, &VPoly::scalar(Poly::component_hw(g.r, g.s))))
            .collect();
        if !hws.is_empty() {
            cur = cur.sum(&space.g0_closure(d, &hws)).expect("same ambient");
        }
        if cur.is_full() {
            saturation = Some(d);
        }
        per_degree.push(cur);
    }
    Ok(IdealOracle {
        spec: spec.clone(),
        degree_cap,
        per_degree,
        saturation,
        space,
    })
}

impl IdealOracle {
    pub fn space(&self) -> &PolySpace {
        &self.space
    }

    /// The degree-`d` part; full above saturation.
    pub fn part(&self, d: u32) -> Result<Subspace, IdealError> {
        if d <= self.degree_cap {
            return Ok(self.per_degree[d as usize].clone());
        }
        match self.saturation {
            Some(_) => Ok(Subspace::full(monomial_count(d))),
            None => Err(IdealError::NotSaturated { cap: self.degree_cap }),
        }
    }

    pub fn contains_component(&self, c: ComponentLabel) -> Result<bool, IdealError> {
        let d = c.degree();
        if d > self.degree_cap {
            return match self.saturation {
                Some(_) => Ok(true),
                None => Err(IdealError::NotSaturated { cap: self.degree_cap }),
            };
        }
        let span = component_span(&self.space, c);
        Ok(self.per_degree[d as usize]
            .contains(&span)
            .expect("same ambient"))
    }

    pub fn codimension(&self) -> Result<usize, IdealError> {
        let sat = self
            .saturation
            .ok_or(IdealError::NotSaturated { cap: self.degree_cap })?;
        Ok((0..sat)
            .map(|d| monomial_count(d) - self.per_degree[d as usize].dim())
            .sum())
    }
}
