//! Text input for generators and ideal specs.
//!
//! A generator list is comma separated. Each generator is a sum of terms such as
//! `z1^2`, `-2*z2*z3`, `1/2*det*v1`; `v<k>` selects the component of `V0`
//! (default `v0`). Two shorthands expand to several generators: `deg<d>` is every
//! highest weight vector of degree `d`, and `hw<d>@a:b` those of type `(a,b)`.

use thiserror::Error;

use crate::ideal::{IdealError, IdealSpec};
use crate::linalg::{int, parse_rational, Rational, Subspace};
use crate::poly::{highest_weight_vectors, ComponentLabel, Poly, PolySpace, VPoly};
use crate::sl2::IrrepLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("cannot parse {0:?}")]
    Syntax(String),
    #[error("component v{index} out of range for {source_label}")]
    Component { index: usize, source_label: IrrepLabel },
    #[error("{0:?} is not of the form z1^r*det^s")]
    NotComponent(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn syntax(s: &str) -> ParseError {
    ParseError::Syntax(s.to_string())
}

fn parse_power(s: &str) -> Result<(&str, u32), ParseError> {
    match s.split_once('^') {
        Some((base, e)) => Ok((base, e.parse().map_err(|_| syntax(s))?)),
        None => Ok((s, 1)),
    }
}

/// One product term: coefficient, polynomial factor, and the `V0` component.
fn parse_term(t: &str) -> Result<(Rational, Poly, usize), ParseError> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    if body.is_empty() {
        return Err(syntax(t));
    }
    let mut coef = int(if neg { -1 } else { 1 });
    let mut poly = Poly::one();
    let mut comp = 0;
    for f in body.split('*') {
        let f = f.trim();
        if f.starts_with(|c: char| c.is_ascii_digit()) {
            coef *= parse_rational(f).map_err(|_| syntax(f))?;
            continue;
        }
        let (base, e) = parse_power(f)?;
        match base {
            "det" => {
                for _ in 0..e {
                    poly = poly.mul(&Poly::det());
                }
            }
            "z1" | "z2" | "z3" | "z4" => {
                let i = base[1..].parse::<usize>().expect("digit") - 1;
                for _ in 0..e {
                    poly = poly.mul_var(i);
                }
            }
            _ => match base.strip_prefix('v').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if e == 1 => comp = k,
                _ => return Err(syntax(f)),
            },
        }
    }
    Ok((coef, poly, comp))
}

fn parse_sum(s: &str, source: IrrepLabel) -> Result<VPoly, ParseError> {
    let mut out = VPoly::zero(source);
    let spaced = s.replace('-', "+-");
    for t in spaced.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (c, p, k) = parse_term(t)?;
        if k >= source.dim() {
            return Err(ParseError::Component {
                index: k,
                source_label: source,
            });
        }
        out = out.add(&VPoly::from_scalar(source, p.scaled(&c), k));
    }
    Ok(out)
}

fn expand_hw(d: u32, only: Option<IrrepLabel>, source: IrrepLabel) -> Vec<VPoly> {
    let space = PolySpace::new(source, d);
    let full = Subspace::full(space.dim(d));
    highest_weight_vectors(&space, d, &full)
        .expect("the full space is invariant")
        .into_iter()
        .filter(|(l, _)| only.is_none_or(|o| o == *l))
        .map(|(_, p)| p)
        .collect()
}

fn parse_label(s: &str) -> Result<IrrepLabel, ParseError> {
    let (a, b) = s
        .split_once([':', ','])
        .ok_or_else(|| syntax(s))?;
    let a = a.trim().parse().map_err(|_| syntax(s))?;
    let b = b.trim().parse().map_err(|_| syntax(s))?;
    Ok(IrrepLabel::new(a, b))
}

/// `"a,b"` or `"a:b"`.
pub fn parse_irrep_label(s: &str) -> Result<IrrepLabel, ParseError> {
    parse_label(s)
}

pub fn parse_generators(s: &str, source: IrrepLabel) -> Result<Vec<VPoly>, ParseError> {
    let mut out = Vec::new();
    for g in s.split(',').map(str::trim) {
        if g.is_empty() {
            return Err(syntax(s));
        }
        if let Some(rest) = g.strip_prefix("deg") {
            let d = rest.parse().map_err(|_| syntax(g))?;
            out.extend(expand_hw(d, None, source));
        } else if let Some(rest) = g.strip_prefix("hw") {
            let (d, l) = rest.split_once('@').ok_or_else(|| syntax(g))?;
            let d = d.parse().map_err(|_| syntax(g))?;
            out.extend(expand_hw(d, Some(parse_label(l)?), source));
        } else {
            out.push(parse_sum(g, source)?);
        }
    }
    Ok(out)
}

/// Generators written as `z1^r*det^s`, e.g. `"z1^3,z1*det"`.
pub fn parse_ideal_spec(s: &str) -> Result<IdealSpec, ParseError> {
    let mut gens = Vec::new();
    for g in s.split(',').map(str::trim) {
        let (c, p, k) = parse_term(g)?;
        let not = || ParseError::NotComponent(g.to_string());
        if k != 0 || c != int(1) {
            return Err(not());
        }
        let (r, s) = (0..=p.homogeneous_degree().unwrap_or(0) / 2)
            .map(|s| (p.homogeneous_degree().unwrap_or(0) - 2 * s, s))
            .find(|&(r, s)| Poly::component_hw(r, s) == p)
            .ok_or_else(not)?;
        gens.push(ComponentLabel::new(r, s));
    }
    gens.sort_by_key(|g| std::cmp::Reverse(g.r));
    Ok(IdealSpec::new(gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn simple_generators() {
        let g = parse_generators("z1^2, z1*det", IrrepLabel::TRIVIAL).unwrap();
        assert_eq!(g[0], VPoly::scalar(Poly::var(0).mul_var(0)));
        assert_eq!(g[1], VPoly::scalar(Poly::var(0).mul(&Poly::det())));
        let g = parse_generators("z1*z4 - z2*z3", IrrepLabel::TRIVIAL).unwrap();
        assert_eq!(g, vec![VPoly::scalar(Poly::det())]);
        let g = parse_generators("1/2*z3 + 2*z1*v1", IrrepLabel::new(1, 0)).unwrap();
        let mut e = VPoly::from_scalar(IrrepLabel::new(1, 0), Poly::var(2).scaled(&frac(1, 2)), 0);
        e = e.add(&VPoly::from_scalar(IrrepLabel::new(1, 0), Poly::var(0).scaled(&int(2)), 1));
        assert_eq!(g, vec![e]);
    }

    #[test]
    fn shorthands() {
        assert_eq!(parse_generators("deg2", IrrepLabel::new(1, 0)).unwrap().len(), 3);
        assert_eq!(parse_generators("hw1@2:1", IrrepLabel::new(1, 0)).unwrap().len(), 1);
        assert_eq!(parse_generators("hw1@1:1", IrrepLabel::new(1, 0)).unwrap().len(), 0);
    }

    #[test]
    fn errors() {
        assert!(parse_generators("z5", IrrepLabel::TRIVIAL).is_err());
        assert!(parse_generators("z1,", IrrepLabel::TRIVIAL).is_err());
        assert!(parse_generators("z1*v1", IrrepLabel::TRIVIAL).is_err());
        assert!(parse_generators("z1^x", IrrepLabel::TRIVIAL).is_err());
    }

    #[test]
    fn ideal_specs() {
        assert_eq!(parse_ideal_spec("z1").unwrap(), IdealSpec::from_pairs(&[(1, 0)]).unwrap());
        assert_eq!(
            parse_ideal_spec("det, z1^2").unwrap(),
            IdealSpec::from_pairs(&[(2, 0), (0, 1)]).unwrap()
        );
        assert_eq!(
            parse_ideal_spec("z1^3,z1*det").unwrap(),
            IdealSpec::from_pairs(&[(3, 0), (1, 1)]).unwrap()
        );
        assert!(matches!(parse_ideal_spec("z2"), Err(ParseError::NotComponent(_))));
        assert!(parse_ideal_spec("z1^2,z1").is_err());
    }
}
