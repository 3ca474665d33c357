use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{int, Rational};
use crate::poly::{derivation_table, Monomial};
use crate::sl2::{irrep_matrices, GeneratorId, IrrepLabel};

use super::z_index;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OddKind {
    W1,
    W2,
}

/// `w1^index` or `w2^index`, `index` in `{1, 2}`. The derived order is the
/// normal order: all of W1 before W2, indices ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddGen {
    pub kind: OddKind,
    pub index: usize,
}

impl OddGen {
    pub const ALL: [OddGen; 4] = [
        OddGen { kind: OddKind::W1, index: 1 },
        OddGen { kind: OddKind::W1, index: 2 },
        OddGen { kind: OddKind::W2, index: 1 },
        OddGen { kind: OddKind::W2, index: 2 },
    ];

    pub fn w1(index: usize) -> Self {
        assert!(index == 1 || index == 2);
        OddGen { kind: OddKind::W1, index }
    }

    pub fn w2(index: usize) -> Self {
        assert!(index == 1 || index == 2);
        OddGen { kind: OddKind::W2, index }
    }
}

impl fmt::Display for OddGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            OddKind::W1 => 1,
            OddKind::W2 => 2,
        };
        write!(f, "w{}^{}", k, self.index)
    }
}

/// A generator of `n_super`. `Z(i)` is `z_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Z(usize),
    Odd(OddGen),
}

impl Letter {
    pub const ALL: [Letter; 8] = [
        Letter::Z(0),
        Letter::Z(1),
        Letter::Z(2),
        Letter::Z(3),
        Letter::Odd(OddGen::ALL[0]),
        Letter::Odd(OddGen::ALL[1]),
        Letter::Odd(OddGen::ALL[2]),
        Letter::Odd(OddGen::ALL[3]),
    ];

    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Odd(_))
    }
}

/// PBW basis element: `z^even` followed by distinct odd generators in normal order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMonomial {
    pub even: Monomial,
    pub odd: Vec<OddGen>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial {
            even: Monomial::ONE,
            odd: Vec::new(),
        }
    }

    /// `None` unless `odd` is strictly increasing.
    pub fn new(even: Monomial, odd: Vec<OddGen>) -> Option<Self> {
        odd.windows(2)
            .all(|w| w[0] < w[1])
            .then_some(SuperMonomial { even, odd })
    }

    pub fn count(&self, kind: OddKind) -> usize {
        self.odd.iter().filter(|g| g.kind == kind).count()
    }

    /// Position in the 3x3 table of odd parts: `3 * #W1 + #W2 + 1`.
    pub fn space(&self) -> usize {
        3 * self.count(OddKind::W1) + self.count(OddKind::W2) + 1
    }

    pub fn is_odd(&self) -> bool {
        self.odd.len() % 2 == 1
    }

    /// Polynomial degree counted twice plus the number of odd factors.
    pub fn weighted_degree(&self) -> u32 {
        2 * self.even.degree() + self.odd.len() as u32
    }

    pub fn to_word(&self) -> Vec<Letter> {
        let mut w = Vec::new();
        for (i, &e) in self.even.0.iter().enumerate() {
            w.extend(std::iter::repeat_n(Letter::Z(i), e as usize));
        }
        w.extend(self.odd.iter().map(|&g| Letter::Odd(g)));
        w
    }

    fn from_sorted(word: &[Letter]) -> Self {
        let mut even = [0u32; 4];
        let mut odd = Vec::new();
        for l in word {
            match *l {
                Letter::Z(i) => even[i] += 1,
                Letter::Odd(g) => odd.push(g),
            }
        }
        SuperMonomial {
            even: Monomial(even),
            odd,
        }
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.even.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("z{}", i + 1)),
                _ => parts.push(format!("z{}^{}", i + 1, e)),
            }
        }
        parts.extend(self.odd.iter().map(|g| g.to_string()));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A linear combination of PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperElement {
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: SuperMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, Rational::one());
        e
    }

    pub fn letter(l: Letter) -> Self {
        normal_order(&[l])
    }

    pub fn terms(&self) -> &BTreeMap<SuperMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn add(&self, other: &SuperElement) -> SuperElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> SuperElement {
        if c.is_zero() {
            return Self::zero();
        }
        SuperElement {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn sub(&self, other: &SuperElement) -> SuperElement {
        self.add(&other.scaled(&int(-1)))
    }

    pub fn mul(&self, other: &SuperElement) -> SuperElement {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.to_word();
                w.extend(b.to_word());
                out = out.add(&normal_order(&w).scaled(&(x * y)));
            }
        }
        out
    }

    /// `Some(true)` if every term is odd, `Some(false)` if every term is even.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(SuperMonomial::is_odd);
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    /// The graded commutator `xy - (-1)^{|x||y|} yx` of homogeneous elements.
    pub fn bracket(&self, other: &SuperElement) -> SuperElement {
        let sign = match (self.parity(), other.parity()) {
            (Some(true), Some(true)) => int(-1),
            _ => int(1),
        };
        self.mul(other).sub(&other.mul(self).scaled(&sign))
    }

    /// g0 acting by derivations on every letter.
    pub fn act_g0(&self, g: GeneratorId) -> SuperElement {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let word = m.to_word();
            for pos in 0..word.len() {
                for (x, l) in act_letter(g, word[pos]) {
                    let mut w = word.clone();
                    w[pos] = l;
                    out = out.add(&normal_order(&w).scaled(&(c * int(x))));
                }
            }
        }
        out
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `g . l` as integer combinations of letters.
fn act_letter(g: GeneratorId, l: Letter) -> Vec<(i64, Letter)> {
    match l {
        Letter::Z(i) => derivation_table(g)[i]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (c, Letter::Z(j)))
            .collect(),
        Letter::Odd(o) => {
            let (label, make): (IrrepLabel, fn(usize) -> OddGen) = match o.kind {
                OddKind::W1 => (IrrepLabel::new(0, 1), OddGen::w1),
                OddKind::W2 => (IrrepLabel::new(1, 0), OddGen::w2),
            };
            let m = irrep_matrices(label);
            m.get(g)
                .column(o.index - 1)
                .into_iter()
                .map(|(k, x)| {
                    let x: i64 = x.to_integer().try_into().expect("small entry");
                    (x, Letter::Odd(make(k + 1)))
                })
                .collect()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    Leftmost,
    Rightmost,
}

fn out_of_order(x: Letter, y: Letter) -> bool {
    x > y || (x == y && x.is_odd())
}

pub fn normal_order(word: &[Letter]) -> SuperElement {
    normal_order_with(word, RewriteOrder::Leftmost)
}

/// Rewrites `word` to PBW form, always resolving the leftmost (or rightmost)
/// out-of-order adjacent pair first.
pub fn normal_order_with(word: &[Letter], order: RewriteOrder) -> SuperElement {
    let mut out = SuperElement::zero();
    let mut stack: Vec<(Rational, Vec<Letter>)> = vec![(Rational::one(), word.to_vec())];
    while let Some((c, w)) = stack.pop() {
        let mut bad = (0..w.len().saturating_sub(1)).filter(|&i| out_of_order(w[i], w[i + 1]));
        let pos = match order {
            RewriteOrder::Leftmost => bad.next(),
            RewriteOrder::Rightmost => bad.next_back(),
        };
        let Some(i) = pos else {
            out.add_term(SuperMonomial::from_sorted(&w), c);
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        if x == y {
            // Odd squares vanish.
            continue;
        }
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        match (x, y) {
            (Letter::Odd(a), Letter::Odd(b)) if a.kind == OddKind::W2 && b.kind == OddKind::W1 => {
                let mut contracted = w[..i].to_vec();
                contracted.push(Letter::Z(z_index(a.index, b.index)));
                contracted.extend_from_slice(&w[i + 2..]);
                stack.push((c.clone(), contracted));
                stack.push((-c, swapped));
            }
            (Letter::Odd(_), Letter::Odd(_)) => stack.push((-c, swapped)),
            _ => stack.push((c, swapped)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w1(i: usize) -> Letter {
        Letter::Odd(OddGen::w1(i))
    }

    fn w2(i: usize) -> Letter {
        Letter::Odd(OddGen::w2(i))
    }

    fn mono(even: [u32; 4], odd: &[OddGen]) -> SuperMonomial {
        SuperMonomial::new(Monomial(even), odd.to_vec()).unwrap()
    }

    #[test]
    fn basic_rewrites() {
        assert!(normal_order(&[w1(1), w1(1)]).is_zero());
        assert!(normal_order(&[w2(2), w2(2)]).is_zero());

        let e = normal_order(&[w2(1), w1(1)]);
        let mut expected = SuperElement::from_monomial(mono([0; 4], &[OddGen::w1(1), OddGen::w2(1)])).scaled(&int(-1));
        expected.add_term(mono([1, 0, 0, 0], &[]), int(1));
        assert_eq!(e, expected);

        let e = normal_order(&[w1(1), Letter::Z(1)]);
        assert_eq!(e, SuperElement::from_monomial(mono([0, 1, 0, 0], &[OddGen::w1(1)])));

        let e = normal_order(&[w1(2), w1(1)]);
        assert_eq!(e, SuperElement::from_monomial(mono([0; 4], &[OddGen::w1(1), OddGen::w1(2)])).scaled(&int(-1)));
    }

    #[test]
    fn anticommutator_table() {
        for i in 1..=2 {
            for j in 1..=2 {
                let a = SuperElement::letter(w2(i));
                let b = SuperElement::letter(w1(j));
                let z = SuperElement::letter(Letter::Z(z_index(i, j)));
                assert_eq!(a.bracket(&b), z, "w2^{i}, w1^{j}");
            }
        }
    }

    #[test]
    fn graded_jacobi() {
        let gens: Vec<SuperElement> = Letter::ALL.iter().map(|&l| SuperElement::letter(l)).collect();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let lhs = x.bracket(&y.bracket(z));
                    let sign = if x.parity() == Some(true) && y.parity() == Some(true) { -1 } else { 1 };
                    let rhs = x.bracket(y).bracket(z).add(&y.bracket(&x.bracket(z)).scaled(&int(sign)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn g0_derivation_respects_relations() {
        // g . {w2, w1} must equal {g.w2, w1} + {w2, g.w1}.
        for g in GeneratorId::ALL {
            for i in 1..=2 {
                for j in 1..=2 {
                    let a = SuperElement::letter(w2(i));
                    let b = SuperElement::letter(w1(j));
                    let lhs = a.bracket(&b).act_g0(g);
                    let rhs = a.act_g0(g).bracket(&b).add(&a.bracket(&b.act_g0(g)));
                    assert_eq!(lhs, rhs, "{} on w2^{i}, w1^{j}", g.name());
                }
            }
        }
    }

    #[test]
    fn space_indices() {
        assert_eq!(SuperMonomial::one().space(), 1);
        assert_eq!(mono([0; 4], &[OddGen::w2(1)]).space(), 2);
        assert_eq!(mono([0; 4], &[OddGen::w1(1), OddGen::w1(2), OddGen::w2(1), OddGen::w2(2)]).space(), 9);
        assert!(SuperMonomial::new(Monomial::ONE, vec![OddGen::w2(1), OddGen::w1(1)]).is_none());
    }

    fn letter() -> impl Strategy<Value = Letter> {
        (0..8usize).prop_map(|i| Letter::ALL[i])
    }

    proptest! {
        #[test]
        fn strategies_agree(word in proptest::collection::vec(letter(), 0..7)) {
            prop_assert_eq!(
                normal_order_with(&word, RewriteOrder::Leftmost),
                normal_order_with(&word, RewriteOrder::Rightmost)
            );
        }

        #[test]
        fn parity_is_additive(word in proptest::collection::vec(letter(), 0..7)) {
            let odd = word.iter().filter(|l| l.is_odd()).count() % 2 == 1;
            let e = normal_order(&word);
            prop_assert!(e.is_zero() || e.parity() == Some(odd));
        }

        #[test]
        fn associative(a in proptest::collection::vec(letter(), 0..4), b in proptest::collection::vec(letter(), 0..4)) {
            let x = normal_order(&a);
            let y = normal_order(&b);
            let mut w = a.clone();
            w.extend(b);
            prop_assert_eq!(x.mul(&y), normal_order(&w));
        }
    }
}
