use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use crate::polynomial::write_monomial;

/// The nine scalar indeterminates. `a, b, c` and `u, v, w` are the
/// coordinates of `x` and `y`; `i, j, k` are the type bits, idempotent
/// (`i^2 = i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indeterminate {
    A,
    B,
    C,
    U,
    V,
    W,
    I,
    J,
    K,
}

const NAMES: [char; 9] = ['a', 'b', 'c', 'u', 'v', 'w', 'i', 'j', 'k'];

impl Indeterminate {
    pub const ALL: [Indeterminate; 9] = [
        Indeterminate::A,
        Indeterminate::B,
        Indeterminate::C,
        Indeterminate::U,
        Indeterminate::V,
        Indeterminate::W,
        Indeterminate::I,
        Indeterminate::J,
        Indeterminate::K,
    ];

    /// The six coordinate indeterminates `a, b, c, u, v, w`.
    pub const COORDINATES: [Indeterminate; 6] = [
        Indeterminate::A,
        Indeterminate::B,
        Indeterminate::C,
        Indeterminate::U,
        Indeterminate::V,
        Indeterminate::W,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        NAMES[self.index()]
    }

    pub fn from_char(c: char) -> Option<Self> {
        NAMES.iter().position(|&n| n == c).map(|i| Self::ALL[i])
    }

    pub fn is_type_symbol(self) -> bool {
        self.index() >= 6
    }
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector over `a, b, c, u, v, w, i, j, k` with the exponents of
/// `i, j, k` in `{0, 1}`. The derived order is lexicographic with `a` most
/// significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u8; 9]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 9]);

    pub fn new(mut exponents: [u8; 9]) -> Self {
        for e in &mut exponents[6..] {
            *e = (*e).min(1);
        }
        Monomial(exponents)
    }

    pub fn var(x: Indeterminate) -> Self {
        let mut e = [0; 9];
        e[x.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, x: Indeterminate) -> u8 {
        self.0[x.index()]
    }

    pub fn exponents(&self) -> &[u8; 9] {
        &self.0
    }

    /// Exponents of `a, b, c, u, v, w` only.
    pub fn coordinate_part(&self) -> [u8; 6] {
        std::array::from_fn(|n| self.0[n])
    }

    /// The same monomial with the `a..w` exponents cleared.
    pub fn type_part(&self) -> Monomial {
        let mut e = [0; 9];
        e[6..].copy_from_slice(&self.0[6..]);
        Monomial(e)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Monomial::new(e)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 9]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        write_monomial(f, &NAMES, &self.0)
    }
}

/// Integer polynomial in `a, b, c, u, v, w, i, j, k` modulo `i^2 = i`,
/// `j^2 = j`, `k^2 = k`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ScalarPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(n: i64) -> Self {
        Self::term(Monomial::ONE, BigInt::from(n))
    }

    pub fn var(x: Indeterminate) -> Self {
        Self::term(Monomial::var(x), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Parses an expression such as `aw(av-bu)` or `a^2u^2i`.
    pub fn parse(s: &str) -> Result<Self, super::FormalError> {
        super::parse::parse_scalar(s)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    /// Substitutes integers for some indeterminates.
    pub fn substitute(&self, bindings: &BTreeMap<Indeterminate, i64>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            let mut c = c.clone();
            for (&x, &value) in bindings {
                let k = e[x.index()];
                if k > 0 {
                    c *= BigInt::from(value).pow(k as u32);
                    e[x.index()] = 0;
                }
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// The single term when the polynomial is one monomial with coefficient 1.
    fn as_unit_monomial(&self) -> Option<Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(*m),
            _ => None,
        }
    }

    /// True when printing needs parentheses in front of a formal word.
    pub(crate) fn needs_parens(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for ScalarPoly {
    /// Terms in descending lexicographic order, `a > b > c > u > v > w > i > j > k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for ScalarPoly {
    fn from(n: i64) -> Self {
        Self::constant(n)
    }
}

impl From<Indeterminate> for ScalarPoly {
    fn from(x: Indeterminate) -> Self {
        Self::var(x)
    }
}

impl Add for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ScalarPoly {
            type Output = ScalarPoly;
            fn $m(self, rhs: ScalarPoly) -> ScalarPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        -&self
    }
}

pub(crate) fn display_coefficient(p: &ScalarPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // coefficient written directly in front of a formal word
    if let Some(m) = p.as_unit_monomial() {
        if !m.is_one() {
            write!(f, "{m}")?;
        }
        Ok(())
    } else if p.needs_parens() {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Indeterminate::*;

    fn v(x: Indeterminate) -> ScalarPoly {
        ScalarPoly::var(x)
    }

    #[test]
    fn type_symbols_are_idempotent() {
        let i = v(I);
        assert_eq!(&i * &i, i);
        let ij = &v(I) * &v(J);
        assert_eq!(&(&ij * &v(I)) * &v(J), ij);
        // coordinates are not
        assert_ne!(&v(A) * &v(A), v(A));
    }

    #[test]
    fn display_is_lex_descending() {
        let p = &(&(&v(A) * &v(A)) * &(&v(V) * &v(W))) - &(&(&v(A) * &v(B)) * &(&v(U) * &v(W)));
        assert_eq!(p.to_string(), "a^2vw - abuw");
        let q = -&(&(&v(V) * &v(V)) * &(&v(I) * &v(J)));
        assert_eq!(q.to_string(), "-v^2ij");
        assert_eq!(ScalarPoly::zero().to_string(), "0");
        assert_eq!(ScalarPoly::constant(-3).to_string(), "-3");
        assert_eq!((&ScalarPoly::constant(2) * &v(K)).to_string(), "2k");
    }

    #[test]
    fn substitution() {
        // aw(av - bu) at a = 1, b = 0 is vw
        let alpha = &(&v(A) * &v(W)) * &(&(&v(A) * &v(V)) - &(&v(B) * &v(U)));
        let b: BTreeMap<_, _> = [(A, 1), (B, 0), (C, 0)].into_iter().collect();
        assert_eq!(alpha.substitute(&b), &v(V) * &v(W));
        assert_eq!(alpha.substitute(&BTreeMap::new()), alpha);
        let twos: BTreeMap<_, _> = [(A, 2), (W, 3), (V, 1), (B, 5), (U, 1)]
            .into_iter()
            .collect();
        assert_eq!(
            alpha.substitute(&twos),
            ScalarPoly::constant(2 * 3 * (2 - 5))
        );
    }

    #[test]
    fn zero_coefficients_dropped() {
        let p = &v(A) - &v(A);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }
}
