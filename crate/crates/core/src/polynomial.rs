//! Sparse polynomials over a field in the six scalar indeterminates
//! `a, b, c, u, v, w`, where `x = ae + bf + cg` and `y = ue + vf + wg`.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;

/// Names of the scalar indeterminates, in index order.
pub const SCALAR_NAMES: [char; 6] = ['a', 'b', 'c', 'u', 'v', 'w'];

/// Exponent vector over `a, b, c, u, v, w`.
pub type Exponents = [u8; 6];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<K: Field> {
    terms: BTreeMap<Exponents, K>,
}

impl<K: Field> Default for Polynomial<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: K) -> Self {
        Self::monomial([0; 6], c)
    }

    /// The indeterminate with index `idx` (0 = a, ..., 5 = w).
    pub fn var(idx: usize, ctx: &K::Context) -> Self {
        let mut e = [0; 6];
        e[idx] = 1;
        Self::monomial(e, K::one(ctx))
    }

    pub fn monomial(exponents: Exponents, c: K) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn add_term(&mut self, exponents: Exponents, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exponents);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
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

    pub fn coefficient(&self, exponents: &Exponents) -> Option<&K> {
        self.terms.get(exponents)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &K)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for (x, y) in e.iter_mut().zip(e2) {
                    *x += y;
                }
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x.clone() * c.clone());
        }
        out
    }

    /// Value at a point `(a, b, c, u, v, w)`.
    pub fn evaluate(&self, point: &[K; 6]) -> K {
        let ctx = point[0].context();
        let mut acc = K::zero(&ctx);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    names: &[char],
    exponents: &[u8],
) -> fmt::Result {
    for (name, &k) in names.iter().zip(exponents) {
        match k {
            0 => {}
            1 => write!(f, "{name}")?,
            _ => write!(f, "{name}^{k}")?,
        }
    }
    Ok(())
}

impl<K: Field> fmt::Display for Polynomial<K> {
    /// Terms in descending lexicographic order (`a > b > c > u > v > w`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let constant = e.iter().all(|&k| k == 0);
            if constant || !c.is_one() {
                write!(f, "{c}")?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            write_monomial(f, &SCALAR_NAMES, e)?;
        }
        Ok(())
    }
}
