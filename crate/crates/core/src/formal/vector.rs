use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::Signed;

use super::scalar::{display_coefficient, Indeterminate, Monomial, ScalarPoly};
use super::word::{symbol_product, FormalWord};
use super::FormalError;

/// A finite sum of formal words with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalVector {
    terms: BTreeMap<FormalWord, ScalarPoly>,
}

impl FormalVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(word: FormalWord, coefficient: ScalarPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(word, coefficient);
        v
    }

    /// Parses text such as `v^2(A^2 - ijA) + vw{AB + BA - ie(D+F)}`.
    pub fn parse(s: &str) -> Result<Self, FormalError> {
        super::parse::parse_vector(s)
    }

    pub fn add_term(&mut self, word: FormalWord, coefficient: ScalarPoly) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_default();
        *entry = &*entry + &coefficient;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn coefficient(&self, word: &FormalWord) -> ScalarPoly {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormalWord, &ScalarPoly)> {
        self.terms.iter()
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

    pub fn scale(&self, c: &ScalarPoly) -> Self {
        let mut out = Self::zero();
        for (w, p) in &self.terms {
            out.add_term(*w, p * c);
        }
        out
    }

    /// Only the terms whose word satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&FormalWord) -> bool) -> Self {
        FormalVector {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, p)| (*w, p.clone()))
                .collect(),
        }
    }

    /// Distributes `self * rhs`, reducing basis-basis products through the
    /// table. Both sides must be supported on single symbols.
    pub fn formal_multiply(&self, rhs: &FormalVector) -> Result<FormalVector, FormalError> {
        let singles = |v: &FormalVector| -> Result<(), FormalError> {
            match v.terms.keys().find(|w| !w.is_single()) {
                Some(w) => Err(FormalError::PairOperand(*w)),
                None => Ok(()),
            }
        };
        singles(self)?;
        singles(rhs)?;
        let mut out = FormalVector::zero();
        for (w1, p1) in &self.terms {
            for (w2, p2) in &rhs.terms {
                let (FormalWord::Single(s), FormalWord::Single(t)) = (w1, w2) else {
                    unreachable!()
                };
                let (scalar, word) = symbol_product(*s, *t);
                out.add_term(word, &(p1 * p2) * &scalar);
            }
        }
        Ok(out)
    }

    /// Substitutes integers for some indeterminates.
    pub fn specialize(&self, bindings: &BTreeMap<Indeterminate, i64>) -> Self {
        let mut out = Self::zero();
        for (w, p) in &self.terms {
            out.add_term(*w, p.substitute(bindings));
        }
        out
    }

    /// Regroups by the monomial in the coordinates `a..w`: each group maps
    /// to the vector (with type symbols left in the coefficients) multiplying
    /// that monomial.
    pub fn group_by_coordinates(&self) -> BTreeMap<Monomial, FormalVector> {
        let mut out: BTreeMap<Monomial, FormalVector> = BTreeMap::new();
        for (w, p) in &self.terms {
            for (m, c) in p.terms() {
                let mut coord = [0; 9];
                coord[..6].copy_from_slice(&m.coordinate_part());
                out.entry(Monomial::new(coord))
                    .or_default()
                    .add_term(*w, ScalarPoly::term(m.type_part(), c.clone()));
            }
        }
        out
    }
}

impl Add for &FormalVector {
    type Output = FormalVector;
    fn add(self, rhs: &FormalVector) -> FormalVector {
        let mut out = self.clone();
        for (w, p) in &rhs.terms {
            out.add_term(*w, p.clone());
        }
        out
    }
}

impl Sub for &FormalVector {
    type Output = FormalVector;
    fn sub(self, rhs: &FormalVector) -> FormalVector {
        self + &(-rhs)
    }
}

impl Neg for &FormalVector {
    type Output = FormalVector;
    fn neg(self) -> FormalVector {
        FormalVector {
            terms: self.terms.iter().map(|(w, p)| (*w, -p)).collect(),
        }
    }
}

impl fmt::Display for FormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, p)) in self.terms.iter().enumerate() {
            let negative = p.len() == 1 && p.terms().all(|(_, c)| c.is_negative());
            let p = if negative { -p } else { p.clone() };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            display_coefficient(&p, f)?;
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl From<FormalWord> for FormalVector {
    fn from(w: FormalWord) -> Self {
        FormalVector::term(w, ScalarPoly::one())
    }
}
