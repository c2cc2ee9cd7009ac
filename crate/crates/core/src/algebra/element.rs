use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::field::{ensure_same, Field, FieldError};

/// One of the three basis vectors `e, f, g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    E,
    F,
    G,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::E, Basis::F, Basis::G];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['e', 'f', 'g'][self.index()]
    }
}

/// A vector `x_e e + x_f f + x_g g` of the 3-dimensional algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element<K: Field> {
    coords: [K; 3],
}

impl<K: Field> Element<K> {
    pub fn new(e: K, f: K, g: K) -> Result<Self, FieldError> {
        Self::from_coords([e, f, g])
    }

    pub fn from_coords(coords: [K; 3]) -> Result<Self, FieldError> {
        let ctx = coords[0].context();
        ensure_same::<K>(&ctx, &coords[1].context())?;
        ensure_same::<K>(&ctx, &coords[2].context())?;
        Ok(Element { coords })
    }

    /// Caller guarantees all coordinates share one field.
    #[inline]
    pub(crate) fn raw(coords: [K; 3]) -> Self {
        Element { coords }
    }

    pub fn from_integers(coords: [i64; 3], ctx: &K::Context) -> Self {
        Element {
            coords: coords.map(|n| K::from_integer(n, ctx)),
        }
    }

    pub fn zero(ctx: &K::Context) -> Self {
        Self::from_integers([0, 0, 0], ctx)
    }

    pub fn basis(b: Basis, ctx: &K::Context) -> Self {
        let mut c = [0; 3];
        c[b.index()] = 1;
        Self::from_integers(c, ctx)
    }

    pub fn coords(&self) -> &[K; 3] {
        &self.coords
    }

    pub fn coord(&self, b: Basis) -> &K {
        &self.coords[b.index()]
    }

    pub fn into_coords(self) -> [K; 3] {
        self.coords
    }

    pub fn context(&self) -> K::Context {
        self.coords[0].context()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(K::is_zero)
    }

    pub fn scale(&self, s: &K) -> Self {
        Element {
            coords: self.coords.clone().map(|x| x * s.clone()),
        }
    }

    /// `self += s * rhs`
    #[inline]
    pub(crate) fn add_scaled(&mut self, s: &K, rhs: &Self) {
        if s.is_zero() {
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&rhs.coords) {
            if !y.is_zero() {
                *x = x.clone() + s.clone() * y.clone();
            }
        }
    }
}

impl<K: Field> Add for Element<K> {
    type Output = Element<K>;
    fn add(self, rhs: Self) -> Self {
        let [a, b, c] = self.coords;
        let [x, y, z] = rhs.coords;
        Element {
            coords: [a + x, b + y, c + z],
        }
    }
}

impl<K: Field> Sub for Element<K> {
    type Output = Element<K>;
    fn sub(self, rhs: Self) -> Self {
        let [a, b, c] = self.coords;
        let [x, y, z] = rhs.coords;
        Element {
            coords: [a - x, b - y, c - z],
        }
    }
}

impl<K: Field> Neg for Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Self {
        Element {
            coords: self.coords.map(|x| -x),
        }
    }
}

impl<K: Field> Add for &Element<K> {
    type Output = Element<K>;
    fn add(self, rhs: Self) -> Element<K> {
        self.clone() + rhs.clone()
    }
}

impl<K: Field> Sub for &Element<K> {
    type Output = Element<K>;
    fn sub(self, rhs: Self) -> Element<K> {
        self.clone() - rhs.clone()
    }
}

impl<K: Field> fmt::Display for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "({x}, {y}, {z})")
    }
}

/// Serialized as the three coordinates rendered as strings, e.g. `["1", "0", "1/2"]`.
impl<K: Field> Serialize for Element<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        for x in &self.coords {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }
}

/// True iff `{x, y}` is linearly dependent, i.e. all 2x2 minors of the
/// matrix with rows `x` and `y` vanish.
pub fn linearly_dependent<K: Field>(x: &Element<K>, y: &Element<K>) -> Result<bool, FieldError> {
    ensure_same::<K>(&x.context(), &y.context())?;
    Ok(minors_vanish(x, y))
}

#[inline]
pub(crate) fn minors_vanish<K: Field>(x: &Element<K>, y: &Element<K>) -> bool {
    let [a, b, c] = &x.coords;
    let [u, v, w] = &y.coords;
    let minor = |p: &K, q: &K, r: &K, s: &K| p.clone() * s.clone() == q.clone() * r.clone();
    minor(a, b, u, v) && minor(a, c, u, w) && minor(b, c, v, w)
}

/// All `q^3` elements over a finite field, `e`-coordinate varying fastest.
pub fn all_elements<K: Field>(ctx: &K::Context) -> Result<Vec<Element<K>>, FieldError> {
    let scalars = K::elements(ctx)?;
    let mut out = Vec::with_capacity(scalars.len().pow(3));
    for g in &scalars {
        for f in &scalars {
            for e in &scalars {
                out.push(Element {
                    coords: [e.clone(), f.clone(), g.clone()],
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Modulus, Rational};

    #[test]
    fn dependence_examples() {
        let x = Element::<Rational>::from_integers([1, 0, 0], &());
        let y = Element::<Rational>::from_integers([2, 0, 0], &());
        assert!(linearly_dependent(&x, &y).unwrap());

        let m = Modulus::new(3).unwrap();
        let x = Element::<Fp>::from_integers([1, 2, 0], &m);
        let y = Element::<Fp>::from_integers([1, 1, 0], &m);
        assert!(!linearly_dependent(&x, &y).unwrap());

        let z = Element::<Fp>::zero(&m);
        assert!(linearly_dependent(&z, &y).unwrap());
        assert!(linearly_dependent(&y, &z).unwrap());
    }

    #[test]
    fn mixed_fields_rejected() {
        let x = Fp::new(1, Modulus::new(2).unwrap());
        let y = Fp::new(1, Modulus::new(3).unwrap());
        assert!(matches!(
            Element::new(x, y, x),
            Err(FieldError::Mismatch(_, _))
        ));
        let a = Element::<Fp>::zero(&Modulus::new(2).unwrap());
        let b = Element::<Fp>::zero(&Modulus::new(3).unwrap());
        assert!(linearly_dependent(&a, &b).is_err());
    }

    #[test]
    fn enumerates_cube() {
        let m = Modulus::new(3).unwrap();
        let els = all_elements::<Fp>(&m).unwrap();
        assert_eq!(els.len(), 27);
        assert!(els[0].is_zero());
        assert_eq!(els[1], Element::basis(Basis::E, &m));
        assert_eq!(els[3], Element::basis(Basis::F, &m));
        assert_eq!(els[9], Element::basis(Basis::G, &m));
        assert!(all_elements::<Rational>(&()).is_err());
    }
}
