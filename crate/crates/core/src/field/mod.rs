//! Exact scalar fields: prime fields GF(p) and the rationals.
//!
//! Scalars are generic over the [`Field`] trait so that the enumeration code
//! is monomorphized for the fast `u32` representation of [`Fp`], while the
//! rationals go through arbitrary-precision integers. A [`FieldDescriptor`]
//! names a field at runtime (file formats, reports, CLI dispatch).

mod prime;
mod rational;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;
use thiserror::Error;

pub use prime::{Fp, Modulus};
pub use rational::Rational;

/// Largest supported prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (must be below 2^31)")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a finite field, got {0}")]
    UnsupportedField(FieldDescriptor),
    #[error("field mismatch: {0} vs {1}")]
    Mismatch(FieldDescriptor, FieldDescriptor),
    #[error("invalid scalar literal {literal:?} for {field}")]
    InvalidLiteral {
        literal: String,
        field: FieldDescriptor,
    },
}

/// Runtime name of a supported field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Prime(Modulus),
    Rational,
}

impl FieldDescriptor {
    /// GF(p), checking that `p` is a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Modulus::new(p).map(FieldDescriptor::Prime)
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Prime(m) => Some(m.get() as u64),
            FieldDescriptor::Rational => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime(m) => write!(f, "GF({})", m.get()),
            FieldDescriptor::Rational => f.write_str("Q"),
        }
    }
}

/// Serialized as its display name, `"GF(p)"` or `"Q"`.
impl serde::Serialize for FieldDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element of an exact field.
///
/// Every element knows its field through [`Field::context`]; binary operators
/// panic when the two operands live in different fields. Code that accepts
/// elements from the outside checks contexts first and reports
/// [`FieldError::Mismatch`].
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Data needed to build elements of the field (the modulus for GF(p)).
    type Context: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn context(&self) -> Self::Context;

    fn descriptor_of(ctx: &Self::Context) -> FieldDescriptor;

    /// Image of `n` under the canonical ring map from the integers.
    fn from_integer(n: i64, ctx: &Self::Context) -> Self;

    fn from_bigint(n: &BigInt, ctx: &Self::Context) -> Self;

    /// Parses a scalar literal: integers for every field, `num/den` for the rationals.
    fn parse_literal(s: &str, ctx: &Self::Context) -> Result<Self, FieldError>;

    fn is_zero(&self) -> bool;

    fn inverse(&self) -> Result<Self, FieldError>;

    /// All elements in a fixed order starting at zero; finite fields only.
    fn elements(ctx: &Self::Context) -> Result<Vec<Self>, FieldError>;

    /// The element as an integer when it is one (residue for GF(p)).
    fn as_integer(&self) -> Option<BigInt>;

    fn descriptor(&self) -> FieldDescriptor {
        Self::descriptor_of(&self.context())
    }

    fn zero(ctx: &Self::Context) -> Self {
        Self::from_integer(0, ctx)
    }

    fn one(ctx: &Self::Context) -> Self {
        Self::from_integer(1, ctx)
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.context())
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * rhs.inverse()?)
    }
}

/// Checks that two contexts agree.
pub fn ensure_same<K: Field>(a: &K::Context, b: &K::Context) -> Result<(), FieldError> {
    if a == b {
        Ok(())
    } else {
        Err(FieldError::Mismatch(
            K::descriptor_of(a),
            K::descriptor_of(b),
        ))
    }
}

/// The elements of a finite field in enumeration order.
pub fn enumerate_field<K: Field>(ctx: &K::Context) -> Result<Vec<K>, FieldError> {
    K::elements(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_display() {
        assert_eq!(FieldDescriptor::prime(7).unwrap().to_string(), "GF(7)");
        assert_eq!(FieldDescriptor::Rational.to_string(), "Q");
    }

    #[test]
    fn descriptor_rejects_composites() {
        assert_eq!(FieldDescriptor::prime(4), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldDescriptor::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldDescriptor::prime(0), Err(FieldError::NotPrime(0)));
        assert!(matches!(
            FieldDescriptor::prime(1 << 31),
            Err(FieldError::ModulusTooLarge(_))
        ));
        assert!(FieldDescriptor::prime(2_147_483_647).is_ok());
    }

    #[test]
    fn order() {
        assert_eq!(FieldDescriptor::prime(5).unwrap().order(), Some(5));
        assert_eq!(FieldDescriptor::Rational.order(), None);
    }
}
