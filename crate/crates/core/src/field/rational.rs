use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::{Field, FieldDescriptor, FieldError};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (maintained by `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Field for Rational {
    type Context = ();

    fn context(&self) {}

    fn descriptor_of(_: &()) -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn from_integer(n: i64, _: &()) -> Self {
        Rational::integer(n)
    }

    fn from_bigint(n: &BigInt, _: &()) -> Self {
        Rational(BigRational::from_integer(n.clone()))
    }

    fn parse_literal(s: &str, _: &()) -> Result<Self, FieldError> {
        let invalid = || FieldError::InvalidLiteral {
            literal: s.to_string(),
            field: FieldDescriptor::Rational,
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| invalid())?;
        let den: BigInt = den.parse().map_err(|_| invalid())?;
        if den.is_zero() {
            return Err(invalid());
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if self.0.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn elements(_: &()) -> Result<Vec<Self>, FieldError> {
        Err(FieldError::UnsupportedField(FieldDescriptor::Rational))
    }

    fn as_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.numer().clone())
    }
}
