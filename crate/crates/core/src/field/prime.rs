use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, ToPrimitive};

use super::{Field, FieldDescriptor, FieldError, MAX_MODULUS};

/// A verified prime below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Modulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo a prime, stored as `0 <= value < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: Modulus,
}

impl Fp {
    pub fn new(n: i64, modulus: Modulus) -> Self {
        Self::from_integer(n, &modulus)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    #[inline]
    fn check(self, rhs: Self) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "arithmetic between different prime fields"
        );
    }

    fn pow(self, mut e: u64) -> Self {
        let p = self.modulus.0 as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp {
            value: acc as u32,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let p = self.modulus.0;
        // both operands are below 2^31, so the sum fits in u32
        let s = self.value + rhs.value;
        Fp {
            value: if s >= p { s - p } else { s },
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let p = self.modulus.0;
        Fp {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.value + p - rhs.value
            },
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let p = self.modulus.0 as u64;
        Fp {
            value: ((self.value as u64 * rhs.value as u64) % p) as u32,
            modulus: self.modulus,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.modulus.0 - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl Field for Fp {
    type Context = Modulus;

    #[inline]
    fn context(&self) -> Modulus {
        self.modulus
    }

    fn descriptor_of(ctx: &Modulus) -> FieldDescriptor {
        FieldDescriptor::Prime(*ctx)
    }

    #[inline]
    fn from_integer(n: i64, ctx: &Modulus) -> Self {
        Fp {
            value: n.rem_euclid(ctx.0 as i64) as u32,
            modulus: *ctx,
        }
    }

    fn from_bigint(n: &BigInt, ctx: &Modulus) -> Self {
        let r = n.mod_floor(&BigInt::from(ctx.0));
        Fp {
            value: r.to_u32().expect("residue below modulus"),
            modulus: *ctx,
        }
    }

    fn parse_literal(s: &str, ctx: &Modulus) -> Result<Self, FieldError> {
        s.trim()
            .parse::<BigInt>()
            .map(|n| Self::from_bigint(&n, ctx))
            .map_err(|_| FieldError::InvalidLiteral {
                literal: s.to_string(),
                field: FieldDescriptor::Prime(*ctx),
            })
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // Fermat: x^(p-2) = x^(-1)
        Ok(self.pow(self.modulus.0 as u64 - 2))
    }

    fn elements(ctx: &Modulus) -> Result<Vec<Self>, FieldError> {
        Ok((0..ctx.0)
            .map(|value| Fp {
                value,
                modulus: *ctx,
            })
            .collect())
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(BigInt::from(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    #[test]
    fn from_integer_reduces() {
        assert_eq!(Fp::new(5, gf(3)).value(), 2);
        assert_eq!(Fp::new(-1, gf(2)).value(), 1);
        assert_eq!(Fp::new(-7, gf(5)).value(), 3);
        assert_eq!(Fp::new(i64::MIN, gf(2)).value(), 0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Fp::new(4, gf(5)).inverse().unwrap(), Fp::new(4, gf(5)));
        assert_eq!(Fp::new(1, gf(2)).inverse().unwrap(), Fp::new(1, gf(2)));
        assert_eq!(Fp::new(0, gf(2)).inverse(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn inverse_large_prime() {
        let m = gf(2_147_483_647);
        let x = Fp::new(123_456_789, m);
        assert!((x * x.inverse().unwrap()).is_one());
    }

    #[test]
    fn enumeration_order() {
        let els: Vec<u32> = Fp::elements(&gf(3))
            .unwrap()
            .iter()
            .map(|x| x.value())
            .collect();
        assert_eq!(els, vec![0, 1, 2]);
        assert_eq!(Fp::elements(&gf(2)).unwrap().len(), 2);
    }

    #[test]
    fn literals() {
        let m = gf(7);
        assert_eq!(Fp::parse_literal("-1", &m).unwrap().value(), 6);
        assert_eq!(
            Fp::parse_literal("100000000000000000000000", &m).unwrap(),
            Fp::from_bigint(&"100000000000000000000000".parse().unwrap(), &m)
        );
        assert!(Fp::parse_literal("1/2", &m).is_err());
        assert!(Fp::parse_literal("x", &m).is_err());
    }

    #[test]
    #[should_panic(expected = "different prime fields")]
    fn mixing_fields_panics() {
        let _ = Fp::new(1, gf(2)) + Fp::new(1, gf(3));
    }
}
