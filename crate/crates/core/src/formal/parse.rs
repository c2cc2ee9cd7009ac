//! Recursive-descent parser for mixed scalar/formal expressions.
//!
//! Lowercase `a b c u v w i j k` are scalars, `e f g` basis vectors, `A..F`
//! table parameters and Greek letters the shorthand polynomials. Juxtaposition
//! multiplies, `^n` raises to a power, `()` and `{}` group.

use std::collections::BTreeMap;

use num::BigInt;

use super::expand::{greek_poly, GreekName};
use super::scalar::{Indeterminate, Monomial, ScalarPoly};
use super::vector::FormalVector;
use super::word::{symbol_product, FormalWord, Symbol};
use super::FormalError;

/// Word `None` is the purely scalar part.
type Expr = BTreeMap<Option<FormalWord>, ScalarPoly>;

pub(crate) fn parse_scalar(s: &str) -> Result<ScalarPoly, FormalError> {
    let expr = Parser::new(s).parse_all()?;
    let mut out = ScalarPoly::zero();
    for (w, p) in expr {
        match w {
            None => out = &out + &p,
            Some(w) => {
                return Err(error(
                    s,
                    0,
                    format!("formal word {w} in a scalar expression"),
                ));
            }
        }
    }
    Ok(out)
}

pub(crate) fn parse_vector(s: &str) -> Result<FormalVector, FormalError> {
    let expr = Parser::new(s).parse_all()?;
    let mut out = FormalVector::zero();
    for (w, p) in expr {
        match w {
            Some(w) => out.add_term(w, p),
            None => {
                return Err(error(
                    s,
                    0,
                    format!("scalar term {p} without a formal word"),
                ))
            }
        }
    }
    Ok(out)
}

fn error(input: &str, pos: usize, message: String) -> FormalError {
    FormalError::Parse {
        input: input.to_string(),
        pos,
        message,
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser { input, pos: 0 }
    }

    fn fail(&self, message: impl Into<String>) -> FormalError {
        error(self.input, self.pos, message.into())
    }

    fn peek(&mut self) -> Option<char> {
        let rest = &self.input[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        trimmed.chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn parse_all(&mut self) -> Result<Expr, FormalError> {
        if self.peek().is_none() {
            return Err(self.fail("empty expression"));
        }
        let e = self.sum()?;
        match self.peek() {
            None => Ok(e),
            Some(c) => Err(self.fail(format!("unexpected {c:?}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr, FormalError> {
        let mut negate = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = Expr::new();
        loop {
            let t = self.product()?;
            for (w, p) in t {
                let p = if negate { -p } else { p };
                add_into(&mut acc, w, &p);
            }
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn product(&mut self) -> Result<Expr, FormalError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                }
                Some(c) if starts_atom(c) => {}
                _ => return Ok(acc),
            }
            let rhs = self.power()?;
            acc = self.multiply(&acc, &rhs)?;
        }
    }

    fn power(&mut self) -> Result<Expr, FormalError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let n = self.integer()?;
        let n: u32 = n.try_into().map_err(|_| self.fail("exponent too large"))?;
        let mut acc = scalar(ScalarPoly::one());
        for _ in 0..n {
            acc = self.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, FormalError> {
        self.peek();
        let rest = &self.input[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.fail("expected an integer"));
        }
        let n = rest[..len].parse().expect("ascii digits");
        self.pos += len;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Expr, FormalError> {
        let Some(c) = self.peek() else {
            return Err(self.fail("unexpected end of input"));
        };
        if c.is_ascii_digit() {
            let n = self.integer()?;
            return Ok(scalar(ScalarPoly::term(Monomial::ONE, n)));
        }
        if c == '(' || c == '{' {
            self.bump();
            let inner = self.sum()?;
            let close = if c == '(' { ')' } else { '}' };
            if self.bump() != Some(close) {
                return Err(self.fail(format!("expected {close:?}")));
            }
            return Ok(inner);
        }
        self.bump();
        if let Some(x) = Indeterminate::from_char(c) {
            return Ok(scalar(ScalarPoly::var(x)));
        }
        if let Some(s) = Symbol::from_char(c) {
            let mut e = Expr::new();
            e.insert(Some(FormalWord::Single(s)), ScalarPoly::one());
            return Ok(e);
        }
        if let Some(g) = GreekName::from_char(c) {
            return Ok(scalar(greek_poly(g)));
        }
        self.pos -= c.len_utf8();
        Err(self.fail(format!("unexpected {c:?}")))
    }

    fn multiply(&self, lhs: &Expr, rhs: &Expr) -> Result<Expr, FormalError> {
        let mut out = Expr::new();
        for (w1, p1) in lhs {
            for (w2, p2) in rhs {
                let p = p1 * p2;
                let (s, w) = match (w1, w2) {
                    (None, w) | (w, None) => (ScalarPoly::one(), *w),
                    (Some(FormalWord::Single(s)), Some(FormalWord::Single(t))) => {
                        let (s, w) = symbol_product(*s, *t);
                        (s, Some(w))
                    }
                    (Some(a), Some(b)) => {
                        return Err(
                            self.fail(format!("product {a}{b} has more than two formal symbols"))
                        )
                    }
                };
                add_into(&mut out, w, &(&p * &s));
            }
        }
        Ok(out)
    }
}

fn starts_atom(c: char) -> bool {
    c.is_ascii_digit()
        || c == '('
        || c == '{'
        || Indeterminate::from_char(c).is_some()
        || Symbol::from_char(c).is_some()
        || GreekName::from_char(c).is_some()
}

fn scalar(p: ScalarPoly) -> Expr {
    let mut e = Expr::new();
    add_into(&mut e, None, &p);
    e
}

fn add_into(e: &mut Expr, w: Option<FormalWord>, p: &ScalarPoly) {
    let sum = match e.get(&w) {
        Some(q) => q + p,
        None => p.clone(),
    };
    if sum.is_zero() {
        e.remove(&w);
    } else {
        e.insert(w, sum);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Param;

    fn word(s: &str) -> FormalWord {
        s.parse().unwrap()
    }

    #[test]
    fn scalar_expressions() {
        let p = parse_scalar("aw(av-bu)").unwrap();
        assert_eq!(p.to_string(), "a^2vw - abuw");
        assert_eq!(parse_scalar("i^2 j").unwrap(), parse_scalar("ij").unwrap());
        assert_eq!(parse_scalar("2*a - a - a").unwrap(), ScalarPoly::zero());
        assert_eq!(
            parse_scalar("(a+b)^2").unwrap().to_string(),
            "a^2 + 2ab + b^2"
        );
        assert_eq!(parse_scalar("-3").unwrap(), ScalarPoly::constant(-3));
        assert!(parse_scalar("aA").is_err());
    }

    #[test]
    fn formal_expressions() {
        let v = parse_vector("v^2(A^2-ijA)+vw{AB+BA-ie(D+F)}").unwrap();
        assert_eq!(v.len(), 6);
        assert_eq!(v.coefficient(&word("A^2")), parse_scalar("v^2").unwrap());
        assert_eq!(v.coefficient(&word("A")), parse_scalar("-v^2ij").unwrap());
        assert_eq!(v.coefficient(&word("eF")), parse_scalar("-vwi").unwrap());
        // basis products reduce through the table
        let r = parse_vector("ef + 2ge + ee").unwrap();
        assert_eq!(
            r.coefficient(&FormalWord::Single(Symbol::Param(Param::A))),
            ScalarPoly::one()
        );
        assert_eq!(r.coefficient(&word("E")), ScalarPoly::constant(2));
        assert_eq!(r.coefficient(&word("e")), parse_scalar("i").unwrap());
    }

    #[test]
    fn greek_letters_expand() {
        let v = parse_vector("αAB").unwrap();
        assert_eq!(
            v.coefficient(&word("AB")),
            parse_scalar("aw(av-bu)").unwrap()
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "(a", "a+", "ABC", "A^2B", "x", "a^", "{a)", "a)"] {
            assert!(parse_vector(bad).is_err(), "{bad}");
        }
        assert!(parse_vector("a").is_err());
        match parse_vector("aA + x") {
            Err(FormalError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
    }
}
