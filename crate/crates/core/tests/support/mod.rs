//! Strategies and property checks shared by the property and acceptance
//! targets.
#![allow(dead_code)]

use std::collections::BTreeMap;

use curled_algebra::algebra::{
    linearly_dependent, CurledTable, CurledType, Element, Matrix3, Param,
};
use curled_algebra::cli::{AlgebraFile, LoadedTable};
use curled_algebra::conditions::ConditionReport;
use curled_algebra::field::{Field, Fp, Modulus, Rational};
use curled_algebra::formal::{
    difference_expansion, eval_formal, FormalVector, FormalWord, Indeterminate, Monomial,
    ScalarPoly,
};
use num::BigInt;
use proptest::prelude::*;

pub fn gf(p: u64) -> Modulus {
    Modulus::new(p).unwrap()
}

pub fn fp(m: Modulus) -> impl Strategy<Value = Fp> + Clone {
    (0..i64::from(m.get())).prop_map(move |v| Fp::new(v, m))
}

pub fn rational() -> impl Strategy<Value = Rational> + Clone {
    (-60i64..60, 1i64..25)
        .prop_map(|(n, d)| Rational::parse_literal(&format!("{n}/{d}"), &()).unwrap())
}

pub fn element<K: Field>(
    s: impl Strategy<Value = K> + Clone,
) -> impl Strategy<Value = Element<K>> + Clone {
    (s.clone(), s.clone(), s).prop_map(|(a, b, c)| Element::new(a, b, c).unwrap())
}

pub fn curled_type() -> impl Strategy<Value = CurledType> + Clone {
    (0u8..8).prop_map(|n| CurledType::new(n & 1, (n >> 1) & 1, n >> 2).unwrap())
}

pub fn table<K: Field>(
    s: impl Strategy<Value = K> + Clone,
) -> impl Strategy<Value = CurledTable<K>> + Clone {
    let e = element(s);
    (
        curled_type(),
        [e.clone(), e.clone(), e.clone(), e.clone(), e.clone(), e],
    )
        .prop_map(|(ty, params)| CurledTable::new(ty, params).unwrap())
}

pub fn invertible(m: Modulus) -> impl Strategy<Value = Matrix3<Fp>> {
    let row = || [fp(m), fp(m), fp(m)];
    [row(), row(), row()]
        .prop_map(|rows| Matrix3::new(rows).unwrap())
        .prop_filter("singular", |a| !a.determinant().is_zero())
}

pub fn field_axioms<K: Field>(a: K, b: K, c: K) -> Result<(), TestCaseError> {
    let ctx = a.context();
    prop_assert_eq!(
        (a.clone() + b.clone()) + c.clone(),
        a.clone() + (b.clone() + c.clone())
    );
    prop_assert_eq!(
        (a.clone() * b.clone()) * c.clone(),
        a.clone() * (b.clone() * c.clone())
    );
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    prop_assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    prop_assert_eq!(a.clone() + K::zero(&ctx), a.clone());
    prop_assert_eq!(a.clone() * K::one(&ctx), a.clone());
    prop_assert!((a.clone() + (-a.clone())).is_zero());
    prop_assert_eq!(a.clone() - b.clone(), a.clone() + (-b.clone()));
    match a.inverse() {
        Ok(inv) => prop_assert!((a * inv).is_one()),
        Err(_) => prop_assert!(a.is_zero()),
    }
    Ok(())
}

pub fn bilinear<K: Field>(
    t: &CurledTable<K>,
    alpha: &K,
    x: &Element<K>,
    x1: &Element<K>,
    y: &Element<K>,
    y1: &Element<K>,
) -> Result<(), TestCaseError> {
    let p = |u: &Element<K>, v: &Element<K>| t.product(u, v).unwrap();
    let left = &x.scale(alpha) + x1;
    prop_assert_eq!(p(&left, y), &p(x, y).scale(alpha) + &p(x1, y));
    let right = &y.scale(alpha) + y1;
    prop_assert_eq!(p(x, &right), &p(x, y).scale(alpha) + &p(x, y1));
    Ok(())
}

/// `a^2 ie + b^2 jf + c^2 kg + ab(A+C) + ac(B+E) + bc(D+F)`.
pub fn closed_form_square<K: Field>(t: &CurledTable<K>, x: &Element<K>) -> Element<K> {
    let [a, b, c] = x.coords().clone();
    let ctx = a.context();
    let bits = t.ty().bits().map(|b| K::from_integer(i64::from(b), &ctx));
    let diag = Element::new(
        a.clone() * a.clone() * bits[0].clone(),
        b.clone() * b.clone() * bits[1].clone(),
        c.clone() * c.clone() * bits[2].clone(),
    )
    .unwrap();
    let pair = |p: Param, q: Param| t.param(p) + t.param(q);
    let mut out = diag;
    out = &out + &pair(Param::A, Param::C).scale(&(a.clone() * b.clone()));
    out = &out + &pair(Param::B, Param::E).scale(&(a * c.clone()));
    &out + &pair(Param::D, Param::F).scale(&(b * c))
}

pub fn scalars<K: Field>(x: &Element<K>, y: &Element<K>) -> BTreeMap<Indeterminate, K> {
    Indeterminate::COORDINATES
        .into_iter()
        .zip(x.coords().iter().chain(y.coords()).cloned())
        .collect()
}

pub fn consistent<K: Field>(
    t: &CurledTable<K>,
    x: &Element<K>,
    y: &Element<K>,
) -> Result<(), TestCaseError> {
    let got = eval_formal(&difference_expansion(), t, &scalars(x, y)).unwrap();
    let xy = t.product(x, y).unwrap();
    let expected = &t.square(&xy).unwrap()
        - &t.product(&t.square(x).unwrap(), &t.square(y).unwrap())
            .unwrap();
    prop_assert_eq!(got, expected);
    Ok(())
}

pub fn witnesses_reproduce<K: Field>(t: &CurledTable<K>) -> Result<(), TestCaseError> {
    let report = ConditionReport::new(t);
    for v in report
        .cond10
        .iter()
        .chain(&report.cond17)
        .chain(&report.zeropotent18)
    {
        prop_assert_eq!(v.holds, v.witness.is_none());
        if let Some(w) = &v.witness {
            prop_assert_ne!(&w.lhs, &w.rhs);
        }
    }
    for v in report.cond10.iter().chain(&report.cond17) {
        let (lhs, rhs) = v.equation.split_once(" = ").unwrap();
        let eval =
            |s: &str| eval_formal(&FormalVector::parse(s).unwrap(), t, &BTreeMap::new()).unwrap();
        if let Some(w) = &v.witness {
            prop_assert_eq!(&eval(lhs), &w.lhs);
            prop_assert_eq!(&eval(rhs), &w.rhs);
        } else {
            prop_assert_eq!(eval(lhs), eval(rhs));
        }
    }
    Ok(())
}

pub fn scalar_poly() -> impl Strategy<Value = ScalarPoly> {
    proptest::collection::vec((proptest::array::uniform9(0u8..4), -6i64..6), 0..8).prop_map(
        |terms| {
            let mut p = ScalarPoly::zero();
            for (e, c) in terms {
                p.add_term(Monomial::new(e), BigInt::from(c));
            }
            p
        },
    )
}

pub fn formal_vector() -> impl Strategy<Value = FormalVector> {
    let term = (0usize..81, proptest::array::uniform9(0u8..3), -4i64..4);
    proptest::collection::vec(term, 0..10).prop_map(|terms| {
        let words = FormalWord::all();
        let mut v = FormalVector::zero();
        for (w, e, c) in terms {
            v.add_term(
                words[w],
                ScalarPoly::term(Monomial::new(e), BigInt::from(c)),
            );
        }
        v
    })
}

pub fn algebra_file_round_trip<K: Field>(t: CurledTable<K>) -> Result<(), TestCaseError> {
    let f = AlgebraFile::from_table(&t);
    let again = AlgebraFile::from_json(&f.to_json()).unwrap();
    prop_assert_eq!(&again, &f);
    let back = match again.load().unwrap() {
        LoadedTable::Prime(p) => AlgebraFile::from_table(&p),
        LoadedTable::Rational(q) => AlgebraFile::from_table(&q),
    };
    prop_assert_eq!(back, f);
    Ok(())
}

/// `linearly_dependent(x, y)` against a search for a scalar multiple.
pub fn dependence_by_scalars<K: Field>(
    x: &Element<K>,
    y: &Element<K>,
) -> Result<(), TestCaseError> {
    let scalars = K::elements(&x.context()).unwrap();
    let multiple = |u: &Element<K>, v: &Element<K>| scalars.iter().any(|s| u.scale(s) == *v);
    let expected = x.is_zero() || y.is_zero() || multiple(x, y) || multiple(y, x);
    prop_assert_eq!(linearly_dependent(x, y).unwrap(), expected);
    Ok(())
}
