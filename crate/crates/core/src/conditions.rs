//! Element-level criteria on a curled table: the eighteen relations forced by
//! endo-commutativity, the three closing relations, and the zeropotency test.
//!
//! Every equation is data: two formal expressions over `e, f, g, A..F` with
//! type-bit multipliers, evaluated through the table product.

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{CurledTable, CurledType, Element, Param};
use crate::field::Field;
use crate::formal::{CompiledVector, FormalVector};

/// `lhs = rhs`, juxtaposition meaning the table product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Equation {
    pub label: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn eq(label: &'static str, lhs: &'static str, rhs: &'static str) -> Equation {
    Equation { label, lhs, rhs }
}

pub const CONDITION_10: [Equation; 18] = [
    eq("10-1", "A^2", "ijA"),
    eq("10-2", "B^2", "ikB"),
    eq("10-3", "C^2", "ijC"),
    eq("10-4", "D^2", "jkD"),
    eq("10-5", "E^2", "ikE"),
    eq("10-6", "F^2", "jkF"),
    eq("10-7", "AB+BA", "ie(D+F)"),
    eq("10-8", "CE+EC", "i(D+F)e"),
    eq("10-9", "CD+DC", "jf(B+E)"),
    eq("10-10", "AF+FA", "j(B+E)f"),
    eq("10-11", "EF+FE", "kg(A+C)"),
    eq("10-12", "BD+DB", "k(A+C)g"),
    eq("10-13", "iAe", "ieC"),
    eq("10-14", "iBe", "ieE"),
    eq("10-15", "jCf", "jfA"),
    eq("10-16", "jDf", "jfF"),
    eq("10-17", "kEg", "kgB"),
    eq("10-18", "kFg", "kgD"),
];

pub const CONDITION_17: [Equation; 3] = [
    eq("17-1", "BC+BA+EC-AE", "i(eF+Fe)"),
    eq("17-2", "DA+FA+DC-CF", "j(Ef+fE)"),
    eq("17-3", "DB+FB+FE-ED", "k(Cg+gC)"),
];

fn parsed() -> &'static [(Equation, FormalVector, FormalVector); 21] {
    static CACHE: OnceLock<[(Equation, FormalVector, FormalVector); 21]> = OnceLock::new();
    CACHE.get_or_init(|| {
        let all: Vec<_> = CONDITION_10.iter().chain(&CONDITION_17).collect();
        std::array::from_fn(|n| {
            let e = *all[n];
            let side = |s| FormalVector::parse(s).expect("built-in equation parses");
            (e, side(e.lhs), side(e.rhs))
        })
    })
}

/// The two unequal sides of a failing equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Witness<K: Field> {
    pub lhs: Element<K>,
    pub rhs: Element<K>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Verdict<K: Field> {
    pub label: &'static str,
    pub equation: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness<K>>,
}

impl<K: Field> Verdict<K> {
    fn compare(label: &'static str, equation: String, lhs: Element<K>, rhs: Element<K>) -> Self {
        let holds = lhs == rhs;
        Verdict {
            label,
            equation,
            holds,
            witness: (!holds).then_some(Witness { lhs, rhs }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct ConditionReport<K: Field> {
    pub cond10: Vec<Verdict<K>>,
    pub cond17: Vec<Verdict<K>>,
    pub zeropotent18: Vec<Verdict<K>>,
}

impl<K: Field> ConditionReport<K> {
    pub fn new(table: &CurledTable<K>) -> Self {
        ConditionReport {
            cond10: check_condition_10(table),
            cond17: check_condition_17(table),
            zeropotent18: check_zeropotency(table),
        }
    }

    /// All twenty-one equations of the endo-commutativity criterion hold.
    pub fn theorem_holds(&self) -> bool {
        self.cond10.iter().chain(&self.cond17).all(|v| v.holds)
    }

    pub fn zeropotent(&self) -> bool {
        self.zeropotent18.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict<K>> {
        self.cond10
            .iter()
            .chain(&self.cond17)
            .chain(&self.zeropotent18)
            .filter(|v| !v.holds)
    }
}

fn evaluate<K: Field>(v: &FormalVector, table: &CurledTable<K>) -> Element<K> {
    CompiledVector::new(v, table.ty(), table.context())
        .coefficients(table)
        .pop()
        .unwrap_or_else(|| Element::zero(table.context()))
}

fn check<K: Field>(table: &CurledTable<K>, range: std::ops::Range<usize>) -> Vec<Verdict<K>> {
    parsed()[range]
        .iter()
        .map(|(e, lhs, rhs)| {
            Verdict::compare(
                e.label,
                format!("{} = {}", e.lhs, e.rhs),
                evaluate(lhs, table),
                evaluate(rhs, table),
            )
        })
        .collect()
}

pub fn check_condition_10<K: Field>(table: &CurledTable<K>) -> Vec<Verdict<K>> {
    check(table, 0..18)
}

pub fn check_condition_17<K: Field>(table: &CurledTable<K>) -> Vec<Verdict<K>> {
    check(table, 18..21)
}

/// `i = j = k = 0` (witness: the type bits as an element against zero),
/// `A + C = 0`, `B + E = 0`, `D + F = 0`.
pub fn check_zeropotency<K: Field>(table: &CurledTable<K>) -> Vec<Verdict<K>> {
    let ctx = table.context();
    let zero = Element::zero(ctx);
    let bits = Element::from_integers(table.ty().bits().map(i64::from), ctx);
    let mut out = vec![Verdict::compare(
        "18-1",
        "i = j = k = 0".into(),
        bits,
        zero.clone(),
    )];
    for (label, p, q) in [
        ("18-2", Param::A, Param::C),
        ("18-3", Param::B, Param::E),
        ("18-4", Param::D, Param::F),
    ] {
        let sum = table.param(p) + table.param(q);
        out.push(Verdict::compare(
            label,
            format!("{}+{} = 0", p.name(), q.name()),
            sum,
            zero.clone(),
        ));
    }
    out
}

pub fn is_ec_by_theorem<K: Field>(table: &CurledTable<K>) -> bool {
    TheoremDecider::new(table.ty(), table.context()).holds(table)
}

pub fn is_zeropotent_by_condition<K: Field>(table: &CurledTable<K>) -> bool {
    table.ty().is_zero()
        && [
            (Param::A, Param::C),
            (Param::B, Param::E),
            (Param::D, Param::F),
        ]
        .iter()
        .all(|(p, q)| (table.param(*p) + table.param(*q)).is_zero())
}

/// The twenty-one equations compiled for one type and field, for deciding
/// many tables. Stops at the first failing equation.
#[derive(Debug, Clone)]
pub struct TheoremDecider<K: Field> {
    ty: CurledType,
    equations: Vec<(&'static str, CompiledVector<K>)>,
}

impl<K: Field> TheoremDecider<K> {
    pub fn new(ty: CurledType, ctx: &K::Context) -> Self {
        Self::compile(&parsed()[..], ty, ctx)
    }

    /// Only the eighteen relations of the first family.
    pub fn condition_10(ty: CurledType, ctx: &K::Context) -> Self {
        Self::compile(&parsed()[..CONDITION_10.len()], ty, ctx)
    }

    fn compile(
        eqs: &[(Equation, FormalVector, FormalVector)],
        ty: CurledType,
        ctx: &K::Context,
    ) -> Self {
        let equations = eqs
            .iter()
            .map(|(e, lhs, rhs)| (e.label, CompiledVector::new(&(lhs - rhs), ty, ctx)))
            .collect();
        TheoremDecider { ty, equations }
    }

    pub fn ty(&self) -> CurledType {
        self.ty
    }

    pub fn holds(&self, table: &CurledTable<K>) -> bool {
        self.first_failure(table).is_none()
    }

    /// Label of the first equation that fails on `table`.
    pub fn first_failure(&self, table: &CurledTable<K>) -> Option<&'static str> {
        debug_assert_eq!(table.ty(), self.ty);
        self.equations
            .iter()
            .find(|(_, v)| !v.vanishes(table))
            .map(|(label, _)| *label)
    }
}
