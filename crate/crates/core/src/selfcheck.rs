//! Consistency suite for the symbolic expansion against the reference values
//! in [`crate::formal::reference`].

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{CurledTable, CurledType, Element};
use crate::conditions::TheoremDecider;
use crate::field::{Field, Fp, Modulus};
use crate::formal::reference::{
    Case, CASES, GREEK_IDENTITIES, GREEK_MIXED_PARTS, GREEK_PARAM_PART, LEDGER, RECOMBINED,
};
use crate::formal::{
    difference_expansion, greek_poly, product_of_squares, square_of_product, CompiledVector,
    FormalVector, FormalWord, GreekName, Indeterminate, ScalarPoly, Symbol,
};
use crate::oracle::{enumerate_tables, table_count};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: u64,
    pub total: u64,
    /// First disagreement, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: 0,
            total: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}/{}", self.name, self.passed, self.total)?;
        if let Some(msg) = &self.failure {
            write!(f, "\n     {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }
}

fn scalar(s: &str) -> ScalarPoly {
    ScalarPoly::parse(s).expect("reference polynomial parses")
}

fn vector(s: &str) -> FormalVector {
    FormalVector::parse(s).expect("reference expression parses")
}

fn differs(what: &str, expected: &dyn fmt::Display, computed: &dyn fmt::Display) -> String {
    format!("{what}: expected {expected}, computed {computed}")
}

/// The three ledger columns against the independent expansion, plus the
/// internal column arithmetic and the support of the expansions.
pub fn check_ledger() -> Vec<Check> {
    let computed = [
        square_of_product(),
        product_of_squares(),
        difference_expansion(),
    ];
    let names = ["ledger (xy)^2", "ledger x^2y^2", "ledger difference"];
    let mut columns: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
    let mut internal = Check::new("ledger columns subtract");
    let mut support = Check::new("expansion support within ledger");
    let mut rows = BTreeMap::new();
    for (word, xy2, x2y2, diff) in LEDGER {
        let w: FormalWord = word.parse().expect("ledger word parses");
        rows.insert(w, ());
        let listed = [scalar(xy2), scalar(x2y2), scalar(diff)];
        for ((check, listed), vec) in columns.iter_mut().zip(&listed).zip(&computed) {
            let got = vec.coefficient(&w);
            check.record(got == *listed, || {
                differs(&format!("row {word}"), listed, &got)
            });
        }
        let sub = &listed[0] - &listed[1];
        internal.record(sub == listed[2], || {
            differs(&format!("row {word}"), &listed[2], &sub)
        });
    }
    for vec in &computed {
        for (w, p) in vec.terms() {
            support.record(rows.contains_key(w), || {
                format!("{w} : {p} has no ledger row")
            });
        }
    }
    support.record(rows.len() == FormalWord::all().len(), || {
        format!("{} distinct ledger rows", rows.len())
    });
    columns.push(internal);
    columns.push(support);
    columns
}

pub fn check_greek_identities() -> Check {
    let mut c = Check::new("greek identities");
    for (lhs, rhs) in GREEK_IDENTITIES {
        let (l, r) = (scalar(lhs), scalar(rhs));
        c.record(l == r, || differs(&format!("{lhs} = {rhs}"), &r, &l));
    }
    c
}

/// Which grouped part of the difference a word belongs to: 1 for single
/// parameters, 2 for basis-parameter, 3 for parameter-basis, 4 for squares
/// of parameters, 5 for other parameter pairs; 0 for single basis vectors.
pub fn part_of(w: &FormalWord) -> usize {
    use Symbol::{Basis as B, Param as P};
    match w {
        FormalWord::Single(B(_)) => 0,
        FormalWord::Single(P(_)) => 1,
        FormalWord::Pair(B(_), _) => 2,
        FormalWord::Pair(_, B(_)) => 3,
        FormalWord::Pair(s, t) if s == t => 4,
        FormalWord::Pair(..) => 5,
    }
}

fn bindings(case: &Case) -> BTreeMap<Indeterminate, i64> {
    case.bindings
        .iter()
        .map(|&(c, v)| (Indeterminate::from_char(c).expect("coordinate name"), v))
        .collect()
}

pub fn check_cases() -> Vec<Check> {
    let diff = difference_expansion();
    let mut greek = Check::new("specialization greek values");
    let mut parts = Check::new("specialization grouped parts");
    let mut regroup = Check::new("specialization regrouping");
    let mut relations = Check::new("specialization relations");
    for case in &CASES {
        let b = bindings(case);
        let label = case.label;
        for g in GreekName::ALL {
            let expected = if case.nonzero_greek.contains(&g.name()) {
                scalar(case.greek_value)
            } else {
                ScalarPoly::zero()
            };
            let got = greek_poly(g).substitute(&b);
            greek.record(got == expected, || {
                differs(&format!("case ({label}) {}", g.name()), &expected, &got)
            });
        }
        let spec = diff.specialize(&b);
        for (n, text) in case.parts.iter().enumerate() {
            let expected = vector(text);
            let got = spec.filter(|w| part_of(w) == n + 1);
            parts.record(got == expected, || {
                differs(&format!("case ({label}) part {}", n + 1), &expected, &got)
            });
        }
        let expected = vector(case.regrouped);
        regroup.record(spec == expected, || {
            differs(&format!("case ({label})"), &expected, &spec)
        });
        let groups: Vec<FormalVector> = spec.group_by_coordinates().into_values().collect();
        for (lhs, rhs) in case.relations {
            let rel = &vector(lhs) - &vector(rhs);
            let found = groups.iter().any(|g| *g == rel || *g == -&rel);
            relations.record(found, || {
                format!("case ({label}) relation {lhs} = {rhs} is not a monomial group")
            });
        }
        relations.record(groups.len() == case.relations.len(), || {
            format!("case ({label}) has {} monomial groups", groups.len())
        });
    }
    vec![greek, parts, regroup, relations]
}

pub fn check_greek_rewrite() -> Check {
    let diff = difference_expansion();
    let mut c = Check::new("greek rewrite");
    let targets = [
        (GREEK_PARAM_PART, 5),
        (GREEK_MIXED_PARTS[0], 2),
        (GREEK_MIXED_PARTS[1], 3),
    ];
    for (text, part) in targets {
        let expected = vector(text);
        let got = diff.filter(|w| part_of(w) == part);
        c.record(got == expected, || {
            differs(&format!("part {part}"), &expected, &got)
        });
    }
    c
}

/// The closed form of the difference valid on tables satisfying the
/// eighteen relations.
pub fn recombined_difference() -> FormalVector {
    let text: Vec<String> = RECOMBINED
        .iter()
        .map(|(g, expr)| {
            let g = GreekName::from_name(g).expect("greek name");
            format!("{}({expr})", g.symbol())
        })
        .collect();
    vector(&text.join("+"))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RecombinationStats {
    pub tables_examined: u64,
    pub tables_satisfying: u64,
    pub assignments: u64,
    pub polynomial_mismatches: u64,
    pub pointwise_mismatches: u64,
}

/// Over GF(2), for every table of the given types on which the eighteen
/// relations hold, compares the difference with the recombined form both as
/// polynomials and at all 64 coordinate assignments.
pub fn recombination_gf2(types: &[CurledType]) -> RecombinationStats {
    let m = Modulus::new(2).expect("2 is prime");
    let lhs = difference_expansion();
    let rhs = recombined_difference();
    let points: Vec<[Fp; 6]> = (0u32..64)
        .map(|n| std::array::from_fn(|b| Fp::new(i64::from((n >> b) & 1), m)))
        .collect();
    let per_type: Vec<RecombinationStats> = types
        .par_iter()
        .map(|&ty| {
            let only10 = TheoremDecider::<Fp>::condition_10(ty, &m);
            let lhs = CompiledVector::<Fp>::new(&lhs, ty, &m);
            let rhs = CompiledVector::<Fp>::new(&rhs, ty, &m);
            let mut s = RecombinationStats::default();
            enumerate_tables(m, ty, |_, table| {
                s.tables_examined += 1;
                if !only10.holds(table) {
                    return;
                }
                s.tables_satisfying += 1;
                let (pl, pr) = (lhs.to_polynomials(table), rhs.to_polynomials(table));
                s.polynomial_mismatches += u64::from(pl != pr);
                for p in &points {
                    s.assignments += 1;
                    let at = |c: &CompiledVector<Fp>| evaluate_at(c, table, p);
                    s.pointwise_mismatches += u64::from(at(&lhs) != at(&rhs));
                }
            })
            .expect("GF(2) enumeration");
            s
        })
        .collect();
    per_type
        .into_iter()
        .fold(RecombinationStats::default(), |a, b| RecombinationStats {
            tables_examined: a.tables_examined + b.tables_examined,
            tables_satisfying: a.tables_satisfying + b.tables_satisfying,
            assignments: a.assignments + b.assignments,
            polynomial_mismatches: a.polynomial_mismatches + b.polynomial_mismatches,
            pointwise_mismatches: a.pointwise_mismatches + b.pointwise_mismatches,
        })
}

fn evaluate_at<K: Field>(
    c: &CompiledVector<K>,
    table: &CurledTable<K>,
    point: &[K; 6],
) -> Element<K> {
    let ctx = table.context();
    let mut out = Element::zero(ctx);
    for (m, el) in c.monomials().iter().zip(c.coefficients(table)) {
        let mut s = K::one(ctx);
        for (x, e) in point.iter().zip(m) {
            for _ in 0..*e {
                s = s * x.clone();
            }
        }
        out.add_scaled(&s, &el);
    }
    out
}

pub fn check_recombination(types: &[CurledType]) -> Check {
    let s = recombination_gf2(types);
    let mut c = Check::new("recombination over GF(2)");
    c.total = s.tables_satisfying;
    c.passed = s
        .tables_satisfying
        .saturating_sub(s.polynomial_mismatches.max(s.pointwise_mismatches));
    if !c.ok() {
        c.failure = Some(format!(
            "{} polynomial and {} pointwise mismatches",
            s.polynomial_mismatches, s.pointwise_mismatches
        ));
    }
    c
}

/// Every check; the GF(2) recombination sweep is included when
/// `recombination` is set.
pub fn run(recombination: bool) -> Report {
    let mut checks = check_ledger();
    checks.push(check_greek_identities());
    checks.extend(check_cases());
    checks.push(check_greek_rewrite());
    if recombination {
        let types: Vec<_> = CurledType::all().collect();
        checks.push(check_recombination(&types));
    }
    Report { checks }
}

/// Number of GF(2) tables per type, for progress messages.
pub fn gf2_tables_per_type() -> u64 {
    table_count(2).expect("fits")
}
