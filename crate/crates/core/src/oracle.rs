//! Ground-truth deciders and the differential harness that runs them side by
//! side over enumerated or sampled tables.

use std::ops::{AddAssign, Range};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{all_elements, minors_vanish, CurledTable, CurledType, Element};
use crate::conditions::{is_zeropotent_by_condition, TheoremDecider};
use crate::field::{Field, FieldDescriptor, FieldError, Fp, Modulus};
use crate::formal::{difference_expansion, CompiledVector};

/// Default cap on the number of tables an exhaustive run may visit:
/// all eight types over GF(2).
pub const DEFAULT_BUDGET: u64 = 8 << 18;
pub const BUDGET_ENV: &str = "CAL_BUDGET_TABLES";
pub const DEFAULT_MISMATCH_CAP: usize = 100;
/// Name of the sampling algorithm recorded in reports.
pub const SAMPLER: &str = "chacha8-rejection-v1";

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{q}^18 tables overflow a 64-bit index")]
    Overflow { q: u64 },
    #[error("exhaustive run needs {needed} tables, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("index {index} out of range for {count} tables")]
    IndexOutOfRange { index: u64, count: u64 },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// Budget from `CAL_BUDGET_TABLES`, or the default. Unparseable values fall
/// back to the default.
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// `q^18`, the number of tables of one type over GF(q).
pub fn table_count(q: u64) -> Result<u64, OracleError> {
    q.checked_pow(18).ok_or(OracleError::Overflow { q })
}

/// A table named by its position in the enumeration of one type: the 18
/// coordinates `A_e, A_f, A_g, B_e, ..., F_g` are the base-`q` digits of
/// `index`, least significant first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TableId {
    pub field: FieldDescriptor,
    #[serde(rename = "type")]
    pub ty: CurledType,
    pub index: u64,
}

impl TableId {
    pub fn encode(table: &CurledTable<Fp>) -> TableId {
        let m = *table.context();
        let q = m.get() as u64;
        let index = table
            .params()
            .iter()
            .flat_map(|p| p.coords())
            .rev()
            .fold(0u64, |acc, x| acc * q + x.value() as u64);
        TableId {
            field: FieldDescriptor::Prime(m),
            ty: table.ty(),
            index,
        }
    }

    pub fn decode(&self) -> Result<CurledTable<Fp>, OracleError> {
        let FieldDescriptor::Prime(m) = self.field else {
            return Err(FieldError::UnsupportedField(self.field).into());
        };
        let count = table_count(m.get() as u64)?;
        if self.index >= count {
            return Err(OracleError::IndexOutOfRange {
                index: self.index,
                count,
            });
        }
        Ok(table_at(m, self.ty, self.index))
    }
}

fn table_at(m: Modulus, ty: CurledType, mut index: u64) -> CurledTable<Fp> {
    let q = m.get() as u64;
    let mut digit = || {
        let d = index % q;
        index /= q;
        Fp::new(d as i64, m)
    };
    let params = std::array::from_fn(|_| Element::raw([digit(), digit(), digit()]));
    CurledTable::new(ty, params).expect("single field")
}

/// Visits every table of type `ty` over GF(q) in index order.
pub fn enumerate_tables(
    m: Modulus,
    ty: CurledType,
    visitor: impl FnMut(u64, &CurledTable<Fp>),
) -> Result<(), OracleError> {
    let count = table_count(m.get() as u64)?;
    enumerate_range(m, ty, 0..count, visitor)
}

/// Visits the tables with indices in `range`, in order.
pub fn enumerate_range(
    m: Modulus,
    ty: CurledType,
    range: Range<u64>,
    mut visitor: impl FnMut(u64, &CurledTable<Fp>),
) -> Result<(), OracleError> {
    let count = table_count(m.get() as u64)?;
    if range.end > count {
        return Err(OracleError::IndexOutOfRange {
            index: range.end - 1,
            count,
        });
    }
    for index in range {
        visitor(index, &table_at(m, ty, index));
    }
    Ok(())
}

/// Splits `0..total` into `parts` contiguous ranges (the first ones one
/// longer when `total` does not divide evenly). Empty ranges are dropped.
pub fn partition(total: u64, parts: u64) -> Vec<Range<u64>> {
    let parts = parts.max(1);
    let (base, extra) = (total / parts, total % parts);
    let mut start = 0;
    let mut out = Vec::new();
    for n in 0..parts {
        let len = base + u64::from(n < extra);
        if len > 0 {
            out.push(start..start + len);
        }
        start += len;
    }
    out
}

/// `n` table indices drawn uniformly from `0..count` with a ChaCha8 stream
/// selected by the type, so that types do not share draws.
pub fn sample_indices(count: u64, n: u64, seed: u64, ty: CurledType) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(ty.index() as u64);
    // largest multiple of count that fits; draws at or above it are rejected
    let zone = u64::MAX - (u64::MAX % count + 1) % count;
    (0..n)
        .map(|_| loop {
            let r = rng.next_u64();
            if r <= zone {
                break r % count;
            }
        })
        .collect()
}

pub type ElementPair<K> = (Element<K>, Element<K>);

/// `(x, y)` with `(xy)^2 != x^2 y^2`, or `None` when the table is
/// endo-commutative. Finite fields only.
pub fn ec_witness<K: Field>(table: &CurledTable<K>) -> Result<Option<ElementPair<K>>, FieldError> {
    let elements = all_elements::<K>(table.context())?;
    Ok(find_ec_witness(table, &elements).map(|(x, y)| (elements[x].clone(), elements[y].clone())))
}

fn find_ec_witness<K: Field>(
    table: &CurledTable<K>,
    elements: &[Element<K>],
) -> Option<(usize, usize)> {
    let squares: Vec<_> = elements.iter().map(|x| table.sq(x)).collect();
    for (n, x) in elements.iter().enumerate() {
        for (m, y) in elements.iter().enumerate() {
            let lhs = table.sq(&table.mul(x, y));
            let rhs = table.mul(&squares[n], &squares[m]);
            if lhs != rhs {
                return Some((n, m));
            }
        }
    }
    None
}

/// `(xy)^2 = x^2 y^2` for all `p^6` pairs.
pub fn is_ec_bruteforce<K: Field>(table: &CurledTable<K>) -> Result<bool, FieldError> {
    Ok(ec_witness(table)?.is_none())
}

/// The difference `(xy)^2 - x^2 y^2` vanishes as a polynomial in the
/// coordinates of `x` and `y`.
pub fn is_ec_polynomial<K: Field>(table: &CurledTable<K>) -> bool {
    CompiledVector::new(&difference_expansion(), table.ty(), table.context()).vanishes(table)
}

/// `x^2 = 0` for all `p^3` elements.
pub fn is_zeropotent_bruteforce<K: Field>(table: &CurledTable<K>) -> Result<bool, FieldError> {
    Ok(all_elements::<K>(table.context())?
        .iter()
        .all(|x| table.sq(x).is_zero()))
}

/// Every decider's answer for one table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub curled: bool,
    pub ec_bruteforce: bool,
    pub ec_theorem: bool,
    pub ec_polynomial: bool,
    pub zeropotent_bruteforce: bool,
    pub zeropotent_condition: bool,
}

impl Verdicts {
    /// Names of the consistency rules this set of answers breaks.
    pub fn anomalies(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.ec_bruteforce != self.ec_theorem || self.ec_bruteforce != self.ec_polynomial {
            out.push("ec_deciders_disagree");
        }
        if self.zeropotent_bruteforce != self.zeropotent_condition {
            out.push("zeropotency_deciders_disagree");
        }
        if self.zeropotent_bruteforce && !self.curled {
            out.push("zeropotent_not_curled");
        }
        if self.zeropotent_bruteforce && !self.ec_bruteforce {
            out.push("zeropotent_not_ec");
        }
        out
    }
}

/// All deciders prepared for one type and finite field.
#[derive(Debug, Clone)]
pub struct Deciders<K: Field> {
    elements: Vec<Element<K>>,
    theorem: TheoremDecider<K>,
    polynomial: CompiledVector<K>,
}

impl<K: Field> Deciders<K> {
    pub fn new(ty: CurledType, ctx: &K::Context) -> Result<Self, FieldError> {
        Ok(Deciders {
            elements: all_elements::<K>(ctx)?,
            theorem: TheoremDecider::new(ty, ctx),
            polynomial: CompiledVector::new(&difference_expansion(), ty, ctx),
        })
    }

    pub fn verdicts(&self, table: &CurledTable<K>) -> Verdicts {
        let squares: Vec<_> = self.elements.iter().map(|x| table.sq(x)).collect();
        let curled = self
            .elements
            .iter()
            .zip(&squares)
            .all(|(x, x2)| minors_vanish(x, x2));
        Verdicts {
            curled,
            ec_bruteforce: find_ec_witness(table, &self.elements).is_none(),
            ec_theorem: self.theorem.holds(table),
            ec_polynomial: self.polynomial.vanishes(table),
            zeropotent_bruteforce: squares.iter().all(Element::is_zero),
            zeropotent_condition: is_zeropotent_by_condition(table),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample { n: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Population {
    All,
    Curled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub mode: Mode,
    /// Worker threads; 0 means one per available processor.
    pub threads: usize,
    pub budget: u64,
    pub mismatch_cap: usize,
}

impl RunConfig {
    pub fn new(mode: Mode) -> Self {
        RunConfig {
            mode,
            threads: 0,
            budget: DEFAULT_BUDGET,
            mismatch_cap: DEFAULT_MISMATCH_CAP,
        }
    }

    pub fn threads(self, threads: usize) -> Self {
        RunConfig { threads, ..self }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub tables: u64,
    pub curled: u64,
    pub ec_bruteforce: u64,
    pub ec_theorem: u64,
    pub ec_polynomial: u64,
    pub zeropotent_bruteforce: u64,
    pub zeropotent_condition: u64,
    pub mismatches: u64,
}

impl Counts {
    fn record(&mut self, v: &Verdicts, mismatch: bool) {
        self.tables += 1;
        self.curled += u64::from(v.curled);
        self.ec_bruteforce += u64::from(v.ec_bruteforce);
        self.ec_theorem += u64::from(v.ec_theorem);
        self.ec_polynomial += u64::from(v.ec_polynomial);
        self.zeropotent_bruteforce += u64::from(v.zeropotent_bruteforce);
        self.zeropotent_condition += u64::from(v.zeropotent_condition);
        self.mismatches += u64::from(mismatch);
    }
}

impl AddAssign for Counts {
    fn add_assign(&mut self, o: Counts) {
        self.tables += o.tables;
        self.curled += o.curled;
        self.ec_bruteforce += o.ec_bruteforce;
        self.ec_theorem += o.ec_theorem;
        self.ec_polynomial += o.ec_polynomial;
        self.zeropotent_bruteforce += o.zeropotent_bruteforce;
        self.zeropotent_condition += o.zeropotent_condition;
        self.mismatches += o.mismatches;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub table: TableId,
    pub verdicts: Verdicts,
    pub kinds: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialReport {
    pub field: FieldDescriptor,
    #[serde(rename = "type")]
    pub ty: CurledType,
    pub population: Population,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampler: Option<&'static str>,
    pub counts: Counts,
    /// The first `mismatch_cap` mismatches in visiting order; the total is
    /// `counts.mismatches`.
    pub mismatches: Vec<Mismatch>,
    pub mismatch_cap: usize,
}

/// Reports for both populations from one pass over the tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PassReport {
    pub all: DifferentialReport,
    pub curled: DifferentialReport,
}

impl PassReport {
    pub fn population(&self, p: Population) -> &DifferentialReport {
        match p {
            Population::All => &self.all,
            Population::Curled => &self.curled,
        }
    }
}

#[derive(Default)]
struct Acc {
    all: Counts,
    curled: Counts,
    mis_all: Vec<Mismatch>,
    mis_curled: Vec<Mismatch>,
}

impl Acc {
    fn merge(mut self, other: Acc, cap: usize) -> Acc {
        self.all += other.all;
        self.curled += other.curled;
        for (mine, theirs) in [
            (&mut self.mis_all, other.mis_all),
            (&mut self.mis_curled, other.mis_curled),
        ] {
            let room = cap.saturating_sub(mine.len());
            mine.extend(theirs.into_iter().take(room));
        }
        self
    }
}

fn prime_of(field: FieldDescriptor) -> Result<Modulus, OracleError> {
    match field {
        FieldDescriptor::Prime(m) => Ok(m),
        FieldDescriptor::Rational => Err(FieldError::UnsupportedField(field).into()),
    }
}

/// Runs every decider on the tables selected by `config.mode` and reports
/// the `all` and `curled` populations. Deterministic for a given mode:
/// the thread count only changes speed.
pub fn differential_pass(
    field: FieldDescriptor,
    ty: CurledType,
    config: &RunConfig,
) -> Result<PassReport, OracleError> {
    let m = prime_of(field)?;
    let count = table_count(m.get() as u64)?;
    let (items, sampled) = match config.mode {
        Mode::Exhaustive => {
            if count > config.budget {
                return Err(OracleError::BudgetExceeded {
                    needed: count,
                    budget: config.budget,
                });
            }
            (count, None)
        }
        Mode::Sample { n, seed } => (n, Some(sample_indices(count, n, seed, ty))),
    };
    let deciders = Deciders::<Fp>::new(ty, &m)?;
    let cap = config.mismatch_cap;
    let index_of = |n: u64| sampled.as_ref().map_or(n, |s| s[n as usize]);

    let run_chunk = |range: Range<u64>| {
        let mut acc = Acc::default();
        for n in range {
            let index = index_of(n);
            let table = table_at(m, ty, index);
            let v = deciders.verdicts(&table);
            let kinds = v.anomalies();
            let bad = !kinds.is_empty();
            acc.all.record(&v, bad);
            if v.curled {
                acc.curled.record(&v, bad);
            }
            if bad {
                let id = TableId { field, ty, index };
                let record = Mismatch {
                    table: id,
                    verdicts: v,
                    kinds,
                };
                if v.curled && acc.mis_curled.len() < cap {
                    acc.mis_curled.push(record.clone());
                }
                if acc.mis_all.len() < cap {
                    acc.mis_all.push(record);
                }
            }
        }
        acc
    };

    let chunks: Vec<Range<u64>> = (0..items.div_ceil(CHUNK))
        .map(|c| c * CHUNK..((c + 1) * CHUNK).min(items))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| OracleError::ThreadPool(e.to_string()))?;
    let partial: Vec<Acc> = pool.install(|| chunks.into_par_iter().map(run_chunk).collect());
    let acc = partial
        .into_iter()
        .fold(Acc::default(), |a, b| a.merge(b, cap));

    let report = |population, counts, mismatches| DifferentialReport {
        field,
        ty,
        population,
        mode: config.mode,
        sampler: sampled.as_ref().map(|_| SAMPLER),
        counts,
        mismatches,
        mismatch_cap: cap,
    };
    Ok(PassReport {
        all: report(Population::All, acc.all, acc.mis_all),
        curled: report(Population::Curled, acc.curled, acc.mis_curled),
    })
}

pub fn differential_test(
    field: FieldDescriptor,
    ty: CurledType,
    config: &RunConfig,
    population: Population,
) -> Result<DifferentialReport, OracleError> {
    let pass = differential_pass(field, ty, config)?;
    Ok(match population {
        Population::All => pass.all,
        Population::Curled => pass.curled,
    })
}

/// One CSV row of the per-type classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub field: String,
    pub type_i: u8,
    pub type_j: u8,
    pub type_k: u8,
    pub tables: u64,
    pub curled: u64,
    pub ec_bruteforce: u64,
    pub ec_theorem: u64,
    pub ec_polynomial: u64,
    pub zeropotent_bruteforce: u64,
    pub zeropotent_condition: u64,
    pub mismatches: u64,
}

impl ClassRow {
    pub fn new(report: &DifferentialReport) -> Self {
        let [type_i, type_j, type_k] = report.ty.bits();
        let c = report.counts;
        ClassRow {
            field: report.field.to_string(),
            type_i,
            type_j,
            type_k,
            tables: c.tables,
            curled: c.curled,
            ec_bruteforce: c.ec_bruteforce,
            ec_theorem: c.ec_theorem,
            ec_polynomial: c.ec_polynomial,
            zeropotent_bruteforce: c.zeropotent_bruteforce,
            zeropotent_condition: c.zeropotent_condition,
            mismatches: c.mismatches,
        }
    }
}

/// Counts over all tables, one row per type in the given order.
pub fn classify_counts(
    field: FieldDescriptor,
    types: &[CurledType],
    config: &RunConfig,
) -> Result<Vec<ClassRow>, OracleError> {
    check_budget(field, types.len() as u64, config)?;
    types
        .iter()
        .map(|&ty| Ok(ClassRow::new(&differential_pass(field, ty, config)?.all)))
        .collect()
}

/// Fails when an exhaustive run over `types` types would exceed the budget.
pub fn check_budget(
    field: FieldDescriptor,
    types: u64,
    config: &RunConfig,
) -> Result<(), OracleError> {
    if config.mode != Mode::Exhaustive {
        return Ok(());
    }
    let m = prime_of(field)?;
    let needed = table_count(m.get() as u64)?.saturating_mul(types);
    if needed > config.budget {
        return Err(OracleError::BudgetExceeded {
            needed,
            budget: config.budget,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Basis, Param};
    use crate::field::Rational;

    fn gf(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    fn ty(i: u8, j: u8, k: u8) -> CurledType {
        CurledType::new(i, j, k).unwrap()
    }

    fn a_is_g(t: CurledType) -> CurledTable<Fp> {
        let m = gf(2);
        CurledTable::zero(t, &m)
            .with(Param::A, Element::basis(Basis::G, &m))
            .unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let m = gf(2);
        assert!(is_ec_bruteforce(&CurledTable::<Fp>::zero(ty(0, 0, 0), &m)).unwrap());
        assert!(is_ec_bruteforce(&CurledTable::<Fp>::zero(ty(1, 0, 0), &m)).unwrap());
        let (x, y) = ec_witness(&a_is_g(ty(1, 1, 0))).unwrap().unwrap();
        let t = a_is_g(ty(1, 1, 0));
        assert_ne!(t.sq(&t.mul(&x, &y)), t.mul(&t.sq(&x), &t.sq(&y)));
        let e = Element::basis(Basis::E, &m);
        let f = Element::basis(Basis::F, &m);
        assert!(t.sq(&t.mul(&e, &f)).is_zero());
        assert_eq!(t.mul(&t.sq(&e), &t.sq(&f)), Element::basis(Basis::G, &m));
        assert!(is_ec_bruteforce(&CurledTable::<Rational>::zero(ty(0, 0, 0), &())).is_err());
    }

    #[test]
    fn polynomial_examples() {
        assert!(is_ec_polynomial(&CurledTable::<Rational>::zero(
            ty(0, 0, 0),
            &()
        )));
        let g = Element::basis(Basis::G, &());
        let t = |b| {
            CurledTable::<Rational>::zero(b, &())
                .with(Param::A, g.clone())
                .unwrap()
        };
        assert!(!is_ec_polynomial(&t(ty(1, 1, 0))));
        assert!(is_ec_polynomial(&t(ty(0, 0, 0))));
    }

    #[test]
    fn zeropotency_examples() {
        assert!(is_zeropotent_bruteforce(&CurledTable::<Fp>::zero(ty(0, 0, 0), &gf(2))).unwrap());
        assert!(!is_zeropotent_bruteforce(&CurledTable::<Fp>::zero(ty(1, 0, 0), &gf(2))).unwrap());
        let m = gf(3);
        let t = CurledTable::<Fp>::zero(ty(0, 0, 0), &m)
            .with(Param::A, Element::from_integers([0, 0, 1], &m))
            .unwrap()
            .with(Param::C, Element::from_integers([0, 0, 2], &m))
            .unwrap();
        assert!(is_zeropotent_bruteforce(&t).unwrap());
    }

    #[test]
    fn table_ids_round_trip() {
        let m = gf(3);
        for index in [0, 1, 2, 3, 12345, table_count(3).unwrap() - 1] {
            let id = TableId {
                field: FieldDescriptor::Prime(m),
                ty: ty(1, 0, 1),
                index,
            };
            let t = id.decode().unwrap();
            assert_eq!(TableId::encode(&t), id);
        }
        // digit order: A_e is least significant, then A_f
        let t = table_at(m, ty(0, 0, 0), 1 + 3 * 2);
        assert_eq!(t.param(Param::A), &Element::from_integers([1, 2, 0], &m));
        let bad = TableId {
            field: FieldDescriptor::Prime(m),
            ty: ty(0, 0, 0),
            index: table_count(3).unwrap(),
        };
        assert!(matches!(
            bad.decode(),
            Err(OracleError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn counts_and_overflow() {
        assert_eq!(table_count(2).unwrap(), 262144);
        assert_eq!(table_count(3).unwrap(), 387420489);
        assert_eq!(table_count(11).unwrap(), 11u64.pow(18));
        assert!(matches!(
            table_count(13),
            Err(OracleError::Overflow { q: 13 })
        ));
    }

    #[test]
    fn partitions_cover_range() {
        let parts = partition(10, 3);
        assert_eq!(parts, vec![0..4, 4..7, 7..10]);
        assert_eq!(partition(2, 5), vec![0..1, 1..2]);
        assert!(partition(0, 4).is_empty());
    }

    #[test]
    fn enumeration_split_matches_single_pass() {
        let m = gf(2);
        let t = ty(1, 0, 0);
        let mut single = 0u64;
        enumerate_tables(m, t, |_, table| {
            single += u64::from(table.param(Param::A).is_zero())
        })
        .unwrap();
        let mut split = 0u64;
        for r in partition(table_count(2).unwrap(), 2) {
            enumerate_range(m, t, r, |_, table| {
                split += u64::from(table.param(Param::A).is_zero())
            })
            .unwrap();
        }
        assert_eq!(single, 1 << 15);
        assert_eq!(single, split);
    }

    #[test]
    fn sampler_is_deterministic_and_in_range() {
        let a = sample_indices(3u64.pow(18), 1000, 42, ty(1, 1, 1));
        let b = sample_indices(3u64.pow(18), 1000, 42, ty(1, 1, 1));
        let c = sample_indices(3u64.pow(18), 1000, 42, ty(1, 1, 0));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(|&i| i < 3u64.pow(18)));
        // tiny range hits every value
        let small = sample_indices(3, 300, 1, ty(0, 0, 0));
        assert!((0..3).all(|v| small.contains(&v)));
    }

    #[test]
    fn empty_sample_gives_empty_report() {
        let config = RunConfig::new(Mode::Sample { n: 0, seed: 9 });
        let r = differential_test(
            FieldDescriptor::prime(5).unwrap(),
            ty(0, 1, 0),
            &config,
            Population::All,
        )
        .unwrap();
        assert_eq!(r.counts, Counts::default());
        assert!(r.mismatches.is_empty());
    }

    #[test]
    fn budget_and_field_errors() {
        let gf3 = FieldDescriptor::prime(3).unwrap();
        let config = RunConfig::new(Mode::Exhaustive);
        assert!(matches!(
            differential_pass(gf3, ty(0, 0, 0), &config),
            Err(OracleError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            differential_pass(FieldDescriptor::Rational, ty(0, 0, 0), &config),
            Err(OracleError::Field(FieldError::UnsupportedField(_)))
        ));
        let gf2 = FieldDescriptor::prime(2).unwrap();
        assert!(check_budget(gf2, 8, &config).is_ok());
        let tight = RunConfig {
            budget: 1000,
            ..config
        };
        assert!(check_budget(gf2, 1, &tight).is_err());
    }

    #[test]
    fn thread_count_does_not_change_reports() {
        let gf3 = FieldDescriptor::prime(3).unwrap();
        let mode = Mode::Sample { n: 3000, seed: 5 };
        let one = differential_pass(gf3, ty(1, 1, 0), &RunConfig::new(mode).threads(1)).unwrap();
        let four = differential_pass(gf3, ty(1, 1, 0), &RunConfig::new(mode).threads(4)).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.all.counts.tables, 3000);
        assert_eq!(one.all.counts.mismatches, 0);
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&four).unwrap()
        );
    }
}
