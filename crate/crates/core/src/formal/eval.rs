use std::collections::BTreeMap;

use num::BigInt;

use crate::algebra::{Basis, CurledTable, CurledType, Element};
use crate::field::{ensure_same, Field};
use crate::polynomial::{Exponents, Polynomial};

use super::scalar::{Indeterminate, Monomial};
use super::vector::FormalVector;
use super::word::{FormalWord, Symbol};
use super::FormalError;

fn symbol_value<K: Field>(s: Symbol, table: &CurledTable<K>) -> Element<K> {
    match s {
        Symbol::Basis(b) => Element::basis(b, table.context()),
        Symbol::Param(p) => table.param(p).clone(),
    }
}

/// The element a formal word denotes in `table`.
pub fn eval_word<K: Field>(word: &FormalWord, table: &CurledTable<K>) -> Element<K> {
    match *word {
        FormalWord::Single(s) => symbol_value(s, table),
        FormalWord::Pair(s, t) => table.mul(&symbol_value(s, table), &symbol_value(t, table)),
    }
}

/// Coefficient of a monomial once the type bits are substituted; `None` when
/// a type bit kills it.
fn typed_coefficient<K: Field>(
    m: &Monomial,
    c: &BigInt,
    ty: CurledType,
    ctx: &K::Context,
) -> Option<K> {
    let bits = [Indeterminate::I, Indeterminate::J, Indeterminate::K];
    for (x, b) in bits.into_iter().zip(Basis::ALL) {
        if m.exponent(x) > 0 && !ty.bit(b) {
            return None;
        }
    }
    let k = K::from_bigint(c, ctx);
    (!k.is_zero()).then_some(k)
}

/// Evaluates `v` in `table` at the given values of `a, b, c, u, v, w`. The
/// type bits of the table are used for `i, j, k`.
pub fn eval_formal<K: Field>(
    v: &FormalVector,
    table: &CurledTable<K>,
    scalars: &BTreeMap<Indeterminate, K>,
) -> Result<Element<K>, FormalError> {
    let ctx = table.context();
    for s in scalars.values() {
        ensure_same::<K>(ctx, &s.context())?;
    }
    let mut out = Element::zero(ctx);
    for (w, p) in v.terms() {
        let mut coefficient = K::zero(ctx);
        for (m, c) in p.terms() {
            let Some(mut term) = typed_coefficient::<K>(m, c, table.ty(), ctx) else {
                continue;
            };
            for x in Indeterminate::COORDINATES {
                let e = m.exponent(x);
                if e == 0 {
                    continue;
                }
                let value = scalars.get(&x).ok_or(FormalError::MissingBinding(x))?;
                for _ in 0..e {
                    term = term * value.clone();
                }
            }
            coefficient = coefficient + term;
        }
        if !coefficient.is_zero() {
            out.add_scaled(&coefficient, &eval_word(w, table));
        }
    }
    Ok(out)
}

/// Substitutes the table into `v`, leaving `a, b, c, u, v, w` symbolic.
/// Returns the `e, f, g` coordinates.
pub fn eval_to_polynomials<K: Field>(
    v: &FormalVector,
    table: &CurledTable<K>,
) -> [Polynomial<K>; 3] {
    CompiledVector::new(v, table.ty(), table.context()).to_polynomials(table)
}

/// A formal vector with the type bits substituted and the integer
/// coefficients mapped into `K`, ready to be evaluated against many tables
/// of one type.
#[derive(Debug, Clone)]
pub struct CompiledVector<K: Field> {
    ty: CurledType,
    ctx: K::Context,
    monomials: Vec<Exponents>,
    words: Vec<(FormalWord, Vec<(usize, K)>)>,
}

impl<K: Field> CompiledVector<K> {
    pub fn new(v: &FormalVector, ty: CurledType, ctx: &K::Context) -> Self {
        let mut index: BTreeMap<Exponents, usize> = BTreeMap::new();
        let mut words = Vec::new();
        for (w, p) in v.terms() {
            let mut acc: BTreeMap<usize, K> = BTreeMap::new();
            for (m, c) in p.terms() {
                let Some(k) = typed_coefficient::<K>(m, c, ty, ctx) else {
                    continue;
                };
                let next = index.len();
                let id = *index.entry(m.coordinate_part()).or_insert(next);
                let slot = acc.entry(id).or_insert_with(|| K::zero(ctx));
                *slot = slot.clone() + k;
            }
            let entries: Vec<_> = acc.into_iter().filter(|(_, k)| !k.is_zero()).collect();
            if !entries.is_empty() {
                words.push((*w, entries));
            }
        }
        let mut monomials = vec![[0; 6]; index.len()];
        for (m, id) in index {
            monomials[id] = m;
        }
        CompiledVector {
            ty,
            ctx: ctx.clone(),
            monomials,
            words,
        }
    }

    pub fn ty(&self) -> CurledType {
        self.ty
    }

    /// Coordinate monomials, indexed like the output of [`Self::coefficients`].
    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    /// The element multiplying each coordinate monomial. The table must have
    /// the compiled type and field.
    pub fn coefficients(&self, table: &CurledTable<K>) -> Vec<Element<K>> {
        debug_assert_eq!(table.ty(), self.ty);
        debug_assert_eq!(table.context(), &self.ctx);
        let mut out = vec![Element::zero(&self.ctx); self.monomials.len()];
        for (w, entries) in &self.words {
            let value = eval_word(w, table);
            if value.is_zero() {
                continue;
            }
            for (id, k) in entries {
                out[*id].add_scaled(k, &value);
            }
        }
        out
    }

    /// True iff the vector evaluates to the zero polynomial triple.
    pub fn vanishes(&self, table: &CurledTable<K>) -> bool {
        self.coefficients(table).iter().all(Element::is_zero)
    }

    pub fn to_polynomials(&self, table: &CurledTable<K>) -> [Polynomial<K>; 3] {
        let mut out = [Polynomial::zero(), Polynomial::zero(), Polynomial::zero()];
        for (m, el) in self.monomials.iter().zip(self.coefficients(table)) {
            for (p, x) in out.iter_mut().zip(el.into_coords()) {
                p.add_term(*m, x);
            }
        }
        out
    }
}
