use std::fmt;

use crate::field::{ensure_same, Field, FieldDescriptor, FieldError};
use crate::polynomial::Polynomial;

use super::element::{all_elements, minors_vanish, Basis, Element};
use super::AlgebraError;

/// The six off-diagonal products of the basis: `A = ef, B = eg, C = fe,
/// D = fg, E = ge, F = gf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Param {
    pub const ALL: [Param; 6] = [Param::A, Param::B, Param::C, Param::D, Param::E, Param::F];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['A', 'B', 'C', 'D', 'E', 'F'][self.index()]
    }

    /// The ordered basis pair whose product this parameter is.
    pub fn factors(self) -> (Basis, Basis) {
        use Basis::*;
        match self {
            Param::A => (E, F),
            Param::B => (E, G),
            Param::C => (F, E),
            Param::D => (F, G),
            Param::E => (G, E),
            Param::F => (G, F),
        }
    }

    /// The parameter equal to `s t` for distinct basis vectors.
    pub fn of_pair(s: Basis, t: Basis) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.factors() == (s, t))
    }
}

/// The type bits `(i, j, k)`: `e^2 = ie`, `f^2 = jf`, `g^2 = kg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurledType {
    bits: [bool; 3],
}

impl CurledType {
    pub fn new(i: u8, j: u8, k: u8) -> Result<Self, AlgebraError> {
        let bit = |x: u8| match x {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(AlgebraError::InvalidTypeBit(x as i64)),
        };
        Ok(CurledType {
            bits: [bit(i)?, bit(j)?, bit(k)?],
        })
    }

    pub fn from_bits(bits: [bool; 3]) -> Self {
        CurledType { bits }
    }

    /// The eight types ordered by `4i + 2j + k`.
    pub fn all() -> impl Iterator<Item = CurledType> {
        (0..8u8).map(|n| CurledType {
            bits: [n & 4 != 0, n & 2 != 0, n & 1 != 0],
        })
    }

    pub fn index(self) -> usize {
        self.bits.iter().fold(0, |acc, &b| acc * 2 + b as usize)
    }

    pub fn bit(self, b: Basis) -> bool {
        self.bits[b.index()]
    }

    pub fn bits(self) -> [u8; 3] {
        self.bits.map(u8::from)
    }

    pub fn i(self) -> bool {
        self.bits[0]
    }

    pub fn j(self) -> bool {
        self.bits[1]
    }

    pub fn k(self) -> bool {
        self.bits[2]
    }

    pub fn is_zero(self) -> bool {
        self.bits == [false; 3]
    }
}

/// Serialized as `[i, j, k]`.
impl serde::Serialize for CurledType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&self.bits(), serializer)
    }
}

impl fmt::Display for CurledType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.bits();
        write!(f, "({i},{j},{k})")
    }
}

/// Multiplication table of a 3-dimensional curled algebra of a given type:
///
/// ```text
///   | e   f   g
/// --+-----------
/// e | ie  A   B
/// f | C   jf  D
/// g | E   F   kg
/// ```
///
/// The diagonal is implied by the type bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurledTable<K: Field> {
    ctx: K::Context,
    ty: CurledType,
    params: [Element<K>; 6],
}

impl<K: Field> CurledTable<K> {
    pub fn new(ty: CurledType, params: [Element<K>; 6]) -> Result<Self, FieldError> {
        let ctx = params[0].context();
        for p in &params[1..] {
            ensure_same::<K>(&ctx, &p.context())?;
        }
        Ok(CurledTable { ctx, ty, params })
    }

    pub fn zero(ty: CurledType, ctx: &K::Context) -> Self {
        CurledTable {
            ctx: ctx.clone(),
            ty,
            params: std::array::from_fn(|_| Element::zero(ctx)),
        }
    }

    /// Replaces one parameter.
    pub fn with(mut self, p: Param, value: Element<K>) -> Result<Self, FieldError> {
        ensure_same::<K>(&self.ctx, &value.context())?;
        self.params[p.index()] = value;
        Ok(self)
    }

    pub fn context(&self) -> &K::Context {
        &self.ctx
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        K::descriptor_of(&self.ctx)
    }

    pub fn ty(&self) -> CurledType {
        self.ty
    }

    pub fn param(&self, p: Param) -> &Element<K> {
        &self.params[p.index()]
    }

    pub fn params(&self) -> &[Element<K>; 6] {
        &self.params
    }

    /// The type bit for `b` as a field element (0 or 1).
    pub fn type_scalar(&self, b: Basis) -> K {
        K::from_integer(self.ty.bit(b) as i64, &self.ctx)
    }

    /// `s t` for basis vectors.
    pub fn basis_product(&self, s: Basis, t: Basis) -> Element<K> {
        if s == t {
            if self.ty.bit(s) {
                Element::basis(s, &self.ctx)
            } else {
                Element::zero(&self.ctx)
            }
        } else {
            self.param(Param::of_pair(s, t).expect("distinct basis pair"))
                .clone()
        }
    }

    fn check(&self, x: &Element<K>) -> Result<(), FieldError> {
        ensure_same::<K>(&self.ctx, &x.context())
    }

    /// Bilinear product:
    /// `xy = au·ie + av·A + aw·B + bu·C + bv·jf + bw·D + cu·E + cv·F + cw·kg`
    /// for `x = (a, b, c)` and `y = (u, v, w)`.
    pub fn product(&self, x: &Element<K>, y: &Element<K>) -> Result<Element<K>, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// `x^2 = a^2·ie + b^2·jf + c^2·kg + ab(A+C) + ac(B+E) + bc(D+F)`.
    pub fn square(&self, x: &Element<K>) -> Result<Element<K>, FieldError> {
        self.check(x)?;
        Ok(self.sq(x))
    }

    #[inline]
    pub(crate) fn mul(&self, x: &Element<K>, y: &Element<K>) -> Element<K> {
        let [a, b, c] = x.coords();
        let [u, v, w] = y.coords();
        let zero = K::zero(&self.ctx);
        let diag = |on: bool, s: &K, t: &K| {
            if on {
                s.clone() * t.clone()
            } else {
                zero.clone()
            }
        };
        let mut out = Element::raw([
            diag(self.ty.i(), a, u),
            diag(self.ty.j(), b, v),
            diag(self.ty.k(), c, w),
        ]);
        let scalars = [
            a.clone() * v.clone(),
            a.clone() * w.clone(),
            b.clone() * u.clone(),
            b.clone() * w.clone(),
            c.clone() * u.clone(),
            c.clone() * v.clone(),
        ];
        for (s, p) in scalars.iter().zip(&self.params) {
            out.add_scaled(s, p);
        }
        out
    }

    #[inline]
    pub(crate) fn sq(&self, x: &Element<K>) -> Element<K> {
        let [a, b, c] = x.coords();
        let zero = K::zero(&self.ctx);
        let diag = |on: bool, s: &K| if on { s.square() } else { zero.clone() };
        let mut out = Element::raw([
            diag(self.ty.i(), a),
            diag(self.ty.j(), b),
            diag(self.ty.k(), c),
        ]);
        let [pa, pb, pc, pd, pe, pf] = &self.params;
        out.add_scaled(&(a.clone() * b.clone()), &(pa + pc));
        out.add_scaled(&(a.clone() * c.clone()), &(pb + pe));
        out.add_scaled(&(b.clone() * c.clone()), &(pd + pf));
        out
    }

    /// True iff `{x, x^2}` is linearly dependent for every one of the `q^3`
    /// elements `x`.
    pub fn is_curled_bruteforce(&self) -> Result<bool, FieldError> {
        let els = all_elements::<K>(&self.ctx)?;
        Ok(els.iter().all(|x| minors_vanish(x, &self.sq(x))))
    }

    /// Symbolic curledness: with `x = ae + bf + cg` for indeterminates
    /// `a, b, c`, the three 2x2 minors of `[x; x^2]` vanish as polynomials.
    ///
    /// Equivalent to [`Self::is_curled_bruteforce`] over infinite fields; over
    /// finite fields it is sufficient but not necessary.
    pub fn is_curled_symbolic(&self) -> bool {
        let ctx = &self.ctx;
        let x: [Polynomial<K>; 3] = std::array::from_fn(|n| Polynomial::var(n, ctx));
        let [a, b, c] = &x;
        let mut sq: [Polynomial<K>; 3] = Default::default();
        let [pa, pb, pc, pd, pe, pf] = &self.params;
        let cross = [
            (a.mul(b), pa + pc),
            (a.mul(c), pb + pe),
            (b.mul(c), pd + pf),
        ];
        for t in 0..3 {
            if self.ty.bits[t] {
                sq[t] = x[t].mul(&x[t]);
            }
            for (m, v) in &cross {
                sq[t] = sq[t].add(&m.scale(&v.coords()[t]));
            }
        }
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .all(|&(r, s)| x[r].mul(&sq[s]).sub(&x[s].mul(&sq[r])).is_zero())
    }
}

impl<K: Field> fmt::Display for CurledTable<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} type {}", self.descriptor(), self.ty)?;
        for p in Param::ALL {
            write!(f, " {}={}", p.name(), self.param(p))?;
        }
        Ok(())
    }
}

/// Free-function form of [`CurledTable::product`].
pub fn product<K: Field>(
    x: &Element<K>,
    y: &Element<K>,
    table: &CurledTable<K>,
) -> Result<Element<K>, FieldError> {
    table.product(x, y)
}

/// Free-function form of [`CurledTable::square`].
pub fn square<K: Field>(x: &Element<K>, table: &CurledTable<K>) -> Result<Element<K>, FieldError> {
    table.square(x)
}
