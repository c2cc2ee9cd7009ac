use crate::field::{ensure_same, Field, FieldError};

use super::element::{Basis, Element};
use super::table::{CurledTable, CurledType, Param};
use super::AlgebraError;

/// A 3x3 matrix over `K`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix3<K: Field> {
    rows: [[K; 3]; 3],
}

impl<K: Field> Matrix3<K> {
    pub fn new(rows: [[K; 3]; 3]) -> Result<Self, FieldError> {
        let ctx = rows[0][0].context();
        for x in rows.iter().flatten() {
            ensure_same::<K>(&ctx, &x.context())?;
        }
        Ok(Matrix3 { rows })
    }

    pub fn from_integers(rows: [[i64; 3]; 3], ctx: &K::Context) -> Self {
        Matrix3 {
            rows: rows.map(|r| r.map(|n| K::from_integer(n, ctx))),
        }
    }

    pub fn identity(ctx: &K::Context) -> Self {
        Self::from_integers([[1, 0, 0], [0, 1, 0], [0, 0, 1]], ctx)
    }

    pub fn diagonal(d: [K; 3]) -> Self {
        let ctx = d[0].context();
        let [x, y, z] = d;
        let o = || K::zero(&ctx);
        Matrix3 {
            rows: [[x, o(), o()], [o(), y, o()], [o(), o(), z]],
        }
    }

    pub fn context(&self) -> K::Context {
        self.rows[0][0].context()
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[[K; 3]; 3] {
        &self.rows
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let ctx = self.context();
        let rows = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..3).fold(K::zero(&ctx), |acc, k| {
                    acc + self.rows[r][k].clone() * rhs.rows[k][c].clone()
                })
            })
        });
        Matrix3 { rows }
    }

    pub fn determinant(&self) -> K {
        let m = |r: usize, c: usize| self.rows[r][c].clone();
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    /// Inverse via the adjugate; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let inv_det = self.determinant().inverse().ok()?;
        let m = |r: usize, c: usize| self.rows[r % 3][c % 3].clone();
        // cofactor of (r, c) placed at (c, r)
        let rows = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let cof = m(c + 1, r + 1) * m(c + 2, r + 2) - m(c + 1, r + 2) * m(c + 2, r + 1);
                cof * inv_det.clone()
            })
        });
        Some(Matrix3 { rows })
    }
}

/// Structure constants: `e_r e_s = sum_t c[r][s][t] e_t` over the ordered
/// basis `(e, f, g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor<K: Field> {
    c: [[[K; 3]; 3]; 3],
}

impl<K: Field> StructureTensor<K> {
    pub fn new(c: [[[K; 3]; 3]; 3]) -> Result<Self, FieldError> {
        let ctx = c[0][0][0].context();
        for x in c.iter().flatten().flatten() {
            ensure_same::<K>(&ctx, &x.context())?;
        }
        Ok(StructureTensor { c })
    }

    pub fn zero(ctx: &K::Context) -> Self {
        StructureTensor {
            c: std::array::from_fn(|_| {
                std::array::from_fn(|_| std::array::from_fn(|_| K::zero(ctx)))
            }),
        }
    }

    pub fn context(&self) -> K::Context {
        self.c[0][0][0].context()
    }

    pub fn get(&self, r: usize, s: usize, t: usize) -> &K {
        &self.c[r][s][t]
    }

    pub fn entries(&self) -> &[[[K; 3]; 3]; 3] {
        &self.c
    }

    /// The product `e_r e_s` as an element.
    pub fn basis_product(&self, r: usize, s: usize) -> Element<K> {
        Element::raw(self.c[r][s].clone())
    }

    pub fn set_basis_product(&mut self, r: usize, s: usize, v: &Element<K>) {
        self.c[r][s] = v.coords().clone();
    }

    /// Bilinear product defined by the structure constants.
    pub fn product(&self, x: &Element<K>, y: &Element<K>) -> Element<K> {
        let ctx = self.context();
        let mut out = Element::zero(&ctx);
        for r in 0..3 {
            for s in 0..3 {
                let coeff = x.coords()[r].clone() * y.coords()[s].clone();
                out.add_scaled(&coeff, &self.basis_product(r, s));
            }
        }
        out
    }

    pub fn from_table(table: &CurledTable<K>) -> Self {
        let mut t = Self::zero(table.context());
        for s in Basis::ALL {
            for u in Basis::ALL {
                t.set_basis_product(s.index(), u.index(), &table.basis_product(s, u));
            }
        }
        t
    }

    /// Reads the tensor as a curled table. Each diagonal square `e_r e_r`
    /// must be `0` or `e_r` itself.
    pub fn to_table(&self) -> Result<CurledTable<K>, AlgebraError> {
        let mut bits = [false; 3];
        for b in Basis::ALL {
            let r = b.index();
            let sq = &self.c[r][r];
            let off_diagonal_clean = (0..3).filter(|&t| t != r).all(|t| sq[t].is_zero());
            if !off_diagonal_clean || !(sq[r].is_zero() || sq[r].is_one()) {
                return Err(AlgebraError::NotNormalForm(b.name()));
            }
            bits[r] = sq[r].is_one();
        }
        let params = Param::ALL.map(|p| {
            let (s, t) = p.factors();
            self.basis_product(s.index(), t.index())
        });
        Ok(CurledTable::new(CurledType::from_bits(bits), params).expect("single field"))
    }

    /// Like [`Self::to_table`] but first rescales basis vectors whose square
    /// is a nonzero multiple of themselves. Fails with `NotNormalForm` when
    /// some `e_r e_r` leaves the line through `e_r`.
    pub fn renormalize(&self) -> Result<CurledTable<K>, AlgebraError> {
        let mut eps: [K; 3] = std::array::from_fn(|_| K::zero(&self.context()));
        for b in Basis::ALL {
            let r = b.index();
            let sq = &self.c[r][r];
            if (0..3).any(|t| t != r && !sq[t].is_zero()) {
                return Err(AlgebraError::NotNormalForm(b.name()));
            }
            eps[r] = sq[r].clone();
        }
        let offdiag = Param::ALL.map(|p| {
            let (s, t) = p.factors();
            self.basis_product(s.index(), t.index())
        });
        Ok(normalize_diagonal(eps, offdiag)?.0)
    }

    /// Structure constants of the same product in the basis
    /// `e'_r = sum_s m[r][s] e_s` (rows of `m` are the new basis vectors).
    pub fn change_of_basis(&self, m: &Matrix3<K>) -> Result<Self, AlgebraError> {
        ensure_same::<K>(&self.context(), &m.context())?;
        let inv = m.inverse().ok_or(AlgebraError::SingularMatrix)?;
        let new_basis: [Element<K>; 3] = std::array::from_fn(|r| Element::raw(m.rows()[r].clone()));
        let mut out = Self::zero(&self.context());
        for r in 0..3 {
            for s in 0..3 {
                // old coordinates times m^{-1} gives new coordinates
                let v = self.product(&new_basis[r], &new_basis[s]);
                let coords = std::array::from_fn(|u| {
                    (0..3).fold(K::zero(&self.context()), |acc, t| {
                        acc + v.coords()[t].clone() * inv.rows()[t][u].clone()
                    })
                });
                out.c[r][s] = coords;
            }
        }
        Ok(out)
    }
}

/// Free-function form of [`StructureTensor::from_table`].
pub fn to_tensor<K: Field>(table: &CurledTable<K>) -> StructureTensor<K> {
    StructureTensor::from_table(table)
}

/// Free-function form of [`StructureTensor::to_table`].
pub fn from_tensor<K: Field>(t: &StructureTensor<K>) -> Result<CurledTable<K>, AlgebraError> {
    t.to_table()
}

/// Free-function form of [`StructureTensor::change_of_basis`].
pub fn change_of_basis<K: Field>(
    t: &StructureTensor<K>,
    m: &Matrix3<K>,
) -> Result<StructureTensor<K>, AlgebraError> {
    t.change_of_basis(m)
}

/// Rescales each basis vector with a nonzero square coefficient so that the
/// coefficient becomes 1.
///
/// Input is a raw table with `e^2 = eps[0] e`, `f^2 = eps[1] f`,
/// `g^2 = eps[2] g` and off-diagonal products `offdiag` (in the order
/// `ef, eg, fe, fg, ge, gf`). Returns the normalized table together with the
/// scale factors: the new basis is `(s_e e, s_f f, s_g g)`.
pub fn normalize_diagonal<K: Field>(
    eps: [K; 3],
    offdiag: [Element<K>; 6],
) -> Result<(CurledTable<K>, [K; 3]), AlgebraError> {
    let ctx = eps[0].context();
    for x in &eps {
        ensure_same::<K>(&ctx, &x.context())?;
    }
    for x in &offdiag {
        ensure_same::<K>(&ctx, &x.context())?;
    }
    let mut raw = StructureTensor::zero(&ctx);
    for (r, e) in eps.iter().enumerate() {
        raw.c[r][r][r] = e.clone();
    }
    for (p, v) in Param::ALL.iter().zip(&offdiag) {
        let (s, t) = p.factors();
        raw.set_basis_product(s.index(), t.index(), v);
    }
    let scales = eps.map(|e| e.inverse().unwrap_or_else(|_| K::one(&ctx)));
    let moved = raw.change_of_basis(&Matrix3::diagonal(scales.clone()))?;
    Ok((moved.to_table()?, scales))
}
