//! Exact computer algebra for 3-dimensional curled algebras and their
//! endo-commutativity.
//!
//! An algebra is *curled* when every `x` is linearly dependent with `x^2`,
//! and *endo-commutative* when `x^2 y^2 = (xy)^2` for all `x, y`. A
//! 3-dimensional curled algebra has a basis `{e, f, g}` with
//! `e^2 = ie, f^2 = jf, g^2 = kg` for bits `(i, j, k)` and six free
//! off-diagonal products `A = ef, B = eg, C = fe, D = fg, E = ge, F = gf`.
//!
//! The crate decides endo-commutativity three independent ways:
//!
//! * [`oracle::is_ec_bruteforce`]: the definition, over every pair of elements;
//! * [`oracle::is_ec_polynomial`]: vanishing of the generic expansion of
//!   `(xy)^2 - x^2y^2` as a polynomial in the coordinates of `x` and `y`;
//! * [`conditions::is_ec_by_theorem`]: 21 element identities among the
//!   table parameters.
//!
//! and verifies their agreement by enumeration over small prime fields.

pub mod algebra;
pub mod cli;
pub mod conditions;
pub mod field;
pub mod formal;
pub mod oracle;
pub mod polynomial;
pub mod selfcheck;
