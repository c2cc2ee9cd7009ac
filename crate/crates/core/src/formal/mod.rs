//! Symbolic expansion of `(xy)^2`, `x^2 y^2` and their difference for generic
//! `x = ae + bf + cg`, `y = ue + vf + wg` over a curled table whose type bits
//! `i, j, k` and parameters `A..F` stay symbolic.

mod eval;
mod expand;
mod parse;
pub mod reference;
mod scalar;
mod vector;
mod word;

use thiserror::Error;

use crate::field::FieldError;

pub use eval::{eval_formal, eval_to_polynomials, eval_word, CompiledVector};
pub use expand::{
    difference_expansion, generic_product, generic_square_x, generic_square_y, greek_poly,
    product_of_squares, square_of_product, GreekName,
};
pub use scalar::{Indeterminate, Monomial, ScalarPoly};
pub use vector::FormalVector;
pub use word::{symbol_product, FormalWord, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormalError {
    #[error("formal_multiply accepts single symbols only, found {0}")]
    PairOperand(FormalWord),
    #[error("unknown formal word {0:?}")]
    UnknownWord(String),
    #[error("parse error at byte {pos} of {input:?}: {message}")]
    Parse {
        input: String,
        pos: usize,
        message: String,
    },
    #[error("no value bound for {0}")]
    MissingBinding(Indeterminate),
    #[error(transparent)]
    Field(#[from] FieldError),
}
