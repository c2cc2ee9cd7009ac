//! Three-dimensional algebras: elements, the curled multiplication table,
//! curledness checks, and basis changes through general structure constants.

mod element;
mod table;
mod tensor;

use thiserror::Error;

use crate::field::FieldError;

pub(crate) use element::minors_vanish;
pub use element::{all_elements, linearly_dependent, Basis, Element};
pub use table::{product, square, CurledTable, CurledType, Param};
pub use tensor::{
    change_of_basis, from_tensor, normalize_diagonal, to_tensor, Matrix3, StructureTensor,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("type bit must be 0 or 1, got {0}")]
    InvalidTypeBit(i64),
    #[error("{0}^2 is not 0 or {0}; the table is not in curled normal form")]
    NotNormalForm(char),
    #[error("change-of-basis matrix is singular")]
    SingularMatrix,
}
