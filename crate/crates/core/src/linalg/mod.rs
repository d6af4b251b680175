//! Exact linear algebra over prime fields, `Q` and `Z`.

mod dense;
mod echelon;
mod matrix;
mod quotient;
mod smith;
mod sparse;
mod subquotient;

pub use dense::{apply_columns, invert_columns};
pub use echelon::Submodule;
pub use matrix::ExactMatrix;
pub use quotient::QuotientModule;
pub use smith::{smith_decompose, smith_dense, SmithDecomposition, SmithForm};
pub use sparse::SparseVec;
pub use subquotient::{invariants_of_quotient, subquotient, subquotient_of, SubquotientInvariants};
