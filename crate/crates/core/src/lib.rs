pub mod assoc;
pub mod error;
pub mod harness;
pub mod leibniz;
pub mod linalg;
pub mod rings;
pub mod scalar;
pub mod steinberg;

pub use assoc::AssocAlgebra;
pub use error::{Error, Result};
pub use scalar::{Scalar, ScalarDomain};
