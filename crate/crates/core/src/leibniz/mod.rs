//! Leibniz algebras, their low-degree homology, and universal central extensions.

mod algebra;
mod complex;
mod extension;
mod matrix;

pub use algebra::{LeibnizAlgebra, StructuralReport, Weight};
pub use complex::{
    apply_delta2, boundary, complex_sizes, delta2_pair, delta3_triple, homology_hl,
    homology_hl2_of, ComplexSizes, HomologyReport, TensorBlock, TensorComplex,
};
pub(crate) use extension::{assemble, tensor, TensorQuotient};
pub use extension::{uce, CentralExtensionModel};
pub use matrix::{
    build_gl, build_sl, check_elementary_relations, gl_index, off_diagonal, root_weight, SlAlgebra,
};
