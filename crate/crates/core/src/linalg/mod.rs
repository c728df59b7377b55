//! Exact dense linear algebra over Q and over Q[λ].

pub mod elimination;
pub mod matrix;
pub mod smith;

pub use elimination::{
    bareiss_rank, determinant, kernel_basis, left_kernel_basis, rank, rank_over_function_field,
    rref, same_span, span_basis,
};
pub use matrix::{Matrix, PolyMatrix, QMatrix};
pub use smith::smith_normal_form;
