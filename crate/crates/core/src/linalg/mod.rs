//! Exact scalar arithmetic and the dense linear/tensor algebra kernel.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::Matrix;
pub use scalar::{Field, Scalar, RATIONAL_SAMPLE_RADIUS};
pub use tensor::{apply_at, kron_vec, nonzeros, permutation_matrix, permute, TensorIndex};
