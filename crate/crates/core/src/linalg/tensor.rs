//! Row-major identification of `V1 ⊗ … ⊗ Vk` with `k^{d1·…·dk}`, plus the
//! handful of tensor manipulations the algebra layer needs.

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Mixed-radix index over `dims`, last factor varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl TensorIndex {
    pub fn new(dims: &[usize]) -> TensorIndex {
        let mut strides = vec![1; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        TensorIndex {
            dims: dims.to_vec(),
            strides,
            len: dims.iter().product(),
        }
    }

    /// `n^{⊗arity}`.
    pub fn power(n: usize, arity: usize) -> TensorIndex {
        TensorIndex::new(&vec![n; arity])
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total number of flat positions.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[track_caller]
    pub fn flat(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.dims.len(), "arity mismatch");
        multi
            .iter()
            .zip(&self.dims)
            .zip(&self.strides)
            .map(|((&i, &d), &s)| {
                assert!(i < d, "index {i} out of range {d}");
                i * s
            })
            .sum()
    }

    pub fn unflat(&self, mut x: usize) -> Vec<usize> {
        debug_assert!(x < self.len);
        self.strides
            .iter()
            .map(|&s| {
                let i = x / s;
                x %= s;
                i
            })
            .collect()
    }
}

/// `a ⊗ b` for coefficient vectors.
pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Applies `map` (rows × `dims[pos]`) to tensor factor `pos` of `x`.
/// The output lives over `dims` with `dims[pos]` replaced by `map.rows()`.
pub fn apply_at(x: &[Scalar], dims: &[usize], pos: usize, map: &Matrix) -> Vec<Scalar> {
    assert_eq!(map.cols(), dims[pos], "map does not fit factor {pos}");
    let field = map.field();
    let outer: usize = dims[..pos].iter().product();
    let inner: usize = dims[pos + 1..].iter().product();
    let (din, dout) = (dims[pos], map.rows());
    assert_eq!(x.len(), outer * din * inner, "tensor length mismatch");
    let mut out = vec![field.zero(); outer * dout * inner];
    // Sparse columns of `map`.
    let columns: Vec<Vec<(usize, &Scalar)>> = (0..din)
        .map(|c| {
            (0..dout)
                .filter_map(|r| {
                    let v = map.get(r, c);
                    (!v.is_zero()).then_some((r, v))
                })
                .collect()
        })
        .collect();
    for o in 0..outer {
        for i in 0..din {
            for t in 0..inner {
                let v = &x[(o * din + i) * inner + t];
                if v.is_zero() {
                    continue;
                }
                for &(r, m) in &columns[i] {
                    let idx = (o * dout + r) * inner + t;
                    out[idx] = &out[idx] + &(v * m);
                }
            }
        }
    }
    out
}

/// Reorders tensor factors: output factor `j` is input factor `perm[j]`.
pub fn permute(x: &[Scalar], dims: &[usize], perm: &[usize]) -> Vec<Scalar> {
    assert_eq!(perm.len(), dims.len());
    let src = TensorIndex::new(dims);
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let dst = TensorIndex::new(&out_dims);
    let Some(zero) = x.first().map(|v| v.field().zero()) else {
        return Vec::new();
    };
    let mut out = vec![zero; x.len()];
    let mut multi_out = vec![0; dims.len()];
    for (flat, v) in x.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let multi = src.unflat(flat);
        for (j, &p) in perm.iter().enumerate() {
            multi_out[j] = multi[p];
        }
        out[dst.flat(&multi_out)] = v.clone();
    }
    out
}

/// The linear map realising [`permute`] as a matrix.
pub fn permutation_matrix(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    let src = TensorIndex::new(dims);
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let dst = TensorIndex::new(&out_dims);
    let mut m = Matrix::zeros(field, src.len(), src.len());
    let mut multi_out = vec![0; dims.len()];
    for flat in 0..src.len() {
        let multi = src.unflat(flat);
        for (j, &p) in perm.iter().enumerate() {
            multi_out[j] = multi[p];
        }
        m.set(dst.flat(&multi_out), flat, field.one());
    }
    m
}

/// Iterates over the nonzero entries of `x` as `(flat index, value)`.
pub fn nonzeros(x: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    x.iter().enumerate().filter(|(_, v)| !v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exhaustive_roundtrip_small_dims() {
        for arity in [2, 3] {
            for d0 in 1..=4 {
                for d1 in 1..=4 {
                    for d2 in 1..=4 {
                        let dims: Vec<usize> = [d0, d1, d2][..arity].to_vec();
                        let idx = TensorIndex::new(&dims);
                        for x in 0..idx.len() {
                            assert_eq!(idx.flat(&idx.unflat(x)), x);
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip_up_to_16(dims in prop::collection::vec(1usize..=16, 2..=3), seed in 0usize..1_000_000) {
            let idx = TensorIndex::new(&dims);
            let x = seed % idx.len();
            prop_assert_eq!(idx.flat(&idx.unflat(x)), x);
        }
    }

    #[test]
    fn row_major_order() {
        let idx = TensorIndex::new(&[2, 3]);
        assert_eq!(idx.flat(&[1, 0]), 3);
        assert_eq!(idx.unflat(5), vec![1, 2]);
    }

    #[test]
    fn apply_at_matches_kron() {
        let f = Field::Prime(13);
        let a = Matrix::from_i64(f, &[&[1, 2], &[3, 4], &[5, 6]]);
        let x: Vec<Scalar> = (0..4).map(|i| f.from_i64(i + 1)).collect();
        let id = Matrix::identity(f, 2);
        let via_kron = id.kron(&a).unwrap().mul_vec(&x);
        assert_eq!(apply_at(&x, &[2, 2], 1, &a), via_kron);
        let via_kron = a.kron(&id).unwrap().mul_vec(&x);
        assert_eq!(apply_at(&x, &[2, 2], 0, &a), via_kron);
    }

    #[test]
    fn permute_matches_matrix() {
        let f = Field::Prime(13);
        let dims = [2, 3, 2];
        let x: Vec<Scalar> = (0..12).map(|i| f.from_i64(i)).collect();
        let perm = [2, 0, 1];
        let p = permutation_matrix(f, &dims, &perm);
        assert_eq!(permute(&x, &dims, &perm), p.mul_vec(&x));
    }
}
