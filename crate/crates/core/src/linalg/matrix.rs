//! Dense matrices over a [`Field`] with exact Gaussian elimination.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{inv_mod, Field, Scalar};
use crate::error::{Error, Result};

/// Expands `$body` once per elimination backend, with `$b` bound to it.
macro_rules! dispatch {
    ($field:expr, $b:ident => $body:expr) => {
        match $field {
            Field::Prime(p) => {
                let $b = &ModP(p);
                $body
            }
            Field::Rationals => {
                let $b = &Rat;
                $body
            }
        }
    };
}

/// Row-major dense matrix. All entries share `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                debug_assert_eq!(v.field(), field);
                data.push(v);
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from row vectors; every row must have the same length
    /// and every entry must lie in `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::FieldMismatch(field, v.field()));
                }
                data.push(v);
            }
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    /// Integer entries, reduced into `field`.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    /// A single column.
    pub fn column_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |r, _| v[r].clone())
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    #[track_caller]
    pub fn add(&self, other: &Matrix) -> Matrix {
        self.assert_same_shape(other);
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    #[track_caller]
    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.assert_same_shape(other);
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `self += s * other`.
    #[track_caller]
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        self.assert_same_shape(other);
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }

    #[track_caller]
    fn assert_same_shape(&self, other: &Matrix) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
    }

    /// Matrix product; panics on shape or field mismatch.
    #[track_caller]
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let (n, k, m) = (self.rows, self.cols, other.cols);
        match self.field {
            Field::Prime(p) => {
                let a = self.residues();
                let b = other.residues();
                let mut out = vec![0u64; n * m];
                for i in 0..n {
                    let orow = &mut out[i * m..(i + 1) * m];
                    for t in 0..k {
                        let x = a[i * k + t];
                        if x == 0 {
                            continue;
                        }
                        let brow = &b[t * m..(t + 1) * m];
                        for (o, &y) in orow.iter_mut().zip(brow) {
                            *o = (*o + x * y) % p;
                        }
                    }
                }
                Matrix::from_residues(p, n, m, out)
            }
            Field::Rationals => {
                let mut out = Matrix::zeros(self.field, n, m);
                for i in 0..n {
                    for t in 0..k {
                        let x = self.get(i, t);
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..m {
                            let y = other.get(t, j);
                            if !y.is_zero() {
                                let idx = i * m + j;
                                out.data[idx] = &out.data[idx] + &(x * y);
                            }
                        }
                    }
                }
                out
            }
        }
    }

    #[track_caller]
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product: `(A⊗B)[(i1,i2),(j1,j2)] = A[i1,j1]·B[i2,j2]`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * r2 + i2, j1 * c2 + j2, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `self` on top of `other`.
    #[track_caller]
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    #[track_caller]
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows, self.cols);
        Matrix::from_fn(self.field, r + other.rows, c + other.cols, |i, j| {
            match (i < r, j < c) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - r, j - c).clone(),
                _ => self.field.zero(),
            }
        })
    }

    /// Columns `cols` of `self`, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// Vertically stacks a list of blocks sharing a column count.
    pub fn stack_rows(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "column mismatch in stack_rows");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix { field, rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        dispatch!(self.field, b => {
            let mut data = b.load(self);
            rref(b, &mut data, self.rows, self.cols, self.cols).len()
        })
    }

    /// Basis of the right nullspace, as the columns of the returned matrix.
    pub fn kernel(&self) -> Matrix {
        let cols = self.cols;
        let basis = dispatch!(self.field, b => {
            let mut data = b.load(self);
            let pivots = rref(b, &mut data, self.rows, cols, cols);
            let mut is_pivot = vec![None; cols];
            for (row, &c) in pivots.iter().enumerate() {
                is_pivot[c] = Some(row);
            }
            let mut out = Vec::new();
            for free in (0..cols).filter(|&c| is_pivot[c].is_none()) {
                let mut v = vec![b.zero(); cols];
                v[free] = b.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    let x = &data[row * cols + free];
                    if !b.is_zero(x) {
                        v[pc] = b.neg(x);
                    }
                }
                out.push(v.into_iter().map(|e| b.store(e)).collect::<Vec<_>>());
            }
            out
        });
        Matrix::from_columns(self.field, cols, &basis)
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let out = dispatch!(self.field, b => {
            let mut data = b.load(&aug);
            let pivots = rref(b, &mut data, n, 2 * n, n);
            if pivots.len() < n {
                Err(pivots.len())
            } else {
                let mut inv = Vec::with_capacity(n * n);
                for r in 0..n {
                    for c in 0..n {
                        inv.push(b.store(data[r * 2 * n + n + c].clone()));
                    }
                }
                Ok(inv)
            }
        });
        match out {
            Ok(data) => Ok(Matrix {
                field: self.field,
                rows: n,
                cols: n,
                data,
            }),
            Err(rank) => Err(Error::NotInvertible { rank, dim: n }),
        }
    }

    /// One solution `X` of `self · X = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let (n, k) = (self.cols, rhs.cols);
        let aug = self.hstack(rhs);
        let width = n + k;
        let sol = dispatch!(self.field, b => {
            let mut data = b.load(&aug);
            let pivots = rref(b, &mut data, self.rows, width, n);
            let rank = pivots.len();
            let consistent = (rank..self.rows)
                .all(|r| (n..width).all(|c| b.is_zero(&data[r * width + c])));
            if !consistent {
                return None;
            }
            let mut x = vec![b.zero(); n * k];
            for (row, &pc) in pivots.iter().enumerate() {
                for j in 0..k {
                    x[pc * k + j] = data[row * width + n + j].clone();
                }
            }
            Some(x.into_iter().map(|e| b.store(e)).collect::<Vec<_>>())
        })?;
        Some(Matrix {
            field: self.field,
            rows: n,
            cols: k,
            data: sol,
        })
    }

    /// Solves `self · x = v` for a single vector.
    pub fn solve_vec(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solve(&Matrix::column_vector(self.field, v))
            .map(|m| m.column(0))
    }

    fn residues(&self) -> Vec<u64> {
        self.data
            .iter()
            .map(|s| s.residue().expect("prime-field entry"))
            .collect()
    }

    fn from_residues(p: u64, rows: usize, cols: usize, v: Vec<u64>) -> Matrix {
        Matrix {
            field: Field::Prime(p),
            rows,
            cols,
            data: v
                .into_iter()
                .map(|value| Scalar::Mod { value, modulus: p })
                .collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Arithmetic used by elimination, specialised per field so the `GF(p)` path
/// runs on bare `u64`s.
trait Backend {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a - f·b`
    fn sub_mul(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn load(&self, m: &Matrix) -> Vec<Self::E>;
    fn store(&self, e: Self::E) -> Scalar;
}

struct ModP(u64);

impl Backend for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        (a + (self.0 - f) * b) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
    fn load(&self, m: &Matrix) -> Vec<u64> {
        m.residues()
    }
    fn store(&self, e: u64) -> Scalar {
        Scalar::Mod {
            value: e,
            modulus: self.0,
        }
    }
}

struct Rat;

impl Backend for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        a - f * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn load(&self, m: &Matrix) -> Vec<BigRational> {
        m.data
            .iter()
            .map(|s| s.as_rational().expect("rational entry").clone())
            .collect()
    }
    fn store(&self, e: BigRational) -> Scalar {
        Scalar::Rat(Box::new(e))
    }
}

/// In-place reduced row echelon form, pivoting only within the first
/// `pivot_cols` columns (first nonzero entry wins). Returns pivot columns.
fn rref<B: Backend>(
    b: &B,
    data: &mut [B::E],
    rows: usize,
    cols: usize,
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !b.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = b.inv(&data[r * cols + c]);
        for j in c..cols {
            let v = &data[r * cols + j];
            if !b.is_zero(v) {
                data[r * cols + j] = b.mul(v, &inv);
            }
        }
        let pivot_row: Vec<B::E> = data[r * cols..(r + 1) * cols].to_vec();
        let nz: Vec<usize> = (c..cols).filter(|&j| !b.is_zero(&pivot_row[j])).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c].clone();
            if b.is_zero(&f) {
                continue;
            }
            for &j in &nz {
                let idx = i * cols + j;
                data[idx] = b.sub_mul(&data[idx], &f, &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
