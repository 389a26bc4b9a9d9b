//! Finite-dimensional associative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{nonzeros, Field, Matrix, Scalar, TensorIndex};
use crate::report::{compare, AxiomReport};

/// `e_i · e_j = Σ_k mult[i][j][k] e_k`, stored row-major in `mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    field: Field,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    /// Sparse `e_i e_j` at position `i * dim + j`.
    products: Vec<Vec<(usize, Scalar)>>,
}

impl FinAlgebra {
    pub fn new(field: Field, dim: usize, mult: Vec<Scalar>, unit: Vec<Scalar>) -> Result<FinAlgebra> {
        if dim == 0 {
            return Err(Error::Invalid("algebra of dimension 0".into()));
        }
        if mult.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::Dimension(format!(
                "algebra of dim {dim} needs {} structure constants and a unit of length {dim}",
                dim * dim * dim
            )));
        }
        if let Some(bad) = mult.iter().chain(&unit).find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let v = &mult[ij * dim + k];
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(FinAlgebra {
            field,
            dim,
            mult,
            unit,
            products,
        })
    }

    /// Builds an algebra from a closure giving `e_i e_j` as a vector.
    pub fn from_products(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<FinAlgebra> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::Dimension("product vector has wrong length".into()));
                }
                mult.extend(p);
            }
        }
        FinAlgebra::new(field, dim, mult, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.mult
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.tensor_mul(1, a, b)
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, factors: &[&[Scalar]]) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Product in `A^{⊗arity}` (componentwise multiplication of factors).
    pub fn tensor_mul(&self, arity: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let idx = TensorIndex::power(n, arity);
        assert_eq!(x.len(), idx.len(), "left factor has wrong length");
        assert_eq!(y.len(), idx.len(), "right factor has wrong length");
        let mut out = vec![self.field.zero(); idx.len()];
        let ys: Vec<(Vec<usize>, &Scalar)> =
            nonzeros(y).map(|(j, v)| (idx.unflat(j), v)).collect();
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        let mut next: Vec<(usize, Scalar)> = Vec::new();
        for (i, xv) in nonzeros(x) {
            let xi = idx.unflat(i);
            for (yj, yv) in &ys {
                terms.clear();
                terms.push((0, xv * yv));
                for t in 0..arity {
                    next.clear();
                    for (acc, c) in &terms {
                        for (k, v) in &self.products[xi[t] * n + yj[t]] {
                            next.push((acc * n + k, c * v));
                        }
                    }
                    std::mem::swap(&mut terms, &mut next);
                    if terms.is_empty() {
                        break;
                    }
                }
                for (k, c) in terms.drain(..) {
                    out[k] = &out[k] + &c;
                }
            }
        }
        out
    }

    /// `1 ⊗ … ⊗ 1` in `A^{⊗arity}`.
    pub fn unit_power(&self, arity: usize) -> Vec<Scalar> {
        let mut acc = vec![self.field.one()];
        for _ in 0..arity {
            acc = crate::linalg::kron_vec(&acc, &self.unit);
        }
        acc
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `A ⊗ B` with factorwise multiplication, basis `e_i ⊗ f_j` at `i * dim B + j`.
    pub fn tensor(&self, other: &FinAlgebra) -> Result<FinAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (n, m) = (self.dim, other.dim);
        let unit = crate::linalg::kron_vec(&self.unit, &other.unit);
        FinAlgebra::from_products(self.field, n * m, unit, |x, y| {
            let (i1, i2) = (x / m, x % m);
            let (j1, j2) = (y / m, y % m);
            crate::linalg::kron_vec(
                &self.mul(&self.basis(i1), &self.basis(j1)),
                &other.mul(&other.basis(i2), &other.basis(j2)),
            )
        })
    }

    /// The opposite algebra `a ·op b = b a`.
    pub fn opposite(&self) -> FinAlgebra {
        let n = self.dim;
        let mult = (0..n * n * n)
            .map(|x| {
                let (i, j, k) = (x / (n * n), (x / n) % n, x % n);
                self.structure_constant(j, i, k).clone()
            })
            .collect();
        FinAlgebra::new(self.field, n, mult, self.unit.clone()).expect("same shape")
    }

    /// Applies the linear map `f` (matrix in the standard basis) to `a`.
    pub fn apply(&self, f: &Matrix, a: &[Scalar]) -> Vec<Scalar> {
        f.mul_vec(a)
    }

    /// Replaces one structure constant; used to plant corrupted instances.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, v: Scalar) -> FinAlgebra {
        let mut mult = self.mult.clone();
        mult[(i * self.dim + j) * self.dim + k] = v;
        FinAlgebra::new(self.field, self.dim, mult, self.unit.clone()).expect("same shape")
    }
}

/// Associativity on all basis triples and the two-sided unit law.
pub fn verify_algebra(a: &FinAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new("algebra");
    let n = a.dim();
    let mut assoc = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let ij = a.mul(&a.basis(i), &a.basis(j));
            for k in 0..n {
                let jk = a.mul(&a.basis(j), &a.basis(k));
                let lhs = a.mul(&ij, &a.basis(k));
                let rhs = a.mul(&a.basis(i), &jk);
                if let Some(w) = compare(&lhs, &rhs, &[i, j, k]) {
                    assoc = Some(w);
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", assoc);
    let mut unit = None;
    for i in 0..n {
        let e = a.basis(i);
        let w = compare(&a.mul(a.unit(), &e), &e, &[i]).or_else(|| compare(&a.mul(&e, a.unit()), &e, &[i]));
        if w.is_some() {
            unit = w;
            break;
        }
    }
    report.record("unit", unit);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f13() -> Field {
        Field::Prime(13)
    }

    /// Group algebra of Z/n: e_i e_j = e_{i+j}.
    fn cyclic(n: usize) -> FinAlgebra {
        let f = f13();
        let mut unit = vec![f.zero(); n];
        unit[0] = f.one();
        FinAlgebra::from_products(f, n, unit, |i, j| {
            let mut v = vec![f.zero(); n];
            v[(i + j) % n] = f.one();
            v
        })
        .unwrap()
    }

    /// k^{Z/n}: orthogonal idempotents summing to 1.
    fn diagonal(n: usize) -> FinAlgebra {
        let f = f13();
        FinAlgebra::from_products(f, n, vec![f.one(); n], |i, j| {
            let mut v = vec![f.zero(); n];
            if i == j {
                v[i] = f.one();
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn zoo_style_algebras_verify() {
        assert!(verify_algebra(&cyclic(2)).passed());
        assert!(verify_algebra(&diagonal(4)).passed());
    }

    #[test]
    fn corrupted_identity_product_fails() {
        let a = cyclic(2).with_structure_constant(0, 0, 1, f13().one());
        let r = verify_algebra(&a);
        assert!(!r.passed());
        // e_0 is the unit, so the unit law catches the corruption at e_0.
        assert_eq!(r.check("unit").unwrap().witness.as_ref().unwrap().tuple, vec![0]);
        // (e_0 e_0) e_0 = e_0 (e_0 e_0) still holds; the first failing triple is (0,0,1).
        let w = &r.check("associativity").unwrap().witness.as_ref().unwrap().tuple;
        assert_eq!(w, &vec![0, 0, 1]);
    }

    #[test]
    fn tensor_power_product_matches_tensor_algebra() {
        let a = cyclic(2);
        let aa = a.tensor(&a).unwrap();
        let f = f13();
        let x: Vec<Scalar> = (0..4).map(|i| f.from_i64(i + 2)).collect();
        let y: Vec<Scalar> = (0..4).map(|i| f.from_i64(3 * i + 1)).collect();
        assert_eq!(a.tensor_mul(2, &x, &y), aa.mul(&x, &y));
        assert!(verify_algebra(&aa).passed());
    }

    #[test]
    fn opposite_reverses() {
        let a = cyclic(3);
        let op = a.opposite();
        let (x, y) = (a.basis(1), a.basis(2));
        assert_eq!(op.mul(&x, &y), a.mul(&y, &x));
        assert_eq!(op.opposite(), a);
    }

    #[test]
    fn mult_matrices() {
        let a = cyclic(2);
        let swap = Matrix::from_i64(f13(), &[&[0, 1], &[1, 0]]);
        assert_eq!(a.left_mult_matrix(&a.basis(1)), swap);
        let d = diagonal(4);
        let l = d.left_mult_matrix(&d.basis(2));
        assert_eq!(l.get(2, 2), &f13().one());
        assert_eq!(l.rank(), 1);
    }
}
