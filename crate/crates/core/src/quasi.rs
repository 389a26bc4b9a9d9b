//! Quasibialgebras and quasi-Hopf algebras by structure constants, their
//! axiom verifiers, and the opposite/coopposite/tensor constructions.
//!
//! Conventions: `Δ` is an `n² × n` matrix whose column `h` is `Δ(e_h)` in the
//! row-major basis `e_i ⊗ e_j`; `ε` is a `1 × n` row; the associator `φ` and
//! its inverse are vectors in `H^{⊗3}`; `S` is an `n × n` matrix acting on
//! columns. Quasi-coassociativity reads `(id⊗Δ)Δ(h)·φ = φ·(Δ⊗id)Δ(h)`.

use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{apply_at, kron_vec, nonzeros, permutation_matrix, permute, Field, Matrix, Scalar, TensorIndex};
use crate::report::{compare, AxiomReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBialgebra {
    alg: Arc<FinAlgebra>,
    comul: Matrix,
    counit: Matrix,
    assoc: Vec<Scalar>,
    assoc_inv: Vec<Scalar>,
}

impl QuasiBialgebra {
    /// Checks shapes and computes `φ⁻¹` in `H^{⊗3}`. A supplied inverse must
    /// agree with the computed one.
    pub fn new(
        alg: Arc<FinAlgebra>,
        comul: Matrix,
        counit: Matrix,
        assoc: Vec<Scalar>,
        assoc_inv: Option<Vec<Scalar>>,
    ) -> Result<QuasiBialgebra> {
        let n = alg.dim();
        let field = alg.field();
        if (comul.rows(), comul.cols()) != (n * n, n) {
            return Err(Error::Dimension(format!("comultiplication must be {}x{n}", n * n)));
        }
        if (counit.rows(), counit.cols()) != (1, n) {
            return Err(Error::Dimension(format!("counit must be 1x{n}")));
        }
        if assoc.len() != n * n * n {
            return Err(Error::Dimension(format!("associator must have {} entries", n * n * n)));
        }
        for m in [&comul, &counit] {
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
        }
        if let Some(bad) = assoc.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        let computed = tensor_inverse(&alg, 3, &assoc)
            .ok_or_else(|| Error::Invalid("associator is not invertible in H⊗H⊗H".into()))?;
        if let Some(given) = assoc_inv {
            if given != computed {
                return Err(Error::Invalid(
                    "supplied inverse associator does not match the computed inverse".into(),
                ));
            }
        }
        Ok(QuasiBialgebra {
            alg,
            comul,
            counit,
            assoc,
            assoc_inv: computed,
        })
    }

    pub fn alg(&self) -> &Arc<FinAlgebra> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn assoc(&self) -> &[Scalar] {
        &self.assoc
    }

    pub fn assoc_inv(&self) -> &[Scalar] {
        &self.assoc_inv
    }

    pub fn delta(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.comul.mul_vec(h)
    }

    pub fn epsilon(&self, h: &[Scalar]) -> Scalar {
        self.counit.mul_vec(h).pop().expect("1-row counit")
    }

    /// Whether `φ = 1 ⊗ 1 ⊗ 1`.
    pub fn has_trivial_associator(&self) -> bool {
        self.assoc == self.alg.unit_power(3)
    }
}

/// Inverse of `x` in `A^{⊗arity}`, if it exists.
pub fn tensor_inverse(alg: &FinAlgebra, arity: usize, x: &[Scalar]) -> Option<Vec<Scalar>> {
    let len = TensorIndex::power(alg.dim(), arity).len();
    let field = alg.field();
    let cols: Vec<Vec<Scalar>> = (0..len)
        .map(|j| {
            let mut e = vec![field.zero(); len];
            e[j] = field.one();
            alg.tensor_mul(arity, x, &e)
        })
        .collect();
    let left = Matrix::from_columns(field, len, &cols);
    let inv = left.invert().ok()?;
    let y = inv.mul_vec(&alg.unit_power(arity));
    (alg.tensor_mul(arity, &y, x) == alg.unit_power(arity)).then_some(y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHopfAlgebra {
    qb: QuasiBialgebra,
    antipode: Matrix,
    antipode_inv: Matrix,
    alpha: Vec<Scalar>,
    beta: Vec<Scalar>,
}

impl QuasiHopfAlgebra {
    /// `S` must be invertible; `S⁻¹` is cached.
    pub fn new(qb: QuasiBialgebra, antipode: Matrix, alpha: Vec<Scalar>, beta: Vec<Scalar>) -> Result<QuasiHopfAlgebra> {
        let n = qb.dim();
        if (antipode.rows(), antipode.cols()) != (n, n) || alpha.len() != n || beta.len() != n {
            return Err(Error::Dimension("antipode data has the wrong shape".into()));
        }
        let antipode_inv = antipode.invert().map_err(|e| match e {
            Error::NotInvertible { rank, dim } => {
                Error::Invalid(format!("antipode is not invertible (rank {rank} of {dim})"))
            }
            other => other,
        })?;
        Ok(QuasiHopfAlgebra {
            qb,
            antipode,
            antipode_inv,
            alpha,
            beta,
        })
    }

    /// Builds the quasi-Hopf structure with the given `S` and `α`, solving
    /// the (linear) quasiantipode conditions for `β`.
    pub fn with_solved_beta(qb: QuasiBialgebra, antipode: Matrix, alpha: Vec<Scalar>) -> Result<QuasiHopfAlgebra> {
        let beta = solve_beta(&qb, &antipode, &alpha)
            .ok_or_else(|| Error::Invalid("no β satisfies the quasiantipode conditions".into()))?;
        QuasiHopfAlgebra::new(qb, antipode, alpha, beta)
    }

    pub fn qb(&self) -> &QuasiBialgebra {
        &self.qb
    }

    pub fn alg(&self) -> &Arc<FinAlgebra> {
        self.qb.alg()
    }

    pub fn dim(&self) -> usize {
        self.qb.dim()
    }

    pub fn field(&self) -> Field {
        self.qb.field()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn alpha(&self) -> &[Scalar] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Scalar] {
        &self.beta
    }

    pub fn s(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(h)
    }

    pub fn s_inv(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.mul_vec(h)
    }

    /// Flattens into raw structure-constant data.
    pub fn to_parts(&self) -> QuasiHopfParts {
        let alg = self.alg();
        QuasiHopfParts {
            field: self.field(),
            dim: self.dim(),
            mult: alg.structure_constants().to_vec(),
            unit: alg.unit().to_vec(),
            comul: self.qb.comul.entries().to_vec(),
            counit: self.qb.counit.entries().to_vec(),
            assoc: self.qb.assoc.clone(),
            assoc_inv: Some(self.qb.assoc_inv.clone()),
            antipode: self.antipode.entries().to_vec(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }
}

/// Raw structure constants of a quasi-Hopf algebra, all flattened row-major:
/// `mult[i][j][k]`, `comul[i][j][h]` (coefficient of `e_i⊗e_j` in `Δ(e_h)`),
/// `assoc[i][j][k]`, `antipode[i][j]` (coefficient of `e_i` in `S(e_j)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHopfParts {
    pub field: Field,
    pub dim: usize,
    pub mult: Vec<Scalar>,
    pub unit: Vec<Scalar>,
    pub comul: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    pub assoc: Vec<Scalar>,
    pub assoc_inv: Option<Vec<Scalar>>,
    pub antipode: Vec<Scalar>,
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
}

impl QuasiHopfParts {
    pub fn build(&self) -> Result<QuasiHopfAlgebra> {
        let n = self.dim;
        let f = self.field;
        let shape = |v: &[Scalar], len: usize, what: &str| {
            if v.len() == len {
                Ok(())
            } else {
                Err(Error::Dimension(format!("{what} has {} entries, expected {len}", v.len())))
            }
        };
        shape(&self.comul, n * n * n, "comul")?;
        shape(&self.counit, n, "counit")?;
        shape(&self.antipode, n * n, "antipode")?;
        let alg = Arc::new(FinAlgebra::new(f, n, self.mult.clone(), self.unit.clone())?);
        let comul = Matrix::from_fn(f, n * n, n, |r, c| self.comul[r * n + c].clone());
        let counit = Matrix::from_fn(f, 1, n, |_, c| self.counit[c].clone());
        let qb = QuasiBialgebra::new(alg, comul, counit, self.assoc.clone(), self.assoc_inv.clone())?;
        let antipode = Matrix::from_fn(f, n, n, |r, c| self.antipode[r * n + c].clone());
        QuasiHopfAlgebra::new(qb, antipode, self.alpha.clone(), self.beta.clone())
    }

    /// Every raw constant as `(component, flat index)`, in a fixed order.
    pub fn slots(&self) -> Vec<(&'static str, usize)> {
        let mut out = Vec::new();
        for (name, len) in [
            ("mult", self.mult.len()),
            ("unit", self.unit.len()),
            ("comul", self.comul.len()),
            ("counit", self.counit.len()),
            ("assoc", self.assoc.len()),
            ("antipode", self.antipode.len()),
            ("alpha", self.alpha.len()),
            ("beta", self.beta.len()),
        ] {
            out.extend((0..len).map(|i| (name, i)));
        }
        out
    }

    /// Adds one to the named constant. The inverse associator is dropped so
    /// it gets recomputed.
    pub fn bump(&mut self, component: &str, index: usize) {
        let one = self.field.one();
        let slot = match component {
            "mult" => &mut self.mult[index],
            "unit" => &mut self.unit[index],
            "comul" => &mut self.comul[index],
            "counit" => &mut self.counit[index],
            "assoc" => &mut self.assoc[index],
            "antipode" => &mut self.antipode[index],
            "alpha" => &mut self.alpha[index],
            "beta" => &mut self.beta[index],
            other => panic!("unknown component {other}"),
        };
        *slot = &*slot + &one;
        self.assoc_inv = None;
    }
}

fn first_mismatch(lhs: &[Scalar], rhs: &[Scalar], idx: &TensorIndex) -> Option<crate::report::Witness> {
    let at = lhs.iter().zip(rhs).position(|(a, b)| a != b)?;
    compare(lhs, rhs, &idx.unflat(at))
}

/// Counit, multiplicativity, quasi-coassociativity, pentagon and
/// associator-counit conditions, over all basis elements.
pub fn verify_quasibialgebra(q: &QuasiBialgebra) -> AxiomReport {
    let a = q.alg();
    let n = q.dim();
    let mut r = AxiomReport::new("quasibialgebra");
    let eps = q.counit();

    let mut left = None;
    let mut right = None;
    for h in 0..n {
        let d = q.delta(&a.basis(h));
        let e = a.basis(h);
        if left.is_none() {
            left = compare(&apply_at(&d, &[n, n], 0, eps), &e, &[h]);
        }
        if right.is_none() {
            right = compare(&apply_at(&d, &[n, n], 1, eps), &e, &[h]);
        }
    }
    r.record("counit_left", left);
    r.record("counit_right", right);

    let mut dmul = None;
    let mut emul = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (a.basis(i), a.basis(j));
            let prod = a.mul(&ei, &ej);
            if dmul.is_none() {
                dmul = compare(&q.delta(&prod), &a.tensor_mul(2, &q.delta(&ei), &q.delta(&ej)), &[i, j]);
            }
            if emul.is_none() {
                let lhs = q.epsilon(&prod);
                let rhs = &q.epsilon(&ei) * &q.epsilon(&ej);
                emul = compare(&[lhs], &[rhs], &[i, j]);
            }
            if dmul.is_some() && emul.is_some() {
                break 'pairs;
            }
        }
    }
    r.record("comul_multiplicative", dmul);
    r.record("comul_unital", compare(&q.delta(a.unit()), &a.unit_power(2), &[]));
    r.record("counit_multiplicative", emul);
    r.record("counit_unital", compare(&[q.epsilon(a.unit())], &[q.field().one()], &[]));

    let one3 = a.unit_power(3);
    let inv_ok = compare(&a.tensor_mul(3, q.assoc(), q.assoc_inv()), &one3, &[])
        .or_else(|| compare(&a.tensor_mul(3, q.assoc_inv(), q.assoc()), &one3, &[]));
    r.record("associator_invertible", inv_ok);

    let mut coass = None;
    for h in 0..n {
        let d = q.delta(&a.basis(h));
        let right_nested = apply_at(&d, &[n, n], 1, q.comul());
        let left_nested = apply_at(&d, &[n, n], 0, q.comul());
        let lhs = a.tensor_mul(3, &right_nested, q.assoc());
        let rhs = a.tensor_mul(3, q.assoc(), &left_nested);
        if let Some(w) = compare(&lhs, &rhs, &[h]) {
            coass = Some(w);
            break;
        }
    }
    r.record("quasi_coassociativity", coass);

    r.record("pentagon", pentagon_residual(q));

    let mid = apply_at(q.assoc(), &[n, n, n], 1, eps);
    r.record("associator_counit", first_mismatch(&mid, &a.unit_power(2), &TensorIndex::power(n, 2)));
    r
}

/// `(id⊗id⊗Δ)(φ)·(Δ⊗id⊗id)(φ)` against `(1⊗φ)·(id⊗Δ⊗id)(φ)·(φ⊗1)`.
fn pentagon_residual(q: &QuasiBialgebra) -> Option<crate::report::Witness> {
    let a = q.alg();
    let n = q.dim();
    let phi = q.assoc();
    let dims = [n, n, n];
    let lhs = a.tensor_mul(
        4,
        &apply_at(phi, &dims, 2, q.comul()),
        &apply_at(phi, &dims, 0, q.comul()),
    );
    let one_phi = kron_vec(a.unit(), phi);
    let phi_one = kron_vec(phi, a.unit());
    let mid = a.tensor_mul(4, &one_phi, &apply_at(phi, &dims, 1, q.comul()));
    let rhs = a.tensor_mul(4, &mid, &phi_one);
    first_mismatch(&lhs, &rhs, &TensorIndex::power(n, 4))
}

/// Antimultiplicativity of `S` and the four quasiantipode identities:
/// `S(h₁)αh₂ = ε(h)α`, `h₁βS(h₂) = ε(h)β`, `φ¹βS(φ²)αφ³ = 1`,
/// `S(φ⁻¹)αφ⁻²βS(φ⁻³) = 1`.
pub fn verify_quasiantipode(h: &QuasiHopfAlgebra) -> AxiomReport {
    let q = h.qb();
    let a = q.alg();
    let n = q.dim();
    let mut r = AxiomReport::new("quasiantipode");
    let s_basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.s(&a.basis(i))).collect();

    let mut anti = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            let lhs = h.s(&a.mul(&a.basis(i), &a.basis(j)));
            let rhs = a.mul(&s_basis[j], &s_basis[i]);
            if let Some(w) = compare(&lhs, &rhs, &[i, j]) {
                anti = Some(w);
                break 'pairs;
            }
        }
    }
    r.record("antipode_antimultiplicative", anti);
    r.record("antipode_unital", compare(&h.s(a.unit()), a.unit(), &[]));

    let idx2 = TensorIndex::power(n, 2);
    let mut alpha_id = None;
    let mut beta_id = None;
    for x in 0..n {
        let d = q.delta(&a.basis(x));
        let mut sa = a.zero();
        let mut bs = a.zero();
        for (flat, c) in nonzeros(&d) {
            let ij = idx2.unflat(flat);
            let t = a.mul_all(&[&s_basis[ij[0]], h.alpha(), &a.basis(ij[1])]);
            let u = a.mul_all(&[&a.basis(ij[0]), h.beta(), &s_basis[ij[1]]]);
            for k in 0..n {
                sa[k] = &sa[k] + &(c * &t[k]);
                bs[k] = &bs[k] + &(c * &u[k]);
            }
        }
        let e = q.epsilon(&a.basis(x));
        let ea: Vec<Scalar> = h.alpha().iter().map(|v| &e * v).collect();
        let eb: Vec<Scalar> = h.beta().iter().map(|v| &e * v).collect();
        if alpha_id.is_none() {
            alpha_id = compare(&sa, &ea, &[x]);
        }
        if beta_id.is_none() {
            beta_id = compare(&bs, &eb, &[x]);
        }
    }
    r.record("alpha_identity", alpha_id);
    r.record("beta_identity", beta_id);

    let idx3 = TensorIndex::power(n, 3);
    let mut phi_sum = a.zero();
    for (flat, c) in nonzeros(q.assoc()) {
        let t = idx3.unflat(flat);
        let p = a.mul_all(&[&a.basis(t[0]), h.beta(), &s_basis[t[1]], h.alpha(), &a.basis(t[2])]);
        for k in 0..n {
            phi_sum[k] = &phi_sum[k] + &(c * &p[k]);
        }
    }
    r.record("associator_beta_alpha", compare(&phi_sum, a.unit(), &[]));

    let mut inv_sum = a.zero();
    for (flat, c) in nonzeros(q.assoc_inv()) {
        let t = idx3.unflat(flat);
        let p = a.mul_all(&[&s_basis[t[0]], h.alpha(), &a.basis(t[1]), h.beta(), &s_basis[t[2]]]);
        for k in 0..n {
            inv_sum[k] = &inv_sum[k] + &(c * &p[k]);
        }
    }
    r.record("inverse_associator_alpha_beta", compare(&inv_sum, a.unit(), &[]));
    r
}

/// All three verifiers (algebra, quasibialgebra, quasiantipode).
pub fn verify_all(h: &QuasiHopfAlgebra) -> AxiomReport {
    let mut r = crate::algebra::verify_algebra(h.alg());
    r.subject = "quasi-Hopf algebra".into();
    r.extend(verify_quasibialgebra(h.qb()));
    r.extend(verify_quasiantipode(h));
    r
}

/// Solves the quasiantipode conditions, which are linear in `β` once `S` and
/// `α` are fixed.
pub fn solve_beta(q: &QuasiBialgebra, antipode: &Matrix, alpha: &[Scalar]) -> Option<Vec<Scalar>> {
    let a = q.alg();
    let n = q.dim();
    let f = q.field();
    let s_basis: Vec<Vec<Scalar>> = (0..n).map(|i| antipode.mul_vec(&a.basis(i))).collect();
    let idx2 = TensorIndex::power(n, 2);
    let idx3 = TensorIndex::power(n, 3);
    let mut blocks: Vec<Matrix> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    // h₁ β S(h₂) - ε(h) β = 0 for each basis h.
    for x in 0..n {
        let d = q.delta(&a.basis(x));
        let e = q.epsilon(&a.basis(x));
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|b| {
                let beta = a.basis(b);
                let mut acc: Vec<Scalar> = beta.iter().map(|v| -(&e * v)).collect();
                for (flat, c) in nonzeros(&d) {
                    let ij = idx2.unflat(flat);
                    let p = a.mul_all(&[&a.basis(ij[0]), &beta, &s_basis[ij[1]]]);
                    for k in 0..n {
                        acc[k] = &acc[k] + &(c * &p[k]);
                    }
                }
                acc
            })
            .collect();
        blocks.push(Matrix::from_columns(f, n, &cols));
        rhs.extend(a.zero());
    }
    let phi_cols: Vec<Vec<Scalar>> = (0..n)
        .map(|b| {
            let beta = a.basis(b);
            let mut acc = a.zero();
            for (flat, c) in nonzeros(q.assoc()) {
                let t = idx3.unflat(flat);
                let p = a.mul_all(&[&a.basis(t[0]), &beta, &s_basis[t[1]], alpha, &a.basis(t[2])]);
                for k in 0..n {
                    acc[k] = &acc[k] + &(c * &p[k]);
                }
            }
            acc
        })
        .collect();
    blocks.push(Matrix::from_columns(f, n, &phi_cols));
    rhs.extend(a.unit().iter().cloned());
    let inv_cols: Vec<Vec<Scalar>> = (0..n)
        .map(|b| {
            let beta = a.basis(b);
            let mut acc = a.zero();
            for (flat, c) in nonzeros(q.assoc_inv()) {
                let t = idx3.unflat(flat);
                let p = a.mul_all(&[&s_basis[t[0]], alpha, &a.basis(t[1]), &beta, &s_basis[t[2]]]);
                for k in 0..n {
                    acc[k] = &acc[k] + &(c * &p[k]);
                }
            }
            acc
        })
        .collect();
    blocks.push(Matrix::from_columns(f, n, &inv_cols));
    rhs.extend(a.unit().iter().cloned());
    let system = Matrix::stack_rows(f, n, &blocks);
    system.solve_vec(&rhs)
}

/// Which structure to reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Opposite multiplication, associator `φ⁻¹`.
    Op,
    /// Coopposite comultiplication, associator `(φ⁻¹)₃₂₁`.
    Cop,
    /// Both; associator `φ₃₂₁`.
    Bop,
}

/// `H^op`, `H^cop` or `H^bop` with the induced quasiantipode:
/// op uses `(S⁻¹, S⁻¹β, S⁻¹α)`, cop uses `(S⁻¹, S⁻¹α, S⁻¹β)`, and bop is op of cop.
pub fn op_cop_bop(h: &QuasiHopfAlgebra, variant: Variant) -> Result<QuasiHopfAlgebra> {
    match variant {
        Variant::Op => opposite(h),
        Variant::Cop => coopposite(h),
        Variant::Bop => opposite(&coopposite(h)?),
    }
}

fn opposite(h: &QuasiHopfAlgebra) -> Result<QuasiHopfAlgebra> {
    let q = h.qb();
    let qb = QuasiBialgebra::new(
        Arc::new(q.alg().opposite()),
        q.comul().clone(),
        q.counit().clone(),
        q.assoc_inv().to_vec(),
        Some(q.assoc().to_vec()),
    )?;
    let alpha = h.s_inv(h.beta());
    let beta = h.s_inv(h.alpha());
    QuasiHopfAlgebra::new(qb, h.antipode_inv().clone(), alpha, beta)
}

fn coopposite(h: &QuasiHopfAlgebra) -> Result<QuasiHopfAlgebra> {
    let q = h.qb();
    let n = q.dim();
    let flip = permutation_matrix(q.field(), &[n, n], &[1, 0]);
    let rev = [2, 1, 0];
    let qb = QuasiBialgebra::new(
        q.alg().clone(),
        flip.mul(q.comul()),
        q.counit().clone(),
        permute(q.assoc_inv(), &[n, n, n], &rev),
        Some(permute(q.assoc(), &[n, n, n], &rev)),
    )?;
    let alpha = h.s_inv(h.alpha());
    let beta = h.s_inv(h.beta());
    QuasiHopfAlgebra::new(qb, h.antipode_inv().clone(), alpha, beta)
}

/// `H ⊗ B` with factorwise structure and the interleaved associator
/// `φ¹⊗ψ¹⊗φ²⊗ψ²⊗φ³⊗ψ³`. Basis `e_i ⊗ f_j` sits at `i · dim B + j`.
pub fn tensor_qba(h: &QuasiBialgebra, b: &QuasiBialgebra) -> Result<QuasiBialgebra> {
    if h.field() != b.field() {
        return Err(Error::FieldMismatch(h.field(), b.field()));
    }
    let (n, m) = (h.dim(), b.dim());
    let alg = Arc::new(h.alg().tensor(b.alg())?);
    // Δ_H ⊗ Δ_B lands in H⊗H⊗B⊗B; reorder to (H⊗B)⊗(H⊗B).
    let regroup2 = permutation_matrix(h.field(), &[n, n, m, m], &[0, 2, 1, 3]);
    let comul = regroup2.mul(&h.comul().kron(b.comul())?);
    let counit = h.counit().kron(b.counit())?;
    let interleave = |x: &[Scalar], y: &[Scalar]| permute(&kron_vec(x, y), &[n, n, n, m, m, m], &[0, 3, 1, 4, 2, 5]);
    let assoc = interleave(h.assoc(), b.assoc());
    let assoc_inv = interleave(h.assoc_inv(), b.assoc_inv());
    QuasiBialgebra::new(alg, comul, counit, assoc, Some(assoc_inv))
}

/// Tensor product of quasi-Hopf algebras: `S = S_H ⊗ S_B`, `α = α_H ⊗ α_B`,
/// `β = β_H ⊗ β_B`.
pub fn tensor_quasi_hopf(h: &QuasiHopfAlgebra, b: &QuasiHopfAlgebra) -> Result<QuasiHopfAlgebra> {
    let qb = tensor_qba(h.qb(), b.qb())?;
    QuasiHopfAlgebra::new(
        qb,
        h.antipode().kron(b.antipode())?,
        kron_vec(h.alpha(), b.alpha()),
        kron_vec(h.beta(), b.beta()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{self, Cocycle3, GroupTable};

    fn f13() -> Field {
        Field::Prime(13)
    }

    #[test]
    fn group_algebra_is_ordinary_bialgebra() {
        let h = zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap();
        assert!(h.qb().has_trivial_associator());
        assert!(verify_quasibialgebra(h.qb()).passed());
        assert!(verify_quasiantipode(&h).passed());
    }

    #[test]
    fn fz2w_beta_and_verifiers() {
        let f = f13();
        let h = zoo::fz2w(f).unwrap();
        assert_eq!(h.alpha(), &[f.one(), f.one()]);
        assert_eq!(h.beta(), &[f.one(), f.from_i64(-1)]);
        assert!(verify_all(&h).passed());
    }

    #[test]
    fn non_cocycle_fails_pentagon() {
        let f = f13();
        let g = GroupTable::cyclic(2);
        let mut w = Cocycle3::trivial(&g, f);
        w.set(1, 1, 0, f.from_i64(-1));
        let qb = zoo::dual_group_quasibialgebra(&g, &w).unwrap();
        let r = verify_quasibialgebra(&qb);
        assert_eq!(r.status("pentagon"), Some(crate::report::Status::Fail));
        assert!(r.check("pentagon").unwrap().witness.as_ref().unwrap().tuple.len() == 4);
    }

    #[test]
    fn alpha_zero_fails_associator_conditions() {
        let h = zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap();
        let zero = h.alg().zero();
        let broken = QuasiHopfAlgebra::new(h.qb().clone(), h.antipode().clone(), zero, h.beta().to_vec()).unwrap();
        let r = verify_quasiantipode(&broken);
        assert_eq!(r.status("associator_beta_alpha"), Some(crate::report::Status::Fail));
        assert_eq!(r.status("inverse_associator_alpha_beta"), Some(crate::report::Status::Fail));
    }

    #[test]
    fn op_is_an_involution() {
        let h = zoo::fz4w(f13()).unwrap();
        let back = op_cop_bop(&op_cop_bop(&h, Variant::Op).unwrap(), Variant::Op).unwrap();
        assert_eq!(back, h);
        let back = op_cop_bop(&op_cop_bop(&h, Variant::Cop).unwrap(), Variant::Cop).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn variants_reverify() {
        for h in [zoo::fz2w(f13()).unwrap(), zoo::fz4w(f13()).unwrap(), zoo::group_algebra(&GroupTable::symmetric3(), f13()).unwrap()] {
            for v in [Variant::Op, Variant::Cop, Variant::Bop] {
                let x = op_cop_bop(&h, v).unwrap();
                let r = verify_all(&x);
                assert!(r.passed(), "{v:?}: {r}");
            }
        }
    }

    #[test]
    fn group_algebra_variants_agree_up_to_structure() {
        // kG is cocommutative with trivial associator, so cop and bop keep Δ,
        // and every variant keeps φ = 1.
        let h = zoo::group_algebra(&GroupTable::cyclic(4), f13()).unwrap();
        for v in [Variant::Op, Variant::Cop, Variant::Bop] {
            let x = op_cop_bop(&h, v).unwrap();
            assert_eq!(x.qb().comul(), h.qb().comul());
            assert!(x.qb().has_trivial_associator());
        }
        // Z/4 is abelian, so op keeps the multiplication too.
        assert_eq!(op_cop_bop(&h, Variant::Op).unwrap().alg(), h.alg());
    }

    #[test]
    fn tensor_with_ground_field_is_identity() {
        let h = zoo::fz2w(f13()).unwrap();
        let k = zoo::group_algebra(&GroupTable::cyclic(1), f13()).unwrap();
        let t = tensor_quasi_hopf(&h, &k).unwrap();
        assert_eq!(t, h);
    }

    #[test]
    fn tensor_product_reverifies() {
        let h = zoo::fz2w(f13()).unwrap();
        let b = zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap();
        let t = tensor_quasi_hopf(&h, &b).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(verify_all(&t).passed());
        assert!(!t.qb().has_trivial_associator());
        let bb = tensor_quasi_hopf(&b, &b).unwrap();
        assert!(bb.qb().has_trivial_associator());
    }

    #[test]
    fn inconsistent_inverse_associator_is_rejected() {
        let h = zoo::fz4w(f13()).unwrap();
        let mut parts = h.to_parts();
        parts.assoc_inv = Some(parts.assoc.clone());
        assert!(matches!(parts.build(), Err(Error::Invalid(_))));
    }

    #[test]
    fn singular_antipode_is_rejected() {
        let h = zoo::fz2w(f13()).unwrap();
        let mut parts = h.to_parts();
        parts.antipode = vec![f13().one(); 4];
        assert!(matches!(parts.build(), Err(Error::Invalid(_))));
    }

    #[test]
    fn every_single_entry_bump_is_caught() {
        for h in [zoo::fz2w(f13()).unwrap(), zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap()] {
            let parts = h.to_parts();
            for (component, index) in parts.slots() {
                let mut bad = parts.clone();
                bad.bump(component, index);
                let caught = bad.build().map_or(true, |b| !verify_all(&b).passed());
                assert!(caught, "{component}[{index}]");
            }
        }
    }

    #[test]
    fn parts_roundtrip() {
        for name in ["kS3", "fZ4w", "fZ2w_x_kZ2"] {
            let zoo::Instance::QuasiHopf(h) = zoo::instance(name, f13()).unwrap() else { unreachable!() };
            assert_eq!(h.to_parts().build().unwrap(), *h);
        }
    }
}
