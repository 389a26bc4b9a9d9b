//! Concrete instances: group algebras, cocycle-twisted dual group algebras,
//! their tensor products, and the embeddings used by the theorem checks.

use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::format::InstanceFile;
use crate::hopfmod::{cofree_hopf_module, SubalgebraEmbedding};
use crate::linalg::{Field, Matrix, Scalar};
use crate::modrep::{BimoduleRep, ModuleRep, Side};
use crate::quasi::{tensor_quasi_hopf, verify_all, QuasiBialgebra, QuasiHopfAlgebra};
use crate::report::{AxiomReport, Witness};

/// Finite group as an explicit multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// `mult[a * n + b]` is the index of `ab`. Checks the group axioms.
    pub fn new(order: usize, mult: Vec<usize>) -> Result<GroupTable> {
        let n = order;
        if n == 0 || mult.len() != n * n || mult.iter().any(|&x| x >= n) {
            return Err(Error::Invalid("malformed group table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e * n + a] == a && mult[a * n + e] == a))
            .ok_or_else(|| Error::Invalid("group table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mult[a * n + b] == identity && mult[b * n + a] == identity)
                .ok_or_else(|| Error::Invalid(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a * n + b] * n + c] != mult[a * n + mult[b * n + c]] {
                        return Err(Error::Invalid(format!("group table not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            mult,
            inverse,
            identity,
        })
    }

    /// `Z/n` with `a ↦ g^a`.
    pub fn cyclic(n: usize) -> GroupTable {
        let mult = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        GroupTable::new(n, mult).expect("cyclic table")
    }

    /// `S_3` with permutations of {0,1,2} listed lexicographically; index 0
    /// is the identity. `(στ)(i) = σ(τ(i))`.
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let mut mult = Vec::with_capacity(36);
        for s in &perms {
            for t in &perms {
                mult.push(index([s[t[0]], s[t[1]], s[t[2]]]));
            }
        }
        GroupTable::new(6, mult).expect("S3 table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let closed = sub.contains(&self.identity)
            && sub.iter().all(|&a| sub.iter().all(|&b| sub.contains(&self.mul(a, b))));
        closed
            && (0..self.order)
                .all(|g| sub.iter().all(|&x| sub.contains(&self.mul(self.mul(g, x), self.inv(g)))))
    }

    /// `G/N` and the coset index of each element. Cosets are numbered by
    /// their smallest element.
    pub fn quotient(&self, normal: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::Invalid("subgroup is not normal".into()));
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset[g] == usize::MAX {
                for &x in normal {
                    coset[self.mul(g, x)] = reps.len();
                }
                reps.push(g);
            }
        }
        let m = reps.len();
        let mult = (0..m * m).map(|x| coset[self.mul(reps[x / m], reps[x % m])]).collect();
        Ok((GroupTable::new(m, mult)?, coset))
    }
}

/// Function `ω: G³ → k^×`, stored at `(a * n + b) * n + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    group: GroupTable,
    field: Field,
    values: Vec<Scalar>,
}

impl Cocycle3 {
    pub fn trivial(group: &GroupTable, field: Field) -> Cocycle3 {
        let n = group.order();
        Cocycle3 {
            group: group.clone(),
            field,
            values: vec![field.one(); n * n * n],
        }
    }

    pub fn from_fn(group: &GroupTable, field: Field, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Cocycle3 {
        let n = group.order();
        let values = (0..n * n * n).map(|x| f(x / (n * n), (x / n) % n, x % n)).collect();
        Cocycle3 {
            group: group.clone(),
            field,
            values,
        }
    }

    /// `ω(g^a, g^b, g^c) = ζ^{a⌊(b+c)/n⌋}` on `Z/n`, `ζ` the smallest
    /// primitive `n`-th root of unity in the field raised to `power`.
    pub fn standard_cyclic(n: usize, field: Field, power: u64) -> Result<Cocycle3> {
        let zeta = field
            .primitive_root_of_unity(n as u64)
            .ok_or_else(|| Error::Unsupported(format!("{field} has no primitive {n}-th root of unity")))?
            .pow(power);
        Ok(Cocycle3::from_fn(&GroupTable::cyclic(n), field, |a, b, c| {
            zeta.pow((a * ((b + c) / n)) as u64)
        }))
    }

    /// `ω ∘ (π × π × π)` along a group map `π: G → self.group`.
    pub fn pullback(&self, group: &GroupTable, map: &[usize]) -> Cocycle3 {
        Cocycle3::from_fn(group, self.field, |a, b, c| self.get(map[a], map[b], map[c]).clone())
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        let n = self.group.order();
        &self.values[(a * n + b) * n + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Scalar) {
        let n = self.group.order();
        self.values[(a * n + b) * n + c] = v;
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.group.order();
        let e = self.group.identity();
        (0..n * n * n).all(|x| {
            let (a, b, c) = (x / (n * n), (x / n) % n, x % n);
            !(a == e || b == e || c == e) || self.values[x].is_one()
        })
    }
}

/// Normalization and `ω(h,k,l)ω(g,hk,l)ω(g,h,k) = ω(g,h,kl)ω(gh,k,l)` on all
/// quadruples (the inverse-free form of the cocycle identity).
pub fn check_3cocycle(w: &Cocycle3) -> AxiomReport {
    let g = w.group();
    let n = g.order();
    let mut r = AxiomReport::new("3-cocycle");
    let nonzero = w.values().iter().position(|v| v.is_zero()).map(|x| Witness {
        tuple: vec![x / (n * n), (x / n) % n, x % n],
        residual: vec![w.field().zero()],
    });
    r.record("values_invertible", nonzero);
    let e = g.identity();
    let mut norm = None;
    'norm: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if (a == e || b == e || c == e) && !w.get(a, b, c).is_one() {
                    norm = Some(Witness {
                        tuple: vec![a, b, c],
                        residual: vec![w.get(a, b, c) - &w.field().one()],
                    });
                    break 'norm;
                }
            }
        }
    }
    r.record("normalized", norm);
    let mut cocycle = None;
    'quad: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let lhs = &(w.get(b, c, d) * w.get(a, g.mul(b, c), d)) * w.get(a, b, c);
                    let rhs = w.get(a, b, g.mul(c, d)) * w.get(g.mul(a, b), c, d);
                    if lhs != rhs {
                        cocycle = Some(Witness {
                            tuple: vec![a, b, c, d],
                            residual: vec![&lhs - &rhs],
                        });
                        break 'quad;
                    }
                }
            }
        }
    }
    r.record("cocycle_identity", cocycle);
    r
}

fn delta_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn reverified(h: QuasiHopfAlgebra, what: &str) -> Result<QuasiHopfAlgebra> {
    let r = verify_all(&h);
    if r.passed() {
        Ok(h)
    } else {
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        Err(Error::Invalid(format!("{what} fails {}", failed.join(", "))))
    }
}

/// `kG`: `Δ(g) = g⊗g`, `ε(g) = 1`, `φ = 1⊗1⊗1`, `S(g) = g⁻¹`, `α = β = 1`.
pub fn group_algebra(g: &GroupTable, field: Field) -> Result<QuasiHopfAlgebra> {
    let n = g.order();
    let unit = delta_vec(field, n, g.identity());
    let alg = Arc::new(FinAlgebra::from_products(field, n, unit.clone(), |a, b| {
        delta_vec(field, n, g.mul(a, b))
    })?);
    let mut comul = Matrix::zeros(field, n * n, n);
    for a in 0..n {
        comul.set(a * n + a, a, field.one());
    }
    let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
    let assoc = alg.unit_power(3);
    let qb = QuasiBialgebra::new(alg, comul, counit, assoc, None)?;
    let antipode = Matrix::from_fn(field, n, n, |r, c| if r == g.inv(c) { field.one() } else { field.zero() });
    reverified(QuasiHopfAlgebra::new(qb, antipode, unit.clone(), unit)?, "group algebra")
}

/// `k^G` with associator `φ = Σ ω(a,b,c) e_a⊗e_b⊗e_c`, no cocycle check.
pub fn dual_group_quasibialgebra(g: &GroupTable, w: &Cocycle3) -> Result<QuasiBialgebra> {
    let n = g.order();
    let field = w.field();
    if w.group() != g {
        return Err(Error::Invalid("cocycle lives on a different group".into()));
    }
    let alg = Arc::new(FinAlgebra::from_products(field, n, vec![field.one(); n], |a, b| {
        if a == b {
            delta_vec(field, n, a)
        } else {
            vec![field.zero(); n]
        }
    })?);
    let mut comul = Matrix::zeros(field, n * n, n);
    for a in 0..n {
        for b in 0..n {
            comul.set(a * n + b, g.mul(a, b), field.one());
        }
    }
    let counit = Matrix::from_fn(field, 1, n, |_, c| {
        if c == g.identity() {
            field.one()
        } else {
            field.zero()
        }
    });
    QuasiBialgebra::new(alg, comul, counit, w.values().to_vec(), None)
}

/// `k^G_ω` with `S(e_g) = e_{g⁻¹}`, `α = 1` and `β` solved.
pub fn dual_group_algebra(g: &GroupTable, w: &Cocycle3) -> Result<QuasiHopfAlgebra> {
    let cc = check_3cocycle(w);
    if !cc.passed() {
        return Err(Error::Invalid(format!("not a normalized 3-cocycle:\n{cc}")));
    }
    let qb = dual_group_quasibialgebra(g, w)?;
    let n = g.order();
    let field = w.field();
    let antipode = Matrix::from_fn(field, n, n, |r, c| if r == g.inv(c) { field.one() } else { field.zero() });
    let alpha = qb.alg().unit().to_vec();
    reverified(QuasiHopfAlgebra::with_solved_beta(qb, antipode, alpha)?, "dual group algebra")
}

/// `k^{Z/2}_ω` with `ω(1,1,1) = −1`.
pub fn fz2w(field: Field) -> Result<QuasiHopfAlgebra> {
    let w = Cocycle3::standard_cyclic(2, field, 1)?;
    dual_group_algebra(&GroupTable::cyclic(2), &w)
}

/// `k^{Z/4}_ω` with the standard order-4 cocycle.
pub fn fz4w(field: Field) -> Result<QuasiHopfAlgebra> {
    let w = Cocycle3::standard_cyclic(4, field, 1)?;
    dual_group_algebra(&GroupTable::cyclic(4), &w)
}

/// `e_ḡ ↦ Σ_{x ∈ ḡ} e_x` from `k^{G/N}_{wK}` into `k^G_{wH}`.
pub fn coset_embedding(g: &GroupTable, normal: &[usize], w_h: &Cocycle3, w_k: &Cocycle3) -> Result<SubalgebraEmbedding> {
    let (q, coset) = g.quotient(normal)?;
    if w_k.group() != &q {
        return Err(Error::Invalid("cocycle on the quotient uses a different table".into()));
    }
    let h = Arc::new(dual_group_algebra(g, w_h)?);
    let k = Arc::new(dual_group_algebra(&q, w_k)?);
    let field = w_h.field();
    let incl = Matrix::from_fn(field, g.order(), q.order(), |x, c| {
        if coset[x] == c {
            field.one()
        } else {
            field.zero()
        }
    });
    SubalgebraEmbedding::new(k, h, incl)
}

/// `k ↦ k ⊗ 1` from `K` into `K ⊗ F`.
pub fn tensor_embedding(k: &Arc<QuasiHopfAlgebra>, f: &QuasiHopfAlgebra) -> Result<SubalgebraEmbedding> {
    let h = Arc::new(tensor_quasi_hopf(k, f)?);
    let field = k.field();
    let unit = Matrix::column_vector(field, f.alg().unit());
    let incl = Matrix::identity(field, k.dim()).kron(&unit)?;
    SubalgebraEmbedding::new(k.clone(), h, incl)
}

/// Names accepted by [`instance`].
pub const NAMES: [&str; 7] = ["kZ2", "kZ4", "kS3", "fZ2w", "fZ4w", "fZ2w_x_kZ2", "coset_Z4_Z2"];

/// A named zoo object.
#[derive(Clone, Debug)]
pub enum Instance {
    QuasiHopf(Arc<QuasiHopfAlgebra>),
    Embedding(SubalgebraEmbedding),
}

/// Builds the named instance over `field`.
pub fn instance(name: &str, field: Field) -> Result<Instance> {
    let qh = |h: QuasiHopfAlgebra| Ok(Instance::QuasiHopf(Arc::new(h)));
    match name {
        "kZ2" => qh(group_algebra(&GroupTable::cyclic(2), field)?),
        "kZ4" => qh(group_algebra(&GroupTable::cyclic(4), field)?),
        "kS3" => qh(group_algebra(&GroupTable::symmetric3(), field)?),
        "fZ2w" => qh(fz2w(field)?),
        "fZ4w" => qh(fz4w(field)?),
        "fZ2w_x_kZ2" => qh(tensor_quasi_hopf(&fz2w(field)?, &group_algebra(&GroupTable::cyclic(2), field)?)?),
        "coset_Z4_Z2" => Ok(Instance::Embedding(coset_z4_z2(field)?)),
        other => Err(Error::Unresolved(format!("no zoo instance named {other}"))),
    }
}

/// The coset embedding `k^{Z/2}_ω → k^{Z/4}_ω` with the standard cocycles
/// (so the associator of `k^{Z/4}_ω` does not lie in the image).
pub fn coset_z4_z2(field: Field) -> Result<SubalgebraEmbedding> {
    let g = GroupTable::cyclic(4);
    coset_embedding(
        &g,
        &[0, 2],
        &Cocycle3::standard_cyclic(4, field, 1)?,
        &Cocycle3::standard_cyclic(2, field, 1)?,
    )
}

/// Coset embedding into `k^{Z/4}` with the cocycle pulled back from `Z/2`,
/// which makes it a quasi-Hopf subalgebra.
pub fn coset_z4_z2_pulled_back(field: Field) -> Result<SubalgebraEmbedding> {
    let g = GroupTable::cyclic(4);
    let w_k = Cocycle3::standard_cyclic(2, field, 1)?;
    let (_, coset) = g.quotient(&[0, 2])?;
    coset_embedding(&g, &[0, 2], &w_k.pullback(&g, &coset), &w_k)
}

/// The named instance as an instance file, bundled with a few objects over
/// it so every CLI command has something to run on: right regular and
/// trivial modules, regular and trivial bimodules, the identity embedding
/// and the cofree Hopf module on the trivial bimodule. Embedding instances
/// carry both algebras and the embedding under the instance name.
pub fn emit(name: &str, field: Field) -> Result<InstanceFile> {
    let mut file = InstanceFile::new(field);
    match instance(name, field)? {
        Instance::QuasiHopf(h) => {
            bundle(&mut file, name, &h)?;
            if name == "fZ2w_x_kZ2" {
                let k = Arc::new(fz2w(field)?);
                let e = tensor_embedding(&k, &group_algebra(&GroupTable::cyclic(2), field)?)?;
                debug_assert_eq!(**e.h(), *h);
                file.add_quasi_hopf("fZ2w", &k);
                file.add_embedding(name, "fZ2w", name, &e);
            }
        }
        Instance::Embedding(e) => {
            let (k, h) = (e.k().clone(), e.h().clone());
            bundle(&mut file, "fZ2w", &k)?;
            file.add_quasi_hopf("fZ4w", &h);
            file.add_embedding(name, "fZ2w", "fZ4w", &e);
        }
    }
    Ok(file)
}

fn bundle(file: &mut InstanceFile, name: &str, h: &Arc<QuasiHopfAlgebra>) -> Result<()> {
    file.add_quasi_hopf(name, h);
    file.add_module(&format!("{name}_regular"), name, &ModuleRep::regular(h.alg(), Side::Right));
    file.add_module(&format!("{name}_trivial"), name, &ModuleRep::trivial(h.qb(), Side::Right));
    file.add_bimodule(&format!("{name}_regular"), name, &BimoduleRep::regular(h.alg()));
    let trivial = BimoduleRep::trivial(h.qb());
    file.add_bimodule(&format!("{name}_trivial"), name, &trivial);
    let e = Arc::new(SubalgebraEmbedding::identity(h));
    let identity = format!("{name}_identity");
    file.add_embedding(&identity, name, name, &e);
    let m = cofree_hopf_module(&trivial, &e)?;
    let carrier = format!("{name}_cofree");
    file.add_bimodule(&carrier, name, m.carrier());
    file.add_hopf_module(&carrier, &identity, &carrier, &m);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasi::verify_quasibialgebra;
    use crate::report::Status;

    fn f13() -> Field {
        Field::Prime(13)
    }

    #[test]
    fn tables() {
        assert_eq!(GroupTable::cyclic(4).mul(3, 2), 1);
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.identity(), 0);
        // (0 1)(1 2) ≠ (1 2)(0 1)
        assert_ne!(s3.mul(2, 1), s3.mul(1, 2));
        assert!(GroupTable::new(2, vec![0, 1, 1, 1]).is_err());
        assert!(!s3.is_normal(&[0, 1]));
        assert!(s3.is_normal(&[0, 3, 4]));
    }

    #[test]
    fn quotient_of_z4() {
        let (q, coset) = GroupTable::cyclic(4).quotient(&[0, 2]).unwrap();
        assert_eq!(q, GroupTable::cyclic(2));
        assert_eq!(coset, vec![0, 1, 0, 1]);
    }

    #[test]
    fn cocycle_examples() {
        let f = f13();
        let g = GroupTable::cyclic(2);
        assert!(check_3cocycle(&Cocycle3::trivial(&g, f)).passed());
        let w = Cocycle3::standard_cyclic(2, f, 1).unwrap();
        assert_eq!(w.get(1, 1, 1), &f.from_i64(-1));
        assert!(check_3cocycle(&w).passed());
        let mut bad = Cocycle3::trivial(&g, f);
        bad.set(1, 1, 0, f.from_i64(-1));
        let r = check_3cocycle(&bad);
        assert_eq!(r.status("normalized"), Some(Status::Fail));
        let mut unnormalized_only = Cocycle3::trivial(&g, f);
        unnormalized_only.set(1, 1, 1, f.from_i64(3));
        assert_eq!(check_3cocycle(&unnormalized_only).status("cocycle_identity"), Some(Status::Fail));
    }

    #[test]
    fn standard_z4_cocycle() {
        let f = f13();
        let w = Cocycle3::standard_cyclic(4, f, 1).unwrap();
        let zeta = f.from_i64(5);
        assert_eq!(zeta.pow(2), f.from_i64(-1));
        assert_eq!(w.get(1, 2, 2), &zeta);
        assert_eq!(w.get(3, 3, 3), &zeta.pow(3));
        assert!(check_3cocycle(&w).passed());
        assert!(Cocycle3::standard_cyclic(4, Field::Prime(7), 1).is_err());
    }

    /// Over Z/2 a normalized ω is determined by ω(1,1,1); the pentagon and
    /// the cocycle identity both reduce to ω(1,1,1)² = 1.
    #[test]
    fn pentagon_iff_cocycle_exhaustive() {
        let f = f13();
        let g = GroupTable::cyclic(2);
        let mut accepted = Vec::new();
        for v in 1..13 {
            let mut w = Cocycle3::trivial(&g, f);
            w.set(1, 1, 1, f.from_i64(v));
            let cocycle = check_3cocycle(&w).passed();
            let pentagon = verify_quasibialgebra(&dual_group_quasibialgebra(&g, &w).unwrap()).status("pentagon") == Some(Status::Pass);
            assert_eq!(cocycle, pentagon, "ω(1,1,1) = {v}");
            if cocycle {
                accepted.push(v);
            }
        }
        assert_eq!(accepted, vec![1, 12]);
    }

    #[test]
    fn group_algebras_pass() {
        for (g, dim) in [(GroupTable::cyclic(2), 2), (GroupTable::cyclic(4), 4), (GroupTable::symmetric3(), 6)] {
            let h = group_algebra(&g, f13()).unwrap();
            assert_eq!(h.dim(), dim);
        }
    }

    #[test]
    fn trivial_cocycle_gives_function_algebra() {
        let f = f13();
        let g = GroupTable::cyclic(4);
        let h = dual_group_algebra(&g, &Cocycle3::trivial(&g, f)).unwrap();
        assert!(h.qb().has_trivial_associator());
        assert_eq!(h.beta(), h.alg().unit());
        assert_eq!(h.alpha(), h.alg().unit());
    }

    #[test]
    fn fz4w_beta() {
        let f = f13();
        let h = fz4w(f).unwrap();
        let w = Cocycle3::standard_cyclic(4, f, 1).unwrap();
        let g = GroupTable::cyclic(4);
        for a in 0..4 {
            assert_eq!(h.beta()[a], w.get(a, g.inv(a), a).inv().unwrap());
        }
    }

    #[test]
    fn embedding_flags() {
        let f = f13();
        let e = coset_z4_z2(f).unwrap();
        assert!(e.is_subcoalgebra());
        assert!(!e.shares_associator());
        assert!(!e.is_quasi_hopf_sub());
        let e = coset_z4_z2_pulled_back(f).unwrap();
        assert!(e.shares_associator());
        assert!(e.is_quasi_hopf_sub());

        let k = Arc::new(fz2w(f).unwrap());
        let kz2 = group_algebra(&GroupTable::cyclic(2), f).unwrap();
        let e = tensor_embedding(&k, &kz2).unwrap();
        assert!(e.is_subcoalgebra() && e.shares_associator() && e.is_quasi_hopf_sub());
        let kz2 = Arc::new(kz2);
        let e = tensor_embedding(&kz2, &fz2w(f).unwrap()).unwrap();
        assert!(e.is_subcoalgebra());
        assert!(!e.shares_associator());
    }

    #[test]
    fn coset_onto_whole_group_is_ground_field() {
        let f = f13();
        let g = GroupTable::cyclic(2);
        let (q, _) = g.quotient(&[0, 1]).unwrap();
        let e = coset_embedding(&g, &[0, 1], &Cocycle3::trivial(&g, f), &Cocycle3::trivial(&q, f)).unwrap();
        assert_eq!(e.k().dim(), 1);
        assert_eq!(e.incl().column(0), e.h().alg().unit());
    }

    #[test]
    fn every_name_builds() {
        for name in NAMES {
            instance(name, f13()).unwrap();
        }
        assert!(matches!(instance("nope", f13()), Err(Error::Unresolved(_))));
    }

    #[test]
    fn emitted_files_roundtrip() {
        for name in NAMES {
            let file = emit(name, f13()).unwrap();
            let back = crate::format::load_str(&file.to_json()).unwrap();
            match instance(name, f13()).unwrap() {
                Instance::QuasiHopf(h) => assert_eq!(*back.quasi_hopf[name], *h, "{name}"),
                Instance::Embedding(e) => assert_eq!(*back.embeddings[name], e, "{name}"),
            }
            for m in back.hopf_modules.values() {
                assert!(crate::hopfmod::verify_hopf_module(m).unwrap().passed(), "{name}");
            }
        }
        assert!(matches!(emit("kZ3", f13()), Err(Error::Unresolved(_))));
    }
}
