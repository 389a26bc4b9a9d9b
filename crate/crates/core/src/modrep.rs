//! Modules and bimodules over finite algebras as lists of action matrices:
//! Hom spaces, isomorphism tests with certificates, faithfulness, freeness.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{nonzeros, Field, Matrix, Scalar};
use crate::quasi::{QuasiBialgebra, QuasiHopfAlgebra};
use crate::report::{AxiomReport, Witness};

pub const DEFAULT_TRIALS: usize = 64;

/// Exhaustive Hom enumeration is attempted up to this many candidates.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// `action[i]` is the matrix of `e_i` on the carrier. For right modules
/// `m · e_i` is `action[i] * m`, so `ρ(ab) = ρ(b) ρ(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    side: Side,
    algebra: Arc<FinAlgebra>,
    mdim: usize,
    action: Vec<Matrix>,
}

fn check_actions(algebra: &FinAlgebra, mdim: usize, action: &[Matrix]) -> Result<()> {
    if action.len() != algebra.dim() {
        return Err(Error::Dimension(format!(
            "{} action matrices for an algebra of dimension {}",
            action.len(),
            algebra.dim()
        )));
    }
    for m in action {
        if m.rows() != mdim || m.cols() != mdim {
            return Err(Error::Dimension(format!("action matrix is {}x{}, expected {mdim}x{mdim}", m.rows(), m.cols())));
        }
        if m.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), m.field()));
        }
    }
    Ok(())
}

/// `Σ c_i ρ_i`.
fn combine(field: Field, mdim: usize, action: &[Matrix], c: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, mdim, mdim);
    for (i, v) in nonzeros(c) {
        out.add_scaled(v, &action[i]);
    }
    out
}

fn multiplicativity(algebra: &FinAlgebra, side: Side, mdim: usize, action: &[Matrix]) -> Option<Witness> {
    let n = algebra.dim();
    let f = algebra.field();
    for i in 0..n {
        for j in 0..n {
            let prod = combine(f, mdim, action, &algebra.mul(&algebra.basis(i), &algebra.basis(j)));
            let composed = match side {
                Side::Left => action[i].mul(&action[j]),
                Side::Right => action[j].mul(&action[i]),
            };
            if prod != composed {
                return Some(Witness {
                    tuple: vec![i, j],
                    residual: composed.sub(&prod).entries().to_vec(),
                });
            }
        }
    }
    None
}

impl ModuleRep {
    pub fn new(side: Side, algebra: Arc<FinAlgebra>, action: Vec<Matrix>) -> Result<ModuleRep> {
        let mdim = action.first().map_or(0, Matrix::rows);
        check_actions(&algebra, mdim, &action)?;
        Ok(ModuleRep {
            side,
            algebra,
            mdim,
            action,
        })
    }

    /// The regular module: left or right multiplication.
    pub fn regular(algebra: &Arc<FinAlgebra>, side: Side) -> ModuleRep {
        let action = (0..algebra.dim())
            .map(|i| match side {
                Side::Left => algebra.left_mult_matrix(&algebra.basis(i)),
                Side::Right => algebra.right_mult_matrix(&algebra.basis(i)),
            })
            .collect();
        ModuleRep {
            side,
            algebra: algebra.clone(),
            mdim: algebra.dim(),
            action,
        }
    }

    /// The one-dimensional module `k` through `ε`.
    pub fn trivial(q: &QuasiBialgebra, side: Side) -> ModuleRep {
        let f = q.field();
        let action = q.counit().row(0).iter().map(|e| Matrix::from_fn(f, 1, 1, |_, _| e.clone())).collect();
        ModuleRep {
            side,
            algebra: q.alg().clone(),
            mdim: 1,
            action,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.mdim, &self.action, a)
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.compatible(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(ModuleRep {
            side: self.side,
            algebra: self.algebra.clone(),
            mdim: self.mdim + other.mdim,
            action,
        })
    }

    /// `M^r` (`r ≥ 1`).
    pub fn power(&self, r: usize) -> ModuleRep {
        assert!(r >= 1, "power of a module needs r >= 1");
        let mut out = self.clone();
        for _ in 1..r {
            out = out.direct_sum(self).expect("same algebra");
        }
        out
    }

    /// Pulls the action back along `incl: K → A` (columns are images of
    /// the basis of `K`).
    pub fn restrict(&self, sub: &Arc<FinAlgebra>, incl: &Matrix) -> ModuleRep {
        let action = (0..sub.dim()).map(|a| self.act(&incl.column(a))).collect();
        ModuleRep {
            side: self.side,
            algebra: sub.clone(),
            mdim: self.mdim,
            action,
        }
    }

    fn compatible(&self, other: &ModuleRep) -> Result<()> {
        if self.side != other.side {
            return Err(Error::Invalid("modules are on different sides".into()));
        }
        if self.algebra != other.algebra {
            return Err(Error::Invalid("modules are over different algebras".into()));
        }
        Ok(())
    }
}

pub fn is_module(m: &ModuleRep) -> AxiomReport {
    let mut r = AxiomReport::new(match m.side {
        Side::Left => "left module",
        Side::Right => "right module",
    });
    r.record("action_multiplicative", multiplicativity(&m.algebra, m.side, m.mdim, &m.action));
    let unit = m.act(m.algebra.unit());
    let id = Matrix::identity(m.field(), m.mdim);
    r.record(
        "action_unital",
        (unit != id).then(|| Witness {
            tuple: vec![],
            residual: unit.sub(&id).entries().to_vec(),
        }),
    );
    r
}

pub fn regular_module(a: &Arc<FinAlgebra>, side: Side) -> ModuleRep {
    ModuleRep::regular(a, side)
}

/// `h(w⊗v) = h₁w ⊗ h₂v` (and the mirror for right modules).
pub fn tensor_modules(q: &QuasiBialgebra, w: &ModuleRep, v: &ModuleRep) -> Result<ModuleRep> {
    w.compatible(v)?;
    if **w.algebra() != **q.alg() {
        return Err(Error::Invalid("modules are not over this quasibialgebra".into()));
    }
    let action = diagonal_action(q, &w.action, &v.action)?;
    Ok(ModuleRep {
        side: w.side,
        algebra: w.algebra.clone(),
        mdim: w.mdim * v.mdim,
        action,
    })
}

/// `ρ(h) = Σ Δ(h)_{ij} ρ_W(e_i) ⊗ ρ_V(e_j)`.
fn diagonal_action(q: &QuasiBialgebra, w: &[Matrix], v: &[Matrix]) -> Result<Vec<Matrix>> {
    let n = q.dim();
    let f = q.field();
    let dw = w.first().map_or(0, Matrix::rows);
    let dv = v.first().map_or(0, Matrix::rows);
    (0..n)
        .map(|h| {
            let mut acc = Matrix::zeros(f, dw * dv, dw * dv);
            for (ij, c) in nonzeros(&q.comul().column(h)) {
                acc.add_scaled(c, &w[ij / n].kron(&v[ij % n])?);
            }
            Ok(acc)
        })
        .collect()
}

/// Whether `ρ(a) = 0` forces `a = 0`; returns a basis of the annihilator as
/// the columns of a matrix.
pub fn is_faithful(m: &ModuleRep) -> (bool, Matrix) {
    let n = m.algebra.dim();
    let cols: Vec<Vec<Scalar>> = m.action.iter().map(|a| a.entries().to_vec()).collect();
    let stacked = Matrix::from_columns(m.field(), m.mdim * m.mdim, &cols);
    let ann = if m.mdim == 0 {
        Matrix::identity(m.field(), n)
    } else {
        stacked.kernel()
    };
    (ann.cols() == 0, ann)
}

/// Basis of a space of `rows × cols` intertwiners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub rows: usize,
    pub cols: usize,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combine(&self, field: Field, coeffs: &[Scalar]) -> Matrix {
        let mut x = Matrix::zeros(field, self.rows, self.cols);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                x.add_scaled(c, b);
            }
        }
        x
    }
}

/// All `X` (`rows × cols`) with `X A = B X` for every pair `(A, B)`.
/// Conditions are imposed one pair at a time, shrinking the candidate
/// space as it goes.
pub fn intertwiners(field: Field, rows: usize, cols: usize, pairs: &[(&Matrix, &Matrix)]) -> HomSpace {
    let mut basis: Vec<Matrix> = (0..rows * cols)
        .map(|x| {
            let mut m = Matrix::zeros(field, rows, cols);
            m.set(x / cols, x % cols, field.one());
            m
        })
        .collect();
    for (a, b) in pairs {
        if basis.is_empty() {
            break;
        }
        let residuals: Vec<Vec<Scalar>> = basis.iter().map(|x| x.mul(a).sub(&b.mul(x)).entries().to_vec()).collect();
        let system = Matrix::from_columns(field, rows * cols, &residuals);
        if system.is_zero() {
            continue;
        }
        let ker = system.kernel();
        basis = (0..ker.cols())
            .map(|j| {
                let mut x = Matrix::zeros(field, rows, cols);
                for (k, c) in nonzeros(&ker.column(j)) {
                    x.add_scaled(c, &basis[k]);
                }
                x
            })
            .collect();
    }
    HomSpace { rows, cols, basis }
}

pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    m.compatible(n)?;
    let pairs: Vec<(&Matrix, &Matrix)> = m.action.iter().zip(&n.action).collect();
    Ok(intertwiners(m.field(), n.mdim, m.mdim, &pairs))
}

#[derive(Clone, Debug, PartialEq)]
pub enum IsoWitness {
    /// An invertible intertwiner `M → N`, already re-verified.
    Yes(Matrix),
    No(String),
    /// No iso found; if one exists, the chance of missing it was at most
    /// `bound`.
    Unknown { bound: f64 },
}

impl IsoWitness {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoWitness::Yes(_))
    }
}

/// Randomized search with certificate over the intertwiners of `pairs`
/// (conditions `X A = B X`), exhaustive fallback for small Hom spaces.
fn iso_search(field: Field, dm: usize, dn: usize, pairs: &[(&Matrix, &Matrix)], auto_m: usize, auto_n: usize, seed: u64, trials: usize) -> IsoWitness {
    if dm != dn {
        return IsoWitness::No(format!("dimensions differ ({dm} vs {dn})"));
    }
    let hom = intertwiners(field, dn, dm, pairs);
    if hom.dim() == 0 {
        return IsoWitness::No("no nonzero intertwiners".into());
    }
    let certify = |x: Matrix| -> Option<Matrix> {
        let ok = x.rank() == dm && pairs.iter().all(|(a, b)| x.mul(a) == b.mul(&x));
        ok.then_some(x)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<Scalar> = (0..hom.dim()).map(|_| field.random(&mut rng)).collect();
        if let Some(x) = certify(hom.combine(field, &coeffs)) {
            return IsoWitness::Yes(x);
        }
    }
    if let Some(elements) = field.elements() {
        let q = elements.len() as u64;
        let total = q.checked_pow(hom.dim() as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT);
        if let Some(total) = total {
            for code in 0..total {
                let mut c = code;
                let coeffs: Vec<Scalar> = (0..hom.dim())
                    .map(|_| {
                        let v = elements[(c % q) as usize].clone();
                        c /= q;
                        v
                    })
                    .collect();
                if let Some(x) = certify(hom.combine(field, &coeffs)) {
                    return IsoWitness::Yes(x);
                }
            }
            return IsoWitness::No(format!("all {total} intertwiners are singular"));
        }
    }
    if auto_m != auto_n || auto_m != hom.dim() {
        return IsoWitness::No(format!(
            "endomorphism and Hom dimensions disagree ({auto_m}, {auto_n}, {})",
            hom.dim()
        ));
    }
    let ratio = dm as f64 / field.sample_size() as f64;
    IsoWitness::Unknown {
        bound: ratio.powi(trials as i32).min(1.0),
    }
}

pub fn iso_test(m: &ModuleRep, n: &ModuleRep, seed: u64, trials: usize) -> Result<IsoWitness> {
    m.compatible(n)?;
    let pairs: Vec<(&Matrix, &Matrix)> = m.action.iter().zip(&n.action).collect();
    let (am, an) = if m.mdim == n.mdim {
        (hom_space(m, m)?.dim(), hom_space(n, n)?.dim())
    } else {
        (0, 0)
    };
    Ok(iso_search(m.field(), m.mdim, n.mdim, &pairs, am, an, seed, trials))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Freeness {
    /// Free of rank `r`, with an isomorphism from `K^r`.
    FreeOfRank(usize, Matrix),
    NotFree(String),
    Unknown { bound: f64 },
}

impl Freeness {
    pub fn rank(&self) -> Option<usize> {
        match self {
            Freeness::FreeOfRank(r, _) => Some(*r),
            _ => None,
        }
    }
}

/// Whether `M ≅ K^r` over its own algebra `K`.
pub fn freeness_check(m: &ModuleRep, seed: u64, trials: usize) -> Freeness {
    let k = m.algebra.dim();
    if m.mdim == 0 || m.mdim % k != 0 {
        return Freeness::NotFree(format!("dim K = {k} does not divide dim M = {}", m.mdim));
    }
    let r = m.mdim / k;
    let free = ModuleRep::regular(&m.algebra, m.side).power(r);
    match iso_test(&free, m, seed, trials).expect("same algebra and side") {
        IsoWitness::Yes(x) => Freeness::FreeOfRank(r, x),
        IsoWitness::No(why) => Freeness::NotFree(why),
        IsoWitness::Unknown { bound } => Freeness::Unknown { bound },
    }
}

/// `V*` with `(h·f)(v) = f(S(h)v)`, i.e. `ρ*(h) = ρ(S(h))ᵀ`.
pub fn dual_left_module(h: &QuasiHopfAlgebra, v: &ModuleRep) -> Result<ModuleRep> {
    if v.side != Side::Left {
        return Err(Error::Invalid("dual_left_module needs a left module".into()));
    }
    if **v.algebra() != **h.alg() {
        return Err(Error::Invalid("module is not over this quasi-Hopf algebra".into()));
    }
    let action = (0..h.dim()).map(|i| v.act(&h.antipode().column(i)).transpose()).collect();
    Ok(ModuleRep {
        side: Side::Left,
        algebra: v.algebra.clone(),
        mdim: v.mdim,
        action,
    })
}

/// Commuting left and right actions of one algebra on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleRep {
    algebra: Arc<FinAlgebra>,
    mdim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl BimoduleRep {
    pub fn new(algebra: Arc<FinAlgebra>, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<BimoduleRep> {
        let mdim = left.first().map_or(0, Matrix::rows);
        check_actions(&algebra, mdim, &left)?;
        check_actions(&algebra, mdim, &right)?;
        Ok(BimoduleRep {
            algebra,
            mdim,
            left,
            right,
        })
    }

    pub fn from_modules(left: &ModuleRep, right: &ModuleRep) -> Result<BimoduleRep> {
        if left.side != Side::Left || right.side != Side::Right || left.mdim != right.mdim || left.algebra != right.algebra {
            return Err(Error::Invalid("need a left and a right module on the same space".into()));
        }
        Ok(BimoduleRep {
            algebra: left.algebra.clone(),
            mdim: left.mdim,
            left: left.action.clone(),
            right: right.action.clone(),
        })
    }

    pub fn regular(algebra: &Arc<FinAlgebra>) -> BimoduleRep {
        BimoduleRep::from_modules(&ModuleRep::regular(algebra, Side::Left), &ModuleRep::regular(algebra, Side::Right))
            .expect("regular actions")
    }

    /// `k` with both actions through `ε`.
    pub fn trivial(q: &QuasiBialgebra) -> BimoduleRep {
        let t = ModuleRep::trivial(q, Side::Left);
        BimoduleRep {
            algebra: t.algebra.clone(),
            mdim: 1,
            right: t.action.clone(),
            left: t.action,
        }
    }

    /// A left module made into a bimodule with right action through `ε`.
    pub fn from_left(q: &QuasiBialgebra, v: &ModuleRep) -> Result<BimoduleRep> {
        if v.side != Side::Left || **v.algebra() != **q.alg() {
            return Err(Error::Invalid("need a left module over this quasibialgebra".into()));
        }
        let f = q.field();
        let right = q.counit().row(0).iter().map(|e| Matrix::identity(f, v.mdim).scale(e)).collect();
        Ok(BimoduleRep {
            algebra: v.algebra.clone(),
            mdim: v.mdim,
            left: v.action.clone(),
            right,
        })
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    pub fn left_module(&self) -> ModuleRep {
        ModuleRep {
            side: Side::Left,
            algebra: self.algebra.clone(),
            mdim: self.mdim,
            action: self.left.clone(),
        }
    }

    pub fn right_module(&self) -> ModuleRep {
        ModuleRep {
            side: Side::Right,
            algebra: self.algebra.clone(),
            mdim: self.mdim,
            action: self.right.clone(),
        }
    }

    pub fn act_left(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.mdim, &self.left, a)
    }

    pub fn act_right(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.mdim, &self.right, a)
    }

    pub fn direct_sum(&self, other: &BimoduleRep) -> Result<BimoduleRep> {
        if self.algebra != other.algebra {
            return Err(Error::Invalid("bimodules are over different algebras".into()));
        }
        Ok(BimoduleRep {
            algebra: self.algebra.clone(),
            mdim: self.mdim + other.mdim,
            left: self.left.iter().zip(&other.left).map(|(a, b)| a.direct_sum(b)).collect(),
            right: self.right.iter().zip(&other.right).map(|(a, b)| a.direct_sum(b)).collect(),
        })
    }

    pub fn restrict(&self, sub: &Arc<FinAlgebra>, incl: &Matrix) -> BimoduleRep {
        let l = self.left_module().restrict(sub, incl);
        let r = self.right_module().restrict(sub, incl);
        BimoduleRep::from_modules(&l, &r).expect("restriction keeps sides")
    }

    /// The actions on an invariant subspace spanned by the columns of
    /// `basis` (full column rank).
    pub fn subbimodule(&self, basis: &Matrix) -> Result<BimoduleRep> {
        let restrict = |m: &Matrix| {
            basis
                .solve(&m.mul(basis))
                .ok_or_else(|| Error::Invalid("subspace is not invariant".into()))
        };
        Ok(BimoduleRep {
            algebra: self.algebra.clone(),
            mdim: basis.cols(),
            left: self.left.iter().map(restrict).collect::<Result<_>>()?,
            right: self.right.iter().map(restrict).collect::<Result<_>>()?,
        })
    }

    fn pairs<'a>(&'a self, other: &'a BimoduleRep) -> Vec<(&'a Matrix, &'a Matrix)> {
        self.left.iter().zip(&other.left).chain(self.right.iter().zip(&other.right)).collect()
    }
}

pub fn is_bimodule(b: &BimoduleRep) -> AxiomReport {
    let mut r = AxiomReport::new("bimodule");
    let mut l = is_module(&b.left_module());
    for c in &mut l.checks {
        c.name = format!("left_{}", c.name);
    }
    let mut rr = is_module(&b.right_module());
    for c in &mut rr.checks {
        c.name = format!("right_{}", c.name);
    }
    r.extend(l);
    r.extend(rr);
    let n = b.algebra.dim();
    let mut commute = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            let lr = b.left[i].mul(&b.right[j]);
            let rl = b.right[j].mul(&b.left[i]);
            if lr != rl {
                commute = Some(Witness {
                    tuple: vec![i, j],
                    residual: lr.sub(&rl).entries().to_vec(),
                });
                break 'pairs;
            }
        }
    }
    r.record("actions_commute", commute);
    r
}

/// `h(p⊗q)k = h₁pk₁ ⊗ h₂qk₂`.
pub fn tensor_bimodules(q: &QuasiBialgebra, p: &BimoduleRep, r: &BimoduleRep) -> Result<BimoduleRep> {
    if p.algebra != r.algebra || **p.algebra() != **q.alg() {
        return Err(Error::Invalid("bimodules are not over this quasibialgebra".into()));
    }
    Ok(BimoduleRep {
        algebra: p.algebra.clone(),
        mdim: p.mdim * r.mdim,
        left: diagonal_action(q, &p.left, &r.left)?,
        right: diagonal_action(q, &p.right, &r.right)?,
    })
}

pub fn bimodule_hom_space(m: &BimoduleRep, n: &BimoduleRep) -> Result<HomSpace> {
    if m.algebra != n.algebra {
        return Err(Error::Invalid("bimodules are over different algebras".into()));
    }
    Ok(intertwiners(m.field(), n.mdim, m.mdim, &m.pairs(n)))
}

pub fn bimodule_iso_test(m: &BimoduleRep, n: &BimoduleRep, seed: u64, trials: usize) -> Result<IsoWitness> {
    if m.algebra != n.algebra {
        return Err(Error::Invalid("bimodules are over different algebras".into()));
    }
    let (am, an) = if m.mdim == n.mdim {
        (bimodule_hom_space(m, m)?.dim(), bimodule_hom_space(n, n)?.dim())
    } else {
        (0, 0)
    };
    Ok(iso_search(m.field(), m.mdim, n.mdim, &m.pairs(n), am, an, seed, trials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::zoo::{self, GroupTable};

    fn f13() -> Field {
        Field::Prime(13)
    }

    fn kz2() -> QuasiHopfAlgebra {
        zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap()
    }

    /// The sign representation g ↦ −1 of kZ/2.
    fn sign(h: &QuasiHopfAlgebra) -> ModuleRep {
        let f = h.field();
        ModuleRep::new(Side::Left, h.alg().clone(), vec![Matrix::from_i64(f, &[&[1]]), Matrix::from_i64(f, &[&[-1]])]).unwrap()
    }

    #[test]
    fn regular_modules() {
        let h = kz2();
        let reg = ModuleRep::regular(h.alg(), Side::Left);
        assert_eq!(reg.action()[1], Matrix::from_i64(f13(), &[&[0, 1], &[1, 0]]));
        assert!(is_module(&reg).passed());
        let d = zoo::dual_group_algebra(&GroupTable::cyclic(4), &zoo::Cocycle3::trivial(&GroupTable::cyclic(4), f13())).unwrap();
        let reg = ModuleRep::regular(d.alg(), Side::Right);
        for i in 0..4 {
            let mut e = Matrix::zeros(f13(), 4, 4);
            e.set(i, i, f13().one());
            assert_eq!(reg.action()[i], e);
        }
        for name in zoo::NAMES {
            if let zoo::Instance::QuasiHopf(h) = zoo::instance(name, f13()).unwrap() {
                for side in [Side::Left, Side::Right] {
                    let m = ModuleRep::regular(h.alg(), side);
                    assert!(is_module(&m).passed(), "{name}");
                    assert!(is_faithful(&m).0, "{name}");
                }
            }
        }
    }

    #[test]
    fn corrupted_action_fails() {
        let h = kz2();
        let mut action = ModuleRep::regular(h.alg(), Side::Left).action().to_vec();
        action[1].set(0, 0, f13().one());
        let m = ModuleRep::new(Side::Left, h.alg().clone(), action).unwrap();
        let r = is_module(&m);
        assert_eq!(r.status("action_multiplicative"), Some(Status::Fail));
        // e_0 acts as the identity, so the first failing pair is (g, g).
        assert_eq!(r.check("action_multiplicative").unwrap().witness.as_ref().unwrap().tuple, vec![1, 1]);
    }

    #[test]
    fn trivial_module_annihilator() {
        let h = kz2();
        let t = ModuleRep::trivial(h.qb(), Side::Left);
        assert!(is_module(&t).passed());
        let (faithful, ann) = is_faithful(&t);
        assert!(!faithful);
        assert_eq!(ann.cols(), 1);
        let a = ann.column(0);
        assert_eq!(&a[0], &-&a[1]);
        let sum = t.direct_sum(&ModuleRep::regular(h.alg(), Side::Left)).unwrap();
        assert!(is_faithful(&sum).0);
    }

    #[test]
    fn hom_dimensions() {
        let h = kz2();
        let reg = ModuleRep::regular(h.alg(), Side::Left);
        let t = ModuleRep::trivial(h.qb(), Side::Left);
        let end = hom_space(&reg, &reg).unwrap();
        assert!(end.basis.iter().any(|_| true));
        let id = Matrix::identity(f13(), 2);
        let basis: Vec<Vec<Scalar>> = end.basis.iter().map(|b| b.entries().to_vec()).collect();
        let span = Matrix::from_columns(f13(), 4, &basis);
        assert!(span.solve_vec(id.entries()).is_some());
        assert_eq!(hom_space(&reg, &t).unwrap().dim(), 1);
        for b in &hom_space(&reg, &t).unwrap().basis {
            for i in 0..2 {
                assert_eq!(b.mul(&reg.action()[i]), t.action()[i].mul(b));
            }
        }
    }

    #[test]
    fn hom_additivity_over_zoo() {
        for name in ["kZ2", "fZ2w", "kS3"] {
            let zoo::Instance::QuasiHopf(h) = zoo::instance(name, f13()).unwrap() else { unreachable!() };
            let k = ModuleRep::regular(h.alg(), Side::Right);
            let base = hom_space(&k, &k).unwrap().dim();
            for a in 1..=2 {
                for b in 1..=2 {
                    assert_eq!(hom_space(&k.power(a), &k.power(b)).unwrap().dim(), a * b * base, "{name}");
                }
            }
        }
    }

    #[test]
    fn maschke_iso_and_exhaustive_refutation() {
        let h = kz2();
        let reg = ModuleRep::regular(h.alg(), Side::Left);
        let t = ModuleRep::trivial(h.qb(), Side::Left);
        let ts = t.direct_sum(&sign(&h)).unwrap();
        match iso_test(&reg, &ts, 0, DEFAULT_TRIALS).unwrap() {
            IsoWitness::Yes(x) => {
                assert_eq!(x.rank(), 2);
                for i in 0..2 {
                    assert_eq!(x.mul(&reg.action()[i]), ts.action()[i].mul(&x));
                }
            }
            other => panic!("{other:?}"),
        }
        match iso_test(&reg, &t.power(2), 0, DEFAULT_TRIALS).unwrap() {
            IsoWitness::No(why) => assert!(why.contains("singular"), "{why}"),
            other => panic!("{other:?}"),
        }
        assert!(iso_test(&reg, &reg, 0, 1).unwrap().is_yes());
        assert!(matches!(iso_test(&reg, &t, 0, 1).unwrap(), IsoWitness::No(_)));
    }

    #[test]
    fn freeness_of_powers() {
        for name in ["kZ2", "kZ4", "kS3", "fZ2w", "fZ4w"] {
            let zoo::Instance::QuasiHopf(h) = zoo::instance(name, f13()).unwrap() else { unreachable!() };
            for r in 1..=3 {
                let m = ModuleRep::regular(h.alg(), Side::Right).power(r);
                assert_eq!(freeness_check(&m, 0, DEFAULT_TRIALS).rank(), Some(r), "{name}");
            }
        }
        let h = kz2();
        let t = ModuleRep::trivial(h.qb(), Side::Right);
        assert!(matches!(freeness_check(&t, 0, DEFAULT_TRIALS), Freeness::NotFree(_)));
    }

    #[test]
    fn tensor_with_trivial_and_squares() {
        let h = zoo::fz2w(f13()).unwrap();
        let reg = ModuleRep::regular(h.alg(), Side::Right);
        let t = ModuleRep::trivial(h.qb(), Side::Right);
        let wk = tensor_modules(h.qb(), &reg, &t).unwrap();
        assert_eq!(wk.mdim(), 2);
        assert!(iso_test(&wk, &reg, 0, DEFAULT_TRIALS).unwrap().is_yes());
        let rr = tensor_modules(h.qb(), &reg, &reg).unwrap();
        assert!(is_module(&rr).passed());
        assert!(iso_test(&rr, &reg.power(2), 0, DEFAULT_TRIALS).unwrap().is_yes());
        assert!(tensor_modules(h.qb(), &reg, &ModuleRep::regular(h.alg(), Side::Left)).is_err());
    }

    #[test]
    fn tensor_dimensions_over_zoo_pairs() {
        let h = zoo::fz4w(f13()).unwrap();
        let mods = [
            ModuleRep::trivial(h.qb(), Side::Left),
            ModuleRep::regular(h.alg(), Side::Left),
            ModuleRep::regular(h.alg(), Side::Left).power(2),
        ];
        for w in &mods {
            for v in &mods {
                let t = tensor_modules(h.qb(), w, v).unwrap();
                assert_eq!(t.mdim(), w.mdim() * v.mdim());
                assert!(is_module(&t).passed());
            }
        }
    }

    #[test]
    fn faithful_tensor_with_trivial_summand() {
        let h = zoo::fz2w(f13()).unwrap();
        let m = ModuleRep::regular(h.alg(), Side::Left);
        let n = ModuleRep::trivial(h.qb(), Side::Left).direct_sum(&m).unwrap();
        assert!(is_faithful(&tensor_modules(h.qb(), &m, &n).unwrap()).0);
    }

    #[test]
    fn duals() {
        let h = kz2();
        let t = ModuleRep::trivial(h.qb(), Side::Left);
        assert_eq!(dual_left_module(&h, &t).unwrap(), t);
        let reg = ModuleRep::regular(h.alg(), Side::Left);
        let d = dual_left_module(&h, &reg).unwrap();
        assert!(is_module(&d).passed());
        assert!(iso_test(&d, &reg, 0, DEFAULT_TRIALS).unwrap().is_yes());
        let w = zoo::fz2w(f13()).unwrap();
        let reg = ModuleRep::regular(w.alg(), Side::Left);
        let dd = dual_left_module(&w, &dual_left_module(&w, &reg).unwrap()).unwrap();
        assert!(is_module(&dd).passed());
        for i in 0..2 {
            let s2 = w.s(&w.s(&w.alg().basis(i)));
            assert_eq!(dd.action()[i], reg.act(&s2));
        }
    }

    #[test]
    fn bimodules() {
        let h = zoo::fz2w(f13()).unwrap();
        let reg = BimoduleRep::regular(h.alg());
        assert!(is_bimodule(&reg).passed());
        let t = BimoduleRep::trivial(h.qb());
        assert!(is_bimodule(&t).passed());
        let rt = tensor_bimodules(h.qb(), &reg, &t).unwrap();
        assert!(is_bimodule(&rt).passed());
        assert!(bimodule_iso_test(&rt, &reg, 0, DEFAULT_TRIALS).unwrap().is_yes());
        assert!(!bimodule_iso_test(&reg, &t.direct_sum(&t).unwrap(), 0, DEFAULT_TRIALS).unwrap().is_yes());
    }
}
