//! Integrals, semisimplicity, and Frobenius forms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::modrep::{BimoduleRep, Side};
use crate::quasi::QuasiHopfAlgebra;

/// Elements `t` with `h t = ε(h) t` (left) or `t h = ε(h) t` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpace {
    pub side: Side,
    pub basis: Vec<Vec<Scalar>>,
}

impl IntegralSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn integral_space(h: &QuasiHopfAlgebra, side: Side) -> IntegralSpace {
    let a = h.alg();
    let n = h.dim();
    let f = h.field();
    let eps = h.qb().counit();
    let blocks: Vec<Matrix> = (0..n)
        .map(|i| {
            let e = a.basis(i);
            let m = match side {
                Side::Left => a.left_mult_matrix(&e),
                Side::Right => a.right_mult_matrix(&e),
            };
            m.sub(&Matrix::identity(f, n).scale(eps.get(0, i)))
        })
        .collect();
    let ker = Matrix::stack_rows(f, n, &blocks).kernel();
    IntegralSpace {
        side,
        basis: ker.columns(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PanResult {
    pub semisimple: bool,
    /// A left integral with `ε(t) = 1`, when one exists.
    pub integral: Option<Vec<Scalar>>,
    pub integrals: IntegralSpace,
}

/// Semisimple iff some left integral has `ε(t) ≠ 0`.
pub fn pan_semisimple(h: &QuasiHopfAlgebra) -> PanResult {
    let integrals = integral_space(h, Side::Left);
    let integral = integrals.basis.iter().find_map(|t| {
        let e = h.qb().epsilon(t);
        let inv = e.inv()?;
        Some(t.iter().map(|v| v * &inv).collect::<Vec<_>>())
    });
    PanResult {
        semisimple: integral.is_some(),
        integral,
        integrals,
    }
}

/// Radical of the trace form `T(a,b) = tr(L_a L_b)` (basis as columns).
/// Only meaningful in characteristic 0 or `p > dim A`.
pub fn radical_oracle(a: &FinAlgebra) -> Result<Matrix> {
    let n = a.dim();
    let p = a.field().characteristic();
    if p != 0 && p <= n as u64 {
        return Err(Error::Unsupported(format!(
            "trace-form radical needs characteristic 0 or p > {n}, got p = {p}"
        )));
    }
    let l: Vec<Matrix> = (0..n).map(|i| a.left_mult_matrix(&a.basis(i))).collect();
    let f = a.field();
    let gram = Matrix::from_fn(f, n, n, |i, j| {
        let prod = l[i].mul(&l[j]);
        (0..n).fold(f.zero(), |acc, k| &acc + prod.get(k, k))
    });
    Ok(gram.kernel())
}

/// `λ` with `[λ(e_i e_j)]` and `[λ(S⁻¹(e_i) e_j)]` both invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub lambda: Vec<Scalar>,
    pub gram_mult: Matrix,
    pub gram_twisted: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusSearch {
    Found {
        form: FrobeniusForm,
        /// 1-based count of candidates tried.
        attempts: usize,
    },
    NeedLargerField,
}

fn gram(a: &FinAlgebra, lambda: &[Scalar], left: impl Fn(usize) -> Vec<Scalar>) -> Matrix {
    let n = a.dim();
    let f = a.field();
    Matrix::from_fn(f, n, n, |i, j| {
        let p = a.mul(&left(i), &a.basis(j));
        p.iter().zip(lambda).fold(f.zero(), |acc, (x, l)| &acc + &(x * l))
    })
}

fn try_form(h: &QuasiHopfAlgebra, lambda: Vec<Scalar>) -> Option<FrobeniusForm> {
    let a = h.alg();
    let gram_mult = gram(a, &lambda, |i| a.basis(i));
    let gram_twisted = gram(a, &lambda, |i| h.antipode_inv().column(i));
    // S⁻¹ only changes basis in the first argument.
    assert_eq!(gram_twisted, h.antipode_inv().transpose().mul(&gram_mult));
    let n = h.dim();
    (gram_mult.rank() == n && gram_twisted.rank() == n).then_some(FrobeniusForm {
        lambda,
        gram_mult,
        gram_twisted,
    })
}

/// Random functionals first, then dual-basis vectors and their partial sums.
pub fn find_frobenius_form(h: &QuasiHopfAlgebra, seed: u64, trials: usize) -> FrobeniusSearch {
    let f = h.field();
    let n = h.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    for _ in 0..trials {
        attempts += 1;
        let lambda: Vec<Scalar> = (0..n).map(|_| f.random(&mut rng)).collect();
        if let Some(form) = try_form(h, lambda) {
            return FrobeniusSearch::Found { form, attempts };
        }
    }
    let structured = (0..n).map(|k| h.alg().basis(k)).chain((1..=n).map(|m| {
        (0..n).map(|i| if i < m { f.one() } else { f.zero() }).collect()
    }));
    for lambda in structured {
        attempts += 1;
        if let Some(form) = try_form(h, lambda) {
            return FrobeniusSearch::Found { form, attempts };
        }
    }
    FrobeniusSearch::NeedLargerField
}

/// `H*` with `⟨g·φ·h, v⟩ = ⟨φ, S(g) v S⁻¹(h)⟩`, in the dual basis.
pub fn dual_bimodule_hstar(h: &QuasiHopfAlgebra) -> BimoduleRep {
    let a = h.alg();
    let n = h.dim();
    let left = (0..n).map(|i| a.left_mult_matrix(&h.antipode().column(i)).transpose()).collect();
    let right = (0..n).map(|i| a.right_mult_matrix(&h.antipode_inv().column(i)).transpose()).collect();
    BimoduleRep::new(a.clone(), left, right).expect("dual actions have the right shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::modrep::{freeness_check, is_bimodule, DEFAULT_TRIALS};
    use crate::zoo::{self, GroupTable};

    fn f13() -> Field {
        Field::Prime(13)
    }

    #[test]
    fn group_algebra_integrals() {
        let f = f13();
        for g in [GroupTable::cyclic(2), GroupTable::cyclic(4), GroupTable::symmetric3()] {
            let h = zoo::group_algebra(&g, f).unwrap();
            let s = integral_space(&h, Side::Left);
            assert_eq!(s.dim(), 1);
            let t = &s.basis[0];
            assert!(t.iter().all(|v| v == &t[0]));
        }
    }

    #[test]
    fn dual_group_integral_is_identity_idempotent() {
        let h = zoo::fz4w(f13()).unwrap();
        let s = integral_space(&h, Side::Left);
        assert_eq!(s.dim(), 1);
        let pan = pan_semisimple(&h);
        assert_eq!(pan.integral.unwrap(), h.alg().basis(0));
    }

    #[test]
    fn pan_examples() {
        let h = zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap();
        let pan = pan_semisimple(&h);
        assert!(pan.semisimple);
        let half = f13().from_ratio(1, 2).unwrap();
        assert_eq!(pan.integral.unwrap(), vec![half.clone(), half]);

        let f2 = Field::Prime(2);
        let h = zoo::group_algebra(&GroupTable::cyclic(2), f2).unwrap();
        let pan = pan_semisimple(&h);
        assert!(!pan.semisimple);
        assert_eq!(pan.integrals.basis, vec![vec![f2.one(), f2.one()]]);
        assert!(h.qb().epsilon(&pan.integrals.basis[0]).is_zero());

        for p in [3, 5, 7, 13] {
            let h = zoo::fz2w(Field::Prime(p)).unwrap();
            let pan = pan_semisimple(&h);
            assert!(pan.semisimple);
            assert_eq!(pan.integral.unwrap(), h.alg().basis(0));
        }
    }

    #[test]
    fn radical_examples() {
        let h = zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap();
        assert_eq!(radical_oracle(h.alg()).unwrap().cols(), 0);
        let h2 = zoo::group_algebra(&GroupTable::cyclic(2), Field::Prime(2)).unwrap();
        assert!(matches!(radical_oracle(h2.alg()), Err(Error::Unsupported(_))));
        let g = GroupTable::cyclic(4);
        let d = zoo::dual_group_algebra(&g, &zoo::Cocycle3::trivial(&g, f13())).unwrap();
        assert_eq!(radical_oracle(d.alg()).unwrap().cols(), 0);
        // kZ/3 over GF(5) is semisimple, kZ/5 over GF(7) too; Z/3 over GF(3) is not
        // covered by the oracle.
        let h = zoo::group_algebra(&GroupTable::cyclic(3), Field::Prime(3)).unwrap();
        assert!(radical_oracle(h.alg()).is_err());
    }

    #[test]
    fn radical_of_dual_numbers() {
        // k[x]/x² has radical spanned by x.
        let f = f13();
        let a = FinAlgebra::from_products(f, 2, vec![f.one(), f.zero()], |i, j| {
            let mut v = vec![f.zero(); 2];
            if i + j < 2 {
                v[i + j] = f.one();
            }
            v
        })
        .unwrap();
        let rad = radical_oracle(&a).unwrap();
        assert_eq!(rad.cols(), 1);
        assert!(rad.get(0, 0).is_zero());
    }

    #[test]
    fn frobenius_forms_over_zoo() {
        for name in zoo::NAMES {
            let zoo::Instance::QuasiHopf(h) = zoo::instance(name, f13()).unwrap() else { continue };
            match find_frobenius_form(&h, 0, DEFAULT_TRIALS) {
                FrobeniusSearch::Found { form, .. } => {
                    assert_eq!(form.gram_mult.rank(), h.dim());
                    assert_eq!(form.gram_twisted.rank(), h.dim());
                }
                FrobeniusSearch::NeedLargerField => panic!("{name}"),
            }
        }
    }

    #[test]
    fn structured_candidates() {
        let h = zoo::group_algebra(&GroupTable::symmetric3(), f13()).unwrap();
        let form = try_form(&h, h.alg().basis(0)).unwrap();
        // λ = δ_1 pairs g with g⁻¹: a permutation matrix.
        for i in 0..6 {
            let row: Vec<bool> = form.gram_mult.row(i).iter().map(|v| v.is_one()).collect();
            assert_eq!(row.iter().filter(|&&b| b).count(), 1);
        }
        let w = zoo::fz2w(f13()).unwrap();
        let form = try_form(&w, vec![f13().one(), f13().one()]).unwrap();
        assert_eq!(form.gram_mult, Matrix::identity(f13(), 2));
    }

    #[test]
    fn hstar_is_free_of_rank_one() {
        for h in [zoo::group_algebra(&GroupTable::cyclic(2), f13()).unwrap(), zoo::fz2w(f13()).unwrap(), zoo::fz4w(f13()).unwrap()] {
            let hs = dual_bimodule_hstar(&h);
            assert_eq!(hs.mdim(), h.dim());
            assert!(is_bimodule(&hs).passed());
            assert_eq!(freeness_check(&hs.right_module(), 0, DEFAULT_TRIALS).rank(), Some(1));
        }
    }
}
