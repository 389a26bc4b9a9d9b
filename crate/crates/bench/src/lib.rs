//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use quohal::hopfmod::{cofree_hopf_module, HopfModule};
use quohal::{zoo, BimoduleRep, Field, Matrix, ModuleRep, QuasiHopfAlgebra, SubalgebraEmbedding};

pub fn field() -> Field {
    Field::Prime(101)
}

pub fn fz4w() -> QuasiHopfAlgebra {
    zoo::fz4w(field()).expect("4 divides 100")
}

/// Deterministic dense matrix with scrambled entries.
pub fn dense_matrix(n: usize, seed: u64) -> Matrix {
    let f = field();
    Matrix::from_fn(f, n, n, |r, c| f.from_u64((r as u64 * 31 + c as u64 * 17 + seed) * 2654435761 % 101))
}

/// Regular right module of `H ⊗ H` for `H = fZ4w` and a conjugated copy.
pub fn iso_pair() -> (ModuleRep, ModuleRep) {
    let h = fz4w();
    let reg = ModuleRep::regular(h.alg(), quohal::Side::Right).power(2);
    let n = reg.mdim();
    let f = field();
    let p = Matrix::from_fn(f, n, n, |r, c| if r == c || c == r + 1 { f.one() } else { f.zero() });
    let pinv = p.invert().expect("unitriangular");
    let action = reg.action().iter().map(|a| pinv.mul(a).mul(&p)).collect();
    let conj = ModuleRep::new(quohal::Side::Right, h.alg().clone(), action).expect("same shape");
    (reg, conj)
}

pub fn cofree_regular() -> HopfModule {
    let h = Arc::new(fz4w());
    let e = Arc::new(SubalgebraEmbedding::identity(&h));
    cofree_hopf_module(&BimoduleRep::regular(h.alg()), &e).expect("identity embedding")
}
