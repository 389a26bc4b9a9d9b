//! Freeness and semisimplicity theorems as executable checks.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopfmod::{verify_hopf_module, HopfModule, SubalgebraEmbedding};
use crate::integrals::{pan_semisimple, radical_oracle};
use crate::linalg::Matrix;
use crate::modrep::{freeness_check, is_faithful, is_module, iso_test, tensor_modules, Freeness, IsoWitness, ModuleRep, Side};
use crate::quasi::{verify_all, QuasiHopfAlgebra};
use crate::report::{AxiomReport, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Confirmed,
    Refuted,
    Unknown,
    /// A hypothesis failed, so the theorem asserts nothing.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub hypotheses: AxiomReport,
    pub conclusion: Conclusion,
    pub evidence: Vec<(String, Value)>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(theorem: &str) -> TheoremReport {
        TheoremReport {
            theorem: theorem.to_string(),
            hypotheses: AxiomReport::new("hypotheses"),
            conclusion: Conclusion::Unknown,
            evidence: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn evidence(&mut self, name: &str, v: Value) {
        self.evidence.push((name.to_string(), v));
    }

    pub fn confirmed(&self) -> bool {
        self.conclusion == Conclusion::Confirmed
    }

    /// Looks up a piece of evidence by name.
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.evidence.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    fn hypothesis(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> bool {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.hypotheses.record_status(name, status, detail);
        ok
    }

    fn verified(&mut self, name: &str, h: &QuasiHopfAlgebra) -> bool {
        let r = verify_all(h);
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        let detail = if failed.is_empty() { "all axioms pass".to_string() } else { failed.join(", ") };
        self.hypothesis(name, r.passed(), detail)
    }
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows()).map(|r| m.row(r).iter().map(|s| s.encode()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// Records a freeness outcome; returns its contribution to the conclusion.
fn record_freeness(rep: &mut TheoremReport, label: &str, got: &Freeness, expected: usize) -> Conclusion {
    match got {
        Freeness::FreeOfRank(r, iso) => {
            rep.evidence(&format!("{label}_rank"), json!(r));
            rep.evidence(&format!("{label}_iso"), matrix_json(iso));
            if *r == expected {
                Conclusion::Confirmed
            } else {
                Conclusion::Refuted
            }
        }
        Freeness::NotFree(why) => {
            rep.evidence(&format!("{label}_not_free"), json!(why));
            rep.notes.push(format!(
                "{label}: not free on verified input; this contradicts the theorem and points at a corrupted instance or a bug"
            ));
            Conclusion::Refuted
        }
        Freeness::Unknown { bound } => {
            rep.evidence(&format!("{label}_unknown_bound"), json!(bound));
            Conclusion::Unknown
        }
    }
}

fn combine(parts: &[Conclusion]) -> Conclusion {
    if parts.contains(&Conclusion::Refuted) {
        Conclusion::Refuted
    } else if parts.contains(&Conclusion::Unknown) {
        Conclusion::Unknown
    } else {
        Conclusion::Confirmed
    }
}

/// `H` is free as a right and as a left `K`-module of rank `dim H / dim K`.
pub fn nz_freeness(e: &SubalgebraEmbedding, seed: u64, trials: usize) -> TheoremReport {
    let mut rep = TheoremReport::new("nz_freeness");
    let ok_h = rep.verified("H_quasi_hopf", e.h());
    let ok_k = rep.verified("K_quasi_hopf", e.k());
    rep.hypothesis("K_subalgebra", true, e.regime());
    rep.notes.push("finite generation is automatic in finite dimension".into());
    if !(ok_h && ok_k) {
        rep.conclusion = Conclusion::NotApplicable;
        return rep;
    }
    let (nh, nk) = (e.h().dim(), e.k().dim());
    if nh % nk != 0 {
        rep.evidence("divisibility", json!(format!("dim K = {nk} does not divide dim H = {nh}")));
        rep.conclusion = Conclusion::Refuted;
        return rep;
    }
    let expected = nh / nk;
    rep.evidence("expected_rank", json!(expected));
    let mut parts = Vec::new();
    for (label, side) in [("right", Side::Right), ("left", Side::Left)] {
        let m = ModuleRep::regular(e.h().alg(), side).restrict(e.k().alg(), e.incl());
        parts.push(record_freeness(&mut rep, label, &freeness_check(&m, seed, trials), expected));
    }
    rep.conclusion = combine(&parts);
    rep
}

/// A Hopf module over a quasi-Hopf subalgebra is free as a left `K`-module.
pub fn hopf_module_freeness(m: &HopfModule, seed: u64, trials: usize) -> Result<TheoremReport> {
    let e = m.embedding();
    if !e.is_quasi_hopf_sub() {
        return Err(Error::Regime(format!(
            "Hopf-module freeness needs a quasi-Hopf subalgebra; embedding is a {}",
            e.regime()
        )));
    }
    let mut rep = TheoremReport::new("hopf_module_freeness");
    rep.hypothesis("quasi_hopf_sub", true, e.regime());
    let hm = verify_hopf_module(m)?;
    let failed: Vec<&str> = hm.failures().map(|c| c.name.as_str()).collect();
    let ok = rep.hypothesis("hopf_module", hm.passed(), if failed.is_empty() { "verified".into() } else { failed.join(", ") });
    rep.notes.push("finite generation is automatic in finite dimension".into());
    if !ok {
        rep.conclusion = Conclusion::NotApplicable;
        return Ok(rep);
    }
    let nk = e.k().dim();
    if m.mdim() % nk != 0 {
        rep.evidence("divisibility", json!(format!("dim K = {nk} does not divide dim M = {}", m.mdim())));
        rep.conclusion = Conclusion::Refuted;
        return Ok(rep);
    }
    let expected = m.mdim() / nk;
    rep.evidence("expected_rank", json!(expected));
    let got = freeness_check(&m.carrier().left_module(), seed, trials);
    rep.conclusion = record_freeness(&mut rep, "left", &got, expected);
    Ok(rep)
}

/// If `V` is faithful and `W ⊗ V ≅ W^{dim V}` then `W` is free.
pub fn auxthm_check(k: &QuasiHopfAlgebra, w: &ModuleRep, v: &ModuleRep, seed: u64, trials: usize) -> Result<TheoremReport> {
    for m in [w, v] {
        if m.side() != Side::Right || **m.algebra() != **k.alg() {
            return Err(Error::Invalid("auxthm_check needs right modules over K".into()));
        }
    }
    let mut rep = TheoremReport::new("auxthm");
    let mut ok = rep.verified("K_quasi_hopf", k);
    ok &= rep.hypothesis("W_module", is_module(w).passed(), "action axioms");
    ok &= rep.hypothesis("V_module", is_module(v).passed(), "action axioms");
    let (faithful, ann) = is_faithful(v);
    ok &= rep.hypothesis("V_faithful", faithful, format!("annihilator dimension {}", ann.cols()));
    rep.notes.push("finite generation is automatic in finite dimension".into());
    if !ok {
        rep.conclusion = Conclusion::NotApplicable;
        return Ok(rep);
    }
    let wv = tensor_modules(k.qb(), w, v)?;
    match iso_test(&wv, &w.power(v.mdim()), seed, trials)? {
        IsoWitness::Yes(x) => {
            rep.hypothesis("tensor_iso", true, format!("W⊗V ≅ W^{}", v.mdim()));
            rep.evidence("tensor_iso", matrix_json(&x));
        }
        IsoWitness::No(why) => {
            rep.hypothesis("tensor_iso", false, why);
            rep.conclusion = Conclusion::NotApplicable;
            return Ok(rep);
        }
        IsoWitness::Unknown { bound } => {
            rep.hypotheses.record_status("tensor_iso", Status::Unknown, format!("no iso found, miss bound {bound:.3e}"));
            rep.conclusion = Conclusion::Unknown;
            return Ok(rep);
        }
    }
    let nk = k.dim();
    if w.mdim() % nk != 0 {
        rep.evidence("divisibility", json!(format!("dim K = {nk} does not divide dim W = {}", w.mdim())));
        rep.conclusion = Conclusion::Refuted;
        return Ok(rep);
    }
    let expected = w.mdim() / nk;
    rep.evidence("expected_rank", json!(expected));
    rep.conclusion = record_freeness(&mut rep, "W", &freeness_check(w, seed, trials), expected);
    Ok(rep)
}

/// `H` semisimple and `K` a quasi-Hopf subalgebra-and-subcoalgebra imply `K`
/// semisimple; cross-checked with the trace-form radical where supported.
pub fn semisimple_descent(e: &SubalgebraEmbedding) -> TheoremReport {
    let mut rep = TheoremReport::new("semisimple_descent");
    let mut ok = rep.verified("H_quasi_hopf", e.h());
    ok &= rep.verified("K_quasi_hopf", e.k());
    ok &= rep.hypothesis("K_subcoalgebra", e.is_subcoalgebra(), e.regime());
    let pan_h = pan_semisimple(e.h());
    ok &= rep.hypothesis("H_semisimple", pan_h.semisimple, "left integral with ε(t) ≠ 0");
    if let Some(t) = &pan_h.integral {
        rep.evidence("H_integral", json!(t.iter().map(|s| s.encode()).collect::<Vec<_>>()));
    }
    if !ok {
        rep.conclusion = Conclusion::NotApplicable;
        return rep;
    }
    let pan_k = pan_semisimple(e.k());
    if let Some(t) = &pan_k.integral {
        rep.evidence("K_integral", json!(t.iter().map(|s| s.encode()).collect::<Vec<_>>()));
    }
    let mut conclusion = if pan_k.semisimple { Conclusion::Confirmed } else { Conclusion::Refuted };
    for (label, h) in [("H", e.h()), ("K", e.k())] {
        match radical_oracle(h.alg()) {
            Ok(rad) => {
                let agrees = (rad.cols() == 0) == pan_semisimple(h).semisimple;
                rep.evidence(&format!("{label}_radical_dim"), json!(rad.cols()));
                if !agrees {
                    rep.notes.push(format!("{label}: trace-form radical disagrees with the integral criterion"));
                    conclusion = Conclusion::Refuted;
                }
            }
            Err(err) => rep.notes.push(format!("{label}: radical cross-check skipped ({err})")),
        }
    }
    rep.conclusion = conclusion;
    rep
}
