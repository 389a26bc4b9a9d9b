//! JSON instance files.
//!
//! ```json
//! {
//!   "field": {"prime": 13},
//!   "quasi_hopf": {"H": {"dim": 2, "mult": [{"indices": [0, 0, 0], "coeff": "1"}], ...}},
//!   "modules": {"V": {"side": "right", "algebra": "H", "mdim": 2, "action": [...]}},
//!   "bimodules": {"P": {"algebra": "H", "mdim": 2, "left": [...], "right": [...]}},
//!   "embeddings": {"E": {"sub": "K", "ambient": "H", "incl": [...]}},
//!   "hopf_modules": {"M": {"embedding": "E", "bimodule": "P", "side": "right", "coaction": [...]}}
//! }
//! ```
//!
//! Tensors are sparse lists of `{indices, coeff}` with string coefficients
//! (`"3"`, `"-1"`, `"2/3"`). Quasi-Hopf components use the layouts of
//! [`QuasiHopfParts`]; action lists are indexed `[basis, row, col]`; the
//! inclusion and coaction are `[row, col]` matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopfmod::{CoactionSide, HopfModule, SubalgebraEmbedding};
use crate::linalg::{Field, Matrix, Scalar};
use crate::modrep::{BimoduleRep, ModuleRep, Side};
use crate::quasi::{QuasiHopfAlgebra, QuasiHopfParts};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rationals: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuasiHopfSpec {
    pub dim: usize,
    pub mult: Vec<Entry>,
    pub unit: Vec<Entry>,
    pub comul: Vec<Entry>,
    pub counit: Vec<Entry>,
    pub assoc: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assoc_inv: Option<Vec<Entry>>,
    pub antipode: Vec<Entry>,
    pub alpha: Vec<Entry>,
    pub beta: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub side: Side,
    pub algebra: String,
    pub mdim: usize,
    pub action: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub algebra: String,
    pub mdim: usize,
    pub left: Vec<Entry>,
    pub right: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingSpec {
    pub sub: String,
    pub ambient: String,
    pub incl: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfModuleSpec {
    pub embedding: String,
    pub bimodule: String,
    #[serde(default = "right")]
    pub side: Side,
    pub coaction: Vec<Entry>,
}

fn right() -> Side {
    Side::Right
}

/// The file as written, before names are resolved.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub quasi_hopf: BTreeMap<String, QuasiHopfSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub embeddings: BTreeMap<String, EmbeddingSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub hopf_modules: BTreeMap<String, HopfModuleSpec>,
}

/// Resolved objects.
#[derive(Clone, Debug, Default)]
pub struct Instances {
    pub field: Option<Field>,
    pub quasi_hopf: BTreeMap<String, Arc<QuasiHopfAlgebra>>,
    pub modules: BTreeMap<String, ModuleRep>,
    pub bimodules: BTreeMap<String, BimoduleRep>,
    pub embeddings: BTreeMap<String, Arc<SubalgebraEmbedding>>,
    pub hopf_modules: BTreeMap<String, HopfModule>,
}

fn dense(field: Field, shape: &[usize], entries: &[Entry], at: &str) -> Result<Vec<Scalar>> {
    let len: usize = shape.iter().product();
    let mut out = vec![field.zero(); len];
    let mut seen = vec![false; len];
    for (k, e) in entries.iter().enumerate() {
        let here = format!("{at}[{k}]");
        if e.indices.len() != shape.len() {
            return Err(Error::Parse(format!("{here}: expected {} indices, got {}", shape.len(), e.indices.len())));
        }
        let mut flat = 0;
        for (&i, &d) in e.indices.iter().zip(shape) {
            if i >= d {
                return Err(Error::Parse(format!("{here}: index {i} out of range {d}")));
            }
            flat = flat * d + i;
        }
        if seen[flat] {
            return Err(Error::Parse(format!("{here}: duplicate entry {:?}", e.indices)));
        }
        seen[flat] = true;
        out[flat] = field.parse(&e.coeff).map_err(|err| Error::Parse(format!("{here}: {err}")))?;
    }
    Ok(out)
}

fn sparse(values: &[Scalar], shape: &[usize]) -> Vec<Entry> {
    let idx = crate::linalg::TensorIndex::new(shape);
    crate::linalg::nonzeros(values)
        .map(|(flat, v)| Entry {
            indices: idx.unflat(flat),
            coeff: v.encode(),
        })
        .collect()
}

fn matrices(field: Field, count: usize, mdim: usize, entries: &[Entry], at: &str) -> Result<Vec<Matrix>> {
    let flat = dense(field, &[count, mdim, mdim], entries, at)?;
    Ok((0..count)
        .map(|i| Matrix::from_fn(field, mdim, mdim, |r, c| flat[(i * mdim + r) * mdim + c].clone()))
        .collect())
}

fn matrices_sparse(ms: &[Matrix], mdim: usize) -> Vec<Entry> {
    let flat: Vec<Scalar> = ms.iter().flat_map(|m| m.entries().iter().cloned()).collect();
    sparse(&flat, &[ms.len(), mdim, mdim])
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, kind: &str, at: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| Error::Unresolved(format!("{at}: no {kind} named '{name}'")))
}

impl FieldSpec {
    pub fn of(field: Field) -> FieldSpec {
        match field {
            Field::Prime(p) => FieldSpec {
                prime: Some(p),
                rationals: None,
            },
            Field::Rationals => FieldSpec {
                prime: None,
                rationals: Some(true),
            },
        }
    }

    pub fn resolve(&self) -> Result<Field> {
        match (self.prime, self.rationals) {
            (Some(p), None | Some(false)) => Field::prime(p).map_err(|e| Error::Parse(format!("field: {e}"))),
            (None, Some(true)) => Ok(Field::Rationals),
            _ => Err(Error::Parse("field: give exactly one of {\"prime\": p} or {\"rationals\": true}".into())),
        }
    }
}

impl QuasiHopfSpec {
    pub fn of(h: &QuasiHopfAlgebra) -> QuasiHopfSpec {
        let p = h.to_parts();
        let n = p.dim;
        QuasiHopfSpec {
            dim: n,
            mult: sparse(&p.mult, &[n, n, n]),
            unit: sparse(&p.unit, &[n]),
            comul: sparse(&p.comul, &[n, n, n]),
            counit: sparse(&p.counit, &[n]),
            assoc: sparse(&p.assoc, &[n, n, n]),
            assoc_inv: p.assoc_inv.as_ref().map(|v| sparse(v, &[n, n, n])),
            antipode: sparse(&p.antipode, &[n, n]),
            alpha: sparse(&p.alpha, &[n]),
            beta: sparse(&p.beta, &[n]),
        }
    }

    pub fn resolve(&self, field: Field, at: &str) -> Result<QuasiHopfAlgebra> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse(format!("{at}.dim: must be positive")));
        }
        let t = |entries: &[Entry], shape: &[usize], what: &str| dense(field, shape, entries, &format!("{at}.{what}"));
        let parts = QuasiHopfParts {
            field,
            dim: n,
            mult: t(&self.mult, &[n, n, n], "mult")?,
            unit: t(&self.unit, &[n], "unit")?,
            comul: t(&self.comul, &[n, n, n], "comul")?,
            counit: t(&self.counit, &[n], "counit")?,
            assoc: t(&self.assoc, &[n, n, n], "assoc")?,
            assoc_inv: self.assoc_inv.as_ref().map(|e| t(e, &[n, n, n], "assoc_inv")).transpose()?,
            antipode: t(&self.antipode, &[n, n], "antipode")?,
            alpha: t(&self.alpha, &[n], "alpha")?,
            beta: t(&self.beta, &[n], "beta")?,
        };
        parts.build().map_err(|e| match e {
            Error::Invalid(msg) | Error::Dimension(msg) => Error::Invalid(format!("{at}: {msg}")),
            other => other,
        })
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files serialize")
    }

    pub fn new(field: Field) -> InstanceFile {
        InstanceFile {
            field: FieldSpec::of(field),
            ..InstanceFile::default()
        }
    }

    pub fn add_quasi_hopf(&mut self, name: &str, h: &QuasiHopfAlgebra) {
        self.quasi_hopf.insert(name.to_string(), QuasiHopfSpec::of(h));
    }

    pub fn add_module(&mut self, name: &str, algebra: &str, m: &ModuleRep) {
        self.modules.insert(
            name.to_string(),
            ModuleSpec {
                side: m.side(),
                algebra: algebra.to_string(),
                mdim: m.mdim(),
                action: matrices_sparse(m.action(), m.mdim()),
            },
        );
    }

    pub fn add_bimodule(&mut self, name: &str, algebra: &str, b: &BimoduleRep) {
        self.bimodules.insert(
            name.to_string(),
            BimoduleSpec {
                algebra: algebra.to_string(),
                mdim: b.mdim(),
                left: matrices_sparse(b.left(), b.mdim()),
                right: matrices_sparse(b.right(), b.mdim()),
            },
        );
    }

    pub fn add_embedding(&mut self, name: &str, sub: &str, ambient: &str, e: &SubalgebraEmbedding) {
        self.embeddings.insert(
            name.to_string(),
            EmbeddingSpec {
                sub: sub.to_string(),
                ambient: ambient.to_string(),
                incl: sparse(e.incl().entries(), &[e.incl().rows(), e.incl().cols()]),
            },
        );
    }

    pub fn add_hopf_module(&mut self, name: &str, embedding: &str, bimodule: &str, m: &HopfModule) {
        let side = match m.side() {
            CoactionSide::Right => Side::Right,
            CoactionSide::Left => Side::Left,
        };
        let c = m.coaction();
        self.hopf_modules.insert(
            name.to_string(),
            HopfModuleSpec {
                embedding: embedding.to_string(),
                bimodule: bimodule.to_string(),
                side,
                coaction: sparse(c.entries(), &[c.rows(), c.cols()]),
            },
        );
    }

    /// Builds every object, resolving names. Shape and structural errors
    /// carry the path of the offending object.
    pub fn resolve(&self) -> Result<Instances> {
        let field = self.field.resolve()?;
        let mut out = Instances {
            field: Some(field),
            ..Instances::default()
        };
        for (name, spec) in &self.quasi_hopf {
            let h = spec.resolve(field, &format!("quasi_hopf.{name}"))?;
            out.quasi_hopf.insert(name.clone(), Arc::new(h));
        }
        for (name, spec) in &self.modules {
            let at = format!("modules.{name}");
            let h = lookup(&out.quasi_hopf, &spec.algebra, "quasi_hopf", &at)?;
            let action = matrices(field, h.dim(), spec.mdim, &spec.action, &format!("{at}.action"))?;
            let m = ModuleRep::new(spec.side, h.alg().clone(), action).map_err(|e| Error::Invalid(format!("{at}: {e}")))?;
            out.modules.insert(name.clone(), m);
        }
        for (name, spec) in &self.bimodules {
            let at = format!("bimodules.{name}");
            let h = lookup(&out.quasi_hopf, &spec.algebra, "quasi_hopf", &at)?;
            let left = matrices(field, h.dim(), spec.mdim, &spec.left, &format!("{at}.left"))?;
            let right = matrices(field, h.dim(), spec.mdim, &spec.right, &format!("{at}.right"))?;
            let b = BimoduleRep::new(h.alg().clone(), left, right).map_err(|e| Error::Invalid(format!("{at}: {e}")))?;
            out.bimodules.insert(name.clone(), b);
        }
        for (name, spec) in &self.embeddings {
            let at = format!("embeddings.{name}");
            let k = lookup(&out.quasi_hopf, &spec.sub, "quasi_hopf", &at)?.clone();
            let h = lookup(&out.quasi_hopf, &spec.ambient, "quasi_hopf", &at)?.clone();
            let (rows, cols) = (h.dim(), k.dim());
            let incl = dense(field, &[rows, cols], &spec.incl, &format!("{at}.incl"))?;
            let incl = Matrix::from_fn(field, rows, cols, |r, c| incl[r * cols + c].clone());
            let e = SubalgebraEmbedding::new(k, h, incl).map_err(|e| Error::Invalid(format!("{at}: {e}")))?;
            out.embeddings.insert(name.clone(), Arc::new(e));
        }
        for (name, spec) in &self.hopf_modules {
            let at = format!("hopf_modules.{name}");
            let e = lookup(&out.embeddings, &spec.embedding, "embedding", &at)?.clone();
            let b = lookup(&out.bimodules, &spec.bimodule, "bimodule", &at)?.clone();
            let (rows, cols) = (b.mdim() * e.h().dim(), b.mdim());
            let c = dense(field, &[rows, cols], &spec.coaction, &format!("{at}.coaction"))?;
            let c = Matrix::from_fn(field, rows, cols, |r, col| c[r * cols + col].clone());
            let side = match spec.side {
                Side::Right => CoactionSide::Right,
                Side::Left => CoactionSide::Left,
            };
            let m = HopfModule::new(e, b, c, side).map_err(|e| Error::Invalid(format!("{at}: {e}")))?;
            out.hopf_modules.insert(name.clone(), m);
        }
        Ok(out)
    }
}

pub fn load_str(text: &str) -> Result<Instances> {
    InstanceFile::parse(text)?.resolve()
}
