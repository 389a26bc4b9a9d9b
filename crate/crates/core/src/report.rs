//! Pass/fail records for axiom checks, with recomputable witnesses.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::linalg::Scalar;

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.encode())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
    Unsupported,
}

/// A failing basis tuple and the residual `lhs - rhs` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> AxiomReport {
        AxiomReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Records `name` as passing when `witness` is `None`, failing otherwise.
    pub fn record(&mut self, name: &str, witness: Option<Witness>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            detail: None,
        });
    }

    pub fn record_status(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status,
            witness: None,
            detail: Some(detail.into()),
        });
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Status of the named check, if it was run.
    pub fn status(&self, name: &str) -> Option<Status> {
        self.check(name).map(|c| c.status)
    }

    /// The most severe status present (`Pass` for an empty report).
    pub fn worst(&self) -> Status {
        self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.subject)?;
        for c in &self.checks {
            write!(f, "  {:<36} {:?}", c.name, c.status)?;
            if let Some(w) = &c.witness {
                write!(f, " at {:?}", w.tuple)?;
            }
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compares two vectors; on mismatch returns a witness at `tuple`.
pub(crate) fn compare(lhs: &[Scalar], rhs: &[Scalar], tuple: &[usize]) -> Option<Witness> {
    debug_assert_eq!(lhs.len(), rhs.len());
    if lhs == rhs {
        return None;
    }
    Some(Witness {
        tuple: tuple.to_vec(),
        residual: lhs.iter().zip(rhs).map(|(a, b)| a - b).collect(),
    })
}
