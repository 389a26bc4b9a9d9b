//! Exact computations with finite-dimensional quasi-Hopf algebras given by
//! structure constants: axiom verification, modules and Hopf modules,
//! integrals, Frobenius forms and freeness checks.

pub mod algebra;
pub mod error;
pub mod format;
pub mod hopfmod;
pub mod integrals;
pub mod linalg;
pub mod modrep;
pub mod nz;
pub mod quasi;
pub mod report;
pub mod zoo;

pub use algebra::{verify_algebra, FinAlgebra};
pub use error::{Error, Result};
pub use format::{load_str, InstanceFile, Instances};
pub use hopfmod::{HopfModule, SubalgebraEmbedding};
pub use linalg::{Field, Matrix, Scalar};
pub use modrep::{BimoduleRep, Freeness, IsoWitness, ModuleRep, Side};
pub use nz::{Conclusion, TheoremReport};
pub use quasi::{QuasiBialgebra, QuasiHopfAlgebra};
pub use report::{AxiomReport, Status, Witness};
