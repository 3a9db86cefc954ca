//! Invariant rings and quotient singularities of finite matrix groups over
//! finite fields.

pub mod catalog;
pub mod error;
pub mod field;
pub mod group;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod replay;
pub mod singularity;

pub use error::{Error, Result};
pub use field::{Fe, Field, FieldElement, FieldSpec};
pub use group::MatrixGroup;
pub use linalg::{ElementKind, SquareMatrix, Subspace};
pub use poly::{GradedBasis, Multipoly};
pub use singularity::{analyze, classify, SingularityReport, Verdict};
