//! Exact computations with finite-dimensional cocommutative color Hopf algebras.

pub mod actions;
pub mod builders;
pub mod commutators;
pub mod error;
pub mod format;
pub mod grading;
pub mod hopf;
pub mod linalg;
pub mod scalar;
pub mod simplicial;
pub mod sub;
pub mod tensor;
pub mod verify;
pub mod xmod;
pub mod zoo;

pub use error::{Error, Result};
pub use grading::{Bicharacter, ColorContext, Ctx, Deg, GradingGroup};
pub use hopf::{ColorHopfAlgebra, Hopf, StructureMap};
pub use linalg::{GradedMap, GradedSpace, LinMap, Subspace, Vector};
pub use scalar::{Field, Scalar};
pub use verify::{verify_hopf, verify_morphism, Check, ValidationReport, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/hopf-algebras.md")]
    mod hopf_algebras {}
    #[doc = include_str!("../../../book/src/subobjects.md")]
    mod subobjects {}
    #[doc = include_str!("../../../book/src/commutators.md")]
    mod commutators {}
    #[doc = include_str!("../../../book/src/actions.md")]
    mod actions {}
    #[doc = include_str!("../../../book/src/crossed-modules.md")]
    mod crossed_modules {}
    #[doc = include_str!("../../../book/src/simplicial.md")]
    mod simplicial {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/files.md")]
    mod files {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
