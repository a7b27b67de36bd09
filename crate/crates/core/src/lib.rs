//! Finite bicategories, free bicategories on 2-computads, and the coherence
//! theorem executed at small scale.
//!
//! - [`fincat`]: finite categories, functors, natural transformations.
//! - [`bicat`]: finite bicategories and their axiom engine.
//! - [`freebicat`]: 1-/2-cell terms, normal forms, the 2-cell word problem.
//! - [`maps`]: morphisms, transformations, modifications.
//! - [`homs`]: iso-level functor bicategories and biequivalence.
//! - [`yoneda`]: representables, Yoneda strictification, reflection.

pub mod bicat;
pub mod error;
pub mod fincat;
pub mod fixtures;
pub mod freebicat;
pub mod homs;
pub mod maps;
pub mod report;
pub mod yoneda;

pub use error::{Error, Result};
pub use report::{Report, Violation};
