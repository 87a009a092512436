//! 0-Hecke modules on increasing gapless tableaux.
//!
//! The crate enumerates increasing gapless tableaux, builds the 0-Hecke
//! action on them, splits each module into lattice-path equivalence classes,
//! and computes the source and sink of every class, its standardized reading
//! words, and the projective cover coming from standard ribbon tableaux.

pub mod combinatorics;
pub mod equivalence;
pub mod error;
pub mod hecke;
pub mod paths;
pub mod perm;
pub mod projective;
pub mod qsym;
pub mod reading;
pub mod ribbon;
pub mod suite;
pub mod tableau;

pub use combinatorics::{Cell, Composition, GeneralizedComposition, LatticePoint, Partition};
pub use error::{Error, Result};
pub use hecke::{Action, HeckeModule};
pub use perm::Permutation;
pub use qsym::QSymExpr;
pub use ribbon::Srt;
pub use tableau::Iglt;
