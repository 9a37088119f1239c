//! Branching of irreducible representations of semisimple Lie algebras to
//! sl2-subalgebras, with the supporting root-system, semigroup and
//! parabolic-dimension machinery.

pub mod bounds;
pub mod character;
pub mod cli;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod rootsys;
pub mod semigroup;
pub mod sl2branch;
pub mod store;
pub mod tables;

pub use error::{Error, Result};
pub use rootsys::{Family, RootSystem, SimpleComponent, Weight};
