//! Exact computations with Iwahori-Hecke modules of `GL_3` over a local
//! field of characteristic `p`.

pub mod action;
pub mod error;
pub mod explorer;
pub mod field;
pub mod hecke;
pub mod lattice;
pub mod oracle;
pub mod weyl;

pub use action::{BasisFunction, ModuleVector, WeightConfig};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use hecke::{CharacterCase, Generator, HeckeElement, OperatorWord};
pub use lattice::{LatticeVec, WindowSpec};
pub use weyl::WeylElem;
