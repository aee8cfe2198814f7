//! Exact computations for quiver Schur algebras of the cyclic quiver.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod basis;
pub mod cellular;
pub mod comp;
pub mod coset;
pub mod degree;
pub mod dimvec;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod linalg;
pub mod operator;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod tableau;

pub use comp::{ShadowedComposition, VectorComposition};
pub use degree::DegreeConvention;
pub use dimvec::DimVector;
pub use error::{Error, Result};
pub use fock::{FockConfig, FockVector};
pub use laurent::LaurentInt;
pub use partition::{Cell, Charge, Multipartition};
pub use poly::{MultiPoly, VarIndex};
pub use tableau::{AlphabetRule, Entry, Tableau};
