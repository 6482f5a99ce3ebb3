//! Finite localities, their fusion and transporter categories, and a
//! constructive Alperin–Goldschmidt decomposition with checkable
//! certificates.

pub mod alperin;
pub mod arith;
pub mod bitset;
pub mod cohomology;
pub mod embedding;
pub mod error;
pub mod fusion;
pub mod group;
pub mod io;
pub mod library;
pub mod linalg;
pub mod locality;
pub mod perm;
pub mod report;
pub mod transporter;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, GroupHom, Subgroup};
pub use locality::{DeltaSet, DeltaSpec, Locality};
pub use report::Report;
