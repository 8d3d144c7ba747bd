//! Exact-arithmetic model of `GL(V)`, the 2-groupoid of differentials,
//! quasi-isomorphisms and chain homotopies on a 2-term graded bundle over a
//! finite base, the nerve of finite 2-categories with horn filling, and the
//! correspondence between 2-term representations up to homotopy of finite
//! groupoids and pseudo-functors into `GL(V)`.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers; equality is always literal equality, never a tolerance.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the companion `gl2-cli` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod chain;
pub mod error;
pub mod gl;
pub mod group;
pub mod groupoid;
pub mod handle;
pub mod lax;
pub mod linalg;
pub mod nerve;
pub mod report;
pub mod ruth;
pub mod twocat;

#[cfg(feature = "gen")]
pub mod gen;

pub use chain::{ChainMap2, Fiber2, HomologyDims, Homotopy2};
pub use error::{Error, Result};
pub use gl::{GL2Cell, GLArrow, GLObject, GeneralLinear, GradedBundle};
pub use groupoid::FinGroupoid;
pub use handle::TwoCategory;
pub use linalg::{Rat, RatMatrix};
pub use twocat::{Fin2Cat, Fin2Groupoid};
