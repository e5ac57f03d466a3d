//! Exact arithmetic for group algebras `F_q G` where `G` is a metacyclic group
//! with a cyclic subgroup of index two.
//!
//! The crate covers the whole pipeline: prime and extension field arithmetic,
//! factorization of `x^N - 1` through cyclotomic cosets, the Wedderburn
//! decomposition with explicit generator images for every simple component,
//! the central primitive idempotents, the non-central orthogonal splittings,
//! and a brute-force oracle over the group multiplication table that checks
//! all of it.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod battery;
pub mod cycfactor;
mod error;
pub mod ffield;
pub mod group;
pub mod idempotents;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod wedderburn;

pub use error::{Error, Result};
pub use ffield::{Field, FieldElem};
pub use group::{GroupKind, GroupPresentation};
pub use poly::Poly;
