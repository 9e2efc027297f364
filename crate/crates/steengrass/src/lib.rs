//! Exact arithmetic for the Landweber–Novikov operators on symmetric
//! functions and for Steenrod operations on Schubert classes of Grassmannians.
//!
//! The crate is `no_std` (with `alloc`) when built without the default `std`
//! feature; `std` only adds per-thread memo tables and the environment
//! override of the degree cap.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arith;
pub mod diffop;
pub mod grass;
pub mod schubert;
pub mod symfunc;
pub mod wu;
pub mod young;

pub use arith::{Q, Z};
pub use young::{Partition, SkewShape};
