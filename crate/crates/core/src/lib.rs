//! Exact classification of the irreducible components of the space of
//! degree-`k` rational curves on the moduli space `M` of stable rank-2
//! bundles with fixed odd determinant over a genus-`g` curve.
//!
//! Every component other than the even-degree equal-splitting locus `M_E`
//! is the closure of a locus `M(a, e)` indexed by an integer lattice point.
//! This crate decides which lattice points give components, their
//! dimensions, MRC quotients and obstruction flags, using only exact integer
//! arithmetic. An independent [`oracle`] recomputes the component region from
//! its bounding hyperbolas, and [`plot`] renders the lattice as ASCII or SVG.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod classifier;
pub mod dimension;
mod error;
pub mod lattice;
pub mod mrc;
pub mod oracle;
pub mod plot;

pub use classifier::{classify, ComponentKind, ComponentRecord, Inventory, InventoryNote, Labels};
pub use error::{Error, Result};
pub use lattice::{validate_params, PairAE, Params};
pub use mrc::{MrcResult, MrcTarget};
