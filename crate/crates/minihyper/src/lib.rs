//! Arcs, minihypers and blocking sets in PG(r,q) over prime fields.
//!
//! The crate provides:
//! - incidence tables for PG(r,q) ([`geometry`]);
//! - multisets of points with spectra, complements, restrictions,
//!   projections and reductions ([`multiset`]);
//! - the code/arc correspondence and the Griesmer bound ([`code`]);
//! - executable checkers for the divisibility, extendability and
//!   line-reducibility theorems ([`theorems`]);
//! - an isomorph-free exhaustive classifier with canonical forms
//!   ([`classify`], [`canonical`]);
//! - text formats and a verification suite backing the CLI
//!   ([`format`], [`verify`]).

pub mod bitset;
pub mod canonical;
pub mod classify;
pub mod code;
pub mod error;
pub mod families;
pub mod format;
pub mod geometry;
pub mod linalg;
pub mod multiset;
pub mod structure;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{v, Geometry};
pub use multiset::{Mode, Multiset};
