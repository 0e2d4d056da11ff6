//! Geometry of constant-curvature model spaces, their tangent bundles, and
//! the covering maps that tie the two together, plus an independent
//! finite-difference tensor oracle for numerically certifying every closed
//! form the crate exposes.
//!
//! The crate is `no_std`-compatible (`alloc` is used for chart closures):
//! build with `--no-default-features --features libm` to drop `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("enable either the `std` (default) or the `libm` feature");

pub mod ambient;
pub mod bundle;
pub mod charts;
pub mod curvature;
pub mod error;
pub mod fd;
pub mod hopf;
pub mod linalg;
pub mod sample;
pub mod spaces;

pub use ambient::{AmbientVector, Signature};
pub use error::{GeomError, Result};
pub use spaces::{FramePoint, ModelSpace, SpaceKind};
