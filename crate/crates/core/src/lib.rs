//! Exact-integer invariants of Hilbert schemes of smooth curves in projective
//! space, together with the sieve that excludes components rigid in moduli.
//!
//! The crate is `no_std` (it needs `alloc` for witness lists). Every decision
//! is made with integer arithmetic: rational thresholds are compared by
//! cross-multiplication and quantities that can outgrow the inputs are carried
//! in `i128`.
//!
//! * [`bounds`]: Brill–Noether numbers, normal-bundle Euler characteristics,
//!   the Castelnuovo bounds and the dimension counts fed into the sieve.
//! * [`surfaces`]: divisor classes on Hirzebruch surfaces and certificates for
//!   degenerations to singular stable curves.
//! * [`sieve`]: the four case systems, the genus caps, the hypothesis ranges
//!   and the space-curve classification.
//! * [`mutants`]: deliberately corrupted bound providers used to check that
//!   the verification harness notices a broken formula.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
mod error;
pub mod mutants;
pub mod sieve;
pub mod surfaces;
#[cfg(feature = "serde")]
mod wide;

pub use bounds::{CastelnuovoProfile, Castelnuovo, CurveClass, GenusBounds};
pub use error::Error;
pub use sieve::{SieveCase, SieveWitness, Verdict};
pub use surfaces::{DivisorClass, SplitCertificate};
