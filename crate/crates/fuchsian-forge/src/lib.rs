//! Exact-arithmetic construction of genus-2 surface groups with prescribed
//! algebraic invariants.
//!
//! Given a real number field `K` and a quaternion algebra `(a, b)` over `K`
//! that is split at a chosen real embedding, this crate finds half-trace
//! parameters `r, s, t` in `K` such that the Fuchsian group generated by the
//! corresponding four hyperbolic matrices has trace field exactly `K` and
//! quaternion algebra `(a, b)`. It produces a certificate of exact witness
//! data that an independent party can replay, plus certified interval
//! matrices at any requested precision.
//!
//! Start with the `examples/` directory; each example exercises one major
//! capability end to end.

pub mod arith;
pub mod cert;
pub mod emit;
pub mod error;
pub mod expr;
pub mod field;
pub mod generator;
pub mod quadric;
pub mod realize;
pub mod symbolic;
pub mod symbols;

pub use error::{Error, Result};
