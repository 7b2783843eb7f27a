//! Exact-arithmetic calculus of Jordan pairs, Jordan triple systems, and
//! their homotopes, together with the conformal deformations of symmetric
//! spaces these produce: deformed charts with closed-form products,
//! partially-defined conformal maps, deformed unit groups, Grassmannian
//! models, and the attendant geometric tensors.
//!
//! Everything is generic over an exact scalar ring (rationals, GF(p) with
//! p >= 5, dual-number extensions) so that every identity is checked
//! exactly; a 64-bit float scalar supports the numeric geometry layer.
//!
//! Start with [`jordan::JordanPair`] and [`spaces::DeformedSpace`], or run
//! the examples (`cargo run --example deformed_space`).

pub mod catalog;
pub mod chart;
pub mod descriptor;
pub mod dual;
pub mod error;
pub mod geometry;
pub mod grassmann;
pub mod homotope;
pub mod jordan;
pub mod lie;
pub mod linalg;
pub mod reflection;
pub mod runner;
pub mod scalar;
pub mod spaces;

pub use error::{Error, Result};
