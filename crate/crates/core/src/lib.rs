//! Tangent-circle diameters of integer triangles and primitive Pythagorean
//! triples with a square leg and a square diameter.
//!
//! The modules build on one another: [`arith`] supplies checked integer
//! primitives, [`geometry`] the incircle/excircle diameters of any integer
//! triangle, [`pythagorean`] the primitive triples and their closed-form
//! diameters, [`diophantine`] the two auxiliary quadratic equations, and
//! [`families`] the square-leg/square-diameter families together with the
//! exhaustive searches. [`verify`] and [`cli`] sit on top.

pub mod arith;
pub mod cli;
pub mod diophantine;
pub mod error;
pub mod exec;
pub mod families;
pub mod geometry;
pub mod pythagorean;
pub mod verify;

pub use arith::Natural;
pub use error::{Error, Result};
pub use exec::Exec;
