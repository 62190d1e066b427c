//! Cobar construction on normalized chains of finite reduced simplicial
//! sets over the rationals, with loop-space homology, group-like recovery
//! of fundamental groups and the Quillen Lie model pipeline.

#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::explicit_counter_loop)]

pub mod coalgebra;
pub mod cobar;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod ncgroebner;
pub mod poly;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
