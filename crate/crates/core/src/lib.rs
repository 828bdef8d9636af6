// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod classify;
pub mod farey;
pub mod geometry;
pub mod io;
pub mod lambda;
pub mod render;
pub mod shear;

pub use error::{Error, Result};
