// `!(x > 0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classify;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod io;
pub mod numerics;
pub mod rotation;
pub mod systems;
pub mod trajectory;

pub use error::{Error, Result};
pub use trajectory::{Point, Provenance, Trajectory};
