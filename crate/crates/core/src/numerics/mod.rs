//! Configurable-precision scalars, weight functions and (weighted) Birkhoff
//! averaging kernels.

mod average;
pub mod double_double;
mod precision;
mod real;
mod sum;
mod weights;

pub use average::{uniform_average, weighted_birkhoff, weighted_birkhoff_complex, WeightedAverager};
pub use double_double::DoubleDouble;
pub use precision::Precision;
pub use real::{golden, Real};
pub use sum::{pairwise_sum, Accumulator};
pub use weights::{make_weights, weight_value, WeightScheme};
