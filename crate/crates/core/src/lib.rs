//! Long-range percolation laboratory.
//!
//! Samples Bernoulli long-range percolation on finite tori, computes cluster
//! observables, verifies cluster-tail and two-ghost inequalities both exactly
//! (by exhaustive enumeration on tiny weighted graphs) and statistically
//! (by Monte Carlo on large boxes), and fits critical exponents against the
//! rigorous bounds and the predicted values.

pub mod cluster;
pub mod estimate;
pub mod ghost;
pub mod model;
pub mod num;
pub mod oracle;
pub mod partition;
pub mod rng;
pub mod sampler;
pub mod stats;

pub use num::Scalar;

/// Concrete `f64` aliases for the generic core types.
pub type Kernel64 = model::Kernel<f64>;
pub type ClassTable64 = model::ClassTable<f64>;
pub type ExponentBounds64 = model::ExponentBounds<f64>;
pub type GoodWeight64 = ghost::GoodWeight<f64>;
pub type TinyGraph64 = oracle::TinyGraph<f64>;
pub type ExplorationTrace64 = ghost::ExplorationTrace<f64>;
