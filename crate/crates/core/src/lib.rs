//! Exact enumeration on Young's lattice.
//!
//! * [`partition`]: partitions, containment, interval splits and brute-force
//!   enumeration.
//! * [`rankpoly`]: rank generating polynomials of intervals, Gaussian
//!   polynomials, interval counts.
//! * [`series`]: truncated multivariate generating series `Q_k` and their
//!   rational recursion.
//! * [`counts`]: partition counts, average ideal sizes and the growth
//!   constants `B(k,m)`, `G_k`.
//! * [`verify`]: sweeps that check the identities end to end.
//! * [`cli`]: the `yl` command line.

pub mod cli;
pub mod counts;
pub mod error;
pub mod partition;
pub mod rankpoly;
pub mod rational;
pub mod series;
pub mod verify;
pub mod ypoly;

pub use error::{Error, Result};
pub use partition::{Partition, SkewInterval};
pub use ypoly::YPoly;
