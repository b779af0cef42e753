//! Exact computation of generalized Turán numbers `ex(n, T, H)` at desk scale.
//!
//! ```
//! use exturan::counting::{count_copies, Pattern};
//! use exturan::graph::turan_graph;
//! use exturan::search::extremal_exact;
//!
//! let k3 = Pattern::complete(3)?;
//! let k4 = Pattern::complete(4)?;
//! let res = extremal_exact(6, &k3, &k4)?;
//! assert_eq!(res.best, 8u32.into());
//! assert!(res.unique_up_to_iso);
//! assert_eq!(count_copies(&turan_graph(6, 3)?, &k3)?, 8u32.into());
//! # Ok::<(), exturan::Error>(())
//! ```

pub mod analytic;
pub mod closed_form;
pub mod counting;
pub mod error;
pub mod family;
pub mod graph;
pub mod search;
pub mod shorthand;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;
/// Normalized arbitrary-precision rational.
pub type ExactRational = num_rational::BigRational;
