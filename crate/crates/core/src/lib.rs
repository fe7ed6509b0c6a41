//! Exact-arithmetic toolkit for staircase-shape combinatorics.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; there is no floating point anywhere in the crate. The main
//! pieces are:
//!
//! - [`exact`]: big-integer/rational scalars and factorial-family helpers
//! - [`shapes`]: partitions, hooks, contents, staircases
//! - [`tableaux`]: enumeration and counting of (set-valued, shifted) tableaux
//! - [`polyring`]: sparse polynomials in `x_1..x_n` and `beta`; Schur,
//!   Grothendieck, and K-theoretic Schur P generating functions
//! - [`hyper`]: terminating/regularized Gauss 2F1 and Jacobi polynomials
//! - [`holman`]: the multivariate Holman hypergeometric sum and its identities
//! - [`excited`]: excited Young diagrams with Type A / Type B weight models

pub mod exact;
pub mod excited;
pub mod holman;
pub mod hyper;
pub mod polyring;
pub mod shapes;
pub mod tableaux;

mod error;

pub use error::{Error, Result};
