//! Exact counting of set partitions of multisets into mixed cells.
//!
//! Balls come as a multiset `(b1, .., bn)` (label `i` appears `bi` times) and
//! cells come in groups `(c1, .., ck)`: cells inside a group are
//! interchangeable, cells in different groups are not. On top of that sit the
//! classic Stirling and Bell numbers, the r-Stirling / r-Bell families, the
//! mixed variants where balls `1..=r` must land in distinct cells, and the
//! ordered factorization counts of an integer (which are the same problem
//! applied to its exponent vector).
//!
//! Every closed form is checked against [`oracle`], a brute-force enumerator
//! that quotients raw assignments by cell and ball symmetries. The [`audit`]
//! module runs each published identity over a parameter grid and reports
//! which ones survive.
//!
//! All results are exact: [`Count`] is an arbitrary-precision unsigned
//! integer, and the literal formula evaluations that may go negative return
//! [`Signed`].

pub mod audit;
pub mod cli;
pub mod error;
pub mod factor;
pub mod mixed;
pub mod oracle;
pub mod problem;
pub mod stirling;

pub use error::{Error, Result};
pub use problem::{BallSpec, CellSpec, PartitionProblem};

/// Arbitrary-precision nonnegative count.
pub type Count = num_bigint::BigUint;

/// Arbitrary-precision signed integer, used by alternating sums.
pub type Signed = num_bigint::BigInt;
