//! Exact verification of weighted partition identities.
//!
//! Every identity is built two ways: as a truncated q-series assembled from
//! Pochhammer products and theta functions, and as a brute-force weighted count
//! over partitions or overpartitions. The [`identities`] registry pairs the two
//! and [`identities::verify`] compares them coefficient by coefficient.
//!
//! - [`qseries`]: truncated power series in `q` with Laurent-polynomial-in-`z`
//!   coefficients over arbitrary-precision integers.
//! - [`partitions`]: enumeration, membership predicates and weight statistics.
//! - [`number_theory`]: `r2(N)`, exact square/triangular tests.
//! - [`identities`]: the identity registry and verifier.
//! - [`tables`]: per-partition weight listings for the worked examples.

pub mod error;
pub mod identities;
pub mod number_theory;
pub mod partitions;
pub mod qseries;
pub mod tables;

pub use error::{Error, Result};
pub use identities::{registry, verify, verify_all, IdentityEntry, Status, VerificationReport};
pub use partitions::{Overpartition, Partition, SetId, Weight};
pub use qseries::{PochBase, QSeries, ZLaurent};
