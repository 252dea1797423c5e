//! Random integer partitions, the Laplace-Beltrami eigenvalue statistic, and
//! its four limit laws.
//!
//! The library samples partitions of `n` under four probability measures
//! (restricted uniform, uniform, Plancherel, restricted Jack), evaluates the
//! eigenvalue `lambda = n(m-1) + a(k')*alpha - a(k)` attached to each
//! partition, and compares the distribution of the suitably normalized
//! statistic against the matching limit law (a simplex-induced law `mu`, a
//! Gamma law, a Gumbel law, or Tracy-Widom F2).
//!
//! Module map:
//!
//! - [`partition`]: exact partition arithmetic (counting, enumeration,
//!   unranking, conjugation, hook-length dimension).
//! - [`measures`]: exact samplers and log-pmf evaluators for the four
//!   measures.
//! - [`spectra`]: the eigenvalue statistic in both published forms plus the
//!   per-theorem normalizations and exact enumeration moments.
//! - [`limits`]: evaluable cdfs/pdfs for the limit laws, the Kerov curve, and
//!   the special constants.
//! - [`profiles`]: rotated/scaled Young-diagram profiles and the exact
//!   weighted-sum identity.
//! - [`harness`]: seeded Monte Carlo experiments, KS statistics, CSV/JSON
//!   emission.
//!
//! Monte Carlo replication is data-parallel over sample indices (each sample
//! owns an independent RNG substream) and runs on rayon when the default
//! `parallel` feature is enabled; disabling it leaves a sequential fallback
//! with identical output.

pub mod error;
pub mod harness;
pub mod limits;
pub mod measures;
pub mod numeric;
pub mod partition;
pub mod profiles;
pub mod rng;
pub mod spectra;

pub use error::{Error, Result};
pub use partition::{CountTable, Partition};
pub use rng::RngStream;

/// Version string recorded in emitted experiment metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
