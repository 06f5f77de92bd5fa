//! Simulation toolkit for budget-constrained bidding in repeated second-price
//! auctions.
//!
//! The library is organized around a small set of building blocks:
//!
//! - [`data`]: input tuples `(valuation, price, categories)`, dataset loading,
//!   and deterministic stream sampling.
//! - [`regularizer`]: the parity-ray regularizer, its conjugate, and the
//!   mix-selection subproblem used by the dual update.
//! - [`omd`]: the dual online mirror descent pacing agent.
//! - [`ap`]: the adaptive pacing baseline (budget dual only).
//! - [`market`]: second-price auction semantics and synthetic stream
//!   generators.
//! - [`metrics`]: offline oracles (fractional knapsack, brute-force grids)
//!   and per-trial regret / distribution metrics.
//! - [`config`] / [`runner`]: experiment configuration and the sweep runner
//!   that writes trace, summary, and aggregate CSVs.
//!
//! All randomness flows through [`rng::Prng`], a ChaCha8-based generator with
//! fixed integer/float derivation rules, so every trace is reproducible from
//! its seed across platforms.

pub mod ap;
pub mod checks;
pub mod config;
pub mod data;
pub mod market;
pub mod metrics;
pub mod omd;
pub mod regularizer;
pub mod rng;
pub mod runner;
pub mod simplex;

pub use data::{BudgetSpec, DatasetStats, InputTuple, TargetDistribution};
pub use market::{AuctionOutcome, Scenario};
pub use omd::{DualState, OmdConfig, StepRecord};
pub use regularizer::{Distance, ParityRay};

/// Formats a float with 12 significant digits, the precision used by every
/// CSV and CLI output so reruns are byte-comparable.
pub fn fmt12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.11e}", x)
}
