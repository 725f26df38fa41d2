//! Particle solver for backward stochastic differential equations whose
//! reflection constraint acts on the law of the solution: `E[h(Y_t)] >= 0`
//! is enforced by a shared nondecreasing process `K` instead of a pathwise
//! obstacle.
//!
//! The crate simulates the interacting particle system attached to such an
//! equation, extracts the flat `K` path together with the particle values
//! `(Y, Z)`, and measures the convergence rate of the system towards the
//! limit equation against independent reference solvers (exact binary-tree
//! enumeration, closed forms, deterministic quadrature).
//!
//! Module map:
//! - [`model`]: model/config documents, function registry, validation.
//! - [`stochastics`]: seeded Brownian tables, Euler forward paths, the
//!   Rademacher product tree used by exact reference runs.
//! - [`reflection`]: the empirical offset operator `L` and its law-level
//!   analogue.
//! - [`regression`]: least-squares conditional expectation engines and the
//!   martingale-increment estimator of `Z`.
//! - [`solver`]: backward particle schemes producing [`solver::SolutionBundle`].
//! - [`oracle`]: exact tree solver, closed forms, the quadrature limit
//!   solver and the high-N proxy.
//! - [`chaos`]: rate sweeps, slope fitting, machine-readable reports.
//! - [`validate`]: the runtime invariant battery behind `mrbsde validate`.

pub mod chaos;
pub mod error;
pub mod model;
pub mod oracle;
pub mod quad;
pub mod reflection;
pub mod regression;
pub mod solver;
pub mod stochastics;
pub mod validate;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
