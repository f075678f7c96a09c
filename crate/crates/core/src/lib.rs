//! Exact truth-value semantics for quantum projector sets.
//!
//! Everything in this crate is computed over the Gaussian rationals ℚ(i), so
//! subspace memberships, operator identities, and valuation verdicts are
//! decided exactly rather than up to floating-point tolerance.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`] — exact arithmetic in ℚ(i) with a round-trippable text encoding
//! - [`linalg`] — dense exact matrices, kernels, ranges, subspace membership
//! - [`model`] — Pauli eigenprojectors, measurement contexts, prepared states
//! - [`lattice`] — the bounded lattice of projector ranges (meet, join, order)
//! - [`valuation`] — partial bivalent, Born (many-valued), and supervaluation
//!   semantics induced by a prepared state
//! - [`coloring`] — noncontextual bivalent-assignment search with certificates
//! - [`format`] — the on-disk operator-set and state formats
//! - [`report`] — human- and machine-readable result rendering
//! - [`cli`] — the `validate`, `valuate`, `color`, and `lattice` commands
//!
//! See the `examples/` directory for one runnable walkthrough per capability.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod format;
pub mod lattice;
pub mod linalg;
pub mod model;
pub mod report;
pub mod scalar;
pub mod valuation;

pub use error::{Error, Result};
