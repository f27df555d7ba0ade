//! Composite pulse sequences for Raman qubits driven through a three-state
//! lambda linkage.
//!
//! The crate builds named composite sequences from their phase formulas,
//! propagates them in closed form through two exact reductions (the
//! bright/dark decomposition for pairs sharing a phase, and the spin-1
//! correspondence for counter-phased pairs), checks the results against a
//! brute-force integrator of the full three-state dynamics, and measures
//! gate error as the Frobenius distance of the qubit block from the target.
//!
//! Everything here is `no_std` + `alloc`; file formats and the command-line
//! front end live in the companion binary crate.

#![no_std]
// Negated comparisons like !(x > 0.0) reject NaN along with the out-of-range
// values; index loops follow the written matrix arithmetic.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod propagator;
pub mod pulse;

pub use analysis::{
    analytic_infidelity, half_width_below, infidelity, qubit_block, robustness_order, sweep,
    Alignment, Engine, GateKind, GateTarget, SweepResult, SweepRow,
};
pub use catalog::{entry, labels, parse_pi_literal, CatalogEntry};
pub use error::Error;
pub use matrix::{CMat2, CMat3};
pub use oracle::{integrate, integrate_checked, suggested_steps, IntegratorConfig, Method};
pub use propagator::sequence_propagator;
pub use pulse::{CompositeSequence, ErrorModel, PulsePair, PulseShape, Scheme, ShapeKind};
