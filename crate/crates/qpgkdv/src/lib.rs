//! Spatially quasi-periodic solutions of the generalized KdV equation
//!
//! ```text
//!     u_t + u_xxx + u^(p-1) u_x = 0,      u(0, x) = sum_n c(n) exp(i (n.w) x),
//! ```
//!
//! with `n` ranging over the integer lattice `Z^nu` and a rationally
//! independent wave vector `w`. Expanding the solution in the same frequency
//! module turns the PDE into an infinite system of coupled ODEs for the
//! coefficients `c(t, n)`, which this crate solves by Picard iteration on a
//! truncated lattice:
//!
//! * [`lattice`] — multi-indices, truncation boxes, norms, resonance scans;
//! * [`qpfield`] — coefficient fields, decaying initial data, decay fits,
//!   physical-space evaluation and PDE residuals;
//! * [`convolution`] — the p-fold discrete convolution `c^(*p)` (sparse exact
//!   path plus a padded cyclic FFT path);
//! * [`picard`] — the iteration itself, the explicit existence time `t0` and
//!   amplitude constant, decay and contraction certificates;
//! * [`trees`] — the combinatorial tree indexing every term of the iteration,
//!   with exhaustive verification of the counting identities and factorial
//!   bounds the solver's convergence rests on;
//! * [`oracle`] — independent ground truth: RK4 on the truncated system,
//!   closed-form single-mode corrections, and numeric checks of the
//!   summation inequalities;
//! * [`config`] / [`runner`] — the experiment runner behind the `qpgkdv`
//!   binary (`solve`, `verify-combinatorics`, `compare-oracle`, `residual`,
//!   `constants`).
//!
//! Every capability has a runnable example under `examples/`; start with
//! `cargo run --example solve_and_certify`.

pub mod config;
pub mod convolution;
pub mod lattice;
pub mod oracle;
pub mod picard;
pub mod qpfield;
pub mod runner;
pub mod svg;
pub mod trees;

use std::path::PathBuf;

pub use lattice::{Box as LatticeBox, MultiIndex, WaveVector};
pub use qpfield::{CoefficientField, DecayProfile};
pub use picard::{ExistenceConstants, TimeGrid, Trajectory};

/// Complex scalar used for all coefficients.
pub type Complex = num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("wave vector has no rational form; exact resonance scan needs one")]
    MissingRationalForm,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate field: {0}")]
    DegenerateField(String),
    #[error("enumeration cap exceeded: {what} needs {needed} > cap {cap}")]
    CapExceeded {
        what: String,
        needed: u128,
        cap: u128,
    },
    #[error("trajectory has {0} time nodes, need at least 3")]
    TooFewTimeNodes(usize),
    #[error("config: {0}")]
    Config(String),
    #[error("malformed data in {path}: {reason}")]
    MalformedData { path: PathBuf, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
