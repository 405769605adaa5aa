//! Certified entropy-rate bounds for binary hidden Markov processes.
//!
//! A two-state stationary Markov chain `X` is observed through a binary
//! symmetric channel with flip probability `eps`, giving `Z = X xor E`. The
//! entropy rate `h(Z)` has no closed form, but the conditional block
//! entropies `H(n) = H(Z_1..Z_{n+1}) - H(Z_1..Z_n)` are squeezed between a
//! nondecreasing lower sequence `L(n)` and a nonincreasing upper sequence
//! `U(n)` that both converge to `h(Z)`. When the belief-update maps contract,
//! the gap closes geometrically, `U(n) - L(n) <= M delta^n`, which gives a
//! stopping rule for any requested accuracy.
//!
//! ```
//! use hmp_entropy::{bounds, ModelParams};
//!
//! let params = ModelParams::new(0.1, 0.1, 0.01)?;
//! let report = bounds::run(&params, 1e-6, 25)?;
//! assert!(report.converged);
//! let row = report.last();
//! assert!(row.lower <= row.approx && row.approx <= row.upper);
//! # Ok::<(), hmp_entropy::Error>(())
//! ```
//!
//! Modules:
//!
//! - [`model`]: parameters, the maps `g0, g1, f0, f1`, binary entropy and
//!   the contraction constants `delta`, `M`.
//! - [`forward`]: belief traces, exact string probabilities, a brute-force
//!   oracle and block entropies.
//! - [`bounds`]: the prefix-tree enumeration and the convergence driver.
//! - [`simulate`]: sampling paths and a plug-in entropy-rate estimator.
//! - [`cli`]: the command-line surface used by the `hmp-entropy` binary.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod forward;
pub mod model;
pub mod parallel;
pub mod simulate;
pub mod sum;
pub mod validation;

pub use bounds::{BoundsConfig, BoundsRow, ConvergenceReport, PathState};
pub use error::{Error, Result};
pub use forward::{BeliefTrace, ObservationString};
pub use model::{hb, ContractionInfo, ModelParams};
pub use simulate::{McEstimate, SamplePath};
