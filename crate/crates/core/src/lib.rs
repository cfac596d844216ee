//! Single-qubit Deutsch–Jozsa, built up from first principles.
//!
//! * [`classical`]: one-bit functions, the `(x, y) -> (x, f(x) ⊕ y)` operators
//!   and the exhaustive two-query lower bound.
//! * [`quantum`]: qubits, two-qubit states, tensor and inner products, the
//!   four oracle permutation matrices.
//! * [`protocol`]: the single-query constant/balanced test.
//! * [`solver`]: derives the input state from the orthogonality conditions,
//!   cross-checks it with a grid search and shows that identifying the exact
//!   function in one query is infeasible.
//! * [`report`]: text and JSON rendering used by the `dj` binary.
//!
//! ```
//! use deutsch_jozsa::classical::{OneBitFunction, Verdict};
//! use deutsch_jozsa::protocol::{prepare_input, run};
//!
//! let input = prepare_input(0.0).unwrap();
//! let outcome = run(OneBitFunction::BalancedI, &input).unwrap();
//! assert_eq!(outcome.verdict, Verdict::Balanced);
//! assert_eq!(outcome.oracle_calls, 1);
//! ```

pub mod classical;
mod error;
pub mod protocol;
pub mod quantum;
pub mod report;
pub mod solver;

pub use error::{Error, Result};

/// Allowed deviation of `Σ|cᵢ|²` from 1 when accepting a state as normalized.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Tolerance for identities on exactly representable amplitudes (dyadic
/// rationals and `1/√2` factors).
pub const EXACT_TOLERANCE: f64 = 1e-12;
