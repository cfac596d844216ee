//! The single-query constant/balanced test.
//!
//! The input is `((|0⟩ + e^{iθ}|1⟩)/√2) ⊗ ((|0⟩ − |1⟩)/√2)`. One oracle call
//! later, the overlap `|⟨ψ_in|O_f ψ_in⟩|` is 1 for a constant `f` and 0 for a
//! balanced one.
//!
//! The oracle is only ever seen through a callback; [`run_with_oracle`]
//! counts invocations and refuses to return a verdict unless exactly one
//! happened.

use num_complex::Complex64;

use crate::classical::{OneBitFunction, Verdict};
use crate::quantum::{inner, oracle_matrix, tensor, Qubit, TwoQubitState};
use crate::{Error, Result, EXACT_TOLERANCE, NORM_TOLERANCE};

/// A prepared input state together with the control-qubit phase it came
/// from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DJInput {
    theta: f64,
    state: TwoQubitState,
}

impl DJInput {
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn state(&self) -> &TwoQubitState {
        &self.state
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DJOutcome {
    pub projection_magnitude: f64,
    pub verdict: Verdict,
    pub oracle_calls: usize,
}

/// Builds the product input state for control phase `theta` (radians).
pub fn prepare_input(theta: f64) -> Result<DJInput> {
    if !theta.is_finite() {
        return Err(Error::InvalidAngle(theta));
    }
    let state = tensor(&Qubit::phased_plus(theta), &Qubit::minus());
    debug_assert!((state.norm_sqr() - 1.0).abs() <= EXACT_TOLERANCE);
    Ok(DJInput { theta, state })
}

/// `|⟨ψ|O ψ⟩|` for an arbitrary state and a single oracle call.
pub fn projection_magnitude<O>(state: &TwoQubitState, mut oracle: O) -> f64
where
    O: FnMut(&TwoQubitState) -> TwoQubitState,
{
    inner(state, &oracle(state)).norm()
}

fn verdict_from_magnitude(magnitude: f64) -> Result<Verdict> {
    if (magnitude - 1.0).abs() <= NORM_TOLERANCE {
        Ok(Verdict::Constant)
    } else if magnitude.abs() <= NORM_TOLERANCE {
        Ok(Verdict::Balanced)
    } else {
        Err(Error::ProtocolViolation(format!(
            "projection magnitude {magnitude} is neither 0 nor 1"
        )))
    }
}

/// Runs the test against an opaque oracle.
///
/// Fails with [`Error::ProtocolViolation`] if the oracle was not called
/// exactly once or the overlap is not within `1e-9` of 0 or 1.
pub fn run_with_oracle<O>(mut oracle: O, input: &DJInput) -> Result<DJOutcome>
where
    O: FnMut(&TwoQubitState) -> TwoQubitState,
{
    let mut calls = 0usize;
    let magnitude = projection_magnitude(input.state(), |psi| {
        calls += 1;
        oracle(psi)
    });
    if calls != 1 {
        return Err(Error::ProtocolViolation(format!(
            "expected exactly one oracle call, saw {calls}"
        )));
    }
    let verdict = verdict_from_magnitude(magnitude)?;
    Ok(DJOutcome {
        projection_magnitude: magnitude,
        verdict,
        oracle_calls: calls,
    })
}

/// Runs the test against the oracle for `f`. Only the matrix is handed to the
/// protocol, never the truth table.
pub fn run(f: OneBitFunction, input: &DJInput) -> Result<DJOutcome> {
    let matrix = oracle_matrix(f);
    run_with_oracle(|psi| matrix.apply(psi), input)
}

/// `e^{iφ}·ψ`, used to check that the readout ignores global phase.
pub fn with_global_phase(state: &TwoQubitState, phi: f64) -> TwoQubitState {
    state.scale(Complex64::from_polar(1.0, phi))
}
