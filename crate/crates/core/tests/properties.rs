//! Property tests for the linear algebra, the protocol and the constraint
//! system. Pairings are recomputed here from the classical truth tables,
//! without going through the oracle matrices.

use deutsch_jozsa::classical::{Bit, OneBitFunction, Verdict};
use deutsch_jozsa::protocol::{prepare_input, projection_magnitude, run, with_global_phase};
use deutsch_jozsa::quantum::{apply_oracle, inner, tensor, Qubit, TwoQubitState};
use deutsch_jozsa::solver::{
    first_closed_form, matrix_pairings, pairing_sum_identity_error, residuals, second_closed_form,
    CandidateState,
};
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn amplitude() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn candidate() -> impl Strategy<Value = CandidateState> {
    [amplitude(), amplitude(), amplitude(), amplitude()].prop_map(CandidateState)
}

fn normalized_state() -> impl Strategy<Value = TwoQubitState> {
    candidate()
        .prop_filter("non-zero", |c| c.norm_sqr() > 1e-6)
        .prop_map(|c| {
            let n = c.norm_sqr().sqrt();
            TwoQubitState::raw(c.0.map(|z| z / n))
        })
}

fn function() -> impl Strategy<Value = OneBitFunction> {
    prop::sample::select(OneBitFunction::ALL.to_vec())
}

/// `|x⟩⊗|y⟩ -> |x⟩⊗|f(x) ⊕ y⟩` by index shuffling.
fn shuffle(f: OneBitFunction, psi: &TwoQubitState) -> TwoQubitState {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for x in Bit::ALL {
        for y in Bit::ALL {
            let target = f.eval(x) ^ y;
            out[2 * x.index() + target.index()] = psi[2 * x.index() + y.index()];
        }
    }
    TwoQubitState::raw(out)
}

fn shuffled_pairing(c: &CandidateState, bra: OneBitFunction, ket: OneBitFunction) -> Complex64 {
    let psi = c.to_state();
    inner(&shuffle(bra, &psi), &shuffle(ket, &psi))
}

proptest! {
    #[test]
    fn oracle_matches_index_shuffle(f in function(), psi in normalized_state()) {
        prop_assert!(apply_oracle(f, &psi).max_abs_diff(&shuffle(f, &psi)) <= TOL);
    }

    #[test]
    fn oracle_preserves_norm(f in function(), psi in normalized_state()) {
        let out = apply_oracle(f, &psi);
        prop_assert!((out.norm_sqr().sqrt() - psi.norm_sqr().sqrt()).abs() <= TOL);
    }

    #[test]
    fn oracle_is_involution(f in function(), psi in normalized_state()) {
        let twice = apply_oracle(f, &apply_oracle(f, &psi));
        prop_assert!(twice.max_abs_diff(&psi) <= TOL);
    }

    #[test]
    fn tensor_of_normalized_qubits_is_normalized(
        t0 in 0.0f64..std::f64::consts::PI, p0 in -4.0f64..4.0,
        t1 in 0.0f64..std::f64::consts::PI, p1 in -4.0f64..4.0,
    ) {
        let a = Qubit::normalized(
            Complex64::from((t0 / 2.0).cos()),
            Complex64::from_polar((t0 / 2.0).sin(), p0),
        ).unwrap();
        let b = Qubit::normalized(
            Complex64::from((t1 / 2.0).cos()),
            Complex64::from_polar((t1 / 2.0).sin(), p1),
        ).unwrap();
        let s = tensor(&a, &b);
        prop_assert!((s.norm_sqr() - 1.0).abs() <= TOL);
        prop_assert!(s.is_product(TOL));
    }

    #[test]
    fn protocol_is_correct_for_every_theta(theta in 0.0f64..std::f64::consts::TAU, f in function()) {
        let outcome = run(f, &prepare_input(theta).unwrap()).unwrap();
        let expected = if f.is_constant() { 1.0 } else { 0.0 };
        prop_assert!((outcome.projection_magnitude - expected).abs() <= TOL);
        prop_assert_eq!(outcome.verdict, f.class());
        prop_assert_eq!(outcome.oracle_calls, 1);
    }

    #[test]
    fn protocol_ignores_global_phase(theta in -10.0f64..10.0, phi in -10.0f64..10.0, f in function()) {
        let input = prepare_input(theta).unwrap();
        let base = projection_magnitude(input.state(), |p| apply_oracle(f, p));
        let phased = with_global_phase(input.state(), phi);
        let m = projection_magnitude(&phased, |p| apply_oracle(f, p));
        prop_assert!((m - base).abs() <= TOL);
    }

    #[test]
    fn protocol_cannot_split_a_class(theta in 0.0f64..std::f64::consts::TAU) {
        let input = prepare_input(theta).unwrap();
        let c1 = run(OneBitFunction::ConstI, &input).unwrap();
        let c2 = run(OneBitFunction::ConstII, &input).unwrap();
        let b1 = run(OneBitFunction::BalancedI, &input).unwrap();
        let b2 = run(OneBitFunction::BalancedII, &input).unwrap();
        prop_assert_eq!(c1.verdict, c2.verdict);
        prop_assert_eq!(b1.verdict, b2.verdict);
        prop_assert_eq!(c1.verdict, Verdict::Constant);
        prop_assert_eq!(b1.verdict, Verdict::Balanced);
    }

    #[test]
    fn closed_forms_match_shuffled_pairings(c in candidate()) {
        use OneBitFunction::*;
        let first = shuffled_pairing(&c, ConstI, BalancedI);
        let second = shuffled_pairing(&c, ConstI, BalancedII);
        prop_assert!((first - Complex64::from(first_closed_form(&c))).norm() <= TOL);
        prop_assert!((second - Complex64::from(second_closed_form(&c))).norm() <= TOL);
        prop_assert!((shuffled_pairing(&c, ConstII, BalancedI) - second).norm() <= TOL);
        prop_assert!((shuffled_pairing(&c, ConstII, BalancedII) - first).norm() <= TOL);

        let p = matrix_pairings(&c);
        prop_assert!((p[0] - first).norm() <= TOL);
        prop_assert!((p[1] - second).norm() <= TOL);
    }

    #[test]
    fn fifth_and_sixth_agree(c in candidate()) {
        use OneBitFunction::*;
        let r = residuals(&c);
        prop_assert!((r.fifth - r.sixth).norm() <= TOL);
        prop_assert!((r.fifth - shuffled_pairing(&c, ConstI, ConstII)).norm() <= TOL);
        prop_assert!(r.fifth.im.abs() <= TOL);
    }

    #[test]
    fn pairing_sum_identity(c in candidate()) {
        prop_assert!(pairing_sum_identity_error(&c) <= TOL);
    }

    #[test]
    fn unit_norm_forces_a_joint_violation_of_a_third(psi in normalized_state()) {
        let r = residuals(&CandidateState::from(psi));
        prop_assert!(r.joint_identification_violation() >= 1.0 / 3.0 - TOL);
    }
}
