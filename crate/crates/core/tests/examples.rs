macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(oracle_matrices, "oracle_matrices.rs");
example!(classical_bound, "classical_bound.rs");
example!(phase_kickback, "phase_kickback.rs");
example!(single_query, "single_query.rs");
example!(derive_input_state, "derive_input_state.rs");
example!(identification_impossible, "identification_impossible.rs");

#[test]
fn oracle_matrices_example_runs() {
    oracle_matrices::run_example().expect("oracle_matrices example should run");
}

#[test]
fn classical_bound_example_runs() {
    classical_bound::run_example().expect("classical_bound example should run");
}

#[test]
fn phase_kickback_example_runs() {
    phase_kickback::run_example().expect("phase_kickback example should run");
}

#[test]
fn single_query_example_runs() {
    single_query::run_example().expect("single_query example should run");
}

#[test]
fn derive_input_state_example_runs() {
    derive_input_state::run_example().expect("derive_input_state example should run");
}

#[test]
fn identification_impossible_example_runs() {
    identification_impossible::run_example().expect("identification_impossible example should run");
}
