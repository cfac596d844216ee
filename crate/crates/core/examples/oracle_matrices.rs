// Builds the four oracle matrices and checks that each is a permutation and
// its own inverse.
//
// cargo run --example oracle_matrices

use std::error::Error;

use deutsch_jozsa::classical::OneBitFunction;
use deutsch_jozsa::quantum::oracle_matrix;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for f in OneBitFunction::ALL {
        let m = oracle_matrix(f);
        let (f0, f1) = f.table();
        println!("F_{f}  (f(0), f(1)) = ({f0}, {f1})");
        for row in m.entries() {
            println!("    {row:?}");
        }
        if !m.is_permutation() || !m.is_involution() {
            return Err(format!("F_{f} is not a permutation involution").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
