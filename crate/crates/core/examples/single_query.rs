// The single-query test across a few control phases.
//
// cargo run --example single_query

use std::error::Error;

use deutsch_jozsa::classical::OneBitFunction;
use deutsch_jozsa::protocol::{prepare_input, run};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for theta in [0.0, std::f64::consts::FRAC_PI_2, std::f64::consts::PI, 2.0] {
        let input = prepare_input(theta)?;
        print!("theta = {theta:.4}:");
        for f in OneBitFunction::ALL {
            let outcome = run(f, &input)?;
            print!(
                "  {f} |<in|out>| = {:.3} -> {} ({} call)",
                outcome.projection_magnitude, outcome.verdict, outcome.oracle_calls
            );
            if outcome.verdict != f.class() {
                return Err(format!("wrong verdict for {f}").into());
            }
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
