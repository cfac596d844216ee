// With the target in (|0⟩ − |1⟩)/√2 every oracle acts as a phase
// (−1)^{f(x)} on the control.
//
// cargo run --example phase_kickback

use std::error::Error;

use deutsch_jozsa::classical::{Bit, OneBitFunction};
use deutsch_jozsa::quantum::{apply_oracle, tensor, Qubit};
use num_complex::Complex64;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for f in OneBitFunction::ALL {
        for x in Bit::ALL {
            let psi = tensor(&Qubit::basis(x), &Qubit::minus());
            let out = apply_oracle(f, &psi);
            let sign = if f.eval(x) == Bit::One { -1.0 } else { 1.0 };
            let err = out.max_abs_diff(&psi.scale(Complex64::from(sign)));
            println!("O_{f} |{x}⟩|−⟩ = {sign:+} |{x}⟩|−⟩   (error {err:.1e})");
            if err > 1e-12 {
                return Err(format!("kickback failed for {f}, x = {x}").into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
