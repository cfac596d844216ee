// No input state lets a single query also tell C_I from C_II and B_I from
// B_II.
//
// cargo run --example identification_impossible

use std::error::Error;

use deutsch_jozsa::solver::identification_infeasibility;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = identification_infeasibility(20_000, 0)?;
    println!(
        "identity error over {} candidates: {:.2e}",
        report.identity_candidates, report.identity_max_error
    );
    for t in report.theta_family.iter().take(4) {
        println!(
            "theta = {:.4}: r_first = {:.1e}, r_second = {:.1e}, |r_fifth| = {:.6}",
            t.theta,
            t.first,
            t.second,
            t.fifth.norm()
        );
    }
    println!(
        "lowest joint violation over {} random states: {:.4}",
        report.samples, report.sweep_min_joint_violation
    );
    if !(report.identity_holds() && report.theta_family_holds()) {
        return Err("infeasibility checks failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
