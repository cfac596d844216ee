// One classical query never separates constant from balanced; two do.
//
// cargo run --example classical_bound

use std::error::Error;

use deutsch_jozsa::classical::{
    apply_f_operator, consistent_functions, min_classical_queries, Bit, BitPair, OneBitFunction,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Feed (1,1) to the oracle for B_I and look only at what comes back.
    let query = BitPair::new(Bit::One, Bit::One);
    let output = apply_f_operator(OneBitFunction::BalancedI, query);
    let suspects = consistent_functions(query, output.y);
    println!("query {query} -> {output}; still possible: {suspects:?}");

    let report = min_classical_queries();
    for failure in &report.one_query {
        println!(
            "query {} decide {:?} -> wrong on {:?}",
            failure.strategy.query, failure.strategy.decision, failure.misclassified
        );
    }
    println!("two-query witness scores {}/4", report.witness_correct());
    println!("classical lower bound: {} queries", report.lower_bound);
    if report.lower_bound != 2 {
        return Err("expected a lower bound of 2".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
