//! Belief traces and exact observation probabilities, with the brute-force
//! marginalization over hidden paths alongside.
//!
//! ```text
//! cargo run --example sequence_probability
//! ```

use hmp_entropy::forward::{brute_force_prob, sequence_prob};
use hmp_entropy::{ModelParams, ObservationString};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let p = ModelParams::new(0.1, 0.1, 0.01)?;
    for s in ["0", "00", "01", "0001", "0110100111"] {
        let z: ObservationString = s.parse()?;
        let trace = sequence_prob(&p, &z);
        let oracle = brute_force_prob(&p, &z)?;
        println!("P({s:<10}) = {:.15}   oracle {:.15}   |diff| {:.1e}", trace.prob, oracle, (trace.prob - oracle).abs());
        let beliefs: Vec<String> = trace.beliefs.iter().map(|b| format!("{b:.4}")).collect();
        println!("    beliefs: {}", beliefs.join(" -> "));
    }
    let total: f64 = ObservationString::all(10).map(|z| sequence_prob(&p, &z).prob).sum();
    println!("sum over all 2^10 strings = {total:.15}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
