//! Samples a long observed path and compares the plug-in conditional-entropy
//! estimate with the certified interval.
//!
//! ```text
//! cargo run --release --example monte_carlo_crosscheck
//! ```

use hmp_entropy::simulate::{plugin_entropy_rate, sample_path, GENERATOR};
use hmp_entropy::{bounds, ModelParams};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let p = ModelParams::new(0.1, 0.1, 0.01)?;
    let report = bounds::run(&p, 1e-6, 25)?;
    let last = report.last();
    println!("certified: [{:.9}, {:.9}] at n = {}", last.lower, last.upper, last.n);

    let path = sample_path(&p, 2_000_000, 7);
    println!("sampled {} symbols with {GENERATOR}, flip rate {:.5}", path.len(), path.flip_rate());
    for k in [2, 4, 6, 8] {
        let est = plugin_entropy_rate(&path.observed, k)?;
        let z = (est.value - report.estimate) / est.stderr;
        println!("k = {k}: {:.6} +/- {:.1e}  ({z:+.2} stderr from the certified value)", est.value, est.stderr);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
