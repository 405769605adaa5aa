//! Entropy rate as a function of channel noise, from the noise-free chain
//! (`hb(0.1)`) up to the fair coin at `eps = 1/2`.
//!
//! ```text
//! cargo run --release --example noise_sweep
//! ```

use hmp_entropy::bounds::{self, BoundsConfig};
use hmp_entropy::ModelParams;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let config = BoundsConfig::default();
    println!("{:>6} {:>14} {:>10} {:>4} {:>8}", "eps", "h(Z)", "+/-", "n", "delta");
    for i in 0..=10 {
        let eps = 0.05 * f64::from(i);
        let p = ModelParams::new(0.1, 0.1, eps)?;
        let report = bounds::run_with(&p, 1e-6, 20, &config)?;
        println!(
            "{eps:>6.2} {:>14.10} {:>10.1e} {:>4} {:>8.4}{}",
            report.estimate,
            report.guaranteed_error,
            report.last().n,
            report.contraction.delta,
            if report.converged { "" } else { "  (not converged)" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
