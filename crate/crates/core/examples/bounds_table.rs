//! The convergence table `L(n) <= H(n) <= U(n)` with the geometric envelope,
//! stopping once the interval is narrower than twice the tolerance.
//!
//! ```text
//! cargo run --release --example bounds_table
//! ```

use hmp_entropy::bounds::{self, BoundsConfig};
use hmp_entropy::ModelParams;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let p = ModelParams::new(0.1, 0.1, 0.01)?;
    let report = bounds::run_with(&p, 1e-12, 25, &BoundsConfig::default())?;
    println!("{:>3} {:>18} {:>18} {:>18} {:>10} {:>10}", "n", "L", "H", "U", "width", "M*d^n");
    for r in &report.rows {
        println!(
            "{:>3} {:>18.15} {:>18.15} {:>18.15} {:>10.2e} {:>10.2e}",
            r.n,
            r.lower,
            r.approx,
            r.upper,
            r.width,
            r.geo.unwrap_or(f64::NAN)
        );
    }
    println!(
        "h(Z) = {:.15} +/- {:.1e} (converged: {})",
        report.estimate, report.guaranteed_error, report.converged
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
