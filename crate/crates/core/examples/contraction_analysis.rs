//! Contraction coefficient `delta` and Lipschitz constant `M` across a few
//! parameter points, checked against a finite-difference scan.
//!
//! ```text
//! cargo run --example contraction_analysis
//! ```

use hmp_entropy::validation::finite_difference_sup;
use hmp_entropy::{hb, ModelParams};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6} {:>6} {:>6}  {:>10} {:>10}  {:>11}  strict", "pi01", "pi10", "eps", "delta", "M", "contractive");
    for (pi01, pi10, eps) in [(0.1, 0.1, 0.01), (0.2, 0.1, 0.05), (0.3, 0.3, 0.1), (0.05, 0.05, 0.2), (0.1, 0.1, 0.0), (0.1, 0.1, 0.5)] {
        let p = ModelParams::new(pi01, pi10, eps)?;
        let c = p.contraction();
        let fd_delta = finite_difference_sup(|x| p.f0(x), 10_000).max(finite_difference_sup(|x| p.f1(x), 10_000));
        let fd_m = finite_difference_sup(|x| hb(p.g0(x)), 10_000);
        assert!((c.delta - fd_delta).abs() < 1e-6 && (c.big_m - fd_m).abs() < 1e-6);
        println!(
            "{pi01:>6} {pi10:>6} {eps:>6}  {:>10.6} {:>10.6}  {:>11}  {}",
            c.delta,
            c.big_m,
            c.contractive,
            p.strict_regime()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
