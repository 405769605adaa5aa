//! `H(n)` computed from the prefix tree agrees with the difference of block
//! entropies `H(Z_1..Z_{n+1}) - H(Z_1..Z_n)`.
//!
//! ```text
//! cargo run --example chain_identity
//! ```

use hmp_entropy::bounds::{self, BoundsConfig};
use hmp_entropy::forward::block_entropy;
use hmp_entropy::ModelParams;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let p = ModelParams::new(0.2, 0.1, 0.05)?;
    let rows = bounds::table(&p, 12, &BoundsConfig::sequential())?;
    let mut prev = block_entropy(&p, 0)?;
    println!("{:>3} {:>18} {:>18} {:>18} {:>10}", "n", "H(Z^n)", "difference", "H(n)", "gap");
    for row in &rows {
        let next = block_entropy(&p, row.n + 1)?;
        let diff = next - prev;
        println!("{:>3} {:>18.12} {:>18.15} {:>18.15} {:>10.1e}", row.n, prev, diff, row.approx, (diff - row.approx).abs());
        prev = next;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
