//! Recovers a hidden slope by maximum likelihood over the folded cos²/sin²
//! statistics, then shows how the success rate grows with the sample count.
//!
//! cargo run --release --example eh_slope_recovery -- 64

use dihedral_hsp::ettinger_hoyer::{eh_sample, recover_slope, success_rate};
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(64, |s| s.parse().expect("n must be an integer"));
    let g = DihedralGroup::new(n)?;
    let a = n / 3 + 1;
    let m = 64 * (usize::BITS - (n - 1).leading_zeros()).max(1) as usize;

    let samples = eh_sample(a, g, m, 11)?;
    let est = recover_slope(&samples)?;
    println!("n = {n}, hidden a = {a}, m = {m}");
    println!("candidates {:?}  (contains a: {})", est.candidates, est.contains(a));
    println!("margin to runner-up: {:.2} nats", est.margin_to_runner_up());

    println!("\nsuccess rate over 200 trials:");
    for m in [8, 16, 32, 64, 128] {
        println!("  m = {m:>4}: {:.3}", success_rate(g, m, 200, 3)?);
    }
    Ok(())
}
