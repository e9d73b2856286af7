//! Lists the irreps of D_n, checks Σ d² = 2n and Schur orthogonality.
//!
//! cargo run --release --example irreps_and_schur -- 6

use dihedral_hsp::representations::{evaluate, irrep_list, schur_check};
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n must be an integer"));
    let g = DihedralGroup::new(n)?;
    let x = g.x();
    let y = g.y();

    println!("irreps of D_{n} (order {})", g.order());
    for label in irrep_list(g) {
        let rx = evaluate(label, x, g);
        let ry = evaluate(label, y, g);
        println!("  {label:<8} dim {}  tr x = {:+.4}  tr y = {:+.4}", label.dim(), trace(&rx), trace(&ry));
    }

    let report = schur_check(g);
    println!("sum of squared dims: {} (2n = {})", report.sum_of_squared_dims, 2 * n);
    println!("max Schur deviation: {:.3e}", report.max_deviation);
    println!("passed: {}", report.passed);
    Ok(())
}

fn trace(m: &dihedral_hsp::RepMatrix) -> f64 {
    (0..m.dim()).map(|i| m[(i, i)].re).sum()
}
