//! Builds the dense Fourier transform over D_n for a range of n and checks
//! unitarity, then transforms a coset state.
//!
//! cargo run --release --example qft_unitarity

use dihedral_hsp::hsp::CosetState;
use dihedral_hsp::qft::{apply_qft, build_qft, cached_qft};
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    for n in [1, 2, 3, 4, 8, 16, 33, 64] {
        let f = build_qft(DihedralGroup::new(n)?);
        println!("n = {n:>3}  ‖FF† − I‖_max = {:.3e}", f.unitarity_defect());
    }

    let g = DihedralGroup::new(8)?;
    let coset = CosetState::new(g, 3, g.rotation(2))?;
    let f = cached_qft(g);
    let out = apply_qft(&f, coset.state())?;
    println!("\nFourier transform of x^2·H_3 in D_8 (nonzero outcomes):");
    for (idx, p) in f.indices().iter().zip(out.probabilities()) {
        if p > 1e-12 {
            println!("  {idx:<14} {p:.6}");
        }
    }
    println!("norm after transform: {:.15}", out.norm());
    Ok(())
}
