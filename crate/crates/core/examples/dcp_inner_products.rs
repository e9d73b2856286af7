//! Dihedral coset samples ψ_a^α = (|0, α⟩ + |1, a − α⟩)/√2 and their
//! pairwise overlaps, which only take the values 0, ½ and 1.

use dihedral_hsp::dcp::{dot_product, inner_product, DcpSample};
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    let g = DihedralGroup::new(4)?;
    let base = DcpSample::new(g, 1, 0)?;
    println!("overlaps with ψ_1^0 in D_4:");
    for b in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|beta| DcpSample::new(g, b, beta).map(|q| format!("{:.1}", inner_product(&base, &q))))
            .collect::<Result<_, _>>()?;
        println!("  b = {b}: {}", row.join("  "));
    }

    let q = DcpSample::new(g, 2, 1)?;
    println!("\nψ_1^0 vs ψ_2^1: delta formula {} direct {:.3}", inner_product(&base, &q), dot_product(&base, &q).re);
    println!("two-register amplitudes of ψ_1^0 (j: b=0, b=1):");
    for (j, [z0, z1]) in base.two_register_amplitudes().iter().enumerate() {
        println!("  {j}: {:.4} {:.4}", z0.re, z1.re);
    }
    Ok(())
}
