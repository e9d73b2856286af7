//! With a known, the circuit T V T† maps |a⟩ψ_a^α|0⟩ to |a⟩ψ_a^α ψ_a^α.
//! Measuring the two copies then reveals a once the reflection bits differ.

use dihedral_hsp::cloning::{clone_known_a, clone_target, fidelity, measure_clone_pair, recover_a_from_clone_pairs};
use dihedral_hsp::dcp::DcpSample;
use dihedral_hsp::experiments::clone_recovery_rate;
use dihedral_hsp::rng::seeded;
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    let g = DihedralGroup::new(7)?;
    let a = 4;
    let mut rng = seeded(1);
    let mut pairs = Vec::new();
    for alpha in 0..7 {
        let s = DcpSample::new(g, a, alpha)?;
        let out = clone_known_a(a, &s)?;
        let f = fidelity(&clone_target(a, s.state(), g), &out);
        let pair = measure_clone_pair(&out, g, &mut rng);
        println!("α = {alpha}  fidelity {f:.15}  measured {} {}", pair.0, pair.1);
        pairs.push(pair);
    }
    println!("recovered a = {}", recover_a_from_clone_pairs(&pairs, g)?);

    let g16 = DihedralGroup::new(16)?;
    println!("recovery rate, n = 16, 20 pairs, 2000 trials: {:.4}", clone_recovery_rate(g16, 9, 20, 2000, 2)?);
    Ok(())
}
