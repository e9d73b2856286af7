//! Without knowing a, no unitary clones coset samples. The witness compares
//! both sides of the overlap identity a cloner would force; the refuter runs
//! concrete candidate circuits and finds samples they copy badly.

use dihedral_hsp::cloning::{basis_copy_cloner, fixed_slope_cloner, identity_cloner, no_cloning_witness, unitary_cloner_refuter, CloningCandidate};
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    let g = DihedralGroup::new(4)?;
    for list_len in [0, 1, 3] {
        let w = no_cloning_witness(g, list_len)?;
        println!(
            "list length {list_len}: left {:.4}  right bound {:.4}  contradiction {}",
            w.left, w.right_bound, w.contradiction
        );
    }

    let candidates: Vec<Box<dyn CloningCandidate>> = vec![
        Box::new(fixed_slope_cloner(1, g)),
        Box::new(identity_cloner(4)),
        Box::new(basis_copy_cloner(4)),
    ];
    for c in &candidates {
        let r = unitary_cloner_refuter(c.as_ref(), g, 100, 8)?;
        println!("{:<34} worst fidelity {:.4} at a = {}, α = {}", r.candidate, r.min_fidelity, r.worst_a, r.worst_alpha);
    }
    Ok(())
}
