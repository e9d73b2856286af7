//! Strong Fourier sampling of a hidden reflection: every 2-dim outcome has the
//! same probability 1/(2n) whatever a is, so the raw statistics say nothing
//! about the slope. The real basis shows a cos² bias instead.

use dihedral_hsp::hsp::{exact_fourier_distribution, make_separating_function, max_two_dim_probability, measure_coset};
use dihedral_hsp::qft::real_basis_distribution;
use dihedral_hsp::rng::seeded;
use dihedral_hsp::DihedralGroup;

fn main() -> dihedral_hsp::Result<()> {
    let n = 12;
    let g = DihedralGroup::new(n)?;
    let mut rng = seeded(5);

    for a in [0, 1, 5] {
        let f = make_separating_function(a, g)?;
        let coset = measure_coset(&f, &mut rng);
        let c = coset.representative();
        let exact = exact_fourier_distribution(g, a, c)?;
        let real = real_basis_distribution(g, a, c)?;
        let real_max = real.probabilities().iter().cloned().fold(0.0, f64::max);
        println!(
            "a = {a:>2}  coset {c}  max 2-dim P = {:.6} (1/2n = {:.6})  max real-basis P = {real_max:.6} (4/n = {:.6})",
            max_two_dim_probability(&exact),
            1.0 / (2 * n) as f64,
            4.0 / n as f64
        );
    }

    let f = make_separating_function(5, g)?;
    let coset = measure_coset(&f, &mut rng);
    let mut dist = exact_fourier_distribution(g, 5, coset.representative())?;
    dist.sample_counts(20_000, &mut rng);
    println!("TV distance of 20000 draws to the exact table: {:.4}", dist.empirical_tv_distance().unwrap_or(1.0));
    Ok(())
}
