//! Acceptance criteria. Runs every criterion at its pinned tolerance and
//! prints one PASS/FAIL line each; exits nonzero if any criterion fails.
//!
//! cargo test --release -p dihedral-hsp --test acceptance

use std::process::{Command as Process, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use dihedral_hsp::cloning::{
    basis_copy_cloner, clone_known_a, clone_target, fidelity, fixed_slope_cloner, identity_cloner,
    no_cloning_witness, unitary_cloner_refuter, CloningCandidate,
};
use dihedral_hsp::dcp::{dot_product, inner_product, DcpSample};
use dihedral_hsp::ettinger_hoyer::{consistency_check, eh_sample_stream, recover_slope};
use dihedral_hsp::experiments::clone_recovery_rate;
use dihedral_hsp::hsp::exact_fourier_distribution;
use dihedral_hsp::qft::{build_qft, real_basis_distribution};
use dihedral_hsp::representations::{irrep_list, schur_check};
use dihedral_hsp::rng::stream_rng;
use dihedral_hsp::DihedralGroup;

const SEED: u64 = 20_240_601;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn group(n: usize) -> DihedralGroup {
    DihedralGroup::new(n).unwrap()
}

/// 1. ‖F F† − I‖_max < 1e−12 for n ∈ {1, …, 64}.
fn qft_unitarity() -> Outcome {
    let worst = (1..=64usize)
        .into_par_iter()
        .map(|n| (build_qft(group(n)).unitarity_defect(), n))
        .reduce(|| (0.0, 0), |x, y| if y.0 > x.0 { y } else { x });
    outcome(worst.0 < 1e-12, format!("max defect {:.3e} at n={}", worst.0, worst.1))
}

/// 2. Σ d² = 2n exactly and Schur deviation < 1e−12 for n ∈ {1, …, 32}.
fn irrep_completeness() -> Outcome {
    let mut worst = 0.0f64;
    let mut ok = true;
    for n in 1..=32 {
        let g = group(n);
        let dims: usize = irrep_list(g).iter().map(|l| l.dim() * l.dim()).sum();
        let schur = schur_check(g);
        ok &= dims == 2 * n && schur.max_deviation < 1e-12;
        worst = worst.max(schur.max_deviation);
    }
    outcome(ok, format!("max Schur deviation {worst:.3e}"))
}

/// Representatives tested for each (n, a): a fixed spread plus random picks.
fn sampled_representatives(g: DihedralGroup, a: usize, stream: u64) -> Vec<dihedral_hsp::DihedralElement> {
    let n = g.n() as i64;
    let mut reps = vec![g.identity(), g.rotation(1), g.rotation(n / 2), g.y(), g.reflection(a as i64), g.reflection(n - 1)];
    let mut rng = stream_rng(SEED, 0x100, stream);
    reps.extend((0..4).map(|_| g.element_at(rng.random_range(0..g.order()))));
    reps
}

/// 3. 2-dim outcomes equal 1/(2n) to 1e−12; real-basis outcomes ≤ 4/n + 1e−12.
fn flatness() -> Outcome {
    let results: Vec<(f64, f64)> = (3..=64usize)
        .into_par_iter()
        .map(|n| {
            let g = group(n);
            let flat = 1.0 / (2 * n) as f64;
            let bound = 4.0 / n as f64;
            let mut dev: f64 = 0.0;
            let mut excess = f64::NEG_INFINITY;
            for a in 0..n {
                for c in sampled_representatives(g, a, (n * 1000 + a) as u64) {
                    let exact = exact_fourier_distribution(g, a, c).unwrap();
                    let real = real_basis_distribution(g, a, c).unwrap();
                    for ((idx, p), r) in exact.iter().zip(real.probabilities()) {
                        if idx.label.dim() == 2 {
                            dev = dev.max((p - flat).abs());
                            excess = excess.max(r - bound);
                        }
                    }
                }
            }
            (dev, excess)
        })
        .collect();
    let dev = results.iter().map(|r| r.0).fold(0.0, f64::max);
    let excess = results.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    outcome(
        dev < 1e-12 && excess <= 1e-12,
        format!("max |P − 1/2n| {dev:.3e}; max real-basis P − 4/n {excess:.3e}"),
    )
}

/// 4. Delta-formula inner products ∈ {0, ½, 1} and equal the dot product to 1e−12.
fn inner_products() -> Outcome {
    let mut worst = 0.0f64;
    let mut in_set = true;
    let mut pairs = 0usize;
    for n in 1..=8 {
        let g = group(n);
        let samples: Vec<DcpSample> = (0..n)
            .flat_map(|a| (0..n).map(move |al| DcpSample::new(g, a, al).unwrap()))
            .collect();
        for p in &samples {
            for q in &samples {
                let v = inner_product(p, q);
                in_set &= [0.0, 0.5, 1.0].contains(&v);
                worst = worst.max((dot_product(p, q) - Complex64::new(v, 0.0)).norm());
                pairs += 1;
            }
        }
    }
    outcome(in_set && worst < 1e-12, format!("{pairs} pairs, max |delta − dot| {worst:.3e}"))
}

/// 5. Folded distribution vs Fourier-then-Hadamard pipeline, all n ≤ 32, all a.
fn eh_consistency() -> Outcome {
    let worst = (1..=32usize)
        .into_par_iter()
        .flat_map(|n| (0..n).into_par_iter().map(move |a| (n, a)))
        .map(|(n, a)| consistency_check(a, group(n)).unwrap().max_deviation)
        .reduce(|| 0.0, f64::max);
    outcome(worst < 1e-10, format!("max deviation {worst:.3e}"))
}

/// 6 and 7. n = 64, every a, m = 384, 500 trials per slope.
fn eh_recovery_and_symmetry() -> (Outcome, Outcome) {
    let n = 64;
    let m = 384;
    let trials = 500;
    let g = group(n);
    let per_slope: Vec<(usize, usize, usize)> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut hits = 0;
            let mut closed = 0;
            for t in 0..trials {
                let samples = eh_sample_stream(a, g, m, SEED, (a * trials + t) as u64).unwrap();
                let est = recover_slope(&samples).unwrap();
                hits += usize::from(est.contains(a));
                closed += usize::from(est.is_reflection_closed());
            }
            (a, hits, closed)
        })
        .collect();
    let (worst_a, worst_hits, _) = *per_slope.iter().min_by_key(|r| r.1).unwrap();
    let worst_rate = worst_hits as f64 / trials as f64;
    let closed: usize = per_slope.iter().map(|r| r.2).sum();
    let total = n * trials;
    (
        outcome(worst_rate >= 0.99, format!("worst per-slope success {worst_rate:.4} (a={worst_a})")),
        outcome(closed == total, format!("{closed}/{total} candidate sets closed under a ↦ n−a")),
    )
}

/// 8. Known-slope cloning fidelity 1 to 1e−12, all α, n ∈ {3, …, 32}, sampled a.
fn clone_fidelity() -> Outcome {
    let worst = (3..=32usize)
        .into_par_iter()
        .map(|n| {
            let g = group(n);
            let mut rng = stream_rng(SEED, 0x200, n as u64);
            let mut slopes = vec![0, 1, n / 2, n - 1];
            slopes.extend((0..3).map(|_| rng.random_range(0..n)));
            let mut worst: f64 = 0.0;
            for a in slopes {
                for alpha in 0..n {
                    let s = DcpSample::new(g, a, alpha).unwrap();
                    let out = clone_known_a(a, &s).unwrap();
                    worst = worst.max((fidelity(&clone_target(a, s.state(), g), &out) - 1.0).abs());
                }
            }
            worst
        })
        .reduce(|| 0.0, f64::max);
    outcome(worst < 1e-12, format!("max |fidelity − 1| {worst:.3e}"))
}

/// 9. 20 cloned pairs recover a with rate ≥ 0.999 over 10⁴ trials at n = 16.
fn clone_pair_recovery() -> Outcome {
    let rate = clone_recovery_rate(group(16), 9, 20, 10_000, SEED).unwrap();
    outcome(rate >= 0.999, format!("recovery rate {rate:.4}"))
}

/// 10. Witness 0.5 > 0.25 at n = 4 and three refuted candidate cloners.
fn no_cloning() -> Outcome {
    let g = group(4);
    let w = no_cloning_witness(g, 0).unwrap();
    let mut ok = w.left == 0.5 && w.right_bound <= 0.25 && w.contradiction;
    let mut detail = format!("left {} right bound {}", w.left, w.right_bound);
    let candidates: Vec<Box<dyn CloningCandidate>> = vec![
        Box::new(fixed_slope_cloner(1, g)),
        Box::new(identity_cloner(4)),
        Box::new(basis_copy_cloner(4)),
    ];
    for c in &candidates {
        let r = unitary_cloner_refuter(c.as_ref(), g, 200, SEED).unwrap();
        ok &= r.min_fidelity < 0.999;
        detail.push_str(&format!("; {}: {:.4}", r.candidate, r.min_fidelity));
    }
    outcome(ok, detail)
}

fn strip_duration(json: &str) -> &str {
    json.split(",\"duration_ms\"").next().unwrap()
}

/// 11. Every CLI command twice with identical flags gives identical payloads.
fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_dhsp");
    let runs: [&[&str]; 5] = [
        &["irreps", "--n", "12"],
        &["qft-check", "--n", "10", "--a", "3", "--samples", "50", "--seed", "4"],
        &["hsp", "--n", "16", "--samples", "20000", "--seed", "9"],
        &["eh", "--n", "16", "--a", "5", "--m", "200", "--seed", "7", "--sweep", "8,32", "--trials", "100"],
        &["clone", "--n", "5", "--a", "2", "--trials", "500", "--samples", "100", "--seed", "3"],
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for args in runs {
        let outputs: Vec<String> = [1, 3]
            .iter()
            .map(|threads| {
                let out = Process::new(bin)
                    .args(args)
                    .args(["--threads", &threads.to_string()])
                    .output()
                    .expect("run dhsp");
                ok &= out.status.success();
                String::from_utf8(out.stdout).unwrap()
            })
            .collect();
        let same = strip_duration(&outputs[0]) == strip_duration(&outputs[1]) && !outputs[0].is_empty();
        ok &= same;
        detail.push(format!("{}={}", args[0], if same { "same" } else { "DIFFERS" }));
    }
    outcome(ok, detail.join(" "))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (recovery, symmetry) = eh_recovery_and_symmetry();
    let results = vec![
        ("1 QFT unitarity, n ≤ 64", qft_unitarity()),
        ("2 irrep completeness and Schur orthogonality, n ≤ 32", irrep_completeness()),
        ("3 flatness 1/(2n) and real-basis bound 4/n, 3 ≤ n ≤ 64", flatness()),
        ("4 DCP inner products in {0, 1/2, 1}, n ≤ 8", inner_products()),
        ("5 folded distribution consistency, n ≤ 32", eh_consistency()),
        ("6 slope recovery ≥ 99% at n=64, m=384", recovery),
        ("7 candidate sets closed under a ↦ n−a", symmetry),
        ("8 known-slope cloning fidelity, 3 ≤ n ≤ 32", clone_fidelity()),
        ("9 slope from 20 cloned pairs ≥ 0.999", clone_pair_recovery()),
        ("10 no-cloning witness and refuted cloners", no_cloning()),
        ("11 CLI determinism", cli_determinism()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("[{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {}/{} passed in {:.1}s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
