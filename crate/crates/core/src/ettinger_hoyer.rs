//! The Hadamard-on-rows measurement and maximum-likelihood slope recovery.
//!
//! Outcomes are folded onto k ∈ [0, n) with
//! P(k, 0) = cos²(πak/n)/n and P(k, 1) = sin²(πak/n)/n. The pair k, n − k
//! together carries the row masses of ρ_k; k = 0 (and k = n/2 for even n)
//! stand for the one-dimensional characters.
//!
//! P(k, b | a) depends on a·k only through r = a·k mod n, and is symmetric
//! under r ↦ n − r. Tables are indexed by min(r, n − r) so that a and n − a
//! produce bit-identical likelihoods.

use rayon::prelude::*;
use serde::Serialize;

use crate::distribution::OutcomeDistribution;
use crate::error::{Error, Result};
use crate::group::DihedralGroup;
use crate::hsp::CosetState;
use crate::qft::{apply_qft, cached_qft};
use crate::representations::IrrepLabel;
use crate::rng::{stream_rng, EH_SAMPLE_OFFSET};

/// Measured block index k and row bit b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EhOutcome {
    pub k: usize,
    pub b: u8,
}

impl EhOutcome {
    fn position(self) -> usize {
        2 * self.k + self.b as usize
    }
}

fn folded_residue(a: usize, k: usize, n: usize) -> usize {
    let r = (a * k) % n;
    r.min(n - r)
}

/// (cos²(πr/n), sin²(πr/n)) for a residue r ≤ n/2, exact at r = 0 and r = n/2.
fn row_weights(r: usize, n: usize) -> (f64, f64) {
    let c = if r == 0 {
        1.0
    } else if 2 * r == n {
        -1.0
    } else {
        (std::f64::consts::PI * (2 * r) as f64 / n as f64).cos()
    };
    ((1.0 + c) / 2.0, (1.0 - c) / 2.0)
}

/// Exact folded distribution over (k, b), ordered by k then b.
pub fn eh_distribution(a: usize, group: DihedralGroup) -> Result<OutcomeDistribution<EhOutcome>> {
    let n = group.n();
    if a >= n {
        return Err(Error::InvalidSlope { a, n });
    }
    let mut outcomes = Vec::with_capacity(2 * n);
    let mut probabilities = Vec::with_capacity(2 * n);
    for k in 0..n {
        let (cos2, sin2) = row_weights(folded_residue(a, k, n), n);
        outcomes.push(EhOutcome { k, b: 0 });
        probabilities.push(cos2 / n as f64);
        outcomes.push(EhOutcome { k, b: 1 });
        probabilities.push(sin2 / n as f64);
    }
    Ok(OutcomeDistribution::new(outcomes, probabilities))
}

/// i.i.d. draws from [`eh_distribution`], reproducible from (n, a, seed, count).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EhSampleSet {
    n: usize,
    seed: u64,
    outcomes: Vec<EhOutcome>,
}

impl EhSampleSet {
    pub fn from_outcomes(group: DihedralGroup, outcomes: Vec<EhOutcome>) -> Result<Self> {
        let n = group.n();
        if let Some(bad) = outcomes.iter().find(|o| o.k >= n || o.b > 1) {
            return Err(Error::InvalidConfig(format!("outcome {bad:?} out of range for n = {n}")));
        }
        Ok(EhSampleSet { n, seed: 0, outcomes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn outcomes(&self) -> &[EhOutcome] {
        &self.outcomes
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    /// Counts indexed 2k + b.
    pub fn histogram(&self) -> Vec<u64> {
        let mut h = vec![0u64; 2 * self.n];
        for o in &self.outcomes {
            h[o.position()] += 1;
        }
        h
    }
}

/// Draws `count` outcomes for slope `a` using stream `stream` of `seed`.
pub fn eh_sample_stream(a: usize, group: DihedralGroup, count: usize, seed: u64, stream: u64) -> Result<EhSampleSet> {
    let dist = eh_distribution(a, group)?;
    let sampler = dist.sampler();
    let mut rng = stream_rng(seed, EH_SAMPLE_OFFSET, stream);
    let outcomes = (0..count).map(|_| dist.outcomes()[sampler.sample_index(&mut rng)]).collect();
    Ok(EhSampleSet { n: group.n(), seed, outcomes })
}

pub fn eh_sample(a: usize, group: DihedralGroup, count: usize, seed: u64) -> Result<EhSampleSet> {
    eh_sample_stream(a, group, count, seed, 0)
}

/// A log-likelihood, or the sentinel for a candidate that assigns zero
/// probability to an observed outcome.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum LogLikelihood {
    Finite(f64),
    Impossible,
}

impl LogLikelihood {
    pub fn value(self) -> f64 {
        match self {
            LogLikelihood::Finite(v) => v,
            LogLikelihood::Impossible => f64::NEG_INFINITY,
        }
    }

    pub fn is_possible(self) -> bool {
        matches!(self, LogLikelihood::Finite(_))
    }
}

/// log P(k, b) indexed by folded residue. `None` marks a zero probability.
#[derive(Debug, Clone)]
struct LogTable {
    n: usize,
    cos: Vec<Option<f64>>,
    sin: Vec<Option<f64>>,
}

impl LogTable {
    fn new(n: usize) -> Self {
        let log_n = (n as f64).ln();
        let ln = |w: f64| (w > 0.0).then(|| w.ln() - log_n);
        let (cos, sin) = (0..=n / 2)
            .map(|r| {
                let (c, s) = row_weights(r, n);
                (ln(c), ln(s))
            })
            .unzip();
        LogTable { n, cos, sin }
    }

    fn score(&self, candidate: usize, histogram: &[u64]) -> LogLikelihood {
        let mut total = 0.0;
        for (pos, &count) in histogram.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let r = folded_residue(candidate, pos / 2, self.n);
            let term = if pos % 2 == 0 { self.cos[r] } else { self.sin[r] };
            match term {
                Some(l) => total += count as f64 * l,
                None => return LogLikelihood::Impossible,
            }
        }
        LogLikelihood::Finite(total)
    }
}

pub fn log_likelihood(candidate: usize, samples: &EhSampleSet) -> Result<LogLikelihood> {
    if candidate >= samples.n {
        return Err(Error::InvalidSlope { a: candidate, n: samples.n });
    }
    if samples.is_empty() {
        return Err(Error::InvalidConfig("no samples".into()));
    }
    Ok(LogTable::new(samples.n).score(candidate, &samples.histogram()))
}

/// Exact argmax set of the likelihood over all candidate slopes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeEstimate {
    pub candidates: Vec<usize>,
    pub log_likelihoods: Vec<LogLikelihood>,
    /// Set when every candidate was excluded; `candidates` is then all of [0, n).
    pub degenerate: bool,
}

impl SlopeEstimate {
    pub fn contains(&self, a: usize) -> bool {
        self.candidates.binary_search(&a).is_ok()
    }

    pub fn best(&self) -> f64 {
        self.candidates
            .first()
            .map(|&a| self.log_likelihoods[a].value())
            .unwrap_or(f64::NEG_INFINITY)
    }

    /// Gap between the best score and the best score outside the argmax set.
    pub fn margin_to_runner_up(&self) -> f64 {
        let runner_up = self
            .log_likelihoods
            .iter()
            .enumerate()
            .filter(|(a, _)| !self.contains(*a))
            .map(|(_, l)| l.value())
            .fold(f64::NEG_INFINITY, f64::max);
        self.best() - runner_up
    }

    /// True when the set is closed under a ↦ n − a.
    pub fn is_reflection_closed(&self) -> bool {
        let n = self.log_likelihoods.len();
        self.candidates.iter().all(|&a| self.contains((n - a) % n))
    }
}

/// Scans every candidate slope; parallel over candidates for large n.
pub fn recover_slope(samples: &EhSampleSet) -> Result<SlopeEstimate> {
    if samples.is_empty() {
        return Err(Error::InvalidConfig("no samples".into()));
    }
    let n = samples.n;
    let table = LogTable::new(n);
    let histogram = samples.histogram();
    let log_likelihoods: Vec<LogLikelihood> = if n >= 1024 {
        (0..n).into_par_iter().map(|a| table.score(a, &histogram)).collect()
    } else {
        (0..n).map(|a| table.score(a, &histogram)).collect()
    };
    let best = log_likelihoods
        .iter()
        .filter_map(|l| match l {
            LogLikelihood::Finite(v) => Some(*v),
            LogLikelihood::Impossible => None,
        })
        .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |m| m.max(v))));
    let (candidates, degenerate) = match best {
        Some(best) => (
            (0..n).filter(|&a| log_likelihoods[a] == LogLikelihood::Finite(best)).collect(),
            false,
        ),
        None => ((0..n).collect(), true),
    };
    Ok(SlopeEstimate {
        candidates,
        log_likelihoods,
        degenerate,
    })
}

/// Result of comparing the folded table against the exact Fourier pipeline.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    pub a: usize,
    pub max_deviation: f64,
    pub first_mismatch: Option<String>,
    pub passed: bool,
}

pub const CONSISTENCY_TOLERANCE: f64 = 1e-10;

/// Runs every coset state of H_a through the dense QFT, transposes each ρ_k
/// block, applies a Hadamard to its row index, and compares the row masses
/// with the folded table: row b of ρ_k must carry P(k, b) + P(n − k, b),
/// φ_{0,v} must carry P(0, v) and φ_{1,v} must carry P(n/2, v).
pub fn consistency_check(a: usize, group: DihedralGroup) -> Result<ConsistencyReport> {
    let n = group.n();
    let folded = eh_distribution(a, group)?;
    let p = |k: usize, b: u8| folded.probabilities()[EhOutcome { k, b }.position()];
    let qft = cached_qft(group);
    let s = std::f64::consts::FRAC_1_SQRT_2;

    let mut max_deviation: f64 = 0.0;
    let mut first_mismatch = None;
    let mut record = |dev: f64, what: String| {
        if dev >= CONSISTENCY_TOLERANCE && first_mismatch.is_none() {
            first_mismatch = Some(what);
        }
        max_deviation = max_deviation.max(dev);
    };

    for c in group.elements() {
        let coset = CosetState::new(group, a, c)?;
        let fourier = apply_qft(&qft, coset.state())?;
        let mut pos = 0;
        while pos < qft.indices().len() {
            let idx = qft.indices()[pos];
            match idx.label {
                IrrepLabel::OneDim { u, v } => {
                    let mass = fourier.amplitude(pos).norm_sqr();
                    let k = if u == 0 { 0 } else { n / 2 };
                    record((mass - p(k, v)).abs(), format!("c={c} {}", idx.label));
                    pos += 1;
                }
                IrrepLabel::TwoDim { k } => {
                    // block amplitudes A[i][j] stored row-major; use Aᵀ
                    let amp = |i: usize, j: usize| fourier.amplitude(pos + 2 * i + j);
                    for (b, sign) in [(0u8, 1.0), (1u8, -1.0)] {
                        let mass: f64 = (0..2)
                            .map(|col| ((amp(col, 0) + amp(col, 1) * sign) * s).norm_sqr())
                            .sum();
                        let expected = p(k, b) + p(n - k, b);
                        record((mass - expected).abs(), format!("c={c} {} row {b}", idx.label));
                    }
                    pos += 4;
                }
            }
        }
    }
    Ok(ConsistencyReport {
        n,
        a,
        max_deviation,
        passed: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Fraction of `trials` runs (uniformly random slope, `m` samples each) in
/// which the estimate contains the true slope. Trials run in parallel with
/// fixed per-trial streams, so the result does not depend on thread count.
pub fn success_rate(group: DihedralGroup, m: usize, trials: usize, seed: u64) -> Result<f64> {
    use rand::Rng;
    let n = group.n();
    let hits: Result<Vec<bool>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let a = stream_rng(seed, crate::rng::EH_SWEEP_OFFSET, t).random_range(0..n);
            let samples = eh_sample_stream(a, group, m, seed, t)?;
            Ok(recover_slope(&samples)?.contains(a))
        })
        .collect();
    let hits = hits?;
    Ok(hits.iter().filter(|&&h| h).count() as f64 / trials as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize) -> DihedralGroup {
        DihedralGroup::new(n).unwrap()
    }

    fn direct(a: usize, n: usize, k: usize, b: u8) -> f64 {
        let theta = std::f64::consts::PI * a as f64 * k as f64 / n as f64;
        if b == 0 {
            theta.cos().powi(2) / n as f64
        } else {
            theta.sin().powi(2) / n as f64
        }
    }

    #[test]
    fn distribution_examples() {
        let d = eh_distribution(0, group(5)).unwrap();
        for k in 0..5 {
            assert_eq!(d.probability_of(&EhOutcome { k, b: 0 }), Some(0.2));
            assert_eq!(d.probability_of(&EhOutcome { k, b: 1 }), Some(0.0));
        }
        let d = eh_distribution(2, group(4)).unwrap();
        assert_eq!(d.probability_of(&EhOutcome { k: 1, b: 0 }), Some(0.0));
        let d = eh_distribution(1, group(8)).unwrap();
        assert!((d.probability_of(&EhOutcome { k: 2, b: 0 }).unwrap() - 1.0 / 16.0).abs() < 1e-16);
    }

    #[test]
    fn matches_direct_formula_and_normalizes() {
        for n in 1..=40 {
            for a in 0..n {
                let d = eh_distribution(a, group(n)).unwrap();
                assert!((d.total() - 1.0).abs() < 1e-12);
                for (o, p) in d.iter() {
                    assert!((p - direct(a, n, o.k, o.b)).abs() < 1e-14);
                }
                let mirror = eh_distribution((n - a) % n, group(n)).unwrap();
                assert_eq!(d.probabilities(), mirror.probabilities());
            }
        }
    }

    #[test]
    fn sampling_examples() {
        let s = eh_sample(0, group(12), 1000, 3).unwrap();
        assert!(s.outcomes().iter().all(|o| o.b == 0));
        assert_eq!(eh_sample(5, group(16), 300, 9).unwrap(), eh_sample(5, group(16), 300, 9).unwrap());

        let g = group(16);
        let mut d = eh_distribution(5, g).unwrap();
        let s = eh_sample(5, g, 100_000, 21).unwrap();
        d.set_counts(s.histogram());
        assert!(d.empirical_tv_distance().unwrap() <= 0.02);
    }

    #[test]
    fn likelihood_examples() {
        let g = group(6);
        let s = EhSampleSet::from_outcomes(g, vec![EhOutcome { k: 0, b: 0 }; 7]).unwrap();
        for a in 0..6 {
            let l = log_likelihood(a, &s).unwrap().value();
            assert!((l - 7.0 * (1.0f64 / 6.0).ln()).abs() < 1e-12);
        }
        let s = EhSampleSet::from_outcomes(group(4), vec![EhOutcome { k: 1, b: 0 }]).unwrap();
        assert_eq!(log_likelihood(2, &s).unwrap(), LogLikelihood::Impossible);
        assert_eq!(log_likelihood(2, &s).unwrap().value(), f64::NEG_INFINITY);
    }

    #[test]
    fn true_slope_maximizes_expected_likelihood() {
        // cross-entropy: E_a[log P(·|a')] is maximized at a' ∈ {a, n − a}
        let n = 16;
        let g = group(n);
        for a in [3usize, 5] {
            let s = eh_sample(a, g, 500, 77).unwrap();
            let est = recover_slope(&s).unwrap();
            let truth = log_likelihood(a, &s).unwrap().value();
            for cand in 0..n {
                assert!(log_likelihood(cand, &s).unwrap().value() <= truth);
            }
            assert!(est.contains(a));
        }
    }

    #[test]
    fn recover_examples() {
        let g2 = group(2);
        let s = EhSampleSet::from_outcomes(g2, vec![EhOutcome { k: 1, b: 1 }, EhOutcome { k: 0, b: 0 }]).unwrap();
        assert_eq!(recover_slope(&s).unwrap().candidates, vec![1]);

        let g = group(16);
        let est = recover_slope(&eh_sample(5, g, 200, 7).unwrap()).unwrap();
        assert_eq!(est.candidates, vec![5, 11]);
        assert!(est.margin_to_runner_up() > 0.0);

        let est = recover_slope(&eh_sample(0, g, 200, 7).unwrap()).unwrap();
        assert_eq!(est.candidates, vec![0]);
    }

    #[test]
    fn candidates_closed_under_reflection() {
        for n in [5usize, 16, 33] {
            let g = group(n);
            for a in 0..n {
                for seed in 0..5 {
                    let est = recover_slope(&eh_sample(a, g, 20, seed).unwrap()).unwrap();
                    assert!(est.is_reflection_closed(), "n={n} a={a} {:?}", est.candidates);
                    assert!(!est.degenerate);
                }
            }
        }
    }

    #[test]
    fn degenerate_when_everything_excluded() {
        // (k=1, b=0) rules out a=2 and (k=1, b=1) rules out a=0 at n=4;
        // (k=2, b=0) rules out a odd, so nothing survives.
        let s = EhSampleSet::from_outcomes(
            group(4),
            vec![EhOutcome { k: 1, b: 0 }, EhOutcome { k: 1, b: 1 }, EhOutcome { k: 2, b: 0 }],
        )
        .unwrap();
        let est = recover_slope(&s).unwrap();
        assert!(est.degenerate);
        assert_eq!(est.candidates, vec![0, 1, 2, 3]);
    }

    #[test]
    fn consistency_examples() {
        for n in [1usize, 2, 3, 4, 7, 10] {
            for a in 0..n {
                let r = consistency_check(a, group(n)).unwrap();
                assert!(r.passed, "{r:?}");
            }
        }
        // n = 4, odd a: φ_{1,v} mass sits on v = a mod 2 and P(2, b) on b = a mod 2
        let d = eh_distribution(3, group(4)).unwrap();
        assert_eq!(d.probability_of(&EhOutcome { k: 2, b: 1 }), Some(0.25));
        assert_eq!(d.probability_of(&EhOutcome { k: 2, b: 0 }), Some(0.0));
    }

    #[test]
    fn success_rate_is_deterministic() {
        let g = group(16);
        let r1 = success_rate(g, 16, 64, 5).unwrap();
        let r2 = success_rate(g, 16, 64, 5).unwrap();
        assert_eq!(r1, r2);
        assert!(r1 > 0.5);
    }
}
