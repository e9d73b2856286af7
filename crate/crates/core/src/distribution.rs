//! Exact outcome tables paired with empirical tallies.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use serde::Serialize;

/// Probabilities within this distance below zero are clamped to zero.
pub const CLAMP_TOLERANCE: f64 = 1e-14;

/// An exact probability table over outcomes, optionally carrying counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeDistribution<O> {
    outcomes: Vec<O>,
    probabilities: Vec<f64>,
    counts: Option<Vec<u64>>,
}

impl<O: Clone + PartialEq> OutcomeDistribution<O> {
    /// Builds a table, clamping floating-point noise into [0, 1].
    pub fn new(outcomes: Vec<O>, probabilities: Vec<f64>) -> Self {
        assert_eq!(outcomes.len(), probabilities.len());
        let probabilities = probabilities
            .into_iter()
            .map(|p| {
                debug_assert!((-CLAMP_TOLERANCE..=1.0 + CLAMP_TOLERANCE).contains(&p), "probability {p}");
                p.clamp(0.0, 1.0)
            })
            .collect();
        OutcomeDistribution {
            outcomes,
            probabilities,
            counts: None,
        }
    }

    pub fn outcomes(&self) -> &[O] {
        &self.outcomes
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn probability_of(&self, outcome: &O) -> Option<f64> {
        self.position(outcome).map(|i| self.probabilities[i])
    }

    pub fn position(&self, outcome: &O) -> Option<usize> {
        self.outcomes.iter().position(|o| o == outcome)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&O, f64)> {
        self.outcomes.iter().zip(self.probabilities.iter().copied())
    }

    /// Inverse-CDF sampler over outcome positions.
    pub fn sampler(&self) -> OutcomeSampler {
        OutcomeSampler {
            index: WeightedIndex::new(&self.probabilities).expect("distribution has positive mass"),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> O {
        self.outcomes[self.sampler().sample_index(rng)].clone()
    }

    /// Draws `count` outcomes and records the tallies.
    pub fn sample_counts<R: Rng + ?Sized>(&mut self, count: usize, rng: &mut R) {
        let sampler = self.sampler();
        let mut counts = vec![0u64; self.len()];
        for _ in 0..count {
            counts[sampler.sample_index(rng)] += 1;
        }
        self.counts = Some(counts);
    }

    pub fn set_counts(&mut self, counts: Vec<u64>) {
        assert_eq!(counts.len(), self.len());
        self.counts = Some(counts);
    }

    pub fn counts(&self) -> Option<&[u64]> {
        self.counts.as_deref()
    }

    /// Relative frequencies, if counts have been recorded.
    pub fn empirical(&self) -> Option<Vec<f64>> {
        let counts = self.counts.as_ref()?;
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return None;
        }
        Some(counts.iter().map(|&c| c as f64 / total as f64).collect())
    }

    /// Total-variation distance between the exact table and the tallies.
    pub fn empirical_tv_distance(&self) -> Option<f64> {
        self.empirical().map(|emp| tv_distance(&self.probabilities, &emp))
    }
}

/// Samples positions of an [`OutcomeDistribution`].
#[derive(Debug, Clone)]
pub struct OutcomeSampler {
    index: WeightedIndex<f64>,
}

impl OutcomeSampler {
    pub fn sample_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.index.sample(rng)
    }
}

/// ½ Σ |p_i − q_i|
pub fn tv_distance(p: &[f64], q: &[f64]) -> f64 {
    assert_eq!(p.len(), q.len());
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}
