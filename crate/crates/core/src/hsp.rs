//! The standard hidden-subgroup algorithm for H_a ≤ D_n, simulated exactly.
//!
//! The uniform superposition with f computed into a value register is built
//! directly. Measuring the value register is simulated by drawing a coset id
//! from its (uniform) marginal and writing down the post-measurement state.

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;

use crate::distribution::OutcomeDistribution;
use crate::error::{Error, Result};
use crate::group::{DihedralElement, DihedralGroup, ReflectionSubgroup};
use crate::qft::{FourierIndex, StateVector};
use crate::representations::{coset_sum, irrep_list};

/// Oracle f: D_n → [0, n), constant on left cosets of H_a and distinct
/// across them. Each coset is labelled by the index of its smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingFunction {
    subgroup: ReflectionSubgroup,
    table: Vec<usize>,
}

impl SeparatingFunction {
    pub fn new(group: DihedralGroup, a: usize) -> Result<Self> {
        let subgroup = group.reflection_subgroup(a)?;
        let table = group
            .elements()
            .map(|g| group.index_of(group.left_coset(g, &subgroup)[0]))
            .collect();
        Ok(SeparatingFunction { subgroup, table })
    }

    pub fn group(&self) -> DihedralGroup {
        self.subgroup.group()
    }

    pub fn slope(&self) -> usize {
        self.subgroup.slope()
    }

    pub fn subgroup(&self) -> &ReflectionSubgroup {
        &self.subgroup
    }

    pub fn eval(&self, g: DihedralElement) -> usize {
        self.table[self.group().index_of(g)]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Number of distinct values, always n.
    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.group().n()];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }
}

pub fn make_separating_function(a: usize, group: DihedralGroup) -> Result<SeparatingFunction> {
    SeparatingFunction::new(group, a)
}

/// (2n) × n amplitude array of (1/√2n) Σ_g |g⟩|f(g)⟩.
pub fn prepare_uniform_with_f(f: &SeparatingFunction) -> Array2<Complex64> {
    let group = f.group();
    let mut amps = Array2::zeros((group.order(), group.n()));
    let w = Complex64::new(1.0 / (group.order() as f64).sqrt(), 0.0);
    for g in group.elements() {
        amps[(group.index_of(g), f.eval(g))] = w;
    }
    amps
}

/// Uniform superposition over one left coset c·H_a.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetState {
    representative: DihedralElement,
    subgroup: ReflectionSubgroup,
    state: StateVector,
}

impl CosetState {
    pub fn new(group: DihedralGroup, a: usize, representative: DihedralElement) -> Result<Self> {
        let subgroup = group.reflection_subgroup(a)?;
        let coset = group.left_coset(representative, &subgroup);
        Ok(CosetState {
            representative,
            subgroup,
            state: StateVector::uniform_over(group, &coset),
        })
    }

    pub fn representative(&self) -> DihedralElement {
        self.representative
    }

    pub fn subgroup(&self) -> &ReflectionSubgroup {
        &self.subgroup
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }
}

/// Measures the value register of the prepared state, returning the
/// collapsed coset state with its smallest element as representative.
pub fn measure_coset<R: Rng + ?Sized>(f: &SeparatingFunction, rng: &mut R) -> CosetState {
    let group = f.group();
    let id = rng.random_range(0..group.n());
    let representative = group.element_at(id);
    debug_assert_eq!(f.eval(representative), id);
    CosetState::new(group, f.slope(), representative).expect("slope validated by f")
}

/// Exact strong Fourier sampling distribution of the coset state c·H_a:
/// P(ρ, i, j) = d_ρ/(4n) · |Σ_{h∈H_a} ρ(ch)_{ij}|².
pub fn exact_fourier_distribution(
    group: DihedralGroup,
    a: usize,
    c: DihedralElement,
) -> Result<OutcomeDistribution<FourierIndex>> {
    let norm = 2.0 * group.order() as f64;
    let mut outcomes = Vec::with_capacity(group.order());
    let mut probabilities = Vec::with_capacity(group.order());
    for label in irrep_list(group) {
        let sum = coset_sum(label, a, c, group)?;
        let d = label.dim();
        for row in 0..d {
            for col in 0..d {
                outcomes.push(FourierIndex { label, row, col });
                probabilities.push(d as f64 / norm * sum[(row, col)].norm_sqr());
            }
        }
    }
    Ok(OutcomeDistribution::new(outcomes, probabilities))
}

pub fn sample_outcome<R: Rng + ?Sized>(dist: &OutcomeDistribution<FourierIndex>, rng: &mut R) -> FourierIndex {
    dist.sample(rng)
}

/// Largest probability over two-dimensional outcomes.
pub fn max_two_dim_probability(dist: &OutcomeDistribution<FourierIndex>) -> f64 {
    dist.iter()
        .filter(|(idx, _)| idx.label.dim() == 2)
        .map(|(_, p)| p)
        .fold(0.0, f64::max)
}

/// Validates a coset state vector: two amplitudes of modulus 1/√2 forming a
/// left coset of H_a. Returns the two supporting group elements.
pub fn coset_support(state: &StateVector, group: DihedralGroup, a: usize) -> Result<[DihedralElement; 2]> {
    if state.len() != group.order() {
        return Err(Error::DimensionMismatch {
            expected: group.order(),
            found: state.len(),
        });
    }
    let support = state.support(1e-12);
    if support.len() != 2 {
        return Err(Error::NotACosetState(format!("{} nonzero amplitudes", support.len())));
    }
    let half = std::f64::consts::FRAC_1_SQRT_2;
    for &i in &support {
        if (state.amplitude(i).norm() - half).abs() > 1e-10 {
            return Err(Error::NotACosetState(format!("amplitude modulus {} at {i}", state.amplitude(i).norm())));
        }
    }
    let subgroup = group.reflection_subgroup(a)?;
    let first = group.element_at(support[0]);
    let second = group.element_at(support[1]);
    if group.left_coset(first, &subgroup) != [first, second] {
        return Err(Error::NotACosetState(format!("{first} and {second} are not in one coset of H_{a}")));
    }
    Ok([first, second])
}
