//! Copying constructions for DCP samples and numerical no-cloning witnesses.
//!
//! Multi-register states are held sparsely over a mixed-radix register
//! layout. A DCP sample occupies two registers: a bit b (dim 2) and a
//! rotation exponent j (dim n), so |b⟩|j⟩ sits at group index b·n + j.

use std::collections::BTreeMap;
use std::fmt;

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dcp::{inner_product, DcpSample};
use crate::error::{Error, Result};
use crate::group::{DihedralElement, DihedralGroup};
use crate::qft::StateVector;
use crate::rng::{stream_rng, REFUTER_OFFSET};

const PRUNE: f64 = 1e-15;

type Digits = Vec<usize>;

/// Sparse amplitudes over a tensor product of registers.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseState {
    dims: Vec<usize>,
    amps: BTreeMap<Digits, Complex64>,
}

impl SparseState {
    pub fn basis(dims: &[usize], digits: &[usize]) -> Self {
        assert_eq!(dims.len(), digits.len());
        assert!(digits.iter().zip(dims).all(|(d, m)| d < m));
        let mut amps = BTreeMap::new();
        amps.insert(digits.to_vec(), Complex64::new(1.0, 0.0));
        SparseState { dims: dims.to_vec(), amps }
    }

    pub fn from_terms(dims: &[usize], terms: impl IntoIterator<Item = (Digits, Complex64)>) -> Self {
        let mut state = SparseState {
            dims: dims.to_vec(),
            amps: BTreeMap::new(),
        };
        for (digits, z) in terms {
            assert_eq!(digits.len(), dims.len());
            *state.amps.entry(digits).or_default() += z;
        }
        state.prune();
        state
    }

    /// Loads a DCP sample (or any group-basis vector) into registers (b, j).
    pub fn from_group_vector(state: &StateVector, n: usize) -> Self {
        assert_eq!(state.len(), 2 * n);
        let terms = (0..2 * n)
            .filter(|&i| state.amplitude(i).norm() > PRUNE)
            .map(|i| (vec![i / n, i % n], state.amplitude(i)));
        Self::from_terms(&[2, n], terms)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Digits, &Complex64)> {
        self.amps.iter()
    }

    pub fn amplitude(&self, digits: &[usize]) -> Complex64 {
        self.amps.get(digits).copied().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        self.amps.values().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn prune(&mut self) {
        self.amps.retain(|_, z| z.norm() > PRUNE);
    }

    pub fn tensor(&self, other: &SparseState) -> SparseState {
        let dims: Vec<usize> = self.dims.iter().chain(&other.dims).copied().collect();
        let terms = self.amps.iter().flat_map(|(d1, z1)| {
            other.amps.iter().map(move |(d2, z2)| {
                let digits: Digits = d1.iter().chain(d2).copied().collect();
                (digits, z1 * z2)
            })
        });
        Self::from_terms(&dims, terms)
    }

    /// ⟨self|other⟩
    pub fn inner(&self, other: &SparseState) -> Complex64 {
        assert_eq!(self.dims, other.dims);
        self.amps
            .iter()
            .filter_map(|(d, z)| other.amps.get(d).map(|w| z.conj() * w))
            .sum()
    }

    /// Reorders registers: register `order[p]` of `self` moves to position p.
    pub fn permute_registers(&self, order: &[usize]) -> SparseState {
        assert_eq!(order.len(), self.dims.len());
        let dims: Vec<usize> = order.iter().map(|&r| self.dims[r]).collect();
        let terms = self
            .amps
            .iter()
            .map(|(d, z)| (order.iter().map(|&r| d[r]).collect(), *z));
        Self::from_terms(&dims, terms)
    }

    /// Applies `gate` to the registers listed in `regs`.
    pub fn apply(&self, gate: &Gate, regs: &[usize]) -> SparseState {
        let local_dims: Vec<usize> = regs.iter().map(|&r| self.dims[r]).collect();
        assert_eq!(gate.dims(), local_dims, "gate {gate} does not fit registers {regs:?}");
        let mut out: BTreeMap<Digits, Complex64> = BTreeMap::new();
        for (digits, z) in &self.amps {
            let local: Digits = regs.iter().map(|&r| digits[r]).collect();
            for (image, w) in gate.apply_basis(&local) {
                let mut target = digits.clone();
                for (&r, v) in regs.iter().zip(image) {
                    target[r] = v;
                }
                *out.entry(target).or_default() += z * w;
            }
        }
        let mut state = SparseState {
            dims: self.dims.clone(),
            amps: out,
        };
        state.prune();
        state
    }

    /// Born probabilities of the listed registers, other registers traced out.
    pub fn marginal(&self, regs: &[usize]) -> BTreeMap<Digits, f64> {
        let mut m = BTreeMap::new();
        for (d, z) in &self.amps {
            let key: Digits = regs.iter().map(|&r| d[r]).collect();
            *m.entry(key).or_insert(0.0) += z.norm_sqr();
        }
        m
    }

    /// ‖(|t⟩⟨t| ⊗ I) self‖², where `target` lives on registers `regs`.
    pub fn projection_norm(&self, target: &SparseState, regs: &[usize]) -> f64 {
        let rest: Vec<usize> = (0..self.dims.len()).filter(|r| !regs.contains(r)).collect();
        let mut overlaps: BTreeMap<Digits, Complex64> = BTreeMap::new();
        for (d, z) in &self.amps {
            let local: Digits = regs.iter().map(|&r| d[r]).collect();
            let t = target.amplitude(&local);
            if t.norm() > 0.0 {
                let key: Digits = rest.iter().map(|&r| d[r]).collect();
                *overlaps.entry(key).or_default() += t.conj() * z;
            }
        }
        overlaps.values().fold(0.0, |s, z| s + z.norm_sqr())
    }

    /// Samples the listed registers by the Born rule.
    pub fn measure<R: Rng + ?Sized>(&self, regs: &[usize], rng: &mut R) -> Digits {
        let marginal = self.marginal(regs);
        let total: f64 = marginal.values().sum();
        let mut u = rng.random::<f64>() * total;
        let mut last = None;
        for (k, p) in marginal {
            if u < p {
                return k;
            }
            u -= p;
            last = Some(k);
        }
        last.expect("state has no amplitudes")
    }
}

/// Elementary unitaries used by the cloning constructions.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// Hadamard on a bit register.
    Hadamard,
    /// |i⟩|j⟩ ↦ |i⟩|j ± i mod dim⟩; on a blank target this copies |i⟩.
    Copy { dim: usize, subtract: bool },
    /// V on (a, b, j): fixes b = 0, maps j ↦ a − j mod n when b = 1.
    ControlledReflect { n: usize },
    /// V with the slope hard-wired, on (b, j).
    FixedReflect { a: usize, n: usize },
    /// Arbitrary matrix over registers with the given dims (row-major digits).
    Dense { dims: Vec<usize>, matrix: Array2<Complex64> },
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Hadamard => write!(f, "H"),
            Gate::Copy { dim, subtract } => write!(f, "copy{}[{dim}]", if *subtract { "^-1" } else { "" }),
            Gate::ControlledReflect { n } => write!(f, "V[{n}]"),
            Gate::FixedReflect { a, n } => write!(f, "V_a={a}[{n}]"),
            Gate::Dense { dims, .. } => write!(f, "dense{dims:?}"),
        }
    }
}

fn flat_index(dims: &[usize], digits: &[usize]) -> usize {
    dims.iter().zip(digits).fold(0, |acc, (d, x)| acc * d + x)
}

fn unflatten(dims: &[usize], mut index: usize) -> Digits {
    let mut digits = vec![0; dims.len()];
    for (slot, d) in digits.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    digits
}

impl Gate {
    pub fn dims(&self) -> Vec<usize> {
        match self {
            Gate::Hadamard => vec![2],
            Gate::Copy { dim, .. } => vec![*dim, *dim],
            Gate::ControlledReflect { n } => vec![*n, 2, *n],
            Gate::FixedReflect { n, .. } => vec![2, *n],
            Gate::Dense { dims, .. } => dims.clone(),
        }
    }

    fn apply_basis(&self, d: &[usize]) -> Vec<(Digits, Complex64)> {
        let one = Complex64::new(1.0, 0.0);
        match self {
            Gate::Hadamard => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                let sign = if d[0] == 1 { -s } else { s };
                vec![(vec![0], Complex64::new(s, 0.0)), (vec![1], Complex64::new(sign, 0.0))]
            }
            Gate::Copy { dim, subtract } => {
                let j = if *subtract { (d[1] + dim - d[0]) % dim } else { (d[1] + d[0]) % dim };
                vec![(vec![d[0], j], one)]
            }
            Gate::ControlledReflect { n } => {
                let j = if d[1] == 1 { (d[0] + n - d[2]) % n } else { d[2] };
                vec![(vec![d[0], d[1], j], one)]
            }
            Gate::FixedReflect { a, n } => {
                let j = if d[0] == 1 { (a + n - d[1]) % n } else { d[1] };
                vec![(vec![d[0], j], one)]
            }
            Gate::Dense { dims, matrix } => {
                let col = flat_index(dims, d);
                matrix
                    .column(col)
                    .iter()
                    .enumerate()
                    .filter(|(_, z)| z.norm() > 0.0)
                    .map(|(row, z)| (unflatten(dims, row), *z))
                    .collect()
            }
        }
    }

    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Copy { dim, subtract } => Gate::Copy {
                dim: *dim,
                subtract: !subtract,
            },
            Gate::Dense { dims, matrix } => Gate::Dense {
                dims: dims.clone(),
                matrix: matrix.t().mapv(|z| z.conj()),
            },
            involution => involution.clone(),
        }
    }
}

/// A sequence of gates, each on a list of register positions.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    steps: Vec<(Gate, Vec<usize>)>,
}

impl Circuit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn then(mut self, gate: Gate, regs: &[usize]) -> Self {
        self.steps.push((gate, regs.to_vec()));
        self
    }

    /// Appends `other` with its register positions shifted by `offset`.
    pub fn then_circuit(mut self, other: &Circuit, offset: usize) -> Self {
        for (g, regs) in &other.steps {
            self.steps.push((g.clone(), regs.iter().map(|r| r + offset).collect()));
        }
        self
    }

    pub fn inverse(&self) -> Circuit {
        Circuit {
            steps: self.steps.iter().rev().map(|(g, r)| (g.inverse(), r.clone())).collect(),
        }
    }

    pub fn apply(&self, state: &SparseState) -> SparseState {
        self.steps.iter().fold(state.clone(), |s, (g, regs)| s.apply(g, regs))
    }

    /// Dense matrix over the layout `dims`, built column by column.
    pub fn to_dense(&self, dims: &[usize]) -> Array2<Complex64> {
        let total: usize = dims.iter().product();
        let mut m = Array2::zeros((total, total));
        for col in 0..total {
            let out = self.apply(&SparseState::basis(dims, &unflatten(dims, col)));
            for (digits, z) in out.terms() {
                m[(flat_index(dims, digits), col)] = *z;
            }
        }
        m
    }
}

/// ‖U U† − I‖_max
pub fn unitarity_defect(u: &Array2<Complex64>) -> f64 {
    let p = u.dot(&u.t().mapv(|z| z.conj()));
    p.indexed_iter()
        .map(|((i, j), z)| (z - if i == j { 1.0 } else { 0.0 }).norm())
        .fold(0.0, f64::max)
}

/// The basis copier |i⟩|0⟩ ↦ |i⟩|i⟩ on two registers of dimension `dim`.
pub fn copy_basis_state(i: usize, dim: usize) -> SparseState {
    SparseState::basis(&[dim, dim], &[i, 0]).apply(&Gate::Copy { dim, subtract: false }, &[0, 1])
}

/// V on (a, b, j).
pub fn build_v(group: DihedralGroup) -> Circuit {
    Circuit::new().then(Gate::ControlledReflect { n: group.n() }, &[0, 1, 2])
}

/// T = (I ⊗ U₀)·V on (a, b, j) with U₀ the Hadamard on b, so that
/// T|a⟩|ψ_a^α⟩ = |a⟩|0⟩|α⟩.
pub fn build_t(group: DihedralGroup) -> Circuit {
    build_v(group).then(Gate::Hadamard, &[1])
}

/// T with the slope wired in, acting on (b, j) only.
pub fn build_fixed_t(a: usize, group: DihedralGroup) -> Circuit {
    Circuit::new()
        .then(Gate::FixedReflect { a, n: group.n() }, &[0, 1])
        .then(Gate::Hadamard, &[0])
}

/// Layout (a, b, j, a', b', j') used by the known-slope cloner before the
/// final permutation.
pub fn clone_layout(n: usize) -> [usize; 6] {
    [n, 2, n, n, 2, n]
}

/// Apply T, copy |a⟩ and |0⟩|α⟩ into blank registers, undo T on both
/// triples, then reorder to |a⟩|ψ⟩|ψ⟩|a⟩.
pub fn clone_circuit(group: DihedralGroup) -> Circuit {
    let n = group.n();
    let t = build_t(group);
    Circuit::new()
        .then_circuit(&t, 0)
        .then(Gate::Copy { dim: n, subtract: false }, &[0, 3])
        .then(Gate::Copy { dim: 2, subtract: false }, &[1, 4])
        .then(Gate::Copy { dim: n, subtract: false }, &[2, 5])
        .then_circuit(&t.inverse(), 0)
        .then_circuit(&t.inverse(), 3)
}

/// Register order taking (a, b, j, a', b', j') to (a, b, j, b', j', a').
pub const CLONE_OUTPUT_ORDER: [usize; 6] = [0, 1, 2, 4, 5, 3];

/// Runs the cloning sequence with `register_slope` loaded into the a-register,
/// without checking that the sample belongs to that slope.
pub fn clone_with_register(register_slope: usize, sample: &StateVector, group: DihedralGroup) -> Result<SparseState> {
    let n = group.n();
    if register_slope >= n {
        return Err(Error::InvalidSlope { a: register_slope, n });
    }
    if sample.len() != group.order() {
        return Err(Error::DimensionMismatch {
            expected: group.order(),
            found: sample.len(),
        });
    }
    let input = SparseState::basis(&[n], &[register_slope])
        .tensor(&SparseState::from_group_vector(sample, n))
        .tensor(&SparseState::basis(&[n, 2, n], &[0, 0, 0]));
    Ok(clone_circuit(group).apply(&input).permute_registers(&CLONE_OUTPUT_ORDER))
}

/// Copies a DCP sample when its slope is known, producing |a⟩|ψ⟩|ψ⟩|a⟩.
pub fn clone_known_a(a: usize, sample: &DcpSample) -> Result<SparseState> {
    let group = sample.group();
    let n = group.n();
    let state = sample.state();
    let support = state.support(1e-12);
    let fits = support.len() == 2
        && support[0] < n
        && support[1] == n + (a + n - support[0]) % n
        && support
            .iter()
            .all(|&i| (state.amplitude(i) - Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)).norm() < 1e-10);
    if !fits {
        return Err(Error::NotADcpSample {
            a,
            reason: format!("support {support:?} does not match (α, a−α)"),
        });
    }
    clone_with_register(a, state, group)
}

/// |a⟩ ⊗ ψ ⊗ ψ ⊗ |a⟩ over the clone output layout.
pub fn clone_target(a: usize, sample: &StateVector, group: DihedralGroup) -> SparseState {
    let n = group.n();
    let psi = SparseState::from_group_vector(sample, n);
    SparseState::basis(&[n], &[a])
        .tensor(&psi)
        .tensor(&psi)
        .tensor(&SparseState::basis(&[n], &[a]))
}

/// |⟨target|output⟩|²
pub fn fidelity(target: &SparseState, output: &SparseState) -> f64 {
    target.inner(output).norm_sqr()
}

/// Measures both sample copies of a clone output in the group basis.
pub fn measure_clone_pair<R: Rng + ?Sized>(
    output: &SparseState,
    group: DihedralGroup,
    rng: &mut R,
) -> (DihedralElement, DihedralElement) {
    let d = output.measure(&[1, 2, 3, 4], rng);
    (group.element(d[0], d[1] as i64), group.element(d[2], d[3] as i64))
}

/// Finds a pair with opposite reflection bits and returns the sum of its
/// rotation exponents mod n.
pub fn recover_a_from_clone_pairs(
    pairs: &[(DihedralElement, DihedralElement)],
    group: DihedralGroup,
) -> Result<usize> {
    pairs
        .iter()
        .find(|(g, h)| g.beta() != h.beta())
        .map(|(g, h)| (g.alpha() + h.alpha()) % group.n())
        .ok_or(Error::InsufficientPairs(pairs.len()))
}

/// Both sides of the inner-product identity a copying unitary would force.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub n: usize,
    pub sample_a: (usize, usize),
    pub sample_b: (usize, usize),
    pub list_len: usize,
    /// |Π⟨ψ^i_a|ψ^i_b⟩ · ⟨ψ_a|ψ_b⟩|
    pub left: f64,
    /// |Π⟨ψ^i_a|ψ^i_b⟩| · |⟨ψ_a|ψ_b⟩|² · max|⟨M_a|M_b⟩|
    pub right_bound: f64,
    pub ancilla_overlap_bound: f64,
    /// True when left > right_bound, so no unitary satisfies both equations.
    pub contradiction: bool,
}

/// Evaluates the witness for the additional samples `p` (slope a), `q`
/// (slope b) and list pairs `list`.
pub fn witness_for(p: &DcpSample, q: &DcpSample, list: &[(DcpSample, DcpSample)]) -> WitnessReport {
    let list_product: f64 = list.iter().map(|(x, y)| inner_product(x, y)).product();
    let overlap = inner_product(p, q);
    let ancilla_overlap_bound = 1.0;
    let left = (list_product * overlap).abs();
    let right_bound = list_product.abs() * overlap * overlap * ancilla_overlap_bound;
    WitnessReport {
        n: p.group().n(),
        sample_a: (p.hidden_slope(), p.hidden_alpha()),
        sample_b: (q.hidden_slope(), q.hidden_alpha()),
        list_len: list.len(),
        left,
        right_bound,
        ancilla_overlap_bound,
        contradiction: left > right_bound,
    }
}

/// The standard instance a = 1, α = 0, b = 2, β = 1 (so a − α = b − β and
/// a ≠ b), with `list_len` list pairs of the same overlap.
pub fn no_cloning_witness(group: DihedralGroup, list_len: usize) -> Result<WitnessReport> {
    if group.n() < 3 {
        return Err(Error::InvalidConfig(format!("witness needs n >= 3, got {}", group.n())));
    }
    let p = DcpSample::new(group, 1, 0)?;
    let q = DcpSample::new(group, 2, 1)?;
    let list = (0..list_len).map(|_| (p.clone(), q.clone())).collect::<Vec<_>>();
    Ok(witness_for(&p, &q, &list))
}

/// A would-be universal cloner on the layout (b, j, b', j'[, ancilla]).
pub trait CloningCandidate: Sync {
    fn name(&self) -> String;
    fn n(&self) -> usize;
    fn ancilla_dim(&self) -> usize {
        1
    }
    fn apply(&self, input: &SparseState) -> SparseState;

    fn layout(&self) -> Vec<usize> {
        let n = self.n();
        let mut dims = vec![2, n, 2, n];
        if self.ancilla_dim() > 1 {
            dims.push(self.ancilla_dim());
        }
        dims
    }
}

/// Candidate given as a gate sequence.
#[derive(Debug, Clone)]
pub struct CircuitCloner {
    pub name: String,
    pub n: usize,
    pub ancilla_dim: usize,
    pub circuit: Circuit,
}

impl CloningCandidate for CircuitCloner {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn n(&self) -> usize {
        self.n
    }
    fn ancilla_dim(&self) -> usize {
        self.ancilla_dim
    }
    fn apply(&self, input: &SparseState) -> SparseState {
        self.circuit.apply(input)
    }
}

/// Candidate given as an explicit unitary matrix over the full layout.
#[derive(Debug, Clone)]
pub struct MatrixCloner {
    n: usize,
    ancilla_dim: usize,
    gate: Gate,
}

impl MatrixCloner {
    pub fn new(n: usize, ancilla_dim: usize, matrix: Array2<Complex64>) -> Result<Self> {
        let mut dims = vec![2, n, 2, n];
        if ancilla_dim > 1 {
            dims.push(ancilla_dim);
        }
        let expected: usize = dims.iter().product();
        for found in [matrix.nrows(), matrix.ncols()] {
            if found != expected {
                return Err(Error::DimensionMismatch { expected, found });
            }
        }
        Ok(MatrixCloner {
            n,
            ancilla_dim,
            gate: Gate::Dense { dims, matrix },
        })
    }
}

impl CloningCandidate for MatrixCloner {
    fn name(&self) -> String {
        "dense matrix".into()
    }
    fn n(&self) -> usize {
        self.n
    }
    fn ancilla_dim(&self) -> usize {
        self.ancilla_dim
    }
    fn apply(&self, input: &SparseState) -> SparseState {
        let regs: Vec<usize> = (0..input.dims().len()).collect();
        input.apply(&self.gate, &regs)
    }
}

pub fn identity_cloner(n: usize) -> CircuitCloner {
    CircuitCloner {
        name: "identity".into(),
        n,
        ancilla_dim: 1,
        circuit: Circuit::new(),
    }
}

/// The basis copier applied to (b, j) → (b', j').
pub fn basis_copy_cloner(n: usize) -> CircuitCloner {
    CircuitCloner {
        name: "basis copy".into(),
        n,
        ancilla_dim: 1,
        circuit: Circuit::new()
            .then(Gate::Copy { dim: 2, subtract: false }, &[0, 2])
            .then(Gate::Copy { dim: n, subtract: false }, &[1, 3]),
    }
}

/// The known-slope cloner with slope `a` hard-wired.
pub fn fixed_slope_cloner(a: usize, group: DihedralGroup) -> CircuitCloner {
    let n = group.n();
    let t = build_fixed_t(a, group);
    CircuitCloner {
        name: format!("known-slope cloner wired for a={a}"),
        n,
        ancilla_dim: 1,
        circuit: Circuit::new()
            .then_circuit(&t, 0)
            .then(Gate::Copy { dim: 2, subtract: false }, &[0, 2])
            .then(Gate::Copy { dim: n, subtract: false }, &[1, 3])
            .then_circuit(&t.inverse(), 0)
            .then_circuit(&t.inverse(), 2),
    }
}

/// Squared norm of the projection of candidate(ψ ⊗ blank ⊗ M) onto ψ ⊗ ψ.
pub fn cloning_fidelity(candidate: &dyn CloningCandidate, sample: &DcpSample) -> f64 {
    let n = candidate.n();
    let layout = candidate.layout();
    let psi = SparseState::from_group_vector(sample.state(), n);
    let blank = vec![0; layout.len() - 2];
    let input = psi.tensor(&SparseState::basis(&layout[2..], &blank));
    let output = candidate.apply(&input);
    output.projection_norm(&psi.tensor(&psi), &[0, 1, 2, 3])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefuterReport {
    pub candidate: String,
    pub n: usize,
    pub trials: usize,
    pub min_fidelity: f64,
    pub worst_a: usize,
    pub worst_alpha: usize,
}

/// Tries random samples (a, α) against the candidate and reports the worst
/// cloning fidelity found. Trial t uses stream t of the refuter seed.
pub fn unitary_cloner_refuter(
    candidate: &dyn CloningCandidate,
    group: DihedralGroup,
    trials: usize,
    seed: u64,
) -> Result<RefuterReport> {
    let n = group.n();
    if candidate.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: candidate.n(),
        });
    }
    if trials == 0 {
        return Err(Error::InvalidConfig("refuter needs at least one trial".into()));
    }
    let results: Result<Vec<(f64, usize, usize, usize)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream_rng(seed, REFUTER_OFFSET, t as u64);
            let a = rng.random_range(0..n);
            let alpha = rng.random_range(0..n);
            let sample = DcpSample::new(group, a, alpha)?;
            Ok((cloning_fidelity(candidate, &sample), t, a, alpha))
        })
        .collect();
    let (min_fidelity, _, worst_a, worst_alpha) = results?
        .into_iter()
        .min_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)))
        .expect("at least one trial");
    Ok(RefuterReport {
        candidate: candidate.name(),
        n,
        trials,
        min_fidelity,
        worst_a,
        worst_alpha,
    })
}
