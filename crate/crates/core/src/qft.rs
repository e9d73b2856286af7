//! The quantum Fourier transform over D_n as an explicit 2n×2n unitary.
//!
//! Column g, row (ρ, i, j) holds √(d_ρ/2n)·ρ(g)_{ij}. Rows follow
//! [`irrep_list`] order, each block row-major.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::Serialize;

use crate::distribution::OutcomeDistribution;
use crate::error::{Error, Result};
use crate::group::{DihedralElement, DihedralGroup};
use crate::representations::{coset_sum, evaluate, irrep_list, IrrepLabel, RepMatrix};

/// Fourier-basis label |ρ, i, j⟩ with zero-based `row` and `col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FourierIndex {
    pub label: IrrepLabel,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for FourierIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{},{}>", self.label, self.row + 1, self.col + 1)
    }
}

/// Linearized Fourier basis for D_n (2n entries).
pub fn fourier_indices(group: DihedralGroup) -> Vec<FourierIndex> {
    irrep_list(group)
        .into_iter()
        .flat_map(|label| {
            let d = label.dim();
            (0..d * d).map(move |p| FourierIndex {
                label,
                row: p / d,
                col: p % d,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Basis {
    Group,
    Fourier,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Group => "group",
            Basis::Fourier => "fourier",
        }
    }
}

/// Amplitudes over {|g⟩} or {|ρ,i,j⟩}.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Array1<Complex64>,
    basis: Basis,
}

pub const NORM_TOLERANCE: f64 = 1e-10;

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>, basis: Basis) -> Self {
        StateVector {
            amplitudes: Array1::from(amplitudes),
            basis,
        }
    }

    pub fn basis_state(group: DihedralGroup, g: DihedralElement) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); group.order()];
        amps[group.index_of(g)] = Complex64::new(1.0, 0.0);
        Self::new(amps, Basis::Group)
    }

    /// Equal superposition of the given distinct group elements.
    pub fn uniform_over(group: DihedralGroup, elements: &[DihedralElement]) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); group.order()];
        let w = 1.0 / (elements.len() as f64).sqrt();
        for &g in elements {
            amps[group.index_of(g)] += Complex64::new(w, 0.0);
        }
        Self::new(amps, Basis::Group)
    }

    pub fn amplitudes(&self) -> &Array1<Complex64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() < NORM_TOLERANCE
    }

    /// ⟨self|other⟩
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.len(), other.len());
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Born-rule probabilities |amplitude|².
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Indices of amplitudes with modulus above `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Dense QFT matrix for one group.
#[derive(Debug, Clone)]
pub struct QftMatrix {
    group: DihedralGroup,
    indices: Vec<FourierIndex>,
    matrix: Array2<Complex64>,
}

impl QftMatrix {
    pub fn group(&self) -> DihedralGroup {
        self.group
    }

    pub fn indices(&self) -> &[FourierIndex] {
        &self.indices
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    pub fn position(&self, index: &FourierIndex) -> Option<usize> {
        self.indices.iter().position(|i| i == index)
    }

    /// ‖F F† − I‖_max
    pub fn unitarity_defect(&self) -> f64 {
        let adjoint = self.matrix.t().mapv(|z| z.conj());
        let product = self.matrix.dot(&adjoint);
        product
            .indexed_iter()
            .map(|((i, j), z)| {
                let expected = if i == j { 1.0 } else { 0.0 };
                (z - expected).norm()
            })
            .fold(0.0, f64::max)
    }
}

pub fn build_qft(group: DihedralGroup) -> QftMatrix {
    let indices = fourier_indices(group);
    let order = group.order();
    let mut matrix = Array2::zeros((order, order));
    for g in group.elements() {
        let col = group.index_of(g);
        let mut row = 0;
        for label in irrep_list(group) {
            let value = evaluate(label, g, group);
            let scale = (label.dim() as f64 / order as f64).sqrt();
            for i in 0..label.dim() {
                for j in 0..label.dim() {
                    matrix[(row, col)] = value[(i, j)] * scale;
                    row += 1;
                }
            }
        }
    }
    QftMatrix {
        group,
        indices,
        matrix,
    }
}

/// Process-wide cache; each QFT matrix is built at most once per n.
pub fn cached_qft(group: DihedralGroup) -> Arc<QftMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QftMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("qft cache poisoned").get(&group.n()) {
        return Arc::clone(f);
    }
    // build outside the lock; a racing duplicate build is harmless
    let built = Arc::new(build_qft(group));
    let mut guard = cache.lock().expect("qft cache poisoned");
    Arc::clone(guard.entry(group.n()).or_insert(built))
}

pub fn apply_qft(qft: &QftMatrix, state: &StateVector) -> Result<StateVector> {
    if state.basis() != Basis::Group {
        return Err(Error::BasisMismatch {
            expected: Basis::Group.name(),
            found: state.basis().name(),
        });
    }
    if state.len() != qft.group.order() {
        return Err(Error::DimensionMismatch {
            expected: qft.group.order(),
            found: state.len(),
        });
    }
    Ok(StateVector {
        amplitudes: qft.matrix.dot(&state.amplitudes),
        basis: Basis::Fourier,
    })
}

/// The change of basis B = (1/√2)((1, 1), (i, −i)) taking ρ_k to its real
/// form: ρ_k(x) becomes a planar rotation and ρ_k(y) becomes diag(1, −1).
pub fn real_basis_change() -> RepMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    RepMatrix::two_by_two(
        Complex64::new(s, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(0.0, s),
        Complex64::new(0.0, -s),
    )
}

/// Strong Fourier sampling distribution of the coset state for c·H_a with
/// every two-dimensional block written in the real basis B ρ_k B†.
pub fn real_basis_distribution(
    group: DihedralGroup,
    a: usize,
    c: DihedralElement,
) -> Result<OutcomeDistribution<FourierIndex>> {
    let b = real_basis_change();
    let order = group.order() as f64;
    let mut outcomes = Vec::with_capacity(group.order());
    let mut probabilities = Vec::with_capacity(group.order());
    for label in irrep_list(group) {
        let mut sum = coset_sum(label, a, c, group)?;
        if label.dim() == 2 {
            sum = b * sum * b.adjoint();
        }
        let d = label.dim();
        for row in 0..d {
            for col in 0..d {
                outcomes.push(FourierIndex { label, row, col });
                probabilities.push(d as f64 / (2.0 * order) * sum[(row, col)].norm_sqr());
            }
        }
    }
    Ok(OutcomeDistribution::new(outcomes, probabilities))
}
