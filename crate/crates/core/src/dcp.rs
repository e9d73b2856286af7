//! Dihedral coset problem samples ψ_a^α = (|x^α⟩ + |y x^{a−α}⟩)/√2.
//!
//! The two-register encoding (|0⟩|α⟩ + |1⟩|a−α⟩)/√2 uses the index b·n + j,
//! which coincides with the group-basis index β·n + α, so both encodings
//! share the same amplitude vector.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{DihedralElement, DihedralGroup};
use crate::hsp::{coset_support, CosetState};
use crate::qft::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    GroupBasis,
    TwoRegister,
}

/// A DCP sample. The hidden `(a, α)` pair is kept for tests and reports;
/// algorithms must work from [`DcpSample::state`] alone.
#[derive(Debug, Clone, PartialEq)]
pub struct DcpSample {
    group: DihedralGroup,
    a: usize,
    alpha: usize,
    state: StateVector,
    encoding: Encoding,
}

impl DcpSample {
    pub fn new(group: DihedralGroup, a: usize, alpha: usize) -> Result<Self> {
        let n = group.n();
        if a >= n {
            return Err(Error::InvalidSlope { a, n });
        }
        if alpha >= n {
            return Err(Error::InvalidConfig(format!("alpha {alpha} out of range for n = {n}")));
        }
        let pair = [group.rotation(alpha as i64), group.reflection(a as i64 - alpha as i64)];
        Ok(DcpSample {
            group,
            a,
            alpha,
            state: StateVector::uniform_over(group, &pair),
            encoding: Encoding::GroupBasis,
        })
    }

    pub fn group(&self) -> DihedralGroup {
        self.group
    }

    /// Hidden slope (test metadata).
    pub fn hidden_slope(&self) -> usize {
        self.a
    }

    /// Hidden α (test metadata).
    pub fn hidden_alpha(&self) -> usize {
        self.alpha
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn encoding(&self) -> Encoding {
        self.encoding
    }

    /// Reinterprets the amplitudes under the two-register encoding.
    pub fn to_two_register(&self) -> DcpSample {
        DcpSample {
            encoding: Encoding::TwoRegister,
            ..self.clone()
        }
    }

    /// Two-register amplitudes indexed `[b][j]`.
    pub fn two_register_amplitudes(&self) -> Vec<[Complex64; 2]> {
        let n = self.group.n();
        (0..n)
            .map(|j| [self.state.amplitude(two_register_index(0, j, n)), self.state.amplitude(two_register_index(1, j, n))])
            .collect()
    }
}

/// Index of |b⟩|j⟩ in the two-register encoding.
pub fn two_register_index(b: usize, j: usize, n: usize) -> usize {
    b * n + j
}

/// Maps a group-basis index to its two-register index. This is the identity
/// map under the β·n + α convention.
pub fn group_to_two_register(index: usize, group: DihedralGroup) -> usize {
    let g: DihedralElement = group.element_at(index);
    two_register_index(g.beta() as usize, g.alpha(), group.n())
}

pub fn make_dcp_sample(a: usize, alpha: usize, group: DihedralGroup) -> Result<DcpSample> {
    DcpSample::new(group, a, alpha)
}

/// Relabels a coset state of H_a as a DCP sample. A representative y x^α
/// gives the sample with parameter a − α; the state vector is unchanged.
pub fn hsp_to_dcp(cs: &CosetState, a: usize, group: DihedralGroup) -> Result<DcpSample> {
    if cs.subgroup().slope() != a {
        return Err(Error::NotACosetState(format!(
            "coset of H_{} passed for slope {a}",
            cs.subgroup().slope()
        )));
    }
    let [rotation, reflection] = coset_support(cs.state(), group, a)?;
    debug_assert!(!rotation.is_reflection() && reflection.is_reflection());
    let c = cs.representative();
    let alpha = if c.is_reflection() {
        (a + group.n() - c.alpha()) % group.n()
    } else {
        c.alpha()
    };
    debug_assert_eq!(alpha, rotation.alpha());
    let sample = DcpSample::new(group, a, alpha)?;
    debug_assert!(sample.state().inner(cs.state()).re > 1.0 - 1e-12);
    Ok(sample)
}

/// ⟨ψ_a^α | ψ_b^β⟩ = (δ_{α,β} + δ_{a−α, b−β}) / 2.
pub fn inner_product(p: &DcpSample, q: &DcpSample) -> f64 {
    assert_eq!(p.group, q.group, "samples from different groups");
    let n = p.group.n();
    let tail = |s: &DcpSample| (s.a + n - s.alpha) % n;
    let value = (u8::from(p.alpha == q.alpha) + u8::from(tail(p) == tail(q))) as f64 / 2.0;
    debug_assert!((p.state.inner(&q.state) - Complex64::new(value, 0.0)).norm() < 1e-12);
    value
}

/// Direct ⟨p|q⟩ from the amplitude vectors.
pub fn dot_product(p: &DcpSample, q: &DcpSample) -> Complex64 {
    p.state.inner(&q.state)
}

impl From<DcpSample> for StateVector {
    fn from(s: DcpSample) -> StateVector {
        s.state
    }
}
