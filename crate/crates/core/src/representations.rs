//! Irreducible unitary representations of D_n in the complex basis.
//!
//! For even n there are four characters φ_{u,v}; for odd n only the two with
//! u = 0. The two-dimensional irreps ρ_k, 0 < k < n/2, send x to
//! diag(ω^k, ω^{-k}) and y to the swap matrix, with ω = e^{2πi/n}.

use std::fmt;
use std::ops::{Add, Index, Mul};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{DihedralElement, DihedralGroup};

/// ω_n^m, with m reduced mod n first. Quarter turns are returned exactly.
pub fn root_of_unity(m: i64, n: usize) -> Complex64 {
    let n_i = n as i64;
    let r = m.rem_euclid(n_i);
    if (4 * r) % n_i == 0 {
        return match 4 * r / n_i {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, std::f64::consts::TAU * (r as f64 / n as f64))
}

/// Label of an irreducible representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepLabel {
    /// φ_{u,v}: x ↦ (-1)^u, y ↦ (-1)^v.
    OneDim { u: u8, v: u8 },
    /// ρ_k with 0 < k < n/2.
    TwoDim { k: usize },
}

impl IrrepLabel {
    pub fn dim(self) -> usize {
        match self {
            IrrepLabel::OneDim { .. } => 1,
            IrrepLabel::TwoDim { .. } => 2,
        }
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        match self {
            IrrepLabel::OneDim { u, v } => u < 2 && v < 2 && (u == 0 || n.is_multiple_of(2)),
            IrrepLabel::TwoDim { k } => k > 0 && 2 * k < n,
        }
    }

    pub fn validate(self, n: usize) -> Result<Self> {
        if self.is_valid_for(n) {
            Ok(self)
        } else {
            Err(Error::InvalidLabel {
                label: self.to_string(),
                n,
            })
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::OneDim { u, v } => write!(f, "phi_{u}{v}"),
            IrrepLabel::TwoDim { k } => write!(f, "rho_{k}"),
        }
    }
}

/// A 1×1 or 2×2 complex matrix. One-dimensional values are stored as 1×1
/// matrices so the QFT builder can treat every irrep uniformly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepMatrix {
    dim: usize,
    data: [Complex64; 4],
}

impl RepMatrix {
    pub fn scalar(value: Complex64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        RepMatrix {
            dim: 1,
            data: [value, z, z, z],
        }
    }

    /// Row-major 2×2 matrix.
    pub fn two_by_two(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        RepMatrix {
            dim: 2,
            data: [m00, m01, m10, m11],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let one = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        match dim {
            1 => Self::scalar(one),
            2 => Self::two_by_two(one, z, z, one),
            _ => panic!("irreps of D_n have dimension 1 or 2"),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        let z = Complex64::new(0.0, 0.0);
        match dim {
            1 => Self::scalar(z),
            2 => Self::two_by_two(z, z, z, z),
            _ => panic!("irreps of D_n have dimension 1 or 2"),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        assert!(i < self.dim && j < self.dim);
        self.data[i * 2 + j]
    }

    pub fn adjoint(&self) -> Self {
        let d = &self.data;
        match self.dim {
            1 => Self::scalar(d[0].conj()),
            _ => Self::two_by_two(d[0].conj(), d[2].conj(), d[1].conj(), d[3].conj()),
        }
    }

    pub fn transpose(&self) -> Self {
        let d = &self.data;
        match self.dim {
            1 => *self,
            _ => Self::two_by_two(d[0], d[2], d[1], d[3]),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &RepMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.get(i, j) - other.get(i, j)).norm());
            }
        }
        worst
    }

    /// max |(M M†)_{ij} - δ_{ij}|
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.adjoint()).max_abs_diff(&Self::identity(self.dim))
    }
}

impl Index<(usize, usize)> for RepMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.dim && j < self.dim);
        &self.data[i * 2 + j]
    }
}

impl Mul for RepMatrix {
    type Output = RepMatrix;
    fn mul(self, rhs: RepMatrix) -> RepMatrix {
        assert_eq!(self.dim, rhs.dim);
        let (a, b) = (&self.data, &rhs.data);
        match self.dim {
            1 => Self::scalar(a[0] * b[0]),
            _ => Self::two_by_two(
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ),
        }
    }
}

impl Add for RepMatrix {
    type Output = RepMatrix;
    fn add(self, rhs: RepMatrix) -> RepMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut data = self.data;
        for (x, y) in data.iter_mut().zip(rhs.data) {
            *x += y;
        }
        RepMatrix { dim: self.dim, data }
    }
}

/// All irreps of D_n: characters sorted by (u, v), then ρ_k by ascending k.
pub fn irrep_list(group: DihedralGroup) -> Vec<IrrepLabel> {
    let n = group.n();
    let us: &[u8] = if n.is_multiple_of(2) { &[0, 1] } else { &[0] };
    let mut labels: Vec<IrrepLabel> = us
        .iter()
        .flat_map(|&u| [0u8, 1].map(|v| IrrepLabel::OneDim { u, v }))
        .collect();
    labels.extend((1..n).take_while(|k| 2 * k < n).map(|k| IrrepLabel::TwoDim { k }));
    labels
}

/// ρ(y^β x^α) for the given irrep.
pub fn evaluate(label: IrrepLabel, g: DihedralElement, group: DihedralGroup) -> RepMatrix {
    debug_assert!(label.is_valid_for(group.n()));
    let n = group.n();
    let alpha = g.alpha() as i64;
    match label {
        IrrepLabel::OneDim { u, v } => {
            let exponent = u as usize * g.alpha() + v as usize * g.beta() as usize;
            let sign = if exponent.is_multiple_of(2) { 1.0 } else { -1.0 };
            RepMatrix::scalar(Complex64::new(sign, 0.0))
        }
        IrrepLabel::TwoDim { k } => {
            let k = k as i64;
            let z = Complex64::new(0.0, 0.0);
            let up = root_of_unity(alpha * k, n);
            let down = root_of_unity(-alpha * k, n);
            if g.is_reflection() {
                // swap · diag(ω^{αk}, ω^{-αk})
                RepMatrix::two_by_two(z, down, up, z)
            } else {
                RepMatrix::two_by_two(up, z, z, down)
            }
        }
    }
}

/// Σ_{h ∈ H_a} ρ(c·h) = ρ(c) + ρ(c·y x^a), summed from first principles.
pub fn coset_sum(
    label: IrrepLabel,
    a: usize,
    c: DihedralElement,
    group: DihedralGroup,
) -> Result<RepMatrix> {
    label.validate(group.n())?;
    let h = group.reflection_subgroup(a)?;
    Ok(h
        .elements()
        .iter()
        .map(|&el| evaluate(label, group.multiply(c, el), group))
        .fold(RepMatrix::zeros(label.dim()), |acc, m| acc + m))
}

/// Outcome of the Schur orthogonality check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchurReport {
    pub n: usize,
    pub max_deviation: f64,
    /// (ρ, i, j, ρ', i', j') where the deviation peaks.
    pub worst: Option<(IrrepLabel, usize, usize, IrrepLabel, usize, usize)>,
    pub sum_of_squared_dims: usize,
    pub passed: bool,
}

pub const SCHUR_TOLERANCE: f64 = 1e-12;

/// Verifies (d_ρ/|G|) Σ_g ρ(g)_{ij} conj(ρ'(g)_{i'j'}) = δ_{ρρ'} δ_{ii'} δ_{jj'}
/// by exhaustive summation over the group.
pub fn schur_check(group: DihedralGroup) -> SchurReport {
    let labels = irrep_list(group);
    let elements: Vec<DihedralElement> = group.elements().collect();
    let tables: Vec<Vec<RepMatrix>> = labels
        .iter()
        .map(|&l| elements.iter().map(|&g| evaluate(l, g, group)).collect())
        .collect();
    let order = group.order() as f64;

    let mut max_deviation = 0.0;
    let mut worst = None;
    for (p, &lp) in labels.iter().enumerate() {
        for (q, &lq) in labels.iter().enumerate() {
            for i in 0..lp.dim() {
                for j in 0..lp.dim() {
                    for i2 in 0..lq.dim() {
                        for j2 in 0..lq.dim() {
                            let sum: Complex64 = tables[p]
                                .iter()
                                .zip(&tables[q])
                                .map(|(m, m2)| m[(i, j)] * m2[(i2, j2)].conj())
                                .sum();
                            let value = sum * (lp.dim() as f64 / order);
                            let expected = if p == q && i == i2 && j == j2 { 1.0 } else { 0.0 };
                            let dev = (value - expected).norm();
                            if dev > max_deviation || worst.is_none() {
                                max_deviation = dev.max(max_deviation);
                                worst = Some((lp, i, j, lq, i2, j2));
                            }
                        }
                    }
                }
            }
        }
    }
    let sum_of_squared_dims = labels.iter().map(|l| l.dim() * l.dim()).sum();
    SchurReport {
        n: group.n(),
        max_deviation,
        worst,
        sum_of_squared_dims,
        passed: max_deviation < SCHUR_TOLERANCE && sum_of_squared_dims == group.order(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn group(n: usize) -> DihedralGroup {
        DihedralGroup::new(n).unwrap()
    }

    #[test]
    fn irrep_list_examples() {
        use IrrepLabel::*;
        assert_eq!(
            irrep_list(group(3)),
            vec![OneDim { u: 0, v: 0 }, OneDim { u: 0, v: 1 }, TwoDim { k: 1 }]
        );
        assert_eq!(
            irrep_list(group(4)),
            vec![
                OneDim { u: 0, v: 0 },
                OneDim { u: 0, v: 1 },
                OneDim { u: 1, v: 0 },
                OneDim { u: 1, v: 1 },
                TwoDim { k: 1 }
            ]
        );
        let six = irrep_list(group(6));
        assert_eq!(six.iter().filter(|l| l.dim() == 1).count(), 4);
        assert_eq!(six[4..], [TwoDim { k: 1 }, TwoDim { k: 2 }]);
    }

    #[test]
    fn completeness_up_to_64() {
        for n in 1..=64 {
            let labels = irrep_list(group(n));
            let total: usize = labels.iter().map(|l| l.dim() * l.dim()).sum();
            assert_eq!(total, 2 * n);
            assert_eq!(labels.iter().filter(|l| l.dim() == 2).count(), (n - 1) / 2);
            assert!(labels.iter().all(|l| l.is_valid_for(n)));
        }
    }

    #[test]
    fn label_validation() {
        assert!(!IrrepLabel::OneDim { u: 1, v: 0 }.is_valid_for(5));
        assert!(IrrepLabel::OneDim { u: 1, v: 0 }.is_valid_for(6));
        assert!(!IrrepLabel::TwoDim { k: 2 }.is_valid_for(4));
        assert!(!IrrepLabel::TwoDim { k: 0 }.is_valid_for(4));
        assert!(IrrepLabel::TwoDim { k: 2 }.validate(4).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let g = group(4);
        let rho1 = IrrepLabel::TwoDim { k: 1 };
        assert_eq!(evaluate(rho1, g.identity(), g), RepMatrix::identity(2));
        assert_eq!(
            evaluate(rho1, g.x(), g),
            RepMatrix::two_by_two(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0))
        );
        // oracle: ρ(y)·ρ(x)^3 from the generator images
        let rx = RepMatrix::two_by_two(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0));
        let ry = RepMatrix::two_by_two(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0));
        let oracle = ry * rx * rx * rx;
        let got = evaluate(rho1, g.reflection(3), g);
        assert!(got.max_abs_diff(&oracle) < 1e-15);
        assert_eq!(
            got,
            RepMatrix::two_by_two(c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0))
        );
    }

    #[test]
    fn homomorphism_and_unitarity_exhaustive() {
        for n in 1..=8 {
            let grp = group(n);
            for label in irrep_list(grp) {
                for g in grp.elements() {
                    let mg = evaluate(label, g, grp);
                    assert!(mg.unitarity_defect() < 1e-12);
                    for i in 0..mg.dim() {
                        for j in 0..mg.dim() {
                            assert!(mg[(i, j)].norm() <= 1.0 + 1e-15);
                        }
                    }
                    for h in grp.elements() {
                        let lhs = evaluate(label, grp.multiply(g, h), grp);
                        let rhs = mg * evaluate(label, h, grp);
                        assert!(lhs.max_abs_diff(&rhs) < 1e-12, "{label} {g} {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn coset_sum_examples() {
        let g = group(4);
        let rho1 = IrrepLabel::TwoDim { k: 1 };
        let m = coset_sum(rho1, 1, g.identity(), g).unwrap();
        assert_eq!(
            m,
            RepMatrix::two_by_two(c(1.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(1.0, 0.0))
        );
        let triv = IrrepLabel::OneDim { u: 0, v: 0 };
        for a in 0..4 {
            assert_eq!(coset_sum(triv, a, g.identity(), g).unwrap(), RepMatrix::scalar(c(2.0, 0.0)));
        }

        // second display: c = y x^α gives ((ω^{(a-α)k}, ω^{-αk}), (ω^{αk}, ω^{-(a-α)k}))
        let g6 = group(6);
        let (k, a, alpha) = (2i64, 3i64, 1i64);
        let got = coset_sum(IrrepLabel::TwoDim { k: 2 }, 3, g6.reflection(1), g6).unwrap();
        let w = |m: i64| root_of_unity(m, 6);
        let display = RepMatrix::two_by_two(w((a - alpha) * k), w(-alpha * k), w(alpha * k), w(-(a - alpha) * k));
        assert!(got.max_abs_diff(&display) < 1e-12);
        let direct = evaluate(IrrepLabel::TwoDim { k: 2 }, g6.reflection(1), g6)
            + evaluate(IrrepLabel::TwoDim { k: 2 }, g6.multiply(g6.reflection(1), g6.reflection(3)), g6);
        assert!(got.max_abs_diff(&direct) < 1e-15);
    }

    #[test]
    fn coset_sum_first_display_all_alpha() {
        let n = 7;
        let g = group(n);
        for k in 1..=3i64 {
            for a in 0..n as i64 {
                for alpha in 0..n as i64 {
                    let got = coset_sum(IrrepLabel::TwoDim { k: k as usize }, a as usize, g.rotation(alpha), g).unwrap();
                    let w = |m: i64| root_of_unity(m, n);
                    let display =
                        RepMatrix::two_by_two(w(alpha * k), w(-(a - alpha) * k), w((a - alpha) * k), w(-alpha * k));
                    assert!(got.max_abs_diff(&display) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn one_dim_coset_sums_have_plus_sign() {
        // φ_{u,v}(x^α) + φ_{u,v}(x^α y x^a) = (-1)^{αu} (1 + (-1)^{v+au})
        let n = 6;
        let g = group(n);
        for (u, v) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)] {
            for a in 0..n {
                for alpha in 0..n {
                    let got = coset_sum(IrrepLabel::OneDim { u, v }, a, g.rotation(alpha as i64), g).unwrap();
                    let sign = |e: usize| if e % 2 == 0 { 1.0 } else { -1.0 };
                    let expected = sign(alpha * u as usize) * (1.0 + sign(v as usize + a * u as usize));
                    assert_eq!(got, RepMatrix::scalar(c(expected, 0.0)));
                }
            }
        }
    }

    #[test]
    fn coset_sum_factorization() {
        for n in 1..=8 {
            let g = group(n);
            for label in irrep_list(g) {
                for a in 0..n {
                    let reflect = evaluate(label, g.reflection(a as i64), g);
                    for cel in g.elements() {
                        let factored = evaluate(label, cel, g) * (RepMatrix::identity(label.dim()) + reflect);
                        let got = coset_sum(label, a, cel, g).unwrap();
                        assert!(got.max_abs_diff(&factored) < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn schur_examples() {
        for n in [1, 2, 3, 16] {
            let report = schur_check(group(n));
            assert!(report.passed, "{report:?}");
            assert!(report.max_deviation < 1e-12);
        }
    }

    #[test]
    fn root_of_unity_reduces_exponent() {
        assert_eq!(root_of_unity(4, 4), c(1.0, 0.0));
        assert_eq!(root_of_unity(-1, 4), c(0.0, -1.0));
        assert!((root_of_unity(1_000_000_007, 12) - root_of_unity(1_000_000_007 % 12, 12)).norm() == 0.0);
    }
}
