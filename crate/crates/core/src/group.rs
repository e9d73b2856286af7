//! Arithmetic in the dihedral group D_n of order 2n.
//!
//! Every element is kept in the canonical form y^β x^α with β ∈ {0, 1} and
//! 0 ≤ α < n. The state-vector index of an element is β·n + α.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The dihedral group D_n, identified by its rotation order n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralGroup {
    n: usize,
}

/// A group element y^β x^α in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElement {
    beta: u8,
    alpha: usize,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement { beta: 0, alpha: 0 };

    pub fn beta(self) -> u8 {
        self.beta
    }

    pub fn alpha(self) -> usize {
        self.alpha
    }

    pub fn is_reflection(self) -> bool {
        self.beta == 1
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.beta, self.alpha) {
            (0, 0) => write!(f, "e"),
            (0, a) => write!(f, "x^{a}"),
            (_, 0) => write!(f, "y"),
            (_, a) => write!(f, "y x^{a}"),
        }
    }
}

impl DihedralGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(DihedralGroup { n })
    }

    /// Rotation order n.
    pub fn n(self) -> usize {
        self.n
    }

    /// Group order 2n.
    pub fn order(self) -> usize {
        2 * self.n
    }

    /// Builds y^β x^α, reducing α mod n and β mod 2.
    pub fn element(self, beta: usize, alpha: i64) -> DihedralElement {
        DihedralElement {
            beta: (beta % 2) as u8,
            alpha: alpha.rem_euclid(self.n as i64) as usize,
        }
    }

    pub fn rotation(self, alpha: i64) -> DihedralElement {
        self.element(0, alpha)
    }

    pub fn reflection(self, alpha: i64) -> DihedralElement {
        self.element(1, alpha)
    }

    pub fn identity(self) -> DihedralElement {
        DihedralElement::IDENTITY
    }

    /// Generator x.
    pub fn x(self) -> DihedralElement {
        self.rotation(1)
    }

    /// Generator y.
    pub fn y(self) -> DihedralElement {
        self.reflection(0)
    }

    pub fn contains(self, g: DihedralElement) -> bool {
        g.beta < 2 && g.alpha < self.n
    }

    /// (y^b x^a)(y^0 x^c) = y^b x^{a+c}; (y^b x^a)(y^1 x^c) = y^{b+1} x^{c-a}.
    pub fn multiply(self, g: DihedralElement, h: DihedralElement) -> DihedralElement {
        let n = self.n;
        debug_assert!(self.contains(g) && self.contains(h));
        if h.beta == 0 {
            DihedralElement {
                beta: g.beta,
                alpha: (g.alpha + h.alpha) % n,
            }
        } else {
            DihedralElement {
                beta: g.beta ^ 1,
                alpha: (h.alpha + n - g.alpha) % n,
            }
        }
    }

    pub fn inverse(self, g: DihedralElement) -> DihedralElement {
        if g.beta == 1 {
            g
        } else {
            DihedralElement {
                beta: 0,
                alpha: (self.n - g.alpha) % self.n,
            }
        }
    }

    pub fn pow(self, g: DihedralElement, exponent: usize) -> DihedralElement {
        (0..exponent).fold(self.identity(), |acc, _| self.multiply(acc, g))
    }

    /// State-vector index β·n + α.
    pub fn index_of(self, g: DihedralElement) -> usize {
        g.beta as usize * self.n + g.alpha
    }

    pub fn element_at(self, index: usize) -> DihedralElement {
        assert!(index < self.order(), "index {index} out of range for D_{}", self.n);
        DihedralElement {
            beta: (index / self.n) as u8,
            alpha: index % self.n,
        }
    }

    /// All 2n elements in index order.
    pub fn elements(self) -> impl Iterator<Item = DihedralElement> {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// The reflection subgroup H_a = {e, y x^a}.
    pub fn reflection_subgroup(self, a: usize) -> Result<ReflectionSubgroup> {
        if a >= self.n {
            return Err(Error::InvalidSlope { a, n: self.n });
        }
        Ok(ReflectionSubgroup { a, group: self })
    }

    /// The left coset {g, g·y x^a}, smaller element first.
    pub fn left_coset(self, g: DihedralElement, h: &ReflectionSubgroup) -> [DihedralElement; 2] {
        let other = self.multiply(g, h.generator());
        if g <= other {
            [g, other]
        } else {
            [other, g]
        }
    }
}

/// The order-two subgroup H_a = ⟨y x^a⟩ generated by a reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReflectionSubgroup {
    a: usize,
    group: DihedralGroup,
}

impl ReflectionSubgroup {
    pub fn slope(&self) -> usize {
        self.a
    }

    pub fn group(&self) -> DihedralGroup {
        self.group
    }

    pub fn generator(&self) -> DihedralElement {
        self.group.reflection(self.a as i64)
    }

    pub fn elements(&self) -> [DihedralElement; 2] {
        [DihedralElement::IDENTITY, self.generator()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Cayley table generated from words in x and y, reduced only through
    /// the relations x^n = e, y^2 = e and y x = x^{-1} y. Independent of
    /// `multiply`.
    fn brute_force_product(n: usize, g: DihedralElement, h: DihedralElement) -> DihedralElement {
        // word for y^b x^a: b copies of 'y' then a copies of 'x'
        let mut word: Vec<char> = Vec::new();
        for el in [g, h] {
            word.extend(std::iter::repeat_n('y', el.beta() as usize));
            word.extend(std::iter::repeat_n('x', el.alpha()));
        }
        // push every y to the left using x y = y x^{-1}; track x exponent as signed
        let mut ys = 0usize;
        let mut xs: i64 = 0;
        for c in word {
            match c {
                'x' => xs += 1,
                _ => {
                    // (y^ys x^xs) y = y^ys y x^{-xs}
                    ys += 1;
                    xs = -xs;
                }
            }
        }
        DihedralGroup::new(n).unwrap().element(ys % 2, xs)
    }

    #[test]
    fn multiply_examples() {
        let g = DihedralGroup::new(5).unwrap();
        assert_eq!(g.multiply(g.rotation(1), g.rotation(2)), g.rotation(3));
        assert_eq!(g.multiply(g.x(), g.y()), g.reflection(4));
        assert_eq!(g.multiply(g.reflection(2), g.reflection(3)), g.rotation(1));
        assert_eq!(brute_force_product(5, g.reflection(2), g.reflection(3)), g.rotation(1));
    }

    #[test]
    fn multiply_matches_word_reduction() {
        for n in 1..=8 {
            let grp = DihedralGroup::new(n).unwrap();
            for g in grp.elements() {
                for h in grp.elements() {
                    assert_eq!(grp.multiply(g, h), brute_force_product(n, g, h));
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let g = DihedralGroup::new(5).unwrap();
        assert_eq!(g.inverse(g.identity()), g.identity());
        assert_eq!(g.inverse(g.reflection(3)), g.reflection(3));
        assert_eq!(g.inverse(g.rotation(2)), g.rotation(3));
        let by_search = g
            .elements()
            .find(|&h| g.multiply(g.rotation(2), h) == g.identity())
            .unwrap();
        assert_eq!(by_search, g.rotation(3));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for n in 1..=8 {
            let grp = DihedralGroup::new(n).unwrap();
            for g in grp.elements() {
                assert_eq!(grp.multiply(g, grp.inverse(g)), grp.identity());
                assert_eq!(grp.multiply(grp.inverse(g), g), grp.identity());
                for h in grp.elements() {
                    for k in grp.elements() {
                        assert_eq!(
                            grp.multiply(grp.multiply(g, h), k),
                            grp.multiply(g, grp.multiply(h, k))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn presentation_relations() {
        for n in 1..=16 {
            let g = DihedralGroup::new(n).unwrap();
            assert_eq!(g.pow(g.x(), n), g.identity());
            assert_eq!(g.pow(g.y(), 2), g.identity());
            let conj = g.multiply(g.multiply(g.y(), g.x()), g.inverse(g.y()));
            assert_eq!(conj, g.inverse(g.x()));
        }
    }

    #[test]
    fn index_round_trip() {
        let g = DihedralGroup::new(7).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index_of(g.element_at(i)), i);
        }
        assert_eq!(g.index_of(g.reflection(3)), 10);
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(DihedralGroup::new(0), Err(Error::InvalidOrder(0)));
        let g = DihedralGroup::new(3).unwrap();
        assert!(g.reflection_subgroup(3).is_err());
    }

    #[test]
    fn coset_examples() {
        let g = DihedralGroup::new(4).unwrap();
        let h = g.reflection_subgroup(1).unwrap();
        assert_eq!(g.left_coset(g.identity(), &h), [g.rotation(0), g.reflection(1)]);
        assert_eq!(g.left_coset(g.rotation(2), &h), [g.rotation(2), g.reflection(3)]);
        for el in h.elements() {
            assert_eq!(g.multiply(el, el), g.identity());
        }
    }

    #[test]
    fn cosets_partition_group() {
        for n in 1..=8 {
            let g = DihedralGroup::new(n).unwrap();
            for a in 0..n {
                let h = g.reflection_subgroup(a).unwrap();
                let cosets: BTreeSet<[DihedralElement; 2]> =
                    g.elements().map(|el| g.left_coset(el, &h)).collect();
                assert_eq!(cosets.len(), n);
                let covered: BTreeSet<DihedralElement> = cosets.iter().flatten().copied().collect();
                assert_eq!(covered.len(), 2 * n);
                for c in &cosets {
                    assert_ne!(c[0], c[1]);
                }
            }
        }
    }
}
