//! Polynomials in `z` with coefficients in the integral group ring of `Z/qZ`.
//!
//! A group-ring element is a dense vector indexed by residue: entry `m` is the
//! coefficient of the basis element `gamma^m`. Products of the quadratic
//! factors `z^2 - (gamma^a + gamma^-a) z + 1` stay exact, and only at the end
//! is each basis element replaced by a number (a character sum).

use crate::scalar::Coefficient;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> GroupRingElement<C> {
    pub fn zero(q: u64) -> Self {
        GroupRingElement {
            coeffs: vec![C::zero(); q as usize],
        }
    }

    /// The basis element `gamma^m`.
    pub fn basis(q: u64, m: u64) -> Self {
        let mut e = Self::zero(q);
        e.coeffs[(m % q) as usize] = C::one();
        e
    }

    pub fn q(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    /// `self += sign * gamma^shift * other`.
    fn add_shifted(&mut self, other: &Self, shift: u64, negate: bool) {
        let q = self.coeffs.len();
        let shift = shift as usize % q;
        for (m, c) in other.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let slot = &mut self.coeffs[(m + shift) % q];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }

    /// Applies the ring homomorphism determined by `gamma^m -> values[m]`.
    pub fn evaluate(&self, values: &[i64]) -> C {
        let mut acc = C::zero();
        for (c, &v) in self.coeffs.iter().zip(values) {
            if v != 0 && !c.is_zero() {
                acc += &(c.clone() * &C::from_i64_exact(v));
            }
        }
        acc
    }
}

/// `sum_j terms[j] z^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingPoly<C> {
    q: u64,
    terms: Vec<GroupRingElement<C>>,
}

impl<C: Coefficient> GroupRingPoly<C> {
    pub fn one(q: u64) -> Self {
        GroupRingPoly {
            q,
            terms: vec![GroupRingElement::basis(q, 0)],
        }
    }

    /// `prod_i (z - gamma^a_i)(z - gamma^-a_i)`.
    pub fn rotation_product(q: u64, exponents: &[u64]) -> Self {
        exponents
            .iter()
            .fold(Self::one(q), |p, &a| p.times_rotation(a))
    }

    pub fn degree(&self) -> usize {
        self.terms.len() - 1
    }

    /// Coefficient of `z^j`.
    pub fn term(&self, j: usize) -> &GroupRingElement<C> {
        &self.terms[j]
    }

    /// Multiplies by `z^2 - (gamma^a + gamma^-a) z + 1`.
    pub fn times_rotation(&self, a: u64) -> Self {
        let q = self.q;
        let a = a % q;
        let d = self.terms.len();
        let mut out = vec![GroupRingElement::zero(q); d + 2];
        for (j, t) in self.terms.iter().enumerate() {
            out[j].add_shifted(t, 0, false);
            out[j + 1].add_shifted(t, a, true);
            out[j + 1].add_shifted(t, q - a, true);
            out[j + 2].add_shifted(t, 0, false);
        }
        GroupRingPoly { q, terms: out }
    }

    /// Coefficients, highest power first, after `gamma^m -> values[m]`.
    pub fn evaluate_descending(&self, values: &[i64]) -> Vec<C> {
        self.terms.iter().rev().map(|t| t.evaluate(values)).collect()
    }
}
