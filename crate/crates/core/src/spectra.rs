//! Spectral data of lens spaces: character polynomials, the invariant that
//! pins down the generating function, exact eigenvalue multiplicities, and
//! the isospectrality decision.
//!
//! Multiplicities come from counting invariant monomials. A monomial
//! `prod z_s^i_s conj(z_s)^j_s prod x_t^t_t` of degree `d` is invariant iff
//! `sum (i_s - j_s) p_s = 0 (mod q)`, so `dim P^d_G` is the number of
//! non-negative vectors of total degree `d` whose weighted residue vanishes.
//! That is an unbounded-knapsack count with state `(degree, residue)`, and
//! `dim H^k_G = dim P^k_G - dim P^(k-2)_G`.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::classes::{complement_tuple, LensTuple};
use crate::error::{Error, Result};
use crate::group_ring::GroupRingPoly;
use crate::residues::{ResidueSet, ResidueSystem, Shape};
use crate::scalar::{Coefficient, Count};

/// `c_0 z^(2k) + ... + c_(2k)` with the sign convention of the displayed
/// polynomials (no alternating-sum normalisation).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterPolynomial<C = BigInt> {
    set: ResidueSet,
    label: String,
    coefficients: Vec<C>,
}

impl<C: Coefficient> CharacterPolynomial<C> {
    pub fn set(&self) -> ResidueSet {
        self.set
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Highest power first.
    pub fn coefficients(&self) -> &[C] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }
}

impl<C: Coefficient> fmt::Display for CharacterPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree();
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = deg - i;
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !magnitude.is_one() || power == 0 {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn character_sum_table(system: &ResidueSystem, set: ResidueSet) -> Vec<i64> {
    (0..system.q() as i64)
        .map(|m| system.character_sum(set, m))
        .collect()
}

/// `sum_{l in set} prod_i (z - gamma^(e_i l))(z - gamma^(-e_i l))` for raw
/// residues `entries` (possibly empty, possibly not coprime to `q`).
pub fn character_polynomial_of<C: Coefficient>(
    system: &ResidueSystem,
    entries: &[u64],
    set: ResidueSet,
) -> CharacterPolynomial<C> {
    let product = GroupRingPoly::<C>::rotation_product(system.q(), entries);
    polynomial_for_set(system, &product, set)
}

fn polynomial_for_set<C: Coefficient>(
    system: &ResidueSystem,
    product: &GroupRingPoly<C>,
    set: ResidueSet,
) -> CharacterPolynomial<C> {
    let coefficients = product.evaluate_descending(&character_sum_table(system, set));
    let poly = CharacterPolynomial {
        set,
        label: system.label(set),
        coefficients,
    };
    debug_assert!(poly.is_palindromic());
    poly
}

pub fn character_polynomial<C: Coefficient>(t: &LensTuple, set: ResidueSet) -> CharacterPolynomial<C> {
    character_polynomial_of(t.system(), t.entries(), set)
}

/// The polynomials for `A` and for every stratum, in [`ResidueSystem::sets`]
/// order, sharing one group-ring expansion.
pub fn character_polynomials<C: Coefficient>(
    system: &ResidueSystem,
    entries: &[u64],
) -> Vec<CharacterPolynomial<C>> {
    let product = GroupRingPoly::<C>::rotation_product(system.q(), entries);
    system
        .sets()
        .into_iter()
        .map(|set| polynomial_for_set(system, &product, set))
        .collect()
}

/// Number of leading multiplicities whose agreement forces equal generating
/// functions: after clearing the denominator `(z^q - 1)^(2n)` both sides are
/// polynomials of degree at most `2n(q-1) + 2`.
pub fn series_depth(q: u64, n: usize) -> usize {
    2 * n * (q as usize - 1) + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InvariantData<C = BigInt, N = BigUint> {
    /// Character polynomials of the complement tuple over `A` and each stratum.
    Polynomials(Vec<CharacterPolynomial<C>>),
    /// `m_0, ..., m_K` with `K` the certified series depth.
    Prefix(Vec<N>),
}

/// Data that determines the spectrum's generating function. Equal invariants
/// of the same kind imply isospectrality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectralInvariant<C = BigInt, N = BigUint> {
    q: u64,
    n: usize,
    data: InvariantData<C, N>,
}

impl<C, N> SpectralInvariant<C, N> {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &InvariantData<C, N> {
        &self.data
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self.data, InvariantData::Polynomials(_))
    }
}

/// Whether the polynomial invariant applies to `n`-tuples over `system`.
pub fn has_polynomial_invariant(system: &ResidueSystem, n: usize) -> bool {
    let shaped = matches!(system.shape(), Shape::PrimePower { .. } | Shape::Semiprime { .. });
    shaped && n >= 2 && (n as u64) + 2 <= system.q0()
}

pub fn spectral_invariant<C: Coefficient, N: Count>(t: &LensTuple) -> SpectralInvariant<C, N> {
    let system = t.system();
    let data = if has_polynomial_invariant(system, t.n()) {
        let w = complement_tuple(t);
        InvariantData::Polynomials(character_polynomials(system, w.entries()))
    } else {
        let depth = series_depth(t.q(), t.n());
        InvariantData::Prefix(multiplicities::<N>(t, depth, 0).into_values())
    };
    SpectralInvariant {
        q: t.q(),
        n: t.n(),
        data,
    }
}

/// `dim P^d_G` for `d <= max_k`, where each weight contributes one free
/// exponent and `zeros` further exponents carry weight zero.
pub fn invariant_dimensions<N: Count>(q: u64, weights: &[u64], zeros: usize, max_k: usize) -> Vec<N> {
    let q = q as usize;
    let mut table: Vec<Vec<N>> = vec![vec![N::zero(); q]; max_k + 1];
    table[0][0] = N::one();
    for &w in weights {
        let shift = w as usize % q;
        for d in 1..=max_k {
            let (lower, upper) = table.split_at_mut(d);
            let prev = &lower[d - 1];
            let row = &mut upper[0];
            for (r, slot) in row.iter_mut().enumerate() {
                let from = &prev[(r + q - shift) % q];
                if !from.is_zero() {
                    *slot += from;
                }
            }
        }
    }
    let mut column: Vec<N> = table.into_iter().map(|row| row.into_iter().next().unwrap()).collect();
    for _ in 0..zeros {
        prefix_sum(&mut column);
    }
    column
}

fn prefix_sum<N: Count>(values: &mut [N]) {
    for i in 1..values.len() {
        let (lower, upper) = values.split_at_mut(i);
        upper[0] += &lower[i - 1];
    }
}

/// Eigenvalue multiplicities `m_0, m_1, ...` of a lens space, where `m_k`
/// belongs to the eigenvalue `k(k + 2n + W - 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicitySequence<N = BigUint> {
    q: u64,
    n: usize,
    w: usize,
    values: Vec<N>,
}

impl<N: Count> MultiplicitySequence<N> {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn values(&self) -> &[N] {
        &self.values
    }

    pub fn into_values(self) -> Vec<N> {
        self.values
    }

    pub fn max_k(&self) -> usize {
        self.values.len() - 1
    }

    pub fn eigenvalue(&self, k: usize) -> u64 {
        eigenvalue(k, self.n, self.w)
    }

    /// `(eigenvalue, multiplicity)` for every `k` with non-zero multiplicity.
    pub fn spectrum(&self) -> Vec<(u64, N)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(k, m)| (self.eigenvalue(k), m.clone()))
            .collect()
    }

    /// Appends a `W x W` identity block to the generator: the generating
    /// function gains a factor `(1 - z)^(-W)`.
    pub fn extend_w(&self, extra: usize) -> Self {
        let mut values = self.values.clone();
        for _ in 0..extra {
            prefix_sum(&mut values);
        }
        MultiplicitySequence {
            q: self.q,
            n: self.n,
            w: self.w + extra,
            values,
        }
    }

    /// Index of the first differing multiplicity over the common prefix.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.values.iter().zip(&other.values).position(|(a, b)| a != b)
    }
}

pub fn eigenvalue(k: usize, n: usize, w: usize) -> u64 {
    (k * (k + 2 * n + w - 2)) as u64
}

/// Multiplicities for raw rotation parameters, which may repeat or vanish
/// mod `q`.
pub fn multiplicities_of<N: Count>(q: u64, entries: &[i64], max_k: usize, w: usize) -> MultiplicitySequence<N> {
    let weights: Vec<u64> = entries
        .iter()
        .flat_map(|&p| {
            let r = crate::arith::residue(p, q);
            [r, (q - r) % q]
        })
        .collect();
    let dims = invariant_dimensions::<N>(q, &weights, w, max_k);
    let values = (0..=max_k)
        .map(|k| {
            let mut m = dims[k].clone();
            if k >= 2 {
                m -= &dims[k - 2];
            }
            m
        })
        .collect();
    MultiplicitySequence {
        q,
        n: entries.len(),
        w,
        values,
    }
}

pub fn multiplicities<N: Count>(t: &LensTuple, max_k: usize, w: usize) -> MultiplicitySequence<N> {
    let entries: Vec<i64> = t.entries().iter().map(|&e| e as i64).collect();
    multiplicities_of(t.q(), &entries, max_k, w)
}

pub fn multiplicity<N: Count>(t: &LensTuple, k: usize, w: usize) -> N {
    multiplicities::<N>(t, k, w).into_values().pop().unwrap()
}

pub fn spectrum<N: Count>(t: &LensTuple, max_k: usize, w: usize) -> Vec<(u64, N)> {
    multiplicities::<N>(t, max_k, w).spectrum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Invariant,
    Series,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "invariant" => Ok(Method::Invariant),
            "series" => Ok(Method::Series),
            other => Err(format!("unknown method {other:?} (expected invariant or series)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Difference {
    /// Label of the first set whose polynomials differ.
    Set(String),
    /// First `k` with different multiplicities.
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate<C = BigInt, N = BigUint> {
    /// Different `q`: never isospectral.
    DifferentModulus { left: u64, right: u64 },
    Invariant {
        left: SpectralInvariant<C, N>,
        right: SpectralInvariant<C, N>,
        difference: Option<Difference>,
    },
    Series {
        depth: usize,
        left: MultiplicitySequence<N>,
        right: MultiplicitySequence<N>,
        difference: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isospectrality<C = BigInt, N = BigUint> {
    pub isospectral: bool,
    pub certificate: Certificate<C, N>,
}

/// Decides isospectrality. The series method compares multiplicities up to
/// `depth`, defaulting to [`series_depth`].
pub fn is_isospectral<C: Coefficient, N: Count>(
    a: &LensTuple,
    b: &LensTuple,
    method: Method,
    depth: Option<usize>,
) -> Result<Isospectrality<C, N>> {
    if a.q() != b.q() {
        return Ok(Isospectrality {
            isospectral: false,
            certificate: Certificate::DifferentModulus {
                left: a.q(),
                right: b.q(),
            },
        });
    }
    if a.n() != b.n() {
        return Err(Error::Mismatch(format!("n = {} vs n = {}", a.n(), b.n())));
    }
    match method {
        Method::Invariant => {
            let left = spectral_invariant::<C, N>(a);
            let right = spectral_invariant::<C, N>(b);
            let difference = invariant_difference(&left, &right);
            Ok(Isospectrality {
                isospectral: difference.is_none(),
                certificate: Certificate::Invariant {
                    left,
                    right,
                    difference,
                },
            })
        }
        Method::Series => {
            let depth = depth.unwrap_or_else(|| series_depth(a.q(), a.n()));
            let left = multiplicities::<N>(a, depth, 0);
            let right = multiplicities::<N>(b, depth, 0);
            let difference = left.first_difference(&right);
            Ok(Isospectrality {
                isospectral: difference.is_none(),
                certificate: Certificate::Series {
                    depth,
                    left,
                    right,
                    difference,
                },
            })
        }
    }
}

fn invariant_difference<C: Coefficient, N: Count>(
    left: &SpectralInvariant<C, N>,
    right: &SpectralInvariant<C, N>,
) -> Option<Difference> {
    match (&left.data, &right.data) {
        (InvariantData::Polynomials(l), InvariantData::Polynomials(r)) => l
            .iter()
            .zip(r)
            .find(|(x, y)| x != y)
            .map(|(x, _)| Difference::Set(x.label.clone())),
        (InvariantData::Prefix(l), InvariantData::Prefix(r)) => {
            l.iter().zip(r).position(|(x, y)| x != y).map(Difference::Index)
        }
        // same q and n always yield the same kind
        _ => unreachable!("invariants of one (q, n) share a kind"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn sys(q: u64) -> Arc<ResidueSystem> {
        Arc::new(ResidueSystem::new(q).unwrap())
    }

    fn tuple(q: u64, v: &[i64]) -> LensTuple {
        LensTuple::new(&sys(q), v).unwrap()
    }

    fn coeffs(s: &ResidueSystem, entries: &[u64], set: ResidueSet) -> Vec<i64> {
        character_polynomial_of::<i64>(s, entries, set).coefficients().to_vec()
    }

    #[test]
    fn empty_tuple_gives_set_size() {
        let s = sys(25);
        for set in s.sets() {
            assert_eq!(coeffs(&s, &[], set), vec![s.members(set).len() as i64]);
        }
    }

    #[test]
    fn q25_pair_polynomials() {
        let s = sys(25);
        let b1 = ResidueSet::Stratum { gcd: 5 };
        assert_eq!(coeffs(&s, &[5, 10], ResidueSet::Units), vec![20, 20, 20, 20, 20]);
        assert_eq!(coeffs(&s, &[5, 10], b1), vec![4, -16, 24, -16, 4]);
        assert_eq!(coeffs(&s, &[10, 12], ResidueSet::Units), vec![20, 10, 40, 10, 20]);
        assert_eq!(coeffs(&s, &[10, 12], b1), vec![4, -6, 4, -6, 4]);
    }

    #[test]
    fn display_matches_printed_form() {
        let s = sys(25);
        let p = character_polynomial_of::<i64>(&s, &[5, 10], ResidueSet::Stratum { gcd: 5 });
        assert_eq!(p.to_string(), "4z^4 - 16z^3 + 24z^2 - 16z + 4");
        let s = sys(14);
        let p = character_polynomial_of::<i64>(&s, &[3, 6], ResidueSet::Stratum { gcd: 7 });
        assert_eq!(p.to_string(), "z^4 - 2z^2 + 1");
    }

    #[test]
    fn low_multiplicities() {
        let t = tuple(14, &[1, 2, 4, 5, 7]);
        let m = multiplicities::<u64>(&t, 3, 0);
        assert_eq!(m.values(), &[1, 0, 6, 12]);
        assert_eq!(spectrum::<u64>(&t, 2, 0), vec![(0, 1), (20, 6)]);
        assert_eq!(multiplicity::<u64>(&t, 2, 0), 6);
    }

    #[test]
    fn trivial_group_gives_sphere_harmonics() {
        // entries = 0 mod q drop the residue constraint
        let binom = |n: i64, k: i64| -> u64 {
            if n < 0 || k < 0 || k > n {
                return 0;
            }
            (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
        };
        for n in 1..4usize {
            let m = multiplicities_of::<u64>(9, &vec![0; n], 10, 0);
            for k in 0..=10i64 {
                let d = 2 * n as i64;
                let expected = binom(k + d - 1, d - 1) - binom(k + d - 3, d - 1);
                assert_eq!(m.values()[k as usize], expected, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn extension_shifts_eigenvalues() {
        let t = tuple(9, &[1, 2]);
        let m = multiplicities::<u64>(&t, 4, 1);
        assert_eq!(m.eigenvalue(3), 3 * (3 + 4 + 1 - 2));
        assert_eq!(multiplicities::<u64>(&t, 10, 0).extend_w(0).values(), multiplicities::<u64>(&t, 10, 0).values());
    }

    #[test]
    fn q9_classes_are_distinguished() {
        let a = tuple(9, &[1, 2]);
        let b = tuple(9, &[1, 3]);
        let r = is_isospectral::<i64, u64>(&a, &b, Method::Invariant, None).unwrap();
        assert!(!r.isospectral);
        let r = is_isospectral::<i64, BigUint>(&a, &b, Method::Series, None).unwrap();
        assert!(!r.isospectral);
    }

    #[test]
    fn different_modulus_is_not_an_error() {
        let r = is_isospectral::<i64, u64>(&tuple(9, &[1, 2]), &tuple(10, &[1, 3]), Method::Invariant, None)
            .unwrap();
        assert!(!r.isospectral);
        assert!(matches!(r.certificate, Certificate::DifferentModulus { .. }));
        assert!(is_isospectral::<i64, u64>(&tuple(25, &[1, 2]), &tuple(25, &[1, 2, 3]), Method::Series, None).is_err());
    }

    #[test]
    fn q14_pair() {
        let a = tuple(14, &[1, 2, 4, 5, 7]);
        let b = tuple(14, &[1, 4, 5, 6, 7]);
        for method in [Method::Invariant, Method::Series] {
            let r = is_isospectral::<BigInt, BigUint>(&a, &b, method, None).unwrap();
            assert!(r.isospectral, "{method:?}");
        }
    }
}
