//! Residues modulo `q`: the unit group, the non-unit strata, folding under
//! `x ~ -x`, and exact root-of-unity sums over each of those sets.
//!
//! Every set here is a union of Galois orbits (residues with a fixed gcd
//! against `q`), so `sum_{l in S} gamma^(m l)` is a rational integer. It is
//! obtained from the sums over multiples of a divisor,
//!
//! ```text
//! sum_{1 <= l <= q, e | l} gamma^(m l) = q/e   if (q/e) | m,   else 0,
//! ```
//!
//! by Moebius inversion over the divisor lattice. No floating point and no
//! cyclotomic-field arithmetic is involved.

use std::fmt;

use serde::Serialize;

use crate::arith::{self, factorize, gcd, is_prime, mobius};
use crate::error::{Error, Result};

/// Folds `x` into `[0, q0]` under `x ~ -x (mod q)`.
pub fn fold(x: i64, q: u64) -> u64 {
    let r = arith::residue(x, q);
    r.min(q - r)
}

/// `(q - 1) / 2` for odd `q`, `q / 2` for even `q`.
pub fn half_modulus(q: u64) -> u64 {
    q / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Shape {
    PrimePower { p: u64, m: u32 },
    Semiprime { p1: u64, p2: u64 },
    General,
}

/// The unit group `A`, or the stratum of residues whose gcd with `q` is
/// exactly `gcd` (the `B_j`, `B`, `C` of the prime-power and semiprime cases).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResidueSet {
    Units,
    Stratum { gcd: u64 },
}

impl ResidueSet {
    fn exact_gcd(self) -> u64 {
        match self {
            ResidueSet::Units => 1,
            ResidueSet::Stratum { gcd } => gcd,
        }
    }
}

/// Where a residue sits: the zero residue, or one of the sets above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Location {
    Zero,
    In(ResidueSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumMembers {
    pub set: ResidueSet,
    pub label: String,
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    q: u64,
    q0: u64,
    shape: Shape,
    units: Vec<u64>,
    strata: Vec<StratumMembers>,
    folded_nonunits: usize,
}

impl ResidueSystem {
    pub fn new(q: u64) -> Result<Self> {
        if q < 7 {
            return Err(Error::InvalidModulus {
                q,
                reason: "q must be at least 7",
            });
        }
        if is_prime(q) {
            return Err(Error::InvalidModulus {
                q,
                reason: "q must not be prime",
            });
        }
        let factors = factorize(q);
        let shape = match factors.as_slice() {
            [(p, m)] => Shape::PrimePower { p: *p, m: *m },
            [(p1, 1), (p2, 1)] => Shape::Semiprime { p1: *p1, p2: *p2 },
            _ => Shape::General,
        };

        let units: Vec<u64> = (1..q).filter(|&x| gcd(x, q) == 1).collect();
        let strata = arith::divisors(q)
            .into_iter()
            .filter(|&d| d != 1 && d != q)
            .map(|d| {
                let set = ResidueSet::Stratum { gcd: d };
                StratumMembers {
                    set,
                    label: label_for(shape, set),
                    members: (1..q).filter(|&x| gcd(x, q) == d).collect(),
                }
            })
            .collect();
        let q0 = half_modulus(q);
        let folded_nonunits = (1..=q0).filter(|&x| gcd(x, q) != 1).count();

        Ok(ResidueSystem {
            q,
            q0,
            shape,
            units,
            strata,
            folded_nonunits,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q0(&self) -> u64 {
        self.q0
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// The unit residues `A`, ascending.
    pub fn units(&self) -> &[u64] {
        &self.units
    }

    /// Non-unit strata in ascending order of their gcd with `q`.
    pub fn strata(&self) -> &[StratumMembers] {
        &self.strata
    }

    /// `A` followed by every stratum: the sets a spectral invariant ranges over.
    pub fn sets(&self) -> Vec<ResidueSet> {
        std::iter::once(ResidueSet::Units)
            .chain(self.strata.iter().map(|s| s.set))
            .collect()
    }

    pub fn members(&self, set: ResidueSet) -> &[u64] {
        match set {
            ResidueSet::Units => &self.units,
            ResidueSet::Stratum { gcd } => self
                .strata
                .iter()
                .find(|s| s.set.exact_gcd() == gcd)
                .map(|s| s.members.as_slice())
                .unwrap_or(&[]),
        }
    }

    pub fn label(&self, set: ResidueSet) -> String {
        label_for(self.shape, set)
    }

    pub fn location_label(&self, loc: Location) -> String {
        match loc {
            Location::Zero => "0".to_string(),
            Location::In(set) => self.label(set),
        }
    }

    pub fn locate(&self, x: i64) -> Location {
        let r = arith::residue(x, self.q);
        match gcd(r, self.q) {
            _ if r == 0 => Location::Zero,
            1 => Location::In(ResidueSet::Units),
            d => Location::In(ResidueSet::Stratum { gcd: d }),
        }
    }

    pub fn fold(&self, x: i64) -> u64 {
        fold(x, self.q)
    }

    /// `|D|`, the number of non-zero non-units mod `q`.
    pub fn nonunit_count(&self) -> usize {
        (self.q - 1) as usize - self.units.len()
    }

    /// Number of non-units in `[1, q0]`; for even `q` the self-negative residue
    /// `q0` is counted once.
    pub fn r(&self) -> usize {
        self.folded_nonunits
    }

    /// `sum_{l in set} gamma^(m l)` for a primitive `q`-th root of unity `gamma`.
    pub fn character_sum(&self, set: ResidueSet, m: i64) -> i64 {
        exact_gcd_sum(self.q, set.exact_gcd(), m)
    }
}

impl fmt::Display for ResidueSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}Z (q0 = {}, r = {})", self.q, self.q0, self.r())
    }
}

fn label_for(shape: Shape, set: ResidueSet) -> String {
    let d = match set {
        ResidueSet::Units => return "A".to_string(),
        ResidueSet::Stratum { gcd } => gcd,
    };
    match shape {
        Shape::PrimePower { p, .. } => {
            let mut j = 0;
            let mut x = d;
            while x % p == 0 {
                x /= p;
                j += 1;
            }
            format!("B{j}")
        }
        Shape::Semiprime { p1, .. } if d == p1 => "B".to_string(),
        Shape::Semiprime { .. } => "C".to_string(),
        Shape::General => format!("G{d}"),
    }
}

/// Sum over `l in [1, q]` with `e | l`.
fn multiples_sum(q: u64, e: u64, m: i64) -> i64 {
    let period = (q / e) as i64;
    if m.rem_euclid(period) == 0 {
        period
    } else {
        0
    }
}

/// Sum over `l in [1, q]` with `gcd(l, q) = d`, by inversion over `d | e | q`.
fn exact_gcd_sum(q: u64, d: u64, m: i64) -> i64 {
    arith::divisors(q / d)
        .into_iter()
        .map(|f| mobius(f) * multiples_sum(q, d * f, m))
        .sum()
}
