//! Exhaustive isospectral-family search, the expression-pattern taxonomy for
//! pair complements, and the counting inequalities that force families to
//! exist.
//!
//! Families are found by partitioning the class list by spectral invariant.
//! Every family is then re-checked by comparing multiplicity series; a
//! disagreement is reported as an error rather than silently dropped.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{complement_tuple, enumerate_classes, CanonicalClass};
use crate::error::{Error, Result};
use crate::residues::{Location, ResidueSystem, Shape};
use crate::spectra::{multiplicities, series_depth, spectral_invariant, SpectralInvariant};

/// Cap on the series cross-check depth.
pub const MAX_VERIFY_DEPTH: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsospectralFamily {
    pub q: u64,
    pub n: usize,
    /// Ascending, pairwise distinct canonical classes.
    pub members: Vec<CanonicalClass>,
    pub invariant: SpectralInvariant<BigInt, BigUint>,
    /// Members share `m_0, ..., m_verified_to`.
    pub verified_to: usize,
}

/// Every family of at least two non-isometric, isospectral classes of
/// `n`-tuples, ordered by first member.
pub fn find_families(system: &Arc<ResidueSystem>, n: usize) -> Result<Vec<IsospectralFamily>> {
    let depth = series_depth(system.q(), n).min(MAX_VERIFY_DEPTH);
    find_families_to_depth(system, n, depth)
}

/// [`find_families`] with an explicit series cross-check depth.
pub fn find_families_to_depth(
    system: &Arc<ResidueSystem>,
    n: usize,
    depth: usize,
) -> Result<Vec<IsospectralFamily>> {
    let classes = enumerate_classes(system, n)?;
    families_among(&classes, depth)
}

/// Partitions `classes` (all of one `q` and `n`) into families. The result
/// does not depend on the order of `classes`.
pub fn families_among(classes: &[CanonicalClass], depth: usize) -> Result<Vec<IsospectralFamily>> {
    let mut classes = classes.to_vec();
    classes.sort();
    classes.dedup();
    let invariants: Vec<SpectralInvariant> = classes
        .par_iter()
        .map(|c| spectral_invariant(c.tuple()))
        .collect();

    let mut groups: HashMap<&SpectralInvariant, Vec<usize>> = HashMap::new();
    for (i, inv) in invariants.iter().enumerate() {
        groups.entry(inv).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() > 1).collect();
    // indices are ascending within a group; classes are sorted
    groups.sort();

    groups
        .into_par_iter()
        .map(|group| {
            let members: Vec<CanonicalClass> = group.iter().map(|&i| classes[i].clone()).collect();
            cross_validate(&members, depth)?;
            Ok(IsospectralFamily {
                q: members[0].tuple().q(),
                n: members[0].tuple().n(),
                invariant: invariants[group[0]].clone(),
                members,
                verified_to: depth,
            })
        })
        .collect()
}

fn cross_validate(members: &[CanonicalClass], depth: usize) -> Result<()> {
    let series: Vec<_> = members
        .par_iter()
        .map(|c| multiplicities::<BigUint>(c.tuple(), depth, 0))
        .collect();
    for (c, s) in members.iter().zip(&series).skip(1) {
        if let Some(index) = series[0].first_difference(s) {
            return Err(Error::InvariantSeriesMismatch {
                q: c.tuple().q(),
                left: members[0].entries().to_vec(),
                right: c.entries().to_vec(),
                index,
            });
        }
    }
    Ok(())
}

/// Where `q1`, `q2` and `q1 +- q2` lie, up to swapping `q1, q2` and up to
/// the sign of either.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExpressionPattern {
    pub entries: [Location; 2],
    pub sums: [Location; 2],
}

impl ExpressionPattern {
    pub fn labels(&self, system: &ResidueSystem) -> ([String; 2], [String; 2]) {
        let l = |x: Location| system.location_label(x);
        (
            [l(self.entries[0]), l(self.entries[1])],
            [l(self.sums[0]), l(self.sums[1])],
        )
    }

    pub fn display<'a>(&'a self, system: &'a ResidueSystem) -> impl fmt::Display + 'a {
        PatternDisplay { pattern: self, system }
    }
}

struct PatternDisplay<'a> {
    pattern: &'a ExpressionPattern,
    system: &'a ResidueSystem,
}

impl fmt::Display for PatternDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ([a, b], [c, d]) = self.pattern.labels(self.system);
        write!(f, "{{{a}, {b}}}, {{{c}, {d}}}")
    }
}

fn sorted(mut pair: [Location; 2]) -> [Location; 2] {
    pair.sort();
    pair
}

pub fn pattern(system: &ResidueSystem, q1: i64, q2: i64) -> Result<ExpressionPattern> {
    let (f1, f2) = (system.fold(q1), system.fold(q2));
    if f1 == 0 || f2 == 0 || f1 == f2 {
        return Err(Error::InvalidTuple {
            q: system.q(),
            reason: format!("({q1}, {q2}) needs non-zero entries with distinct folds"),
        });
    }
    let sums = sorted([system.locate(q1 + q2), system.locate(q1 - q2)]);
    // distinct non-zero folds keep both sums away from zero
    debug_assert!(!sums.contains(&Location::Zero));
    Ok(ExpressionPattern {
        entries: sorted([system.locate(q1), system.locate(q2)]),
        sums,
    })
}

/// The shapes for which the number of pair patterns is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PatternShape {
    OddPrimePower { p: u64, m: u32 },
    OddSemiprime { p1: u64, p2: u64 },
    PowerOfTwo { m: u32 },
    TwicePrime { p: u64 },
}

pub fn pattern_shape(system: &ResidueSystem) -> Result<PatternShape> {
    match system.shape() {
        Shape::PrimePower { p: 2, m } => Ok(PatternShape::PowerOfTwo { m }),
        Shape::PrimePower { p, m } => Ok(PatternShape::OddPrimePower { p, m }),
        Shape::Semiprime { p1: 2, p2 } => Ok(PatternShape::TwicePrime { p: p2 }),
        Shape::Semiprime { p1, p2 } => Ok(PatternShape::OddSemiprime { p1, p2 }),
        Shape::General => Err(Error::UnsupportedShape { q: system.q() }),
    }
}

/// Upper bound on the number of distinct patterns for the shape of `q`.
pub fn pattern_bound(system: &ResidueSystem) -> Result<u64> {
    Ok(match pattern_shape(system)? {
        PatternShape::OddPrimePower { m, .. } => (m as u64).pow(2),
        PatternShape::OddSemiprime { .. } => 11,
        PatternShape::PowerOfTwo { m } => (m as u64 - 1).pow(2),
        PatternShape::TwicePrime { .. } => 6,
    })
}

/// Patterns of the complement pairs of all classes of `(q0 - 2)`-tuples.
pub fn realized_patterns(system: &Arc<ResidueSystem>) -> Result<BTreeSet<ExpressionPattern>> {
    pattern_shape(system)?;
    let n = system.q0() as usize - 2;
    enumerate_classes(system, n)?
        .iter()
        .map(|c| {
            let w = complement_tuple(c.tuple());
            let [q1, q2] = [w.entries()[0], w.entries()[1]];
            pattern(system, q1 as i64, q2 as i64)
        })
        .collect()
}

pub fn realized_pattern_count(system: &Arc<ResidueSystem>) -> Result<usize> {
    Ok(realized_patterns(system)?.len())
}

/// A counting inequality `lhs <= rhs` which, when it holds, guarantees more
/// classes of `(q0 - 2)`-tuples than patterns and hence an isospectral pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficiencyRecord {
    pub q: u64,
    pub inequality: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub satisfied: bool,
}

pub fn sufficiency_check(system: &ResidueSystem) -> Result<SufficiencyRecord> {
    let q0 = system.q0() as i64;
    let r = system.r() as i64;
    let (inequality, lhs, rhs) = match pattern_shape(system)? {
        PatternShape::OddPrimePower { m, .. } => {
            let m2 = (m as i64).pow(2);
            (
                "q0((2m^2 + 3) - q0) <= 2r(m^2 + 1)",
                q0 * ((2 * m2 + 3) - q0),
                2 * r * (m2 + 1),
            )
        }
        PatternShape::OddSemiprime { .. } => ("q0(25 - q0) <= 24r", q0 * (25 - q0), 24 * r),
        PatternShape::PowerOfTwo { m } => {
            let m = m as i64;
            ("m^2 - 2m + 3 <= q0", m * m - 2 * m + 3, q0)
        }
        PatternShape::TwicePrime { .. } => ("q0(15 - q0) <= 14r", q0 * (15 - q0), 14 * r),
    };
    Ok(SufficiencyRecord {
        q: system.q(),
        inequality,
        lhs,
        rhs,
        satisfied: lhs <= rhs,
    })
}
