//! Rotation-parameter tuples, the isometry equivalence between them, and the
//! enumeration and counting of isometry classes.
//!
//! Two tuples are equivalent when one is a signed permutation of a unit
//! multiple of the other. Folding every entry into `[0, q0]` absorbs the
//! signs, sorting absorbs the permutation, so a canonical form only has to
//! minimise over the unit multipliers.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::residues::{fold, ResidueSystem};

/// A reduced tuple of folded rotation parameters: entries in `[1, q0]`,
/// pairwise distinct, ascending.
///
/// Tuples built with [`LensTuple::new`] also satisfy `gcd(entries, q) = 1`,
/// i.e. they describe an effective action. Complement tuples produced by
/// [`complement_w`] need not, and are built with [`LensTuple::residues`].
#[derive(Clone)]
pub struct LensTuple {
    system: Arc<ResidueSystem>,
    entries: Vec<u64>,
}

impl LensTuple {
    pub fn new(system: &Arc<ResidueSystem>, raw: &[i64]) -> Result<Self> {
        let t = Self::residues(system, raw)?;
        if !t.is_effective() {
            return Err(Error::InvalidTuple {
                q: system.q(),
                reason: format!("gcd of {:?} and q is not 1", t.entries),
            });
        }
        Ok(t)
    }

    /// Like [`LensTuple::new`] but without the gcd condition.
    pub fn residues(system: &Arc<ResidueSystem>, raw: &[i64]) -> Result<Self> {
        let q = system.q();
        let bad = |reason: String| Error::InvalidTuple { q, reason };
        if raw.is_empty() {
            return Err(bad("tuple is empty".into()));
        }
        let mut entries: Vec<u64> = raw.iter().map(|&x| fold(x, q)).collect();
        if entries.contains(&0) {
            return Err(bad(format!("{raw:?} contains a multiple of q")));
        }
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad(format!("{raw:?} has entries congruent up to sign")));
        }
        Ok(LensTuple {
            system: Arc::clone(system),
            entries,
        })
    }

    fn from_sorted(system: &Arc<ResidueSystem>, entries: Vec<u64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        LensTuple {
            system: Arc::clone(system),
            entries,
        }
    }

    pub fn system(&self) -> &Arc<ResidueSystem> {
        &self.system
    }

    pub fn q(&self) -> u64 {
        self.system.q()
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_effective(&self) -> bool {
        self.entries.iter().fold(self.q(), |g, &e| gcd(g, e)) == 1
    }

    /// The tuple `l * self`, folded and sorted.
    pub fn scaled(&self, l: u64) -> LensTuple {
        let q = self.q();
        let mut entries: Vec<u64> = self
            .entries
            .iter()
            .map(|&e| fold(((l % q) * e % q) as i64, q))
            .collect();
        entries.sort_unstable();
        LensTuple::from_sorted(&self.system, entries)
    }

    pub fn canonical(&self) -> CanonicalClass {
        canonicalize(self)
    }
}

impl PartialEq for LensTuple {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q() && self.entries == other.entries
    }
}

impl Eq for LensTuple {}

impl Hash for LensTuple {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.q().hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for LensTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LensTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q(), &self.entries).cmp(&(other.q(), &other.entries))
    }
}

impl fmt::Display for LensTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}:", self.q())?;
        for (i, e) in self.entries.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LensTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The lexicographically least member of an isometry class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalClass(LensTuple);

impl CanonicalClass {
    pub fn tuple(&self) -> &LensTuple {
        &self.0
    }

    pub fn into_tuple(self) -> LensTuple {
        self.0
    }

    pub fn entries(&self) -> &[u64] {
        self.0.entries()
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

pub fn canonicalize(t: &LensTuple) -> CanonicalClass {
    CanonicalClass(LensTuple::from_sorted(
        &t.system,
        canonical_entries(&t.system, &t.entries),
    ))
}

fn canonical_entries(system: &ResidueSystem, entries: &[u64]) -> Vec<u64> {
    let q = system.q();
    let mut best = entries.to_vec();
    let mut buf = Vec::with_capacity(entries.len());
    for &l in system.units() {
        buf.clear();
        buf.extend(entries.iter().map(|&e| {
            let x = l * e % q;
            x.min(q - x)
        }));
        buf.sort_unstable();
        if buf < best {
            std::mem::swap(&mut best, &mut buf);
        }
    }
    best
}

pub fn is_isometric(a: &LensTuple, b: &LensTuple) -> Result<bool> {
    if a.q() != b.q() {
        return Err(Error::Mismatch(format!("q = {} vs q = {}", a.q(), b.q())));
    }
    if a.n() != b.n() {
        return Err(Error::Mismatch(format!("n = {} vs n = {}", a.n(), b.n())));
    }
    Ok(canonicalize(a) == canonicalize(b))
}

/// The class of the entries of `[1, q0]` missing from `c`.
pub fn complement_w(c: &CanonicalClass) -> Result<CanonicalClass> {
    let t = c.tuple();
    let q0 = t.system.q0();
    if t.n() as u64 >= q0 {
        return Err(Error::InvalidTuple {
            q: t.q(),
            reason: format!("n = {} leaves no complement in [1, {q0}]", t.n()),
        });
    }
    Ok(canonicalize(&complement_tuple(t)))
}

/// The complement of `t` in `[1, q0]` as a tuple (not canonicalized).
pub fn complement_tuple(t: &LensTuple) -> LensTuple {
    let q0 = t.system.q0();
    let rest: Vec<u64> = (1..=q0).filter(|x| t.entries.binary_search(x).is_err()).collect();
    LensTuple::from_sorted(&t.system, rest)
}

/// Every isometry class of effective reduced `n`-tuples, ascending.
pub fn enumerate_classes(system: &Arc<ResidueSystem>, n: usize) -> Result<Vec<CanonicalClass>> {
    let q0 = system.q0() as usize;
    if n == 0 || n >= q0 {
        return Err(Error::DimensionOutOfRange {
            q: system.q(),
            n,
            min: 1,
            max: q0 - 1,
        });
    }
    let k = q0 - n;
    let from_complement = n > k;
    let side = n.min(k);

    let mut seen_side: HashSet<Vec<u64>> = HashSet::new();
    let mut classes: HashSet<Vec<u64>> = HashSet::new();
    for subset in Combinations::new(q0 as u64, side) {
        let key = canonical_entries(system, &subset);
        if !seen_side.insert(key) {
            continue;
        }
        let tuple = if from_complement {
            (1..=q0 as u64)
                .filter(|x| subset.binary_search(x).is_err())
                .collect()
        } else {
            subset
        };
        let g = tuple.iter().fold(system.q(), |g, &e| gcd(g, e));
        if g == 1 {
            classes.insert(canonical_entries(system, &tuple));
        }
    }

    let mut out: Vec<CanonicalClass> = classes
        .into_iter()
        .map(|e| CanonicalClass(LensTuple::from_sorted(system, e)))
        .collect();
    out.sort();
    Ok(out)
}

/// Lexicographic `size`-subsets of `{1, ..., max}`.
struct Combinations {
    max: u64,
    current: Option<Vec<u64>>,
}

impl Combinations {
    fn new(max: u64, size: usize) -> Self {
        let current = (size as u64 <= max).then(|| (1..=size as u64).collect());
        Combinations { max, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let size = next.len();
        let mut i = size;
        while i > 0 {
            i -= 1;
            if next[i] < self.max - (size - 1 - i) as u64 {
                next[i] += 1;
                for j in i + 1..size {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

fn binomial<T: Integer + Clone + FromPrimitive>(n: i64, k: i64) -> T {
    if k < 0 || n < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_i64(n - i).unwrap() / T::from_i64(i + 1).unwrap();
    }
    acc
}

/// Lower bound on the number of isometry classes of `n`-tuples, counting
/// tuples `1 = p_1 < ... < p_n <= q0` by how many non-units they contain:
///
/// ```text
/// sum_{t=u}^{r} C(q0-1-r, n-1-t) C(r, t) / (n - t),   u = max(r - k, 0).
/// ```
pub fn lower_bound<T>(system: &ResidueSystem, n: usize) -> Ratio<T>
where
    T: Integer + Clone + FromPrimitive,
{
    let q0 = system.q0() as i64;
    let r = system.r() as i64;
    let n = n as i64;
    let k = q0 - n;
    let u = if r > k { r - k } else { 0 };
    let mut sum = Ratio::from_integer(T::zero());
    for t in u..=r {
        let c = binomial::<T>(q0 - 1 - r, n - 1 - t) * binomial::<T>(r, t);
        if c.is_zero() {
            continue;
        }
        sum = sum + Ratio::new(c, T::from_i64(n - t).unwrap());
    }
    sum
}

/// `C(q0, n) / q0`, the bound that ignores the unit structure.
pub fn coarse_lower_bound<T>(system: &ResidueSystem, n: usize) -> Ratio<T>
where
    T: Integer + Clone + FromPrimitive,
{
    let q0 = system.q0() as i64;
    Ratio::new(binomial(q0, n as i64), T::from_i64(q0).unwrap())
}

/// The `k = 2` specialisation of [`lower_bound`] in closed form,
/// `r(r-1) / (2(q0-r)) + r + (q0-r-1)/2`. `None` when `q0 <= r`.
pub fn pair_lower_bound<T>(system: &ResidueSystem) -> Option<Ratio<T>>
where
    T: Integer + Clone + FromPrimitive,
{
    let q0 = system.q0() as i64;
    let r = system.r() as i64;
    if q0 <= r {
        return None;
    }
    let c = |v: i64| T::from_i64(v).unwrap();
    Some(
        Ratio::new(c(r * (r - 1)), c(2 * (q0 - r)))
            + Ratio::from_integer(c(r))
            + Ratio::new(c(q0 - r - 1), c(2)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn sys(q: u64) -> Arc<ResidueSystem> {
        Arc::new(ResidueSystem::new(q).unwrap())
    }

    fn entries(c: &CanonicalClass) -> Vec<u64> {
        c.entries().to_vec()
    }

    #[test]
    fn q9_canonical_forms() {
        let s = sys(9);
        let c = |v: &[i64]| entries(&LensTuple::new(&s, v).unwrap().canonical());
        assert_eq!(c(&[1, 2]), vec![1, 2]);
        assert_eq!(c(&[2, 4]), vec![1, 2]);
        assert_eq!(c(&[1, 3]), vec![1, 3]);
        // unfolded and permuted input lands on the same class
        assert_eq!(c(&[-4, 7]), vec![1, 2]);
    }

    #[test]
    fn constructor_rejections() {
        let s = sys(25);
        assert!(LensTuple::new(&s, &[5, 10]).is_err());
        assert!(LensTuple::residues(&s, &[5, 10]).is_ok());
        assert!(LensTuple::new(&s, &[1, 24]).is_err());
        assert!(LensTuple::new(&s, &[1, 25]).is_err());
        assert!(LensTuple::new(&s, &[]).is_err());
    }

    #[test]
    fn q25_pair_is_not_isometric() {
        let s = sys(25);
        let a = LensTuple::new(&s, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11]).unwrap();
        let b = LensTuple::new(&s, &[1, 2, 3, 4, 6, 7, 8, 9, 10, 11]).unwrap();
        assert!(!is_isometric(&a, &b).unwrap());
        assert!(is_isometric(&a, &a).unwrap());
        assert!(is_isometric(&a, &a.scaled(2)).unwrap());
    }

    #[test]
    fn isometry_mismatch_is_an_error() {
        let a = LensTuple::new(&sys(25), &[1, 2]).unwrap();
        let b = LensTuple::new(&sys(27), &[1, 2]).unwrap();
        let c = LensTuple::new(&sys(25), &[1, 2, 3]).unwrap();
        assert!(matches!(is_isometric(&a, &b), Err(Error::Mismatch(_))));
        assert!(matches!(is_isometric(&a, &c), Err(Error::Mismatch(_))));
    }

    #[test]
    fn complement_examples() {
        let s = sys(25);
        let t = LensTuple::new(&s, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11]).unwrap();
        let w = complement_w(&t.canonical()).unwrap();
        let expected = LensTuple::residues(&s, &[10, 12]).unwrap().canonical();
        assert_eq!(w, expected);
        let back = complement_w(&w).unwrap();
        assert_eq!(back, t.canonical());

        let s = sys(14);
        let t = LensTuple::new(&s, &[1, 2, 4, 5, 7]).unwrap();
        let w = complement_w(&t.canonical()).unwrap();
        assert_eq!(w, LensTuple::residues(&s, &[3, 6]).unwrap().canonical());
    }

    #[test]
    fn complement_needs_room() {
        let s = sys(9);
        let t = LensTuple::new(&s, &[1, 2, 3, 4]).unwrap();
        assert!(complement_w(&t.canonical()).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |q: u64, n: usize| enumerate_classes(&sys(q), n).unwrap().len();
        let c = enumerate_classes(&sys(9), 2).unwrap();
        assert_eq!(c.iter().map(entries).collect::<Vec<_>>(), vec![vec![1, 2], vec![1, 3]]);
        assert_eq!(count(10, 3), 6);
        assert_eq!(count(15, 5), 7);
        assert_eq!(count(21, 8), 9);
        assert_eq!(count(25, 10), 8);
        assert_eq!(count(27, 11), 10);
        assert_eq!(count(35, 15), 14);
    }

    #[test]
    fn enumeration_range_is_checked() {
        assert!(enumerate_classes(&sys(9), 0).is_err());
        assert!(enumerate_classes(&sys(9), 4).is_err());
        assert_eq!(enumerate_classes(&sys(9), 3).unwrap().len(), 2);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(Combinations::new(3, 4).count(), 0);
        assert_eq!(Combinations::new(12, 3).count(), 220);
    }

    #[test]
    fn pair_bounds() {
        let lb = |q: u64| lower_bound::<i64>(&sys(q), sys(q).q0() as usize - 2);
        assert_eq!(lb(27), Ratio::new(26, 3));
        assert_eq!(lb(35), Ratio::new(34, 3));
        assert_eq!(lb(21), Ratio::new(15, 2));
        for q in [15u64, 21, 25, 27, 33, 35, 39, 49] {
            let s = sys(q);
            assert_eq!(
                pair_lower_bound::<BigInt>(&s).unwrap(),
                lower_bound::<BigInt>(&s, s.q0() as usize - 2),
                "q = {q}"
            );
        }
    }

    #[test]
    fn coarse_bound_is_weaker() {
        for q in [9u64, 15, 25, 27] {
            let s = sys(q);
            for n in 2..s.q0() as usize - 1 {
                let fine = lower_bound::<i64>(&s, n);
                let coarse = coarse_lower_bound::<i64>(&s, n);
                assert!(coarse <= fine, "q = {q}, n = {n}");
            }
        }
    }
}
