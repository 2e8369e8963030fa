//! Regression fixtures for the worked examples and counting claims of the
//! source material. Each fixture states its expected value literally; a
//! fixture fails rather than adapting when the computation disagrees.

use std::sync::Arc;

use lens_spectra::spectra::{character_polynomial_of, InvariantData};
use lens_spectra::{
    canonicalize, complement_w, enumerate_classes, find_families, is_isometric, is_isospectral,
    lower_bound, multiplicities, pattern, realized_pattern_count, singular_signature,
    spectral_invariant, sufficiency_check, CharPoly, Invariant, LensTuple, Method, Natural,
    Rational, ResidueSet, ResidueSystem, Verdict,
};
use num_bigint::BigInt;

pub struct Fixture {
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

fn sys(q: u64) -> Result<Arc<ResidueSystem>, String> {
    ResidueSystem::new(q).map(Arc::new).map_err(|e| e.to_string())
}

fn tuple(q: u64, entries: &[i64]) -> Result<LensTuple, String> {
    LensTuple::new(&sys(q)?, entries).map_err(|e| e.to_string())
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn polys(q: u64, entries: &[i64]) -> Result<Vec<Vec<i64>>, String> {
    let inv: Invariant = spectral_invariant(&tuple(q, entries)?);
    match inv.data() {
        InvariantData::Polynomials(ps) => Ok(ps
            .iter()
            .map(|p| p.coefficients().iter().map(|c| i64::try_from(c).unwrap()).collect())
            .collect()),
        InvariantData::Prefix(_) => Err("no polynomial invariant".into()),
    }
}

fn check_polys(q: u64, entries: &[i64], want: &[&[i64]]) -> Result<(), String> {
    let want: Vec<Vec<i64>> = want.iter().map(|p| p.to_vec()).collect();
    expect(&format!("polynomials of L({q}: {entries:?})"), polys(q, entries)?, want)
}

fn pair_poly(q: u64, pair: [u64; 2], set: ResidueSet) -> Result<Vec<i64>, String> {
    let p: CharPoly = character_polynomial_of(&*sys(q)?, &pair, set);
    Ok(p.coefficients().iter().map(|c| i64::try_from(c).unwrap()).collect())
}

/// All members of `family` lie in one search result of exactly `size`.
fn check_family(q: u64, n: usize, family: &[&[i64]], size: usize) -> Result<(), String> {
    let s = sys(q)?;
    let want: Vec<_> = family
        .iter()
        .map(|m| tuple(q, m).map(|t| canonicalize(&t)))
        .collect::<Result<_, _>>()?;
    let found = find_families(&s, n).map_err(|e| e.to_string())?;
    let hit = found
        .iter()
        .find(|f| want.iter().all(|w| f.members.contains(w)))
        .ok_or_else(|| format!("no family of L({q}, n = {n}) contains all {} members", want.len()))?;
    expect("family size", hit.members.len(), size)
}

fn isospectral(q: u64, a: &[i64], b: &[i64]) -> Result<(), String> {
    let (a, b) = (tuple(q, a)?, tuple(q, b)?);
    for method in [Method::Invariant, Method::Series] {
        let v: Verdict = is_isospectral(&a, &b, method, None).map_err(|e| e.to_string())?;
        expect(&format!("{a} ~ {b} by {method:?}"), v.isospectral, true)?;
    }
    expect("isometric", is_isometric(&a, &b).map_err(|e| e.to_string())?, false)
}

fn no_families(q: u64, n: usize) -> Result<(), String> {
    let found = find_families(&sys(q)?, n).map_err(|e| e.to_string())?;
    expect(&format!("families for q = {q}, n = {n}"), found.len(), 0)
}

fn class_count(q: u64, n: usize, want: usize) -> Result<(), String> {
    let got = enumerate_classes(&sys(q)?, n).map_err(|e| e.to_string())?.len();
    expect(&format!("classes for q = {q}, n = {n}"), got, want)
}

fn bound(q: u64, num: i64, den: i64) -> Result<(), String> {
    let s = sys(q)?;
    let n = s.q0() as usize - 2;
    expect(
        &format!("lower bound for q = {q}"),
        lower_bound::<BigInt>(&s, n),
        Rational::new(num.into(), den.into()),
    )
}

fn realized(q: u64, want: usize) -> Result<(), String> {
    let got = realized_pattern_count(&sys(q)?).map_err(|e| e.to_string())?;
    expect(&format!("realized patterns for q = {q}"), got, want)
}

fn singular(q: u64, entries: &[i64], want: &[(u64, usize, usize)]) -> Result<(), String> {
    let sig = singular_signature(&tuple(q, entries)?);
    let got: Vec<_> = sig.strata.iter().map(|s| (s.d, s.count, s.sphere_dim)).collect();
    expect(&format!("signature of L({q}: {entries:?})"), got, want.to_vec())
}

const Q25_L1: &[i64] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11];
const Q25_L2: &[i64] = &[1, 2, 3, 4, 6, 7, 8, 9, 10, 11];
const Q14_L1: &[i64] = &[1, 2, 4, 5, 7];
const Q14_L2: &[i64] = &[1, 4, 5, 6, 7];
const Q35_L1: &[i64] = &[1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17];
const Q35_L2: &[i64] = &[1, 2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17];

pub fn all() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "residues-q25",
            run: || {
                let s = sys(25)?;
                expect("|A|", s.units().len(), 20)?;
                expect("B1", s.members(ResidueSet::Stratum { gcd: 5 }).to_vec(), vec![5, 10, 15, 20])?;
                expect("r", s.r(), 2)
            },
        },
        Fixture {
            name: "residues-q14",
            run: || {
                let s = sys(14)?;
                expect("A", s.units().to_vec(), vec![1, 3, 5, 9, 11, 13])?;
                expect("B", s.members(ResidueSet::Stratum { gcd: 2 }).to_vec(), vec![2, 4, 6, 8, 10, 12])?;
                expect("C", s.members(ResidueSet::Stratum { gcd: 7 }).to_vec(), vec![7])?;
                expect("r", s.r(), 4)
            },
        },
        Fixture {
            name: "residues-q21",
            run: || {
                let s = sys(21)?;
                expect("B", s.members(ResidueSet::Stratum { gcd: 3 }).to_vec(), vec![3, 6, 9, 12, 15, 18])?;
                expect("C", s.members(ResidueSet::Stratum { gcd: 7 }).to_vec(), vec![7, 14])
            },
        },
        Fixture {
            name: "character-sums-q25",
            run: || {
                let s = sys(25)?;
                let b1 = ResidueSet::Stratum { gcd: 5 };
                expect("A, m = 1", s.character_sum(ResidueSet::Units, 1), 0)?;
                expect("B1, m = 1", s.character_sum(b1, 1), -1)?;
                expect("A, m = 5", s.character_sum(ResidueSet::Units, 5), -5)?;
                expect("B1, m = 5", s.character_sum(b1, 5), 4)
            },
        },
        Fixture {
            name: "canonical-q9",
            run: || expect("class of (1,3)", canonicalize(&tuple(9, &[1, 3])?).entries().to_vec(), vec![1, 3]),
        },
        Fixture {
            name: "isometry-q25-pair",
            run: || {
                let got = is_isometric(&tuple(25, Q25_L1)?, &tuple(25, Q25_L2)?).map_err(|e| e.to_string())?;
                expect("isometric", got, false)
            },
        },
        Fixture {
            name: "complement-q14",
            run: || {
                let w = complement_w(&canonicalize(&tuple(14, Q14_L1)?)).map_err(|e| e.to_string())?;
                let s = sys(14)?;
                let want = canonicalize(&LensTuple::residues(&s, &[3, 6]).map_err(|e| e.to_string())?);
                expect("complement", w, want)
            },
        },
        Fixture { name: "classes-q9", run: || class_count(9, 2, 2) },
        Fixture { name: "classes-q10", run: || class_count(10, 3, 6) },
        Fixture { name: "classes-q8", run: || class_count(8, 2, 4) },
        Fixture { name: "classes-q16", run: || class_count(16, 6, 9) },
        Fixture { name: "classes-q32", run: || class_count(32, 14, 16) },
        Fixture { name: "lower-bound-q27", run: || bound(27, 26, 3) },
        Fixture { name: "lower-bound-q35", run: || bound(35, 34, 3) },
        Fixture { name: "lower-bound-q21", run: || bound(21, 15, 2) },
        Fixture {
            name: "pair-polynomials-q25",
            run: || {
                let (a, b1) = (ResidueSet::Units, ResidueSet::Stratum { gcd: 5 });
                expect("psi (5,10)", pair_poly(25, [5, 10], a)?, vec![20, 20, 20, 20, 20])?;
                expect("alpha (5,10)", pair_poly(25, [5, 10], b1)?, vec![4, -16, 24, -16, 4])?;
                expect("psi (10,12)", pair_poly(25, [10, 12], a)?, vec![20, 10, 40, 10, 20])?;
                expect("alpha (10,12)", pair_poly(25, [10, 12], b1)?, vec![4, -6, 4, -6, 4])
            },
        },
        Fixture {
            name: "pair-polynomials-q14",
            run: || {
                expect("psi (3,6)", pair_poly(14, [3, 6], ResidueSet::Units)?, vec![6, 0, 16, 0, 6])?;
                expect("beta (3,6)", pair_poly(14, [3, 6], ResidueSet::Stratum { gcd: 7 })?, vec![1, 0, -2, 0, 1])
            },
        },
        Fixture {
            name: "polynomials-q25-k2",
            run: || {
                check_polys(25, &[1, 2, 3, 4, 6, 7, 8, 9, 11, 12], &[&[20, 20, 20, 20, 20], &[4, -16, 24, -16, 4]])?;
                check_polys(25, Q25_L1, &[&[20, 10, 40, 10, 20], &[4, -6, 4, -6, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10], &[&[20, 0, 40, 0, 20], &[4, 4, 4, 4, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 5, 6, 7, 9, 10, 11], &[&[20, 0, 30, 0, 20], &[4, 4, 14, 4, 4]])
            },
        },
        Fixture {
            name: "polynomials-q27",
            run: || {
                check_polys(
                    27,
                    &[1, 2, 4, 5, 6, 7, 9, 10, 11, 12, 13],
                    &[&[18, 0, 36, 0, 18], &[6, 6, 12, 6, 6], &[2, -2, 0, -2, 2]],
                )?;
                check_polys(
                    27,
                    &[1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13],
                    &[&[18, 0, 36, 0, 18], &[6, 0, 6, 0, 6], &[2, 4, 6, 4, 2]],
                )
            },
        },
        Fixture {
            name: "polynomials-q35",
            run: || {
                check_polys(35, Q35_L1, &[&[24, 6, 52, 6, 24], &[6, 4, 8, 4, 6], &[4, -6, 4, -6, 4]])?;
                check_polys(
                    35,
                    &[1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17],
                    &[&[24, -4, 52, -4, 24], &[6, 4, 8, 4, 6], &[4, 4, 4, 4, 4]],
                )?;
                check_polys(
                    35,
                    &[1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17],
                    &[&[24, -4, 42, -4, 24], &[6, 4, 8, 4, 6], &[4, 4, 14, 4, 4]],
                )
            },
        },
        Fixture {
            name: "polynomials-q14",
            run: || check_polys(14, Q14_L1, &[&[6, 0, 16, 0, 6], &[6, 4, 8, 4, 6], &[1, 0, -2, 0, 1]]),
        },
        Fixture {
            name: "polynomials-q25-k3",
            run: || {
                check_polys(25, &[1, 4, 5, 6, 7, 8, 9, 10, 11], &[&[20, 0, 30, 0, 30, 0, 20], &[4, 6, 30, 20, 30, 6, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 5, 6, 7, 8, 10], &[&[20, 0, 50, 10, 50, 0, 20], &[4, 6, 10, 10, 10, 6, 4]])?;
                check_polys(25, &[1, 3, 4, 5, 6, 7, 8, 9, 10], &[&[20, 0, 50, -40, 50, 0, 20], &[4, 6, 10, 10, 10, 6, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 5, 6, 7, 8, 9], &[&[20, 10, 60, 20, 60, 10, 20], &[4, -4, 0, 0, 0, -4, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 5, 6, 7, 8, 12], &[&[20, 10, 50, 40, 50, 10, 20], &[4, -4, 10, -20, 10, -4, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 6, 7, 8, 10, 12], &[&[20, 10, 50, -10, 50, 10, 20], &[4, -4, 10, -20, 10, -4, 4]])?;
                check_polys(25, &[1, 2, 3, 4, 6, 7, 8, 9, 11], &[&[20, 20, 40, 40, 40, 20, 20], &[4, -14, 20, -20, 20, -14, 4]])
            },
        },
        Fixture {
            name: "invariant-q9-distinct",
            run: || {
                let a: Invariant = spectral_invariant(&tuple(9, &[1, 2])?);
                let b: Invariant = spectral_invariant(&tuple(9, &[1, 3])?);
                expect("equal invariants", a == b, false)
            },
        },
        Fixture { name: "isospectral-q25-pair", run: || isospectral(25, Q25_L1, Q25_L2) },
        Fixture { name: "isospectral-q14-pair", run: || isospectral(14, Q14_L1, Q14_L2) },
        Fixture { name: "isospectral-q35-pair", run: || isospectral(35, Q35_L1, Q35_L2) },
        Fixture {
            name: "extension-keeps-q14-pair",
            run: || {
                let a = multiplicities::<Natural>(&tuple(14, Q14_L1)?, 132, 0);
                let b = multiplicities::<Natural>(&tuple(14, Q14_L2)?, 132, 0);
                (0..=6).try_for_each(|w| expect(&format!("W = {w}"), a.extend_w(w) == b.extend_w(w), true))
            },
        },
        Fixture { name: "singular-q25-manifold", run: || singular(25, &[1, 2, 3, 4, 6, 7, 8, 9, 11, 12], &[]) },
        Fixture { name: "singular-q25-pair", run: || singular(25, Q25_L1, &[(5, 1, 1)]) },
        Fixture { name: "singular-q14", run: || singular(14, Q14_L1, &[(2, 2, 3), (7, 1, 1)]) },
        Fixture {
            name: "families-q25-k2",
            run: || {
                check_family(25, 10, &[Q25_L1, Q25_L2], 2)?;
                check_family(
                    25,
                    10,
                    &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10], &[1, 2, 3, 4, 5, 6, 7, 8, 10, 11], &[1, 2, 3, 4, 5, 6, 7, 10, 11, 12]],
                    3,
                )?;
                check_family(25, 10, &[&[1, 2, 3, 4, 5, 6, 7, 9, 10, 11]], 2)
            },
        },
        Fixture {
            name: "families-q27",
            run: || {
                check_family(
                    27,
                    11,
                    &[&[1, 2, 4, 5, 6, 7, 9, 10, 11, 12, 13], &[1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13], &[1, 2, 5, 6, 7, 8, 9, 10, 11, 12, 13]],
                    3,
                )?;
                check_family(
                    27,
                    11,
                    &[&[1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13], &[1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13], &[1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13]],
                    3,
                )
            },
        },
        Fixture {
            name: "families-q35",
            run: || {
                check_family(35, 15, &[Q35_L1, Q35_L2], 2)?;
                check_family(
                    35,
                    15,
                    &[&[1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17], &[1, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17]],
                    2,
                )?;
                check_family(
                    35,
                    15,
                    &[&[1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17], &[1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17]],
                    2,
                )
            },
        },
        Fixture { name: "families-q14", run: || check_family(14, 5, &[Q14_L1, Q14_L2], 2) },
        Fixture {
            name: "families-q25-k3",
            run: || {
                check_family(
                    25,
                    9,
                    &[
                        &[1, 2, 3, 4, 5, 6, 7, 8, 10],
                        &[1, 2, 3, 4, 5, 6, 7, 9, 10],
                        &[1, 2, 3, 4, 5, 6, 8, 9, 10],
                        &[1, 2, 3, 4, 5, 7, 8, 9, 10],
                        &[1, 2, 4, 5, 6, 7, 8, 9, 10],
                        &[1, 4, 5, 6, 7, 8, 9, 10, 12],
                        &[1, 3, 5, 6, 7, 9, 10, 11, 12],
                        &[1, 2, 5, 6, 7, 8, 9, 10, 12],
                    ],
                    8,
                )?;
                check_family(
                    25,
                    9,
                    &[
                        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
                        &[1, 2, 3, 4, 5, 6, 7, 8, 11],
                        &[1, 2, 3, 4, 5, 6, 7, 9, 12],
                        &[1, 3, 5, 6, 7, 8, 9, 11, 12],
                        &[1, 2, 4, 5, 6, 7, 8, 9, 12],
                    ],
                    5,
                )
            },
        },
        Fixture { name: "no-families-q9", run: || no_families(9, 2) },
        Fixture { name: "no-families-q10", run: || no_families(10, 3) },
        Fixture { name: "no-families-q8", run: || no_families(8, 2) },
        Fixture { name: "no-families-q16", run: || no_families(16, 6) },
        Fixture { name: "no-families-q32", run: || no_families(32, 14) },
        Fixture { name: "no-families-q15", run: || no_families(15, 5) },
        Fixture { name: "no-families-q21", run: || no_families(21, 8) },
        Fixture {
            name: "patterns-q25-q14",
            run: || {
                let s = sys(25)?;
                let show = |s: &ResidueSystem, a, b| pattern(s, a, b).map(|p| p.display(s).to_string());
                expect("(5,10)", show(&s, 5, 10).map_err(|e| e.to_string())?, "{B1, B1}, {B1, B1}".into())?;
                expect("(10,12)", show(&s, 10, 12).map_err(|e| e.to_string())?, "{A, B1}, {A, A}".into())?;
                let s = sys(14)?;
                expect("(3,6)", show(&s, 3, 6).map_err(|e| e.to_string())?, "{A, B}, {A, A}".into())
            },
        },
        Fixture { name: "realized-patterns-q21", run: || realized(21, 9) },
        Fixture { name: "realized-patterns-q15", run: || realized(15, 7) },
        Fixture { name: "realized-patterns-q27", run: || realized(27, 7) },
        Fixture { name: "realized-patterns-q35", run: || realized(35, 10) },
        Fixture {
            name: "sufficiency",
            run: || {
                let r = sufficiency_check(&*sys(33)?).map_err(|e| e.to_string())?;
                expect("q = 33", (r.lhs, r.rhs, r.satisfied), (144, 144, true))?;
                let r = sufficiency_check(&*sys(39)?).map_err(|e| e.to_string())?;
                expect("q = 39", (r.lhs, r.rhs, r.satisfied), (114, 168, true))?;
                let r = sufficiency_check(&*sys(35)?).map_err(|e| e.to_string())?;
                expect("q = 35 satisfied", r.satisfied, false)
            },
        },
    ]
}
