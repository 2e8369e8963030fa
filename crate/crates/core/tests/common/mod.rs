//! Independent oracles shared by the integration tests. None of them reuse
//! the library's counting or summation code.
#![allow(dead_code)]

use std::f64::consts::PI;
use std::sync::Arc;

use lens_spectra::{LensTuple, ResidueSystem};
use num_complex::Complex64;

pub fn sys(q: u64) -> Arc<ResidueSystem> {
    Arc::new(ResidueSystem::new(q).expect("supported modulus"))
}

pub fn tuple(q: u64, entries: &[i64]) -> LensTuple {
    LensTuple::new(&sys(q), entries).expect("valid tuple")
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `sum_{l in members} exp(2 pi i m l / q)` in double precision.
pub fn float_character_sum(q: u64, members: &[u64], m: i64) -> f64 {
    members
        .iter()
        .map(|&l| Complex64::from_polar(1.0, 2.0 * PI * (m as f64) * (l as f64) / q as f64))
        .sum::<Complex64>()
        .re
}

/// Number of exponent vectors of exact total degree `d` over `weights`
/// (plus `zeros` weight-zero slots) whose weighted sum vanishes mod `q`.
pub fn brute_invariant_dim(q: u64, weights: &[u64], zeros: usize, d: usize) -> u64 {
    fn go(q: u64, weights: &[u64], zeros: usize, left: usize, residue: u64) -> u64 {
        match weights.split_first() {
            None => {
                if residue != 0 {
                    return 0;
                }
                // distribute `left` among `zeros` slots
                if zeros == 0 {
                    return (left == 0) as u64;
                }
                binom(left + zeros - 1, zeros - 1)
            }
            Some((&w, rest)) => (0..=left)
                .map(|e| go(q, rest, zeros, left - e, (residue + e as u64 * w) % q))
                .sum(),
        }
    }
    go(q, weights, zeros, d, 0)
}

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `dim P^k_G - dim P^(k-2)_G` by exhaustive enumeration.
pub fn brute_multiplicity(q: u64, entries: &[u64], zeros: usize, k: usize) -> u64 {
    let weights: Vec<u64> = entries.iter().flat_map(|&p| [p % q, (q - p % q) % q]).collect();
    let top = brute_invariant_dim(q, &weights, zeros, k);
    let below = if k >= 2 {
        brute_invariant_dim(q, &weights, zeros, k - 2)
    } else {
        0
    };
    top - below
}

/// Taylor coefficients up to `z^max_k` of
/// `(1/q) sum_l (1 - z^2) / prod_i (1 - g^(p_i l) z)(1 - g^(-p_i l) z)`.
pub fn float_generating_series(q: u64, entries: &[u64], max_k: usize) -> Vec<f64> {
    let len = max_k + 1;
    let mut total = vec![Complex64::new(0.0, 0.0); len];
    for l in 0..q {
        let mut series = vec![Complex64::new(0.0, 0.0); len];
        series[0] = Complex64::new(1.0, 0.0);
        if len > 2 {
            series[2] = Complex64::new(-1.0, 0.0);
        }
        for &p in entries {
            for sign in [1.0, -1.0] {
                let a = Complex64::from_polar(1.0, sign * 2.0 * PI * ((p * l) % q) as f64 / q as f64);
                // multiply by 1 / (1 - a z)
                for j in 1..len {
                    let prev = series[j - 1];
                    series[j] += a * prev;
                }
            }
        }
        for (t, s) in total.iter_mut().zip(series) {
            *t += s;
        }
    }
    total.into_iter().map(|c| c.re / q as f64).collect()
}

/// Isometry by exhaustive search over units and signed permutations, for
/// multisets that may include zero entries.
pub fn brute_isometric(q: u64, a: &[u64], b: &[u64]) -> bool {
    let norm = |v: &[u64], l: u64| {
        let mut out: Vec<u64> = v
            .iter()
            .map(|&x| {
                let r = x * l % q;
                r.min(q - r)
            })
            .collect();
        out.sort();
        out
    };
    let target = norm(b, 1);
    (1..q).filter(|&l| gcd(l, q) == 1).any(|l| norm(a, l) == target)
}

/// Supported moduli (`q >= 7`, not prime) up to `max`.
pub fn supported_moduli(max: u64) -> Vec<u64> {
    (7..=max)
        .filter(|&q| (2..q).any(|d| q % d == 0))
        .collect()
}
