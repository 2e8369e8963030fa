//! Singular strata of a lens space.
//!
//! The subgroup of order `d` is generated by `g^(q/d)`, which rotates the
//! `i`-th complex coordinate by `2 pi p_i / d`. It fixes exactly the
//! coordinates with `d | p_i`, so its fixed set is a great sphere of
//! dimension `2 c_d - 1`, `c_d = #{i : d | p_i}`.

use std::fmt;

use serde::Serialize;

use crate::arith::divisors;
use crate::classes::LensTuple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SingularStratum {
    /// Order of the isotropy group.
    pub d: u64,
    /// Number of entries divisible by `d`.
    pub count: usize,
    pub sphere_dim: usize,
    /// The isotropy group is generated by `g^generator_power`.
    pub generator_power: u64,
}

/// One record per divisor `d > 1` of `q` with a non-trivial fixed set.
/// Empty exactly for manifolds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SingularSignature {
    pub q: u64,
    pub strata: Vec<SingularStratum>,
}

impl SingularSignature {
    pub fn is_manifold(&self) -> bool {
        self.strata.is_empty()
    }
}

impl fmt::Display for SingularSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strata.is_empty() {
            return write!(f, "manifold");
        }
        for (i, s) in self.strata.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "S^{} fixed by <g^{}> (order {})", s.sphere_dim, s.generator_power, s.d)?;
        }
        Ok(())
    }
}

pub fn singular_signature(t: &LensTuple) -> SingularSignature {
    let q = t.q();
    let strata = divisors(q)
        .into_iter()
        .filter(|&d| d > 1)
        .filter_map(|d| {
            let count = t.entries().iter().filter(|&&p| p % d == 0).count();
            (count > 0).then(|| SingularStratum {
                d,
                count,
                sphere_dim: 2 * count - 1,
                generator_power: q / d,
            })
        })
        .collect();
    SingularSignature { q, strata }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residues::ResidueSystem;
    use std::sync::Arc;

    fn tuple(q: u64, v: &[i64]) -> LensTuple {
        LensTuple::new(&Arc::new(ResidueSystem::new(q).unwrap()), v).unwrap()
    }

    fn triples(s: &SingularSignature) -> Vec<(u64, usize, usize)> {
        s.strata.iter().map(|x| (x.d, x.count, x.sphere_dim)).collect()
    }

    #[test]
    fn q14_has_two_strata() {
        let s = singular_signature(&tuple(14, &[1, 2, 4, 5, 7]));
        assert_eq!(triples(&s), vec![(2, 2, 3), (7, 1, 1)]);
        assert_eq!(s.strata[0].generator_power, 7);
        assert_eq!(s.strata[1].generator_power, 2);
    }

    #[test]
    fn unit_tuples_are_manifolds() {
        let s = singular_signature(&tuple(25, &[1, 2, 3, 4, 6, 7, 8, 9, 11, 12]));
        assert!(s.is_manifold());
        assert_eq!(s.to_string(), "manifold");
    }

    #[test]
    fn folding_does_not_change_divisibility() {
        let a = singular_signature(&tuple(25, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11]));
        let b = singular_signature(&tuple(25, &[-1, 2, 3, 4, 20, 6, 7, 8, 9, 11]));
        assert_eq!(a, b);
        assert_eq!(triples(&a), vec![(5, 1, 1)]);
    }
}
