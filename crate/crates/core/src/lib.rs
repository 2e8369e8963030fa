//! Exact spectral geometry of orbifold lens spaces `L(q: p_1, ..., p_n)`.
//!
//! The crate computes Laplace multiplicities by lattice counting, decides
//! isometry through canonical forms under the unit group, decides
//! isospectrality through character polynomials of the complement tuple,
//! and searches exhaustively for isospectral non-isometric families.
//!
//! Spectral code is generic over its scalars ([`Count`] for multiplicities,
//! [`Coefficient`] for polynomial coefficients); the aliases below fix the
//! arbitrary-precision choices used by default.
//!
//! ```
//! use std::sync::Arc;
//! use lens_spectra::{find_families, ResidueSystem};
//!
//! let system = Arc::new(ResidueSystem::new(14).unwrap());
//! let families = find_families(&system, 5).unwrap();
//! assert_eq!(families[0].members.len(), 2);
//! ```

pub mod arith;
pub mod classes;
pub mod error;
pub mod geometry;
pub mod group_ring;
pub mod residues;
pub mod scalar;
pub mod search;
pub mod spectra;

pub use classes::{
    canonicalize, complement_tuple, complement_w, enumerate_classes, is_isometric, lower_bound,
    pair_lower_bound, CanonicalClass, LensTuple,
};
pub use error::{Error, Result};
pub use geometry::{singular_signature, SingularSignature, SingularStratum};
pub use residues::{fold, Location, ResidueSet, ResidueSystem, Shape};
pub use scalar::{Coefficient, Count};
pub use search::{
    find_families, pattern, pattern_bound, realized_pattern_count, sufficiency_check,
    ExpressionPattern, IsospectralFamily, SufficiencyRecord,
};
pub use spectra::{
    character_polynomial, eigenvalue, is_isospectral, multiplicities, multiplicity, series_depth,
    spectral_invariant, spectrum, Method,
};

pub type Integer = num_bigint::BigInt;
pub type Natural = num_bigint::BigUint;
pub type Rational = num_rational::Ratio<Integer>;

pub type CharPoly = spectra::CharacterPolynomial<Integer>;
pub type Invariant = spectra::SpectralInvariant<Integer, Natural>;
pub type Multiplicities = spectra::MultiplicitySequence<Natural>;
pub type Verdict = spectra::Isospectrality<Integer, Natural>;
