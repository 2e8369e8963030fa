//! JSON rendering. Integers of any size are emitted as exact JSON numbers;
//! rationals become `{"num": .., "den": ..}`.

use std::fmt::Display;
use std::str::FromStr;

use lens_spectra::spectra::{Certificate, Difference, InvariantData};
use lens_spectra::{CanonicalClass, CharPoly, Invariant, IsospectralFamily, Multiplicities, Rational};
use serde::Serialize;
use serde_json::{json, Number, Value};

#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub parameters: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub payload: Value,
}

#[derive(Debug, Serialize, PartialEq, Eq, Clone, Copy)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// An exact JSON number from any integer's decimal form.
pub fn int<T: Display>(x: &T) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers render as JSON numbers"))
}

pub fn ints<T: Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn rational(r: &Rational) -> Value {
    json!({ "num": int(r.numer()), "den": int(r.denom()) })
}

pub fn class(c: &CanonicalClass) -> Value {
    ints(c.entries())
}

pub fn polynomial(p: &CharPoly) -> Value {
    json!({
        "set": p.label(),
        "coefficients": ints(p.coefficients()),
        "display": p.to_string(),
    })
}

pub fn invariant(inv: &Invariant) -> Value {
    match inv.data() {
        InvariantData::Polynomials(polys) => json!({
            "kind": "polynomials",
            "q": inv.q(),
            "n": inv.n(),
            "polynomials": polys.iter().map(polynomial).collect::<Vec<_>>(),
        }),
        InvariantData::Prefix(values) => json!({
            "kind": "prefix",
            "q": inv.q(),
            "n": inv.n(),
            "multiplicities": ints(values),
        }),
    }
}

pub fn spectrum(m: &Multiplicities) -> Value {
    Value::Array(
        m.values()
            .iter()
            .enumerate()
            .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
            .map(|(k, v)| json!({ "k": k, "eigenvalue": m.eigenvalue(k), "multiplicity": int(v) }))
            .collect(),
    )
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::DifferentModulus { left, right } => json!({
            "kind": "different-modulus",
            "left_q": left,
            "right_q": right,
        }),
        Certificate::Invariant { left, right, difference } => json!({
            "kind": "invariant",
            "left": invariant(left),
            "right": invariant(right),
            "first_difference": difference.as_ref().map(|d| match d {
                Difference::Set(label) => json!({ "set": label }),
                Difference::Index(k) => json!({ "k": k }),
            }),
        }),
        Certificate::Series { depth, left, right, difference } => json!({
            "kind": "series",
            "depth": depth,
            "first_difference": difference.map(|k| json!({ "k": k })),
            "left": ints(left.values()),
            "right": ints(right.values()),
        }),
    }
}

pub fn family(f: &IsospectralFamily) -> Value {
    json!({
        "size": f.members.len(),
        "members": f.members.iter().map(class).collect::<Vec<_>>(),
        "verified_to": f.verified_to,
        "invariant": invariant(&f.invariant),
    })
}

pub fn entries_field(entries: &[u64]) -> String {
    entries.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}
