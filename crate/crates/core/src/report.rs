//! Serde helpers: rationals are written as `"p/q"` strings, never as decimals.

use crate::arith::{format_rational, Q};
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn ser_q<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

pub fn ser_q_vec<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&format_rational(x))?;
    }
    seq.end()
}

pub fn ser_q_opt<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&format_rational(v)),
        None => s.serialize_none(),
    }
}
