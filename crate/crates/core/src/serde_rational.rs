//! Rationals serialize as `"p/q"` strings (or `"p"` for integers).

use std::str::FromStr;

use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

use crate::Rational;

pub fn to_string(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = num_bigint::BigInt::from_str(n.trim()).map_err(|e| e.to_string())?;
        let d = num_bigint::BigInt::from_str(d.trim()).map_err(|e| e.to_string())?;
        if d == num_bigint::BigInt::from(0) {
            return Err(format!("zero denominator in {s}"));
        }
        Ok(Rational::new(n, d))
    } else {
        let n = num_bigint::BigInt::from_str(t).map_err(|e| e.to_string())?;
        Ok(Rational::from_integer(n))
    }
}

pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_string(q))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).map_err(D::Error::custom)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&to_string(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse(s).map_err(D::Error::custom))
            .collect()
    }
}

pub mod matrix {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(m.len()))?;
        for row in m {
            let strs: Vec<String> = row.iter().map(to_string).collect();
            seq.serialize_element(&strs)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        raw.iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse(s).map_err(D::Error::custom))
                    .collect()
            })
            .collect()
    }
}
