//! Serde helpers: rationals travel as exact strings such as `"3/2"` or `"-1"`.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactalg::Rational;
use crate::symgroup::Partition;

pub fn rational_to_string(x: &Rational) -> String {
    x.to_string()
}

pub fn rational_from_str(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}

pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational_from_str(&s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
    }
}

/// `Vec<BTreeMap<Partition, Rational>>` as an array of objects keyed by
/// cycle type.
pub mod graded_class_values {
    use super::*;

    struct ByClass<'a>(&'a BTreeMap<Partition, Rational>);

    impl Serialize for ByClass<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_map(self.0.iter().map(|(k, x)| (k.to_string(), rational_to_string(x))))
        }
    }

    pub fn serialize<S: Serializer>(
        v: &[BTreeMap<Partition, Rational>],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ByClass))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<BTreeMap<Partition, Rational>>, D::Error> {
        let raw: Vec<BTreeMap<String, String>> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|(k, x)| {
                        let key: Partition = k.parse().map_err(D::Error::custom)?;
                        let val = rational_from_str(&x)
                            .ok_or_else(|| D::Error::custom(format!("invalid rational `{x}`")))?;
                        Ok((key, val))
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Wrap {
        #[serde(with = "rational_string")]
        x: Rational,
    }

    #[test]
    fn rational_round_trip() {
        for x in [rational(0), rational(-4), Rational::new(3.into(), 2.into())] {
            let w = Wrap { x };
            let s = serde_json::to_string(&w).unwrap();
            assert_eq!(serde_json::from_str::<Wrap>(&s).unwrap(), w);
        }
        let s = serde_json::to_string(&Wrap { x: Rational::new(6.into(), 4.into()) }).unwrap();
        assert_eq!(s, r#"{"x":"3/2"}"#);
        assert!(serde_json::from_str::<Wrap>(r#"{"x":"1.5"}"#).is_err());
    }
}
