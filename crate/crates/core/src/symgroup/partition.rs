use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{malformed, Error, Result};

/// Largest `n` accepted by [`partitions_of`] unless a limit is passed.
pub const DEFAULT_MAX_PARTITION_N: usize = 8;

/// Integer partition, parts weakly decreasing and positive.
///
/// Ordered so that the canonical listing `(3), (2,1), (1,1,1)` is ascending
/// (reverse lexicographic on parts).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(malformed("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(malformed(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts decreasingly and drops zeros.
    pub fn from_composition(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// `n(λ) = Σ (i - 1) λ_i`, the dimension of the Springer fiber.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `n! / ∏ λ_j!`.
    pub fn multinomial(&self) -> u128 {
        let mut out: u128 = 1;
        let mut seen = 0u128;
        for &p in &self.parts {
            for i in 1..=p as u128 {
                seen += 1;
                out = out * seen / i;
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| malformed(format!("invalid partition part `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in canonical order, guarded by
/// [`DEFAULT_MAX_PARTITION_N`].
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_with_limit(n, DEFAULT_MAX_PARTITION_N)
}

pub fn partitions_of_with_limit(n: usize, limit: usize) -> Result<Vec<Partition>> {
    if n > limit {
        return Err(Error::Guardrail {
            what: "partition size n",
            value: n,
            limit,
        });
    }
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_listings() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3).unwrap(),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
    }

    #[test]
    fn counts_match_brute_force() {
        // brute force: nonincreasing sequences from all compositions
        fn compositions(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            (1..=n)
                .flat_map(|k| {
                    compositions(n - k).into_iter().map(move |mut c| {
                        c.insert(0, k);
                        c
                    })
                })
                .collect()
        }
        for n in 0..=8 {
            let brute = compositions(n)
                .into_iter()
                .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
                .count();
            assert_eq!(partitions_of(n).unwrap().len(), brute);
        }
        assert_eq!(partitions_of(6).unwrap().len(), 11);
    }

    #[test]
    fn guardrail_names_the_limit() {
        let err = partitions_of(9).unwrap_err();
        assert!(err.to_string().contains('8'), "{err}");
    }

    #[test]
    fn listing_is_sorted_and_unique() {
        let ps = partitions_of(7).unwrap();
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_and_display() {
        let l: Partition = "3,2,1".parse().unwrap();
        assert_eq!(l, p(&[3, 2, 1]));
        assert_eq!(l.to_string(), "3,2,1");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn statistics() {
        let l = p(&[3, 1, 1]);
        assert_eq!(l.conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(l.n_statistic(), 3);
        assert_eq!(Partition::column(4).n_statistic(), 6);
        assert_eq!(l.multinomial(), 20);
        assert_eq!(Partition::column(6).multinomial(), 720);
    }
}
