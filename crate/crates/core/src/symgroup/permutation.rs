use std::fmt;

use super::Partition;
use crate::error::{malformed, Result};

/// Permutation of `{0, .., n-1}` stored in one-line notation.
///
/// Displayed 1-based. Composition follows functions: `(a ∘ b)(i) = a(b(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(malformed(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images })
    }

    /// From 1-based one-line notation, e.g. `[3, 1, 2]`.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(malformed("one-line notation is 1-based"));
        }
        Self::from_images(one_based.iter().map(|&i| i - 1).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self { images }
    }

    /// `s_i`, swapping `i` and `i + 1` (0-based).
    pub fn adjacent(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` (0-based points).
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &a) in c.iter().enumerate() {
            images[a] = c[(k + 1) % c.len()];
        }
        Self { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_composition(lens)
    }

    /// A fixed representative of the class: consecutive cycles of the
    /// given lengths, `(1 .. λ1)(λ1+1 .. λ1+λ2)...`.
    pub fn with_cycle_type(cycle_type: &Partition) -> Self {
        let n = cycle_type.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Self { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: cur.clone(),
    }];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation {
            images: cur.clone(),
        });
    }
}
