use std::collections::HashMap;

use super::{Partition, Permutation};
use crate::error::{malformed, Result};

/// The word model of the torus-fixed points of a Springer fiber.
///
/// One word per coset of the Young subgroup `W_λ`: words of length `n` in
/// which letter `j` occurs `λ_j` times, sorted lexicographically. Letters are
/// stored 0-based, so letter `j` names the variable `z_{j+1}`.
#[derive(Debug, Clone)]
pub struct FixedPointSet {
    lambda: Partition,
    words: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl FixedPointSet {
    pub fn new(lambda: &Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(malformed("the fixed-point set needs a nonempty partition"));
        }
        let mut cur: Vec<u8> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(j, &m)| std::iter::repeat_n(j as u8, m))
            .collect();
        let n = cur.len();
        let mut words = vec![cur.clone()];
        // next multiset permutation in lexicographic order
        while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            words.push(cur.clone());
        }
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Ok(Self {
            lambda: lambda.clone(),
            words,
            index,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Number of letters, i.e. of torus coordinates `z_1..z_k`.
    pub fn letters(&self) -> usize {
        self.lambda.len()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Word displayed with 1-based letters, e.g. `112`.
    pub fn word_label(&self, i: usize) -> String {
        self.words[i].iter().map(|&c| (c + 1).to_string()).collect()
    }

    /// Number of words fixed by `ω ↦ ω ∘ w`.
    pub fn fixed_word_count(&self, w: &Permutation) -> Result<usize> {
        let act = coset_action(self, w)?;
        Ok(act.iter().enumerate().filter(|(i, &j)| *i == j).count())
    }
}

pub fn fixed_point_set(lambda: &Partition) -> Result<FixedPointSet> {
    FixedPointSet::new(lambda)
}

/// Index map `idx(ω) ↦ idx(ω ∘ w)`, where `(ω ∘ w)(i) = ω(w(i))`.
///
/// This is a right action on words: `act(w1) ∘ act(w2) = act(w2 ∘ w1)` as
/// index maps. Reindexing functions on words through it gives a left action.
pub fn coset_action(p: &FixedPointSet, w: &Permutation) -> Result<Vec<usize>> {
    if w.n() != p.n() {
        return Err(malformed(format!(
            "permutation of {} points acting on words of length {}",
            w.n(),
            p.n()
        )));
    }
    let mut buf = vec![0u8; p.n()];
    p.words
        .iter()
        .map(|word| {
            for (i, slot) in buf.iter_mut().enumerate() {
                *slot = word[w.apply(i)];
            }
            p.index_of(&buf)
                .ok_or_else(|| malformed("permuted word left the fixed-point set"))
        })
        .collect()
}
