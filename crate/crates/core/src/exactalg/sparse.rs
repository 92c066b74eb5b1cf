//! Sparse semi-reduced echelon form for large graded pieces.
//!
//! Rows have distinct leading columns with leading entry 1 but are not
//! back-reduced, which keeps them close to the sparsity of the input rows.
//! Insertions may be *tracked*: each tracked insertion gets an id and every
//! stored row remembers which combination of tracked inputs it is congruent
//! to modulo the untracked rows. This is how quotient coordinates are read
//! off without ever forming the quotient explicitly.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::scalar::Scalar;
use super::{GradedBasis, Rational};

/// Sparse vector as `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

type Entries = Vec<(usize, Scalar)>;

const NO_ROW: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Row {
    entries: Entries,
    tag: Entries,
}

#[derive(Debug, Clone)]
pub struct SparseEchelon {
    ambient_dim: usize,
    rows: Vec<Row>,
    pivot_row: Vec<u32>,
}

/// Result of reducing a vector against a [`SparseEchelon`].
#[derive(Debug, Clone)]
pub struct Reduction {
    /// What is left once reduction stops.
    pub residual: SparseVec,
    /// Combination of tracked inputs subtracted along the way.
    pub combination: BTreeMap<usize, Rational>,
}

impl Reduction {
    pub fn is_member(&self) -> bool {
        self.residual.is_empty()
    }
}

/// `out = a - f * b`, both sorted by column.
fn axpy_into(out: &mut Entries, a: &[(usize, Scalar)], f: &Scalar, b: &[(usize, Scalar)]) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, f.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let x = a[i].1.sub(&f.mul(&b[j].1));
            if !x.is_zero() {
                out.push((ca, x));
            }
            i += 1;
            j += 1;
        }
    }
}

fn to_entries(v: &[(usize, Rational)]) -> Entries {
    let mut out: Entries = v
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, Scalar::from_rational(x)))
        .collect();
    if !out.windows(2).all(|w| w[0].0 < w[1].0) {
        out.sort_by_key(|e| e.0);
        let mut merged: Entries = Vec::with_capacity(out.len());
        for (c, x) in out {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 = last.1.add(&x),
                _ => merged.push((c, x)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        out = merged;
    }
    out
}

fn to_sparse_vec(v: Entries) -> SparseVec {
    v.into_iter().map(|(c, x)| (c, x.to_rational())).collect()
}

struct RawReduction {
    residual: Entries,
    combination: BTreeMap<usize, Scalar>,
}

impl SparseEchelon {
    pub fn new(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; ambient_dim],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Total number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.entries.len()).sum()
    }

    fn reduce_raw(&self, v: Entries, full: bool) -> RawReduction {
        let mut tail = v;
        let mut scratch = Entries::new();
        let mut residual = Entries::new();
        let mut combination: BTreeMap<usize, Scalar> = BTreeMap::new();
        loop {
            let skip = tail
                .iter()
                .position(|(c, _)| self.pivot_row[*c] != NO_ROW)
                .unwrap_or(tail.len());
            if skip > 0 && !full {
                break;
            }
            residual.extend(tail.drain(..skip));
            let Some((col, f)) = tail.first().cloned() else { break };
            let row = &self.rows[self.pivot_row[col] as usize];
            axpy_into(&mut scratch, &tail[1..], &f, &row.entries[1..]);
            std::mem::swap(&mut tail, &mut scratch);
            for (t, x) in &row.tag {
                let delta = f.mul(x);
                let slot = combination.entry(*t).or_insert_with(|| Scalar::Small(Zero::zero()));
                *slot = slot.add(&delta);
            }
        }
        residual.extend(tail);
        combination.retain(|_, x| !x.is_zero());
        RawReduction {
            residual,
            combination,
        }
    }

    fn reduce_impl(&self, v: &[(usize, Rational)], full: bool) -> Reduction {
        let raw = self.reduce_raw(to_entries(v), full);
        Reduction {
            residual: to_sparse_vec(raw.residual),
            combination: raw
                .combination
                .into_iter()
                .map(|(k, x)| (k, x.to_rational()))
                .collect(),
        }
    }

    /// Clears leading entries until the lead is not a pivot column.
    /// Enough to decide membership and to express members.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> Reduction {
        self.reduce_impl(v, false)
    }

    /// Clears every pivot column, leaving a residual supported on
    /// non-pivot columns only.
    pub fn reduce_full(&self, v: &[(usize, Rational)]) -> Reduction {
        self.reduce_impl(v, true)
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce_raw(to_entries(v), false).residual.is_empty()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_ROW
    }

    fn insert_impl(&mut self, v: &[(usize, Rational)], id: Option<usize>) -> bool {
        let red = self.reduce_raw(to_entries(v), false);
        let Some((lead, x)) = red.residual.first().cloned() else {
            return false;
        };
        let inv = x.recip();
        let entries: Entries = red
            .residual
            .into_iter()
            .map(|(c, y)| (c, y.mul(&inv)))
            .collect();
        // row = (v - sum f_r row_r) / x, so tag = (e_id - sum f_r tag_r) / x
        let mut tag: BTreeMap<usize, Scalar> = red
            .combination
            .into_iter()
            .map(|(k, y)| (k, y.neg()))
            .collect();
        if let Some(id) = id {
            let slot = tag.entry(id).or_insert_with(|| Scalar::Small(Zero::zero()));
            *slot = slot.add(&Scalar::one());
        }
        let tag = tag
            .into_iter()
            .filter(|(_, y)| !y.is_zero())
            .map(|(k, y)| (k, y.mul(&inv)))
            .collect();
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(Row { entries, tag });
        true
    }

    /// Inserts an untracked row; returns whether it raised the rank.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        self.insert_impl(v, None)
    }

    /// Inserts a row tracked under `id`; returns whether it raised the rank.
    pub fn insert_tracked(&mut self, v: &[(usize, Rational)], id: usize) -> bool {
        self.insert_impl(v, Some(id))
    }

    /// Dense reduced row echelon form of the same span.
    pub fn to_graded_basis(&self, degree: usize) -> GradedBasis {
        let mut order: Vec<&Row> = self.rows.iter().collect();
        order.sort_by_key(|r| std::cmp::Reverse(r.entries[0].0));
        let mut b = GradedBasis::new(degree, self.ambient_dim);
        for r in order {
            let mut dense = vec![Rational::zero(); self.ambient_dim];
            for (c, x) in &r.entries {
                dense[*c] = x.to_rational();
            }
            b.insert(&dense).expect("dimensions agree");
        }
        b
    }
}
