//! Reduced row echelon bases of graded pieces.

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{malformed, Error, Result};

/// A subspace of `Q^ambient_dim` in reduced row echelon form.
///
/// Pivot columns strictly increase down `rows`, each pivot entry is 1 and is
/// the only nonzero entry of its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: usize,
    pub ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl GradedBasis {
    pub fn new(degree: usize, ambient_dim: usize) -> Self {
        Self {
            degree,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a, I>(degree: usize, ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [Rational]>,
    {
        let mut b = Self::new(degree, ambient_dim);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(malformed(format!(
                "vector of length {} against ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        Ok(())
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// In-place form of [`echelon_insert`]; returns whether `v` was new.
    pub fn insert(&mut self, v: &[Rational]) -> Result<bool> {
        let mut r = self.reduce(v)?;
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = Rational::one() / r[p].clone();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }
}

/// Reduces `v` against `basis`; inserts the normalized remainder when nonzero.
pub fn echelon_insert(basis: &GradedBasis, v: &[Rational]) -> Result<(GradedBasis, bool)> {
    let mut b = basis.clone();
    let was_new = b.insert(v)?;
    Ok((b, was_new))
}

/// Rows of `ambient` whose classes form a basis of `span(ambient) / span(sub)`.
pub fn complement_basis(sub: &GradedBasis, ambient: &GradedBasis) -> Result<Vec<Vec<Rational>>> {
    if sub.ambient_dim != ambient.ambient_dim {
        return Err(malformed(format!(
            "ambient dimensions differ: {} vs {}",
            sub.ambient_dim, ambient.ambient_dim
        )));
    }
    for (i, row) in sub.rows().iter().enumerate() {
        if !ambient.contains(row)? {
            return Err(Error::ContainmentViolation(format!(
                "row {i} of the subspace lies outside the ambient span"
            )));
        }
    }
    let mut acc = sub.clone();
    let mut out = Vec::with_capacity(ambient.rank() - sub.rank());
    for row in ambient.rows() {
        if acc.insert(row)? {
            out.push(row.clone());
        }
    }
    Ok(out)
}
