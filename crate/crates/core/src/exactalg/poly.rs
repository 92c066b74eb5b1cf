//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so two polynomials
//! with the same terms are structurally equal and iterate in lexicographic
//! order of exponents.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{malformed, Result};

/// Exponent vector `[e0, e1, ...]` standing for `x0^e0 * x1^e1 * ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }
}

/// All monomials of total degree `d` in `k` variables, lexicographically
/// descending (so `x0^d` comes first).
pub fn monomials_of_degree(k: usize, d: usize) -> Vec<Monomial> {
    fn rec(k: usize, d: usize, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == k {
            prefix.push(d as u16);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a as u16);
            rec(k, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(k, d, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Number of monomials of degree `d` in `k` variables, `C(d + k - 1, k - 1)`.
pub fn monomial_count(k: usize, d: usize) -> usize {
    if k == 0 {
        return usize::from(d == 0);
    }
    let mut c: u128 = 1;
    for i in 0..(k - 1) as u128 {
        c = c * (d as u128 + 1 + i) / (i + 1);
    }
    c as usize
}

/// Enumerated monomial basis of one graded piece, with reverse lookup.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub nvars: usize,
    pub degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            nvars,
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn coordinates(&self, p: &SparsePoly) -> Result<Vec<(usize, Rational)>> {
        let mut out = Vec::with_capacity(p.terms.len());
        for (m, c) in &p.terms {
            let i = self.index_of(m).ok_or_else(|| {
                malformed(format!(
                    "monomial {:?} is not of degree {} in {} variables",
                    m.0, self.degree, self.nvars
                ))
            })?;
            out.push((i, c.clone()));
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    pub fn polynomial(&self, coords: &[(usize, Rational)]) -> SparsePoly {
        let mut p = SparsePoly::zero(self.nvars);
        for (i, c) in coords {
            p.add_term(self.monomials[*i].clone(), c.clone());
        }
        p
    }
}

/// Multivariate polynomial over the rationals in canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(malformed(format!(
                    "exponent tuple of length {} in a {}-variable polynomial",
                    e.len(),
                    nvars
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[SparsePoly]) -> Result<SparsePoly> {
        poly_substitute(self, images)
    }

    /// Renders with variable names `{prefix}1`, `{prefix}2`, ...
    pub fn display_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("{prefix}{}", i + 1)
                    } else {
                        format!("{prefix}{}^{e}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// Substitutes `images[i]` for variable `i` of `p`.
///
/// When every image is a single term (the common case of variable
/// relabelings) each term maps to one term and no expansion is needed.
pub fn poly_substitute(p: &SparsePoly, images: &[SparsePoly]) -> Result<SparsePoly> {
    if images.len() != p.nvars {
        return Err(malformed(format!(
            "{} images supplied for a polynomial in {} variables",
            images.len(),
            p.nvars
        )));
    }
    let target = match images.first() {
        Some(img) => img.nvars,
        None => return Ok(p.clone()),
    };
    if images.iter().any(|img| img.nvars != target) {
        return Err(malformed("substitution images disagree on nvars"));
    }

    let single: Option<Vec<(Monomial, Rational)>> = images
        .iter()
        .map(|img| {
            if img.terms.len() == 1 {
                img.terms.iter().next().map(|(m, c)| (m.clone(), c.clone()))
            } else {
                None
            }
        })
        .collect();

    let mut out = SparsePoly::zero(target);
    if let Some(single) = single {
        for (m, c) in &p.terms {
            let mut exps = vec![0u16; target];
            let mut coeff = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (im, ic) = &single[i];
                for (slot, &x) in exps.iter_mut().zip(im.exponents()) {
                    *slot += x * e;
                }
                if !ic.is_one() {
                    coeff *= num_traits::pow(ic.clone(), e as usize);
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        return Ok(out);
    }

    let mut powers: Vec<Vec<SparsePoly>> = images
        .iter()
        .map(|img| vec![SparsePoly::one(target), img.clone()])
        .collect();
    for (m, c) in &p.terms {
        let mut term = SparsePoly::constant(target, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            let e = e as usize;
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = &powers[i][powers[i].len() - 1] * &images[i];
                powers[i].push(next);
            }
            term = &term * &powers[i][e];
        }
        out = &out + &term;
    }
    Ok(out)
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in addition");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in subtraction");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in product");
        let mut out = SparsePoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}
