//! Borel presentation of the type A flag variety and its restriction to
//! torus-fixed points.
//!
//! Classes are polynomials in the tautological variables `y_1..y_n`. At the
//! `T`-fixed point indexed by `w` the variable `y_i` restricts to `t_{w(i)}`.
//! On the Springer side the subtorus `S` specializes `t_j` to `z_{b(j)}`, with
//! `b` the block function of `λ`, so at the fixed point with word `ω` the
//! variable `y_i` restricts to `z_{ω(i)}`.

use num_traits::One;

use crate::error::{malformed, Result};
use crate::exactalg::{Monomial, Rational, SparsePoly};
use crate::symgroup::{all_permutations, coset_action, FixedPointSet, Permutation};

/// A homogeneous polynomial in `y_1..y_n` standing for a class of the flag
/// variety (and, with constant coefficients, an equivariant class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelClass {
    pub poly: SparsePoly,
    pub degree: usize,
}

impl BorelClass {
    pub fn new(poly: SparsePoly) -> Result<Self> {
        let degree = poly.degree().unwrap_or(0);
        if !poly.is_homogeneous_of(degree) {
            return Err(malformed(format!("class {poly} is not homogeneous")));
        }
        Ok(Self { poly, degree })
    }

    pub fn monomial(exponents: Vec<u16>) -> Self {
        let degree = exponents.iter().map(|&e| e as usize).sum();
        Self {
            poly: SparsePoly::monomial(Monomial(exponents), Rational::one()),
            degree,
        }
    }

    pub fn n(&self) -> usize {
        self.poly.nvars()
    }
}

/// Values of an equivariant class at the fixed points of a Springer fiber,
/// as polynomials in `z_1..z_k`, one per word in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointVector {
    pub entries: Vec<SparsePoly>,
    pub degree: usize,
}

impl FixedPointVector {
    pub fn new(entries: Vec<SparsePoly>, degree: usize) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|e| !e.is_homogeneous_of(degree)) {
            return Err(malformed(format!(
                "entry {bad} is not homogeneous of degree {degree}"
            )));
        }
        Ok(Self { entries, degree })
    }

    pub fn nvars(&self) -> Option<usize> {
        self.entries.first().map(SparsePoly::nvars)
    }

    /// Entries reindexed by an index map: `out[j] = self[action[j]]`.
    pub fn reindexed(&self, action: &[usize]) -> FixedPointVector {
        FixedPointVector {
            entries: action.iter().map(|&i| self.entries[i].clone()).collect(),
            degree: self.degree,
        }
    }

    /// The left action of `w` on functions over the fixed points.
    pub fn permuted(&self, p: &FixedPointSet, w: &Permutation) -> Result<FixedPointVector> {
        Ok(self.reindexed(&coset_action(p, w)?))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(SparsePoly::is_zero)
    }
}

/// Monomials `y_1^{a_1} ··· y_n^{a_n}` with `a_i <= n - i`, ordered by degree
/// and then lexicographically descending.
pub fn artin_basis(n: usize) -> Vec<BorelClass> {
    fn rec(i: usize, n: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == n {
            out.push(prefix.clone());
            return;
        }
        for a in (0..=(n - 1 - i) as u16).rev() {
            prefix.push(a);
            rec(i + 1, n, prefix, out);
            prefix.pop();
        }
    }
    let mut exps = Vec::new();
    rec(0, n, &mut Vec::with_capacity(n), &mut exps);
    let mut out: Vec<BorelClass> = exps.into_iter().map(BorelClass::monomial).collect();
    out.sort_by_key(|c| c.degree);
    out
}

fn check_size(c: &BorelClass, n: usize) -> Result<()> {
    if c.n() != n {
        return Err(malformed(format!(
            "class in {} variables against a group of degree {n}",
            c.n()
        )));
    }
    Ok(())
}

/// Value at the `T`-fixed point `w`: `y_i ↦ t_{w(i)}`.
pub fn restrict_to_t_fixed(c: &BorelClass, w: &Permutation) -> Result<SparsePoly> {
    check_size(c, w.n())?;
    let n = w.n();
    let images: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(n, w.apply(i))).collect();
    c.poly.substitute(&images)
}

/// Values at the Springer fixed points: `y_i ↦ z_{ω(i)}` at word `ω`.
pub fn springer_restriction(c: &BorelClass, p: &FixedPointSet) -> Result<FixedPointVector> {
    check_size(c, p.n())?;
    let k = p.letters();
    let entries = p
        .words()
        .iter()
        .map(|word| {
            let images: Vec<SparsePoly> = word
                .iter()
                .map(|&letter| SparsePoly::var(k, letter as usize))
                .collect();
            c.poly.substitute(&images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FixedPointVector {
        entries,
        degree: c.degree,
    })
}

/// Relabels variables, `y_i ↦ y_{w(i)}`.
pub fn weyl_act_on_class(c: &BorelClass, w: &Permutation) -> Result<BorelClass> {
    check_size(c, w.n())?;
    let n = w.n();
    let images: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(n, w.apply(i))).collect();
    Ok(BorelClass {
        poly: c.poly.substitute(&images)?,
        degree: c.degree,
    })
}

/// First failing edge of a GKM divisibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmFailure {
    pub w: Permutation,
    /// The transposition `(a b)`, 0-based.
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmReport {
    pub edges_checked: usize,
    pub first_failure: Option<GkmFailure>,
}

impl GkmReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks that `f(w) - f(τ∘w)` is divisible by `t_a - t_b` for every
/// transposition `τ = (a b)` and every `w`, where `f` is the fixed-point
/// restriction of `c`.
///
/// Divisibility by `t_a - t_b` is tested as vanishing under `t_a ↦ t_b`.
pub fn gkm_divisibility_check(c: &BorelClass) -> Result<GkmReport> {
    let n = c.n();
    let group = all_permutations(n);
    let values = group
        .iter()
        .map(|w| restrict_to_t_fixed(c, w))
        .collect::<Result<Vec<_>>>()?;
    let index: std::collections::HashMap<&Permutation, usize> =
        group.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            let tau = Permutation::transposition(n, a, b);
            let collapse: Vec<SparsePoly> = (0..n)
                .map(|i| SparsePoly::var(n, if i == a { b } else { i }))
                .collect();
            for (wi, w) in group.iter().enumerate() {
                let tw = tau.compose(w);
                let diff = &values[wi] - &values[index[&tw]];
                edges += 1;
                if !diff.substitute(&collapse)?.is_zero() {
                    return Ok(GkmReport {
                        edges_checked: edges,
                        first_failure: Some(GkmFailure { w: w.clone(), a, b }),
                    });
                }
            }
        }
    }
    Ok(GkmReport {
        edges_checked: edges,
        first_failure: None,
    })
}

/// Whether restricting `w·c` equals reindexing the restriction of `c` by
/// the coset action of `w`.
pub fn restriction_intertwines(c: &BorelClass, w: &Permutation, p: &FixedPointSet) -> Result<bool> {
    let lhs = springer_restriction(&weyl_act_on_class(c, w)?, p)?;
    let rhs = springer_restriction(c, p)?.permuted(p, w)?;
    Ok(lhs == rhs)
}
