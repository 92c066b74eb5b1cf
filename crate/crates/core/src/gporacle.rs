//! Independent oracle: the Garsia–Procesi quotient `C[y] / I_λ` by the
//! Tanisaki ideal, computed by truncated linear algebra on monomials.
//!
//! Nothing here touches the localization engine; the two sides only meet in
//! [`oracle_cross_check`].

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::exactalg::{monomials_of_degree, Monomial, MonomialBasis, Rational, SparseEchelon, SparsePoly};
use crate::locengine::GradedCharacter;
use crate::springer::{cached_report, DEFAULT_MAX_N};
use crate::symgroup::{conjugacy_classes, partitions_of, Partition, Permutation};

/// Whether the Tanisaki recipe for Jordan type `λ` is fed `λ` or `λ'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Direct,
    Conjugate,
}

impl Orientation {
    pub fn shape_for(self, lambda: &Partition) -> Partition {
        match self {
            Orientation::Direct => lambda.clone(),
            Orientation::Conjugate => lambda.conjugate(),
        }
    }
}

/// The orientation under which quotient dimensions match the fixed-point
/// counts for `n = 2, 3`, frozen.
pub const TANISAKI_ORIENTATION: Orientation = Orientation::Direct;

/// `d_k = λ'_n + ... + λ'_{n-k+1}` with `λ'` padded to length `n`, for
/// `k = 1..=n`.
fn tail_sums(shape: &Partition) -> Vec<usize> {
    let n = shape.n();
    let mut conj = shape.conjugate().parts().to_vec();
    conj.resize(n, 0);
    (1..=n).map(|k| conj[n - k..].iter().sum()).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `e_r` of the variables indexed by `vars`, in a ring with `n` variables.
fn elementary(n: usize, vars: &[usize], r: usize) -> SparsePoly {
    let mut p = SparsePoly::zero(n);
    for s in subsets(vars.len(), r) {
        let mut e = vec![0u16; n];
        for i in s {
            e[vars[i]] = 1;
        }
        p.add_term(Monomial(e), Rational::one());
    }
    p
}

/// Tanisaki generators under the frozen orientation.
pub fn tanisaki_generators(lambda: &Partition) -> Vec<SparsePoly> {
    tanisaki_generators_oriented(lambda, TANISAKI_ORIENTATION)
}

/// `e_r(S)` for every subset `S` of the variables, `|S| = k`, and every
/// `r > k - d_k`, without duplicates.
pub fn tanisaki_generators_oriented(lambda: &Partition, orientation: Orientation) -> Vec<SparsePoly> {
    let shape = orientation.shape_for(lambda);
    let n = shape.n();
    let d = tail_sums(&shape);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in 1..=n {
        let from = (k + 1).saturating_sub(d[k - 1]).max(1);
        for s in subsets(n, k) {
            for r in from..=k {
                let g = elementary(n, &s, r);
                if seen.insert(g.clone()) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Graded pieces of a Tanisaki ideal up to a bound.
#[derive(Debug, Clone)]
pub struct TanisakiIdealData {
    pub lambda: Partition,
    pub orientation: Orientation,
    pub generators: Vec<SparsePoly>,
    bases: Vec<MonomialBasis>,
    pieces: Vec<SparseEchelon>,
}

impl TanisakiIdealData {
    pub fn build(lambda: &Partition, orientation: Orientation, bound: usize) -> Result<Self> {
        let n = lambda.n();
        if n == 0 {
            return Err(malformed("the oracle needs a nonempty partition"));
        }
        let generators = tanisaki_generators_oriented(lambda, orientation);
        let mut bases = Vec::with_capacity(bound + 1);
        let mut pieces = Vec::with_capacity(bound + 1);
        for deg in 0..=bound {
            let basis = MonomialBasis::new(n, deg);
            let mut piece = SparseEchelon::new(basis.len());
            'gens: for g in &generators {
                let e = g.degree().unwrap_or(0);
                if e > deg {
                    continue;
                }
                for m in monomials_of_degree(n, deg - e) {
                    if piece.rank() == basis.len() {
                        break 'gens;
                    }
                    let mut row = basis.coordinates(&g.mul_monomial(&m))?;
                    row.sort_by_key(|(c, _)| *c);
                    piece.insert(&row);
                }
            }
            bases.push(basis);
            pieces.push(piece);
        }
        Ok(Self {
            lambda: lambda.clone(),
            orientation,
            generators,
            bases,
            pieces,
        })
    }

    pub fn bound(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn ideal_rank(&self, d: usize) -> usize {
        self.pieces[d].rank()
    }

    pub fn contains(&self, p: &SparsePoly) -> Result<bool> {
        let d = p.degree().unwrap_or(0);
        let piece = self
            .pieces
            .get(d)
            .ok_or_else(|| malformed(format!("degree {d} above the bound {}", self.bound())))?;
        let mut row = self.bases[d].coordinates(p)?;
        row.sort_by_key(|(c, _)| *c);
        Ok(piece.contains(&row))
    }

    /// `dim C[y]_d - dim (I_λ)_d` for each degree.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.bases
            .iter()
            .zip(&self.pieces)
            .map(|(b, p)| b.len() - p.rank())
            .collect()
    }

    /// Monomials whose classes form a basis of the quotient in degree `d`.
    pub fn standard_monomials(&self, d: usize) -> Vec<&Monomial> {
        let piece = &self.pieces[d];
        self.bases[d]
            .monomials()
            .iter()
            .enumerate()
            .filter(|(i, _)| !piece.is_pivot(*i))
            .map(|(_, m)| m)
            .collect()
    }

    /// Trace of `y_i ↦ y_{w(i)}` on the quotient in degree `d`.
    pub fn trace(&self, d: usize, w: &Permutation) -> Rational {
        let basis = &self.bases[d];
        let piece = &self.pieces[d];
        let mut tr = Rational::zero();
        for (i, m) in basis.monomials().iter().enumerate() {
            if piece.is_pivot(i) {
                continue;
            }
            let mut e = vec![0u16; m.0.len()];
            for (j, &a) in m.0.iter().enumerate() {
                e[w.apply(j)] = a;
            }
            let col = basis.index_of(&Monomial(e)).expect("same degree");
            let red = piece.reduce_full(&[(col, Rational::one())]);
            if let Some((_, x)) = red.residual.iter().find(|(c, _)| *c == i) {
                tr += x;
            }
        }
        tr
    }
}

fn check_dims(lambda: &Partition, data: &TanisakiIdealData) -> Result<()> {
    let dims = data.quotient_dims();
    let total: usize = dims.iter().sum();
    let expected = lambda.multinomial();
    if total as u128 != expected || dims.last() != Some(&0) {
        return Err(Error::Convention(format!(
            "Tanisaki quotient for {lambda} has graded dimensions {dims:?}, total {total}, \
             but {expected} fixed points are expected with nothing above degree {}; \
             try the conjugate orientation",
            data.bound() - 1
        )));
    }
    Ok(())
}

/// Graded character of `S_n` on `C[y] / I_λ` under the frozen orientation.
pub fn gp_graded_character(lambda: &Partition) -> Result<GradedCharacter> {
    gp_graded_character_oriented(lambda, TANISAKI_ORIENTATION)
}

pub fn gp_graded_character_oriented(lambda: &Partition, orientation: Orientation) -> Result<GradedCharacter> {
    let n = lambda.n();
    if n > DEFAULT_MAX_N {
        return Err(Error::Guardrail {
            what: "partition size n",
            value: n,
            limit: DEFAULT_MAX_N,
        });
    }
    let top = lambda.n_statistic();
    // one degree past the top certifies that the quotient stops there
    let data = TanisakiIdealData::build(lambda, orientation, top + 1)?;
    check_dims(lambda, &data)?;
    let classes = conjugacy_classes(n)?;
    let degrees = (0..=top)
        .map(|d| {
            classes
                .iter()
                .map(|c| (c.cycle_type.clone(), data.trace(d, &c.rep)))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    Ok(GradedCharacter { n, degrees })
}

/// Recomputes the orientation from the partitions of 2 and 3: the one
/// whose quotient dimensions add up to the fixed-point counts.
pub fn resolve_orientation() -> Result<Orientation> {
    let fits = |o: Orientation| -> Result<bool> {
        for n in 2..=3 {
            for lambda in partitions_of(n)? {
                let data = TanisakiIdealData::build(&lambda, o, n * (n - 1) / 2)?;
                let total: usize = data.quotient_dims().iter().sum();
                if total as u128 != lambda.multinomial() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    match (fits(Orientation::Direct)?, fits(Orientation::Conjugate)?) {
        (true, false) => Ok(Orientation::Direct),
        (false, true) => Ok(Orientation::Conjugate),
        (a, b) => Err(Error::Convention(format!(
            "orientation is ambiguous: direct fits {a}, conjugate fits {b}"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub lambda: Partition,
    pub passed: bool,
    pub engine: GradedCharacter,
    pub oracle: GradedCharacter,
}

/// Compares the localization pipeline with the oracle, exactly.
pub fn oracle_cross_check(lambda: &Partition) -> Result<CrossCheckReport> {
    let engine = cached_report(lambda)?.graded_character.clone();
    let oracle = gp_graded_character(lambda)?;
    Ok(CrossCheckReport {
        lambda: lambda.clone(),
        passed: engine == oracle,
        engine,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;
    use crate::symgroup::all_permutations;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn y(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i)
    }

    #[test]
    fn column_gives_the_coinvariant_ideal() {
        for n in 1..=4 {
            let gens = tanisaki_generators(&Partition::column(n));
            assert_eq!(gens.len(), n);
            let all: Vec<usize> = (0..n).collect();
            for r in 1..=n {
                assert!(gens.contains(&elementary(n, &all, r)));
            }
        }
    }

    #[test]
    fn row_ideal_contains_every_variable() {
        let lam = p(&[3]);
        let gens = tanisaki_generators(&lam);
        for i in 0..3 {
            assert!(gens.contains(&y(3, i)));
        }
        let data = TanisakiIdealData::build(&lam, TANISAKI_ORIENTATION, 2).unwrap();
        assert_eq!(data.quotient_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn hook_quotient_has_three_dimensions() {
        let data = TanisakiIdealData::build(&p(&[2, 1]), TANISAKI_ORIENTATION, 3).unwrap();
        assert_eq!(data.quotient_dims(), vec![1, 2, 0, 0]);
    }

    #[test]
    fn elementary_polynomials() {
        let e2 = elementary(3, &[0, 1, 2], 2);
        let expected = &(&(&y(3, 0) * &y(3, 1)) + &(&y(3, 0) * &y(3, 2))) + &(&y(3, 1) * &y(3, 2));
        assert_eq!(e2, expected);
        assert_eq!(elementary(3, &[0, 2], 1), &y(3, 0) + &y(3, 2));
        assert_eq!(tail_sums(&p(&[2, 1])), vec![0, 1, 3]);
    }

    #[test]
    fn frozen_orientation() {
        assert_eq!(resolve_orientation().unwrap(), TANISAKI_ORIENTATION);
    }

    #[test]
    fn wrong_orientation_is_a_convention_error() {
        let err = gp_graded_character_oriented(&p(&[1, 1, 1]), Orientation::Conjugate).unwrap_err();
        assert!(matches!(err, Error::Convention(_)));
    }

    #[test]
    fn quotient_dimension_matches_fixed_points() {
        for n in 1..=5 {
            for lam in partitions_of(n).unwrap() {
                let data = TanisakiIdealData::build(&lam, TANISAKI_ORIENTATION, lam.n_statistic() + 1).unwrap();
                let dims = data.quotient_dims();
                assert_eq!(dims.iter().sum::<usize>() as u128, lam.multinomial(), "{lam}");
                assert_eq!(dims[0], 1);
                assert_eq!(*dims.last().unwrap(), 0);
            }
        }
    }

    #[test]
    fn ideal_is_closed_and_stable() {
        for lam in [p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1])] {
            let n = lam.n();
            let data = TanisakiIdealData::build(&lam, TANISAKI_ORIENTATION, 4).unwrap();
            let perms = all_permutations(n);
            for d in 1..=3 {
                for g in data.generators.iter().filter(|g| g.degree() == Some(d)) {
                    for i in 0..n {
                        assert!(data.contains(&(g * &y(n, i))).unwrap());
                    }
                    for w in &perms {
                        let images: Vec<SparsePoly> = (0..n).map(|i| y(n, w.apply(i))).collect();
                        assert!(data.contains(&g.substitute(&images).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn small_characters() {
        let ch = gp_graded_character(&p(&[3])).unwrap();
        assert_eq!(ch.degrees.len(), 1);
        assert!(ch.degrees[0].values().all(|x| *x == rational(1)));

        let ch = gp_graded_character(&p(&[1, 1])).unwrap();
        assert_eq!(ch.value(1, &p(&[2])), Some(&rational(-1)));
        assert_eq!(ch.value(1, &p(&[1, 1])), Some(&rational(1)));

        let ch = gp_graded_character(&p(&[1, 1, 1])).unwrap();
        let dims: Vec<Rational> = [1, 2, 2, 1].iter().map(|&x| rational(x)).collect();
        assert_eq!(ch.dims(), dims);
        let mults = ch.multiplicities().unwrap();
        assert_eq!(mults[3][&p(&[1, 1, 1])], rational(1));
        assert_eq!(mults[1][&p(&[2, 1])], rational(1));
    }

    #[test]
    fn degree_zero_is_trivial() {
        for lam in partitions_of(4).unwrap() {
            let ch = gp_graded_character(&lam).unwrap();
            assert!(ch.degrees[0].values().all(|x| *x == rational(1)));
            let q = data_standard_count(&lam, 0);
            assert_eq!(q, 1);
        }
    }

    fn data_standard_count(lam: &Partition, d: usize) -> usize {
        TanisakiIdealData::build(lam, TANISAKI_ORIENTATION, d)
            .unwrap()
            .standard_monomials(d)
            .len()
    }

    #[test]
    fn cross_check_small_cases() {
        for lam in [p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1]), p(&[2, 2])] {
            let r = oracle_cross_check(&lam).unwrap();
            assert!(r.passed, "{lam}: {:?} vs {:?}", r.engine, r.oracle);
        }
    }
}
