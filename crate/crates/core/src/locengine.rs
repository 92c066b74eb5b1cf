//! The localization engine.
//!
//! An equivariant cohomology ring is represented by its image in
//! `Maps(P, C[z])`: an [`ImageModule`] spanned over `C[z]` by a list of
//! fixed-point vectors. The Weyl group acts by permuting fixed points, the
//! ordinary cohomology is the augmentation quotient `M / C[z]^+ M`, and the
//! graded character of the induced action is read off from quotient
//! coordinates.
//!
//! Every degree piece is built in a single pass: first the augmentation part
//! `(C[z]^+ M)_d` from products `z^γ g` with `deg g < d`, then the degree-`d`
//! generators as tracked rows. Generators that raise the rank are the
//! quotient lifts, and the tags of the echelon rows express any member of
//! `M_d` in quotient coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::exactalg::{
    monomial_count, monomials_of_degree, Matrix, Monomial, MonomialBasis, Rational, SparseEchelon,
    SparseVec,
};
use crate::flagmodel::FixedPointVector;
use crate::symgroup::{coset_action, decompose_class_function, ConjClass, FixedPointSet, Partition, Permutation};

/// One graded piece `M_d` of an image module.
#[derive(Debug, Clone)]
pub struct DegreePiece {
    degree: usize,
    monomials: MonomialBasis,
    echelon: SparseEchelon,
    augmentation_rank: usize,
    lifts: Vec<usize>,
}

impl DegreePiece {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// `rank (C[z]^+ M)_d`.
    pub fn augmentation_rank(&self) -> usize {
        self.augmentation_rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ambient_dim()
    }

    /// Indices into the generator list of the quotient lifts in this degree.
    pub fn lifts(&self) -> &[usize] {
        &self.lifts
    }

    pub fn echelon(&self) -> &SparseEchelon {
        &self.echelon
    }

    fn encode(&self, v: &FixedPointVector, shift: &Monomial) -> Result<SparseVec> {
        let np = v.entries.len();
        let mut out = Vec::new();
        for (j, entry) in v.entries.iter().enumerate() {
            let row: Vec<(usize, Rational)> = entry
                .terms()
                .iter()
                .map(|(m, c)| {
                    let idx = self
                        .monomials
                        .index_of(&m.mul(shift))
                        .ok_or_else(|| malformed(format!("entry {entry} has the wrong degree")))?;
                    Ok((idx * np + j, c.clone()))
                })
                .collect::<Result<_>>()?;
            out.extend(row);
        }
        out.sort_by_key(|(c, _)| *c);
        Ok(out)
    }
}

/// The `C[z]`-span of a list of fixed-point vectors, up to a degree bound.
#[derive(Debug, Clone)]
pub struct ImageModule {
    fixed_points: FixedPointSet,
    k: usize,
    generators: Vec<FixedPointVector>,
    degree_bound: usize,
    pieces: Vec<DegreePiece>,
}

impl ImageModule {
    pub fn fixed_points(&self) -> &FixedPointSet {
        &self.fixed_points
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generators(&self) -> &[FixedPointVector] {
        &self.generators
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn pieces(&self) -> &[DegreePiece] {
        &self.pieces
    }

    pub fn piece(&self, d: usize) -> Option<&DegreePiece> {
        self.pieces.get(d)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, DegreePiece::rank)
    }

    /// Whether a vector of degree `d <= degree_bound` lies in `M_d`.
    pub fn contains(&self, v: &FixedPointVector) -> Result<bool> {
        let piece = self.piece_for(v)?;
        Ok(piece.echelon.contains(&piece.encode(v, &Monomial::one(self.k))?))
    }

    fn piece_for(&self, v: &FixedPointVector) -> Result<&DegreePiece> {
        if v.entries.len() != self.fixed_points.len() {
            return Err(malformed(format!(
                "vector over {} points, module over {}",
                v.entries.len(),
                self.fixed_points.len()
            )));
        }
        self.piece(v.degree).ok_or_else(|| {
            malformed(format!(
                "degree {} exceeds the module's bound {}",
                v.degree, self.degree_bound
            ))
        })
    }

    /// Coordinates of the class of `v ∈ M_d` in the quotient, keyed by
    /// generator index of the lifts.
    fn quotient_coordinates(&self, v: &FixedPointVector) -> Result<BTreeMap<usize, Rational>> {
        let piece = self.piece_for(v)?;
        let red = piece.echelon.reduce(&piece.encode(v, &Monomial::one(self.k))?);
        if !red.is_member() {
            return Err(Error::StabilityViolation {
                degree: v.degree,
                detail: format!("{} nonzero coordinates remain after reduction", red.residual.len()),
            });
        }
        Ok(red.combination)
    }
}

fn check_generator(p: &FixedPointSet, k: usize, g: &FixedPointVector, bound: usize) -> Result<()> {
    if g.entries.len() != p.len() {
        return Err(malformed(format!(
            "generator has {} entries but the fixed-point set has {} points",
            g.entries.len(),
            p.len()
        )));
    }
    if let Some(e) = g.entries.iter().find(|e| e.nvars() != k) {
        return Err(malformed(format!(
            "generator entry in {} variables, expected {k}",
            e.nvars()
        )));
    }
    if let Some(e) = g.entries.iter().find(|e| !e.is_homogeneous_of(g.degree)) {
        return Err(malformed(format!(
            "generator entry {e} is not homogeneous of degree {}",
            g.degree
        )));
    }
    if g.degree > bound {
        return Err(malformed(format!(
            "generator of degree {} above the degree bound {bound}",
            g.degree
        )));
    }
    Ok(())
}

fn build_piece(k: usize, np: usize, gens: &[FixedPointVector], d: usize) -> Result<DegreePiece> {
    let monomials = MonomialBasis::new(k, d);
    let mut piece = DegreePiece {
        degree: d,
        echelon: SparseEchelon::new(np * monomials.len()),
        monomials,
        augmentation_rank: 0,
        lifts: Vec::new(),
    };
    for g in gens.iter().filter(|g| g.degree < d) {
        for m in monomials_of_degree(k, d - g.degree) {
            let row = piece.encode(g, &m)?;
            piece.echelon.insert(&row);
        }
    }
    piece.augmentation_rank = piece.echelon.rank();
    let one = Monomial::one(k);
    for (id, g) in gens.iter().enumerate().filter(|(_, g)| g.degree == d) {
        let row = piece.encode(g, &one)?;
        if piece.echelon.insert_tracked(&row, id) {
            piece.lifts.push(id);
        }
    }
    Ok(piece)
}

/// Builds `M_d = span { z^γ g }` for every `d <= degree_bound`.
pub fn build_image_module(
    p: &FixedPointSet,
    gens: Vec<FixedPointVector>,
    degree_bound: usize,
) -> Result<ImageModule> {
    let k = p.letters();
    for g in &gens {
        check_generator(p, k, g, degree_bound)?;
    }
    let pieces = (0..=degree_bound)
        .into_par_iter()
        .map(|d| build_piece(k, p.len(), &gens, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(ImageModule {
        fixed_points: p.clone(),
        k,
        generators: gens,
        degree_bound,
        pieces,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityFailure {
    pub degree: usize,
    pub generator: usize,
    pub permutation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub checked: usize,
    pub failures: Vec<StabilityFailure>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every adjacent transposition maps the module into itself.
///
/// The action commutes with multiplication by `z`, so it is enough to test
/// the generators in their own degree.
pub fn verify_w_stability(m: &ImageModule) -> Result<StabilityReport> {
    let n = m.fixed_points.n();
    let perms: Vec<Permutation> = (0..n.saturating_sub(1))
        .map(|i| Permutation::adjacent(n, i))
        .collect();
    verify_w_stability_with(m, &perms)
}

pub fn verify_w_stability_with(m: &ImageModule, perms: &[Permutation]) -> Result<StabilityReport> {
    let actions = perms
        .iter()
        .map(|w| coset_action(&m.fixed_points, w))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize)> = (0..m.generators.len())
        .flat_map(|g| (0..perms.len()).map(move |s| (g, s)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(g, s)| {
            let v = m.generators[g].reindexed(&actions[s]);
            m.contains(&v).map(|ok| (g, s, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let failures = results
        .into_iter()
        .filter(|(_, _, ok)| !ok)
        .map(|(g, s, _)| StabilityFailure {
            degree: m.generators[g].degree,
            generator: g,
            permutation: perms[s].to_string(),
        })
        .collect();
    Ok(StabilityReport {
        checked: jobs.len(),
        failures,
    })
}

/// How strictly [`augmentation_quotient_with`] checks completeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    /// The quotient dimensions must add up to the number of fixed points.
    Strict,
    /// Arbitrary generator sets: the quotient rank is whatever it is, and
    /// freeness is left to [`freeness_certificate`].
    Relaxed,
}

/// A basis of `M / C[z]^+ M`, degree by degree, given by lifts.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub dims: Vec<usize>,
    pub lifts: Vec<Vec<FixedPointVector>>,
    /// Generator indices of the lifts, parallel to `lifts`.
    pub lift_ids: Vec<Vec<usize>>,
}

impl QuotientPresentation {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

pub fn augmentation_quotient(m: &ImageModule) -> Result<QuotientPresentation> {
    augmentation_quotient_with(m, Completeness::Strict)
}

pub fn augmentation_quotient_with(m: &ImageModule, mode: Completeness) -> Result<QuotientPresentation> {
    let lift_ids: Vec<Vec<usize>> = m.pieces.iter().map(|p| p.lifts.clone()).collect();
    let dims: Vec<usize> = lift_ids.iter().map(Vec::len).collect();
    let lifts = lift_ids
        .iter()
        .map(|ids| ids.iter().map(|&i| m.generators[i].clone()).collect())
        .collect();
    let q = QuotientPresentation { dims, lifts, lift_ids };
    if mode == Completeness::Strict && q.total() != m.fixed_points.len() {
        return Err(Error::Certificate {
            stage: "completeness",
            degree: Some(m.degree_bound),
            detail: format!(
                "quotient dimensions {:?} sum to {} but there are {} fixed points",
                q.dims,
                q.total(),
                m.fixed_points.len()
            ),
        });
    }
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessDegree {
    pub degree: usize,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessReport {
    pub per_degree: Vec<FreenessDegree>,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.per_degree.iter().all(|d| d.rank == d.expected)
    }

    pub fn first_failure(&self) -> Option<&FreenessDegree> {
        self.per_degree.iter().find(|d| d.rank != d.expected)
    }
}

/// Compares `rank M_d` with the Hilbert function of the free module on the
/// quotient, `Σ_{e <= d} q_e · dim C[z]_{d-e}`.
pub fn freeness_certificate(m: &ImageModule, q: &QuotientPresentation) -> FreenessReport {
    let per_degree = (0..=m.degree_bound)
        .map(|d| FreenessDegree {
            degree: d,
            rank: m.rank(d),
            expected: (0..=d)
                .map(|e| q.dims.get(e).copied().unwrap_or(0) * monomial_count(m.k, d - e))
                .sum(),
        })
        .collect();
    FreenessReport { per_degree }
}

/// Matrix of `w` on each quotient degree.
///
/// Column `j` holds the quotient coordinates of `w · lift_j`, with
/// `(w · v)(ω) = v(ω ∘ w)`. This is a left action, so
/// `A(w1) A(w2) = A(w1 ∘ w2)`.
pub fn quotient_action_matrix(
    m: &ImageModule,
    q: &QuotientPresentation,
    w: &Permutation,
) -> Result<Vec<Matrix>> {
    let action = coset_action(&m.fixed_points, w)?;
    q.lift_ids
        .iter()
        .map(|ids| {
            let position: BTreeMap<usize, usize> =
                ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
            let mut mat = vec![vec![Rational::zero(); ids.len()]; ids.len()];
            for (j, &id) in ids.iter().enumerate() {
                let image = m.generators[id].reindexed(&action);
                for (lift, c) in m.quotient_coordinates(&image)? {
                    mat[position[&lift]][j] = c;
                }
            }
            Ok(mat)
        })
        .collect()
}

fn quotient_action_trace(m: &ImageModule, q: &QuotientPresentation, action: &[usize]) -> Result<Vec<Rational>> {
    q.lift_ids
        .iter()
        .map(|ids| {
            let mut tr = Rational::zero();
            for &id in ids {
                let image = m.generators[id].reindexed(action);
                if let Some(c) = m.quotient_coordinates(&image)?.get(&id) {
                    tr += c;
                }
            }
            Ok(tr)
        })
        .collect()
}

/// Per-degree class functions of a graded representation of `S_n`, keyed
/// by cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharacter {
    pub n: usize,
    #[serde(with = "crate::serial::graded_class_values")]
    pub degrees: Vec<BTreeMap<Partition, Rational>>,
}

impl GradedCharacter {
    pub fn top_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    pub fn value(&self, degree: usize, cycle_type: &Partition) -> Option<&Rational> {
        self.degrees.get(degree)?.get(cycle_type)
    }

    /// Values at the identity class, i.e. the graded dimensions.
    pub fn dims(&self) -> Vec<Rational> {
        let id = Partition::column(self.n);
        self.degrees
            .iter()
            .map(|m| m.get(&id).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    /// Sum over all degrees.
    pub fn total(&self) -> BTreeMap<Partition, Rational> {
        let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
        for m in &self.degrees {
            for (ct, x) in m {
                *out.entry(ct.clone()).or_insert_with(Rational::zero) += x;
            }
        }
        out
    }

    /// Irreducible multiplicities in each degree.
    pub fn multiplicities(&self) -> Result<Vec<BTreeMap<Partition, Rational>>> {
        self.degrees
            .iter()
            .map(|m| decompose_class_function(m, self.n))
            .collect()
    }
}

/// Traces of the quotient action at each class representative.
pub fn graded_character(
    m: &ImageModule,
    q: &QuotientPresentation,
    classes: &[ConjClass],
) -> Result<GradedCharacter> {
    let n = m.fixed_points.n();
    let per_class = classes
        .par_iter()
        .map(|c| {
            let action = coset_action(&m.fixed_points, &c.rep)?;
            Ok((c.cycle_type.clone(), quotient_action_trace(m, q, &action)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut degrees = vec![BTreeMap::new(); q.dims.len()];
    for (ct, traces) in per_class {
        for (d, t) in traces.into_iter().enumerate() {
            degrees[d].insert(ct.clone(), t);
        }
    }
    Ok(GradedCharacter { n, degrees })
}

/// Outcome of running the engine on an arbitrary generator set.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub stability: StabilityReport,
    pub quotient_dims: Vec<usize>,
    pub freeness: FreenessReport,
    /// Present only when the module is stable.
    pub character: Option<GradedCharacter>,
}

/// Runs stability, relaxed quotient and freeness on any generator set,
/// without assuming the generators come from a surjective restriction.
pub fn experiment(
    p: &FixedPointSet,
    gens: Vec<FixedPointVector>,
    degree_bound: usize,
    classes: &[ConjClass],
) -> Result<ExperimentReport> {
    let m = build_image_module(p, gens, degree_bound)?;
    let stability = verify_w_stability(&m)?;
    let q = augmentation_quotient_with(&m, Completeness::Relaxed)?;
    let freeness = freeness_certificate(&m, &q);
    let character = if stability.passed() {
        Some(graded_character(&m, &q, classes)?)
    } else {
        None
    };
    Ok(ExperimentReport {
        stability,
        quotient_dims: q.dims,
        freeness,
        character,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{identity_matrix, matmul, rational, trace, SparsePoly};
    use crate::flagmodel::{artin_basis, springer_restriction, BorelClass};
    use crate::symgroup::{all_permutations, conjugacy_classes, fixed_point_set};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn artin_gens(lam: &Partition, bound: usize) -> (FixedPointSet, Vec<FixedPointVector>) {
        let fp = fixed_point_set(lam).unwrap();
        let gens = artin_basis(lam.n())
            .iter()
            .filter(|c| c.degree <= bound)
            .map(|c| springer_restriction(c, &fp).unwrap())
            .collect();
        (fp, gens)
    }

    fn module(lam: &Partition) -> ImageModule {
        let bound = lam.n_statistic();
        let (fp, gens) = artin_gens(lam, bound);
        build_image_module(&fp, gens, bound).unwrap()
    }

    fn z(k: usize, i: usize) -> SparsePoly {
        SparsePoly::var(k, i)
    }

    #[test]
    fn projective_line_module() {
        let fp = fixed_point_set(&p(&[1, 1])).unwrap();
        let gens: Vec<_> = [BorelClass::new(SparsePoly::one(2)).unwrap(), BorelClass::monomial(vec![1, 0])]
            .iter()
            .map(|c| springer_restriction(c, &fp).unwrap())
            .collect();
        let m = build_image_module(&fp, gens, 1).unwrap();
        assert_eq!(m.rank(0), 1);
        assert_eq!(m.rank(1), 3);
        assert_eq!(m.piece(1).unwrap().ambient_dim(), 4);
        for v in [[z(2, 0), z(2, 0)], [z(2, 1), z(2, 1)], [z(2, 0), z(2, 1)]] {
            let v = FixedPointVector::new(v.to_vec(), 1).unwrap();
            assert!(m.contains(&v).unwrap());
        }
        let swapped = FixedPointVector::new(vec![z(2, 1), z(2, 0)], 1).unwrap();
        assert!(m.contains(&swapped).unwrap());
        let outside = FixedPointVector::new(vec![z(2, 1), SparsePoly::zero(2)], 1).unwrap();
        assert!(!m.contains(&outside).unwrap());

        assert!(verify_w_stability(&m).unwrap().passed());
        let q = augmentation_quotient(&m).unwrap();
        assert_eq!(q.dims, vec![1, 1]);
        let f = freeness_certificate(&m, &q);
        assert!(f.passed());
        assert_eq!(f.per_degree[1], FreenessDegree { degree: 1, rank: 3, expected: 3 });

        let s = Permutation::transposition(2, 0, 1);
        let mats = quotient_action_matrix(&m, &q, &s).unwrap();
        assert_eq!(mats[0], vec![vec![rational(1)]]);
        assert_eq!(mats[1], vec![vec![rational(-1)]]);
    }

    #[test]
    fn single_point_is_free_of_rank_one() {
        for n in 1..=4 {
            let lam = Partition::row(n);
            let (fp, gens) = artin_gens(&lam, 3);
            let m = build_image_module(&fp, gens, 3).unwrap();
            for d in 0..=3 {
                assert_eq!(m.rank(d), monomial_count(1, d));
            }
            let q = augmentation_quotient_with(&m, Completeness::Relaxed).unwrap();
            assert_eq!(q.dims, vec![1, 0, 0, 0]);
            assert!(freeness_certificate(&m, &q).passed());
            assert!(verify_w_stability(&m).unwrap().passed());
        }
    }

    #[test]
    fn hook_two_one() {
        let m = module(&p(&[2, 1]));
        assert!(verify_w_stability(&m).unwrap().passed());
        let q = augmentation_quotient(&m).unwrap();
        assert_eq!(q.dims, vec![1, 2]);
        let classes = conjugacy_classes(3).unwrap();
        let ch = graded_character(&m, &q, &classes).unwrap();
        assert_eq!(ch.value(1, &p(&[2, 1])), Some(&rational(0)));
        assert_eq!(ch.value(1, &p(&[1, 1, 1])), Some(&rational(2)));
        assert_eq!(ch.value(1, &p(&[3])), Some(&rational(-1)));
    }

    #[test]
    fn column_three_module_rank_in_degree_one() {
        // brute force: span of z^γ·(restrictions) in degree 1 over the six
        // words, computed with the dense echelon
        use crate::exactalg::GradedBasis;
        let lam = Partition::column(3);
        let m = module(&lam);
        let fp = m.fixed_points().clone();
        let mb = MonomialBasis::new(3, 1);
        let dim = fp.len() * mb.len();
        let mut gb = GradedBasis::new(1, dim);
        let mut push = |v: &FixedPointVector| {
            let mut dense = vec![Rational::zero(); dim];
            for (j, e) in v.entries.iter().enumerate() {
                for (i, x) in mb.coordinates(e).unwrap() {
                    dense[j * mb.len() + i] = x;
                }
            }
            gb.insert(&dense).unwrap();
        };
        for c in artin_basis(3) {
            let v = springer_restriction(&c, &fp).unwrap();
            match c.degree {
                0 => {
                    for i in 0..3 {
                        let e = v.entries.iter().map(|x| x * &z(3, i)).collect();
                        push(&FixedPointVector::new(e, 1).unwrap());
                    }
                }
                1 => push(&v),
                _ => {}
            }
        }
        assert_eq!(m.rank(1), gb.rank());
        assert_eq!(m.rank(1), 5);
    }

    #[test]
    fn module_is_closed_under_multiplication() {
        for lam in [p(&[2, 1]), p(&[2, 2]), p(&[1, 1, 1]), p(&[3, 1])] {
            let m = module(&lam);
            let k = m.k();
            for d in 1..=m.degree_bound() {
                for g in m.generators().iter().filter(|g| g.degree + 1 == d) {
                    for j in 0..k {
                        let e = g.entries.iter().map(|x| x * &z(k, j)).collect();
                        let v = FixedPointVector::new(e, d).unwrap();
                        assert!(m.contains(&v).unwrap());
                    }
                }
                let amb = m.fixed_points().len() * monomial_count(k, d);
                assert!(m.rank(d) <= amb);
            }
        }
    }

    #[test]
    fn flag_variety_poincare_polynomials() {
        let expected: [&[usize]; 4] = [&[1], &[1, 1], &[1, 2, 2, 1], &[1, 3, 5, 6, 5, 3, 1]];
        for (i, e) in expected.iter().enumerate() {
            let m = module(&Partition::column(i + 1));
            let q = augmentation_quotient(&m).unwrap();
            assert_eq!(q.dims, e.to_vec());
            assert!(freeness_certificate(&m, &q).passed());
        }
    }

    #[test]
    fn identity_acts_trivially_and_group_law_holds() {
        for lam in [p(&[1, 1, 1]), p(&[2, 1, 1]), p(&[2, 2])] {
            let m = module(&lam);
            let q = augmentation_quotient(&m).unwrap();
            let n = lam.n();
            let id = quotient_action_matrix(&m, &q, &Permutation::identity(n)).unwrap();
            for (d, mat) in id.iter().enumerate() {
                assert_eq!(*mat, identity_matrix(q.dims[d]));
            }
            let g = all_permutations(n);
            for (a, b) in [(1, 2), (3, 5), (7, 11), (g.len() - 1, 4)] {
                let (w1, w2) = (&g[a % g.len()], &g[b % g.len()]);
                let m1 = quotient_action_matrix(&m, &q, w1).unwrap();
                let m2 = quotient_action_matrix(&m, &q, w2).unwrap();
                let m12 = quotient_action_matrix(&m, &q, &w1.compose(w2)).unwrap();
                for d in 0..m1.len() {
                    assert_eq!(matmul(&m1[d], &m2[d]), m12[d]);
                }
            }
        }
    }

    #[test]
    fn character_traces_match_matrices() {
        let lam = p(&[2, 1, 1]);
        let m = module(&lam);
        let q = augmentation_quotient(&m).unwrap();
        let classes = conjugacy_classes(4).unwrap();
        let ch = graded_character(&m, &q, &classes).unwrap();
        for c in &classes {
            let mats = quotient_action_matrix(&m, &q, &c.rep).unwrap();
            for (d, mat) in mats.iter().enumerate() {
                assert_eq!(ch.value(d, &c.cycle_type), Some(&trace(mat)));
            }
        }
        let dims: Vec<Rational> = q.dims.iter().map(|&x| rational(x as i64)).collect();
        assert_eq!(ch.dims(), dims);
    }

    #[test]
    fn sum_of_characters_is_the_permutation_character() {
        for lam in [p(&[2, 1]), p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1])] {
            let m = module(&lam);
            let q = augmentation_quotient(&m).unwrap();
            let classes = conjugacy_classes(lam.n()).unwrap();
            let ch = graded_character(&m, &q, &classes).unwrap();
            let total = ch.total();
            for c in &classes {
                let fixed = m.fixed_points().fixed_word_count(&c.rep).unwrap();
                assert_eq!(total[&c.cycle_type], rational(fixed as i64));
            }
            for mult in ch.multiplicities().unwrap() {
                for x in mult.values() {
                    assert!(x.is_integer() && *x >= rational(0));
                }
            }
        }
    }

    #[test]
    fn incomplete_generators_fail_strict_completeness() {
        let lam = p(&[2, 1]);
        let (fp, gens) = artin_gens(&lam, 1);
        let only_one = gens.into_iter().take(1).collect();
        let m = build_image_module(&fp, only_one, 1).unwrap();
        match augmentation_quotient(&m) {
            Err(Error::Certificate { stage, .. }) => assert_eq!(stage, "completeness"),
            other => panic!("expected a completeness failure, got {other:?}"),
        }
        let q = augmentation_quotient_with(&m, Completeness::Relaxed).unwrap();
        assert_eq!(q.dims, vec![1, 0]);
        assert!(freeness_certificate(&m, &q).passed());
    }

    #[test]
    fn unstable_generators_are_reported() {
        let fp = fixed_point_set(&p(&[1, 1])).unwrap();
        let one = FixedPointVector::new(vec![SparsePoly::one(2); 2], 0).unwrap();
        let skew = FixedPointVector::new(vec![z(2, 1), SparsePoly::zero(2)], 1).unwrap();
        let classes = conjugacy_classes(2).unwrap();
        let r = experiment(&fp, vec![one, skew], 1, &classes).unwrap();
        assert!(r.stability.passed());
        assert_eq!(r.quotient_dims, vec![1, 1]);

        let point = FixedPointVector::new(vec![SparsePoly::one(2), SparsePoly::zero(2)], 0).unwrap();
        let r = experiment(&fp, vec![point], 1, &classes).unwrap();
        assert!(!r.stability.passed());
        assert_eq!(r.stability.failures[0].generator, 0);
        assert!(r.character.is_none());
    }

    #[test]
    fn stability_violation_surfaces_in_action_matrix() {
        let fp = fixed_point_set(&p(&[1, 1])).unwrap();
        let point = FixedPointVector::new(vec![SparsePoly::one(2), SparsePoly::zero(2)], 0).unwrap();
        let m = build_image_module(&fp, vec![point], 1).unwrap();
        let q = augmentation_quotient_with(&m, Completeness::Relaxed).unwrap();
        let err = quotient_action_matrix(&m, &q, &Permutation::transposition(2, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::StabilityViolation { degree: 0, .. }));
    }

    #[test]
    fn wrong_fixed_point_set_is_rejected() {
        let (_, gens) = artin_gens(&p(&[2, 1]), 1);
        let other = fixed_point_set(&p(&[1, 1, 1])).unwrap();
        assert!(matches!(
            build_image_module(&other, gens, 1),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn graded_character_serializes_by_cycle_type() {
        let m = module(&p(&[1, 1]));
        let q = augmentation_quotient(&m).unwrap();
        let ch = graded_character(&m, &q, &conjugacy_classes(2).unwrap()).unwrap();
        let s = serde_json::to_string(&ch).unwrap();
        assert_eq!(s, r#"{"n":2,"degrees":[{"2":"1","1,1":"1"},{"2":"-1","1,1":"1"}]}"#);
        assert_eq!(serde_json::from_str::<GradedCharacter>(&s).unwrap(), ch);
    }
}
