//! The type A pipeline: a partition in, a certified Springer representation
//! out.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::exactalg::Rational;
use crate::flagmodel::{artin_basis, restriction_intertwines, springer_restriction};
use crate::locengine::{
    augmentation_quotient, build_image_module, freeness_certificate, graded_character,
    verify_w_stability, GradedCharacter,
};
use crate::symgroup::{
    conjugacy_classes, decompose_class_function, fixed_point_set, partitions_of_with_limit,
    Partition, Permutation,
};

/// Largest `n` accepted unless overridden.
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerOptions {
    pub max_n: usize,
    /// Defaults to `n(λ)`.
    pub degree_bound: Option<usize>,
}

impl Default for SpringerOptions {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            degree_bound: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub stability: bool,
    pub freeness: bool,
    pub completeness: bool,
    pub equivariance: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpringerReport {
    pub lambda: Partition,
    pub degree_bound: usize,
    pub fixed_point_count: usize,
    pub poincare: Vec<usize>,
    pub graded_character: GradedCharacter,
    /// Per degree, multiplicity of each irreducible `χ^μ` that occurs.
    pub multiplicities: Vec<BTreeMap<Partition, u64>>,
    pub certificates: Certificates,
}

impl SpringerReport {
    /// The irreducible in the top degree, when it is a single one with
    /// multiplicity one.
    pub fn top_degree_shape(&self) -> Option<Partition> {
        let top = self.multiplicities.last()?;
        let mut nonzero = top.iter().filter(|(_, &m)| m > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((mu, 1)), None) => Some(mu.clone()),
            _ => None,
        }
    }

    /// Multiplicities summed over degrees.
    pub fn total_multiplicities(&self) -> BTreeMap<Partition, u64> {
        let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
        for m in &self.multiplicities {
            for (mu, &x) in m {
                *out.entry(mu.clone()).or_default() += x;
            }
        }
        out
    }
}

/// Wall-clock time spent in one pipeline stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub millis: f64,
}

struct Stopwatch {
    last: Instant,
    stages: Vec<StageTiming>,
}

impl Stopwatch {
    fn new() -> Self {
        Self {
            last: Instant::now(),
            stages: Vec::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.stages.push(StageTiming {
            stage: stage.to_string(),
            millis: (now - self.last).as_secs_f64() * 1e3,
        });
        self.last = now;
    }
}

fn check_size(lambda: &Partition, max_n: usize) -> Result<()> {
    if lambda.is_empty() {
        return Err(malformed("the partition must be nonempty"));
    }
    if lambda.n() > max_n {
        return Err(Error::Guardrail {
            what: "partition size n",
            value: lambda.n(),
            limit: max_n,
        });
    }
    Ok(())
}

pub fn springer_compute(lambda: &Partition) -> Result<SpringerReport> {
    springer_compute_with(lambda, &SpringerOptions::default()).map(|(r, _)| r)
}

/// Runs the full pipeline, returning the report and per-stage timings.
pub fn springer_compute_with(
    lambda: &Partition,
    opts: &SpringerOptions,
) -> Result<(SpringerReport, Vec<StageTiming>)> {
    check_size(lambda, opts.max_n)?;
    let n = lambda.n();
    let bound = opts.degree_bound.unwrap_or_else(|| lambda.n_statistic());
    let mut clock = Stopwatch::new();

    let fp = fixed_point_set(lambda)?;
    if fp.len() as u128 != lambda.multinomial() {
        return Err(Error::Certificate {
            stage: "fixed-points",
            degree: None,
            detail: format!("{} words, expected {}", fp.len(), lambda.multinomial()),
        });
    }
    clock.lap("fixed-points");

    let gens = artin_basis(n)
        .iter()
        .filter(|c| c.degree <= bound)
        .map(|c| springer_restriction(c, &fp))
        .collect::<Result<Vec<_>>>()?;
    clock.lap("restriction");

    let module = build_image_module(&fp, gens, bound)?;
    clock.lap("image-module");

    let stability = verify_w_stability(&module)?;
    if let Some(f) = stability.failures.first() {
        return Err(Error::Certificate {
            stage: "stability",
            degree: Some(f.degree),
            detail: format!("generator {} leaves the module under {}", f.generator, f.permutation),
        });
    }
    clock.lap("stability");

    let quotient = augmentation_quotient(&module)?;
    clock.lap("quotient");

    let freeness = freeness_certificate(&module, &quotient);
    if let Some(f) = freeness.first_failure() {
        return Err(Error::Certificate {
            stage: "freeness",
            degree: Some(f.degree),
            detail: format!("rank {} but the free module predicts {}", f.rank, f.expected),
        });
    }
    clock.lap("freeness");

    let equivariance = equivariance_check(lambda)?;
    if let Some((class, w)) = equivariance.failures.first() {
        return Err(Error::Certificate {
            stage: "equivariance",
            degree: None,
            detail: format!("restriction of {class} does not intertwine {w}"),
        });
    }
    clock.lap("equivariance");

    let classes = conjugacy_classes(n)?;
    let character = graded_character(&module, &quotient, &classes)?;
    clock.lap("character");

    let multiplicities = character
        .multiplicities()?
        .into_iter()
        .enumerate()
        .map(|(d, m)| {
            m.into_iter()
                .filter(|(_, x)| !x.is_zero())
                .map(|(mu, x)| {
                    natural(&x).map(|v| (mu.clone(), v)).ok_or_else(|| Error::Certificate {
                        stage: "character",
                        degree: Some(d),
                        detail: format!("multiplicity {x} of {mu} is not a non-negative integer"),
                    })
                })
                .collect::<Result<BTreeMap<_, _>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    clock.lap("decomposition");

    let report = SpringerReport {
        lambda: lambda.clone(),
        degree_bound: bound,
        fixed_point_count: fp.len(),
        poincare: quotient.dims,
        graded_character: character,
        multiplicities,
        certificates: Certificates {
            stability: true,
            freeness: true,
            completeness: true,
            equivariance: true,
        },
    };
    Ok((report, clock.stages))
}

fn natural(x: &Rational) -> Option<u64> {
    if x.is_integer() && *x >= Rational::zero() {
        x.to_integer().to_u64()
    } else {
        None
    }
}

/// Reports for default options, computed once per process.
pub fn cached_report(lambda: &Partition) -> Result<Arc<SpringerReport>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, Arc<SpringerReport>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(r) = memo.lock().expect("report memo").get(lambda) {
        return Ok(Arc::clone(r));
    }
    let report = Arc::new(springer_compute(lambda)?);
    memo.lock()
        .expect("report memo")
        .insert(lambda.clone(), Arc::clone(&report));
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub checked: usize,
    /// `(class, permutation)` pairs where restriction fails to intertwine.
    pub failures: Vec<(String, String)>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that restriction to the Springer fixed points intertwines the
/// variable permutation action with the coset action, for every Artin class
/// and adjacent transposition.
pub fn equivariance_check(lambda: &Partition) -> Result<EquivarianceReport> {
    let n = lambda.n();
    let fp = fixed_point_set(lambda)?;
    let basis = artin_basis(n);
    let perms: Vec<Permutation> = (0..n.saturating_sub(1))
        .map(|i| Permutation::adjacent(n, i))
        .collect();
    let results = basis
        .par_iter()
        .map(|c| {
            perms
                .iter()
                .map(|w| Ok((c, w, restriction_intertwines(c, w, &fp)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for (c, w, ok) in results.into_iter().flatten() {
        checked += 1;
        if !ok {
            failures.push((c.poly.display_with("y"), w.to_string()));
        }
    }
    Ok(EquivarianceReport { checked, failures })
}

/// Nonzero multiplicities of the irreducibles in the permutation
/// representation on the fixed points, computed by counting fixed words.
pub fn permutation_multiplicities(lambda: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let fp = fixed_point_set(lambda)?;
    let values = conjugacy_classes(lambda.n())?
        .into_iter()
        .map(|c| {
            let fixed = fp.fixed_word_count(&c.rep)?;
            Ok((c.cycle_type, Rational::from_integer(fixed.into())))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    decompose_class_function(&values, lambda.n())?
        .into_iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(mu, x)| {
            natural(&x)
                .map(|v| (mu, v))
                .ok_or_else(|| malformed("permutation character has a fractional multiplicity"))
        })
        .collect()
}

/// Which irreducible sits in the top degree of the representation for `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TopDegreeConvention {
    /// `χ^λ` itself.
    Identity,
    /// `χ^{λ'}`.
    Conjugate,
}

impl TopDegreeConvention {
    pub fn shape_for(self, lambda: &Partition) -> Partition {
        match self {
            TopDegreeConvention::Identity => lambda.clone(),
            TopDegreeConvention::Conjugate => lambda.conjugate(),
        }
    }
}

impl fmt::Display for TopDegreeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TopDegreeConvention::Identity => "the top degree carries chi^lambda",
            TopDegreeConvention::Conjugate => "the top degree carries chi^(lambda conjugate)",
        })
    }
}

/// The convention observed on every partition of 3, frozen.
pub const TOP_DEGREE_CONVENTION: TopDegreeConvention = TopDegreeConvention::Identity;

/// Recomputes the top-degree convention from the partitions of 3.
pub fn resolve_top_degree_convention() -> Result<TopDegreeConvention> {
    let mut fits_identity = true;
    let mut fits_conjugate = true;
    for lambda in partitions_of_with_limit(3, 3)? {
        let top = cached_report(&lambda)?.top_degree_shape();
        fits_identity &= top.as_ref() == Some(&lambda);
        fits_conjugate &= top.as_ref() == Some(&lambda.conjugate());
    }
    match (fits_identity, fits_conjugate) {
        (true, false) => Ok(TopDegreeConvention::Identity),
        (false, true) => Ok(TopDegreeConvention::Conjugate),
        _ => Err(Error::Convention(
            "top-degree shapes for n = 3 fit neither convention".into(),
        )),
    }
}

/// One Kostka–Foulkes entry: coefficients of `q^0, q^1, ...`, trailing
/// zeros trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaFoulkesEntry {
    pub mu: Partition,
    pub lambda: Partition,
    pub coefficients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaFoulkesTable {
    pub n: usize,
    pub shapes: Vec<Partition>,
    pub convention: String,
    /// Entries listed `μ`-major.
    pub by_mu_lambda: Vec<KostkaFoulkesEntry>,
    /// The same entries listed `λ`-major.
    pub by_lambda_mu: Vec<KostkaFoulkesEntry>,
}

impl KostkaFoulkesTable {
    pub fn get(&self, mu: &Partition, lambda: &Partition) -> Option<&[u64]> {
        self.by_mu_lambda
            .iter()
            .find(|e| &e.mu == mu && &e.lambda == lambda)
            .map(|e| e.coefficients.as_slice())
    }
}

pub const KOSTKA_FOULKES_CONVENTION: &str = "entry (mu, lambda) is the sum over d of the multiplicity of the irreducible chi^mu in degree d of the Springer representation for Jordan type lambda, times q^d; entry ((n), lambda) = 1 and the top degree of column lambda carries chi^lambda";

/// Formats coefficients low-degree-first as a polynomial in `q`.
pub fn format_q_polynomial(coefficients: &[u64]) -> String {
    let terms: Vec<String> = coefficients
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| {
            let var = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            match (c, d) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn kostka_foulkes_table(n: usize) -> Result<KostkaFoulkesTable> {
    kostka_foulkes_table_with(n, DEFAULT_MAX_N)
}

pub fn kostka_foulkes_table_with(n: usize, max_n: usize) -> Result<KostkaFoulkesTable> {
    if n == 0 {
        return Err(malformed("the table needs n >= 1"));
    }
    let shapes = partitions_of_with_limit(n, max_n)?;
    let reports = shapes
        .par_iter()
        .map(|lambda| {
            if max_n == DEFAULT_MAX_N {
                cached_report(lambda)
            } else {
                springer_compute_with(lambda, &SpringerOptions { max_n, degree_bound: None })
                    .map(|(r, _)| Arc::new(r))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let entry = |mu: &Partition, li: usize| {
        let mut coefficients: Vec<u64> = reports[li]
            .multiplicities
            .iter()
            .map(|m| m.get(mu).copied().unwrap_or(0))
            .collect();
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        KostkaFoulkesEntry {
            mu: mu.clone(),
            lambda: shapes[li].clone(),
            coefficients,
        }
    };
    let by_mu_lambda = shapes
        .iter()
        .flat_map(|mu| (0..shapes.len()).map(move |li| (mu, li)))
        .map(|(mu, li)| entry(mu, li))
        .collect();
    let by_lambda_mu = (0..shapes.len())
        .flat_map(|li| shapes.iter().map(move |mu| (mu, li)))
        .map(|(mu, li)| entry(mu, li))
        .collect();
    Ok(KostkaFoulkesTable {
        n,
        shapes,
        convention: KOSTKA_FOULKES_CONVENTION.to_string(),
        by_mu_lambda,
        by_lambda_mu,
    })
}
