//! The `verify` suite: every check for every partition up to a size.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use springer_core::flagmodel::{artin_basis, gkm_divisibility_check, springer_restriction};
use springer_core::gporacle::oracle_cross_check;
use springer_core::locengine::{augmentation_quotient, build_image_module, freeness_certificate, verify_w_stability};
use springer_core::springer::equivariance_check;
use springer_core::symgroup::{fixed_point_set, partitions_of, Partition};
use springer_core::Result;

pub const CHECKS: [&str; 7] = [
    "fixed_points",
    "gkm",
    "stability",
    "freeness",
    "completeness",
    "equivariance",
    "oracle",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    fn from_outcome(name: &str, outcome: Result<Option<String>>) -> Self {
        let (passed, detail) = match outcome {
            Ok(None) => (true, None),
            Ok(Some(why)) => (false, Some(why)),
            Err(e) => (false, Some(e.to_string())),
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub lambda: Partition,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub n_max: usize,
    pub rows: Vec<Row>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.checks.iter().all(|c| c.passed))
    }

    /// `lambda:check` for every failing cell.
    pub fn failures(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(move |c| format!("({}):{}", r.lambda, c.name))
            })
            .collect()
    }
}

fn fixed_points(lambda: &Partition) -> Result<Option<String>> {
    let got = fixed_point_set(lambda)?.len() as u128;
    let want = lambda.multinomial();
    Ok((got != want).then(|| format!("{got} fixed points, expected {want}")))
}

fn gkm(lambda: &Partition) -> Result<Option<String>> {
    for class in artin_basis(lambda.n()) {
        let report = gkm_divisibility_check(&class)?;
        if let Some(f) = report.first_failure {
            return Ok(Some(format!(
                "{} fails at {} along the transposition ({} {})",
                class.poly.display_with("y"),
                f.w,
                f.a + 1,
                f.b + 1
            )));
        }
    }
    Ok(None)
}

/// Stability, freeness and completeness share one image module.
fn module_checks(lambda: &Partition) -> [Check; 3] {
    let bound = lambda.n_statistic();
    let module = fixed_point_set(lambda).and_then(|fp| {
        let gens = artin_basis(lambda.n())
            .iter()
            .filter(|c| c.degree <= bound)
            .map(|c| springer_restriction(c, &fp))
            .collect::<Result<Vec<_>>>()?;
        build_image_module(&fp, gens, bound)
    });
    let module = match module {
        Ok(m) => m,
        Err(e) => {
            let why = e.to_string();
            return ["stability", "freeness", "completeness"]
                .map(|name| Check::from_outcome(name, Ok(Some(why.clone()))));
        }
    };
    let stability = verify_w_stability(&module).map(|r| {
        r.failures
            .first()
            .map(|f| format!("generator {} leaves the module under {} in degree {}", f.generator, f.permutation, f.degree))
    });
    let quotient = augmentation_quotient(&module);
    let (freeness, completeness) = match &quotient {
        Ok(q) => {
            let freeness = freeness_certificate(&module, q)
                .first_failure()
                .map(|f| format!("degree {}: rank {}, expected {}", f.degree, f.rank, f.expected));
            (Ok(freeness), Ok(None))
        }
        Err(e) => (Ok(Some(format!("no quotient: {e}"))), Ok(Some(e.to_string()))),
    };
    [
        Check::from_outcome("stability", stability),
        Check::from_outcome("freeness", freeness),
        Check::from_outcome("completeness", completeness),
    ]
}

fn equivariance(lambda: &Partition) -> Result<Option<String>> {
    let report = equivariance_check(lambda)?;
    Ok(report
        .failures
        .first()
        .map(|(class, w)| format!("restriction of {class} does not intertwine {w}")))
}

fn oracle(lambda: &Partition) -> Result<Option<String>> {
    let report = oracle_cross_check(lambda)?;
    Ok((!report.passed).then(|| "engine and oracle graded characters differ".to_string()))
}

fn run_one(lambda: &Partition) -> Row {
    let [stability, freeness, completeness] = module_checks(lambda);
    Row {
        lambda: lambda.clone(),
        checks: vec![
            Check::from_outcome("fixed_points", fixed_points(lambda)),
            Check::from_outcome("gkm", gkm(lambda)),
            stability,
            freeness,
            completeness,
            Check::from_outcome("equivariance", equivariance(lambda)),
            Check::from_outcome("oracle", oracle(lambda)),
        ],
    }
}

pub fn run(n_max: usize) -> Result<Summary> {
    let mut partitions = Vec::new();
    for n in 1..=n_max {
        partitions.extend(partitions_of(n)?);
    }
    let rows = partitions.par_iter().map(run_one).collect();
    Ok(Summary { n_max, rows })
}
