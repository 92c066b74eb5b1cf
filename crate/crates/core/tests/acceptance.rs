//! End-to-end acceptance run: one line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use springer_core::exactalg::Rational;
use springer_core::flagmodel::{artin_basis, gkm_divisibility_check, springer_restriction};
use springer_core::gporacle::gp_graded_character;
use springer_core::locengine::{
    augmentation_quotient, build_image_module, freeness_certificate, graded_character,
    verify_w_stability, FreenessReport, GradedCharacter, QuotientPresentation, StabilityReport,
};
use springer_core::springer::{equivariance_check, TOP_DEGREE_CONVENTION};
use springer_core::symgroup::{
    conjugacy_classes, fixed_point_set, mn_character, partitions_of, Partition,
};

type Outcome = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Run {
    lambda: Partition,
    points: usize,
    stability: StabilityReport,
    quotient: Result<QuotientPresentation, String>,
    freeness: Option<FreenessReport>,
    character: Option<GradedCharacter>,
}

fn run_engine(lambda: &Partition) -> Run {
    let n = lambda.n();
    let bound = lambda.n_statistic();
    let fp = fixed_point_set(lambda).expect("fixed points");
    let gens = artin_basis(n)
        .iter()
        .filter(|c| c.degree <= bound)
        .map(|c| springer_restriction(c, &fp).expect("restriction"))
        .collect();
    let module = build_image_module(&fp, gens, bound).expect("module");
    let stability = verify_w_stability(&module).expect("stability run");
    let quotient = augmentation_quotient(&module).map_err(|e| e.to_string());
    let (freeness, character) = match &quotient {
        Ok(q) => (
            Some(freeness_certificate(&module, q)),
            graded_character(&module, q, &conjugacy_classes(n).expect("classes")).ok(),
        ),
        Err(_) => (None, None),
    };
    Run {
        lambda: lambda.clone(),
        points: fp.len(),
        stability,
        quotient,
        freeness,
        character,
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Coefficients of `[n]_q! = ∏_{i <= n} (1 + q + ... + q^{i-1})`.
fn q_factorial(n: usize) -> Vec<usize> {
    let mut out = vec![1usize];
    for i in 1..=n {
        let mut next = vec![0; out.len() + i - 1];
        for (d, c) in out.iter().enumerate() {
            for s in 0..i {
                next[d + s] += c;
            }
        }
        out = next;
    }
    out
}

/// Semistandard tableaux of shape `mu` and content `lambda`, counted by
/// placing the letters one value at a time as horizontal strips.
fn kostka_number(mu: &[usize], lambda: &[usize]) -> u64 {
    fn place(shape: &mut Vec<usize>, target: &[usize], content: &[usize]) -> u64 {
        let Some((&count, rest)) = content.split_first() else {
            return u64::from(shape.as_slice() == target);
        };
        // distribute `count` boxes as a horizontal strip
        fn strip(row: usize, left: usize, shape: &mut Vec<usize>, prev: &[usize], target: &[usize], rest: &[usize]) -> u64 {
            if row == target.len() {
                return if left == 0 { place(shape, target, rest) } else { 0 };
            }
            let cap_above = if row == 0 { usize::MAX } else { prev[row - 1] };
            let max_add = left
                .min(target[row] - shape[row])
                .min(cap_above.saturating_sub(shape[row]));
            let mut total = 0;
            for a in 0..=max_add {
                shape[row] += a;
                total += strip(row + 1, left - a, shape, prev, target, rest);
                shape[row] -= a;
            }
            total
        }
        let prev = shape.clone();
        strip(0, count, shape, &prev, target, rest)
    }
    let mut shape = vec![0; mu.len()];
    place(&mut shape, mu, lambda)
}

fn all_partitions(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(|n| partitions_of(n).expect("partitions")).collect()
}

fn criterion_1() -> Outcome {
    for lambda in all_partitions(6) {
        let expected = factorial(lambda.n()) / lambda.parts().iter().map(|&p| factorial(p)).product::<u128>();
        let got = fixed_point_set(&lambda).map_err(|e| e.to_string())?.len() as u128;
        if got != expected {
            return Err(format!("{lambda}: {got} fixed points, expected {expected}"));
        }
    }
    Ok(())
}

fn criterion_2(runs: &[Run]) -> Outcome {
    for n in 1..=5 {
        for c in artin_basis(n) {
            let r = gkm_divisibility_check(&c).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(format!("GKM fails for {}", c.poly.display_with("y")));
            }
        }
    }
    let stated: [&[usize]; 4] = [&[1], &[1, 1], &[1, 2, 2, 1], &[1, 3, 5, 6, 5, 3, 1]];
    for (i, s) in stated.iter().enumerate() {
        if q_factorial(i + 1) != s.to_vec() {
            return Err(format!("q-factorial expansion disagrees with {s:?}"));
        }
    }
    for n in 1..=5 {
        let run = runs
            .iter()
            .find(|r| r.lambda == Partition::column(n))
            .expect("column run");
        let dims = run.quotient.as_ref().map_err(Clone::clone)?;
        if dims.dims != q_factorial(n) {
            return Err(format!("(1^{n}): {:?} vs {:?}", dims.dims, q_factorial(n)));
        }
    }
    Ok(())
}

fn criterion_3(runs: &[Run]) -> Outcome {
    for r in runs {
        if !r.stability.passed() {
            return Err(format!("{}: {:?}", r.lambda, r.stability.failures[0]));
        }
    }
    Ok(())
}

fn criterion_4(runs: &[Run]) -> Outcome {
    for r in runs {
        let q = r.quotient.as_ref().map_err(|e| format!("{}: {e}", r.lambda))?;
        if q.total() != r.points {
            return Err(format!("{}: {} vs {}", r.lambda, q.total(), r.points));
        }
    }
    Ok(())
}

fn criterion_5(runs: &[Run]) -> Outcome {
    for r in runs {
        match &r.freeness {
            Some(f) if f.passed() => {}
            Some(f) => return Err(format!("{}: {:?}", r.lambda, f.first_failure())),
            None => return Err(format!("{}: no quotient", r.lambda)),
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for lambda in all_partitions(5) {
        let r = equivariance_check(&lambda).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{lambda}: {:?}", r.failures[0]));
        }
    }
    Ok(())
}

fn criterion_7(runs: &[Run]) -> Outcome {
    for r in runs {
        let engine = r.character.as_ref().ok_or(format!("{}: no character", r.lambda))?;
        let oracle = gp_graded_character(&r.lambda).map_err(|e| e.to_string())?;
        if *engine != oracle {
            return Err(format!("{}: engine and oracle characters differ", r.lambda));
        }
    }
    Ok(())
}

fn multiplicities(ch: &GradedCharacter) -> Result<Vec<BTreeMap<Partition, Rational>>, String> {
    ch.multiplicities().map_err(|e| e.to_string())
}

fn criterion_8(runs: &[Run]) -> Outcome {
    let spot = [([2, 1].as_slice(), [1, 1, 1].as_slice(), 2), (&[3, 2], &[2, 2, 1], 2), (&[2, 2], &[3, 1], 0)];
    for (mu, lambda, k) in spot {
        if kostka_number(mu, lambda) != k {
            return Err(format!("tableau count for {mu:?}, {lambda:?} is off"));
        }
    }
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    for r in runs {
        let n = r.lambda.n();
        let ch = r.character.as_ref().ok_or(format!("{}: no character", r.lambda))?;
        let mults = multiplicities(ch)?;
        for (mu, x) in &mults[0] {
            let want = if *mu == Partition::row(n) { &one } else { &zero };
            if x != want {
                return Err(format!("{}: degree 0 is not trivial", r.lambda));
            }
        }
        let top: Vec<(&Partition, &Rational)> = mults.last().unwrap().iter().filter(|(_, x)| **x != zero).collect();
        let expected_top = TOP_DEGREE_CONVENTION.shape_for(&r.lambda);
        if top != vec![(&expected_top, &one)] {
            return Err(format!("{}: top degree is {top:?}", r.lambda));
        }
        for mu in partitions_of(n).unwrap() {
            let total: Rational = mults.iter().map(|m| m[&mu].clone()).sum();
            let young = kostka_number(mu.parts(), r.lambda.parts());
            if total != Rational::from_integer(young.into()) {
                return Err(format!("{}: multiplicity of {mu} at q = 1 is {total}, Young's rule gives {young}", r.lambda));
            }
        }
    }
    Ok(())
}

fn criterion_9(runs: &[Run]) -> Outcome {
    let find = |parts: &[usize]| {
        let lambda = Partition::new(parts.to_vec()).unwrap();
        runs.iter().find(|r| r.lambda == lambda).expect("run")
    };
    let hook = find(&[2, 1]);
    let q = hook.quotient.as_ref().map_err(Clone::clone)?;
    if q.dims != [1, 2] {
        return Err(format!("(2,1) Poincare {:?}", q.dims));
    }
    let std = Partition::new(vec![2, 1]).unwrap();
    for c in conjugacy_classes(3).unwrap() {
        let want = Rational::from_integer(mn_character(&std, &c.cycle_type).unwrap().into());
        if hook.character.as_ref().unwrap().value(1, &c.cycle_type) != Some(&want) {
            return Err(format!("(2,1) degree-1 value on {}", c.cycle_type));
        }
    }
    let line = find(&[1, 1]);
    let q = line.quotient.as_ref().map_err(Clone::clone)?;
    if q.dims != [1, 1] {
        return Err(format!("(1,1) Poincare {:?}", q.dims));
    }
    let sign = Partition::column(2);
    for c in conjugacy_classes(2).unwrap() {
        let want = Rational::from_integer(mn_character(&sign, &c.cycle_type).unwrap().into());
        if line.character.as_ref().unwrap().value(1, &c.cycle_type) != Some(&want) {
            return Err(format!("(1,1) degree-1 value on {}", c.cycle_type));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let runs: Vec<Run> = all_partitions(5).iter().map(run_engine).collect();
    println!("engine runs for {} partitions took {:.2?}", runs.len(), start.elapsed());
    let criteria: [Criterion<'_>; 9] = [
        ("fixed-point count", Box::new(criterion_1)),
        ("localization sanity", Box::new(|| criterion_2(&runs))),
        ("W-stability", Box::new(|| criterion_3(&runs))),
        ("completeness", Box::new(|| criterion_4(&runs))),
        ("freeness", Box::new(|| criterion_5(&runs))),
        ("equivariance of restriction", Box::new(criterion_6)),
        ("oracle equivalence", Box::new(|| criterion_7(&runs))),
        ("representation structure", Box::new(|| criterion_8(&runs))),
        ("spot values", Box::new(|| criterion_9(&runs))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 9 criteria passed in {:.2?}", 9 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
