//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use super::{partitions_of, Partition, Permutation};
use crate::error::{malformed, Result};
use crate::exactalg::Rational;

/// A conjugacy class of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub cycle_type: Partition,
    pub size: u64,
    pub rep: Permutation,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `n! / ∏_m m^{a_m} a_m!` for a cycle type with `a_m` parts equal to `m`.
pub fn class_size(cycle_type: &Partition) -> u64 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in cycle_type.parts() {
        *mult.entry(p).or_default() += 1;
    }
    let centralizer: u64 = mult
        .iter()
        .map(|(&m, &a)| (m as u64).pow(a as u32) * factorial(a))
        .product();
    factorial(cycle_type.n()) / centralizer
}

/// One class per partition of `n`, in canonical partition order.
pub fn conjugacy_classes(n: usize) -> Result<Vec<ConjClass>> {
    if n == 0 {
        return Err(malformed("conjugacy classes need n >= 1"));
    }
    Ok(partitions_of(n)?
        .into_iter()
        .map(|ct| ConjClass {
            size: class_size(&ct),
            rep: Permutation::with_cycle_type(&ct),
            cycle_type: ct,
        })
        .collect())
}

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shapes obtained by removing an `r`-rim hook, with the hook's sign.
fn remove_rim_hooks(shape: &[usize], r: usize) -> Vec<(Vec<usize>, i64)> {
    let l = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (l - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, if height % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn mn(shape: &[usize], rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return i64::from(shape.is_empty());
    }
    let key = (shape.to_vec(), rho.to_vec());
    if let Some(&v) = memo().read().expect("memo lock").get(&key) {
        return v;
    }
    let value = remove_rim_hooks(shape, rho[0])
        .into_iter()
        .map(|(s, sign)| sign * mn(&s, &rho[1..]))
        .sum();
    memo().write().expect("memo lock").insert(key, value);
    value
}

/// `χ^λ` on the class of the given cycle type.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.n() != cycle_type.n() {
        return Err(malformed(format!(
            "character of a partition of {} on a class of S_{}",
            lambda.n(),
            cycle_type.n()
        )));
    }
    Ok(mn(lambda.parts(), cycle_type.parts()))
}

/// Multiplicities `⟨f, χ^λ⟩` of a class function given by its values on
/// cycle types.
pub fn decompose_class_function(
    values: &BTreeMap<Partition, Rational>,
    n: usize,
) -> Result<BTreeMap<Partition, Rational>> {
    let classes = conjugacy_classes(n)?;
    for c in &classes {
        if !values.contains_key(&c.cycle_type) {
            return Err(malformed(format!(
                "class function has no value on cycle type {}",
                c.cycle_type
            )));
        }
    }
    let order = Rational::from_integer(factorial(n).into());
    partitions_of(n)?
        .into_iter()
        .map(|lam| {
            let mut acc = Rational::zero();
            for c in &classes {
                let chi = mn_character(&lam, &c.cycle_type)?;
                if chi != 0 {
                    acc += &values[&c.cycle_type]
                        * Rational::from_integer((c.size as i64 * chi).into());
                }
            }
            Ok((lam, acc / &order))
        })
        .collect()
}
