//! Executable checks of the classification results for small products.
//!
//! Each check sweeps a finite range exhaustively and returns a
//! [`VerifyReport`] whose details list every disagreement between the
//! predicted and the computed value.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::classes::{classes_of, ClassLabel, GroupKind};
use crate::error::{Error, Result};
use crate::eta::{eta, eta_prime, EtaOptions};
use crate::formulas::{small_eta_transposition_types, transposition_families};
use crate::perm::CycleType;
use crate::sched::Scheduler;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    DocumentedDiscrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DocumentedDiscrepancy => "documented-discrepancy",
        })
    }
}

/// One disagreement. `input` names the group and both factors so the pair
/// can be recomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detail {
    pub input: String,
    pub expected: String,
    pub computed: String,
    /// A known disagreement with the stated result, not a failure.
    pub documented: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub n_range: RangeInclusive<usize>,
    /// Number of individual cases examined.
    pub checked: usize,
    pub details: Vec<Detail>,
}

impl VerifyReport {
    pub fn new(name: &str, n_range: RangeInclusive<usize>) -> VerifyReport {
        VerifyReport { name: name.to_string(), n_range, checked: 0, details: Vec::new() }
    }

    /// Record a disagreement that makes the check fail.
    pub fn mismatch(&mut self, input: String, expected: impl ToString, computed: impl ToString) {
        self.details.push(Detail {
            input,
            expected: expected.to_string(),
            computed: computed.to_string(),
            documented: false,
        });
    }

    /// Record a known disagreement that does not fail the check.
    pub fn documented(&mut self, input: String, expected: impl ToString, computed: impl ToString) {
        self.details.push(Detail {
            input,
            expected: expected.to_string(),
            computed: computed.to_string(),
            documented: true,
        });
    }

    pub fn status(&self) -> Status {
        if self.details.iter().any(|d| !d.documented) {
            Status::Fail
        } else if self.details.is_empty() {
            Status::Pass
        } else {
            Status::DocumentedDiscrepancy
        }
    }

    pub fn failed(&self) -> bool {
        self.status() == Status::Fail
    }
}

fn pair_input(a: &ClassLabel, b: &ClassLabel) -> String {
    format!("{} [{}] x [{}]", a.group(), a, b)
}

fn type_pair_input(a: &CycleType, b: &CycleType) -> String {
    format!("S{} [{}] x [{}]", a.degree(), a, b)
}

fn nontrivial_classes(group: GroupKind) -> Vec<ClassLabel> {
    classes_of(group).into_iter().filter(|c| !c.is_identity()).collect()
}

fn nontrivial_types(n: usize) -> Vec<CycleType> {
    CycleType::all(n).into_iter().filter(|t| !t.is_identity()).collect()
}

fn unordered_pairs<T: Clone>(items: &[T]) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i..items.len() {
            out.push((items[i].clone(), items[j].clone()));
        }
    }
    out
}

/// `eta` run with `cap`; a budgeted run that stops early below the cap is
/// repeated without the budget, so the value is exact whenever it is below
/// `cap`.
fn eta_below(a: &ClassLabel, b: &ClassLabel, cap: usize, budget: Option<u64>) -> Result<usize> {
    let first = eta(a, b, &EtaOptions { cap: Some(cap), budget, ..EtaOptions::default() })?;
    if first.budget_exhausted && first.count < cap {
        return Ok(eta(a, b, &EtaOptions::capped(cap))?.count);
    }
    Ok(first.count)
}

/// Smallest `eta` over nontrivial pairs of `A_n`, for `n >= 6`.
pub fn predicted_min(n: usize) -> Result<usize> {
    if n < 6 {
        return Err(Error::Precondition("n >= 6"));
    }
    Ok(match n % 4 {
        0 => 2,
        1 => 4,
        _ => 5,
    })
}

/// The type pairs of `A_n` with fewer than five product classes, with
/// their `eta`.
pub fn predicted_small_pairs(n: usize) -> Result<BTreeSet<(CycleType, CycleType, usize)>> {
    if n < 6 {
        return Err(Error::Precondition("n >= 6"));
    }
    let three = three_cycle(n);
    let mut out = BTreeSet::new();
    match n % 4 {
        0 => {
            out.insert((CycleType::new(vec![2; n / 2])?, three, 2));
        }
        1 => {
            let mut parts = vec![2; (n - 1) / 2];
            parts.push(1);
            out.insert((CycleType::new(parts)?, three, 4));
        }
        _ => {}
    }
    Ok(out)
}

fn three_cycle(n: usize) -> CycleType {
    let mut parts = vec![1; n - 3];
    parts.push(3);
    CycleType::new(parts).expect("n >= 3")
}

fn transposition(n: usize) -> CycleType {
    let mut parts = vec![1; n - 2];
    parts.push(2);
    CycleType::new(parts).expect("n >= 2")
}

fn ordered(a: CycleType, b: CycleType, value: usize) -> (CycleType, CycleType, usize) {
    let (x, y) = if ClassLabel::symmetric(a.clone()) <= ClassLabel::symmetric(b.clone()) {
        (a, b)
    } else {
        (b, a)
    };
    (x, y, value)
}

/// Every nontrivial pair of `A_n` classes is run with cap 5. The pairs that
/// stay below 5, read as type pairs, must be exactly the predicted ones with
/// the predicted values, and the smallest capped value must equal
/// [`predicted_min`].
pub fn verify_main_theorem<S: Scheduler>(
    n: usize,
    budget: Option<u64>,
    sched: &S,
) -> Result<VerifyReport> {
    let predicted = predicted_small_pairs(n)?;
    let group = GroupKind::alternating(n);
    let mut report = VerifyReport::new("main theorem", n..=n);
    let pairs = unordered_pairs(&nontrivial_classes(group));
    let values = sched.run(pairs.len(), |k| eta_below(&pairs[k].0, &pairs[k].1, 5, budget));
    let mut found = BTreeSet::new();
    let mut smallest = usize::MAX;
    for ((a, b), value) in pairs.iter().zip(values) {
        let value = value?;
        report.checked += 1;
        smallest = smallest.min(value);
        if value < 5 {
            found.insert(ordered(a.ctype().clone(), b.ctype().clone(), value));
        }
    }
    let predicted: BTreeSet<_> = predicted.into_iter().map(|(a, b, v)| ordered(a, b, v)).collect();
    for (a, b, v) in found.difference(&predicted) {
        report.mismatch(format!("A{n} [{a}] x [{b}]"), ">= 5", v);
    }
    for (a, b, v) in predicted.difference(&found) {
        report.mismatch(format!("A{n} [{a}] x [{b}]"), v, "not below 5 or other value");
    }
    let expected_min = predicted_min(n)?;
    if smallest != expected_min {
        report.mismatch(format!("min over A{n}"), expected_min, smallest);
    }
    Ok(report)
}

/// `eta((1 2 3), (1 2 3))` in `A_n` is 5 for `n > 5`. The value at `n = 6`
/// is 6, which is reported as a documented discrepancy.
pub fn check_threecycle_square(range: RangeInclusive<usize>) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("3-cycle square", range.clone());
    for n in range {
        if n < 6 {
            return Err(Error::Precondition("n >= 6"));
        }
        let c = ClassLabel::new(GroupKind::alternating(n), three_cycle(n), crate::Spin::None)?;
        let value = eta(&c, &c, &EtaOptions::default())?.count;
        report.checked += 1;
        if value != 5 {
            report.details.push(Detail {
                input: pair_input(&c, &c),
                expected: "5".to_string(),
                computed: value.to_string(),
                documented: n == 6 && value == 6,
            });
        }
    }
    Ok(report)
}

/// Replace one maximal part `a` by `a - 1`, giving a type of `n - 1`.
pub fn reduce_max_cycle(t: &CycleType) -> Result<CycleType> {
    if t.max_part() < 3 {
        return Err(Error::Precondition("largest part must be at least 3"));
    }
    let mut parts = t.parts().to_vec();
    let last = parts.len() - 1;
    parts[last] -= 1;
    CycleType::new(parts)
}

/// `eta'(a, b) >= eta'(a', b')` for every ordered pair of types of `S_n`
/// whose largest parts are at least 3, where `'` is [`reduce_max_cycle`].
pub fn check_induction_step<S: Scheduler>(n: usize, sched: &S) -> Result<VerifyReport> {
    if n < 4 {
        return Err(Error::Precondition("n >= 4"));
    }
    let mut report = VerifyReport::new("induction step", n..=n);
    let types: Vec<CycleType> = nontrivial_types(n).into_iter().filter(|t| t.max_part() >= 3).collect();
    let mut pairs = Vec::new();
    for a in &types {
        for b in &types {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let results = sched.run(pairs.len(), |k| -> Result<(usize, usize)> {
        let (a, b) = &pairs[k];
        let full = eta_prime(a, b)?.count;
        let reduced = eta_prime(&reduce_max_cycle(a)?, &reduce_max_cycle(b)?)?.count;
        Ok((full, reduced))
    });
    for ((a, b), result) in pairs.iter().zip(results) {
        let (full, reduced) = result?;
        report.checked += 1;
        if full < reduced {
            report.mismatch(type_pair_input(a, b), format!(">= {reduced}"), full);
        }
    }
    Ok(report)
}

/// Every nontrivial pair of `S_n` classes with `eta <= 5` has a factor that
/// is a transposition or a 3-cycle.
pub fn check_three_cases<S: Scheduler>(n: usize, sched: &S) -> Result<VerifyReport> {
    if n < 9 {
        return Err(Error::Precondition("n >= 9"));
    }
    let mut report = VerifyReport::new("three cases", n..=n);
    let small = [transposition(n), three_cycle(n)];
    let pairs = unordered_pairs(&nontrivial_classes(GroupKind::symmetric(n)));
    let values = sched.run(pairs.len(), |k| eta_below(&pairs[k].0, &pairs[k].1, 6, None));
    for ((a, b), value) in pairs.iter().zip(values) {
        let value = value?;
        report.checked += 1;
        if value <= 5 && !small.contains(a.ctype()) && !small.contains(b.ctype()) {
            report.mismatch(pair_input(a, b), "a factor of type (1 2) or (1 2 3)", value);
        }
    }
    Ok(report)
}

/// `eta'(a, b) >= 5` for `a` a 4-cycle and every nontrivial `b` whose
/// standard representative moves 1, i.e. every type without fixed points.
pub fn check_fourcycle_floor(n: usize) -> Result<VerifyReport> {
    if n < 8 {
        return Err(Error::Precondition("n >= 8"));
    }
    let mut report = VerifyReport::new("4-cycle floor", n..=n);
    let mut parts = vec![1; n - 4];
    parts.push(4);
    let four = CycleType::new(parts)?;
    for b in nontrivial_types(n).into_iter().filter(|t| t.fixed_points() == 0) {
        let value = eta_prime(&four, &b)?.count;
        report.checked += 1;
        if value < 5 {
            report.mismatch(type_pair_input(&four, &b), ">= 5", value);
        }
    }
    Ok(report)
}

/// For each `2 <= n <= n_max`, the types with at most five classes in their
/// product with a transposition must be exactly the listed families.
pub fn check_transposition_corollary(n_max: usize) -> Result<VerifyReport> {
    if n_max < 2 {
        return Err(Error::Precondition("n_max >= 2"));
    }
    let mut report = VerifyReport::new("transposition corollary", 2..=n_max);
    for n in 2..=n_max {
        let computed = small_eta_transposition_types(n)?;
        let listed = transposition_families(n);
        report.checked += computed.union(&listed).count();
        for t in computed.difference(&listed) {
            report.mismatch(format!("S{n} [{t}]"), "not listed", "eta <= 5");
        }
        for t in listed.difference(&computed) {
            report.mismatch(format!("S{n} [{t}]"), "listed", "eta > 5");
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sched::Sequential;

    fn t(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn predictions() {
        let got: Vec<usize> = (6..=12).map(|n| predicted_min(n).unwrap()).collect();
        assert_eq!(got, [5, 5, 2, 4, 5, 5, 2]);
        assert!(predicted_min(5).is_err());
        let p8 = predicted_small_pairs(8).unwrap();
        assert_eq!(p8.len(), 1);
        assert!(p8.contains(&(t("2,2,2,2"), t("1,1,1,1,1,3"), 2)));
        assert!(predicted_small_pairs(10).unwrap().is_empty());
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_max_cycle(&t("1,1,3,5")).unwrap(), t("1,1,3,4"));
        assert_eq!(reduce_max_cycle(&t("3,3")).unwrap(), t("2,3"));
        assert_eq!(reduce_max_cycle(&t("9")).unwrap(), t("8"));
        assert!(reduce_max_cycle(&t("2,2")).is_err());
    }

    #[test]
    fn main_theorem_small() {
        for n in 6..=8 {
            let r = verify_main_theorem(n, None, &Sequential).unwrap();
            assert_eq!(r.status(), Status::Pass, "{:?}", r.details);
        }
    }

    #[test]
    fn square_of_three_cycles() {
        let r = check_threecycle_square(6..=8).unwrap();
        assert_eq!(r.status(), Status::DocumentedDiscrepancy);
        assert_eq!(r.details.len(), 1);
    }

    #[test]
    fn induction_and_floor() {
        for n in 4..=7 {
            assert_eq!(check_induction_step(n, &Sequential).unwrap().status(), Status::Pass);
        }
        assert_eq!(check_fourcycle_floor(8).unwrap().status(), Status::Pass);
    }
}
