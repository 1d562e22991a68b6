//! Closed forms for products with a transposition or a 3-cycle.
//!
//! Both formulas are phrased over the distinct parts `a_0 = 1 < a_1 < ...`
//! of a cycle type with multiplicities `n_i`; the fixed-point part counts as
//! a distinct part when present.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::perm::CycleType;

/// Number of partitions of `m` into exactly three positive parts.
pub fn partitions_into_three(m: usize) -> usize {
    let mut count = 0;
    for a in 1..=m / 3 {
        for b in a..=(m - a) / 2 {
            if m - a - b >= b {
                count += 1;
            }
        }
    }
    count
}

fn nontrivial(t: &CycleType) -> Result<Vec<(usize, usize)>> {
    if t.is_identity() {
        return Err(Error::Precondition("the identity type is excluded"));
    }
    Ok(t.multiplicities())
}

/// Exact `eta(alpha^{S_n} tau^{S_n})` for `tau` a transposition:
/// `sum floor(a_i / 2) + C(r', 2) + r''`, with `r'` the number of distinct
/// parts and `r''` the number of parts of multiplicity at least two.
pub fn eta_transposition(t: &CycleType) -> Result<usize> {
    let parts = nontrivial(t)?;
    let halves: usize = parts.iter().map(|&(a, _)| a / 2).sum();
    let distinct = parts.len();
    let repeated = parts.iter().filter(|&&(_, m)| m >= 2).count();
    Ok(halves + binomial(distinct, 2) as usize + repeated)
}

/// The right-hand side `R(t)` of the 3-cycle estimate.
///
/// `R(t) = sum P3(a_i) + C(r', 3) + r''' + (r' - 1) sum floor(a_i / 2) + s3
/// + sum_{a_i >= 2, n_i >= 2} (a_i - 1)`, where `P3` counts partitions into
/// three parts, `r'''` counts multiplicities of at least three and `s3` is 1
/// when some part is at least 3. The `(r' - 1)` sum runs over the parts of
/// multiplicity at least two, whose cycles can meet the 3-cycle as
/// `a_i, a_i, a_j`. Each term counts a family of pairwise distinct product
/// classes, so `R(t)` bounds `eta(alpha^{S_n} (1 2 3)^{S_n})` from below.
pub fn eta_threecycle_bound(t: &CycleType) -> Result<usize> {
    let parts = nontrivial(t)?;
    let distinct = parts.len();
    let p3: usize = parts.iter().map(|&(a, _)| partitions_into_three(a)).sum();
    let triples = parts.iter().filter(|&&(_, m)| m >= 3).count();
    let halves: usize = parts.iter().filter(|&&(_, m)| m >= 2).map(|&(a, _)| a / 2).sum();
    let s3 = usize::from(parts.iter().any(|&(a, _)| a >= 3));
    let paired: usize = parts.iter().filter(|&&(a, m)| a >= 2 && m >= 2).map(|&(a, _)| a - 1).sum();
    Ok(p3 + binomial(distinct, 3) as usize + triples + (distinct - 1) * halves + s3 + paired)
}

/// Nontrivial types of `S_n` whose product with the transposition class
/// has at most five classes, by direct evaluation of the closed form.
pub fn small_eta_transposition_types(n: usize) -> Result<BTreeSet<CycleType>> {
    if n < 2 {
        return Err(Error::Precondition("n >= 2"));
    }
    Ok(CycleType::all(n)
        .into_iter()
        .filter(|t| !t.is_identity())
        .filter(|t| eta_transposition(t).is_ok_and(|v| v <= 5))
        .collect())
}

fn push(out: &mut BTreeSet<CycleType>, n: usize, parts: Vec<usize>) {
    if let Ok(t) = CycleType::with_degree(parts, n) {
        out.insert(t);
    }
}

fn repeat(part: usize, times: usize) -> impl Iterator<Item = usize> {
    core::iter::repeat_n(part, times)
}

/// The eight families of cycle types listed as candidates for
/// `eta(alpha tau) <= 5`, instantiated at degree `n`, exactly as stated.
pub fn transposition_families(n: usize) -> BTreeSet<CycleType> {
    let mut out = BTreeSet::new();
    // {n}, 2 <= n <= 11
    if (2..=11).contains(&n) {
        push(&mut out, n, alloc::vec![n]);
    }
    // {i^m}, 2 <= i <= 9, m >= 2
    for i in 2..=9 {
        if n.is_multiple_of(i) && n / i >= 2 {
            push(&mut out, n, repeat(i, n / i).collect());
        }
    }
    // {i, j}, 1 <= i < j <= 8, i <= 4, i + j <= 9
    for i in 1..=4 {
        for j in i + 1..=8 {
            if i + j == n && n <= 9 {
                push(&mut out, n, alloc::vec![i, j]);
            }
        }
    }
    // {3, 7}, n = 10
    if n == 10 {
        push(&mut out, n, alloc::vec![3, 7]);
    }
    // {i^m, j}, im + j <= 8, i <= 3, m >= 2, {i, j} != {2, 6}
    if n <= 8 {
        for i in 1..=3 {
            for m in 2..=n / i {
                if i * m >= n {
                    continue;
                }
                let j = n - i * m;
                if j == i || (i == 2 && j == 6) || (i == 6 && j == 2) {
                    continue;
                }
                push(&mut out, n, repeat(i, m).chain(core::iter::once(j)).collect());
            }
        }
    }
    // {1^m1, j^m2}, m1, m2 >= 2, m1 + j m2 <= 6, 2 <= j <= 5
    if n <= 6 {
        for j in 2..=5 {
            for m2 in 2..=n / j {
                if j * m2 + 2 > n {
                    continue;
                }
                let m1 = n - j * m2;
                push(&mut out, n, repeat(1, m1).chain(repeat(j, m2)).collect());
            }
        }
    }
    // {2^m1, 3^m2}, 2 m1 + 3 m2 = n
    for m2 in 1..=n / 3 {
        let rest = n - 3 * m2;
        if rest >= 2 && rest.is_multiple_of(2) {
            push(&mut out, n, repeat(2, rest / 2).chain(repeat(3, m2)).collect());
        }
    }
    // {1, 2, 3}, n = 6
    if n == 6 {
        push(&mut out, n, alloc::vec![1, 2, 3]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn three_part_partition_counts() {
        let got: Vec<usize> = (1..=9).map(partitions_into_three).collect();
        assert_eq!(got, [0, 0, 1, 1, 2, 3, 4, 5, 7]);
        assert_eq!(partitions_into_three(0), 0);
    }

    #[test]
    fn transposition_closed_form() {
        assert_eq!(eta_transposition(&t("5")).unwrap(), 2);
        assert_eq!(eta_transposition(&t("1,1,3")).unwrap(), 3);
        assert_eq!(eta_transposition(&t("2,3")).unwrap(), 3);
        assert_eq!(eta_transposition(&t("2")).unwrap(), 1);
        assert!(eta_transposition(&t("1,1,1")).is_err());
    }

    #[test]
    fn three_cycle_bound_examples() {
        assert_eq!(eta_threecycle_bound(&t("1,1,1,1,1,1,1,1,1,2")).unwrap(), 1);
        assert_eq!(eta_threecycle_bound(&t("2,2,2,2")).unwrap(), 2);
        assert_eq!(eta_threecycle_bound(&t("1,4")).unwrap(), 2);
        assert_eq!(eta_threecycle_bound(&t("1,2,3")).unwrap(), 3);
        // 2 + 1 + 1 + 2 * (0 + 1 + 2) + 1 + (2 + 3)
        assert_eq!(eta_threecycle_bound(&t("1,1,1,3,3,4,4")).unwrap(), 16);
        assert!(eta_threecycle_bound(&t("1,1,1")).is_err());
    }

    #[test]
    fn small_types() {
        assert!(small_eta_transposition_types(10).unwrap().contains(&t("3,7")));
        assert!(small_eta_transposition_types(11).unwrap().contains(&t("11")));
        assert!(!small_eta_transposition_types(12).unwrap().contains(&t("12")));
        assert!(small_eta_transposition_types(1).is_err());
    }

    #[test]
    fn family_instances() {
        assert!(transposition_families(10).contains(&t("3,7")));
        assert!(transposition_families(6).contains(&t("1,2,3")));
        assert!(transposition_families(12).contains(&t("2,2,2,2,2,2")));
        assert!(!transposition_families(10).contains(&t("2,8")));
    }
}
