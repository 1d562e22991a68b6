//! Minimum of `eta` over all pairs of nontrivial classes of a group.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::classes::{class_size, classes_of, ClassLabel, GroupKind};
use crate::error::{Error, Result};
use crate::eta::{eta, EtaOptions};
use crate::sched::Scheduler;

/// Pairs evaluated together between two updates of the running minimum.
const BATCH: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinEta {
    pub value: usize,
    /// Every unordered pair attaining the minimum, smaller label first.
    pub witnesses: BTreeSet<(ClassLabel, ClassLabel)>,
    /// Number of unordered pairs examined.
    pub pairs: usize,
    /// Pairs that ran out of budget below the cap and were run again
    /// without a budget.
    pub budget_reruns: usize,
}

impl MinEta {
    /// Some pair was abandoned on budget before it exceeded the cap.
    pub fn flagged(&self) -> bool {
        self.budget_reruns > 0
    }
}

/// Minimum of `eta` over unordered pairs of nontrivial classes of `group`,
/// with all pairs attaining it.
///
/// Pairs are visited in order of their smaller class size. Each one runs
/// with `cap = best + 1`, so a pair stops as soon as it is known to be worse
/// than the current minimum. `budget` limits the elements scanned per pair;
/// a pair that hits it while still at or below the current minimum is run
/// again without the budget, so the returned value and witnesses are exact.
pub fn min_eta<S: Scheduler>(group: GroupKind, budget: Option<u64>, sched: &S) -> Result<MinEta> {
    let floor = if group.is_alternating() { 3 } else { 2 };
    if group.n < floor {
        return Err(Error::Precondition("no nontrivial class pairs"));
    }
    let classes: Vec<ClassLabel> = classes_of(group).into_iter().filter(|c| !c.is_identity()).collect();
    let sizes: Vec<u128> = classes.iter().map(class_size).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..classes.len() {
        for j in i..classes.len() {
            pairs.push((i, j));
        }
    }
    pairs.sort_by_key(|&(i, j)| (sizes[i].min(sizes[j]), i, j));

    let mut best = usize::MAX;
    let mut witnesses = BTreeSet::new();
    let mut budget_reruns = 0;
    for batch in pairs.chunks(BATCH) {
        let cap = best.saturating_add(1);
        let results = sched.run(batch.len(), |k| {
            let (i, j) = batch[k];
            let opts = EtaOptions { cap: Some(cap), budget, ..EtaOptions::default() };
            let first = eta(&classes[i], &classes[j], &opts)?;
            if first.budget_exhausted && first.count < cap {
                let opts = EtaOptions::capped(cap);
                return eta(&classes[i], &classes[j], &opts).map(|r| (r.count, true));
            }
            Ok((first.count, false))
        });
        for (&(i, j), result) in batch.iter().zip(results) {
            let (count, rerun) = result?;
            budget_reruns += usize::from(rerun);
            if count < best {
                best = count;
                witnesses.clear();
            }
            if count == best {
                witnesses.insert((classes[i].clone(), classes[j].clone()));
            }
        }
    }
    Ok(MinEta { value: best, witnesses, pairs: pairs.len(), budget_reruns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sched::Sequential;

    fn label(group: &str, text: &str) -> ClassLabel {
        ClassLabel::parse(group.parse().unwrap(), text).unwrap()
    }

    #[test]
    fn small_minima() {
        let s5 = min_eta(GroupKind::symmetric(5), None, &Sequential).unwrap();
        assert_eq!(s5.value, 2);
        assert_eq!(s5.witnesses.len(), 1);
        let (a, b) = s5.witnesses.iter().next().unwrap();
        assert_eq!((a, b), (&label("S5", "1,1,1,2"), &label("S5", "5")));

        let a5 = min_eta(GroupKind::alternating(5), None, &Sequential).unwrap();
        assert_eq!(a5.value, 3);
        assert_eq!(a5.witnesses.len(), 2);
    }

    #[test]
    fn budget_does_not_change_the_answer() {
        let g = GroupKind::alternating(6);
        let exact = min_eta(g, None, &Sequential).unwrap();
        let tight = min_eta(g, Some(10), &Sequential).unwrap();
        assert_eq!(exact.value, tight.value);
        assert_eq!(exact.witnesses, tight.witnesses);
        assert!(tight.flagged());
        assert!(!exact.flagged());
    }

    #[test]
    fn too_small_groups() {
        assert!(min_eta(GroupKind::symmetric(1), None, &Sequential).is_err());
        assert!(min_eta(GroupKind::alternating(2), None, &Sequential).is_err());
        assert_eq!(min_eta(GroupKind::symmetric(2), None, &Sequential).unwrap().value, 1);
    }
}
