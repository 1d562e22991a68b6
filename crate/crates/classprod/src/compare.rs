//! Key-based comparison against published tables.
//!
//! The two halves of a split `A_n` class are only defined up to swapping,
//! so each comparison tries every assignment of the published halves to
//! `+`/`-` (one choice per split type) and keeps the best one.

use std::collections::{BTreeMap, BTreeSet};

use classprod_core::{ClassLabel, CycleType};

use crate::fixtures::{unordered, PaperMin};
use crate::table::TableDocument;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: ClassLabel,
    pub col: ClassLabel,
    pub expected: usize,
    pub computed: usize,
}

fn split_types<'a>(labels: impl Iterator<Item = &'a ClassLabel>) -> Vec<CycleType> {
    let set: BTreeSet<CycleType> = labels.filter(|l| l.is_split()).map(|l| l.ctype().clone()).collect();
    set.into_iter().collect()
}

/// Relabelling that swaps the halves of the split types selected by `mask`.
fn flipper(types: &[CycleType], mask: usize) -> impl Fn(&ClassLabel) -> ClassLabel + '_ {
    move |l: &ClassLabel| {
        let swap = types.iter().position(|t| t == l.ctype()).is_some_and(|i| mask >> i & 1 == 1);
        if swap {
            l.flipped()
        } else {
            l.clone()
        }
    }
}

/// Cells of `expected` that disagree with `computed`, under the best
/// assignment of split halves. Both tables must cover the same classes.
pub fn compare_tables(computed: &TableDocument, expected: &TableDocument) -> Result<Vec<Mismatch>> {
    if computed.kind != expected.kind || computed.group != expected.group {
        return Err(Error::Format("tables of different kind or group".into()));
    }
    let have: BTreeSet<&ClassLabel> = computed.labels.iter().collect();
    let want: BTreeSet<&ClassLabel> = expected.labels.iter().collect();
    if have != want {
        return Err(Error::Format(format!(
            "{} {}: computed and published tables index different classes",
            computed.kind.as_str(),
            computed.group
        )));
    }
    let index: BTreeMap<&ClassLabel, usize> = computed.labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let types = split_types(expected.labels.iter());
    let mut best: Option<Vec<Mismatch>> = None;
    for mask in 0..1usize << types.len() {
        let relabel = flipper(&types, mask);
        let mut found = Vec::new();
        for (i, row) in expected.labels.iter().enumerate() {
            for (j, col) in expected.labels.iter().enumerate() {
                let (r, c) = (relabel(row), relabel(col));
                let value = computed.cells[index[&r]][index[&c]];
                if value != expected.cells[i][j] {
                    found.push(Mismatch { row: r, col: c, expected: expected.cells[i][j], computed: value });
                }
            }
        }
        if best.as_ref().is_none_or(|b| found.len() < b.len()) {
            best = Some(found);
        }
    }
    Ok(best.unwrap_or_default())
}

/// Whether a computed minimum and its witness pairs agree with a published
/// row, under some assignment of split halves.
pub fn min_matches(value: usize, pairs: &BTreeSet<(ClassLabel, ClassLabel)>, expected: &PaperMin) -> bool {
    if value != expected.value {
        return false;
    }
    let types = split_types(expected.pairs.iter().flat_map(|(a, b)| [a, b]));
    (0..1usize << types.len()).any(|mask| {
        let relabel = flipper(&types, mask);
        let moved: BTreeSet<_> = expected.pairs.iter().map(|(a, b)| unordered(relabel(a), relabel(b))).collect();
        &moved == pairs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::paper_table;
    use crate::table::{generate, TableKind};
    use classprod_core::Sequential;

    #[test]
    fn swapped_halves_still_match() {
        let g = "A5".parse().unwrap();
        let computed = generate(TableKind::Eta, g, &Sequential).unwrap();
        let mut paper = paper_table(TableKind::Eta, g).unwrap().unwrap();
        assert!(compare_tables(&computed, &paper).unwrap().is_empty());
        for l in paper.labels.iter_mut() {
            *l = l.flipped();
        }
        assert!(compare_tables(&computed, &paper).unwrap().is_empty());
        paper.cells[1][1] += 1;
        let diff = compare_tables(&computed, &paper).unwrap();
        assert_eq!(diff.len(), 1);
        assert_eq!(diff[0].expected, diff[0].computed + 1);
    }
}
