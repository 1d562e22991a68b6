//! Reference tables transcribed from the published appendix.
//!
//! Each file keeps the published representatives in cycle notation. They
//! are turned into class labels on load: the `A_n` class of a
//! representative is found with `an_class_of`, so a published split column
//! lands on whichever half contains it.

use std::collections::{BTreeMap, BTreeSet};

use classprod_core::{an_class_of, ClassLabel, GroupKind, Kind, Permutation};

use crate::table::{TableDocument, TableKind};
use crate::{Error, Result};

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name, ".csv")))
    };
}

const FILES: &[(&str, &str)] = &[
    fixture!("eta_S3"),
    fixture!("eta_S4"),
    fixture!("eta_S5"),
    fixture!("eta_S6"),
    fixture!("eta_S7"),
    fixture!("eta_S8"),
    fixture!("eta_S9"),
    fixture!("eta_A3"),
    fixture!("eta_A4"),
    fixture!("eta_A5"),
    fixture!("eta_A6"),
    fixture!("eta_A7"),
    fixture!("eta_A8"),
    fixture!("eta_A9"),
    fixture!("etaprime_S6"),
    fixture!("etaprime_S7"),
    fixture!("etaprime_S8"),
    fixture!("etaprime_S9"),
    fixture!("min_S"),
    fixture!("min_A"),
];

fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

fn label_of(rep: &str, group: GroupKind) -> Result<ClassLabel> {
    let p = Permutation::parse(rep, group.n)?;
    Ok(match group.kind {
        Kind::Symmetric => ClassLabel::symmetric(p.cycle_type()),
        Kind::Alternating => an_class_of(&p)?,
    })
}

/// Groups with a published table of the given kind.
pub fn published_groups(kind: TableKind) -> Vec<GroupKind> {
    let prefix = match kind {
        TableKind::Eta => "eta_",
        TableKind::EtaPrime => "etaprime_",
    };
    FILES
        .iter()
        .filter_map(|(name, _)| name.strip_prefix(prefix))
        .map(|g| g.parse().expect("fixture group"))
        .collect()
}

/// The published table, in published row order, or `None` if there is none.
pub fn paper_table(kind: TableKind, group: GroupKind) -> Result<Option<TableDocument>> {
    let name = match kind {
        TableKind::Eta => format!("eta_{group}"),
        TableKind::EtaPrime => format!("etaprime_{group}"),
    };
    let Some(text) = file(&name) else { return Ok(None) };
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        if i == 0 {
            for rep in record.iter().skip(1) {
                labels.push(label_of(rep, group)?);
            }
            continue;
        }
        if label_of(&record[0], group)? != labels[i - 1] {
            return Err(Error::Format(format!("{name}: row {i} does not match its column")));
        }
        let row = record
            .iter()
            .skip(1)
            .map(|c| c.parse().map_err(|_| Error::Format(format!("{name}: bad cell {c:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        rows.push(row);
    }
    Ok(Some(TableDocument { kind, group, labels, cells: rows }))
}

/// A row of a published minimum table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperMin {
    pub value: usize,
    /// Unordered pairs, smaller label first.
    pub pairs: BTreeSet<(ClassLabel, ClassLabel)>,
}

/// Order a pair so the smaller label comes first.
pub fn unordered(a: ClassLabel, b: ClassLabel) -> (ClassLabel, ClassLabel) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The published minimum table for `S_n` or `A_n`, keyed by `n`.
pub fn paper_min(kind: Kind) -> Result<BTreeMap<usize, PaperMin>> {
    let text = match kind {
        Kind::Symmetric => file("min_S"),
        Kind::Alternating => file("min_A"),
    }
    .expect("embedded");
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out: BTreeMap<usize, PaperMin> = BTreeMap::new();
    for record in reader.records() {
        let record = record?;
        let n: usize = record[0].parse().map_err(|_| Error::Format("bad n".into()))?;
        let value: usize = record[1].parse().map_err(|_| Error::Format("bad value".into()))?;
        let group = GroupKind { kind, n };
        let pair = unordered(label_of(&record[2], group)?, label_of(&record[3], group)?);
        let entry = out.entry(n).or_insert_with(|| PaperMin { value, pairs: BTreeSet::new() });
        if entry.value != value {
            return Err(Error::Format(format!("conflicting minimum for n = {n}")));
        }
        entry.pairs.insert(pair);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_loads_square() {
        for kind in [TableKind::Eta, TableKind::EtaPrime] {
            for g in published_groups(kind) {
                let t = paper_table(kind, g).unwrap().unwrap();
                assert_eq!(t.cells.len(), t.labels.len(), "{g}");
                let distinct: BTreeSet<_> = t.labels.iter().collect();
                assert_eq!(distinct.len(), t.labels.len(), "{g}");
            }
        }
        assert_eq!(published_groups(TableKind::Eta).len(), 14);
        assert_eq!(published_groups(TableKind::EtaPrime).len(), 4);
    }

    #[test]
    fn split_columns_map_to_both_halves() {
        let t = paper_table(TableKind::Eta, "A5".parse().unwrap()).unwrap().unwrap();
        let names: Vec<String> = t.labels.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["1,1,1,1,1", "1,2,2", "1,1,3", "5+", "5-"]);
    }

    #[test]
    fn minimum_tables() {
        let s = paper_min(Kind::Symmetric).unwrap();
        let a = paper_min(Kind::Alternating).unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), (3..=12).collect::<Vec<_>>());
        assert_eq!(s[&7].value, 3);
        assert_eq!(s[&7].pairs.len(), 5);
        assert_eq!(a[&9].value, 4);
        assert_eq!(a[&3].pairs.len(), 3);
        assert_eq!(a[&12].pairs.len(), 1);
    }
}
