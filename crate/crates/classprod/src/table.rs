//! Full pairwise tables and their CSV, JSON and text forms.
//!
//! The data body never carries timestamps or run times, so emitting the
//! same table twice, or parsing and re-emitting it, gives identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use classprod_core::{classes_of, eta, eta_prime, ClassLabel, EtaOptions, GroupKind, Kind, Scheduler};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const TOOL: &str = concat!("classprod ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableKind {
    Eta,
    EtaPrime,
}

impl TableKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Eta => "eta",
            TableKind::EtaPrime => "eta-prime",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableKind> {
        match s {
            "eta" => Ok(TableKind::Eta),
            "eta-prime" | "etaprime" => Ok(TableKind::EtaPrime),
            _ => Err(Error::Format(format!("unknown table kind {s:?}"))),
        }
    }
}

/// A square table over `labels`: `cells[i][j]` is the value for the pair
/// (`labels[i]`, `labels[j]`). η′ tables are indexed by the even types of
/// `S_n`, written as `S_n` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDocument {
    pub kind: TableKind,
    pub group: GroupKind,
    pub labels: Vec<ClassLabel>,
    pub cells: Vec<Vec<usize>>,
}

/// Rows and columns of a table, in table order.
pub fn table_labels(kind: TableKind, group: GroupKind) -> Result<Vec<ClassLabel>> {
    match kind {
        TableKind::Eta => Ok(classes_of(group)),
        TableKind::EtaPrime => {
            if group.kind != Kind::Symmetric {
                return Err(Error::Format("eta-prime tables are indexed by S_n types".into()));
            }
            Ok(classes_of(group).into_iter().filter(|l| l.ctype().parity().is_even()).collect())
        }
    }
}

/// Compute a full table. η is symmetric, so only pairs `i <= j` are run.
pub fn generate<S: Scheduler>(kind: TableKind, group: GroupKind, sched: &S) -> Result<TableDocument> {
    let labels = table_labels(kind, group)?;
    let len = labels.len();
    let pairs: Vec<(usize, usize)> = match kind {
        TableKind::Eta => (0..len).flat_map(|i| (i..len).map(move |j| (i, j))).collect(),
        TableKind::EtaPrime => (0..len).flat_map(|i| (0..len).map(move |j| (i, j))).collect(),
    };
    let values = sched.run(pairs.len(), |k| -> classprod_core::Result<usize> {
        let (a, b) = (&labels[pairs[k].0], &labels[pairs[k].1]);
        match kind {
            TableKind::Eta => Ok(eta(a, b, &EtaOptions::default())?.count),
            TableKind::EtaPrime => Ok(eta_prime(a.ctype(), b.ctype())?.count),
        }
    });
    let mut cells = vec![vec![0; len]; len];
    for (&(i, j), value) in pairs.iter().zip(values) {
        let value = value?;
        cells[i][j] = value;
        if kind == TableKind::Eta {
            cells[j][i] = value;
        }
    }
    Ok(TableDocument { kind, group, labels, cells })
}

impl TableDocument {
    pub fn get(&self, a: &ClassLabel, b: &ClassLabel) -> Option<usize> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        Some(self.cells[i][j])
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.labels.len();
        if self.cells.len() != n || self.cells.iter().any(|r| r.len() != n) {
            return Err(Error::Format(format!("table is not {n} x {n}")));
        }
        Ok(())
    }

    fn corner(&self) -> String {
        format!("{}:{}", self.kind.as_str(), self.group)
    }

    /// First row: `kind:group` then the column labels; each further row is
    /// a row label followed by its cells.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let mut header = vec![self.corner()];
        header.extend(self.labels.iter().map(ToString::to_string));
        w.write_record(&header)?;
        for (label, row) in self.labels.iter().zip(&self.cells) {
            let mut record = vec![label.to_string()];
            record.extend(row.iter().map(ToString::to_string));
            w.write_record(&record)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn from_csv(text: &str) -> Result<TableDocument> {
        let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
        let mut records = reader.records();
        let header = records.next().ok_or_else(|| Error::Format("empty table".into()))??;
        let (kind, group) = parse_corner(&header[0])?;
        let labels =
            header.iter().skip(1).map(|s| ClassLabel::parse(group, s)).collect::<classprod_core::Result<Vec<_>>>()?;
        let mut cells = Vec::new();
        for (i, record) in records.enumerate() {
            let record = record?;
            let label = labels.get(i).ok_or_else(|| Error::Format("too many rows".into()))?;
            if ClassLabel::parse(group, &record[0])? != *label {
                return Err(Error::Format(format!("row {} is labelled {} but column is {label}", i + 1, &record[0])));
            }
            let row = record
                .iter()
                .skip(1)
                .map(|c| c.parse::<usize>().map_err(|_| Error::Format(format!("bad cell {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cells.push(row);
        }
        let doc = TableDocument { kind, group, labels, cells };
        doc.check_shape()?;
        Ok(doc)
    }

    /// Object with `group`, `kind`, `labels`, row-major `cells` and `meta`.
    pub fn to_json(&self) -> Result<String> {
        let body = JsonTable {
            group: self.group.to_string(),
            kind: self.kind.as_str().to_string(),
            labels: self.labels.iter().map(ToString::to_string).collect(),
            cells: self.cells.clone(),
            meta: JsonMeta { tool: TOOL.to_string() },
        };
        let mut text = serde_json::to_string_pretty(&body)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<TableDocument> {
        let body: JsonTable = serde_json::from_str(text)?;
        let group: GroupKind = body.group.parse()?;
        let kind: TableKind = body.kind.parse()?;
        let labels = body
            .labels
            .iter()
            .map(|s| ClassLabel::parse(group, s))
            .collect::<classprod_core::Result<Vec<_>>>()?;
        let doc = TableDocument { kind, group, labels, cells: body.cells };
        doc.check_shape()?;
        Ok(doc)
    }

    /// Aligned plain text, one row per line.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        let head = self.corner();
        let first = names.iter().map(String::len).chain([head.len()]).max().unwrap_or(0);
        let width = names
            .iter()
            .map(String::len)
            .chain(self.cells.iter().flatten().map(|v| v.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{head:<first$}");
        for name in &names {
            let _ = write!(out, " {name:>width$}");
        }
        out.push('\n');
        for (name, row) in names.iter().zip(&self.cells) {
            let _ = write!(out, "{name:<first$}");
            for v in row {
                let _ = write!(out, " {v:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

fn parse_corner(s: &str) -> Result<(TableKind, GroupKind)> {
    let (kind, group) = s.split_once(':').ok_or_else(|| Error::Format(format!("bad table header {s:?}")))?;
    Ok((kind.parse()?, group.parse()?))
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    group: String,
    kind: String,
    labels: Vec<String>,
    cells: Vec<Vec<usize>>,
    meta: JsonMeta,
}

#[derive(Serialize, Deserialize)]
struct JsonMeta {
    tool: String,
}
