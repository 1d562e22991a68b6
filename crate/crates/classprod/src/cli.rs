//! Command-line front end. [`run`] takes the arguments and output streams
//! and returns the process exit code: 0 on success, 1 when a verification
//! fails and 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use classprod_core::{
    class_size, classes_of, eta_prime, eta_with, ClassLabel, CycleType, EtaOptions, EtaResult,
    GroupKind, Kind, MinEta,
};
use serde::Serialize;

use crate::cache::{Cache, Tables};
use crate::pool::Pool;
use crate::suites::{reports_json, reports_text, run_suite, Suite};
use crate::table::{TableDocument, TableKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const TABLE_LIMIT: usize = 9;
const MIN_LIMIT: usize = 12;
const ETA_LIMIT: usize = 14;

#[derive(Parser, Debug)]
#[command(name = "classprod", version, about = "Count the conjugacy classes in products of two classes of S_n or A_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of classes in the product of two classes
    Eta(EtaArgs),
    /// Number of cycle types over the stabilizer of n
    Etaprime(EtaprimeArgs),
    /// Full pairwise table for a group
    Table(TableArgs),
    /// Smallest eta over nontrivial class pairs, with all attaining pairs
    Min(MinArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// List the classes of a group
    Classes(ClassesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Output file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 uses every core
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow degrees above the default limits
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct EtaArgs {
    /// Group, e.g. S7 or A9
    #[arg(long)]
    group: String,
    /// First class, e.g. 1,1,3 or 1,3,5+
    #[arg(long)]
    alpha: String,
    /// Second class
    #[arg(long)]
    beta: String,
    /// Stop after this many product classes
    #[arg(long)]
    cap: Option<usize>,
    /// Stop after scanning this many elements
    #[arg(long)]
    budget: Option<u64>,
    /// Print a factor pair for every product class
    #[arg(long)]
    witnesses: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct EtaprimeArgs {
    /// Group giving the degree, e.g. S9
    #[arg(long)]
    group: String,
    /// First cycle type
    #[arg(long)]
    alpha: String,
    /// Second cycle type
    #[arg(long)]
    beta: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct CacheArgs {
    /// Do not read previously computed tables
    #[arg(long)]
    no_cache: bool,
    /// Directory for computed tables
    #[arg(long, default_value = "results")]
    cache_dir: PathBuf,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    group: String,
    /// eta or eta-prime
    #[arg(long, default_value = "eta")]
    kind: String,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct MinArgs {
    #[arg(long)]
    group: String,
    /// Elements scanned per pair before it is set aside
    #[arg(long)]
    budget: Option<u64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// tables, theorem, formulas, properties or all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest degree to check
    #[arg(long)]
    n_max: Option<usize>,
    /// Elements scanned per pair in searches
    #[arg(long)]
    budget: Option<u64>,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ClassesArgs {
    #[arg(long)]
    group: String,
    #[command(flatten)]
    common: Common,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

enum Outcome {
    Done(String),
    Failed(String),
}

/// Parse `args` (without the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("classprod")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let common = match &cli.command {
        Command::Eta(a) => &a.common,
        Command::Etaprime(a) => &a.common,
        Command::Table(a) => &a.common,
        Command::Min(a) => &a.common,
        Command::Verify(a) => &a.common,
        Command::Classes(a) => &a.common,
    };
    let (text, code) = match execute(&cli.command, err) {
        Ok(Outcome::Done(text)) => (text, EXIT_OK),
        Ok(Outcome::Failed(text)) => (text, EXIT_FAILED),
        Err(Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_USAGE;
        }
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}

fn group_arg(text: &str, limit: usize, common: &Common, err: &mut dyn Write) -> Result<GroupKind, Usage> {
    let group: GroupKind = text.parse()?;
    if group.n > limit {
        if !common.force {
            return Err(Usage(format!("{group} is above the limit n <= {limit}; pass --force to run it anyway")));
        }
        let _ = writeln!(err, "warning: {group} is above the usual limit n <= {limit}; this may take very long");
    }
    Ok(group)
}

fn type_arg(text: &str, n: usize) -> Result<CycleType, Usage> {
    let t: CycleType = text.parse()?;
    if t.degree() != n {
        return Err(Usage(format!("{text} is a type of degree {}, not {n}", t.degree())));
    }
    Ok(t)
}

fn no_csv(common: &Common) -> Result<(), Usage> {
    if common.format == Format::Csv {
        return Err(Usage("csv output is only available for table, min and classes".into()));
    }
    Ok(())
}

fn execute(command: &Command, err: &mut dyn Write) -> Result<Outcome, Usage> {
    match command {
        Command::Eta(a) => cmd_eta(a, err),
        Command::Etaprime(a) => cmd_etaprime(a, err),
        Command::Table(a) => cmd_table(a, err),
        Command::Min(a) => cmd_min(a, err),
        Command::Verify(a) => cmd_verify(a),
        Command::Classes(a) => cmd_classes(a),
    }
}

#[derive(Serialize)]
struct EtaJson {
    group: String,
    alpha: String,
    beta: String,
    eta: usize,
    exact: bool,
    capped: bool,
    budget_exhausted: bool,
    scanned: u64,
    classes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<[String; 3]>>,
}

fn eta_text(a: &ClassLabel, b: &ClassLabel, r: &EtaResult) -> String {
    let mut s = format!("eta = {}\n", r.count);
    if r.capped {
        s.push_str("stopped at the cap; the true value may be larger\n");
    }
    if r.budget_exhausted {
        s.push_str("stopped at the budget; the true value may be larger\n");
    }
    s.push_str(&format!("{} [{a}] x [{b}]\n", a.group()));
    for label in &r.classes {
        match r.witnesses.as_ref().and_then(|w| w.get(label)) {
            Some(w) => s.push_str(&format!("  {label}  = {} * {}\n", w.left, w.right)),
            None => s.push_str(&format!("  {label}\n")),
        }
    }
    s
}

fn cmd_eta(a: &EtaArgs, err: &mut dyn Write) -> Result<Outcome, Usage> {
    no_csv(&a.common)?;
    let group = group_arg(&a.group, ETA_LIMIT, &a.common, err)?;
    let alpha = ClassLabel::parse(group, &a.alpha)?;
    let beta = ClassLabel::parse(group, &a.beta)?;
    let opts = EtaOptions { cap: a.cap, budget: a.budget, witnesses: a.witnesses, ..Default::default() };
    let pool = Pool::new(a.common.jobs);
    let r = eta_with(&alpha, &beta, &opts, &pool)?;
    let text = match a.common.format {
        Format::Json => {
            let body = EtaJson {
                group: group.to_string(),
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                eta: r.count,
                exact: r.is_exact(),
                capped: r.capped,
                budget_exhausted: r.budget_exhausted,
                scanned: r.scanned,
                classes: r.classes.iter().map(ToString::to_string).collect(),
                witnesses: r.witnesses.as_ref().map(|w| {
                    w.iter().map(|(l, p)| [l.to_string(), p.left.to_string(), p.right.to_string()]).collect()
                }),
            };
            serde_json::to_string_pretty(&body)? + "\n"
        }
        _ => eta_text(&alpha, &beta, &r),
    };
    Ok(Outcome::Done(text))
}

fn cmd_etaprime(a: &EtaprimeArgs, err: &mut dyn Write) -> Result<Outcome, Usage> {
    no_csv(&a.common)?;
    let group = group_arg(&a.group, ETA_LIMIT, &a.common, err)?;
    let alpha = type_arg(&a.alpha, group.n)?;
    let beta = type_arg(&a.beta, group.n)?;
    let r = eta_prime(&alpha, &beta)?;
    let types: Vec<String> = r.types.iter().map(ToString::to_string).collect();
    let text = match a.common.format {
        Format::Json => {
            let body = serde_json::json!({
                "n": group.n, "alpha": alpha.to_string(), "beta": beta.to_string(),
                "eta_prime": r.count, "types": types,
            });
            serde_json::to_string_pretty(&body)? + "\n"
        }
        _ => {
            let mut s = format!("eta' = {}\n", r.count);
            for t in &types {
                s.push_str(&format!("  {t}\n"));
            }
            s
        }
    };
    Ok(Outcome::Done(text))
}

fn emit_table(doc: &TableDocument, format: Format) -> Result<String, Usage> {
    Ok(match format {
        Format::Text => doc.to_text(),
        Format::Csv => doc.to_csv()?,
        Format::Json => doc.to_json()?,
    })
}

fn cmd_table(a: &TableArgs, err: &mut dyn Write) -> Result<Outcome, Usage> {
    let group = group_arg(&a.group, TABLE_LIMIT, &a.common, err)?;
    let kind: TableKind = a.kind.parse()?;
    let pool = Pool::new(a.common.jobs);
    let tables = Tables { cache: Some(Cache::new(&a.cache.cache_dir)), read_cache: !a.cache.no_cache, sched: &pool };
    let doc = tables.get(kind, group)?;
    Ok(Outcome::Done(emit_table(&doc, a.common.format)?))
}

fn min_text(group: GroupKind, m: &MinEta, format: Format) -> Result<String, Usage> {
    Ok(match format {
        Format::Text => {
            let mut s = format!("min eta for {group} = {}\n", m.value);
            for (x, y) in &m.witnesses {
                s.push_str(&format!("  [{x}] x [{y}]\n"));
            }
            if m.flagged() {
                s.push_str(&format!("{} pairs exceeded the budget and were rerun in full\n", m.budget_reruns));
            }
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["group", "min", "left", "right"])?;
            for (x, y) in &m.witnesses {
                w.write_record([group.to_string(), m.value.to_string(), x.to_string(), y.to_string()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Usage(e.to_string()))?)?
        }
        Format::Json => {
            let pairs: Vec<[String; 2]> = m.witnesses.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect();
            let body = serde_json::json!({
                "group": group.to_string(), "min": m.value, "pairs": pairs,
                "budget_reruns": m.budget_reruns,
            });
            serde_json::to_string_pretty(&body)? + "\n"
        }
    })
}

fn cmd_min(a: &MinArgs, err: &mut dyn Write) -> Result<Outcome, Usage> {
    let group = group_arg(&a.group, MIN_LIMIT, &a.common, err)?;
    let pool = Pool::new(a.common.jobs);
    let m = classprod_core::min_eta(group, a.budget, &pool)?;
    Ok(Outcome::Done(min_text(group, &m, a.common.format)?))
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, Usage> {
    no_csv(&a.common)?;
    let suite: Suite = a.suite.parse()?;
    let n_max = a.n_max.unwrap_or(suite.default_n_max());
    let pool = Pool::new(a.common.jobs);
    let tables = Tables { cache: Some(Cache::new(&a.cache.cache_dir)), read_cache: !a.cache.no_cache, sched: &pool };
    let reports = run_suite(suite, n_max, a.budget, &tables)?;
    let text = match a.common.format {
        Format::Json => reports_json(&reports)?,
        _ => reports_text(&reports),
    };
    if reports.iter().any(|r| r.failed()) {
        Ok(Outcome::Failed(text))
    } else {
        Ok(Outcome::Done(text))
    }
}

fn cmd_classes(a: &ClassesArgs) -> Result<Outcome, Usage> {
    let group: GroupKind = a.group.parse()?;
    let classes = classes_of(group);
    let rows: Vec<[String; 3]> = classes
        .iter()
        .map(|c| [c.to_string(), class_size(c).to_string(), c.representative().to_string()])
        .collect();
    let text = match a.common.format {
        Format::Text => {
            let width = rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
            let size = rows.iter().map(|r| r[1].len()).max().unwrap_or(0);
            rows.iter().map(|r| format!("{:<width$}  {:>size$}  {}\n", r[0], r[1], r[2])).collect()
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["label", "size", "representative"])?;
            for r in &rows {
                w.write_record(r)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Usage(e.to_string()))?)?
        }
        Format::Json => {
            let body: Vec<_> = rows
                .iter()
                .map(|r| serde_json::json!({"label": r[0], "size": r[1], "representative": r[2]}))
                .collect();
            let kind = if group.kind == Kind::Symmetric { "symmetric" } else { "alternating" };
            serde_json::to_string_pretty(&serde_json::json!({"group": group.to_string(), "kind": kind, "classes": body}))?
                + "\n"
        }
    };
    Ok(Outcome::Done(text))
}
