//! File formats, embedded reference tables, verification suites and the
//! command-line front end for `classprod-core`.

pub mod cache;
pub mod cli;
pub mod compare;
pub mod fixtures;
pub mod pool;
pub mod suites;
pub mod table;

pub use classprod_core as core;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Core(#[from] classprod_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
