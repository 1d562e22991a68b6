//! Conjugacy class products in the symmetric and alternating groups.
//!
//! The central quantity is `eta(a, b)`: the number of distinct conjugacy
//! classes whose union is the product set `a^G b^G`, for `G` either `S_n`
//! or `A_n`. The crate provides
//!
//! * exact permutation arithmetic with the right-action convention
//!   (`compose(p, q)` applies `p` first, then `q`),
//! * class labels for `S_n` and `A_n`, including the two halves of a split
//!   `A_n` class, with lazy, restartable and chunkable class enumeration,
//! * the capped one-sided enumeration for `eta`, a brute-force oracle, the
//!   stabilizer-orbit variant `eta_prime`, two closed forms and a minimum
//!   search,
//! * executable checks of the classification results for small `A_n`
//!   products.
//!
//! The crate is `no_std` and only needs `alloc`. Parallel execution is
//! expressed through the [`Scheduler`] trait; [`Sequential`] is always
//! available and a thread-pool implementation lives in the companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod combin;
mod error;

pub mod classes;
pub mod eta;
pub mod formulas;
pub mod perm;
pub mod sched;
pub mod search;
pub mod theorems;

pub use classes::{
    an_class_of, class_size, classes_of, enumerate_class, enumerate_stab_n_orbit, splits_in_an,
    ClassLabel, ClassStream, GroupKind, Kind, Spin,
};
pub use error::{Error, Result};
pub use eta::{
    eta, eta_oracle, eta_prime, eta_with, EtaOptions, EtaPrimeResult, EtaResult, Side, Witness,
};
pub use formulas::{
    eta_threecycle_bound, eta_transposition, partitions_into_three, small_eta_transposition_types,
    transposition_families,
};
pub use perm::{CycleType, Parity, Permutation};
pub use sched::{Scheduler, Sequential};
pub use search::{min_eta, MinEta};
pub use theorems::{Detail, Status, VerifyReport};
