//! Counting the classes in a product of two conjugacy classes.
//!
//! For classes `a^G`, `b^G` every product `x y` is conjugate to `x^g b0`
//! for a fixed `b0 in b^G`, so it is enough to run one class against a
//! single representative of the other. [`eta`] enumerates the smaller of
//! the two classes (`a^G b^G = b^G a^G`), classifies every product, and
//! stops once `cap` distinct classes have been seen.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::classes::{
    class_size, enumerate_class, enumerate_stab_n_orbit, ClassLabel, ClassStream, GroupKind,
    Spin,
};
use crate::combin::{next_permutation, split_range};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Parity, Permutation};
use crate::sched::{Scheduler, Sequential};

/// Largest degree the enumeration engine accepts.
pub const ENGINE_MAX_DEGREE: usize = 32;

/// Largest degree accepted by [`eta_oracle`].
pub const ORACLE_MAX_DEGREE: usize = 7;

/// Streams shorter than this are never split across workers.
const MIN_PARALLEL_LEN: u64 = 1 << 14;

/// Which class to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Side {
    /// The smaller class; the first one on ties.
    #[default]
    Auto,
    First,
    Second,
}

#[derive(Debug, Clone, Default)]
pub struct EtaOptions {
    /// Stop once this many distinct product classes are known.
    pub cap: Option<usize>,
    /// Stop after this many raw stream positions.
    pub budget: Option<u64>,
    /// Record one witness pair per product class.
    pub witnesses: bool,
    pub side: Side,
}

impl EtaOptions {
    pub fn capped(cap: usize) -> EtaOptions {
        EtaOptions { cap: Some(cap), ..EtaOptions::default() }
    }
}

/// Two factors whose product (left first) lies in a given class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub left: Permutation,
    pub right: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaResult {
    pub count: usize,
    pub classes: BTreeSet<ClassLabel>,
    pub witnesses: Option<BTreeMap<ClassLabel, Witness>>,
    /// Enumeration stopped at the cap; the true value is at least `count`.
    pub capped: bool,
    /// Enumeration stopped at the budget; the true value is at least `count`.
    pub budget_exhausted: bool,
    /// Raw stream positions examined.
    pub scanned: u64,
}

impl EtaResult {
    /// Whether `count` is the exact value.
    pub fn is_exact(&self) -> bool {
        !self.capped && !self.budget_exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaPrimeResult {
    pub count: usize,
    pub types: BTreeSet<CycleType>,
}

/// Cycle-type classifier for raw image tables of a fixed degree.
///
/// A type is encoded as a mixed-radix number over the multiplicities of
/// each cycle length; the radix for length `l` is `n / l + 1`.
#[derive(Debug, Clone)]
pub(crate) struct Classifier {
    n: usize,
    weights: Vec<u64>,
    radices: Vec<u64>,
    alternating: bool,
    starts: Vec<(u8, u8)>,
    listing: Vec<u8>,
}

impl Classifier {
    pub(crate) fn new(n: usize, alternating: bool) -> Classifier {
        assert!(n <= ENGINE_MAX_DEGREE);
        let mut weights = vec![0u64; n + 2];
        let mut radices = vec![0u64; n + 2];
        let mut w: u64 = 1;
        for len in 1..=n {
            weights[len] = w;
            radices[len] = (n / len) as u64 + 1;
            w = w.checked_mul(radices[len]).expect("type key fits in u64");
        }
        Classifier {
            n,
            weights,
            radices,
            alternating,
            starts: Vec::with_capacity(n),
            listing: vec![0; n],
        }
    }

    /// Type key and spin code (0 none, 1 plus, 2 minus).
    #[inline]
    pub(crate) fn classify(&mut self, img: &[u8]) -> (u64, u8) {
        let n = self.n;
        let mut seen: u64 = 0;
        let mut lengths: u64 = 0;
        let mut key = 0u64;
        let mut split = self.alternating && n >= 2;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            loop {
                seen |= 1 << x;
                len += 1;
                x = img[x] as usize;
                if x == start {
                    break;
                }
            }
            key += self.weights[len];
            if len.is_multiple_of(2) || lengths >> len & 1 == 1 {
                split = false;
            }
            lengths |= 1 << len;
        }
        if !split {
            return (key, 0);
        }
        (key, if self.listing_parity(img).is_even() { 1 } else { 2 })
    }

    /// Parity of the canonical listing of an element whose cycle lengths
    /// are pairwise distinct.
    fn listing_parity(&mut self, img: &[u8]) -> Parity {
        let n = self.n;
        self.starts.clear();
        let mut seen: u64 = 0;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut len = 0u8;
            let mut x = start;
            loop {
                seen |= 1 << x;
                len += 1;
                x = img[x] as usize;
                if x == start {
                    break;
                }
            }
            self.starts.push((len, start as u8));
        }
        self.starts.sort_unstable();
        let mut k = 0;
        for &(_, start) in &self.starts {
            let mut x = start;
            loop {
                self.listing[k] = x;
                k += 1;
                x = img[x as usize];
                if x == start {
                    break;
                }
            }
        }
        let mut cycles = 0;
        let mut seen: u64 = 0;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                x = self.listing[x] as usize;
            }
        }
        Parity::from_transpositions(n - cycles)
    }

    pub(crate) fn decode(&self, key: u64) -> CycleType {
        let mut parts = Vec::new();
        for len in 1..=self.n {
            let mult = (key / self.weights[len]) % self.radices[len];
            parts.extend(core::iter::repeat_n(len, mult as usize));
        }
        CycleType::from_sorted_unchecked(parts)
    }

    pub(crate) fn label(&self, group: GroupKind, key: u64, spin: u8) -> ClassLabel {
        let spin = match spin {
            0 => Spin::None,
            1 => Spin::Plus,
            _ => Spin::Minus,
        };
        ClassLabel::new(group, self.decode(key), spin).expect("classified label is valid")
    }
}

#[derive(Debug, Clone)]
struct Found {
    key: u64,
    spin: u8,
    index: u64,
    witness: Option<Vec<u8>>,
}

#[derive(Debug, Clone)]
struct Partial {
    found: Vec<Found>,
}

/// Everything needed to scan any range of the enumerated class.
struct Plan {
    group: GroupKind,
    stream: ClassStream,
    fixed: Permutation,
    /// The enumerated class is the left factor.
    left: bool,
    limit: u64,
}

impl Plan {
    fn new(a: &ClassLabel, b: &ClassLabel, opts: &EtaOptions) -> Result<Plan> {
        if a.group() != b.group() {
            return Err(Error::GroupMismatch);
        }
        let group = a.group();
        if group.n > ENGINE_MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree: group.n, max: ENGINE_MAX_DEGREE });
        }
        let left = match opts.side {
            Side::Auto => class_size(a) <= class_size(b),
            Side::First => true,
            Side::Second => false,
        };
        let (enumerated, other) = if left { (a, b) } else { (b, a) };
        let stream = enumerate_class(enumerated);
        let limit = opts.budget.map_or(stream.raw_len(), |b| b.min(stream.raw_len()));
        Ok(Plan { group, stream, fixed: other.representative(), left, limit })
    }

    fn scan(&self, range: Range<u64>, cap: Option<usize>, witnesses: bool) -> Partial {
        let n = self.group.n;
        let mut classifier = Classifier::new(n, self.group.is_alternating());
        let fixed = self.fixed.raw();
        let mut product = vec![0u8; n];
        let mut found: Vec<Found> = Vec::new();
        let mut cursor = self.stream.cursor(range);
        while let Some((index, x)) = cursor.next() {
            if self.left {
                for (p, &xi) in product.iter_mut().zip(x.iter()) {
                    *p = fixed[xi as usize];
                }
            } else {
                for (p, &fi) in product.iter_mut().zip(fixed.iter()) {
                    *p = x[fi as usize];
                }
            }
            let (key, spin) = classifier.classify(&product);
            if found.iter().any(|f| f.key == key && f.spin == spin) {
                continue;
            }
            found.push(Found { key, spin, index, witness: witnesses.then(|| x.to_vec()) });
            if cap.is_some_and(|c| found.len() >= c) {
                break;
            }
        }
        Partial { found }
    }

    fn finish(&self, partials: Vec<Partial>, opts: &EtaOptions) -> EtaResult {
        let mut merged: Vec<Found> = Vec::new();
        for part in partials {
            for f in part.found {
                match merged.iter_mut().find(|m| m.key == f.key && m.spin == f.spin) {
                    Some(m) if m.index <= f.index => {}
                    Some(m) => *m = f,
                    None => merged.push(f),
                }
            }
        }
        merged.sort_by_key(|f| f.index);
        let mut capped = false;
        let mut scanned = self.limit;
        if let Some(cap) = opts.cap {
            if merged.len() >= cap {
                merged.truncate(cap);
                let last = merged.last().map_or(0, |f| f.index);
                if last + 1 < self.stream.raw_len() {
                    capped = true;
                    scanned = last + 1;
                }
            }
        }
        let budget_exhausted = !capped && self.limit < self.stream.raw_len();
        let classifier = Classifier::new(self.group.n, self.group.is_alternating());
        let mut classes = BTreeSet::new();
        let mut witnesses = opts.witnesses.then(BTreeMap::new);
        for f in &merged {
            let label = classifier.label(self.group, f.key, f.spin);
            if let (Some(map), Some(raw)) = (witnesses.as_mut(), f.witness.as_ref()) {
                let x = Permutation::from_raw(raw.clone().into_boxed_slice());
                let (left, right) =
                    if self.left { (x, self.fixed.clone()) } else { (self.fixed.clone(), x) };
                map.insert(label.clone(), Witness { left, right });
            }
            classes.insert(label);
        }
        EtaResult { count: classes.len(), classes, witnesses, capped, budget_exhausted, scanned }
    }
}

/// Number of distinct classes in `a^G b^G`, computed sequentially.
pub fn eta(a: &ClassLabel, b: &ClassLabel, opts: &EtaOptions) -> Result<EtaResult> {
    eta_with(a, b, opts, &Sequential)
}

/// [`eta`] with the enumerated class cut into chunks run by `sched`. The
/// result, witnesses included, is identical to the sequential run: each
/// class keeps the witness with the smallest stream index.
pub fn eta_with<S: Scheduler>(
    a: &ClassLabel,
    b: &ClassLabel,
    opts: &EtaOptions,
    sched: &S,
) -> Result<EtaResult> {
    let plan = Plan::new(a, b, opts)?;
    let chunks = if plan.limit >= MIN_PARALLEL_LEN && sched.parallelism() > 1 {
        split_range(plan.limit, sched.parallelism() * 4)
    } else {
        vec![0..plan.limit]
    };
    let partials =
        sched.run(chunks.len(), |i| plan.scan(chunks[i].clone(), opts.cap, opts.witnesses));
    Ok(plan.finish(partials, opts))
}

/// Brute-force `eta`: every pair of class elements, classified through the
/// public [`Permutation`] API. Class members are found by filtering all of
/// `S_n`, so nothing here depends on the class streams.
pub fn eta_oracle(a: &ClassLabel, b: &ClassLabel) -> Result<EtaResult> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let group = a.group();
    if group.n > ORACLE_MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: group.n, max: ORACLE_MAX_DEGREE });
    }
    let n = group.n;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    let mut raw: Vec<u8> = (0..n as u8).collect();
    loop {
        for (slot, &v) in images.iter_mut().zip(raw.iter()) {
            *slot = v as usize + 1;
        }
        let p = Permutation::from_images(&images)?;
        if a.contains(&p) {
            xs.push(p.clone());
        }
        if b.contains(&p) {
            ys.push(p);
        }
        if !next_permutation(&mut raw) {
            break;
        }
    }
    let mut classes = BTreeSet::new();
    let mut scanned = 0u64;
    for x in &xs {
        for y in &ys {
            let prod = x.compose(y)?;
            scanned += 1;
            let label = if group.is_alternating() {
                crate::classes::an_class_of(&prod)?
            } else {
                ClassLabel::symmetric(prod.cycle_type())
            };
            classes.insert(label);
        }
    }
    Ok(EtaResult {
        count: classes.len(),
        classes,
        witnesses: None,
        capped: false,
        budget_exhausted: false,
        scanned,
    })
}

/// Number of cycle types among `(s(a)^-1)^sigma s(b)` as `sigma` ranges
/// over the permutations fixing `n`, with `s` the standard representative.
///
/// The identity type is accepted: its standard representative fixes `n`
/// and the count is 1.
pub fn eta_prime(ta: &CycleType, tb: &CycleType) -> Result<EtaPrimeResult> {
    if ta.degree() != tb.degree() {
        return Err(Error::DegreeMismatch { left: ta.degree(), right: tb.degree() });
    }
    let n = ta.degree();
    if n > ENGINE_MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: n, max: ENGINE_MAX_DEGREE });
    }
    let orbit = enumerate_stab_n_orbit(&ta.standard_rep().inverse());
    let fixed = tb.standard_rep();
    let fixed = fixed.raw();
    let mut classifier = Classifier::new(n, false);
    let mut product = vec![0u8; n];
    let mut keys: Vec<u64> = Vec::new();
    let mut cursor = orbit.cursor(0..orbit.raw_len());
    while let Some((_, x)) = cursor.next() {
        for (p, &xi) in product.iter_mut().zip(x.iter()) {
            *p = fixed[xi as usize];
        }
        let (key, _) = classifier.classify(&product);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let types: BTreeSet<CycleType> = keys.iter().map(|&k| classifier.decode(k)).collect();
    Ok(EtaPrimeResult { count: types.len(), types })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{an_class_of, classes_of};

    fn label(g: &str, t: &str) -> ClassLabel {
        ClassLabel::parse(g.parse().unwrap(), t).unwrap()
    }

    fn exact(g: &str, a: &str, b: &str) -> usize {
        eta(&label(g, a), &label(g, b), &EtaOptions::default()).unwrap().count
    }

    #[test]
    fn classifier_round_trips_every_type() {
        for n in 1..=10 {
            let c = Classifier::new(n, false);
            for t in CycleType::all(n) {
                let mut c2 = c.clone();
                let (key, _) = c2.classify(t.standard_rep().raw());
                assert_eq!(c.decode(key), t);
            }
        }
    }

    #[test]
    fn classifier_spin_matches_an_class_of() {
        let group: GroupKind = "A7".parse().unwrap();
        let mut c = Classifier::new(7, true);
        for l in classes_of(group) {
            for p in enumerate_class(&l).iter() {
                let (key, spin) = c.classify(p.raw());
                assert_eq!(c.label(group, key, spin), an_class_of(&p).unwrap());
            }
        }
    }

    #[test]
    fn table_values() {
        assert_eq!(exact("S5", "5", "1,1,1,2"), 2);
        assert_eq!(exact("A8", "1,1,1,1,1,3", "2,2,2,2"), 2);
        assert_eq!(exact("S6", "3,3", "1,1,2,2"), 4);
        // Two 3-cycles in A6: (), 3-cycle, double transposition, both
        // halves of the 5-cycles, and [3,3].
        assert_eq!(exact("A6", "1,1,1,3", "1,1,1,3"), 6);
    }

    #[test]
    fn identity_class_is_neutral() {
        let r = eta(&label("A6", "1,1,1,1,1,1"), &label("A6", "1,5-"), &EtaOptions::default())
            .unwrap();
        assert_eq!(r.count, 1);
        assert!(r.classes.contains(&label("A6", "1,5-")));
    }

    #[test]
    fn cap_stops_early() {
        let a = label("S7", "7");
        let b = label("S7", "1,2,4");
        let full = eta(&a, &b, &EtaOptions::default()).unwrap();
        let capped = eta(&a, &b, &EtaOptions::capped(3)).unwrap();
        assert!(full.count > 3);
        assert_eq!(capped.count, 3);
        assert!(capped.capped);
        assert!(capped.scanned < full.scanned);
        assert!(capped.classes.is_subset(&full.classes));
        // A cap above the true value changes nothing.
        let loose = eta(&a, &b, &EtaOptions::capped(100)).unwrap();
        assert_eq!(loose, full);
    }

    #[test]
    fn budget_marks_result_inexact() {
        let a = label("S7", "7");
        let b = label("S7", "1,2,4");
        let r = eta(&a, &b, &EtaOptions { budget: Some(2), ..Default::default() }).unwrap();
        assert!(r.budget_exhausted);
        assert_eq!(r.scanned, 2);
        assert!(!r.is_exact());
    }

    #[test]
    fn witnesses_multiply_into_their_class() {
        let a = label("A7", "7+");
        let b = label("A7", "1,1,1,2,2");
        let opts = EtaOptions { witnesses: true, ..Default::default() };
        let r = eta(&a, &b, &opts).unwrap();
        let w = r.witnesses.as_ref().unwrap();
        assert_eq!(w.len(), r.count);
        for (class, pair) in w {
            assert!(a.contains(&pair.left));
            assert!(b.contains(&pair.right));
            assert!(class.contains(&pair.left.compose(&pair.right).unwrap()));
        }
    }

    #[test]
    fn errors() {
        let a = label("S5", "5");
        let b = label("S6", "6");
        assert_eq!(eta(&a, &b, &EtaOptions::default()).unwrap_err(), Error::GroupMismatch);
        let big = label("S8", "8");
        assert!(matches!(eta_oracle(&big, &big), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn eta_prime_values() {
        let t = |s: &str| s.parse::<CycleType>().unwrap();
        assert_eq!(eta_prime(&t("1,1,2,2"), &t("1,1,2,2")).unwrap().count, 6);
        assert_eq!(eta_prime(&t("1,1,1,3"), &t("1,1,1,3")).unwrap().count, 4);
        assert_eq!(eta_prime(&t("1,1,1,1,1,2,2"), &t("9")).unwrap().count, 8);
        assert_eq!(eta_prime(&t("1,1,1,1"), &t("2,2")).unwrap().count, 1);
    }
}
