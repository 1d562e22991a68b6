//! Permutations of `{1..n}` and their cycle types.
//!
//! Maps are written on the right: `compose(p, q)` is "first `p`, then `q`",
//! so `(1 2 4)(1 2 3)(4 5 6) = (1 3)(2 5 6 4)`. Points are 1-based in every
//! public signature; the image table is stored 0-based.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported degree. Points are stored as `u8`.
pub const MAX_DEGREE: usize = 255;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_transpositions(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

/// A bijection of `{1..n}` in one-line form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Box<[u8]>,
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: n, max: MAX_DEGREE });
    }
    Ok(())
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation { image: (0..n).map(|i| i as u8).collect() }
    }

    /// Build from a 1-based image sequence: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotABijection);
            }
            seen[x - 1] = true;
            image.push((x - 1) as u8);
        }
        Ok(Permutation { image: image.into_boxed_slice() })
    }

    /// Build from disjoint cycles over 1-based points. Singleton cycles are
    /// allowed and ignored.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Permutation> {
        check_degree(n)?;
        let mut image: Vec<u8> = (0..n).map(|i| i as u8).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(Error::Parse(alloc::format!("point {x} outside 1..={n}")));
                }
                if seen[x - 1] {
                    return Err(Error::Parse(alloc::format!("point {x} repeated")));
                }
                seen[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                image[x - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation { image: image.into_boxed_slice() })
    }

    pub(crate) fn from_raw(image: Box<[u8]>) -> Permutation {
        debug_assert!(is_bijection(&image));
        Permutation { image }
    }

    /// Parse cycle notation such as `(1 2 3)(4 5)` or `(1,2,3)`; `()` is the
    /// identity.
    pub fn parse(text: &str, n: usize) -> Result<Permutation> {
        let cycles = parse_cycles(text)?;
        Permutation::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    /// 1-based one-line form.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    fn same_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// `self` first, then `other`: `i -> other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.same_degree(other)?;
        let image = self.image.iter().map(|&x| other.image[x as usize]).collect();
        Ok(Permutation { image })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u8; self.degree()].into_boxed_slice();
        for (i, &x) in self.image.iter().enumerate() {
            image[x as usize] = i as u8;
        }
        Permutation { image }
    }

    /// `g^-1 self g`. The cycle `(a b c)` of `self` becomes `(g(a) g(b) g(c))`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.same_degree(g)?;
        let mut image = vec![0u8; self.degree()].into_boxed_slice();
        for (i, &x) in self.image.iter().enumerate() {
            image[g.image[i] as usize] = g.image[x as usize];
        }
        Ok(Permutation { image })
    }

    /// Disjoint cycles, including fixed points, each written from its
    /// smallest point, ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        cycle_count_raw(&self.image)
    }

    pub fn parity(&self) -> Parity {
        Parity::from_transpositions(self.degree() - self.cycle_count())
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable();
        CycleType { parts }
    }

    /// Length of the cycle containing the 1-based point `i`.
    pub fn cycle_length_of(&self, i: usize) -> usize {
        let start = i - 1;
        let mut x = self.image[start] as usize;
        let mut len = 1;
        while x != start {
            x = self.image[x] as usize;
            len += 1;
        }
        len
    }

    /// Embed into `S_n` by appending fixed points.
    pub fn lift(&self, n: usize) -> Result<Permutation> {
        check_degree(n)?;
        if n < self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: n });
        }
        let mut image = self.image.to_vec();
        image.extend((self.degree()..n).map(|i| i as u8));
        Ok(Permutation { image: image.into_boxed_slice() })
    }

    /// Some `g` with `self.conjugate(g) == other`, or `None` when the cycle
    /// types differ.
    ///
    /// Deterministic: both cycle lists are sorted by (length, smallest point),
    /// written from their smallest point, and matched position by position.
    pub fn find_conjugator(&self, other: &Permutation) -> Option<Permutation> {
        if self.degree() != other.degree() || self.cycle_type() != other.cycle_type() {
            return None;
        }
        let from = canonical_listing(&self.image);
        let to = canonical_listing(&other.image);
        let mut image = vec![0u8; self.degree()].into_boxed_slice();
        for (&a, &b) in from.iter().zip(to.iter()) {
            image[a as usize] = b;
        }
        Some(Permutation { image })
    }
}

pub(crate) fn is_bijection(image: &[u8]) -> bool {
    let mut seen = vec![false; image.len()];
    for &x in image {
        let x = x as usize;
        if x >= image.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn cycle_count_raw(image: &[u8]) -> usize {
    let n = image.len();
    let mut seen = [false; MAX_DEGREE];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = image[x] as usize;
        }
    }
    count
}

/// Concatenation of the cycles sorted by (length, smallest point), each
/// written from its smallest point. For the standard representative of a
/// type this is `0, 1, ..., n-1`.
pub(crate) fn canonical_listing(image: &[u8]) -> Vec<u8> {
    let n = image.len();
    let mut seen = vec![false; n];
    // (length, start) pairs; starts are visited in increasing order so a
    // stable sort by length keeps the smallest-point tiebreak.
    let mut starts: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = image[x] as usize;
        }
        starts.push((len, start));
    }
    starts.sort_by_key(|&(len, _)| len);
    let mut out = Vec::with_capacity(n);
    for (_, start) in starts {
        let mut x = start;
        loop {
            out.push(x as u8);
            x = image[x] as usize;
            if x == start {
                break;
            }
        }
    }
    out
}

/// Parity of a sequence viewed as a permutation in one-line form.
pub(crate) fn sequence_parity(seq: &[u8]) -> Parity {
    let n = seq.len();
    Parity::from_transpositions(n - cycle_count_raw(seq))
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut rest = text;
    if rest.is_empty() {
        return Err(Error::Parse("empty permutation; use () for the identity".into()));
    }
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(alloc::format!("expected '(' at {rest:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?;
        let body = &open[..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad point {tok:?}")))?;
            cycle.push(v);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    /// Nontrivial cycles in cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            any = true;
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[S{}]", self, self.degree())
    }
}

/// A partition of `n` written in ascending order, fixed points included.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<CycleType> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidCycleType);
        }
        parts.sort_unstable();
        check_degree(parts.iter().sum())?;
        Ok(CycleType { parts })
    }

    /// Like [`CycleType::new`], additionally requiring the parts to sum to `n`.
    pub fn with_degree(parts: Vec<usize>, n: usize) -> Result<CycleType> {
        let t = CycleType::new(parts)?;
        if t.degree() != n {
            return Err(Error::InvalidCycleType);
        }
        Ok(t)
    }

    pub fn identity(n: usize) -> CycleType {
        CycleType { parts: vec![1; n] }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> CycleType {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn parity(&self) -> Parity {
        Parity::from_transpositions(self.degree() - self.parts.len())
    }

    pub fn max_part(&self) -> usize {
        *self.parts.last().expect("nonempty")
    }

    pub fn fixed_points(&self) -> usize {
        self.parts.iter().take_while(|&&p| p == 1).count()
    }

    /// Distinct parts with multiplicities, ascending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Parts of length at least two, in descending order. This is the key
    /// used to order classes in tables.
    pub fn nontrivial_descending(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().filter(|&p| p > 1).collect()
    }

    /// The standard representative: cycles in ascending length over
    /// consecutive increasing points, fixed points `1..n0`, so `n` lies in a
    /// longest cycle.
    pub fn standard_rep(&self) -> Permutation {
        let n = self.degree();
        let mut image = vec![0u8; n];
        let mut start = 0usize;
        for &len in &self.parts {
            for k in 0..len {
                let next = if k + 1 == len { start } else { start + k + 1 };
                image[start + k] = next as u8;
            }
            start += len;
        }
        Permutation::from_raw(image.into_boxed_slice())
    }

    /// Every partition of `n`, each as an ascending cycle type.
    pub fn all(n: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_rec(n, 1, &mut current, &mut out);
        out
    }
}

fn partitions_rec(remaining: usize, min_part: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
    if remaining == 0 {
        out.push(CycleType { parts: current.clone() });
        return;
    }
    for p in min_part..=remaining {
        if p < remaining && remaining - p < p {
            continue;
        }
        current.push(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Comma-separated parts, e.g. `1,1,3,5`. Order is not enforced.
    fn from_str(s: &str) -> Result<CycleType> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad part {:?} in {:?}", tok, s)))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }
}

impl From<&CycleType> for String {
    fn from(t: &CycleType) -> String {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = p("(1 2 4)", 6);
        let b = p("(1 2 3)(4 5 6)", 6);
        assert_eq!(a.compose(&b).unwrap(), p("(1 3)(2 5 6 4)", 6));
    }

    #[test]
    fn identity_and_involution() {
        let e = Permutation::identity(4);
        let x = p("(1 3 4)", 4);
        assert_eq!(e.compose(&x).unwrap(), x);
        let t = p("(1 2)", 4);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mixed_degrees() {
        let err = Permutation::identity(3).compose(&Permutation::identity(4)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(p("(1 2)(3 4 5)", 5).inverse(), p("(1 2)(3 5 4)", 5));
    }

    #[test]
    fn conjugation_relabels_cycle_symbols() {
        // (1 2 3)^(1 2) = (2 1 3)
        let c = p("(1 2 3)", 3).conjugate(&p("(1 2)", 3)).unwrap();
        assert_eq!(c, p("(2 1 3)", 3));
        assert_eq!(c, p("(1 3 2)", 3));
        let x = p("(1 4)(2 3)", 4);
        assert_eq!(x.conjugate(&Permutation::identity(4)).unwrap(), x);
    }

    #[test]
    fn conjugation_is_a_right_action() {
        let x = p("(1 2 3 4)(5 6)", 6);
        let g = p("(1 5 2)", 6);
        let h = p("(2 6)(3 4)", 6);
        let gh = g.compose(&h).unwrap();
        assert_eq!(
            x.conjugate(&gh).unwrap(),
            x.conjugate(&g).unwrap().conjugate(&h).unwrap()
        );
    }

    #[test]
    fn parities() {
        assert_eq!(p("(1 2)", 2).parity(), Parity::Odd);
        assert_eq!(p("(1 2 3 4 5 6)", 6).parity(), Parity::Odd);
        assert_eq!(p("(1 2 3)(4 5 6)", 6).parity(), Parity::Even);
    }

    #[test]
    fn cycle_types() {
        let x = p("(8 9)(5 6 7 1)(11)(12)", 12);
        assert_eq!(x.cycle_type().parts(), &[1, 1, 1, 1, 1, 1, 2, 4]);
        assert_eq!(Permutation::identity(5).cycle_type().parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(p("(1 2 3)(4 5)", 5).cycle_type().parts(), &[2, 3]);
    }

    #[test]
    fn standard_representatives() {
        let t: CycleType = "1,1,1,1,1,1,2,4".parse().unwrap();
        assert_eq!(t.standard_rep(), p("(7 8)(9 10 11 12)", 12));
        let full: CycleType = "7".parse().unwrap();
        assert_eq!(full.standard_rep(), p("(1 2 3 4 5 6 7)", 7));
        let t: CycleType = "3,2".parse().unwrap();
        assert_eq!(t.standard_rep(), p("(1 2)(3 4 5)", 5));
    }

    #[test]
    fn conjugators() {
        let a = p("(1 2 3)", 3);
        let b = p("(2 1 3)", 3);
        let g = a.find_conjugator(&b).unwrap();
        assert_eq!(a.conjugate(&g).unwrap(), b);
        assert_eq!(g.parity(), Parity::Odd);
        assert!(a.find_conjugator(&a).unwrap().is_identity());
        assert!(p("(1 2)", 3).find_conjugator(&a).is_none());
    }

    #[test]
    fn lift_appends_fixed_points() {
        let x = p("(1 2 3)", 3).lift(5).unwrap();
        assert_eq!(x, p("(1 2 3)", 5));
        assert!(p("(1 2)", 4).lift(3).is_err());
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!(p("(1,2,3)(4, 5)", 5), p("(1 2 3) (4 5)", 5));
        assert!(p("()", 4).is_identity());
        assert_eq!(p("(3 1 2)", 3).to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("1 2", 3).is_err());
        assert!(Permutation::parse("(1 2", 3).is_err());
    }

    #[test]
    fn cycle_type_text() {
        let t: CycleType = "5,1,3,1".parse().unwrap();
        assert_eq!(t.to_string(), "1,1,3,5");
        assert!("1,0".parse::<CycleType>().is_err());
        assert!("a".parse::<CycleType>().is_err());
        assert_eq!(t.multiplicities(), vec![(1, 2), (3, 1), (5, 1)]);
        assert_eq!(t.nontrivial_descending(), vec![5, 3]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| CycleType::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }
}
