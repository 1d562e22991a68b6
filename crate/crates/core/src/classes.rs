//! Conjugacy classes of `S_n` and `A_n`.
//!
//! An `S_n` class is a cycle type. An even type whose parts are odd and
//! pairwise distinct splits into two `A_n` classes; the halves are told
//! apart by [`Spin`]. The spin of an element `p` is the parity of the
//! deterministic conjugator taking the standard representative of its type
//! to `p` (see [`Permutation::find_conjugator`]): `Plus` when that conjugator
//! is even. Because the centralizer of a split element is contained in
//! `A_n`, any other conjugator has the same parity.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::combin::{
    binomial, factorial, next_combination, next_permutation, split_range, unrank_combination,
    unrank_permutation,
};
use crate::error::{Error, Result};
use crate::perm::{canonical_listing, sequence_parity, CycleType, Parity, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Symmetric,
    Alternating,
}

/// `S_n` or `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKind {
    pub kind: Kind,
    pub n: usize,
}

impl GroupKind {
    pub fn symmetric(n: usize) -> GroupKind {
        GroupKind { kind: Kind::Symmetric, n }
    }

    pub fn alternating(n: usize) -> GroupKind {
        GroupKind { kind: Kind::Alternating, n }
    }

    pub fn is_alternating(&self) -> bool {
        self.kind == Kind::Alternating
    }

    pub fn order(&self) -> u128 {
        let full = factorial(self.n);
        match self.kind {
            Kind::Symmetric => full,
            Kind::Alternating if self.n >= 2 => full / 2,
            Kind::Alternating => full,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            Kind::Symmetric => 'S',
            Kind::Alternating => 'A',
        };
        write!(f, "{c}{}", self.n)
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupKind> {
        let s = s.trim();
        let bad = || Error::Parse(alloc::format!("group {s:?}: expected S<n> or A<n>"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('S') | Some('s') => Kind::Symmetric,
            Some('A') | Some('a') => Kind::Alternating,
            _ => return Err(bad()),
        };
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        if n == 0 || n > crate::perm::MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree: n, max: crate::perm::MAX_DEGREE });
        }
        Ok(GroupKind { kind, n })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    None,
    Plus,
    Minus,
}

impl Spin {
    pub fn flipped(self) -> Spin {
        match self {
            Spin::None => Spin::None,
            Spin::Plus => Spin::Minus,
            Spin::Minus => Spin::Plus,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Spin::None => "",
            Spin::Plus => "+",
            Spin::Minus => "-",
        }
    }
}

/// A conjugacy class of `S_n` or `A_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    group: GroupKind,
    ctype: CycleType,
    spin: Spin,
}

/// Whether the `S_n` class of an even type splits into two `A_n` classes:
/// all parts odd and pairwise distinct (so at most one fixed point).
pub fn splits_in_an(t: &CycleType) -> Result<bool> {
    if !t.parity().is_even() {
        return Err(Error::OddParity);
    }
    if t.degree() < 2 {
        return Ok(false);
    }
    let parts = t.parts();
    let odd = parts.iter().all(|p| p % 2 == 1);
    let distinct = parts.windows(2).all(|w| w[0] != w[1]);
    Ok(odd && distinct)
}

impl ClassLabel {
    pub fn new(group: GroupKind, ctype: CycleType, spin: Spin) -> Result<ClassLabel> {
        if ctype.degree() != group.n {
            return Err(Error::DegreeMismatch { left: group.n, right: ctype.degree() });
        }
        match group.kind {
            Kind::Symmetric => {
                if spin != Spin::None {
                    return Err(Error::InvalidLabel("spin is only meaningful in A_n".into()));
                }
            }
            Kind::Alternating => {
                let split = splits_in_an(&ctype)?;
                if split && spin == Spin::None {
                    return Err(Error::InvalidLabel(alloc::format!(
                        "type {ctype} splits in {group}; a spin (+/-) is required"
                    )));
                }
                if !split && spin != Spin::None {
                    return Err(Error::InvalidLabel(alloc::format!(
                        "type {ctype} does not split in {group}"
                    )));
                }
            }
        }
        Ok(ClassLabel { group, ctype, spin })
    }

    pub fn symmetric(ctype: CycleType) -> ClassLabel {
        let group = GroupKind::symmetric(ctype.degree());
        ClassLabel { group, ctype, spin: Spin::None }
    }

    /// The identity class of `group`.
    pub fn identity(group: GroupKind) -> ClassLabel {
        ClassLabel { group, ctype: CycleType::identity(group.n), spin: Spin::None }
    }

    /// Parse `1,1,3,5`, `9+` or `1,3,5-` within `group`.
    pub fn parse(group: GroupKind, text: &str) -> Result<ClassLabel> {
        let text = text.trim();
        let (body, spin) = if let Some(b) = text.strip_suffix('+') {
            (b, Spin::Plus)
        } else if let Some(b) = text.strip_suffix('-') {
            (b, Spin::Minus)
        } else {
            (text, Spin::None)
        };
        let ctype: CycleType = body.parse()?;
        ClassLabel::new(group, ctype, spin)
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn ctype(&self) -> &CycleType {
        &self.ctype
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn is_identity(&self) -> bool {
        self.ctype.is_identity()
    }

    pub fn is_split(&self) -> bool {
        self.spin != Spin::None
    }

    /// The other half of a split class; non-split labels map to themselves.
    pub fn flipped(&self) -> ClassLabel {
        ClassLabel { spin: self.spin.flipped(), ..self.clone() }
    }

    /// The same type as an `S_n` class.
    pub fn to_symmetric(&self) -> ClassLabel {
        ClassLabel::symmetric(self.ctype.clone())
    }

    /// A fixed element of the class: the standard representative, conjugated
    /// by `(1 2)` for the minus half of a split class.
    pub fn representative(&self) -> Permutation {
        let std_rep = self.ctype.standard_rep();
        match self.spin {
            Spin::Minus => {
                let swap = Permutation::from_cycles(self.group.n, &[[1usize, 2]])
                    .expect("split classes have n >= 3");
                std_rep.conjugate(&swap).expect("same degree")
            }
            _ => std_rep,
        }
    }

    /// Whether `p` (of the right degree) lies in this class.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.group.n || p.cycle_type() != self.ctype {
            return false;
        }
        match self.spin {
            Spin::None => true,
            s => spin_of_raw(p.raw()) == s,
        }
    }

    fn order_key(&self) -> (GroupKind, Vec<usize>, Spin) {
        (self.group, self.ctype.nontrivial_descending(), self.spin)
    }
}

/// Classes are ordered by group, then by their nontrivial parts in
/// descending order compared lexicographically (`()`, `(1 2)`,
/// `(1 2)(3 4)`, `(1 2 3)`, `(1 2 3)(4 5)`, ...), then plus before minus.
impl Ord for ClassLabel {
    fn cmp(&self, other: &ClassLabel) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for ClassLabel {
    fn partial_cmp(&self, other: &ClassLabel) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ctype, self.spin.suffix())
    }
}

fn spin_of_raw(image: &[u8]) -> Spin {
    if sequence_parity(&canonical_listing(image)).is_even() {
        Spin::Plus
    } else {
        Spin::Minus
    }
}

/// Number of elements in the class.
pub fn class_size(label: &ClassLabel) -> u128 {
    let t = label.ctype();
    let mut centralizer: u128 = 1;
    for (part, mult) in t.multiplicities() {
        centralizer *= (part as u128).pow(mult as u32) * factorial(mult);
    }
    let full = factorial(t.degree()) / centralizer;
    if label.is_split() {
        full / 2
    } else {
        full
    }
}

/// The `A_n` class of an even permutation.
pub fn an_class_of(p: &Permutation) -> Result<ClassLabel> {
    if !p.parity().is_even() {
        return Err(Error::OddParity);
    }
    let ctype = p.cycle_type();
    let group = GroupKind::alternating(p.degree());
    let spin = if splits_in_an(&ctype)? { spin_of_raw(p.raw()) } else { Spin::None };
    Ok(ClassLabel { group, ctype, spin })
}

/// All classes of the group in table order.
pub fn classes_of(group: GroupKind) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for t in CycleType::all(group.n) {
        match group.kind {
            Kind::Symmetric => out.push(ClassLabel { group, ctype: t, spin: Spin::None }),
            Kind::Alternating => {
                if !t.parity().is_even() {
                    continue;
                }
                if splits_in_an(&t).expect("even") {
                    out.push(ClassLabel { group, ctype: t.clone(), spin: Spin::Plus });
                    out.push(ClassLabel { group, ctype: t, spin: Spin::Minus });
                } else {
                    out.push(ClassLabel { group, ctype: t, spin: Spin::None });
                }
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Enumeration

#[derive(Debug, Clone, Copy)]
enum Slot {
    /// Choose the `count` points used by one group of equal-length cycles.
    Union { count: usize },
    /// The next cycle of the group: its head is the smallest point left in
    /// the group's pool; choose `len - 1` further members.
    Members { len: usize },
    /// The cycle through the anchor point: choose `len - 1` further members
    /// from all available points.
    Anchor { len: usize, point: u8 },
    /// Order the chosen members after the head.
    Arrange { len: usize, offset: usize },
}

#[derive(Debug, Clone)]
struct Plan {
    n: usize,
    slots: Vec<Slot>,
    radices: Vec<u128>,
    total: u128,
}

impl Plan {
    fn new(n: usize, anchor: Option<(u8, usize)>, groups: &[(usize, usize)]) -> Plan {
        let mut slots = Vec::new();
        let mut radices = Vec::new();
        let mut avail = n;
        let mut offset = 0;
        if let Some((point, len)) = anchor {
            slots.push(Slot::Anchor { len, point });
            radices.push(binomial(avail - 1, len - 1));
            slots.push(Slot::Arrange { len, offset });
            radices.push(factorial(len - 1));
            avail -= len;
            offset += len;
        }
        for &(len, mult) in groups {
            let count = len * mult;
            slots.push(Slot::Union { count });
            radices.push(binomial(avail, count));
            let mut pool = count;
            for _ in 0..mult {
                slots.push(Slot::Members { len });
                radices.push(binomial(pool - 1, len - 1));
                slots.push(Slot::Arrange { len, offset });
                radices.push(factorial(len - 1));
                pool -= len;
                offset += len;
            }
            avail -= count;
        }
        debug_assert_eq!(avail, 0);
        let total = radices.iter().product();
        Plan { n, slots, radices, total }
    }
}

/// A deterministic, restartable enumeration of the elements of a class.
///
/// Elements are produced by filling cycle patterns in ascending length
/// order: for each group of equal-length cycles a support is chosen in
/// lexicographic order, split into cycles headed by their smallest point,
/// and each cycle's remaining points are arranged in lexicographic order.
/// The raw index space is a mixed-radix counter over those choices, so any
/// index can be reached directly and the stream can be cut into contiguous
/// chunks. For a split `A_n` label the raw stream covers the whole `S_n`
/// class and elements of the other spin are skipped; indices stay raw.
#[derive(Debug, Clone)]
pub struct ClassStream {
    label: ClassLabel,
    plan: Plan,
    filter: Option<Parity>,
    size: u64,
}

/// Enumerate the class of `label`.
///
/// # Panics
///
/// If the underlying `S_n` class has more than `u64::MAX` elements.
pub fn enumerate_class(label: &ClassLabel) -> ClassStream {
    let groups = label.ctype().multiplicities();
    let plan = Plan::new(label.group().n, None, &groups);
    let filter = match label.spin() {
        Spin::None => None,
        Spin::Plus => Some(Parity::Even),
        Spin::Minus => Some(Parity::Odd),
    };
    let size = u64::try_from(class_size(label)).expect("class too large to enumerate");
    assert!(plan.total <= u64::MAX as u128, "class too large to enumerate");
    ClassStream { label: label.clone(), plan, filter, size }
}

/// The orbit of `p` under conjugation by the stabilizer of `n`: all
/// permutations of the same type whose cycle through `n` has the same
/// length as in `p`.
pub fn enumerate_stab_n_orbit(p: &Permutation) -> ClassStream {
    let n = p.degree();
    let ctype = p.cycle_type();
    let anchor_len = p.cycle_length_of(n);
    let mut parts = ctype.parts().to_vec();
    let pos = parts.iter().position(|&x| x == anchor_len).expect("part present");
    parts.remove(pos);
    let rest = CycleType::from_sorted_unchecked(parts);
    let groups = if rest.parts().is_empty() { Vec::new() } else { rest.multiplicities() };
    let plan = Plan::new(n, Some(((n - 1) as u8, anchor_len)), &groups);
    assert!(plan.total <= u64::MAX as u128, "orbit too large to enumerate");
    let size = plan.total as u64;
    ClassStream { label: ClassLabel::symmetric(ctype), plan, filter: None, size }
}

impl ClassStream {
    pub fn label(&self) -> &ClassLabel {
        &self.label
    }

    /// Exact number of elements yielded.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Length of the raw index space (larger than `size` for split labels).
    pub fn raw_len(&self) -> u64 {
        self.plan.total as u64
    }

    /// Split the raw index space into at most `count` contiguous ranges of
    /// near-equal length, in order.
    pub fn chunks(&self, count: usize) -> Vec<Range<u64>> {
        split_range(self.raw_len(), count)
    }

    pub(crate) fn cursor(&self, range: Range<u64>) -> Cursor<'_> {
        Cursor::new(self, range)
    }

    /// All elements in stream order.
    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        self.iter_range(0..self.raw_len()).map(|(_, p)| p)
    }

    /// Elements whose raw index lies in `range`, with their raw index.
    pub fn iter_range(&self, range: Range<u64>) -> impl Iterator<Item = (u64, Permutation)> + '_ {
        let mut cursor = self.cursor(range);
        core::iter::from_fn(move || {
            cursor
                .next()
                .map(|(i, img)| (i, Permutation::from_raw(img.to_vec().into_boxed_slice())))
        })
    }
}

#[derive(Debug, Clone, Default)]
struct Ctx {
    avail: Vec<u8>,
    pool: Vec<u8>,
    head: u8,
    members: Vec<u8>,
}

/// Lending cursor over a range of a [`ClassStream`]; yields the raw index
/// and the 0-based image table of each element.
pub(crate) struct Cursor<'a> {
    plan: &'a Plan,
    filter: Option<Parity>,
    sel: Vec<Vec<u8>>,
    ctx: Vec<Ctx>,
    image: Vec<u8>,
    listing: Vec<u8>,
    index: u64,
    end: u64,
    fresh: bool,
}

impl<'a> Cursor<'a> {
    fn new(stream: &'a ClassStream, range: Range<u64>) -> Cursor<'a> {
        let plan = &stream.plan;
        let n = plan.n;
        let nslots = plan.slots.len();
        let mut ctx = vec![Ctx::default(); nslots + 1];
        ctx[0].avail = (0..n as u8).collect();
        for c in ctx.iter_mut() {
            c.avail.reserve(n);
            c.pool.reserve(n);
            c.members.reserve(n);
        }
        let sel = plan
            .slots
            .iter()
            .map(|s| match *s {
                Slot::Union { count } => vec![0u8; count],
                Slot::Members { len } | Slot::Anchor { len, .. } => vec![0u8; len - 1],
                Slot::Arrange { len, .. } => vec![0u8; len - 1],
            })
            .collect();
        let end = range.end.min(plan.total as u64);
        let mut cursor = Cursor {
            plan,
            filter: stream.filter,
            sel,
            ctx,
            image: vec![0u8; n],
            listing: vec![0u8; n],
            index: range.start,
            end,
            fresh: true,
        };
        if range.start < end {
            cursor.seek(range.start);
        }
        cursor
    }

    fn seek(&mut self, index: u64) {
        let mut rest = index as u128;
        let nslots = self.plan.slots.len();
        let mut digits = vec![0u128; nslots];
        for s in (0..nslots).rev() {
            let r = self.plan.radices[s];
            digits[s] = rest % r;
            rest /= r;
        }
        // Selections depend only on input sizes, which are fixed per slot.
        let mut avail = self.plan.n;
        let mut pool = 0usize;
        for s in 0..nslots {
            let d = digits[s];
            let sel = &mut self.sel[s];
            match self.plan.slots[s] {
                Slot::Union { count } => {
                    unrank_combination(d, avail, sel);
                    avail -= count;
                    pool = count;
                }
                Slot::Members { len } => {
                    unrank_combination(d, pool - 1, sel);
                    pool -= len;
                }
                Slot::Anchor { len, .. } => {
                    unrank_combination(d, avail - 1, sel);
                    avail -= len;
                }
                Slot::Arrange { .. } => unrank_permutation(d, sel),
            }
        }
        self.index = index;
        self.rebuild(0);
    }

    fn rebuild(&mut self, from: usize) {
        let last = self.plan.slots.len() - 1;
        for s in from..=last {
            self.apply(s, s == last);
        }
    }

    fn apply(&mut self, s: usize, last: bool) {
        let (before, after) = self.ctx.split_at_mut(s + 1);
        let cur = &before[s];
        let next = &mut after[0];
        let sel = &self.sel[s];
        match self.plan.slots[s] {
            Slot::Union { .. } => {
                next.avail.clear();
                next.pool.clear();
                let mut j = 0;
                for (i, &pt) in cur.avail.iter().enumerate() {
                    if j < sel.len() && sel[j] as usize == i {
                        next.pool.push(pt);
                        j += 1;
                    } else {
                        next.avail.push(pt);
                    }
                }
            }
            Slot::Members { .. } => {
                next.head = cur.pool[0];
                next.members.clear();
                next.pool.clear();
                let mut j = 0;
                for (i, &pt) in cur.pool[1..].iter().enumerate() {
                    if j < sel.len() && sel[j] as usize == i {
                        next.members.push(pt);
                        j += 1;
                    } else {
                        next.pool.push(pt);
                    }
                }
                next.avail.clone_from(&cur.avail);
            }
            Slot::Anchor { point, .. } => {
                next.head = point;
                next.members.clear();
                next.avail.clear();
                next.pool.clear();
                let mut j = 0;
                for (i, &pt) in cur.avail.iter().filter(|&&pt| pt != point).enumerate() {
                    if j < sel.len() && sel[j] as usize == i {
                        next.members.push(pt);
                        j += 1;
                    } else {
                        next.avail.push(pt);
                    }
                }
            }
            Slot::Arrange { len, offset } => {
                let head = cur.head;
                let mut prev = head;
                self.listing[offset] = head;
                for (k, &m) in sel.iter().enumerate() {
                    let pt = cur.members[m as usize];
                    self.image[prev as usize] = pt;
                    self.listing[offset + k + 1] = pt;
                    prev = pt;
                }
                self.image[prev as usize] = head;
                debug_assert!(len >= 1);
                if !last {
                    next.clone_from(cur);
                }
            }
        }
    }

    /// Move to the next raw index; false at the end of the index space.
    fn advance(&mut self) -> bool {
        let nslots = self.plan.slots.len();
        let mut s = nslots;
        while s > 0 {
            s -= 1;
            let moved = match self.plan.slots[s] {
                Slot::Arrange { .. } => next_permutation(&mut self.sel[s]),
                _ => {
                    let n = self.slot_input_len(s);
                    next_combination(&mut self.sel[s], n)
                }
            };
            if moved {
                for t in s + 1..nslots {
                    reset_sel(&mut self.sel[t]);
                }
                self.index += 1;
                self.rebuild(s);
                return true;
            }
        }
        false
    }

    fn slot_input_len(&self, s: usize) -> usize {
        let c = &self.ctx[s];
        match self.plan.slots[s] {
            Slot::Union { .. } => c.avail.len(),
            Slot::Members { .. } => c.pool.len() - 1,
            Slot::Anchor { .. } => c.avail.len() - 1,
            Slot::Arrange { len, .. } => len - 1,
        }
    }

    fn accepts(&self) -> bool {
        match self.filter {
            None => true,
            Some(want) => sequence_parity(&self.listing) == want,
        }
    }

    pub(crate) fn next(&mut self) -> Option<(u64, &[u8])> {
        loop {
            if self.index >= self.end {
                return None;
            }
            if self.fresh {
                self.fresh = false;
            } else if !self.advance() || self.index >= self.end {
                self.index = self.end;
                return None;
            }
            if self.accepts() {
                return Some((self.index, &self.image));
            }
        }
    }
}

fn reset_sel(sel: &mut [u8]) {
    for (i, v) in sel.iter_mut().enumerate() {
        *v = i as u8;
    }
}
