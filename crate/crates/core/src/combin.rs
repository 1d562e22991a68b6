//! Small combinatorial helpers shared by the enumeration code.

use alloc::vec::Vec;
use core::ops::Range;

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Advance `idx` (strictly increasing, values `< n`) to the next
/// lexicographic `k`-combination. Returns false when exhausted.
pub(crate) fn next_combination(idx: &mut [u8], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if (idx[i] as usize) < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Next permutation in lexicographic order, in place.
pub(crate) fn next_permutation(a: &mut [u8]) -> bool {
    let len = a.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Cut `0..len` into at most `count` contiguous near-equal ranges, in order.
pub(crate) fn split_range(len: u64, count: usize) -> Vec<Range<u64>> {
    let count = (count.max(1) as u64).min(len.max(1));
    let base = len / count;
    let extra = len % count;
    let mut start = 0;
    (0..count)
        .map(|i| {
            let size = base + u64::from(i < extra);
            let r = start..start + size;
            start = r.end;
            r
        })
        .collect()
}

/// Write the `rank`-th lexicographic `k`-combination of `0..n` into `out`.
pub(crate) fn unrank_combination(mut rank: u128, n: usize, out: &mut [u8]) {
    let k = out.len();
    let mut next = 0usize;
    for slot in 0..k {
        loop {
            let below = binomial(n - next - 1, k - slot - 1);
            if rank < below {
                break;
            }
            rank -= below;
            next += 1;
        }
        out[slot] = next as u8;
        next += 1;
    }
}

/// Write the `rank`-th lexicographic permutation of `0..out.len()` into `out`.
pub(crate) fn unrank_permutation(mut rank: u128, out: &mut [u8]) {
    let len = out.len();
    let mut pool: [u8; 256] = [0; 256];
    for (i, p) in pool.iter_mut().enumerate().take(len) {
        *p = i as u8;
    }
    let mut remaining = len;
    for slot in out.iter_mut() {
        let block = factorial(remaining - 1);
        let pick = (rank / block) as usize;
        rank %= block;
        *slot = pool[pick];
        pool.copy_within(pick + 1..remaining, pick);
        remaining -= 1;
    }
}
