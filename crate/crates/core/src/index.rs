//! Suffix array, rank, LCP, and shortest-unique-extension arrays.
//!
//! The index is the only piece of heavy machinery in the crate: suffix array
//! by prefix doubling with counting sort (O(n log n)), LCP by the rank-walking
//! scheme, and from those the `ext` array, where `ext[i]` is the length of the
//! shortest unique substring starting at position `i` (or none when the whole
//! suffix `S[i..n]` still repeats elsewhere).

use std::cmp::Ordering;

use crate::text::{Interval, Text};

/// Immutable suffix index over a [`Text`]. All accessors speak 1-based
/// positions; storage is 0-based `u32` internally.
pub struct SuffixIndex {
    text: Text,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
    // shortest unique extension length per start, 0 = undefined
    ext: Vec<u32>,
}

impl SuffixIndex {
    pub fn build(text: &Text) -> Self {
        let s = text.bytes();
        let n = s.len();
        assert!(n <= u32::MAX as usize, "text too long for u32 index");
        let sa = build_suffix_array(s);
        let mut rank = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = build_lcp(s, &sa, &rank);
        let ext = build_ext(n, &rank, &lcp);
        SuffixIndex {
            text: text.clone(),
            sa,
            rank,
            lcp,
            ext,
        }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn n(&self) -> usize {
        self.sa.len()
    }

    /// Start position (1-based) of the suffix with rank `r`, `1 <= r <= n`.
    pub fn suffix_at_rank(&self, r: usize) -> usize {
        self.sa[r - 1] as usize + 1
    }

    /// Rank (1-based) of the suffix starting at position `i`.
    pub fn rank_of_suffix(&self, i: usize) -> usize {
        self.rank[i - 1] as usize + 1
    }

    /// Length of the longest common prefix of the suffixes ranked `r - 1`
    /// and `r`; `lcp_at(1) == 0`.
    pub fn lcp_at(&self, r: usize) -> usize {
        self.lcp[r - 1] as usize
    }

    /// Length of the shortest unique substring starting at position `i`, or
    /// `None` if every substring starting at `i` repeats.
    pub fn shortest_unique_len(&self, i: usize) -> Option<usize> {
        match self.ext[i - 1] {
            0 => None,
            e => Some(e as usize),
        }
    }

    /// Number of occurrences of `S[iv]` in the text, via binary search over
    /// the suffix array. At least 1 for any valid interval.
    pub fn occurrence_count(&self, iv: Interval) -> usize {
        let pat = self
            .text
            .substring(iv)
            .expect("interval must lie within the indexed text");
        let s = self.text.bytes();
        // ordering of the suffix at `p` truncated to pattern length
        let probe = |p: u32| -> Ordering {
            let p = p as usize;
            let end = (p + pat.len()).min(s.len());
            match s[p..end].cmp(pat) {
                Ordering::Equal if end - p < pat.len() => Ordering::Less,
                other => other,
            }
        };
        let lo = self.sa.partition_point(|&p| probe(p) == Ordering::Less);
        let hi = self.sa.partition_point(|&p| probe(p) != Ordering::Greater);
        hi - lo
    }
}

/// Prefix doubling with counting sort; O(n log n).
fn build_suffix_array(s: &[u8]) -> Vec<u32> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }
    let mut sa: Vec<u32> = vec![0; n];
    let mut rank: Vec<u32> = vec![0; n];
    let mut tmp: Vec<u32> = vec![0; n];

    // round 0: sort by single byte
    {
        let mut cnt = [0usize; 257];
        for &b in s {
            cnt[b as usize + 1] += 1;
        }
        for i in 0..256 {
            cnt[i + 1] += cnt[i];
        }
        for (i, &b) in s.iter().enumerate() {
            sa[cnt[b as usize]] = i as u32;
            cnt[b as usize] += 1;
        }
        let mut r = 0u32;
        rank[sa[0] as usize] = 0;
        for k in 1..n {
            if s[sa[k] as usize] != s[sa[k - 1] as usize] {
                r += 1;
            }
            rank[sa[k] as usize] = r;
        }
        if r as usize == n - 1 {
            return sa;
        }
    }

    let mut len = 1usize;
    let mut cnt: Vec<usize> = Vec::new();
    let mut order2: Vec<u32> = Vec::with_capacity(n);
    while len < n {
        // order by second key (rank at i+len, absent keys first): suffixes
        // with i >= n-len have an empty second half and lead; the rest follow
        // in the order of the previous round shifted by len.
        order2.clear();
        for i in (n - len)..n {
            order2.push(i as u32);
        }
        for &p in sa.iter() {
            if p as usize >= len {
                order2.push(p - len as u32);
            }
        }
        // stable counting sort by first key
        cnt.clear();
        cnt.resize(n + 1, 0);
        for &r in rank.iter() {
            cnt[r as usize + 1] += 1;
        }
        for i in 0..n {
            cnt[i + 1] += cnt[i];
        }
        for &p in &order2 {
            let r = rank[p as usize] as usize;
            sa[cnt[r]] = p;
            cnt[r] += 1;
        }
        // re-rank by the (first, second) key pair
        let second = |i: usize| -> i64 {
            if i + len < n {
                rank[i + len] as i64
            } else {
                -1
            }
        };
        tmp[sa[0] as usize] = 0;
        let mut r = 0u32;
        for k in 1..n {
            let (a, b) = (sa[k - 1] as usize, sa[k] as usize);
            if rank[a] != rank[b] || second(a) != second(b) {
                r += 1;
            }
            tmp[b] = r;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if r as usize == n - 1 {
            break;
        }
        len *= 2;
    }
    sa
}

/// LCP of rank-adjacent suffixes by walking positions in text order,
/// reusing all but one matched symbol between steps.
fn build_lcp(s: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut k = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            k = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + k < n && j + k < n && s[i + k] == s[j + k] {
            k += 1;
        }
        lcp[r] = k as u32;
        k = k.saturating_sub(1);
    }
    lcp
}

/// A substring starting at `i` is unique iff it is longer than the LCPs with
/// both rank-neighbors, so the shortest unique one has length
/// `max(neighbor LCPs) + 1` — provided it still fits inside the text.
fn build_ext(n: usize, rank: &[u32], lcp: &[u32]) -> Vec<u32> {
    let mut ext = vec![0u32; n];
    for (i, e) in ext.iter_mut().enumerate() {
        let r = rank[i] as usize;
        let left = lcp[r];
        let right = if r + 1 < n { lcp[r + 1] } else { 0 };
        let m = left.max(right) as usize;
        if i + m < n {
            *e = (m + 1) as u32;
        }
    }
    ext
}
