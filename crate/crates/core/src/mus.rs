//! Minimal unique substrings.
//!
//! A MUS is a unique substring whose every proper substring repeats. MUSs
//! never nest, so sorting them by begin position also sorts them by end
//! position, and there are between 1 and n of them.

use crate::index::SuffixIndex;
use crate::text::Interval;

/// The set of all MUSs of a text, sorted by begin position.
///
/// Both begin and end positions are strictly increasing, which the lookup
/// helpers below rely on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MusList {
    items: Vec<Interval>,
    n: usize,
}

impl MusList {
    /// Wraps raw intervals without validation. Intended for tests and
    /// verification harnesses that need to construct malformed lists.
    pub fn from_items(items: Vec<Interval>, n: usize) -> Self {
        MusList { items, n }
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Length of the text this list was computed from.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> Interval {
        self.items[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = Interval> + '_ {
        self.items.iter().copied()
    }

    /// Is `iv` itself a MUS?
    pub fn contains(&self, iv: Interval) -> bool {
        self.mus_with_begin(iv.begin()) == Some(iv)
    }

    /// The MUS beginning exactly at `x`, if any. Begins are distinct, so at
    /// most one exists.
    pub fn mus_with_begin(&self, x: usize) -> Option<Interval> {
        let i = self.items.partition_point(|m| m.begin() < x);
        self.items.get(i).copied().filter(|m| m.begin() == x)
    }

    /// The MUS ending exactly at `y`, if any.
    pub fn mus_with_end(&self, y: usize) -> Option<Interval> {
        let i = self.items.partition_point(|m| m.end() < y);
        self.items.get(i).copied().filter(|m| m.end() == y)
    }

    /// Number of MUSs with begin position `< x`.
    pub fn count_begins_lt(&self, x: usize) -> usize {
        self.items.partition_point(|m| m.begin() < x)
    }

    /// Number of MUSs with end position `< y`.
    pub fn count_ends_lt(&self, y: usize) -> usize {
        self.items.partition_point(|m| m.end() < y)
    }

    /// Number of MUSs with end position `<= y`.
    pub fn count_ends_le(&self, y: usize) -> usize {
        self.items.partition_point(|m| m.end() <= y)
    }
}

/// Computes all MUSs from the shortest-unique-extension array.
///
/// Candidate `[i, y_i]` (the shortest unique substring starting at `i`) is
/// left-minimal iff dropping its first symbol leaves a repeating string,
/// i.e. iff no candidate at `i + 1` ends at or before `y_i`. Since candidate
/// ends are non-decreasing, that reduces to `y_{i+1} > y_i`, with the last
/// defined candidate always kept.
pub fn compute_mus(index: &SuffixIndex) -> MusList {
    let n = index.n();
    let mut items = Vec::new();
    let mut i = 1usize;
    while i <= n {
        let Some(e) = index.shortest_unique_len(i) else {
            break;
        };
        let end = i + e - 1;
        let next_end = if i < n {
            index.shortest_unique_len(i + 1).map(|e2| i + 1 + e2 - 1)
        } else {
            None
        };
        match next_end {
            Some(ne) if ne <= end => {} // S[i+1..end] still unique; not minimal
            _ => items.push(Interval::new(i, end)),
        }
        i += 1;
    }
    MusList { items, n }
}

/// Checks the structural invariants of a MUS list: strictly increasing
/// begins, strictly increasing ends, and `1 <= m <= n`.
pub fn check_mus_invariants(mus: &MusList, n: usize) -> bool {
    let items = mus.items();
    if items.is_empty() || items.len() > n {
        return false;
    }
    items
        .windows(2)
        .all(|w| w[0].begin() < w[1].begin() && w[0].end() < w[1].end())
        && items.iter().all(|m| m.end() <= n)
}

/// MUSs that are point SUSs for no position: `M_S \ PS_S`.
///
/// `ps` must be the complete, sorted point-SUS set of the same text.
pub fn meaningless_mus(mus: &MusList, ps: &[Interval]) -> Vec<Interval> {
    mus.iter()
        .filter(|m| ps.binary_search(m).is_err())
        .collect()
}
