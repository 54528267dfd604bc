//! Point and interval SUS queries via the MUS-cover characterization.
//!
//! An interval is unique iff it contains a MUS, so the shortest unique
//! intervals containing a query `q` are exactly the minimal-length members of
//! `{ cover(M, q) : M a MUS }`, where `cover` is the smallest interval
//! containing both arguments. Queries therefore reduce to inspecting a few
//! MUSs located by binary search, with a full scan over all MUSs kept as the
//! reference path.

use thiserror::Error;

use crate::mus::MusList;
use crate::text::Interval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QueryError {
    #[error("query position {p} out of range 1..={n}")]
    PositionOutOfRange { p: usize, n: usize },
    #[error("query interval [{begin}, {end}] out of range for text of length {n}")]
    IntervalOutOfRange { begin: usize, end: usize, n: usize },
}

/// The answer to a SUS query: all minimal-length unique intervals containing
/// the query, sorted by begin position. Non-empty for every valid query
/// since the whole text is always unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SusAnswer {
    query: Interval,
    sus_list: Vec<Interval>,
    sus_length: usize,
}

impl SusAnswer {
    pub fn query(&self) -> Interval {
        self.query
    }

    pub fn sus_list(&self) -> &[Interval] {
        &self.sus_list
    }

    pub fn into_sus_list(self) -> Vec<Interval> {
        self.sus_list
    }

    /// Common length of every interval in the answer.
    pub fn sus_length(&self) -> usize {
        self.sus_length
    }
}

/// Smallest interval containing both `mus` and `query`.
pub fn cover(mus: Interval, query: Interval) -> Interval {
    Interval::new(mus.begin().min(query.begin()), mus.end().max(query.end()))
}

/// All SUSs containing position `p`.
pub fn point_sus(mus: &MusList, p: usize) -> Result<SusAnswer, QueryError> {
    let n = mus.n();
    if p < 1 || p > n {
        return Err(QueryError::PositionOutOfRange { p, n });
    }
    interval_sus(mus, Interval::point(p))
}

/// All SUSs containing the query interval `q`.
///
/// MUSs split into four zones relative to `q = [s, t]` (begins and ends are
/// both strictly increasing across the list):
///
/// * inside `q` — every cover equals `q` itself, which is then the unique
///   minimum since no interval containing `q` can be shorter;
/// * strictly left (`b < s, e < t`) — cover `[b, t]`; lengths strictly
///   decrease along the zone, so only its last member can be minimal;
/// * strictly right (`b >= s, e > t`) — cover `[s, e]`; lengths strictly
///   increase, so only its first member can be minimal;
/// * containing `q` (`b < s, e >= t`) — the cover is the MUS itself and
///   lengths are not monotone, so the whole zone is scanned.
pub fn interval_sus(mus: &MusList, q: Interval) -> Result<SusAnswer, QueryError> {
    check_query(mus, q)?;
    let m = mus.len();
    let ib = mus.count_begins_lt(q.begin());
    let ie = mus.count_ends_lt(q.end());
    let ie2 = mus.count_ends_le(q.end());

    if ib < ie2 {
        // some MUS lies inside q: q is unique and answers itself
        return Ok(SusAnswer {
            query: q,
            sus_list: vec![q],
            sus_length: q.len(),
        });
    }

    let mut candidates: Vec<Interval> = Vec::with_capacity(ib - ie + 2);
    let left_end = ie.min(ib);
    if left_end > 0 {
        candidates.push(cover(mus.get(left_end - 1), q));
    }
    for i in ie..ib {
        candidates.push(cover(mus.get(i), q));
    }
    let right_start = ib.max(ie2);
    if right_start < m {
        candidates.push(cover(mus.get(right_start), q));
    }
    Ok(finish(q, candidates))
}

/// Reference path: evaluates the cover of every MUS. Must return exactly the
/// same answer as [`interval_sus`].
pub fn interval_sus_full_scan(mus: &MusList, q: Interval) -> Result<SusAnswer, QueryError> {
    check_query(mus, q)?;
    let candidates: Vec<Interval> = mus.iter().map(|m| cover(m, q)).collect();
    Ok(finish(q, candidates))
}

fn check_query(mus: &MusList, q: Interval) -> Result<(), QueryError> {
    let n = mus.n();
    if q.end() > n {
        return Err(QueryError::IntervalOutOfRange {
            begin: q.begin(),
            end: q.end(),
            n,
        });
    }
    Ok(())
}

fn finish(query: Interval, mut candidates: Vec<Interval>) -> SusAnswer {
    let best = candidates
        .iter()
        .map(|c| c.len())
        .min()
        .expect("at least one MUS exists");
    candidates.retain(|c| c.len() == best);
    candidates.sort_unstable();
    candidates.dedup();
    SusAnswer {
        query,
        sus_list: candidates,
        sus_length: best,
    }
}
