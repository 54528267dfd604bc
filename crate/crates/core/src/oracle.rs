//! Brute-force reference implementations and verification harnesses.
//!
//! Everything here derives straight from the definitions, with no suffix
//! array in sight: uniqueness comes from counting occurrences by direct
//! comparison, and the query/set operations search all candidate intervals.
//! The fast paths are required to agree with these on every tested input.
//! Oracles exist for truth, not speed; they are quadratic in text length and
//! capped at desk scale.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::enumeration::{
    bound_report, build_charging, enumerate_interval_sus, enumerate_point_sus,
};
use crate::index::SuffixIndex;
use crate::mus::{check_mus_invariants, compute_mus};
use crate::query::{interval_sus, interval_sus_full_scan, point_sus};
use crate::text::{Interval, Text};

/// Oracle tables get dense `n x n` storage; keep them at desk scale.
const MAX_ORACLE_LEN: usize = 5_000;

/// Occurrence counts for every interval of one text, built by pairwise
/// suffix-extension: `match[i][j]` is the number of leading symbols shared
/// by the suffixes at `i` and `j`, computed right to left. The number of
/// occurrences of `S[x..x+L-1]` is then the number of suffixes sharing at
/// least `L` leading symbols with the one at `x`.
pub struct Oracle {
    text: Text,
    n: usize,
    // cnt[(x-1) * n + (L-1)] = occurrence count of the length-L substring
    // starting at 1-based x (for x + L - 1 <= n)
    cnt: Vec<u16>,
}

impl Oracle {
    pub fn new(text: &Text) -> Self {
        let s = text.bytes();
        let n = s.len();
        assert!(
            n <= MAX_ORACLE_LEN,
            "oracle tables are quadratic; text too long"
        );
        // shared-prefix lengths of suffix pairs, one row ahead
        let mut lce = vec![0u16; n * n];
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                if s[i] == s[j] {
                    let ahead = if i + 1 < n && j + 1 < n {
                        lce[(i + 1) * n + j + 1]
                    } else {
                        0
                    };
                    lce[i * n + j] = ahead + 1;
                }
            }
        }
        let mut cnt = vec![0u16; n * n];
        for x in 0..n {
            let row = &mut cnt[x * n..(x + 1) * n];
            for i in 0..n {
                let shared = lce[i * n + x] as usize;
                if shared > 0 {
                    row[shared - 1] += 1;
                }
            }
            // suffix-sum: intervals of length L occur as often as every
            // shared prefix of length >= L
            for l in (0..n - 1).rev() {
                row[l] += row[l + 1];
            }
        }
        Oracle {
            text: text.clone(),
            n,
            cnt,
        }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn occurrence_count(&self, iv: Interval) -> usize {
        assert!(iv.end() <= self.n, "interval out of range");
        self.cnt[(iv.begin() - 1) * self.n + (iv.len() - 1)] as usize
    }

    pub fn is_unique(&self, iv: Interval) -> bool {
        self.occurrence_count(iv) == 1
    }

    /// All minimal unique substrings, by definition: unique intervals whose
    /// one-shorter sub-intervals both repeat.
    pub fn mus(&self) -> Vec<Interval> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                let iv = Interval::new(i, j);
                if !self.is_unique(iv) {
                    continue;
                }
                let minimal = j == i
                    || (!self.is_unique(Interval::new(i + 1, j))
                        && !self.is_unique(Interval::new(i, j - 1)));
                if minimal {
                    out.push(iv);
                }
            }
        }
        out
    }

    /// All minimal-length unique intervals containing position `p`.
    pub fn point_sus(&self, p: usize) -> Vec<Interval> {
        self.interval_sus(Interval::point(p))
    }

    /// All minimal-length unique intervals containing the query interval.
    pub fn interval_sus(&self, q: Interval) -> Vec<Interval> {
        assert!(q.end() <= self.n, "query out of range");
        for len in q.len()..=self.n {
            let lo = q.end().saturating_sub(len - 1).max(1);
            let hi = q.begin().min(self.n - len + 1);
            let found: Vec<Interval> = (lo..=hi)
                .map(|x| Interval::new(x, x + len - 1))
                .filter(|&iv| self.is_unique(iv))
                .collect();
            if !found.is_empty() {
                return found;
            }
        }
        unreachable!("the whole text is always unique");
    }

    /// Union of the point-SUS answers over all positions.
    pub fn ps_set(&self) -> Vec<Interval> {
        let mut set = BTreeSet::new();
        for p in 1..=self.n {
            set.extend(self.point_sus(p));
        }
        set.into_iter().collect()
    }

    /// Union of all non-trivial interval-SUS answers: an answer is trivial
    /// exactly when it is a multi-position query returned verbatim.
    pub fn is_set(&self) -> Vec<Interval> {
        let mut set = BTreeSet::new();
        for s in 1..=self.n {
            for t in s..=self.n {
                let q = Interval::new(s, t);
                for ans in self.interval_sus(q) {
                    if !(s != t && ans == q) {
                        set.insert(ans);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// Classifies the point-SUS set by the defining predicates, returning
    /// `(ls, ms, rs)`.
    pub fn decompose(&self) -> (Vec<Interval>, Vec<Interval>, Vec<Interval>) {
        let mus = self.mus();
        let (mut ls, mut ms, mut rs) = (Vec::new(), Vec::new(), Vec::new());
        for iv in self.ps_set() {
            if mus.contains(&iv) {
                ms.push(iv);
            } else if mus
                .iter()
                .any(|m| m.end() == iv.end() && m.begin() > iv.begin())
            {
                ls.push(iv);
            } else if mus
                .iter()
                .any(|m| m.begin() == iv.begin() && m.end() < iv.end())
            {
                rs.push(iv);
            } else {
                unreachable!("point SUS {iv} fits no class");
            }
        }
        (ls, ms, rs)
    }
}

/// Is `S[iv]` unique? Decided by scanning the text for occurrences, one
/// window at a time.
pub fn naive_unique(text: &Text, iv: Interval) -> bool {
    let w = text.substring(iv).expect("interval within text");
    let s = text.bytes();
    let mut occ = 0;
    for i in 0..=(s.len() - w.len()) {
        if &s[i..i + w.len()] == w {
            occ += 1;
            if occ > 1 {
                return false;
            }
        }
    }
    occ == 1
}

pub fn naive_mus(text: &Text) -> Vec<Interval> {
    Oracle::new(text).mus()
}

pub fn naive_point_sus(text: &Text, p: usize) -> Vec<Interval> {
    Oracle::new(text).point_sus(p)
}

pub fn naive_interval_sus(text: &Text, q: Interval) -> Vec<Interval> {
    Oracle::new(text).interval_sus(q)
}

pub fn naive_ps_set(text: &Text) -> Vec<Interval> {
    Oracle::new(text).ps_set()
}

pub fn naive_is_set(text: &Text) -> Vec<Interval> {
    Oracle::new(text).is_set()
}

/// One disagreement between a fast path and the oracle, or a failed bound.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub text: String,
    pub check: String,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}: {} ({})", self.text, self.check, self.detail)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Compare `occurrence_count` against the oracle on every interval.
    pub occurrence_counts: bool,
    /// Compare the windowed query path against the full-scan reference on
    /// every query.
    pub scan_path: bool,
}

impl CheckOptions {
    /// Everything on; used on exhaustive (small) domains.
    pub fn exhaustive() -> Self {
        CheckOptions {
            occurrence_counts: true,
            scan_path: true,
        }
    }

    /// Oracle comparisons only; used on longer randomized inputs.
    pub fn randomized() -> Self {
        CheckOptions {
            occurrence_counts: false,
            scan_path: false,
        }
    }
}

/// Outcome of checking one string: all violations found plus the headline
/// counts for maxima tracking.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub violations: Vec<Violation>,
    pub ps_count: usize,
    pub is_count: usize,
    pub mus_count: usize,
}

/// Runs every fast path against the oracle and every bound check on one
/// text.
pub fn check_string(text: &Text, opts: CheckOptions) -> CheckOutcome {
    let n = text.len();
    let label = || String::from_utf8_lossy(text.bytes()).into_owned();
    let mut violations: Vec<Violation> = Vec::new();
    let mut fail = |check: &str, detail: String| {
        violations.push(Violation {
            text: label(),
            check: check.to_string(),
            detail,
        });
    };

    let index = SuffixIndex::build(text);
    let oracle = Oracle::new(text);
    let mus = compute_mus(&index);

    // index internals
    for i in 1..=n {
        if index.suffix_at_rank(index.rank_of_suffix(i)) != i {
            fail("sa_rank_inverse", format!("position {i}"));
        }
    }
    for r in 2..=n {
        let a = index.suffix_at_rank(r - 1);
        let b = index.suffix_at_rank(r);
        let sa_ord = text.bytes()[a - 1..] < text.bytes()[b - 1..];
        if !sa_ord {
            fail("sa_sorted", format!("ranks {} and {}", r - 1, r));
        }
        let expect = common_prefix(&text.bytes()[a - 1..], &text.bytes()[b - 1..]);
        if index.lcp_at(r) != expect {
            fail(
                "lcp_value",
                format!("rank {r}: {} vs {expect}", index.lcp_at(r)),
            );
        }
    }
    let mut prev_end = 0usize;
    let mut seen_none = false;
    for i in 1..=n {
        let fast = index.shortest_unique_len(i);
        let truth = (1..=(n - i + 1)).find(|&l| oracle.is_unique(Interval::new(i, i + l - 1)));
        if fast != truth {
            fail("ext_value", format!("position {i}: {fast:?} vs {truth:?}"));
        }
        match fast {
            Some(e) => {
                if seen_none {
                    fail(
                        "ext_prefix_closed",
                        format!("defined at {i} after undefined"),
                    );
                }
                let end = i + e - 1;
                if end < prev_end {
                    fail("ext_monotone_ends", format!("position {i}"));
                }
                prev_end = end;
                if index.occurrence_count(Interval::new(i, end)) != 1 {
                    fail("ext_unique", format!("position {i}"));
                }
                if e > 1 && index.occurrence_count(Interval::new(i, end - 1)) < 2 {
                    fail("ext_shorter_repeats", format!("position {i}"));
                }
            }
            None => seen_none = true,
        }
    }

    if opts.occurrence_counts {
        for i in 1..=n {
            for j in i..=n {
                let iv = Interval::new(i, j);
                let (fast, truth) = (index.occurrence_count(iv), oracle.occurrence_count(iv));
                if fast != truth {
                    fail("occurrence_count", format!("{iv}: {fast} vs {truth}"));
                }
            }
        }
    }

    // MUS set
    let mus_truth = oracle.mus();
    if mus.items() != mus_truth {
        fail("mus_set", format!("{:?} vs {:?}", mus.items(), mus_truth));
    }
    if !check_mus_invariants(&mus, n) {
        fail("mus_invariants", format!("{:?}", mus.items()));
    }

    // queries: every interval, point queries via the point entry as well
    for s in 1..=n {
        for t in s..=n {
            let q = Interval::new(s, t);
            let fast = interval_sus(&mus, q).expect("valid query");
            let truth = oracle.interval_sus(q);
            if fast.sus_list() != truth {
                fail(
                    "interval_sus",
                    format!("{q}: {:?} vs {truth:?}", fast.sus_list()),
                );
            }
            if opts.scan_path {
                let scan = interval_sus_full_scan(&mus, q).expect("valid query");
                if scan != fast {
                    fail("query_paths_agree", format!("{q}"));
                }
            }
        }
        let fast = point_sus(&mus, s).expect("valid position");
        if fast.sus_list() != oracle.point_sus(s) {
            fail("point_sus", format!("position {s}"));
        }
    }

    // point set and decomposition
    let ps = enumerate_point_sus(&mus, n);
    if ps.ps() != oracle.ps_set() {
        fail("ps_set", format!("{:?} vs {:?}", ps.ps(), oracle.ps_set()));
    }
    let (ls_truth, ms_truth, rs_truth) = oracle.decompose();
    if ps.ls() != ls_truth || ps.ms() != ms_truth || ps.rs() != rs_truth {
        fail(
            "ps_decomposition",
            "ls/ms/rs disagree with oracle".to_string(),
        );
    }
    // right extensions answer their end position, left extensions their begin
    for &iv in ps.rs() {
        let at_end = point_sus(&mus, iv.end()).expect("valid position");
        if !at_end.sus_list().contains(&iv) {
            fail("rs_in_sus_of_end", format!("{iv}"));
        }
    }
    for &iv in ps.ls() {
        let at_begin = point_sus(&mus, iv.begin()).expect("valid position");
        if !at_begin.sus_list().contains(&iv) {
            fail("ls_in_sus_of_begin", format!("{iv}"));
        }
    }

    // interval set
    let is_fast = enumerate_interval_sus(&mus, n);
    let is_truth = oracle.is_set();
    if is_fast != is_truth {
        fail("is_set", format!("{is_fast:?} vs {is_truth:?}"));
    }

    // bounds and charging structure
    let charging = build_charging(&ps, &mus);
    let report = bound_report(&mus, &ps, &is_fast, &charging);
    for check in report.failed() {
        fail(check.name, format!("lhs {} rhs {}", check.lhs, check.rhs));
    }

    CheckOutcome {
        violations,
        ps_count: ps.len(),
        is_count: is_truth.len(),
        mus_count: mus.len(),
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SweepError {
    #[error("sweep over {needed} strings exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

pub const DEFAULT_SWEEP_BUDGET: u64 = 10_000_000;

/// Aggregate result of sweeping all canonical strings of one length.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub n: usize,
    pub sigma: usize,
    pub strings: u64,
    pub max_ps: usize,
    pub ps_witness: String,
    pub max_is: usize,
    pub is_witness: String,
    pub violations: Vec<Violation>,
}

/// Number of canonical (first-occurrence renamed) strings of length `n`
/// over at most `sigma` symbols.
pub fn canonical_count(n: usize, sigma: usize) -> u128 {
    let mut dp = vec![0u128; sigma + 1];
    dp[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; sigma + 1];
        for (used, &ways) in dp.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            if used > 0 {
                next[used] += ways * used as u128;
            }
            if used < sigma {
                next[used + 1] += ways;
            }
        }
        dp = next;
    }
    dp[1..].iter().sum()
}

/// All canonical strings of length `n` over at most `sigma` symbols, in
/// lexicographic order. The first occurrence of each new symbol is 'a', 'b',
/// 'c', ... — every string over the alphabet is a renaming of exactly one of
/// these, and all MUS/SUS structure is renaming-invariant.
pub fn canonical_strings(n: usize, sigma: usize) -> Vec<Vec<u8>> {
    fn rec(buf: &mut Vec<u8>, used: usize, n: usize, sigma: usize, out: &mut Vec<Vec<u8>>) {
        if buf.len() == n {
            out.push(buf.clone());
            return;
        }
        for v in 0..(used + 1).min(sigma) {
            buf.push(b'a' + v as u8);
            rec(buf, used.max(v + 1), n, sigma, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), 0, n, sigma, &mut out);
    out
}

/// Checks every canonical string of every length up to `n_max`, tracking the
/// maxima of |PS| and |IS| and collecting violations (expected: none).
/// Strings are partitioned across the current rayon pool; results do not
/// depend on the worker count.
pub fn sweep(n_max: usize, sigma: usize, budget: u64) -> Result<Vec<SweepResult>, SweepError> {
    let needed: u128 = (1..=n_max).map(|n| canonical_count(n, sigma)).sum();
    if needed > budget as u128 {
        return Err(SweepError::BudgetExceeded { needed, budget });
    }
    let mut results = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let strings = canonical_strings(n, sigma);
        let evaluated: Vec<(Vec<u8>, CheckOutcome)> = strings
            .into_par_iter()
            .map(|bytes| {
                let text = Text::new(bytes.clone()).expect("canonical strings are non-empty");
                let outcome = check_string(&text, CheckOptions::exhaustive());
                (bytes, outcome)
            })
            .collect();

        let mut max_ps = 0;
        let mut ps_witness: &[u8] = b"";
        let mut max_is = 0;
        let mut is_witness: &[u8] = b"";
        let mut violations = Vec::new();
        for (bytes, outcome) in &evaluated {
            if outcome.ps_count > max_ps {
                max_ps = outcome.ps_count;
                ps_witness = bytes;
            }
            if outcome.is_count > max_is {
                max_is = outcome.is_count;
                is_witness = bytes;
            }
            violations.extend(outcome.violations.iter().cloned());
        }
        violations.sort();
        results.push(SweepResult {
            n,
            sigma,
            strings: evaluated.len() as u64,
            max_ps,
            ps_witness: String::from_utf8_lossy(ps_witness).into_owned(),
            max_is,
            is_witness: String::from_utf8_lossy(is_witness).into_owned(),
            violations,
        });
    }
    Ok(results)
}

/// Deterministic random texts: lengths uniform in `1..=max_len`, symbols
/// uniform over the first `sigma` letters, with `sigma` cycling through
/// `sigmas` per string.
pub fn random_texts(seed: u64, count: usize, max_len: usize, sigmas: &[u8]) -> Vec<Text> {
    assert!(!sigmas.is_empty() && sigmas.iter().all(|&s| (1..=26).contains(&s)));
    assert!(max_len >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let sigma = sigmas[i % sigmas.len()];
            let n = rng.gen_range(1..=max_len);
            let bytes: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
            Text::new(bytes).expect("n >= 1")
        })
        .collect()
}

/// Checks `count` seeded random strings; returns all violations, sorted.
pub fn check_random(seed: u64, count: usize, max_len: usize, sigmas: &[u8]) -> Vec<Violation> {
    let texts = random_texts(seed, count, max_len, sigmas);
    let mut violations: Vec<Violation> = texts
        .par_iter()
        .flat_map_iter(|t| check_string(t, CheckOptions::randomized()).violations)
        .collect();
    violations.sort();
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Text {
        Text::new(s).unwrap()
    }

    fn ivs(pairs: &[(usize, usize)]) -> Vec<Interval> {
        pairs.iter().map(|&(b, e)| Interval::new(b, e)).collect()
    }

    #[test]
    fn naive_unique_examples() {
        let s = t("aabbaababaa");
        assert!(naive_unique(&s, Interval::new(3, 4)));
        assert!(!naive_unique(&s, Interval::new(1, 2)));
        assert!(naive_unique(&s, s.full_interval()));
    }

    #[test]
    fn oracle_table_matches_direct_scan() {
        for s in ["aabbaababaa", "aaaa", "abcabc", "zz", "a"] {
            let text = t(s);
            let oracle = Oracle::new(&text);
            for i in 1..=text.len() {
                for j in i..=text.len() {
                    let iv = Interval::new(i, j);
                    assert_eq!(oracle.is_unique(iv), naive_unique(&text, iv), "{s:?} {iv}");
                }
            }
        }
    }

    #[test]
    fn naive_mus_examples() {
        assert_eq!(
            naive_mus(&t("aabbaababaa")),
            ivs(&[(3, 4), (4, 7), (5, 8), (7, 9), (8, 11)])
        );
        assert_eq!(naive_mus(&t("aaa")), ivs(&[(1, 3)]));
        assert_eq!(naive_mus(&t("ab")), ivs(&[(1, 1), (2, 2)]));
    }

    #[test]
    fn naive_point_sus_examples() {
        let s = t("aabbaababaa");
        assert_eq!(
            naive_point_sus(&s, 6),
            ivs(&[(3, 6), (4, 7), (5, 8), (6, 9)])
        );
        assert_eq!(naive_point_sus(&s, 10), ivs(&[(7, 10), (8, 11)]));
        assert_eq!(naive_point_sus(&t("a"), 1), ivs(&[(1, 1)]));
    }

    #[test]
    fn naive_interval_sus_examples() {
        let s = t("aabbaababaa");
        assert_eq!(naive_interval_sus(&s, Interval::new(5, 8)), ivs(&[(5, 8)]));
        assert_eq!(
            naive_interval_sus(&t("baacaad"), Interval::new(2, 2)),
            ivs(&[(1, 2)])
        );
        assert_eq!(
            naive_interval_sus(&s, Interval::new(6, 6)),
            naive_point_sus(&s, 6)
        );
    }

    #[test]
    fn naive_set_examples() {
        assert_eq!(naive_ps_set(&t("axbxc")).len(), 7);
        assert_eq!(naive_is_set(&t("baacaad")).len(), 11);
        assert_eq!(naive_ps_set(&t("a")), ivs(&[(1, 1)]));
        assert_eq!(naive_is_set(&t("a")), ivs(&[(1, 1)]));
    }

    #[test]
    fn canonical_counts_match_generation() {
        for (n, sigma) in [(1, 3), (4, 2), (5, 3), (6, 3)] {
            let generated = canonical_strings(n, sigma);
            assert_eq!(generated.len() as u128, canonical_count(n, sigma));
            // lexicographic and deduped
            let mut sorted = generated.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, generated);
        }
    }

    #[test]
    fn sweep_budget_guard() {
        assert!(matches!(
            sweep(30, 3, 1_000),
            Err(SweepError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sweep_small_domain_maxima() {
        let results = sweep(5, 3, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!(results.len(), 5);
        for r in &results {
            assert!(r.violations.is_empty(), "violations: {:?}", r.violations);
        }
        assert_eq!(results[0].max_ps, 1);
        // at n = 5 the point maximum 7 = (3n-1)/2 is already reachable with
        // three symbols
        assert_eq!(results[4].max_ps, 7);
        assert_eq!(results[4].ps_witness, "abbbc");
    }

    #[test]
    fn sweep_binary_lower_bound() {
        let results = sweep(4, 2, DEFAULT_SWEEP_BUDGET).unwrap();
        // the fixed-alphabet family gives n + sigma - 2 = 4 at n = 4
        assert!(results[3].max_ps >= 4);
        assert_eq!(results[3].max_ps, 4);
    }

    #[test]
    fn random_texts_are_deterministic() {
        let a = random_texts(42, 10, 50, &[2, 3, 4, 26]);
        let b = random_texts(42, 10, 50, &[2, 3, 4, 26]);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.bytes(), y.bytes());
        }
    }

    #[test]
    fn check_string_is_clean_on_known_strings() {
        for s in ["aabbaababaa", "axbxc", "baacaad", "abbbba", "a", "aaaaaa"] {
            let outcome = check_string(&t(s), CheckOptions::exhaustive());
            assert!(
                outcome.violations.is_empty(),
                "{s}: {:?}",
                outcome.violations
            );
        }
    }
}
