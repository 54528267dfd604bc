//! Enumeration of the complete point-SUS and non-trivial interval-SUS sets,
//! the left/mus/right decomposition, the position-charging map, and the
//! bound checks tying them together.

use std::collections::BTreeSet;

use crate::index::SuffixIndex;
use crate::mus::{check_mus_invariants, compute_mus, MusList};
use crate::query::{interval_sus, point_sus};
use crate::text::{Interval, Text};

/// The set `PS` of all point SUSs of a text, partitioned into:
///
/// * `ms` — point SUSs that are themselves MUSs,
/// * `ls` — non-MUS point SUSs obtained by extending a MUS to the left
///   (some MUS shares their end and begins strictly later),
/// * `rs` — non-MUS point SUSs obtained by extending a MUS to the right
///   (some MUS shares their begin and ends strictly earlier).
///
/// The three parts are pairwise disjoint and union to `ps`; all four lists
/// are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSusSet {
    n: usize,
    ps: Vec<Interval>,
    ls: Vec<Interval>,
    ms: Vec<Interval>,
    rs: Vec<Interval>,
}

impl PointSusSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ps(&self) -> &[Interval] {
        &self.ps
    }

    pub fn ls(&self) -> &[Interval] {
        &self.ls
    }

    pub fn ms(&self) -> &[Interval] {
        &self.ms
    }

    pub fn rs(&self) -> &[Interval] {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.ps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ps.is_empty()
    }
}

/// Charging assignment for point SUSs: left extensions and MUSs charge their
/// begin position, right extensions charge their end position.
///
/// `finv(u)` is the set of point SUSs charged to `u` (possibly empty), and
/// `big_u` collects the positions charged exactly twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargingMap {
    n: usize,
    assignments: Vec<(Interval, usize)>,
    finv: Vec<Vec<Interval>>,
    big_u: Vec<usize>,
}

impl ChargingMap {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All `(interval, charged position)` pairs, sorted by interval.
    pub fn assignments(&self) -> &[(Interval, usize)] {
        &self.assignments
    }

    /// The position a given point SUS is charged to.
    pub fn charge_of(&self, iv: Interval) -> Option<usize> {
        self.assignments
            .binary_search_by_key(&iv, |&(i, _)| i)
            .ok()
            .map(|k| self.assignments[k].1)
    }

    /// The set of point SUSs charged to position `u`.
    pub fn finv(&self, u: usize) -> &[Interval] {
        &self.finv[u]
    }

    /// Positions charged exactly twice, sorted.
    pub fn big_u(&self) -> &[usize] {
        &self.big_u
    }

    /// Total number of charges, which must equal `|PS|`.
    pub fn total_charges(&self) -> usize {
        self.finv.iter().map(|v| v.len()).sum()
    }
}

/// One verified inequality (or structural condition) with its operands.
/// For structural conditions `lhs` counts violations and `rhs` is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// Counts and named checks for one text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub ps_count: usize,
    pub is_count: usize,
    pub ls_count: usize,
    pub ms_count: usize,
    pub rs_count: usize,
    pub u_count: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Materializes `PS` as the union of the point-SUS answers over every
/// position, decomposed per the left/mus/right classification.
pub fn enumerate_point_sus(mus: &MusList, n: usize) -> PointSusSet {
    assert_eq!(mus.n(), n, "MUS list was computed for a different length");
    let mut ps: Vec<Interval> = Vec::with_capacity(n);
    for p in 1..=n {
        let ans = point_sus(mus, p).expect("position within range");
        ps.extend(ans.into_sus_list());
    }
    ps.sort_unstable();
    ps.dedup();
    let (mut ls, mut ms, mut rs) = (Vec::new(), Vec::new(), Vec::new());
    for &iv in &ps {
        if mus.contains(iv) {
            ms.push(iv);
        } else if is_left_extension(mus, iv) {
            ls.push(iv);
        } else if is_right_extension(mus, iv) {
            rs.push(iv);
        } else {
            unreachable!("point SUS {iv} is not a MUS cover");
        }
    }
    PointSusSet { n, ps, ls, ms, rs }
}

/// `[x, y]` extends some MUS `[i, y]` with `x < i <= y` to the left.
fn is_left_extension(mus: &MusList, iv: Interval) -> bool {
    mus.mus_with_end(iv.end())
        .is_some_and(|m| m.begin() > iv.begin())
}

/// `[x, y]` extends some MUS `[x, j]` with `x <= j < y` to the right.
fn is_right_extension(mus: &MusList, iv: Interval) -> bool {
    mus.mus_with_begin(iv.begin())
        .is_some_and(|m| m.end() < iv.end())
}

/// Builds the charging map for a decomposed point-SUS set.
pub fn build_charging(ps: &PointSusSet, mus: &MusList) -> ChargingMap {
    debug_assert_eq!(ps.n(), mus.n());
    let n = ps.n();
    let mut assignments: Vec<(Interval, usize)> = Vec::with_capacity(ps.len());
    let mut finv: Vec<Vec<Interval>> = vec![Vec::new(); n + 1];
    for &iv in ps.ls().iter().chain(ps.ms()) {
        assignments.push((iv, iv.begin()));
        finv[iv.begin()].push(iv);
    }
    for &iv in ps.rs() {
        assignments.push((iv, iv.end()));
        finv[iv.end()].push(iv);
    }
    assignments.sort_unstable();
    for v in &mut finv {
        v.sort_unstable();
    }
    let big_u = (1..=n).filter(|&u| finv[u].len() == 2).collect();
    ChargingMap {
        n,
        assignments,
        finv,
        big_u,
    }
}

/// Verifies the two-charge structure at every doubly charged position `u`:
/// the two intervals must be a right extension `[x1, u]` with `x1 < u` and a
/// left extension or MUS `[u, y2]`, with `x1` the begin of some MUS and `y2`
/// the end of some MUS.
pub fn check_finv2_structure(charging: &ChargingMap, mus: &MusList) -> bool {
    charging
        .big_u()
        .iter()
        .all(|&u| finv2_structure_holds(charging, mus, u))
}

pub(crate) fn finv2_structure_holds(charging: &ChargingMap, mus: &MusList, u: usize) -> bool {
    let pair = charging.finv(u);
    if pair.len() != 2 {
        return false;
    }
    // finv is sorted, so the right extension [x1, u] with x1 < u comes first
    let (a, b) = (pair[0], pair[1]);
    a.end() == u
        && a.begin() < u
        && is_right_extension(mus, a)
        && b.begin() == u
        && (mus.contains(b) || is_left_extension(mus, b))
        && mus.mus_with_begin(a.begin()).is_some()
        && mus.mus_with_end(b.end()).is_some()
}

/// Materializes the set `IS` of non-trivial interval SUSs.
///
/// An answer is trivial only when it equals a multi-position query verbatim,
/// so `IS` is the union of every point-query answer and the answers to every
/// repeating query of length at least 2. Queries that are themselves unique
/// answer only themselves and contribute nothing new.
pub fn enumerate_interval_sus(mus: &MusList, n: usize) -> Vec<Interval> {
    assert_eq!(mus.n(), n, "MUS list was computed for a different length");
    let mut set: BTreeSet<Interval> = BTreeSet::new();
    for s in 1..=n {
        let ans = point_sus(mus, s).expect("position within range");
        set.extend(ans.into_sus_list());
        // [s, t] is unique iff it contains a MUS, and the first MUS beginning
        // at or after s has the smallest end among those; below that end the
        // query repeats.
        let i = mus.count_begins_lt(s);
        let unique_from = if i < mus.len() {
            mus.get(i).end()
        } else {
            n + 1
        };
        for t in (s + 1)..unique_from.min(n + 1) {
            let ans = interval_sus(mus, Interval::new(s, t)).expect("interval within range");
            set.extend(ans.into_sus_list());
        }
    }
    set.into_iter().collect()
}

/// Runs every bound and structural check for one text and records the
/// operands of each. Builds the full index, MUS list, both enumerations and
/// the charging map, so it is meant for desk-scale inputs.
pub fn verify_bounds(text: &Text) -> BoundReport {
    let n = text.len();
    let index = SuffixIndex::build(text);
    let mus = compute_mus(&index);
    let ps = enumerate_point_sus(&mus, n);
    let is_set = enumerate_interval_sus(&mus, n);
    let charging = build_charging(&ps, &mus);
    bound_report(&mus, &ps, &is_set, &charging)
}

/// Same checks as [`verify_bounds`], for callers that already hold the
/// enumerated pieces.
pub fn bound_report(
    mus: &MusList,
    ps: &PointSusSet,
    is_set: &[Interval],
    charging: &ChargingMap,
) -> BoundReport {
    let n = mus.n();
    let m = mus.len();
    let (ni, mi) = (n as i64, m as i64);
    let ps_count = ps.len() as i64;
    let is_count = is_set.len() as i64;
    let mut checks = Vec::new();
    fn le(checks: &mut Vec<BoundCheck>, name: &'static str, lhs: i64, rhs: i64) {
        checks.push(BoundCheck {
            name,
            lhs,
            rhs,
            pass: lhs <= rhs,
        });
    }

    le(&mut checks, "ps_le_2n_minus_m", ps_count, 2 * ni - mi);
    le(&mut checks, "ps_le_n_plus_m_minus_1", ps_count, ni + mi - 1);
    le(
        &mut checks,
        "ps_le_half_3n_minus_1",
        ps_count,
        (3 * ni - 1) / 2,
    );
    le(&mut checks, "is_le_2n_minus_m", is_count, 2 * ni - mi);
    le(&mut checks, "m_ge_1", 1, mi);
    le(&mut checks, "m_le_n", mi, ni);
    le(
        &mut checks,
        "mus_non_nesting",
        if check_mus_invariants(mus, n) { 0 } else { 1 },
        0,
    );
    le(
        &mut checks,
        "ls_le_n_minus_m",
        ps.ls().len() as i64,
        ni - mi,
    );
    le(
        &mut checks,
        "rs_le_n_minus_m",
        ps.rs().len() as i64,
        ni - mi,
    );
    le(&mut checks, "ms_le_m", ps.ms().len() as i64, mi);

    let max_finv = (1..=n).map(|u| charging.finv(u).len()).max().unwrap_or(0);
    le(&mut checks, "finv_le_2", max_finv as i64, 2);

    // at most one charge at or before the first MUS begin and strictly after
    // the last MUS begin
    let b1 = mus.get(0).begin();
    let bm = mus.get(m - 1).begin();
    let boundary_max = (1..=n)
        .filter(|&u| u <= b1 || u > bm)
        .map(|u| charging.finv(u).len())
        .max()
        .unwrap_or(0);
    le(&mut checks, "finv_boundary_le_1", boundary_max as i64, 1);

    le(
        &mut checks,
        "u_le_m_minus_1",
        charging.big_u().len() as i64,
        mi - 1,
    );

    checks.push(BoundCheck {
        name: "charge_total_eq_ps",
        lhs: charging.total_charges() as i64,
        rhs: ps_count,
        pass: charging.total_charges() as i64 == ps_count,
    });

    let finv2_violations = charging
        .big_u()
        .iter()
        .filter(|&&u| !finv2_structure_holds(charging, mus, u))
        .count();
    le(
        &mut checks,
        "finv_pair_structure",
        finv2_violations as i64,
        0,
    );

    le(
        &mut checks,
        "decomposition_partition",
        decomposition_violations(ps, mus) as i64,
        0,
    );

    BoundReport {
        n,
        m,
        ps_count: ps.len(),
        is_count: is_set.len(),
        ls_count: ps.ls().len(),
        ms_count: ps.ms().len(),
        rs_count: ps.rs().len(),
        u_count: charging.big_u().len(),
        checks,
    }
}

/// Counts elements breaking the partition property: the three parts must be
/// pairwise disjoint, union to `ps`, and `ms` must equal `ps ∩ M`.
fn decomposition_violations(ps: &PointSusSet, mus: &MusList) -> usize {
    let mut bad = 0;
    let mut union: Vec<Interval> = ps
        .ls()
        .iter()
        .chain(ps.ms())
        .chain(ps.rs())
        .copied()
        .collect();
    union.sort_unstable();
    let before = union.len();
    union.dedup();
    bad += before - union.len(); // any duplicate means overlap
    if union != ps.ps() {
        bad += 1;
    }
    let ms_expected: Vec<Interval> = ps
        .ps()
        .iter()
        .copied()
        .filter(|&iv| mus.contains(iv))
        .collect();
    if ms_expected != ps.ms() {
        bad += 1;
    }
    bad
}
