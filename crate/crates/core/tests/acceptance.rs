#![allow(clippy::int_plus_one)] // bounds are asserted in their stated forms

//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them on success).
//!
//! Criteria:
//! 1. golden MUS/SUS sets of the 11-symbol reference string
//! 2. golden decomposition, charging values, inverse images and U
//! 3. point-bound tightness of the separator family for k = 3..=100
//! 4. fixed-alphabet family |PS| = n + sigma - 2 over the full (n, sigma) grid
//! 5. interval family: |IS| = 4x + 3, 3 MUSs, and the epsilon gap bounds
//! 6. exhaustive sweep (n <= 12 sigma <= 3, n <= 14 sigma = 2): zero
//!    violations of any bound or structural property
//! 7. oracle equivalence on the exhaustive domain and 1000 seeded random
//!    strings
//! 8. scale smoke test at n = 10^6

use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unisub::enumeration::{enumerate_interval_sus, enumerate_point_sus};
use unisub::extremal::{gen_interval_family, gen_point_tight, gen_sigma_family, Eps};
use unisub::mus::compute_mus;
use unisub::oracle::{check_random, sweep, SweepResult, DEFAULT_SWEEP_BUDGET};
use unisub::query::point_sus;
use unisub::text::{Interval, Text};
use unisub::{build_charging, SuffixIndex};

fn report(name: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("criterion {name}: PASS"),
        Err(e) => println!("criterion {name}: FAIL — {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {name} failed: {e}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ivs(pairs: &[(usize, usize)]) -> Vec<Interval> {
    pairs.iter().map(|&(b, e)| Interval::new(b, e)).collect()
}

/// The two exhaustive sweeps backing criteria 6 and 7, run once.
fn exhaustive_sweeps() -> &'static (Vec<SweepResult>, Vec<SweepResult>) {
    static SWEEPS: OnceLock<(Vec<SweepResult>, Vec<SweepResult>)> = OnceLock::new();
    SWEEPS.get_or_init(|| {
        let ternary = sweep(12, 3, DEFAULT_SWEEP_BUDGET).expect("within budget");
        let binary = sweep(14, 2, DEFAULT_SWEEP_BUDGET).expect("within budget");
        (ternary, binary)
    })
}

#[test]
fn criterion_1_golden_mus_and_sus() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let text: Text = "aabbaababaa".parse().unwrap();
        let mus = compute_mus(&SuffixIndex::build(&text));
        let expected_mus = ivs(&[(3, 4), (4, 7), (5, 8), (7, 9), (8, 11)]);
        ensure(mus.items() == expected_mus, || {
            format!("MUS set {:?} != {:?}", mus.items(), expected_mus)
        })?;
        let answer = point_sus(&mus, 6).unwrap();
        let expected_sus = ivs(&[(3, 6), (4, 7), (5, 8), (6, 9)]);
        ensure(answer.sus_list() == expected_sus, || {
            format!("SUS(6) {:?} != {:?}", answer.sus_list(), expected_sus)
        })?;
        ensure(start.elapsed().as_secs() < 1, || "took >= 1 s".to_string())?;
        Ok(())
    };
    report("1 (golden MUS/SUS sets)", run());
}

#[test]
fn criterion_2_golden_decomposition_and_charging() {
    let run = || -> Result<(), String> {
        let text: Text = "aabbaababaa".parse().unwrap();
        let mus = compute_mus(&SuffixIndex::build(&text));
        let ps = enumerate_point_sus(&mus, 11);
        ensure(ps.ls() == ivs(&[(1, 4), (2, 4), (6, 9)]), || {
            format!("LS {:?}", ps.ls())
        })?;
        ensure(
            ps.ms() == ivs(&[(3, 4), (4, 7), (5, 8), (7, 9), (8, 11)]),
            || format!("MS {:?}", ps.ms()),
        )?;
        ensure(ps.rs() == ivs(&[(3, 5), (3, 6), (7, 10)]), || {
            format!("RS {:?}", ps.rs())
        })?;

        let charging = build_charging(&ps, &mus);
        let expected_f: &[((usize, usize), usize)] = &[
            ((3, 5), 5),
            ((3, 6), 6),
            ((7, 10), 10),
            ((3, 4), 3),
            ((4, 7), 4),
            ((5, 8), 5),
            ((7, 9), 7),
            ((8, 11), 8),
            ((1, 4), 1),
            ((2, 4), 2),
            ((6, 9), 6),
        ];
        ensure(charging.assignments().len() == 11, || {
            format!("expected 11 charges, got {}", charging.assignments().len())
        })?;
        for &((b, e), u) in expected_f {
            let iv = Interval::new(b, e);
            ensure(charging.charge_of(iv) == Some(u), || {
                format!("f({iv}) = {:?}, expected {u}", charging.charge_of(iv))
            })?;
        }

        let expected_finv: &[(usize, &[(usize, usize)])] = &[
            (1, &[(1, 4)]),
            (2, &[(2, 4)]),
            (3, &[(3, 4)]),
            (4, &[(4, 7)]),
            (5, &[(3, 5), (5, 8)]),
            (6, &[(3, 6), (6, 9)]),
            (7, &[(7, 9)]),
            (8, &[(8, 11)]),
            (9, &[]),
            (10, &[(7, 10)]),
            (11, &[]),
        ];
        for &(u, expect) in expected_finv {
            ensure(charging.finv(u) == ivs(expect), || {
                format!("finv({u}) = {:?}, expected {:?}", charging.finv(u), expect)
            })?;
        }
        ensure(charging.big_u() == [5, 6], || {
            format!("U = {:?}", charging.big_u())
        })?;
        Ok(())
    };
    report("2 (golden decomposition/charging)", run());
}

#[test]
fn criterion_3_point_bound_tightness() {
    let run = || -> Result<(), String> {
        for k in 3..=100usize {
            let spec = gen_point_tight(k).map_err(|e| e.to_string())?;
            let n = spec.n();
            ensure(n == 2 * k - 1, || format!("k={k}: n={n}"))?;
            let mus = compute_mus(&SuffixIndex::build(&spec.text));
            ensure(Some(mus.len()) == spec.predicted_mus_count, || {
                format!(
                    "k={k}: {} MUSs, predicted {:?}",
                    mus.len(),
                    spec.predicted_mus_count
                )
            })?;
            let measured = enumerate_point_sus(&mus, n).len();
            ensure(
                measured == (3 * n - 1) / 2 && measured == spec.predicted_count,
                || format!("k={k}: measured {measured}, expected {}", (3 * n - 1) / 2),
            )?;
        }
        Ok(())
    };
    report("3 (point-bound tightness, k = 3..=100)", run());
}

#[test]
fn criterion_4_sigma_family_grid() {
    let run = || -> Result<(), String> {
        let mut cases = 0usize;
        for n in 2..=200usize {
            for sigma in 2..=((n + 3) / 2) {
                let spec = match gen_sigma_family(n, sigma) {
                    Ok(spec) => spec,
                    // the lone point in range where the separator cannot
                    // repeat; n + sigma - 2 = 4 exceeds the 2n - m = 3 cap
                    // there, so no string attains it
                    Err(_) if n == 3 && sigma == 3 => continue,
                    Err(e) => return Err(e.to_string()),
                };
                let mus = compute_mus(&SuffixIndex::build(&spec.text));
                let measured = enumerate_point_sus(&mus, n).len();
                ensure(
                    measured == n + sigma - 2 && measured == spec.predicted_count,
                    || {
                        format!(
                            "n={n} sigma={sigma}: measured {measured}, expected {}",
                            n + sigma - 2
                        )
                    },
                )?;
                cases += 1;
            }
        }
        ensure(cases > 9000, || format!("grid unexpectedly small: {cases}"))?;
        Ok(())
    };
    report("4 (fixed-alphabet family grid, n <= 200)", run());
}

#[test]
fn criterion_5_interval_family() {
    let run = || -> Result<(), String> {
        let two = Eps::from_integer(2);
        let five = Eps::from_integer(5);
        for (num, den) in [(3i64, 1u64), (1, 1), (1, 2), (1, 10), (3, 100)] {
            let eps = Eps::new(num, den as i64);
            let spec = gen_interval_family(eps).map_err(|e| e.to_string())?;
            let n = spec.n();
            let x = match spec.family {
                unisub::Family::IntervalFamily { x, .. } => x,
                _ => unreachable!(),
            };
            let mus = compute_mus(&SuffixIndex::build(&spec.text));
            ensure(mus.len() == 3, || format!("eps={eps}: {} MUSs", mus.len()))?;
            let measured = enumerate_interval_sus(&mus, n).len();
            ensure(
                measured == 4 * x + 3 && measured == spec.predicted_count,
                || {
                    format!(
                        "eps={eps}: measured |IS| {measured}, expected {}",
                        4 * x + 3
                    )
                },
            )?;
            // |IS| > (2 - eps) n, exactly in rationals
            let n_r = Eps::from_integer(n as i64);
            ensure(
                Eps::from_integer(measured as i64) > (two - eps) * n_r,
                || format!("eps={eps}: |IS| {measured} not above (2-eps)n"),
            )?;
            // (2n - 3) - (2 - eps) n = eps n - 3 <= 5 eps
            let gap = Eps::from_integer(2 * n as i64 - 3) - (two - eps) * n_r;
            ensure(Some(gap) == spec.gap_bound, || {
                format!("eps={eps}: gap {gap}")
            })?;
            ensure(gap <= five * eps, || {
                format!("eps={eps}: gap {gap} > 5 eps")
            })?;
        }
        Ok(())
    };
    report(
        "5 (interval family, eps in {3, 1, 1/2, 1/10, 3/100})",
        run(),
    );
}

#[test]
fn criterion_6_exhaustive_bound_sweep() {
    let run = || -> Result<(), String> {
        let (ternary, binary) = exhaustive_sweeps();
        for r in ternary.iter().chain(binary) {
            ensure(r.violations.is_empty(), || {
                format!(
                    "n={} sigma={}: {} violations, first: {}",
                    r.n,
                    r.sigma,
                    r.violations.len(),
                    r.violations[0]
                )
            })?;
        }
        // sanity: domain sizes are what exhaustiveness requires
        let ternary_total: u64 = ternary.iter().map(|r| r.strings).sum();
        let binary_total: u64 = binary.iter().map(|r| r.strings).sum();
        ensure(ternary.len() == 12 && binary.len() == 14, || {
            "missing lengths".into()
        })?;
        ensure(ternary_total == 132_866 && binary_total == 16_383, || {
            format!("swept {ternary_total} ternary / {binary_total} binary strings")
        })?;
        Ok(())
    };
    report(
        "6 (exhaustive sweep n<=12 sigma<=3 and n<=14 sigma=2)",
        run(),
    );
}

#[test]
fn criterion_7_oracle_equivalence() {
    let run = || -> Result<(), String> {
        // exhaustive half: the sweep cross-checks every fast path against the
        // oracle on every string it visits
        let (ternary, binary) = exhaustive_sweeps();
        for r in ternary.iter().chain(binary) {
            ensure(r.violations.is_empty(), || {
                format!("n={} sigma={}: {}", r.n, r.sigma, r.violations[0])
            })?;
        }
        // randomized half: 1000 seeded strings, n <= 200, sigma cycling
        let violations = check_random(42, 1000, 200, &[2, 3, 4, 26]);
        ensure(violations.is_empty(), || {
            format!("{} violations, first: {}", violations.len(), violations[0])
        })?;
        Ok(())
    };
    report(
        "7 (oracle equivalence, exhaustive + 1000 random strings)",
        run(),
    );
}

#[test]
fn criterion_8_scale_smoke_test() {
    let run = || -> Result<(), String> {
        let n = 1_000_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(1_000_003);
        let bytes: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..4u8)).collect();
        let text = Text::new(bytes).unwrap();

        let start = Instant::now();
        let index = SuffixIndex::build(&text);
        let mus = compute_mus(&index);
        let ps = enumerate_point_sus(&mus, n);
        let elapsed = start.elapsed();

        let (ps_count, m) = (ps.len() as i64, mus.len() as i64);
        let ni = n as i64;
        ensure(ps_count <= 2 * ni - m, || format!("|PS| {ps_count} > 2n-m"))?;
        ensure(ps_count <= ni + m - 1, || {
            format!("|PS| {ps_count} > n+m-1")
        })?;
        ensure(2 * ps_count <= 3 * ni - 1, || {
            format!("|PS| {ps_count} > (3n-1)/2")
        })?;
        ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
        println!("  scale: n=10^6 built+mus+ps in {elapsed:?} (m={m}, |PS|={ps_count})");
        Ok(())
    };
    report("8 (scale smoke test, n = 10^6 within budget)", run());
}
