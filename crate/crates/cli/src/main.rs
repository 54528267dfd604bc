//! `unisub` — minimal/shortest unique substring toolkit.
//!
//! Subcommands: `mus`, `query`, `enumerate`, `verify`, `generate`. Output is
//! TSV by default and a single JSON document with `--json`. All positions are
//! 1-based inclusive byte positions. Exit codes: 0 success, 1 verification
//! failure, 2 usage or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use unisub::enumeration::{
    build_charging, enumerate_interval_sus, enumerate_point_sus, BoundReport,
};
use unisub::extremal::{gen_interval_family, gen_point_tight, gen_sigma_family, Eps, Family};
use unisub::mus::{compute_mus, MusList};
use unisub::oracle::{check_string, sweep, CheckOptions, SweepResult, DEFAULT_SWEEP_BUDGET};
use unisub::query::{interval_sus, point_sus, SusAnswer};
use unisub::text::{Interval, Text};
use unisub::SuffixIndex;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "unisub",
    version,
    about = "Minimal and shortest unique substrings: queries, enumeration, verification",
    arg_required_else_help = true
)]
struct Cli {
    /// Input text given inline.
    #[arg(long, global = true, conflicts_with = "file", value_name = "TEXT")]
    string: Option<String>,

    /// Input text read from a file (a single trailing newline is stripped).
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Emit one JSON document instead of TSV rows.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for verify sweeps (other commands are single-threaded).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Default seed for randomized verification.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all minimal unique substrings of the input.
    Mus,
    /// Answer one SUS query against the input.
    Query(QueryArgs),
    /// Enumerate the complete point or interval SUS set of the input.
    Enumerate(EnumerateArgs),
    /// Check every bound, and oracle agreement, on one string or a domain.
    Verify(VerifyArgs),
    /// Generate an extremal family string with its predicted counts.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Query position P.
    #[arg(long, value_name = "P", conflicts_with = "interval")]
    point: Option<usize>,
    /// Query interval S:T.
    #[arg(long, value_name = "S:T")]
    interval: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Enumerate all point SUSs (default).
    #[arg(long, conflicts_with = "interval")]
    point: bool,
    /// Enumerate all non-trivial interval SUSs.
    #[arg(long)]
    interval: bool,
    /// Also emit the full sets.
    #[arg(long)]
    decompose: bool,
    /// Also emit the charging table and inverse images (point mode).
    #[arg(long)]
    charging: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Exhaustive sweep over all canonical strings: NMAX SIGMA.
    #[arg(long, num_args = 2, value_names = ["NMAX", "SIGMA"], conflicts_with = "random")]
    exhaustive: Option<Vec<usize>>,
    /// Randomized check: COUNT MAXLEN SIGMA [SEED]; seed falls back to --seed.
    #[arg(long, num_args = 3..=5, value_names = ["COUNT", "MAXLEN", "SIGMA", "SEED"])]
    random: Option<Vec<u64>>,
    /// Canonical-string budget for exhaustive sweeps.
    #[arg(long, default_value_t = DEFAULT_SWEEP_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: FamilyCmd,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// K distinct symbols interleaved with a separator (n = 2K-1).
    PointTight {
        k: usize,
        /// Measure the generated string and compare with the prediction.
        #[arg(long)]
        check: bool,
    },
    /// Exactly SIGMA symbols over length N with a trailing separator run.
    SigmaFamily {
        n: usize,
        sigma: usize,
        #[arg(long)]
        check: bool,
    },
    /// Separator family for rational EPS ("1", "1/2", "3/100", ...).
    IntervalFamily {
        eps: String,
        #[arg(long)]
        check: bool,
    },
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `unisub ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Mus => cmd_mus(cli),
        Command::Query(args) => cmd_query(cli, args),
        Command::Enumerate(args) => cmd_enumerate(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Generate(args) => cmd_generate(cli, args),
    }
}

fn input_text(cli: &Cli) -> Result<Text, String> {
    match (&cli.string, &cli.file) {
        (Some(s), _) => Text::new(s.as_bytes().to_vec()).map_err(|e| e.to_string()),
        (None, Some(path)) => {
            let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Text::from_file_contents(bytes).map_err(|e| e.to_string())
        }
        (None, None) => Err("an input is required: pass --string <TEXT> or --file <PATH>".into()),
    }
}

fn input_echo(cli: &Cli) -> Value {
    match (&cli.string, &cli.file) {
        (Some(s), _) => json!({ "string": s }),
        (None, Some(p)) => json!({ "file": p.display().to_string() }),
        _ => Value::Null,
    }
}

/// Substring rendering for TSV columns: tabs, newlines and backslashes are
/// escaped so every row keeps its column count.
fn tsv_text(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len());
    for chunk in String::from_utf8_lossy(bytes).chars() {
        match chunk {
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\\' => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out
}

fn lossy(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn iv_json(iv: Interval) -> Value {
    json!({ "begin": iv.begin(), "end": iv.end() })
}

fn iv_with_text_json(text: &Text, iv: Interval) -> Value {
    json!({
        "begin": iv.begin(),
        "end": iv.end(),
        "substring": lossy(text.substring(iv).expect("interval within text")),
    })
}

fn set_json(set: &[Interval]) -> Value {
    Value::Array(set.iter().map(|&iv| iv_json(iv)).collect())
}

fn emit_json(doc: Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable")
    );
}

fn parse_interval(spec: &str) -> Result<Interval, String> {
    let (s, t) = spec
        .split_once(':')
        .ok_or_else(|| format!("interval must be S:T, got {spec:?}"))?;
    let s: usize = s
        .trim()
        .parse()
        .map_err(|_| format!("bad interval begin {s:?}"))?;
    let t: usize = t
        .trim()
        .parse()
        .map_err(|_| format!("bad interval end {t:?}"))?;
    if s < 1 || t < s {
        return Err(format!("interval must satisfy 1 <= S <= T, got {s}:{t}"));
    }
    Ok(Interval::new(s, t))
}

fn parse_eps(spec: &str) -> Result<Eps, String> {
    let (num, den) = match spec.split_once('/') {
        Some((p, q)) => (
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad numerator {p:?}"))?,
            q.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad denominator {q:?}"))?,
        ),
        None => (
            spec.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad eps {spec:?}"))?,
            1,
        ),
    };
    if den == 0 {
        return Err("eps denominator must be nonzero".into());
    }
    Ok(Eps::new(num, den))
}

fn build_mus(text: &Text) -> MusList {
    compute_mus(&SuffixIndex::build(text))
}

fn cmd_mus(cli: &Cli) -> Result<u8, String> {
    let text = input_text(cli)?;
    let mus = build_mus(&text);
    if cli.json {
        emit_json(json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": "mus",
            "input": input_echo(cli),
            "n": text.len(),
            "count": mus.len(),
            "mus": mus.iter().map(|iv| iv_with_text_json(&text, iv)).collect::<Vec<_>>(),
        }));
    } else {
        for iv in mus.iter() {
            let sub = text.substring(iv).expect("interval within text");
            println!("{}\t{}\t{}", iv.begin(), iv.end(), tsv_text(sub));
        }
    }
    Ok(0)
}

fn cmd_query(cli: &Cli, args: &QueryArgs) -> Result<u8, String> {
    let text = input_text(cli)?;
    let mus = build_mus(&text);
    let (answer, query_echo): (SusAnswer, Value) = match (&args.point, &args.interval) {
        (Some(p), None) => (
            point_sus(&mus, *p).map_err(|e| e.to_string())?,
            json!({ "type": "point", "position": p }),
        ),
        (None, Some(spec)) => {
            let q = parse_interval(spec)?;
            (
                interval_sus(&mus, q).map_err(|e| e.to_string())?,
                json!({ "type": "interval", "begin": q.begin(), "end": q.end() }),
            )
        }
        _ => return Err("pass exactly one of --point or --interval".into()),
    };
    if cli.json {
        emit_json(json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": "query",
            "input": input_echo(cli),
            "query": query_echo,
            "susLength": answer.sus_length(),
            "count": answer.sus_list().len(),
            "sus": answer
                .sus_list()
                .iter()
                .map(|&iv| iv_with_text_json(&text, iv))
                .collect::<Vec<_>>(),
        }));
    } else {
        println!("susLength\t{}", answer.sus_length());
        for &iv in answer.sus_list() {
            let sub = text.substring(iv).expect("interval within text");
            println!(
                "{}\t{}\t{}\t{}",
                iv.begin(),
                iv.end(),
                iv.len(),
                tsv_text(sub)
            );
        }
    }
    Ok(0)
}

fn cmd_enumerate(cli: &Cli, args: &EnumerateArgs) -> Result<u8, String> {
    let text = input_text(cli)?;
    let n = text.len();
    let mus = build_mus(&text);

    if args.interval {
        let is_set = enumerate_interval_sus(&mus, n);
        if cli.json {
            let mut doc = json!({
                "schemaVersion": SCHEMA_VERSION,
                "command": "enumerate",
                "mode": "interval",
                "input": input_echo(cli),
                "n": n,
                "m": mus.len(),
                "isCount": is_set.len(),
            });
            if args.decompose {
                doc["is"] = set_json(&is_set);
            }
            emit_json(doc);
        } else {
            println!("n\t{n}");
            println!("m\t{}", mus.len());
            println!("isCount\t{}", is_set.len());
            if args.decompose {
                for iv in is_set {
                    println!("IS\t{}\t{}", iv.begin(), iv.end());
                }
            }
        }
        return Ok(0);
    }

    let ps = enumerate_point_sus(&mus, n);
    let charging = build_charging(&ps, &mus);
    if cli.json {
        let mut doc = json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": "enumerate",
            "mode": "point",
            "input": input_echo(cli),
            "n": n,
            "m": mus.len(),
            "psCount": ps.len(),
            "lsCount": ps.ls().len(),
            "msCount": ps.ms().len(),
            "rsCount": ps.rs().len(),
            "uCount": charging.big_u().len(),
        });
        if args.decompose {
            doc["ls"] = set_json(ps.ls());
            doc["ms"] = set_json(ps.ms());
            doc["rs"] = set_json(ps.rs());
            doc["ps"] = set_json(ps.ps());
        }
        if args.charging {
            doc["f"] = Value::Array(
                charging
                    .assignments()
                    .iter()
                    .map(|&(iv, u)| json!({ "begin": iv.begin(), "end": iv.end(), "chargedTo": u }))
                    .collect(),
            );
            doc["finv"] = Value::Array(
                (1..=n)
                    .map(|u| json!({ "position": u, "intervals": set_json(charging.finv(u)) }))
                    .collect(),
            );
            doc["u"] = json!(charging.big_u());
        }
        emit_json(doc);
    } else {
        println!("n\t{n}");
        println!("m\t{}", mus.len());
        println!("psCount\t{}", ps.len());
        println!("lsCount\t{}", ps.ls().len());
        println!("msCount\t{}", ps.ms().len());
        println!("rsCount\t{}", ps.rs().len());
        println!("uCount\t{}", charging.big_u().len());
        if args.decompose {
            for &iv in ps.ls() {
                println!("LS\t{}\t{}", iv.begin(), iv.end());
            }
            for &iv in ps.ms() {
                println!("MS\t{}\t{}", iv.begin(), iv.end());
            }
            for &iv in ps.rs() {
                println!("RS\t{}\t{}", iv.begin(), iv.end());
            }
        }
        if args.charging {
            for &(iv, u) in charging.assignments() {
                println!("f\t{}\t{}\t{u}", iv.begin(), iv.end());
            }
            for u in 1..=n {
                let intervals = charging.finv(u);
                if intervals.is_empty() {
                    println!("finvEmpty\t{u}");
                } else {
                    for iv in intervals {
                        println!("finv\t{u}\t{}\t{}", iv.begin(), iv.end());
                    }
                }
            }
            for u in charging.big_u() {
                println!("U\t{u}");
            }
        }
    }
    Ok(0)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<u8, String> {
    if let Some(params) = &args.exhaustive {
        let (n_max, sigma) = (params[0], params[1]);
        let results = sweep(n_max, sigma, args.budget).map_err(|e| e.to_string())?;
        return Ok(report_sweep(cli, n_max, sigma, &results));
    }
    if let Some(params) = &args.random {
        let count = params[0] as usize;
        let max_len = params[1] as usize;
        let sigma = params[2];
        if !(1..=26).contains(&sigma) {
            return Err(format!("sigma must be in 1..=26, got {sigma}"));
        }
        if max_len == 0 || count == 0 {
            return Err("count and maxLen must be positive".into());
        }
        let seed = params.get(3).copied().unwrap_or(cli.seed);
        let violations = unisub::oracle::check_random(seed, count, max_len, &[sigma as u8]);
        let ok = violations.is_empty();
        if cli.json {
            emit_json(json!({
                "schemaVersion": SCHEMA_VERSION,
                "command": "verify",
                "mode": "random",
                "count": count,
                "maxLen": max_len,
                "sigma": sigma,
                "seed": seed,
                "violations": violations
                    .iter()
                    .map(|v| json!({ "text": v.text, "check": v.check, "detail": v.detail }))
                    .collect::<Vec<_>>(),
                "ok": ok,
            }));
        } else {
            println!("random\t{count}\t{max_len}\t{sigma}\t{seed}");
            for v in &violations {
                println!(
                    "violation\t{}\t{}\t{}",
                    tsv_text(v.text.as_bytes()),
                    v.check,
                    v.detail
                );
            }
            println!("result\t{}", if ok { "ok" } else { "fail" });
        }
        return Ok(if ok { 0 } else { 1 });
    }

    // single-string mode
    let text = input_text(cli)?;
    let n = text.len();
    let report = unisub::verify_bounds(&text);
    // oracle comparison is quadratic; only run it at desk scale
    let oracle_checked = n <= 2000;
    let violations = if oracle_checked {
        let opts = if n <= 300 {
            CheckOptions::exhaustive()
        } else {
            CheckOptions::randomized()
        };
        check_string(&text, opts).violations
    } else {
        Vec::new()
    };
    let ok = report.all_pass() && violations.is_empty();
    let tight = report
        .checks
        .iter()
        .find(|c| c.name == "ps_le_half_3n_minus_1")
        .map(|c| c.lhs == c.rhs)
        .unwrap_or(false);
    if cli.json {
        emit_json(json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": "verify",
            "mode": "string",
            "input": input_echo(cli),
            "n": report.n,
            "m": report.m,
            "psCount": report.ps_count,
            "isCount": report.is_count,
            "lsCount": report.ls_count,
            "msCount": report.ms_count,
            "rsCount": report.rs_count,
            "uCount": report.u_count,
            "checks": checks_json(&report),
            "tight": tight,
            "oracleChecked": oracle_checked,
            "oracleMismatches": violations.len(),
            "ok": ok,
        }));
    } else {
        println!("n\t{}", report.n);
        println!("m\t{}", report.m);
        println!("psCount\t{}", report.ps_count);
        println!("isCount\t{}", report.is_count);
        for c in &report.checks {
            println!(
                "check\t{}\t{}\t{}\t{}",
                c.name,
                c.lhs,
                c.rhs,
                if c.pass { "pass" } else { "FAIL" }
            );
        }
        println!("tight\t{tight}");
        println!(
            "oracle\t{}",
            if !oracle_checked {
                "skipped".to_string()
            } else if violations.is_empty() {
                "ok".to_string()
            } else {
                format!("{} mismatches", violations.len())
            }
        );
        for v in &violations {
            println!(
                "violation\t{}\t{}\t{}",
                tsv_text(v.text.as_bytes()),
                v.check,
                v.detail
            );
        }
        println!("result\t{}", if ok { "ok" } else { "fail" });
    }
    Ok(if ok { 0 } else { 1 })
}

fn checks_json(report: &BoundReport) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "lhs": c.lhs, "rhs": c.rhs, "pass": c.pass }))
            .collect(),
    )
}

fn report_sweep(cli: &Cli, n_max: usize, sigma: usize, results: &[SweepResult]) -> u8 {
    let total_violations: usize = results.iter().map(|r| r.violations.len()).sum();
    let ok = total_violations == 0;
    if cli.json {
        emit_json(json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": "verify",
            "mode": "exhaustive",
            "nMax": n_max,
            "sigma": sigma,
            "results": results
                .iter()
                .map(|r| json!({
                    "n": r.n,
                    "sigma": r.sigma,
                    "strings": r.strings,
                    "maxPs": r.max_ps,
                    "psWitness": r.ps_witness,
                    "maxIs": r.max_is,
                    "isWitness": r.is_witness,
                    "violations": r.violations.len(),
                }))
                .collect::<Vec<_>>(),
            "violations": results
                .iter()
                .flat_map(|r| &r.violations)
                .map(|v| json!({ "text": v.text, "check": v.check, "detail": v.detail }))
                .collect::<Vec<_>>(),
            "ok": ok,
        }));
    } else {
        for r in results {
            println!(
                "sweep\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.sigma,
                r.strings,
                r.max_ps,
                tsv_text(r.ps_witness.as_bytes()),
                r.max_is,
                tsv_text(r.is_witness.as_bytes()),
                r.violations.len()
            );
            for v in &r.violations {
                println!(
                    "violation\t{}\t{}\t{}",
                    tsv_text(v.text.as_bytes()),
                    v.check,
                    v.detail
                );
            }
        }
        println!("result\t{}", if ok { "ok" } else { "fail" });
    }
    if ok {
        0
    } else {
        1
    }
}

fn cmd_generate(cli: &Cli, args: &GenerateArgs) -> Result<u8, String> {
    let (spec, check) = match &args.family {
        FamilyCmd::PointTight { k, check } => {
            (gen_point_tight(*k).map_err(|e| e.to_string())?, *check)
        }
        FamilyCmd::SigmaFamily { n, sigma, check } => (
            gen_sigma_family(*n, *sigma).map_err(|e| e.to_string())?,
            *check,
        ),
        FamilyCmd::IntervalFamily { eps, check } => {
            let eps = parse_eps(eps)?;
            (gen_interval_family(eps).map_err(|e| e.to_string())?, *check)
        }
    };

    let (family_name, params, counts_point_sus) = match &spec.family {
        Family::PointTight { k } => ("point-tight", json!({ "k": k }), true),
        Family::SigmaFamily { n, sigma } => {
            ("sigma-family", json!({ "n": n, "sigma": sigma }), true)
        }
        Family::IntervalFamily { eps, x } => (
            "interval-family",
            json!({ "eps": eps.to_string(), "x": x }),
            false,
        ),
    };

    let measured = if check {
        let mus = build_mus(&spec.text);
        let count = if counts_point_sus {
            enumerate_point_sus(&mus, spec.n()).len()
        } else {
            enumerate_interval_sus(&mus, spec.n()).len()
        };
        Some((count, mus.len()))
    } else {
        None
    };
    let matches = measured.map(|(count, m)| {
        count == spec.predicted_count && spec.predicted_mus_count.map(|pm| pm == m).unwrap_or(true)
    });

    if cli.json {
        let mut doc = json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": "generate",
            "family": family_name,
            "params": params,
            "text": lossy(spec.text.bytes()),
            "n": spec.n(),
            "predictedCount": spec.predicted_count,
        });
        if let Some(pm) = spec.predicted_mus_count {
            doc["predictedMusCount"] = json!(pm);
        }
        if let Some(gap) = spec.gap_bound {
            doc["gapBound"] = json!(gap.to_string());
        }
        if let Some((count, m)) = measured {
            doc["measuredCount"] = json!(count);
            doc["measuredMusCount"] = json!(m);
            doc["match"] = json!(matches.unwrap());
        }
        emit_json(doc);
    } else {
        println!("family\t{family_name}");
        println!("text\t{}", tsv_text(spec.text.bytes()));
        println!("n\t{}", spec.n());
        println!("predictedCount\t{}", spec.predicted_count);
        if let Some(pm) = spec.predicted_mus_count {
            println!("predictedMusCount\t{pm}");
        }
        if let Some(gap) = spec.gap_bound {
            println!("gapBound\t{gap}");
        }
        if let Some((count, m)) = measured {
            println!("measuredCount\t{count}");
            println!("measuredMusCount\t{m}");
            println!("match\t{}", matches.unwrap());
        }
    }
    Ok(match matches {
        Some(false) => 1,
        _ => 0,
    })
}
