//! Command-line front end: render the reference tables, split frames,
//! evaluate and compare boundary expressions, run the verification
//! battery, and demo the search/sort/chop/cross algorithms.
//!
//! Exit codes: 0 on success, 1 when a verification or equivalence run
//! finds failures, 2 for usage and domain errors.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use render::OutputFormat;
use splitkit::algorithms::{binary_search, chop_points, word_crosses_center, SearchVariant};
use splitkit::intdiv::{
    check_expr_equiv, check_identity, check_range_equiv, eval_expr, eval_range, parse_expr,
    parse_range, Bindings, DivMode, EquivalenceReport, Identity,
};
use splitkit::oracle::{
    verify_partitions, verify_searches, verify_sorts, verify_word_cross, Failure,
    VerificationReport,
};
use splitkit::splitter::{split_based, split_be, split_n, SplitPolicy};
use splitkit::tables::{table_by_id, TableModel};
use splitkit::{Error, Result};

#[derive(Parser)]
#[command(
    name = "splitkit",
    version,
    about = "Half-open range algebra, array splitting policies, and their verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Render a reference table: t1-t4 (landmark positions), final
    /// (selected ranges per policy) or loops (C for-loop forms)
    Tabulate {
        /// Table id: t1, t2, t3, t4, final or loops
        which: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Split a frame under a policy; give exactly one coordinate form:
    /// --n, or --b with --n, or --b with --e
    Split {
        /// natural, leftplus, rightplus, cutleft or cutright
        #[arg(long)]
        policy: String,
        /// Frame length
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        /// Base (first index)
        #[arg(long, allow_negative_numbers = true)]
        b: Option<i64>,
        /// Last index (inclusive)
        #[arg(long, allow_negative_numbers = true)]
        e: Option<i64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the verification battery: partitions vs the brute-force
    /// oracle, the division identities, the equivalence fixtures, and
    /// the search/sort/word-cross agreement suites
    Verify {
        /// Largest frame size for the partition sweep
        #[arg(long, default_value_t = 10_000)]
        max_n: i64,
        /// Comma-separated policy subset (default: all five)
        #[arg(long)]
        policies: Option<String>,
        /// Division mode for the equivalence fixtures: floor or trunc
        #[arg(long, default_value = "floor")]
        div_mode: String,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random cases per randomized suite
        #[arg(long, default_value_t = 2000)]
        random_cases: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Evaluate or compare boundary expressions
    Expr {
        #[command(subcommand)]
        sub: ExprCommand,
    },
    /// Binary-search a sorted array
    Search {
        /// Comma-separated integers, sorted non-decreasing
        #[arg(long, allow_hyphen_values = true)]
        array: String,
        #[arg(long, allow_negative_numbers = true)]
        target: i64,
        /// rightplus, cutout or compact
        #[arg(long, default_value = "rightplus")]
        variant: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List the chop points of an array (indices with everything smaller
    /// to the left and everything larger to the right)
    Chop {
        #[arg(long, allow_hyphen_values = true)]
        array: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Test whether a word crosses the center of a text
    Cross {
        #[arg(long)]
        text: String,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum ExprCommand {
    /// Evaluate an expression or range expression at a frame size
    Eval {
        /// Expression (`(n+1)/2`) or range expression (`0 <= i < n/2`)
        #[arg(long)]
        expr: String,
        /// Frame length n (may be negative here; the divergence of the
        /// two division modes below zero is the point)
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Base index b
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        b: i64,
        /// floor or trunc; both are reported when omitted
        #[arg(long)]
        div_mode: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Decide whether two expressions (or two range expressions) agree
    /// over a sweep of frame sizes
    Equiv {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n_lo: i64,
        #[arg(long, default_value_t = 100, allow_negative_numbers = true)]
        n_hi: i64,
        /// floor or trunc
        #[arg(long, default_value = "floor")]
        div_mode: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Sweep one of the built-in identities: halves, connecting or kway
    Identity {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n_lo: i64,
        /// Defaults to 1000000 (halves, connecting) or 5000 (kway)
        #[arg(long, allow_negative_numbers = true)]
        n_hi: Option<i64>,
        #[arg(long, default_value_t = 1)]
        k_lo: i64,
        #[arg(long, default_value_t = 64)]
        k_hi: i64,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Tabulate { which, format } => {
            match table_by_id(&which)? {
                TableModel::Landmark(t) => {
                    print!("{}", render::landmark_table(&which, &t, format.format));
                }
                TableModel::Policy(t) => {
                    print!("{}", render::policy_table(&which, &t, format.format));
                }
            }
            Ok(0)
        }
        Command::Split { policy, n, b, e, format } => {
            let policy: SplitPolicy = policy.parse()?;
            let partition = match (n, b, e) {
                (Some(n), None, None) => split_n(n, policy)?,
                (Some(n), Some(b), None) => split_based(b, n, policy)?,
                (None, Some(b), Some(e)) => split_be(b, e, policy)?,
                _ => {
                    return Err(Error::Domain(
                        "supply exactly one coordinate form: --n, or --b with --n, or --b with --e"
                            .into(),
                    ))
                }
            };
            print!("{}", render::partition(&partition, format.format));
            Ok(0)
        }
        Command::Verify { max_n, policies, div_mode, seed, random_cases, format } => {
            let policies = parse_policies(policies.as_deref())?;
            let mode: DivMode = parse_div_mode(&div_mode)?;
            if max_n < 0 {
                return Err(Error::Domain(format!("--max-n must be >= 0, got {max_n}")));
            }
            eprintln!("seed: {seed}");
            let stages = run_verify_battery(max_n, &policies, mode, seed, random_cases);
            print!("{}", render::verification_stages(&stages, format.format));
            let failed: u64 = stages.iter().map(|(_, r)| r.total_failures).sum();
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Command::Expr { sub } => run_expr(sub),
        Command::Search { array, target, variant, format } => {
            let a = parse_array(&array)?;
            let variant: SearchVariant = variant.parse()?;
            let found = binary_search(&a, target, variant);
            match format.format {
                OutputFormat::Table => match found {
                    Some(i) => println!("found at {i}"),
                    None => println!("-1"),
                },
                OutputFormat::Tsv => {
                    println!("index");
                    println!("{}", found.map(|i| i as i64).unwrap_or(-1));
                }
                OutputFormat::Json => println!(
                    "{}",
                    json!({
                        "target": target,
                        "variant": variant.name(),
                        "index": found,
                    })
                ),
            }
            Ok(0)
        }
        Command::Chop { array, format } => {
            let a = parse_array(&array)?;
            let points = chop_points(&a);
            let values: Vec<i64> = points.iter().map(|&j| a[j]).collect();
            match format.format {
                OutputFormat::Table => {
                    let csv: Vec<String> = points.iter().map(|j| j.to_string()).collect();
                    println!("{}", csv.join(","));
                }
                OutputFormat::Tsv => {
                    println!("index\tvalue");
                    for (&j, &v) in points.iter().zip(&values) {
                        println!("{j}\t{v}");
                    }
                }
                OutputFormat::Json => {
                    println!("{}", json!({ "indices": points, "values": values }));
                }
            }
            Ok(0)
        }
        Command::Cross { text, format } => {
            let crosses = word_crosses_center(&text);
            match format.format {
                OutputFormat::Table => println!("{crosses}"),
                OutputFormat::Tsv => println!("crosses\n{crosses}"),
                OutputFormat::Json => println!("{}", json!({ "text": text, "crosses": crosses })),
            }
            Ok(0)
        }
    }
}

fn run_expr(sub: ExprCommand) -> Result<u8> {
    match sub {
        ExprCommand::Eval { expr, n, b, div_mode, format } => {
            let modes: Vec<DivMode> = match div_mode.as_deref() {
                Some(m) => vec![parse_div_mode(m)?],
                None => vec![DivMode::Floor, DivMode::Trunc],
            };
            let env = Bindings::with_base(n, b);
            // Range expressions contain the index variable, so trying the
            // range grammar first is unambiguous.
            if let Ok(re) = parse_range(&expr) {
                for mode in modes {
                    let r = eval_range(&re, &env, mode)?;
                    match format.format {
                        OutputFormat::Table => println!("{mode}: {r} length {}", r.len()),
                        OutputFormat::Tsv => println!("{mode}\t{}\t{}\t{}", r.lo(), r.hi(), r.len()),
                        OutputFormat::Json => println!(
                            "{}",
                            json!({
                                "expr": expr, "n": n, "b": b, "mode": mode.to_string(),
                                "lo": r.lo(), "hi": r.hi(), "length": r.len(),
                            })
                        ),
                    }
                }
            } else {
                let e = parse_expr(&expr)?;
                for mode in modes {
                    let v = eval_expr(&e, &env, mode)?;
                    match format.format {
                        OutputFormat::Table => println!("{mode}: {v}"),
                        OutputFormat::Tsv => println!("{mode}\t{v}"),
                        OutputFormat::Json => println!(
                            "{}",
                            json!({
                                "expr": expr, "n": n, "b": b,
                                "mode": mode.to_string(), "value": v,
                            })
                        ),
                    }
                }
            }
            Ok(0)
        }
        ExprCommand::Equiv { lhs, rhs, n_lo, n_hi, div_mode, format } => {
            let mode = parse_div_mode(&div_mode)?;
            if n_lo > n_hi {
                return Err(Error::Domain(format!("empty sweep domain [{n_lo}, {n_hi}]")));
            }
            let report = if let Ok(left) = parse_range(&lhs) {
                let right = parse_range(&rhs)?;
                check_range_equiv(&left, &right, n_lo..=n_hi, mode)
            } else {
                let left = parse_expr(&lhs)?;
                let right = parse_expr(&rhs)?;
                check_expr_equiv(&left, &right, n_lo..=n_hi, mode)
            };
            print_equivalence(&report, format.format);
            Ok(if report.holds { 0 } else { 1 })
        }
        ExprCommand::Identity { name, n_lo, n_hi, k_lo, k_hi, format } => {
            let which: Identity = name.parse()?;
            let n_hi = n_hi.unwrap_or(match which {
                Identity::KwaySum => 5000,
                _ => 1_000_000,
            });
            if n_lo > n_hi || k_lo > k_hi {
                return Err(Error::Domain("empty sweep domain".into()));
            }
            let report = check_identity(which, n_lo..=n_hi, Some(k_lo..=k_hi));
            print_equivalence(&report, format.format);
            Ok(if report.holds { 0 } else { 1 })
        }
    }
}

fn print_equivalence(report: &EquivalenceReport, format: OutputFormat) {
    match format {
        OutputFormat::Table => {
            if report.holds {
                println!("holds: {} cases checked", report.checked);
            } else {
                println!(
                    "does not hold: {} of {} cases failed",
                    report.total_failures, report.checked
                );
                for cx in &report.counterexamples {
                    println!("  {cx}");
                }
                if report.total_failures as usize > report.counterexamples.len() {
                    println!(
                        "  ... and {} more",
                        report.total_failures as usize - report.counterexamples.len()
                    );
                }
            }
        }
        OutputFormat::Tsv => {
            println!("holds\tchecked\tfailures");
            println!("{}\t{}\t{}", report.holds, report.checked, report.total_failures);
        }
        OutputFormat::Json => {
            for cx in &report.counterexamples {
                println!(
                    "{}",
                    json!({
                        "record": "counterexample",
                        "n": cx.n,
                        "k": cx.k,
                        "lhs": cx.lhs.to_string(),
                        "rhs": cx.rhs.to_string(),
                    })
                );
            }
            println!(
                "{}",
                json!({
                    "record": "summary",
                    "holds": report.holds,
                    "checked": report.checked,
                    "failures": report.total_failures,
                })
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Verify battery
// ---------------------------------------------------------------------------

fn run_verify_battery(
    max_n: i64,
    policies: &[SplitPolicy],
    mode: DivMode,
    seed: u64,
    random_cases: u64,
) -> Vec<(String, VerificationReport)> {
    let mut stages = Vec::new();
    stages.push(("partitions".to_string(), verify_partitions(max_n, policies)));
    stages.push((
        "identity halves".to_string(),
        timed_equivalence(|| check_identity(Identity::Halves, 0..=1_000_000, None)),
    ));
    stages.push((
        "identity connecting".to_string(),
        timed_equivalence(|| check_identity(Identity::Connecting, 1..=1_000_000, None)),
    ));
    stages.push((
        "identity kway".to_string(),
        timed_equivalence(|| check_identity(Identity::KwaySum, 0..=5000, Some(1..=64))),
    ));
    stages.push((format!("equivalence fixtures ({mode})"), fixture_stage(mode)));
    stages.push((
        "searches".to_string(),
        verify_searches(10, -1..=3, random_cases, 64, seed),
    ));
    stages.push(("sorts".to_string(), verify_sorts(8, random_cases, 256, seed)));
    stages.push(("word cross".to_string(), verify_word_cross(12)));
    stages
}

fn timed_equivalence(make: impl FnOnce() -> EquivalenceReport) -> VerificationReport {
    let started = std::time::Instant::now();
    let report = make();
    VerificationReport {
        checked: report.checked,
        total_failures: report.total_failures,
        failures: report
            .counterexamples
            .into_iter()
            .map(|cx| Failure {
                case: match cx.k {
                    Some(k) => format!("n={} k={k}", cx.n),
                    None => format!("n={}", cx.n),
                },
                expected: cx.rhs.to_string(),
                actual: cx.lhs.to_string(),
            })
            .collect(),
        elapsed: started.elapsed(),
    }
}

/// The two equivalence fixtures with their known divergence points. Under
/// floor division both hold everywhere; under truncation the first
/// diverges exactly at `n = 1` and the second exactly at `n = 0`. The
/// stage passes when the checker reports exactly the expected set.
fn fixture_stage(mode: DivMode) -> VerificationReport {
    let started = std::time::Instant::now();
    let fixtures: [(&str, &str, &[i64]); 2] = [
        ("(n-2)/2", "n/2-1", &[1]),
        ("(n-1)/2+1", "(n+1)/2", &[0]),
    ];
    let mut out = VerificationReport {
        checked: 0,
        total_failures: 0,
        failures: Vec::new(),
        elapsed: std::time::Duration::ZERO,
    };
    for (lhs, rhs, trunc_divergence) in fixtures {
        let report = check_expr_equiv(
            &parse_expr(lhs).expect("fixture parses"),
            &parse_expr(rhs).expect("fixture parses"),
            0..=100,
            mode,
        );
        out.checked += report.checked;
        let expected: &[i64] = match mode {
            DivMode::Floor => &[],
            DivMode::Trunc => trunc_divergence,
        };
        let actual: Vec<i64> = report.counterexamples.iter().map(|cx| cx.n).collect();
        if report.total_failures != expected.len() as u64 || actual != expected {
            out.total_failures += 1;
            out.failures.push(Failure {
                case: format!("{lhs} vs {rhs} under {mode}"),
                expected: format!("divergence exactly at {expected:?}"),
                actual: format!("divergence at {actual:?}"),
            });
        }
    }
    out.elapsed = started.elapsed();
    out
}

// ---------------------------------------------------------------------------
// Flag parsing helpers
// ---------------------------------------------------------------------------

fn parse_div_mode(s: &str) -> Result<DivMode> {
    match s {
        "floor" => Ok(DivMode::Floor),
        "trunc" => Ok(DivMode::Trunc),
        other => Err(Error::Domain(format!(
            "unknown division mode `{other}` (expected floor or trunc)"
        ))),
    }
}

fn parse_policies(spec: Option<&str>) -> Result<Vec<SplitPolicy>> {
    match spec {
        None => Ok(SplitPolicy::ALL.to_vec()),
        Some(csv) => csv.split(',').map(|item| item.trim().parse()).collect(),
    }
}

fn parse_array(csv: &str) -> Result<Vec<i64>> {
    if csv.trim().is_empty() {
        return Ok(Vec::new());
    }
    csv.split(',')
        .map(|item| {
            item.trim()
                .parse()
                .map_err(|_| Error::Domain(format!("invalid integer `{}` in --array", item.trim())))
        })
        .collect()
}
