//! Brute-force reference definitions and the verification harness that
//! checks the formula-based modules against them.
//!
//! [`oracle_split`] is deliberately primitive: it locates the halves of a
//! frame by walking a pointer in from each end, one element at a time,
//! and never evaluates a division. Agreement between it and the
//! splitter's boundary arithmetic is therefore a genuine
//! two-implementation check, not the same formula computed twice.

use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithms::{
    binary_search_by_probe, merge_sort, quicksort, word_crosses_center, SearchVariant,
};
use crate::error::{Error, Result};
use crate::range::Range;
use crate::splitter::{landmarks, split_n, Partition, SplitPolicy};

/// One disagreement found by a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.case, self.expected, self.actual)
    }
}

/// Stored failures are capped to keep reports bounded; the total count
/// stays exact.
pub const FAILURE_CAP: usize = 100;

/// Outcome of a verification sweep.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Number of cases checked.
    pub checked: u64,
    /// Exact number of failing cases; `failures` holds at most
    /// [`FAILURE_CAP`] of them.
    pub total_failures: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new() -> Self {
        VerificationReport {
            checked: 0,
            total_failures: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }

    fn fail(&mut self, case: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) {
        self.total_failures += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(Failure {
                case: case.into(),
                expected: expected.into(),
                actual: actual.into(),
            });
        }
    }

    /// Folds another report into this one. Merging is associative and
    /// order-independent up to failure-listing order, so sweeps over
    /// disjoint domains can run concurrently and combine.
    pub fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.total_failures += other.total_failures;
        for f in other.failures {
            if self.failures.len() >= FAILURE_CAP {
                break;
            }
            self.failures.push(f);
        }
        self.elapsed += other.elapsed;
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(
                f,
                "PASS: {} cases checked in {:.3}s",
                self.checked,
                self.elapsed.as_secs_f64()
            )
        } else {
            writeln!(
                f,
                "FAIL: {} of {} cases failed in {:.3}s",
                self.total_failures,
                self.checked,
                self.elapsed.as_secs_f64()
            )?;
            for failure in &self.failures {
                writeln!(f, "  {failure}")?;
            }
            if self.total_failures as usize > self.failures.len() {
                writeln!(
                    f,
                    "  ... and {} more",
                    self.total_failures as usize - self.failures.len()
                )?;
            }
            Ok(())
        }
    }
}

/// Splits a frame by parity construction instead of boundary formulas.
///
/// A pointer walks in from each end until the two meet (even size) or
/// trap a single element (odd size, the center). Policies then attach or
/// remove the center; cuts of even frames remove the element nearest the
/// physical center on the chosen side.
pub fn oracle_split(n: i64, policy: SplitPolicy) -> Result<Partition> {
    if n < 0 {
        return Err(Error::domain(format!("oracle_split: size must be >= 0, got {n}")));
    }
    let mut lo = 0i64;
    let mut hi = n;
    while hi - lo >= 2 {
        lo += 1;
        hi -= 1;
    }
    let (left_half, center, right_half) = if lo == hi {
        (Range::new(0, lo)?, None, Range::new(lo, n)?)
    } else {
        (Range::new(0, lo)?, Some(lo), Range::new(lo + 1, n)?)
    };

    let (left, excluded, right) = match (policy, center) {
        (SplitPolicy::Natural, c) => (left_half, c, right_half),
        (SplitPolicy::LeftPlus, Some(c)) => (Range::new(0, c + 1)?, None, right_half),
        (SplitPolicy::LeftPlus, None) => (left_half, None, right_half),
        (SplitPolicy::RightPlus, Some(c)) => (left_half, None, Range::new(c, n)?),
        (SplitPolicy::RightPlus, None) => (left_half, None, right_half),
        // Odd frames: both cuts remove the center itself.
        (SplitPolicy::CutLeft | SplitPolicy::CutRight, Some(c)) => (left_half, Some(c), right_half),
        // Even frames: drop the last of the left half or the first of the
        // right half. Size zero has nothing to remove.
        (SplitPolicy::CutLeft, None) if n > 0 => (
            Range::new(left_half.lo(), left_half.hi() - 1)?,
            Some(left_half.hi() - 1),
            right_half,
        ),
        (SplitPolicy::CutRight, None) if n > 0 => (
            left_half,
            Some(right_half.lo()),
            Range::new(right_half.lo() + 1, right_half.hi())?,
        ),
        (SplitPolicy::CutLeft | SplitPolicy::CutRight, None) => (left_half, None, right_half),
    };
    Ok(Partition { left, excluded, right, policy })
}

/// Smallest index holding `t`, by plain scan.
pub fn linear_search(a: &[i64], t: i64) -> Option<usize> {
    a.iter().position(|&x| x == t)
}

/// Every non-decreasing sequence of length `0..=max_n` over the values
/// `[0, alphabet_size)`, shortest first, lexicographic within a length.
/// There are `C(n + alphabet_size - 1, alphabet_size - 1)` of each length
/// `n`.
pub fn enumerate_sorted_arrays(max_n: i64, alphabet_size: i64) -> impl Iterator<Item = Vec<i64>> {
    assert!(alphabet_size >= 1, "alphabet must have at least one value");
    assert!(max_n >= 0);
    let mut length = 0i64;
    let mut current: Option<Vec<i64>> = Some(Vec::new());
    std::iter::from_fn(move || {
        let out = current.take()?;
        // Advance: bump the rightmost position with headroom and level
        // everything after it; exhausting a length moves to the next.
        let mut next = out.clone();
        let mut bumped = false;
        for j in (0..next.len()).rev() {
            if next[j] < alphabet_size - 1 {
                let v = next[j] + 1;
                for slot in next.iter_mut().skip(j) {
                    *slot = v;
                }
                bumped = true;
                break;
            }
        }
        if bumped {
            current = Some(next);
        } else if length < max_n {
            length += 1;
            current = Some(vec![0; length as usize]);
        }
        Some(out)
    })
}

/// Every tuple of length `0..=max_n` over `[0, alphabet_size)`, shortest
/// first; `alphabet_size^n` of each length `n`.
pub fn enumerate_arrays(max_n: i64, alphabet_size: i64) -> impl Iterator<Item = Vec<i64>> {
    assert!(alphabet_size >= 1, "alphabet must have at least one value");
    assert!(max_n >= 0);
    let mut length = 0i64;
    let mut current: Option<Vec<i64>> = Some(Vec::new());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        let mut bumped = false;
        for j in (0..next.len()).rev() {
            if next[j] < alphabet_size - 1 {
                next[j] += 1;
                for slot in next.iter_mut().skip(j + 1) {
                    *slot = 0;
                }
                bumped = true;
                break;
            }
        }
        if bumped {
            current = Some(next);
        } else if length < max_n {
            length += 1;
            current = Some(vec![0; length as usize]);
        }
        Some(out)
    })
}

/// Literal reading of "some word crosses the center": extract the maximal
/// non-space runs with their index ranges, then scan each run for an
/// index in the left half, one at the center (odd length only), and one
/// in the right half.
pub fn brute_word_cross(text: &str) -> bool {
    let chars: Vec<char> = text.chars().collect();
    let n = chars.len() as i64;
    let mut words: Vec<(i64, i64)> = Vec::new();
    let mut start: Option<i64> = None;
    for (idx, &c) in chars.iter().enumerate() {
        match (c != ' ', start) {
            (true, None) => start = Some(idx as i64),
            (false, Some(s)) => {
                words.push((s, idx as i64));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        words.push((s, n));
    }

    words.iter().any(|&(ws, we)| {
        if n % 2 == 0 {
            let boundary = n / 2;
            let in_left = (ws..we).any(|i| i < boundary);
            let in_right = (ws..we).any(|i| i >= boundary);
            in_left && in_right
        } else {
            let c = (n - 1) / 2;
            let in_left = (ws..we).any(|i| i < c);
            let at_center = (ws..we).any(|i| i == c);
            let in_right = (ws..we).any(|i| i > c);
            in_left && at_center && in_right
        }
    })
}

// ---------------------------------------------------------------------------
// Partition verification
// ---------------------------------------------------------------------------

/// Largest frame size that also gets the per-index membership bitmap
/// check (quadratic, so bounded); the structural tiling check runs at
/// every size.
const BITMAP_LIMIT: i64 = 256;

/// Sweeps every `n` in `[0, max_n]` and every given policy, comparing the
/// splitter's formula-based partitions against [`oracle_split`] and
/// checking the partition laws.
pub fn verify_partitions(max_n: i64, policies: &[SplitPolicy]) -> VerificationReport {
    verify_partitions_with(max_n, policies, split_n)
}

/// Same sweep against an arbitrary split implementation: the harness
/// self-test feeds a deliberately broken one and expects failures.
pub fn verify_partitions_with(
    max_n: i64,
    policies: &[SplitPolicy],
    split: impl Fn(i64, SplitPolicy) -> Result<Partition>,
) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new();
    for n in 0..=max_n {
        for &policy in policies {
            report.checked += 1;
            let case = format!("n={n} {policy}");
            let formula = match split(n, policy) {
                Ok(p) => p,
                Err(e) => {
                    report.fail(&case, "a partition", format!("error: {e}"));
                    continue;
                }
            };
            let reference = oracle_split(n, policy).expect("n >= 0");
            if !formula.same_coverage(&reference) {
                report.fail(&case, reference.to_string(), formula.to_string());
            }
            for issue in partition_law_violations(n, &formula) {
                report.fail(&case, "partition laws to hold", issue);
            }
        }
    }
    report.elapsed = started.elapsed();
    report
}

/// Checks the per-partition laws: containment in the frame, pairwise
/// disjointness, exact coverage of `[0, n)`, the per-policy size laws,
/// and the cut landmark law. Returns a description of every violation.
fn partition_law_violations(n: i64, p: &Partition) -> Vec<String> {
    let mut issues = Vec::new();
    let within = |r: &Range| r.is_empty() || (r.lo() >= 0 && r.hi() <= n);
    if !within(&p.left) {
        issues.push(format!("left {} leaves the frame [0, {n})", p.left));
    }
    if !within(&p.right) {
        issues.push(format!("right {} leaves the frame [0, {n})", p.right));
    }
    if let Some(x) = p.excluded {
        if x < 0 || x >= n {
            issues.push(format!("excluded {x} leaves the frame [0, {n})"));
        }
    }

    // Disjointness and exact coverage: the non-empty pieces must tile
    // [0, n) with no gap and no overlap.
    let mut segments: Vec<(i64, i64)> = Vec::new();
    if !p.left.is_empty() {
        segments.push((p.left.lo(), p.left.hi()));
    }
    if let Some(x) = p.excluded {
        segments.push((x, x + 1));
    }
    if !p.right.is_empty() {
        segments.push((p.right.lo(), p.right.hi()));
    }
    segments.sort_unstable();
    let tiles = match segments.as_slice() {
        [] => n == 0,
        segs => {
            segs[0].0 == 0
                && segs.last().unwrap().1 == n
                && segs.windows(2).all(|w| w[0].1 == w[1].0)
        }
    };
    if !tiles {
        issues.push(format!("pieces {segments:?} do not tile [0, {n}) disjointly"));
    }

    // Membership bitmap at small sizes: the same claim by brute force.
    if (0..=BITMAP_LIMIT).contains(&n) {
        let mut marks = vec![0u8; n as usize];
        let mut mark = |i: i64| {
            if (0..n).contains(&i) {
                marks[i as usize] += 1;
            }
        };
        p.left.iter().for_each(&mut mark);
        p.right.iter().for_each(&mut mark);
        if let Some(x) = p.excluded {
            mark(x);
        }
        if marks.iter().any(|&m| m != 1) {
            issues.push("bitmap shows an index covered zero or multiple times".to_string());
        }
    }

    // Size laws.
    let (l, r) = (p.left.len(), p.right.len());
    let law_ok = match p.policy {
        SplitPolicy::Natural => l == n / 2 && r == n / 2,
        SplitPolicy::LeftPlus => l == n - n / 2 && r == n / 2,
        SplitPolicy::RightPlus => l == n / 2 && r == n - n / 2,
        SplitPolicy::CutLeft | SplitPolicy::CutRight => {
            if n >= 1 {
                l + r == n - 1 && p.excluded.is_some()
            } else {
                l == 0 && r == 0 && p.excluded.is_none()
            }
        }
    };
    if !law_ok {
        issues.push(format!("size law violated: |left| = {l}, |right| = {r}"));
    }
    if !p.policy.is_cut() && (l - r).abs() > 1 {
        issues.push(format!("halves out of balance: |left| = {l}, |right| = {r}"));
    }

    // Cut landmark law: the removed element is the center when one
    // exists, otherwise el (left cut) or rs (right cut).
    if p.policy.is_cut() && n >= 1 {
        let expected = match p.policy {
            SplitPolicy::CutLeft => (n + 1) / 2 - 1,
            SplitPolicy::CutRight => n / 2,
            _ => unreachable!(),
        };
        if p.excluded != Some(expected) {
            issues.push(format!("cut excluded {:?}, expected {expected}", p.excluded));
        }
        if n >= 2 {
            let marks = landmarks(n).expect("n >= 2");
            let nearest = match (p.policy, marks.center) {
                (_, Some(c)) => c,
                (SplitPolicy::CutLeft, None) => marks.el,
                (SplitPolicy::CutRight, None) => marks.rs,
                _ => unreachable!(),
            };
            if p.excluded != Some(nearest) {
                issues.push(format!(
                    "cut excluded {:?}, expected landmark {nearest}",
                    p.excluded
                ));
            }
        }
    }
    issues
}

// ---------------------------------------------------------------------------
// Search / sort / word-cross agreement suites
// ---------------------------------------------------------------------------

/// Exhaustive-plus-random agreement suite for the binary-search variants.
///
/// Exhaustive part: every sorted array of length `0..=exhaustive_max_n`
/// over a three-value alphabet, probed with every target in
/// `exhaustive_targets`. Random part: `random_cases` sorted arrays of
/// length up to `random_max_len`, from a generator seeded with `seed`.
///
/// Each case checks, for every variant: agreement with [`linear_search`]
/// on found/absent, that a returned index holds the target, that no probe
/// leaves `[0, len)`, and that the probe count stays logarithmic (the
/// frame must shrink every iteration).
pub fn verify_searches(
    exhaustive_max_n: i64,
    exhaustive_targets: RangeInclusive<i64>,
    random_cases: u64,
    random_max_len: usize,
    seed: u64,
) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new();

    for a in enumerate_sorted_arrays(exhaustive_max_n, 3) {
        for t in exhaustive_targets.clone() {
            check_search_case(&mut report, &a, t, "exhaustive");
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..random_cases {
        let len = rng.gen_range(0..=random_max_len);
        let mut a: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=len as i64)).collect();
        a.sort_unstable();
        let t = if len > 0 && rng.gen_bool(0.5) {
            a[rng.gen_range(0..len)]
        } else {
            rng.gen_range(-4..=len as i64 + 1)
        };
        check_search_case(&mut report, &a, t, &format!("random seed={seed} case={case}"));
    }

    report.elapsed = started.elapsed();
    report
}

fn check_search_case(report: &mut VerificationReport, a: &[i64], t: i64, label: &str) {
    let expected = linear_search(a, t);
    for variant in SearchVariant::ALL {
        report.checked += 1;
        let case = format!("{label} {variant} a={a:?} t={t}");
        let mut violations = 0u64;
        let mut probes = 0u64;
        let result = binary_search_by_probe(
            a.len(),
            |i| {
                probes += 1;
                if i < a.len() {
                    a[i]
                } else {
                    violations += 1;
                    i64::MIN
                }
            },
            t,
            variant,
        );
        if violations > 0 {
            report.fail(&case, "all probes within bounds", format!("{violations} out of bounds"));
            continue;
        }
        let budget = 64 - (a.len() as u64).leading_zeros() as u64 + 2;
        if probes > budget {
            report.fail(&case, format!("at most {budget} probes"), format!("{probes} probes"));
        }
        match (expected, result) {
            (Some(_), Some(r)) if r < a.len() && a[r] == t => {}
            (None, None) => {}
            _ => report.fail(
                &case,
                format!("{expected:?} (membership)"),
                format!("{result:?}"),
            ),
        }
    }
}

/// Exhaustive-plus-random agreement suite for the two sorts, against the
/// standard library's comparison sort as the reference.
pub fn verify_sorts(
    exhaustive_max_n: i64,
    random_cases: u64,
    random_max_len: usize,
    seed: u64,
) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new();

    let check = |report: &mut VerificationReport, a: &[i64], label: &str| {
        report.checked += 1;
        let mut expected = a.to_vec();
        expected.sort_unstable();
        let merged = merge_sort(a);
        let quicked = quicksort(a);
        if merged != expected {
            report.fail(
                format!("{label} merge_sort {a:?}"),
                format!("{expected:?}"),
                format!("{merged:?}"),
            );
        }
        if quicked != expected {
            report.fail(
                format!("{label} quicksort {a:?}"),
                format!("{expected:?}"),
                format!("{quicked:?}"),
            );
        }
    };

    for a in enumerate_arrays(exhaustive_max_n, 3) {
        check(&mut report, &a, "exhaustive");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..random_cases {
        let len = rng.gen_range(0..=random_max_len);
        let a: Vec<i64> = (0..len).map(|_| rng.gen_range(-1000..=1000)).collect();
        check(&mut report, &a, &format!("random seed={seed} case={case}"));
    }

    report.elapsed = started.elapsed();
    report
}

/// Checks [`word_crosses_center`] against [`brute_word_cross`] on every
/// string of length `0..=max_len` over the alphabet `{'a', ' '}`.
pub fn verify_word_cross(max_len: i64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new();
    for pattern in enumerate_arrays(max_len, 2) {
        let text: String = pattern.iter().map(|&b| if b == 0 { ' ' } else { 'a' }).collect();
        report.checked += 1;
        let expected = brute_word_cross(&text);
        let actual = word_crosses_center(&text);
        if expected != actual {
            report.fail(
                format!("word cross {text:?}"),
                expected.to_string(),
                actual.to_string(),
            );
        }
    }
    report.elapsed = started.elapsed();
    report
}
