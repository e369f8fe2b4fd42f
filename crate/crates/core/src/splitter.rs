//! The five array-division policies in all four coordinate systems, plus
//! the center operations and balanced k-way splitting.
//!
//! An array is treated as a three-section object: left half, an optional
//! center (only odd sizes have one), right half. A policy decides what
//! happens to the center:
//!
//! * `Natural`: two equal halves of `n/2`; the center joins neither.
//! * `LeftPlus`: the center, if present, joins the left half.
//! * `RightPlus`: the center, if present, joins the right half.
//! * `CutLeft` / `CutRight`: exactly one element nearest the physical
//!   center is removed. That is the center itself for odd `n`, otherwise
//!   the last of the left half (left cut) or the first of the right half
//!   (right cut).
//!
//! Every boundary below is built from the bullet-proof expression family
//! `n/2`, `(n+1)/2`, `n/2+1`, `(n+1)/2-1`, which stays in bounds for
//! `n = 0` and `n = 1` without special cases. All divisions by two are
//! floor divisions; with a base `b < 0` the `(b,e)` and `(b,e+1)` forms
//! divide negative values, where truncation would silently shift a
//! boundary.

use std::fmt;

use crate::error::{Error, Result};
use crate::range::{narrow, Extent, Index, Range};

/// How the split treats the (possibly missing) center element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitPolicy {
    Natural,
    LeftPlus,
    RightPlus,
    CutLeft,
    CutRight,
}

impl SplitPolicy {
    pub const ALL: [SplitPolicy; 5] = [
        SplitPolicy::Natural,
        SplitPolicy::LeftPlus,
        SplitPolicy::RightPlus,
        SplitPolicy::CutLeft,
        SplitPolicy::CutRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SplitPolicy::Natural => "natural",
            SplitPolicy::LeftPlus => "leftplus",
            SplitPolicy::RightPlus => "rightplus",
            SplitPolicy::CutLeft => "cutleft",
            SplitPolicy::CutRight => "cutright",
        }
    }

    /// Cut policies always remove one element from a non-empty frame.
    pub fn is_cut(self) -> bool {
        matches!(self, SplitPolicy::CutLeft | SplitPolicy::CutRight)
    }
}

impl fmt::Display for SplitPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl std::str::FromStr for SplitPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(SplitPolicy::Natural),
            "leftplus" => Ok(SplitPolicy::LeftPlus),
            "rightplus" => Ok(SplitPolicy::RightPlus),
            "cutleft" => Ok(SplitPolicy::CutLeft),
            "cutright" => Ok(SplitPolicy::CutRight),
            other => Err(Error::domain(format!(
                "unknown policy `{other}` (expected natural, leftplus, rightplus, cutleft or cutright)"
            ))),
        }
    }
}

/// Result of splitting a frame: a left range, an optionally excluded
/// index, and a right range. The three parts are pairwise disjoint and
/// together cover the frame exactly.
///
/// `excluded` records the uncovered center for `Natural` splits of odd
/// frames as well, even though that policy is not a cut: coverage of the
/// whole frame is then uniform across policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub left: Range,
    pub excluded: Option<Index>,
    pub right: Range,
    pub policy: SplitPolicy,
}

impl Partition {
    /// Same split as sets, ignoring the policy tag: left and right compare
    /// via [`Range::same_set`], so empty ranges agree regardless of where
    /// they sit.
    pub fn same_coverage(&self, other: &Partition) -> bool {
        self.left.same_set(&other.left)
            && self.excluded == other.excluded
            && self.right.same_set(&other.right)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: left {}", self.policy, self.left)?;
        if let Some(x) = self.excluded {
            write!(f, ", excluded {x}")?;
        }
        write!(f, ", right {}", self.right)
    }
}

/// The named positions around the middle of a frame of `n >= 2` elements:
/// last index of the left half, first index of the right half, and the
/// center when `n` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Landmarks {
    pub el: Index,
    pub center: Option<Index>,
    pub rs: Index,
}

/// The boundary expressions each policy uses, as DSL source text. These
/// feed the rendered policy tables and pin the arithmetic in [`split_n`]:
/// a test sweeps them through the expression evaluator and requires
/// agreement with the computed partitions, so neither side can drift.
#[derive(Debug, Clone, Copy)]
pub struct PolicyFormulas {
    pub policy: SplitPolicy,
    pub left: &'static str,
    pub right: &'static str,
    /// Expression for the excluded index. For the cut policies it is
    /// always excluded from non-empty frames; for `Natural` only when `n`
    /// is odd.
    pub excluded: Option<&'static str>,
}

pub const POLICY_FORMULAS: [PolicyFormulas; 5] = [
    PolicyFormulas {
        policy: SplitPolicy::Natural,
        left: "0 <= i < n/2",
        right: "(n+1)/2 <= i < n",
        excluded: Some("n/2"),
    },
    PolicyFormulas {
        policy: SplitPolicy::LeftPlus,
        left: "0 <= i < (n+1)/2",
        right: "(n+1)/2 <= i < n",
        excluded: None,
    },
    PolicyFormulas {
        policy: SplitPolicy::RightPlus,
        left: "0 <= i < n/2",
        right: "n/2 <= i < n",
        excluded: None,
    },
    PolicyFormulas {
        policy: SplitPolicy::CutLeft,
        left: "0 <= i < (n+1)/2-1",
        right: "(n+1)/2 <= i < n",
        excluded: Some("(n+1)/2-1"),
    },
    PolicyFormulas {
        policy: SplitPolicy::CutRight,
        left: "0 <= i < n/2",
        right: "n/2+1 <= i < n",
        excluded: Some("n/2"),
    },
];

/// Floor division by two; `div_euclid` floors for a positive divisor.
fn half(v: i128) -> i128 {
    v.div_euclid(2)
}

/// Builds `[lo, hi)` from wide intermediates, clamping a logically empty
/// description (`hi < lo`) to the empty range at `lo`.
fn half_open(lo: i128, hi: i128, what: &'static str) -> Result<Range> {
    let lo = narrow(lo, what)?;
    if hi < lo as i128 {
        return Ok(Range::empty_at(lo));
    }
    Range::new(lo, narrow(hi, what)?)
}

fn require_size(n: Extent, what: &str) -> Result<()> {
    if n < 0 {
        return Err(Error::domain(format!("{what}: size must be >= 0, got {n}")));
    }
    Ok(())
}

/// Splits the zero-based frame `[0, n)`.
pub fn split_n(n: Extent, policy: SplitPolicy) -> Result<Partition> {
    require_size(n, "split_n")?;
    split_wide(0, n as i128, policy)
}

/// Splits the frame `[b, b+n)` using the base-plus-length expressions
/// (`b + n/2` and friends).
pub fn split_based(b: Index, n: Extent, policy: SplitPolicy) -> Result<Partition> {
    require_size(n, "split_based")?;
    split_wide(b as i128, n as i128, policy)
}

fn split_wide(b: i128, n: i128, policy: SplitPolicy) -> Result<Partition> {
    let lo = b;
    let hi = b + n;
    let at_half = b + half(n);
    let at_upper = b + half(n + 1);
    let (left, excluded, right) = match policy {
        SplitPolicy::Natural => (
            half_open(lo, at_half, "split left")?,
            if n % 2 == 1 { Some(narrow(at_half, "split excluded")?) } else { None },
            half_open(at_upper, hi, "split right")?,
        ),
        SplitPolicy::LeftPlus => (
            half_open(lo, at_upper, "split left")?,
            None,
            half_open(at_upper, hi, "split right")?,
        ),
        SplitPolicy::RightPlus => (
            half_open(lo, at_half, "split left")?,
            None,
            half_open(at_half, hi, "split right")?,
        ),
        SplitPolicy::CutLeft => (
            half_open(lo, at_upper - 1, "split left")?,
            if n >= 1 { Some(narrow(at_upper - 1, "split excluded")?) } else { None },
            half_open(at_upper, hi, "split right")?,
        ),
        SplitPolicy::CutRight => (
            half_open(lo, at_half, "split left")?,
            if n >= 1 { Some(narrow(at_half, "split excluded")?) } else { None },
            half_open(at_half + 1, hi, "split right")?,
        ),
    };
    Ok(Partition { left, excluded, right, policy })
}

/// Splits the frame `[b, e]` (both bounds inclusive, so `e >= b` and the
/// frame is never empty) using only `b`, `e` and `m = b + e`.
pub fn split_be(b: Index, e: Index, policy: SplitPolicy) -> Result<Partition> {
    if e < b {
        return Err(Error::domain(format!(
            "split_be: need e >= b, got b = {b}, e = {e} (use split_based for empty frames)"
        )));
    }
    let m = b as i128 + e as i128;
    let lo = b as i128;
    let hi = e as i128 + 1;
    // m and n = e - b + 1 have opposite parities: the center exists (n
    // odd) exactly when m is even, and it sits at m/2.
    let center = if m % 2 == 0 { Some(half(m)) } else { None };
    let (left, excluded, right) = match policy {
        SplitPolicy::Natural => (
            half_open(lo, half(m + 1), "split_be left")?,
            center,
            half_open(half(m) + 1, hi, "split_be right")?,
        ),
        SplitPolicy::LeftPlus => (
            half_open(lo, half(m) + 1, "split_be left")?,
            None,
            half_open(half(m) + 1, hi, "split_be right")?,
        ),
        SplitPolicy::RightPlus => (
            half_open(lo, half(m + 1), "split_be left")?,
            None,
            half_open(half(m + 1), hi, "split_be right")?,
        ),
        SplitPolicy::CutLeft => (
            half_open(lo, half(m), "split_be left")?,
            Some(half(m)),
            half_open(half(m) + 1, hi, "split_be right")?,
        ),
        SplitPolicy::CutRight => (
            half_open(lo, half(m + 1), "split_be left")?,
            Some(half(m + 1)),
            half_open(half(m + 1) + 1, hi, "split_be right")?,
        ),
    };
    let excluded = excluded.map(|x| narrow(x, "split_be excluded")).transpose()?;
    Ok(Partition { left, excluded, right, policy })
}

/// Splits the frame `[b, ex)` (`ex` is one past the end) using only `b`
/// and `ex`. Only the policies whose boundaries have a clean `(b+ex)/2`
/// form are available here: `Natural`, `RightPlus` and `CutRight`.
pub fn split_bex(b: Index, ex: Index, policy: SplitPolicy) -> Result<Partition> {
    if ex < b {
        return Err(Error::domain(format!(
            "split_bex: need ex >= b, got b = {b}, ex = {ex}"
        )));
    }
    let lo = b as i128;
    let hi = ex as i128;
    let mid = half(lo + hi);
    let n = hi - lo;
    let (left, excluded, right) = match policy {
        SplitPolicy::Natural => (
            half_open(lo, mid, "split_bex left")?,
            if n % 2 == 1 { Some(narrow(mid, "split_bex excluded")?) } else { None },
            half_open(half(lo + hi - 1) + 1, hi, "split_bex right")?,
        ),
        SplitPolicy::RightPlus => (
            half_open(lo, mid, "split_bex left")?,
            None,
            half_open(mid, hi, "split_bex right")?,
        ),
        SplitPolicy::CutRight => (
            half_open(lo, mid, "split_bex left")?,
            if n >= 1 { Some(narrow(mid, "split_bex excluded")?) } else { None },
            half_open(mid + 1, hi, "split_bex right")?,
        ),
        other => {
            return Err(Error::domain(format!(
                "split_bex: policy {other} has no (b, e+1) form; supported: natural, rightplus, cutright"
            )));
        }
    };
    Ok(Partition { left, excluded, right, policy })
}

/// The landmark positions of a frame of `n` elements: `el = n/2 - 1`,
/// `rs = (n+1)/2`, and the center `n/2` when `n` is odd. Undefined below
/// `n = 2`.
pub fn landmarks(n: Extent) -> Result<Landmarks> {
    if n < 2 {
        return Err(Error::domain(format!(
            "landmarks: end-of-left/start-of-right are not well defined for n = {n}"
        )));
    }
    Ok(Landmarks {
        el: n / 2 - 1,
        center: if n % 2 == 1 { Some(n / 2) } else { None },
        rs: (n + 1) / 2,
    })
}

/// The section between the two halves of a Natural split:
/// `[n/2, (n+1)/2)`. Holds exactly the center when `n` is odd and is
/// empty otherwise, for every `n >= 0`.
pub fn center_band(n: Extent) -> Result<Range> {
    require_size(n, "center_band")?;
    let lo = half(n as i128);
    let hi = half(n as i128 + 1);
    half_open(lo, hi, "center_band")
}

/// The central position when one exists: `n` odd yields `n/2`, even
/// frames have none.
pub fn center_index(n: Extent) -> Result<Option<Index>> {
    let band = center_band(n)?;
    Ok(if band.is_empty() { None } else { Some(band.lo()) })
}

/// The central subarray with `k` elements on each side of the center
/// band: `[n/2 - k, (n+1)/2 + k)`, length `2k` plus one when `n` is odd.
/// The window must fit inside the frame.
pub fn center_window(n: Extent, k: Extent) -> Result<Range> {
    require_size(n, "center_window")?;
    if k < 0 {
        return Err(Error::domain(format!("center_window: k must be >= 0, got {k}")));
    }
    let lo = half(n as i128) - k as i128;
    let hi = half(n as i128 + 1) + k as i128;
    if lo < 0 || hi > n as i128 {
        return Err(Error::domain(format!(
            "center_window: k = {k} does not fit in a frame of {n} elements"
        )));
    }
    half_open(lo, hi, "center_window")
}

/// Splits `[0, n)` into `k` contiguous sections whose sizes differ by at
/// most one: the `r`-th section has length `(n+r)/k`, which makes sizes
/// non-decreasing and the total exactly `n`.
pub fn kway_split(n: Extent, k: Extent) -> Result<Vec<Range>> {
    require_size(n, "kway_split")?;
    if k < 1 {
        return Err(Error::domain(format!("kway_split: need k >= 1, got {k}")));
    }
    let mut parts = Vec::with_capacity(k as usize);
    let mut start = 0i128;
    for r in 0..k {
        let len = (n as i128 + r as i128).div_euclid(k as i128);
        parts.push(half_open(start, start + len, "kway_split part")?);
        start += len;
    }
    Ok(parts)
}
