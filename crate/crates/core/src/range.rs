//! Half-open integer ranges and the promotion/reduction algebra on their
//! bounds.
//!
//! The normal form of every boundary expression in this crate is the
//! half-open interval `[lo, hi)`: `lo` inclusive, `hi` exclusive, length
//! `hi - lo`. Other bound styles (inclusive/inclusive, exclusive lows, ...)
//! are converted on entry through [`make_range`]. All arithmetic runs in
//! `i128` and narrows back with a check, so an out-of-width result is an
//! [`Error::Overflow`], never a silent wrap.

use std::fmt;

use crate::error::{Error, Result};

/// A position in (or near) an array. Negative values are legal: they model
/// out-of-frame landmarks such as the last-of-left-half slot `-1` when
/// `n = 1`.
pub type Index = i64;

/// A length or count. Non-negative by contract; operations taking an
/// `Extent` validate and report a domain error for negative input.
pub type Extent = i64;

pub(crate) fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Half-open interval `[lo, hi)` over [`Index`].
///
/// Invariants: `lo <= hi`, and `hi - lo` is representable, so
/// [`Range::len`] never overflows. A range is empty iff `lo == hi`; empty
/// ranges may sit at any position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Range {
    lo: Index,
    hi: Index,
}

impl Range {
    /// Builds `[lo, hi)`. Rejects `lo > hi` and spans wider than the index
    /// type.
    pub fn new(lo: Index, hi: Index) -> Result<Self> {
        if lo > hi {
            return Err(Error::domain(format!(
                "range bounds out of order: lo = {lo}, hi = {hi}"
            )));
        }
        hi.checked_sub(lo).ok_or(Error::Overflow("range span"))?;
        Ok(Range { lo, hi })
    }

    /// The empty range positioned at `at`.
    pub fn empty_at(at: Index) -> Self {
        Range { lo: at, hi: at }
    }

    pub fn lo(&self) -> Index {
        self.lo
    }

    pub fn hi(&self) -> Index {
        self.hi
    }

    /// Number of integers in the range: `hi - lo`.
    pub fn len(&self) -> Extent {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.lo == self.hi
    }

    /// Membership test: `lo <= i < hi`.
    pub fn contains(&self, i: Index) -> bool {
        self.lo <= i && i < self.hi
    }

    /// The integers of the range in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Index> {
        self.lo..self.hi
    }

    /// Two ranges denote the same set of integers. Unlike `==`, empty
    /// ranges at different positions compare equal here.
    pub fn same_set(&self, other: &Range) -> bool {
        (self.is_empty() && other.is_empty()) || self == other
    }

    /// Largest range contained in both; empty ranges collapse to the
    /// clamped low bound. This is the clamping helper callers use to cut a
    /// window back to an array frame.
    pub fn intersect(&self, other: &Range) -> Range {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Range { lo, hi }
        } else {
            Range::empty_at(lo)
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// One end of a described interval: a value plus whether the comparison
/// against it is inclusive (`<=`) or strict (`<`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundSpec {
    pub value: Index,
    pub inclusive: bool,
}

impl BoundSpec {
    pub fn inclusive(value: Index) -> Self {
        BoundSpec { value, inclusive: true }
    }

    pub fn exclusive(value: Index) -> Self {
        BoundSpec { value, inclusive: false }
    }
}

/// Normalizes a described interval `lo ? i ? hi` to half-open form.
///
/// An inclusive low keeps its value, an exclusive low adds one; an
/// inclusive high adds one, an exclusive high keeps its value. Logically
/// empty descriptions (normalized high below normalized low, e.g.
/// `0 <= i <= -1`) clamp to the empty range at the low bound rather than
/// erroring: the split tables rely on such ranges meaning "no access".
pub fn make_range(lo: BoundSpec, hi: BoundSpec) -> Result<Range> {
    let lo_norm = lo.value as i128 + if lo.inclusive { 0 } else { 1 };
    let hi_norm = hi.value as i128 + if hi.inclusive { 1 } else { 0 };
    let lo_norm = narrow(lo_norm, "make_range low bound")?;
    if hi_norm < lo_norm as i128 {
        return Ok(Range::empty_at(lo_norm));
    }
    let hi_norm = narrow(hi_norm, "make_range high bound")?;
    Range::new(lo_norm, hi_norm)
}

/// Removes `g` elements from the front: `[lo + g, hi)`.
pub fn drop_front(r: Range, g: Extent) -> Result<Range> {
    if g < 0 || g > r.len() {
        return Err(Error::RangeUnderflow { removed: g, len: r.len() });
    }
    Range::new(r.lo + g, r.hi)
}

/// Removes `h` elements from the back: `[lo, hi - h)`.
pub fn drop_back(r: Range, h: Extent) -> Result<Range> {
    if h < 0 || h > r.len() {
        return Err(Error::RangeUnderflow { removed: h, len: r.len() });
    }
    Range::new(r.lo, r.hi - h)
}

/// The `k` positions to the left of `p`: `[p-k, p)` when `p` is excluded,
/// `[p-k+1, p+1)` when included. Always has length exactly `k`; not clamped
/// to any frame (see [`Range::intersect`]).
pub fn left_window(p: Index, k: Extent, include_p: bool) -> Result<Range> {
    if k < 0 {
        return Err(Error::domain(format!("window width must be >= 0, got {k}")));
    }
    let (lo, hi) = if include_p {
        (p as i128 - k as i128 + 1, p as i128 + 1)
    } else {
        (p as i128 - k as i128, p as i128)
    };
    Range::new(narrow(lo, "left_window low")?, narrow(hi, "left_window high")?)
}

/// The `k` positions to the right of `p`: `[p, p+k)` when `p` is included,
/// `[p+1, p+k+1)` when excluded. Always has length exactly `k`.
pub fn right_window(p: Index, k: Extent, include_p: bool) -> Result<Range> {
    if k < 0 {
        return Err(Error::domain(format!("window width must be >= 0, got {k}")));
    }
    let (lo, hi) = if include_p {
        (p as i128, p as i128 + k as i128)
    } else {
        (p as i128 + 1, p as i128 + k as i128 + 1)
    };
    Range::new(narrow(lo, "right_window low")?, narrow(hi, "right_window high")?)
}

/// Shifts the whole range by `b`: `[lo + b, hi + b)`. Length is preserved.
pub fn rebase(r: Range, b: Index) -> Result<Range> {
    let lo = narrow(r.lo as i128 + b as i128, "rebase low")?;
    let hi = narrow(r.hi as i128 + b as i128, "rebase high")?;
    Range::new(lo, hi)
}

/// Reflection of `i` inside the frame `[0, n)`: returns `n - 1 - i`.
/// An involution; for odd `n` the center is its fixed point.
pub fn mirror_index(i: Index, n: Extent) -> Result<Index> {
    if i < 0 || i >= n {
        return Err(Error::domain(format!(
            "mirror_index: i = {i} outside [0, {n})"
        )));
    }
    Ok(n - 1 - i)
}
