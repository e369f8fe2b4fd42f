//! Divide-and-conquer algorithms built on the splitter's boundary
//! arithmetic: three binary-search variants, merge sort, a first-element
//! pivot quicksort, chop-point detection and the word-crossing-center
//! test.

use crate::error::{Error, Result};
use crate::splitter::{split_based, split_n, SplitPolicy};

/// Which loop structure a binary search uses. All variants probe within
/// bounds and agree on membership; which duplicate index they return is
/// unspecified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchVariant {
    /// Compare the first element of the Right+ right half; keep one half.
    RightPlusSplit,
    /// Probe the cut-out index of a right cut; on mismatch drop it and
    /// keep one half, using the halves' exact lengths.
    CutOutCenter,
    /// Same probe as `CutOutCenter`, with the frame update squeezed into a
    /// shared halving step.
    CutOutCompact,
}

impl SearchVariant {
    pub const ALL: [SearchVariant; 3] = [
        SearchVariant::RightPlusSplit,
        SearchVariant::CutOutCenter,
        SearchVariant::CutOutCompact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchVariant::RightPlusSplit => "rightplus",
            SearchVariant::CutOutCenter => "cutout",
            SearchVariant::CutOutCompact => "compact",
        }
    }
}

impl std::fmt::Display for SearchVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl std::str::FromStr for SearchVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rightplus" => Ok(SearchVariant::RightPlusSplit),
            "cutout" => Ok(SearchVariant::CutOutCenter),
            "compact" => Ok(SearchVariant::CutOutCompact),
            other => Err(Error::domain(format!(
                "unknown search variant `{other}` (expected rightplus, cutout or compact)"
            ))),
        }
    }
}

/// Binary search over a sorted (non-decreasing) slice. Returns an index
/// holding `t`, or `None` when `t` occurs nowhere. Sortedness is a
/// precondition and is not checked here; see [`binary_search_checked`].
pub fn binary_search(a: &[i64], t: i64, variant: SearchVariant) -> Option<usize> {
    binary_search_by_probe(a.len(), |i| a[i], t, variant)
}

/// Like [`binary_search`], but verifies the sortedness precondition first
/// and reports a contract violation instead of searching garbage.
pub fn binary_search_checked(a: &[i64], t: i64, variant: SearchVariant) -> Result<Option<usize>> {
    if let Some(w) = a.windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::Contract(format!(
            "binary_search input is not sorted: a[{w}] > a[{}]", w + 1
        )));
    }
    Ok(binary_search(a, t, variant))
}

/// Probe-based form of the search: the element at index `i` is obtained
/// by calling `probe(i)`. This is what lets tests interpose an
/// access-recording wrapper between the loop and the data.
pub fn binary_search_by_probe(
    len: usize,
    mut probe: impl FnMut(usize) -> i64,
    t: i64,
    variant: SearchVariant,
) -> Option<usize> {
    let total = i64::try_from(len).expect("slice length fits the index type");
    match variant {
        SearchVariant::RightPlusSplit => {
            if total <= 0 {
                return None;
            }
            let mut b = 0i64;
            let mut n = total;
            while n > 1 {
                let p = split_based(b, n, SplitPolicy::RightPlus)
                    .expect("frame stays within the input");
                // The Right+ right half is never empty, so its first
                // element always exists.
                let rs = p.right.lo();
                if probe(rs as usize) > t {
                    n = p.left.len();
                } else {
                    b = rs;
                    n = p.right.len();
                }
            }
            // n == 1: check the only remaining element.
            if probe(b as usize) == t {
                Some(b as usize)
            } else {
                None
            }
        }
        SearchVariant::CutOutCenter => {
            let mut b = 0i64;
            let mut n = total;
            while n > 0 {
                let p = split_based(b, n, SplitPolicy::CutRight)
                    .expect("frame stays within the input");
                let r = p.excluded.expect("cut of a non-empty frame");
                let v = probe(r as usize);
                if v == t {
                    return Some(r as usize);
                }
                if v < t {
                    b = p.right.lo();
                    n = p.right.len();
                } else {
                    n = p.left.len();
                }
            }
            None
        }
        SearchVariant::CutOutCompact => {
            let mut b = 0i64;
            let mut n = total;
            while n > 0 {
                let r = split_based(b, n, SplitPolicy::CutRight)
                    .expect("frame stays within the input")
                    .excluded
                    .expect("cut of a non-empty frame");
                let v = probe(r as usize);
                if v == t {
                    return Some(r as usize);
                }
                if v < t {
                    b = r + 1;
                    // Stepping past the cut shrinks the frame by one; the
                    // shared halving below then leaves (n-1)/2, the exact
                    // length of the right side.
                    n -= 1;
                }
                n /= 2;
            }
            None
        }
    }
}

/// Merge sort using the Left+ split, so both halves are non-empty for
/// `n >= 2` and no center element is orphaned.
pub fn merge_sort(a: &[i64]) -> Vec<i64> {
    let mut out = a.to_vec();
    msort(&mut out);
    out
}

fn msort(a: &mut [i64]) {
    let n = a.len() as i64;
    if n <= 1 {
        return;
    }
    let p = split_n(n, SplitPolicy::LeftPlus).expect("length is non-negative");
    let mid = p.right.lo() as usize;
    let (left, right) = a.split_at_mut(mid);
    msort(left);
    msort(right);
    let mut merged = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        if left[i] <= right[j] {
            merged.push(left[i]);
            i += 1;
        } else {
            merged.push(right[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&left[i..]);
    merged.extend_from_slice(&right[j..]);
    a.copy_from_slice(&merged);
}

/// Quicksort with a first-element pivot. The recursion converts the pivot
/// position `k` into the two sub-frame dimensions: first a frame of
/// length `k`, then the frame starting at `k + 1` with length `n - k - 1`.
pub fn quicksort(a: &[i64]) -> Vec<i64> {
    let mut out = a.to_vec();
    qsort(&mut out);
    out
}

fn qsort(a: &mut [i64]) {
    let n = a.len();
    if n == 0 {
        return;
    }
    let t = a[0];
    let mut k = 0usize;
    for i in 1..n {
        if a[i] < t {
            a.swap(k, i);
            k += 1;
            a.swap(k, i);
        }
    }
    a[k] = t;
    let (left, rest) = a.split_at_mut(k);
    qsort(left);
    qsort(&mut rest[1..]);
}

/// Indices `j` such that everything left of `j` is `<= a[j]` and
/// everything right of `j` is `>= a[j]`, in ascending order. Single pass
/// over a precomputed suffix minimum.
pub fn chop_points(a: &[i64]) -> Vec<usize> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let mut suffix_min = vec![0i64; n];
    suffix_min[n - 1] = a[n - 1];
    for j in (0..n - 1).rev() {
        suffix_min[j] = a[j].min(suffix_min[j + 1]);
    }
    let mut out = Vec::new();
    let mut prefix_max = i64::MIN;
    for j in 0..n {
        let right_ok = j + 1 >= n || suffix_min[j + 1] >= a[j];
        if prefix_max <= a[j] && right_ok {
            out.push(j);
        }
        prefix_max = prefix_max.max(a[j]);
    }
    out
}

/// Whether some word (maximal run of non-space characters) crosses the
/// center of the text. One expression covers both parities: every
/// position `p` with `n/2 - 1 <= p <= (n+1)/2` must be non-space, which
/// is two positions when `n` is even and three when odd. Texts shorter
/// than two characters have nothing to cross.
pub fn word_crosses_center(text: &str) -> bool {
    let chars: Vec<char> = text.chars().collect();
    let n = chars.len() as i64;
    if n < 2 {
        return false;
    }
    (n / 2 - 1..=(n + 1) / 2).all(|p| chars[p as usize] != ' ')
}
