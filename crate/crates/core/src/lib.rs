//! Half-open index-range algebra and array splitting, with every boundary
//! formula checked against brute-force reference definitions.
//!
//! Splitting an array "in the middle" hides a surprising amount of
//! off-by-one hazard: integer division rounds, even sizes have no center,
//! `<` and `<=` shift lengths by one, and `(-1)/2` is `-1` or `0`
//! depending on the language. This crate fixes one normal form, the
//! half-open range `[lo, hi)`, and builds everything on top of it:
//!
//! * [`range`]: ranges, bound normalization, windows, rebasing, mirroring.
//! * [`splitter`]: the five division policies (`natural`, `leftplus`,
//!   `rightplus`, `cutleft`, `cutright`) in four coordinate systems, the
//!   center band/window, and balanced k-way splitting.
//! * [`intdiv`]: a small expression DSL over `n, s, b, e, m` with
//!   selectable floor/truncation division, plus exhaustive equivalence
//!   and identity sweeps.
//! * [`algorithms`]: binary-search variants, merge sort, quicksort,
//!   chop-point detection and the word-crossing-center test, all built on
//!   the splitter's arithmetic.
//! * [`oracle`]: independent brute-force definitions and the
//!   verification harness that sweeps the formula-based modules against
//!   them.
//! * [`tables`]: computed models of the landmark and policy tables.
//!
//! ```
//! use splitkit::splitter::{split_n, SplitPolicy};
//!
//! let p = split_n(5, SplitPolicy::Natural).unwrap();
//! assert_eq!(p.to_string(), "natural: left [0, 2), excluded 2, right [3, 5)");
//! ```

pub mod algorithms;
pub mod error;
pub mod intdiv;
pub mod oracle;
pub mod range;
pub mod splitter;
pub mod tables;

pub use error::{Error, Result};
pub use range::{Extent, Index, Range};
pub use splitter::{Partition, SplitPolicy};
