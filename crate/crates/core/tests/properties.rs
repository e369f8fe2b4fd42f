//! Property tests and exhaustive small-domain sweeps for the module
//! invariants.

use proptest::prelude::*;

use splitkit::algorithms::{
    binary_search, merge_sort, quicksort, word_crosses_center, SearchVariant,
};
use splitkit::intdiv::{
    self, idiv, parse_expr, parse_range, Bindings, BinOp, DivMode, Expr, Var,
};
use splitkit::oracle::{brute_word_cross, linear_search, oracle_split};
use splitkit::range::{
    drop_back, drop_front, left_window, make_range, mirror_index, rebase, right_window,
    BoundSpec, Range,
};
use splitkit::splitter::{
    center_band, center_window, kway_split, split_based, split_n, SplitPolicy,
};

// ---------------------------------------------------------------------------
// Range algebra
// ---------------------------------------------------------------------------

proptest! {
    /// Length equals the number of members, counted over a window that
    /// strictly contains every candidate.
    #[test]
    fn length_equals_membership_count(lo in -1000i64..=1000, span in 0i64..=200) {
        let r = Range::new(lo, lo + span).unwrap();
        let members = (-1301i64..=1301).filter(|&i| r.contains(i)).count() as i64;
        prop_assert_eq!(members, r.len());
    }

    /// The four bound styles adjust the count by +1 / 0 / 0 / -1, bottoming
    /// out at empty.
    #[test]
    fn make_range_matches_the_adjustment_table(u in -500i64..=500, w in -500i64..=500,
                                               lo_incl: bool, hi_incl: bool) {
        let r = make_range(
            BoundSpec { value: u, inclusive: lo_incl },
            BoundSpec { value: w, inclusive: hi_incl },
        ).unwrap();
        let adjustment = match (lo_incl, hi_incl) {
            (true, true) => 1,
            (true, false) | (false, true) => 0,
            (false, false) => -1,
        };
        prop_assert_eq!(r.len(), (w - u + adjustment).max(0));
    }

    #[test]
    fn drop_front_and_drop_back_commute(lo in -100i64..=100, span in 0i64..=60,
                                        g_seed in 0i64..=1000, h_seed in 0i64..=1000) {
        let r = Range::new(lo, lo + span).unwrap();
        // Derive g and h so both preconditions hold by construction.
        let g = g_seed % (span + 1);
        let h = h_seed % (span - g + 1);
        let a = drop_back(drop_front(r, g).unwrap(), h).unwrap();
        let b = drop_front(drop_back(r, h).unwrap(), g).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn windows_always_have_width_k(p in -1000i64..=1000, k in 0i64..=100, include: bool) {
        prop_assert_eq!(left_window(p, k, include).unwrap().len(), k);
        prop_assert_eq!(right_window(p, k, include).unwrap().len(), k);
    }

    #[test]
    fn mirror_is_an_involution(n in 1i64..=2000, seed in 0i64..=1_000_000) {
        let i = seed % n;
        prop_assert_eq!(mirror_index(mirror_index(i, n).unwrap(), n).unwrap(), i);
    }

    #[test]
    fn rebase_preserves_length(lo in -500i64..=500, span in 0i64..=500, b in -10_000i64..=10_000) {
        let r = Range::new(lo, lo + span).unwrap();
        prop_assert_eq!(rebase(r, b).unwrap().len(), r.len());
    }
}

// ---------------------------------------------------------------------------
// Integer division laws
// ---------------------------------------------------------------------------

#[test]
fn modes_agree_on_positives_and_exact_multiples() {
    for a in -1000i64..=1000 {
        for d in [1i64, 2, 3, 7] {
            let floor = idiv(a, d, DivMode::Floor).unwrap();
            let trunc = idiv(a, d, DivMode::Trunc).unwrap();
            if a >= 0 || a % d == 0 {
                assert_eq!(floor, trunc, "a={a} d={d}");
            } else {
                assert_eq!(floor + 1, trunc, "a={a} d={d}");
            }
        }
    }
}

proptest! {
    /// Floor law for positive divisors: d*q <= a < d*q + d.
    #[test]
    fn floor_quotient_brackets_the_dividend(a in -1_000_000i64..=1_000_000, d in 1i64..=1000) {
        let q = idiv(a, d, DivMode::Floor).unwrap();
        prop_assert!(d * q <= a);
        prop_assert!(a < d * q + d);
    }

    /// Truncation commutes with absolute value and keeps the sign of the
    /// exact quotient.
    #[test]
    fn trunc_matches_magnitude_division(a in -1_000_000i64..=1_000_000, d in -1000i64..=1000) {
        prop_assume!(d != 0);
        let q = idiv(a, d, DivMode::Trunc).unwrap();
        prop_assert_eq!(q.abs(), idiv(a.abs(), d.abs(), DivMode::Trunc).unwrap());
        if q != 0 {
            prop_assert_eq!(q.signum(), a.signum() * d.signum());
        }
    }
}

// ---------------------------------------------------------------------------
// Parser round-trips
// ---------------------------------------------------------------------------

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-20i64..=20).prop_map(Expr::Int),
        prop_oneof![
            Just(Var::N),
            Just(Var::S),
            Just(Var::B),
            Just(Var::E),
            Just(Var::M)
        ]
        .prop_map(Expr::Var),
    ];
    leaf.prop_recursive(4, 64, 2, |inner| {
        (
            prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)],
            inner.clone(),
            inner,
        )
            .prop_map(|(op, l, r)| Expr::Bin(op, Box::new(l), Box::new(r)))
    })
}

proptest! {
    /// Printing an arbitrary tree and reparsing it yields the same tree,
    /// so print-then-parse is a fixed point on everything printable.
    #[test]
    fn pretty_print_then_parse_is_identity(expr in arb_expr()) {
        let printed = expr.to_string();
        let reparsed = parse_expr(&printed).unwrap();
        prop_assert_eq!(reparsed, expr);
    }
}

// ---------------------------------------------------------------------------
// Splitter laws beyond the oracle sweep
// ---------------------------------------------------------------------------

/// The halves identity that lets one memorized range generate the whole
/// policy table.
#[test]
fn halves_identity_on_a_medium_domain() {
    assert!(intdiv::check_identity(intdiv::Identity::Halves, 0..=100_000, None).holds);
}

/// Dropping the first element of a Left+ split yields the Right+ split of
/// the shrunken frame, and symmetrically for Right+ minus its last.
#[test]
fn left_plus_and_right_plus_are_dual() {
    for n in 1i64..=2000 {
        let lp = split_n(n, SplitPolicy::LeftPlus).unwrap();
        let rp_shrunk = split_based(1, n - 1, SplitPolicy::RightPlus).unwrap();
        let lp_minus_first = drop_front(lp.left, 1).unwrap();
        assert!(lp_minus_first.same_set(&rp_shrunk.left), "n={n}");
        assert!(lp.right.same_set(&rp_shrunk.right), "n={n}");

        let rp = split_n(n, SplitPolicy::RightPlus).unwrap();
        let lp_shrunk = split_n(n - 1, SplitPolicy::LeftPlus).unwrap();
        let rp_minus_last = drop_back(rp.right, 1).unwrap();
        assert!(rp.left.same_set(&lp_shrunk.left), "n={n}");
        assert!(rp_minus_last.same_set(&lp_shrunk.right), "n={n}");
    }
}

/// Reflection maps the Natural left half onto the right half, one-to-one.
#[test]
fn mirror_maps_natural_left_half_onto_right_half() {
    for n in 0i64..=2000 {
        let p = split_n(n, SplitPolicy::Natural).unwrap();
        assert_eq!(p.left.len(), p.right.len());
        for i in p.left.iter() {
            let m = mirror_index(i, n).unwrap();
            assert!(p.right.contains(m), "n={n} i={i} -> {m}");
        }
        // Involution plus membership on equal-sized finite sets gives a
        // bijection.
        for i in p.right.iter() {
            assert!(p.left.contains(mirror_index(i, n).unwrap()));
        }
    }
}

#[test]
fn center_band_is_the_gap_of_the_natural_split() {
    for n in 0i64..=2000 {
        let p = split_n(n, SplitPolicy::Natural).unwrap();
        let band = center_band(n).unwrap();
        assert_eq!(band.lo(), p.left.hi());
        assert_eq!(band.len(), if n % 2 == 1 { 1 } else { 0 });
        if let Some(c) = p.excluded {
            assert!(band.contains(c));
        }
    }
}

#[test]
fn center_window_length_and_symmetry() {
    for n in 0i64..=200 {
        for k in 0i64..=n {
            match center_window(n, k) {
                Ok(w) => {
                    assert_eq!(w.len(), 2 * k + n % 2, "n={n} k={k}");
                    // The window is its own mirror image.
                    for i in w.iter() {
                        assert!(w.contains(mirror_index(i, n).unwrap()), "n={n} k={k} i={i}");
                    }
                }
                Err(_) => {
                    assert!(n / 2 - k < 0 || (n + 1) / 2 + k > n, "n={n} k={k} rejected but fits");
                }
            }
        }
    }
}

#[test]
fn kway_parts_are_monotone_near_equal_and_cover() {
    for k in 1i64..=64 {
        for n in 0i64..=500 {
            let parts = kway_split(n, k).unwrap();
            assert_eq!(parts.len(), k as usize);
            assert_eq!(parts.iter().map(Range::len).sum::<i64>(), n);
            assert_eq!(parts[0].lo(), 0);
            assert_eq!(parts.last().unwrap().hi(), n);
            for w in parts.windows(2) {
                assert_eq!(w[0].hi(), w[1].lo());
                assert!(w[0].len() <= w[1].len());
            }
            let sizes: Vec<i64> = parts.iter().map(Range::len).collect();
            let (min, max) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            assert!(max - min <= 1, "n={n} k={k} sizes {sizes:?}");
        }
    }
}

proptest! {
    /// The four coordinate forms agree after rebasing, on random frames.
    #[test]
    fn coordinate_forms_agree(b in -2000i64..=2000, n in 1i64..=300) {
        for policy in SplitPolicy::ALL {
            let direct = split_n(n, policy).unwrap();
            let based = split_based(b, n, policy).unwrap();
            let shifted = splitkit::splitter::split_be(b, b + n - 1, policy).unwrap();
            let rebased = Range::new(
                direct.left.lo() + b, direct.left.hi() + b).unwrap();
            prop_assert!(based.left.same_set(&rebased));
            prop_assert!(based.same_coverage(&shifted));
            if matches!(policy, SplitPolicy::Natural | SplitPolicy::RightPlus | SplitPolicy::CutRight) {
                let open = splitkit::splitter::split_bex(b, b + n, policy).unwrap();
                prop_assert!(based.same_coverage(&open));
            }
        }
    }

    /// The parity-built oracle and the formula splitter agree on random
    /// frames too, not just the exhaustive sweep.
    #[test]
    fn oracle_and_formulas_agree(n in 0i64..=100_000) {
        for policy in SplitPolicy::ALL {
            let a = split_n(n, policy).unwrap();
            let b = oracle_split(n, policy).unwrap();
            prop_assert!(a.same_coverage(&b), "n={} {}: {} vs {}", n, policy, a, b);
        }
    }
}

// ---------------------------------------------------------------------------
// Algorithm agreement on random inputs
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn sorts_match_the_standard_library(a in prop::collection::vec(-50i64..=50, 0..=128)) {
        let mut expected = a.clone();
        expected.sort_unstable();
        prop_assert_eq!(merge_sort(&a), expected.clone());
        prop_assert_eq!(quicksort(&a), expected);
    }

    #[test]
    fn searches_agree_with_linear_scan(mut a in prop::collection::vec(-8i64..=8, 0..=64),
                                       t in -9i64..=9) {
        a.sort_unstable();
        let expected = linear_search(&a, t);
        for v in SearchVariant::ALL {
            let got = binary_search(&a, t, v);
            prop_assert_eq!(got.is_some(), expected.is_some(), "{}", v);
            if let Some(r) = got {
                prop_assert_eq!(a[r], t);
            }
        }
    }

    #[test]
    fn word_cross_matches_brute_force(pattern in prop::collection::vec(prop::bool::ANY, 0..=16)) {
        let text: String = pattern.iter().map(|&w| if w { 'a' } else { ' ' }).collect();
        prop_assert_eq!(word_crosses_center(&text), brute_word_cross(&text));
    }
}

/// The mirror-derived boundary forms denote the same index sets as the
/// selected forms, for every frame size under floor division.
#[test]
fn symmetric_forms_match_the_selected_forms() {
    let pairs = [
        // Natural left half, written from the right end via n-1-i.
        ("0 <= i <= n-1-(n+1)/2", "0 <= i < n/2"),
        ("0 <= i < n-(n+1)/2", "0 <= i < n/2"),
        // Left+ left half.
        ("0 <= i < n-n/2", "0 <= i < (n+1)/2"),
        // Right+ right half, strict form and its adjusted twin.
        ("n-1-(n+1)/2 < i < n", "n/2 <= i < n"),
        ("n-n/2 <= i < n", "(n+1)/2 <= i < n"),
    ];
    for (lhs, rhs) in pairs {
        let report = splitkit::intdiv::check_range_equiv(
            &parse_range(lhs).unwrap(),
            &parse_range(rhs).unwrap(),
            0..=2000,
            DivMode::Floor,
        );
        assert!(report.holds, "{lhs} vs {rhs}: {:?}", report.counterexamples);
    }
}

/// `(b+e)/2 = b + (e-b)/2 = b + s/2` under floor division, for any base;
/// truncation breaks the first equality once `b + e` goes negative.
#[test]
fn midpoint_forms_connect_m_and_s() {
    let m_form = parse_expr("(b+e)/2").unwrap();
    let offset_form = parse_expr("b+(e-b)/2").unwrap();
    let s_form = parse_expr("b+s/2").unwrap();
    for b in -100i64..=100 {
        for n in 1i64..=100 {
            let env = Bindings::with_base(n, b);
            let m = intdiv::eval_expr(&m_form, &env, DivMode::Floor).unwrap();
            let off = intdiv::eval_expr(&offset_form, &env, DivMode::Floor).unwrap();
            let s = intdiv::eval_expr(&s_form, &env, DivMode::Floor).unwrap();
            assert_eq!(m, off, "b={b} n={n}");
            assert_eq!(m, s, "b={b} n={n}");
        }
    }
    let env = Bindings::with_base(2, -2);
    let m = intdiv::eval_expr(&m_form, &env, DivMode::Trunc).unwrap();
    let off = intdiv::eval_expr(&offset_form, &env, DivMode::Trunc).unwrap();
    assert_ne!(m, off);
}

/// The range-expression evaluator and the splitter agree policy by policy
/// when the boundary sources are evaluated at explicit sizes.
#[test]
fn boundary_sources_evaluate_to_the_split_components() {
    for spec in splitkit::splitter::POLICY_FORMULAS {
        let left = parse_range(spec.left).unwrap();
        let right = parse_range(spec.right).unwrap();
        for n in 0i64..=512 {
            let env = Bindings::new(n);
            let p = split_n(n, spec.policy).unwrap();
            let l = intdiv::eval_range(&left, &env, DivMode::Floor).unwrap();
            let r = intdiv::eval_range(&right, &env, DivMode::Floor).unwrap();
            assert!(p.left.same_set(&l));
            assert!(p.right.same_set(&r));
        }
    }
}
