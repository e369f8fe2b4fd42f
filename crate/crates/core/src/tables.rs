//! Models for the reference tables the CLI renders. Every cell is
//! computed on demand: landmark positions come from the splitter and
//! expression cells go through the expression evaluator, so a table can
//! only show what the code actually does.

use crate::error::{Error, Result};
use crate::intdiv::{eval_expr, parse_expr, parse_range, Bindings, DivMode, Rel};
use crate::splitter::{landmarks, PolicyFormulas, SplitPolicy, POLICY_FORMULAS};

/// The expression family that adjusts inside the division: `(n-1)/2`,
/// `n/2`, `(n+1)/2` and their `s = n - 1` counterparts.
pub const SHIFT_THEN_DIV_EXPRS: [&str; 6] =
    ["(n-1)/2", "n/2", "(n+1)/2", "(s-1)/2", "s/2", "(s+1)/2"];

/// The family that adjusts after the division: `n/2-1`, `n/2`, `n/2+1`
/// and the `s` counterparts.
pub const DIV_THEN_SHIFT_EXPRS: [&str; 6] =
    ["n/2-1", "n/2", "n/2+1", "s/2-1", "s/2", "s/2+1"];

/// One labelled cell of a landmark table: a row label (an expression or a
/// landmark name) and the frame position it points at. Positions may fall
/// outside `[0, n)`; that is part of what the tables demonstrate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LandmarkRow {
    pub label: String,
    pub position: i64,
}

/// Where a set of index expressions lands in a frame of `n` elements,
/// next to the frame's landmark positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LandmarkTable {
    pub n: i64,
    pub rows: Vec<LandmarkRow>,
}

/// Evaluates each expression at frame size `n` (floor division) and pairs
/// it with the landmark rows `el`, `c`, `rs`.
pub fn landmark_table(n: i64, exprs: &[&str]) -> Result<LandmarkTable> {
    let marks = landmarks(n)?;
    let mut rows = vec![LandmarkRow { label: "el".into(), position: marks.el }];
    if let Some(c) = marks.center {
        rows.push(LandmarkRow { label: "c".into(), position: c });
    }
    rows.push(LandmarkRow { label: "rs".into(), position: marks.rs });
    let env = Bindings::new(n);
    for src in exprs {
        let expr = parse_expr(src)?;
        rows.push(LandmarkRow {
            label: expr.to_string(),
            position: eval_expr(&expr, &env, DivMode::Floor)?,
        });
    }
    Ok(LandmarkTable { n, rows })
}

/// One row of a policy table: the policy plus its rendered left-half and
/// right-half cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolicyRow {
    pub policy: SplitPolicy,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolicyTable {
    pub title: &'static str,
    pub rows: Vec<PolicyRow>,
}

fn range_cell(src: &str) -> Result<String> {
    // Round-trip through the parser: the cell is what the grammar
    // understood, not the raw constant.
    Ok(parse_range(src)?.to_string())
}

/// The selected boundary expressions per policy, rendered from the same
/// formula set the splitter is pinned to.
pub fn final_table() -> Result<PolicyTable> {
    final_table_from(&POLICY_FORMULAS)
}

pub fn final_table_from(formulas: &[PolicyFormulas]) -> Result<PolicyTable> {
    let rows = formulas
        .iter()
        .map(|spec| {
            Ok(PolicyRow {
                policy: spec.policy,
                left: range_cell(spec.left)?,
                right: range_cell(spec.right)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(PolicyTable { title: "selected ranges", rows })
}

/// The same boundaries as C `for` loops, for the policies whose two
/// bounds are in `lower <= i < upper` shape (all of them here). `CutLeft`
/// is omitted, matching the loop summary's row set.
pub fn loops_table() -> Result<PolicyTable> {
    loops_table_from(&POLICY_FORMULAS)
}

pub fn loops_table_from(formulas: &[PolicyFormulas]) -> Result<PolicyTable> {
    let rows = formulas
        .iter()
        .filter(|spec| spec.policy != SplitPolicy::CutLeft)
        .map(|spec| {
            Ok(PolicyRow {
                policy: spec.policy,
                left: for_loop_cell(spec.left)?,
                right: for_loop_cell(spec.right)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(PolicyTable { title: "for loops", rows })
}

fn for_loop_cell(src: &str) -> Result<String> {
    let re = parse_range(src)?;
    if re.low_rel != Rel::Le || re.high_rel != Rel::Lt {
        return Err(Error::domain(format!(
            "`{src}` is not in `lower <= i < upper` shape"
        )));
    }
    Ok(format!("for (int i = {}; i < {}; i++)", re.low, re.high))
}

/// A table the CLI can render.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableModel {
    Landmark(LandmarkTable),
    Policy(PolicyTable),
}

/// Looks up one of the named reference tables: `t1`/`t2` place the
/// shift-then-divide family in frames of five and six elements, `t3`/`t4`
/// do the same for the divide-then-shift family, `final` and `loops` are
/// the policy boundary summaries.
pub fn table_by_id(id: &str) -> Result<TableModel> {
    match id {
        "t1" => Ok(TableModel::Landmark(landmark_table(5, &SHIFT_THEN_DIV_EXPRS)?)),
        "t2" => Ok(TableModel::Landmark(landmark_table(6, &SHIFT_THEN_DIV_EXPRS)?)),
        "t3" => Ok(TableModel::Landmark(landmark_table(5, &DIV_THEN_SHIFT_EXPRS)?)),
        "t4" => Ok(TableModel::Landmark(landmark_table(6, &DIV_THEN_SHIFT_EXPRS)?)),
        "final" => Ok(TableModel::Policy(final_table()?)),
        "loops" => Ok(TableModel::Policy(loops_table()?)),
        other => Err(Error::domain(format!(
            "unknown table `{other}` (expected t1, t2, t3, t4, final or loops)"
        ))),
    }
}
