//! Integer division semantics and the range-expression DSL.
//!
//! Index formulas such as `(n+1)/2` or `n/2-1` change meaning depending on
//! whether `/` rounds toward negative infinity (floor, Python style) or
//! toward zero (truncation, C style). The two agree on non-negative
//! operands and diverge on cases like `(-1)/2`. This module parses such
//! formulas, evaluates them under either semantics, and decides claimed
//! equivalences by exhaustive sweep over a finite domain of frame sizes.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := factor (("*"|"/") factor)* ;
//! factor := integer | "n" | "s" | "b" | "e" | "m" | "(" expr ")" ;
//! range  := expr ("<="|"<") "i" ("<="|"<") expr ;
//! ```
//!
//! Only `i` may be the bound index variable; `n`, `s`, `b`, `e`, `m` are
//! frame parameters, with `s = n - 1`, `e = b + n - 1`, `m = b + e` always
//! derived from `n` and `b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::range::{make_range, narrow, BoundSpec, Index, Range};

/// Which integer-division semantics `/` uses during evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivMode {
    /// Quotient rounded toward negative infinity: `(-1)/2 = -1`.
    Floor,
    /// Quotient rounded toward zero: `(-1)/2 = 0`.
    Trunc,
}

impl fmt::Display for DivMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivMode::Floor => write!(f, "floor"),
            DivMode::Trunc => write!(f, "trunc"),
        }
    }
}

/// Integer division of `a` by `d` under the chosen semantics.
///
/// The two modes agree whenever the exact quotient is non-negative or an
/// exact integer; they differ by one on negative non-exact quotients.
pub fn idiv(a: Index, d: Index, mode: DivMode) -> Result<Index> {
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    if a == i64::MIN && d == -1 {
        return Err(Error::Overflow("idiv"));
    }
    let q = a / d;
    let r = a % d;
    match mode {
        DivMode::Trunc => Ok(q),
        // Truncation rounds toward zero; push down by one when the exact
        // quotient is negative and not exact.
        DivMode::Floor => Ok(if r != 0 && (r < 0) != (d < 0) { q - 1 } else { q }),
    }
}

/// Frame variables an expression may mention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    N,
    S,
    B,
    E,
    M,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::S => "s",
            Var::B => "b",
            Var::E => "e",
            Var::M => "m",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

/// Parsed arithmetic expression over the frame variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(i64),
    Var(Var),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8, right_operand: bool) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(v) => write!(f, "{}", v.name()),
            Expr::Bin(op, l, r) => {
                let prec = op.precedence();
                // A right operand of equal precedence keeps its parentheses
                // so printing and reparsing preserve the tree shape.
                let needs_parens = prec < parent || (prec == parent && right_operand);
                if needs_parens {
                    write!(f, "(")?;
                }
                l.fmt_prec(f, prec, false)?;
                write!(f, "{}", op.symbol())?;
                r.fmt_prec(f, prec, true)?;
                if needs_parens {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0, false)
    }
}

/// Comparison relation on one side of a range expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    /// `<=`
    Le,
    /// `<`
    Lt,
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rel::Le => write!(f, "<="),
            Rel::Lt => write!(f, "<"),
        }
    }
}

/// A bound-index description `low lowRel i highRel high`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RangeExpr {
    pub low: Expr,
    pub low_rel: Rel,
    pub high_rel: Rel,
    pub high: Expr,
}

impl fmt::Display for RangeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} i {} {}", self.low, self.low_rel, self.high_rel, self.high)
    }
}

/// Values for the frame parameters. Only `n` and `b` are free; `s`, `e`
/// and `m` are always derived (`s = n-1`, `e = b+n-1`, `m = b+e`) so an
/// environment can never be internally inconsistent. `n` may be negative
/// here, unlike in the splitter: the divergence of the two division modes
/// at `n = -1` is part of what the sweeps demonstrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bindings {
    pub n: i64,
    pub b: i64,
}

impl Bindings {
    pub fn new(n: i64) -> Self {
        Bindings { n, b: 0 }
    }

    pub fn with_base(n: i64, b: i64) -> Self {
        Bindings { n, b }
    }

    fn lookup(&self, var: Var) -> Result<i64> {
        let wide = match var {
            Var::N => self.n as i128,
            Var::B => self.b as i128,
            Var::S => self.n as i128 - 1,
            Var::E => self.b as i128 + self.n as i128 - 1,
            Var::M => 2 * self.b as i128 + self.n as i128 - 1,
        };
        narrow(wide, "derived frame variable")
    }
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Le,
    Lt,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Parse { position: pos, message: message.into() }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let value: i64 = text
                        .parse()
                        .map_err(|_| self.error(start, format!("integer literal `{text}` out of range")))?;
                    out.push((start, Token::Int(value)));
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((start, Token::Ident(text.to_string())));
                }
                b'+' => {
                    self.pos += 1;
                    out.push((start, Token::Plus));
                }
                b'-' => {
                    self.pos += 1;
                    out.push((start, Token::Minus));
                }
                b'*' => {
                    self.pos += 1;
                    out.push((start, Token::Star));
                }
                b'/' => {
                    self.pos += 1;
                    out.push((start, Token::Slash));
                }
                b'(' => {
                    self.pos += 1;
                    out.push((start, Token::LParen));
                }
                b')' => {
                    self.pos += 1;
                    out.push((start, Token::RParen));
                }
                b'<' => {
                    if self.pos + 1 < self.src.len() && self.src[self.pos + 1] == b'=' {
                        self.pos += 2;
                        out.push((start, Token::Le));
                    } else {
                        self.pos += 1;
                        out.push((start, Token::Lt));
                    }
                }
                other => {
                    return Err(self.error(start, format!("unexpected character `{}`", other as char)));
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        let tokens = Lexer::new(src).tokens()?;
        Ok(Parser { tokens, cursor: 0, end: src.len() })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.cursor).map_or(self.end, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        if tok.is_some() {
            self.cursor += 1;
        }
        tok
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.here(), message: message.into() }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Token::Plus) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => break,
            };
            self.advance();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Some(Token::Star) => BinOp::Mul,
                Some(Token::Slash) => BinOp::Div,
                _ => break,
            };
            self.advance();
            let rhs = self.factor()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let position = self.here();
        match self.advance() {
            Some(Token::Int(v)) => Ok(Expr::Int(v)),
            // A minus in operand position introduces a negative literal;
            // there is no general unary minus.
            Some(Token::Minus) => match self.advance() {
                Some(Token::Int(v)) => Ok(Expr::Int(-v)),
                _ => Err(Error::Parse {
                    position,
                    message: "`-` must be followed by an integer literal".into(),
                }),
            },
            Some(Token::Ident(name)) => match name.as_str() {
                "n" => Ok(Expr::Var(Var::N)),
                "s" => Ok(Expr::Var(Var::S)),
                "b" => Ok(Expr::Var(Var::B)),
                "e" => Ok(Expr::Var(Var::E)),
                "m" => Ok(Expr::Var(Var::M)),
                other => Err(Error::Parse {
                    position,
                    message: format!("unknown identifier `{other}`"),
                }),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.advance() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.error("expected `)`")),
                }
            }
            Some(tok) => Err(Error::Parse {
                position,
                message: format!("expected a value, found {tok:?}"),
            }),
            None => Err(Error::Parse { position, message: "unexpected end of input".into() }),
        }
    }

    fn rel(&mut self) -> Result<Rel> {
        match self.advance() {
            Some(Token::Le) => Ok(Rel::Le),
            Some(Token::Lt) => Ok(Rel::Lt),
            _ => Err(self.error("expected `<` or `<=`")),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.cursor == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error("trailing input after expression"))
        }
    }
}

/// Parses an arithmetic expression over `n`, `s`, `b`, `e`, `m`.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a range expression `<expr> (<=|<) i (<=|<) <expr>`.
pub fn parse_range(text: &str) -> Result<RangeExpr> {
    let mut p = Parser::new(text)?;
    let low = p.expr()?;
    let low_rel = p.rel()?;
    let position = p.here();
    match p.advance() {
        Some(Token::Ident(name)) if name == "i" => {}
        _ => {
            return Err(Error::Parse {
                position,
                message: "index variable must be i".into(),
            })
        }
    }
    let high_rel = p.rel()?;
    let high = p.expr()?;
    p.finish()?;
    Ok(RangeExpr { low, low_rel, high_rel, high })
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluates an expression bottom-up; every `/` goes through [`idiv`] with
/// the given mode, and `+`, `-`, `*` are overflow-checked.
pub fn eval_expr(e: &Expr, env: &Bindings, mode: DivMode) -> Result<i64> {
    match e {
        Expr::Int(v) => Ok(*v),
        Expr::Var(v) => env.lookup(*v),
        Expr::Bin(op, l, r) => {
            let a = eval_expr(l, env, mode)?;
            let b = eval_expr(r, env, mode)?;
            match op {
                BinOp::Add => a.checked_add(b).ok_or(Error::Overflow("addition")),
                BinOp::Sub => a.checked_sub(b).ok_or(Error::Overflow("subtraction")),
                BinOp::Mul => a.checked_mul(b).ok_or(Error::Overflow("multiplication")),
                BinOp::Div => idiv(a, b, mode),
            }
        }
    }
}

/// Evaluates both bounds of a range expression and normalizes the result
/// to a half-open [`Range`] via [`make_range`].
pub fn eval_range(re: &RangeExpr, env: &Bindings, mode: DivMode) -> Result<Range> {
    let low = eval_expr(&re.low, env, mode)?;
    let high = eval_expr(&re.high, env, mode)?;
    let lo = match re.low_rel {
        Rel::Le => BoundSpec::inclusive(low),
        Rel::Lt => BoundSpec::exclusive(low),
    };
    let hi = match re.high_rel {
        Rel::Le => BoundSpec::inclusive(high),
        Rel::Lt => BoundSpec::exclusive(high),
    };
    make_range(lo, hi)
}

// ---------------------------------------------------------------------------
// Equivalence sweeps
// ---------------------------------------------------------------------------

/// What one side of a comparison produced at a particular binding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Value(i64),
    Span(Range),
    Failed(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Value(v) => write!(f, "{v}"),
            Outcome::Span(r) => write!(f, "{r}"),
            Outcome::Failed(e) => write!(f, "error: {e}"),
        }
    }
}

/// One binding where the two sides disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: i64,
    pub k: Option<i64>,
    pub lhs: Outcome,
    pub rhs: Outcome,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "n={} k={}: {} vs {}", self.n, k, self.lhs, self.rhs),
            None => write!(f, "n={}: {} vs {}", self.n, self.lhs, self.rhs),
        }
    }
}

/// Counterexamples kept per sweep; the failure count stays exact.
pub const COUNTEREXAMPLE_CAP: usize = 10;

/// Result of an exhaustive sweep over a finite binding domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub holds: bool,
    pub checked: u64,
    pub total_failures: u64,
    /// At most [`COUNTEREXAMPLE_CAP`] entries; `total_failures` is exact.
    pub counterexamples: Vec<Counterexample>,
}

impl EquivalenceReport {
    fn new() -> Self {
        EquivalenceReport { holds: true, checked: 0, total_failures: 0, counterexamples: Vec::new() }
    }

    fn record(&mut self, agree: bool, make: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !agree {
            self.holds = false;
            self.total_failures += 1;
            if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
                self.counterexamples.push(make());
            }
        }
    }
}

fn outcome_of_expr(e: &Expr, env: &Bindings, mode: DivMode) -> Outcome {
    match eval_expr(e, env, mode) {
        Ok(v) => Outcome::Value(v),
        Err(err) => Outcome::Failed(err.to_string()),
    }
}

fn outcome_of_range(re: &RangeExpr, env: &Bindings, mode: DivMode) -> Outcome {
    match eval_range(re, env, mode) {
        Ok(r) => Outcome::Span(r),
        Err(err) => Outcome::Failed(err.to_string()),
    }
}

fn outcomes_agree(lhs: &Outcome, rhs: &Outcome) -> bool {
    match (lhs, rhs) {
        (Outcome::Value(a), Outcome::Value(b)) => a == b,
        // Ranges compare as the index sets they denote.
        (Outcome::Span(a), Outcome::Span(b)) => a.same_set(b),
        // An evaluation failure can never certify equivalence.
        _ => false,
    }
}

/// Sweeps `n` over the inclusive domain and compares the two expressions'
/// values under the given mode. Evaluation errors count as disagreements.
pub fn check_expr_equiv(
    lhs: &Expr,
    rhs: &Expr,
    n_domain: std::ops::RangeInclusive<i64>,
    mode: DivMode,
) -> EquivalenceReport {
    let mut report = EquivalenceReport::new();
    for n in n_domain {
        let env = Bindings::new(n);
        let a = outcome_of_expr(lhs, &env, mode);
        let b = outcome_of_expr(rhs, &env, mode);
        let agree = outcomes_agree(&a, &b);
        report.record(agree, || Counterexample { n, k: None, lhs: a, rhs: b });
    }
    report
}

/// Sweeps `n` and compares the index sets denoted by two range
/// expressions under the given mode.
pub fn check_range_equiv(
    lhs: &RangeExpr,
    rhs: &RangeExpr,
    n_domain: std::ops::RangeInclusive<i64>,
    mode: DivMode,
) -> EquivalenceReport {
    let mut report = EquivalenceReport::new();
    for n in n_domain {
        let env = Bindings::new(n);
        let a = outcome_of_range(lhs, &env, mode);
        let b = outcome_of_range(rhs, &env, mode);
        let agree = outcomes_agree(&a, &b);
        report.record(agree, || Counterexample { n, k: None, lhs: a, rhs: b });
    }
    report
}

/// The built-in identities the split tables lean on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `floor(n/2) + floor((n+1)/2) = n`, the one-range memorization rule.
    Halves,
    /// `floor((n+1)/2) - floor((n-1)/2) = 1` for `n > 0`.
    Connecting,
    /// `sum_{r=0}^{k-1} floor((n+r)/k) = n`, the k-way section sizes.
    KwaySum,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Halves => "halves",
            Identity::Connecting => "connecting",
            Identity::KwaySum => "kway",
        }
    }
}

impl std::str::FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "halves" => Ok(Identity::Halves),
            "connecting" => Ok(Identity::Connecting),
            "kway" => Ok(Identity::KwaySum),
            other => Err(Error::domain(format!(
                "unknown identity `{other}` (expected halves, connecting or kway)"
            ))),
        }
    }
}

/// Sweeps one of the built-in identities over its domain. Divisions are
/// floor divisions, matching the identities' statements. The connecting
/// identity only holds for `n > 0`, so its domain is clipped there; the
/// k-way identity needs `k >= 1` and clips likewise.
pub fn check_identity(
    which: Identity,
    n_domain: std::ops::RangeInclusive<i64>,
    k_domain: Option<std::ops::RangeInclusive<i64>>,
) -> EquivalenceReport {
    let mut report = EquivalenceReport::new();
    let fdiv = |a: i64, d: i64| idiv(a, d, DivMode::Floor).expect("divisor is constant");
    match which {
        Identity::Halves => {
            for n in n_domain {
                let total = fdiv(n, 2) + fdiv(n + 1, 2);
                report.record(total == n, || Counterexample {
                    n,
                    k: None,
                    lhs: Outcome::Value(total),
                    rhs: Outcome::Value(n),
                });
            }
        }
        Identity::Connecting => {
            let lo = (*n_domain.start()).max(1);
            for n in lo..=*n_domain.end() {
                let diff = fdiv(n + 1, 2) - fdiv(n - 1, 2);
                report.record(diff == 1, || Counterexample {
                    n,
                    k: None,
                    lhs: Outcome::Value(diff),
                    rhs: Outcome::Value(1),
                });
            }
        }
        Identity::KwaySum => {
            let k_domain = k_domain.unwrap_or(1..=64);
            let k_lo = (*k_domain.start()).max(1);
            for n in n_domain {
                for k in k_lo..=*k_domain.end() {
                    let total: i64 = (0..k).map(|r| fdiv(n + r, k)).sum();
                    report.record(total == n, || Counterexample {
                        n,
                        k: Some(k),
                        lhs: Outcome::Value(total),
                        rhs: Outcome::Value(n),
                    });
                }
            }
        }
    }
    report
}
