//! Query evaluation and the oracle cross-check.

use srep::oracle::{
    enum_points, enum_up_words, enum_words_over, sem_contains, sem_point_leq, sem_subset, sem_subset_upto,
    sem_subword, sem_up_subword, EnumConfig,
};
use srep::point::closure;
use srep::{wp_canon, ClosedSet, Code, Point, Space, SpaceKind, SrepError};

use crate::diag::{DiagCode, Diagnostic};
use crate::spec::{Query, QueryKind, SpecFile};
use crate::syntax::code_to_string;

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Cross-check every query, not only those marked `check`.
    pub force_check: bool,
    /// Overrides the word length bound of the oracle.
    pub max_len: Option<usize>,
}

impl RunOptions {
    fn config(&self) -> EnumConfig {
        let mut cfg = EnumConfig::default();
        if let Some(n) = self.max_len {
            cfg.max_len = n;
            cfg.max_prefix = n;
        }
        cfg
    }
}

/// The printed result of one query and, when checked, whether the oracle
/// agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub agreement: Option<bool>,
}

impl Outcome {
    pub fn render(&self) -> String {
        match self.agreement {
            None => self.text.clone(),
            Some(true) => format!("{} [AGREE]", self.text),
            Some(false) => format!("{} [DISAGREE]", self.text),
        }
    }
}

enum Value {
    Bool(bool),
    Codes(Vec<Code>),
    Top(ClosedSet),
    Code(Code),
}

fn eval_err(q: &Query, e: SrepError) -> Diagnostic {
    Diagnostic::new(DiagCode::Evaluation, q.line, 1, e.to_string())
}

fn print_set(s: &Space, codes: &[Code]) -> String {
    if codes.is_empty() {
        return "{ }".to_string();
    }
    let items: Vec<String> = codes.iter().map(|c| code_to_string(s, c)).collect();
    format!("{{ {} }}", items.join(" ; "))
}

fn evaluate(q: &Query) -> Result<Value, Diagnostic> {
    let s = &q.space;
    Ok(match &q.kind {
        QueryKind::Leq(a, b) => Value::Bool(s.leq(a, b)),
        QueryKind::Meet(a, b) => Value::Codes(s.meet(a, b).map_err(|e| eval_err(q, e))?.codes().to_vec()),
        QueryKind::Member(p, c) => Value::Bool(srep::point::member(s, p, c).map_err(|e| eval_err(q, e))?),
        QueryKind::Closure(p) => Value::Code(closure(s, p).map_err(|e| eval_err(q, e))?),
        QueryKind::Canon(p) => match s.kind() {
            SpaceKind::Words(x) => Value::Code(Code::Word(wp_canon(x, p))),
            _ => unreachable!("canon is only parsed for words spaces"),
        },
        QueryKind::Top => Value::Top(s.top().clone()),
    })
}

fn render(s: &Space, v: &Value) -> String {
    match v {
        Value::Bool(b) => b.to_string(),
        Value::Codes(cs) => print_set(s, cs),
        Value::Top(t) if t.len() == 1 => code_to_string(s, &t.codes()[0]),
        Value::Top(t) => print_set(s, t.codes()),
        Value::Code(c) => code_to_string(s, c),
    }
}

/// Evaluates a query, running the oracle when the query asks for it or
/// `opts.force_check` is set.
pub fn run_query(q: &Query, opts: &RunOptions) -> Result<Outcome, Diagnostic> {
    let value = evaluate(q)?;
    let text = render(&q.space, &value);
    let agreement = if q.check || opts.force_check {
        Some(oracle_agrees(q, &value, opts)?)
    } else {
        None
    };
    Ok(Outcome { text, agreement })
}

/// The codes a query prints, in output order; empty for boolean results.
pub fn result_codes(q: &Query) -> Result<Vec<Code>, Diagnostic> {
    Ok(match evaluate(q)? {
        Value::Bool(_) => Vec::new(),
        Value::Codes(cs) => cs,
        Value::Top(t) => t.codes().to_vec(),
        Value::Code(c) => vec![c],
    })
}

/// Spaces built from posets by products and sums only.
fn is_finite(s: &Space) -> bool {
    match s.kind() {
        SpaceKind::Base(_) => true,
        SpaceKind::Product(a, b) | SpaceKind::Sum(a, b) => is_finite(a) && is_finite(b),
        _ => false,
    }
}

/// The points the oracle quantifies over, when the space has a finite
/// alphabet.
fn oracle_points(s: &Space, cfg: &EnumConfig) -> Option<Vec<Point>> {
    match s.kind() {
        _ if is_finite(s) => enum_points(s),
        SpaceKind::Pow(x) if is_finite(x) => enum_points(s),
        SpaceKind::Words(x) if is_finite(x) => {
            let letters = enum_points(x)?;
            Some(enum_words_over(&letters, cfg.max_len).into_iter().map(Point::Word).collect())
        }
        SpaceKind::Omega(v, x) if is_finite(x) => {
            let letters = enum_points(x)?;
            Some(
                enum_up_words(&letters, cfg.max_prefix, cfg.max_period, *v)
                    .into_iter()
                    .map(Point::Up)
                    .collect(),
            )
        }
        _ => None,
    }
}

/// Specialization order on points, computed directly.
fn sem_le(s: &Space, p: &Point, q: &Point) -> bool {
    match (s.kind(), p, q) {
        (SpaceKind::Words(x), Point::Word(u), Point::Word(v)) => sem_subword(x, u, v),
        (SpaceKind::Omega(_, x), Point::Up(u), Point::Up(v)) => sem_up_subword(x, u, v),
        (SpaceKind::Pow(x), Point::Set(u), Point::Set(v)) => {
            u.iter().all(|a| v.iter().any(|b| sem_point_leq(x, a, b)))
        }
        _ => sem_point_leq(s, p, q),
    }
}

fn oracle_agrees(q: &Query, value: &Value, opts: &RunOptions) -> Result<bool, Diagnostic> {
    let s = &q.space;
    let cfg = opts.config();
    let points = oracle_points(s, &cfg).ok_or_else(|| {
        Diagnostic::new(
            DiagCode::OracleUnavailable,
            q.line,
            1,
            format!(
                "the oracle only covers finite posets with products and sums, and one words, pow, \
                 fininfwords or infwords layer over them; `{}` is {}",
                q.space_name,
                s.describe()
            ),
        )
    })?;
    let inside = |c: &Code, p: &Point| sem_contains(s, c, p);
    Ok(match (&q.kind, value) {
        (QueryKind::Leq(a, b), Value::Bool(r)) => {
            let sem = match (s.kind(), a, b) {
                (SpaceKind::Words(x), Code::Word(p1), Code::Word(p2)) => match opts.max_len {
                    Some(n) => sem_subset_upto(x, p1, p2, n),
                    None => sem_subset(x, p1, p2),
                },
                _ => points.iter().all(|p| !inside(a, p) || inside(b, p)),
            };
            sem == *r
        }
        (QueryKind::Meet(a, b), Value::Codes(cs)) => points
            .iter()
            .all(|p| (inside(a, p) && inside(b, p)) == cs.iter().any(|c| inside(c, p))),
        (QueryKind::Member(p, c), Value::Bool(r)) => inside(c, p) == *r,
        (QueryKind::Closure(p), Value::Code(c)) => {
            inside(c, p) && points.iter().all(|r| inside(c, r) == sem_le(s, r, p))
        }
        (QueryKind::Canon(p), Value::Code(Code::Word(c))) => match s.kind() {
            SpaceKind::Words(x) => match opts.max_len {
                Some(n) => sem_subset_upto(x, p, c, n) && sem_subset_upto(x, c, p, n),
                None => sem_subset(x, p, c) && sem_subset(x, c, p),
            },
            _ => unreachable!(),
        },
        (QueryKind::Top, Value::Top(t)) => points.iter().all(|p| t.iter().any(|c| inside(c, p))),
        _ => unreachable!("value does not match query"),
    })
}

/// The result of running every query of a spec file.
#[derive(Debug, Clone, Default)]
pub struct Report {
    /// One line per query that evaluated, in file order.
    pub lines: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
    pub disagreements: usize,
}

impl Report {
    /// 0 on success, 1 if any diagnostic was raised, 2 on an oracle
    /// disagreement.
    pub fn exit_code(&self) -> i32 {
        if self.disagreements > 0 {
            2
        } else if !self.diagnostics.is_empty() {
            1
        } else {
            0
        }
    }
}

/// Runs the queries in order, echoing each one before its result.
pub fn run_spec(spec: &SpecFile, opts: &RunOptions) -> Report {
    let mut report = Report::default();
    for q in &spec.queries {
        match run_query(q, opts) {
            Ok(out) => {
                if out.agreement == Some(false) {
                    report.disagreements += 1;
                }
                report.lines.push(format!("{} => {}", q.text, out.render()));
            }
            Err(d) => report.diagnostics.push(d),
        }
    }
    report
}

/// Parses and runs a spec file, rendering stdout lines followed by
/// diagnostics and the exit status, as recorded by golden tests.
pub fn transcript(text: &str, opts: &RunOptions) -> String {
    let (lines, diags, code) = match crate::spec::parse_spec(text) {
        Ok(spec) => {
            let r = run_spec(&spec, opts);
            let code = r.exit_code();
            (r.lines, r.diagnostics, code)
        }
        Err(d) => (Vec::new(), vec![d], 1),
    };
    let mut out = String::new();
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    for d in diags {
        out.push_str(&d.to_string());
        out.push('\n');
    }
    out.push_str(&format!("exit {code}\n"));
    out
}
