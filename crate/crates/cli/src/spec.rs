//! Spec files: poset and space declarations followed by queries.
//!
//! ```text
//! # comment
//! poset C2 { a < b }
//! poset V3 { a < c; b < c }
//! space W = words(C2)
//! space O = infwords(product(C2, V3))
//! leq W : a? b? <= {a,b}*
//! check meet W : a? /\ b?
//! member O : (a, c).((b, a))^w in (eps, {(b, c)})
//! closure O : ((a, a))^w
//! canon W : a? {a,b}*
//! top O
//! ```

use std::collections::HashMap;

use srep::{Code, FinitePoset, Point, Space, SpaceKind, WordProduct};

use crate::diag::{DiagCode, Diagnostic};
use crate::syntax::{parse_code, parse_point, parse_product, Cursor, PResult, RESERVED};

#[derive(Debug, Clone)]
pub enum QueryKind {
    Leq(Code, Code),
    Meet(Code, Code),
    Member(Point, Code),
    Closure(Point),
    Canon(WordProduct),
    Top,
}

#[derive(Debug, Clone)]
pub struct Query {
    pub line: usize,
    pub text: String,
    pub space_name: String,
    pub space: Space,
    pub check: bool,
    pub kind: QueryKind,
}

#[derive(Debug, Clone, Default)]
pub struct SpecFile {
    spaces: HashMap<String, Space>,
    pub queries: Vec<Query>,
}

impl SpecFile {
    pub fn space(&self, name: &str) -> Option<&Space> {
        self.spaces.get(name)
    }
}

const PUNCT: &str = "{}()[];:,.<=/\\?*^_";

fn lex_check(line: &str, line_no: usize) -> PResult<()> {
    for (col, c) in line.chars().enumerate() {
        if !(c.is_ascii_alphanumeric() || c.is_whitespace() || PUNCT.contains(c)) {
            return Err(Diagnostic::new(
                DiagCode::Lexical,
                line_no,
                col + 1,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    Ok(())
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub fn parse_spec(text: &str) -> PResult<SpecFile> {
    let mut spec = SpecFile::default();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        lex_check(line, line_no)?;
        let mut cur = Cursor::new(line, line_no);
        if cur.at_end() {
            continue;
        }
        if cur.eat_keyword("poset") {
            parse_poset(&mut spec, &mut cur)?;
        } else if cur.eat_keyword("space") {
            parse_space_decl(&mut spec, &mut cur)?;
        } else {
            let q = parse_query_at(&spec, cur)?;
            spec.queries.push(q);
        }
    }
    Ok(spec)
}

/// Parses a single query line against the declarations of `spec`.
pub fn parse_query(spec: &SpecFile, text: &str) -> PResult<Query> {
    let line = strip_comment(text);
    lex_check(line, 1)?;
    parse_query_at(spec, Cursor::new(line, 1))
}

fn declare(spec: &mut SpecFile, name: &str, space: Space, cur: &Cursor) -> PResult<()> {
    if spec.spaces.contains_key(name) {
        return Err(cur.err(DiagCode::DuplicateName, format!("`{name}` is already declared")));
    }
    spec.spaces.insert(name.to_string(), space);
    Ok(())
}

fn decl_name<'a>(cur: &mut Cursor<'a>, what: &str) -> PResult<(Cursor<'a>, &'a str)> {
    cur.skip_ws();
    let at = cur.clone();
    let name = cur.expect_ident(what)?;
    Ok((at, name))
}

fn parse_poset(spec: &mut SpecFile, cur: &mut Cursor) -> PResult<()> {
    let (at, name) = decl_name(cur, "a poset name")?;
    cur.expect("{")?;
    let mut names: Vec<String> = Vec::new();
    let mut covers: Vec<(usize, usize)> = Vec::new();
    loop {
        if cur.eat("}") {
            break;
        }
        let mut prev: Option<usize> = None;
        loop {
            let (el_at, el) = decl_name(cur, "an element name")?;
            if RESERVED.contains(&el) {
                return Err(el_at.err(DiagCode::Syntax, format!("`{el}` is reserved")));
            }
            let idx = match names.iter().position(|n| n == el) {
                Some(i) => i,
                None => {
                    names.push(el.to_string());
                    names.len() - 1
                }
            };
            if let Some(p) = prev {
                covers.push((p, idx));
            }
            prev = Some(idx);
            if !cur.eat("<") {
                break;
            }
        }
        if !cur.eat(";") {
            cur.expect("}")?;
            break;
        }
    }
    cur.expect_end()?;
    let poset = FinitePoset::new(names, &covers).map_err(|e| at.err(DiagCode::BadOrder, format!("poset `{name}`: {e}")))?;
    declare(spec, name, Space::base(poset), &at)
}

fn parse_space_decl(spec: &mut SpecFile, cur: &mut Cursor) -> PResult<()> {
    let (at, name) = decl_name(cur, "a space name")?;
    cur.expect("=")?;
    let space = parse_space_expr(spec, cur)?;
    cur.expect_end()?;
    declare(spec, name, space, &at)
}

fn parse_space_expr(spec: &SpecFile, cur: &mut Cursor) -> PResult<Space> {
    cur.skip_ws();
    let at = cur.clone();
    let name = cur.expect_ident("a space expression")?;
    if !cur.eat("(") {
        return spec
            .spaces
            .get(name)
            .cloned()
            .ok_or_else(|| at.err(DiagCode::UnknownName, format!("unknown space `{name}`")));
    }
    let arity = match name {
        "words" | "pow" | "fininfwords" | "infwords" => 1,
        "product" | "sum" => 2,
        _ => return Err(at.err(DiagCode::UnknownName, format!("unknown constructor `{name}`"))),
    };
    let first = parse_space_expr(spec, cur)?;
    let second = if arity == 2 {
        if !cur.eat(",") {
            return Err(cur.err(DiagCode::TypeMismatch, format!("`{name}` takes two arguments")));
        }
        Some(parse_space_expr(spec, cur)?)
    } else {
        None
    };
    if !cur.eat(")") {
        let msg = if cur.peek() == Some(',') {
            format!("`{name}` takes one argument")
        } else {
            "expected `)`".to_string()
        };
        let code = if cur.peek() == Some(',') { DiagCode::TypeMismatch } else { DiagCode::Syntax };
        return Err(cur.err(code, msg));
    }
    Ok(match (name, second) {
        ("words", _) => Space::words(first),
        ("pow", _) => Space::pow(first),
        ("fininfwords", _) => Space::fin_inf_words(first),
        ("infwords", _) => Space::inf_words(first),
        ("product", Some(b)) => Space::product(first, b),
        ("sum", Some(b)) => Space::sum(first, b),
        _ => unreachable!(),
    })
}

fn parse_query_at(spec: &SpecFile, mut cur: Cursor) -> PResult<Query> {
    cur.skip_ws();
    let text = cur.rest().trim_end().to_string();
    let line = cur.line();
    let check = cur.eat_keyword("check");
    cur.skip_ws();
    let cmd_at = cur.clone();
    let cmd = cur.expect_ident("a command")?;
    if !["leq", "meet", "member", "closure", "canon", "top"].contains(&cmd) {
        return Err(cmd_at.err(DiagCode::Syntax, format!("unknown command `{cmd}`")));
    }
    cur.skip_ws();
    let sp_at = cur.clone();
    let space_name = cur.expect_ident("a space name")?;
    let space = spec
        .spaces
        .get(space_name)
        .cloned()
        .ok_or_else(|| sp_at.err(DiagCode::UnknownName, format!("unknown space `{space_name}`")))?;
    let kind = if cmd == "top" {
        QueryKind::Top
    } else {
        cur.expect(":")?;
        match cmd {
            "leq" => {
                let a = parse_code(&space, &mut cur, false)?;
                cur.expect("<=")?;
                QueryKind::Leq(a, parse_code(&space, &mut cur, false)?)
            }
            "meet" => {
                let a = parse_code(&space, &mut cur, false)?;
                cur.expect("/\\")?;
                QueryKind::Meet(a, parse_code(&space, &mut cur, false)?)
            }
            "member" => {
                let p = parse_point(&space, &mut cur, false)?;
                if !cur.eat_keyword("in") {
                    return Err(cur.err(DiagCode::Syntax, "expected `in`"));
                }
                QueryKind::Member(p, parse_code(&space, &mut cur, false)?)
            }
            "closure" => QueryKind::Closure(parse_point(&space, &mut cur, false)?),
            "canon" => match space.kind() {
                SpaceKind::Words(x) => QueryKind::Canon(parse_product(x, &mut cur)?),
                _ => {
                    return Err(sp_at.err(
                        DiagCode::TypeMismatch,
                        format!("`canon` needs a words space, `{space_name}` is {}", space.describe()),
                    ))
                }
            },
            _ => unreachable!(),
        }
    };
    cur.expect_end()?;
    Ok(Query {
        line,
        text,
        space_name: space_name.to_string(),
        space,
        check,
        kind,
    })
}
