//! Concrete syntax for codes and points.
//!
//! Parsing is directed by the space an expression belongs to, so the
//! same characters can mean different things in different spaces:
//!
//! | space          | code                 | point               |
//! |----------------|----------------------|---------------------|
//! | poset          | `a`                  | `a`                 |
//! | product        | `(c1, c2)`           | `(p1, p2)`          |
//! | sum            | `L.c` / `R.c`        | `L.p` / `R.p`       |
//! | words          | `a? {a,b}*`, `eps`   | `ab`, `eps`         |
//! | pow            | `pow{c1,c2}`         | `{p1,p2}`           |
//! | (in)finite words | `(P, {c1,c2})`     | `u.(v)^w`, `(v)^w`, `u` |
//!
//! Word products, words and ultimately periodic words are wrapped in
//! brackets `[...]` whenever they occur inside another expression, and
//! never at the top level. Element names inside codes must be followed by
//! a non-identifier character; inside points the longest name matches.

use srep::{Atom, ClosedSet, Code, OmegaCode, Point, Space, SpaceKind, UpWord, Variant, WordProduct};

use crate::diag::{DiagCode, Diagnostic};

pub type PResult<T> = Result<T, Diagnostic>;

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Reserved words that cannot name poset elements.
pub const RESERVED: &[&str] = &["eps", "in"];

/// A position in one line of input.
#[derive(Debug, Clone)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str, line: usize) -> Self {
        Cursor { src, pos: 0, line }
    }

    pub fn line(&self) -> usize {
        self.line
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn col(&self) -> usize {
        self.src[..self.pos].chars().count() + 1
    }

    pub fn err(&self, code: DiagCode, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::new(code, self.line, self.col(), msg)
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            let found = self.rest().chars().next().map_or("end of line".to_string(), |c| format!("`{c}`"));
            Err(self.err(DiagCode::Syntax, format!("expected `{tok}`, found {found}")))
        }
    }

    /// `kw` followed by a non-identifier character.
    pub fn at_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        rest.starts_with(kw) && !rest[kw.len()..].chars().next().is_some_and(is_ident_char)
    }

    pub fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.at_keyword(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    pub fn expect_ident(&mut self, what: &str) -> PResult<&'a str> {
        self.ident()
            .ok_or_else(|| self.err(DiagCode::Syntax, format!("expected {what}")))
    }

    pub fn expect_end(&mut self) -> PResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(DiagCode::Syntax, format!("unexpected trailing input `{}`", self.rest())))
        }
    }
}

fn mismatch(cur: &Cursor, s: &Space, what: &str) -> Diagnostic {
    cur.err(
        DiagCode::TypeMismatch,
        format!("expected {what} for space {}", s.describe()),
    )
}

/// Longest element name at the cursor. With `boundary`, the name must not
/// be followed by another identifier character.
fn parse_elem(s: &Space, cur: &mut Cursor, boundary: bool) -> PResult<usize> {
    let poset = s.as_poset().expect("base space");
    cur.skip_ws();
    let rest = cur.rest();
    let best = poset
        .elements()
        .filter(|&i| rest.starts_with(poset.name(i)))
        .max_by_key(|&i| poset.name(i).len());
    let start = cur.clone();
    match best {
        Some(i) => {
            let after = &rest[poset.name(i).len()..];
            if boundary && after.chars().next().is_some_and(is_ident_char) {
                let mut probe = start.clone();
                let word = probe.ident().unwrap_or_default();
                return Err(start.err(DiagCode::UnknownName, format!("unknown element `{word}`")));
            }
            cur.pos += poset.name(i).len();
            Ok(i)
        }
        None => {
            let mut probe = start.clone();
            match probe.ident() {
                Some(word) => Err(start.err(DiagCode::UnknownName, format!("unknown element `{word}`"))),
                None => Err(mismatch(&start, s, "an element")),
            }
        }
    }
}

fn parse_list<T>(
    cur: &mut Cursor,
    close: &str,
    mut item: impl FnMut(&mut Cursor) -> PResult<T>,
) -> PResult<Vec<T>> {
    let mut out = Vec::new();
    if cur.eat(close) {
        return Ok(out);
    }
    loop {
        out.push(item(cur)?);
        if cur.eat(close) {
            return Ok(out);
        }
        cur.expect(",")?;
    }
}

/// A code of `s`. Word products are bare at the top level and bracketed
/// when `nested`.
pub fn parse_code(s: &Space, cur: &mut Cursor, nested: bool) -> PResult<Code> {
    match s.kind() {
        SpaceKind::Base(_) => Ok(Code::Elem(parse_elem(s, cur, true)?)),
        SpaceKind::Product(a, b) => {
            if !cur.eat("(") {
                return Err(mismatch(cur, s, "a pair `(c1, c2)`"));
            }
            let x = parse_code(a, cur, true)?;
            cur.expect(",")?;
            let y = parse_code(b, cur, true)?;
            cur.expect(")")?;
            Ok(Code::pair(x, y))
        }
        SpaceKind::Sum(a, b) => {
            if cur.eat("L.") {
                Ok(Code::left(parse_code(a, cur, true)?))
            } else if cur.eat("R.") {
                Ok(Code::right(parse_code(b, cur, true)?))
            } else {
                Err(mismatch(cur, s, "a tagged code `L.c` or `R.c`"))
            }
        }
        SpaceKind::Words(x) => {
            if !nested {
                Ok(Code::Word(parse_product(x, cur)?))
            } else if cur.eat("[") {
                let p = parse_product(x, cur)?;
                cur.expect("]")?;
                Ok(Code::Word(p))
            } else {
                Err(mismatch(cur, s, "a bracketed word product `[...]`"))
            }
        }
        SpaceKind::Pow(x) => {
            if !cur.eat_keyword("pow") {
                return Err(mismatch(cur, s, "a powerset code `pow{...}`"));
            }
            cur.expect("{")?;
            let codes = parse_list(cur, "}", |c| parse_code(x, c, true))?;
            Ok(Code::Pow(ClosedSet::reduce(x, codes)))
        }
        SpaceKind::Omega(variant, x) => {
            let start = cur.clone();
            if !cur.eat("(") {
                return Err(mismatch(cur, s, "an omega code `(P, {...})`"));
            }
            let prefix = parse_product(x, cur)?;
            cur.expect(",")?;
            let tail = parse_closed(x, cur)?;
            cur.expect(")")?;
            if *variant == Variant::Inf && tail.is_empty() {
                return Err(start.err(
                    DiagCode::EmptyOmegaTail,
                    "codes of an infinite-word space need a non-empty tail set",
                ));
            }
            Ok(Code::Omega(OmegaCode::new(prefix, tail)))
        }
    }
}

/// `{c1,...,ck}`, reduced to an antichain.
pub fn parse_closed(x: &Space, cur: &mut Cursor) -> PResult<ClosedSet> {
    if !cur.eat("{") {
        return Err(mismatch(cur, x, "a set of codes `{...}`"));
    }
    let codes = parse_list(cur, "}", |c| parse_code(x, c, true))?;
    Ok(ClosedSet::reduce(x, codes))
}

fn product_ends(cur: &mut Cursor) -> bool {
    match cur.peek() {
        None => true,
        Some(c) => ",)]};<".contains(c) || cur.rest().starts_with("/\\"),
    }
}

/// A word product over the alphabet `x`: `eps` or a sequence of atoms.
pub fn parse_product(x: &Space, cur: &mut Cursor) -> PResult<WordProduct> {
    if cur.eat_keyword("eps") {
        return Ok(WordProduct::epsilon());
    }
    let mut atoms = Vec::new();
    while !product_ends(cur) {
        if cur.peek() == Some('{') {
            let f = parse_closed(x, cur)?;
            cur.expect("*")?;
            atoms.push(Atom::Star(f));
        } else {
            let c = parse_code(x, cur, true)?;
            cur.expect("?")?;
            atoms.push(Atom::Single(c));
        }
    }
    if atoms.is_empty() {
        return Err(cur.err(DiagCode::Syntax, "expected a word product (use `eps` for the empty one)"));
    }
    Ok(WordProduct::new(atoms))
}

/// A point of `s`. Words and ultimately periodic words are bracketed when
/// `nested`.
pub fn parse_point(s: &Space, cur: &mut Cursor, nested: bool) -> PResult<Point> {
    match s.kind() {
        SpaceKind::Base(_) => Ok(Point::Elem(parse_elem(s, cur, false)?)),
        SpaceKind::Product(a, b) => {
            if !cur.eat("(") {
                return Err(mismatch(cur, s, "a pair `(p1, p2)`"));
            }
            let x = parse_point(a, cur, true)?;
            cur.expect(",")?;
            let y = parse_point(b, cur, true)?;
            cur.expect(")")?;
            Ok(Point::pair(x, y))
        }
        SpaceKind::Sum(a, b) => {
            if cur.eat("L.") {
                Ok(Point::left(parse_point(a, cur, true)?))
            } else if cur.eat("R.") {
                Ok(Point::right(parse_point(b, cur, true)?))
            } else {
                Err(mismatch(cur, s, "a tagged point `L.p` or `R.p`"))
            }
        }
        SpaceKind::Words(x) => {
            if !nested {
                Ok(Point::Word(parse_word(x, cur)?))
            } else if cur.eat("[") {
                let w = parse_word(x, cur)?;
                cur.expect("]")?;
                Ok(Point::Word(w))
            } else {
                Err(mismatch(cur, s, "a bracketed word `[...]`"))
            }
        }
        SpaceKind::Pow(x) => {
            if !cur.eat("{") {
                return Err(mismatch(cur, s, "a finite set `{p1,p2}`"));
            }
            Ok(Point::Set(parse_list(cur, "}", |c| parse_point(x, c, true))?))
        }
        SpaceKind::Omega(variant, x) => {
            let start = cur.clone();
            let w = if !nested {
                parse_up(x, cur)?
            } else if cur.eat("[") {
                let w = parse_up(x, cur)?;
                cur.expect("]")?;
                w
            } else {
                return Err(mismatch(cur, s, "a bracketed word `[...]`"));
            };
            if *variant == Variant::Inf && w.is_finite() {
                return Err(start.err(
                    DiagCode::TypeMismatch,
                    "points of an infinite-word space need a non-empty period `u.(v)^w`",
                ));
            }
            Ok(Point::Up(w))
        }
    }
}

fn word_ends(cur: &mut Cursor) -> bool {
    match cur.peek() {
        None => true,
        Some(c) => ",)]}.".contains(c) || cur.at_keyword("in"),
    }
}

/// A finite word over `x`: `eps` or juxtaposed letters.
pub fn parse_word(x: &Space, cur: &mut Cursor) -> PResult<Vec<Point>> {
    if cur.eat_keyword("eps") {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    while !word_ends(cur) {
        letters.push(parse_point(x, cur, true)?);
    }
    if letters.is_empty() {
        return Err(cur.err(DiagCode::Syntax, "expected a word (use `eps` for the empty one)"));
    }
    Ok(letters)
}

fn parse_period(x: &Space, cur: &mut Cursor) -> PResult<Vec<Point>> {
    cur.expect("(")?;
    let v = parse_word(x, cur)?;
    cur.expect(")")?;
    cur.expect("^w")?;
    if v.is_empty() {
        return Err(cur.err(DiagCode::Syntax, "the period of `u.(v)^w` must be non-empty"));
    }
    Ok(v)
}

/// `u.(v)^w`, `(v)^w` or a finite word `u`.
pub fn parse_up(x: &Space, cur: &mut Cursor) -> PResult<UpWord> {
    if cur.peek() == Some('(') {
        let mut attempt = cur.clone();
        if let Ok(v) = parse_period(x, &mut attempt) {
            *cur = attempt;
            return Ok(UpWord::new(Vec::new(), v));
        }
    }
    let u = parse_word(x, cur)?;
    if cur.eat(".") {
        let v = parse_period(x, cur)?;
        Ok(UpWord::new(u, v))
    } else {
        Ok(UpWord::finite(u))
    }
}

// ---- printing ----

/// Whether letters of `s` can be juxtaposed without separators.
fn compact_letters(s: &Space) -> bool {
    match s.kind() {
        SpaceKind::Base(p) => p.names().iter().all(|n| n.chars().count() == 1),
        SpaceKind::Product(a, b) | SpaceKind::Sum(a, b) => compact_letters(a) && compact_letters(b),
        _ => true,
    }
}

pub fn code_to_string(s: &Space, c: &Code) -> String {
    let mut out = String::new();
    write_code(s, c, false, &mut out);
    out
}

fn write_code(s: &Space, c: &Code, nested: bool, out: &mut String) {
    match (s.kind(), c) {
        (SpaceKind::Base(p), Code::Elem(x)) => out.push_str(p.name(*x)),
        (SpaceKind::Product(a, b), Code::Pair(x, y)) => {
            out.push('(');
            write_code(a, x, true, out);
            out.push_str(", ");
            write_code(b, y, true, out);
            out.push(')');
        }
        (SpaceKind::Sum(a, _), Code::Left(x)) => {
            out.push_str("L.");
            write_code(a, x, true, out);
        }
        (SpaceKind::Sum(_, b), Code::Right(y)) => {
            out.push_str("R.");
            write_code(b, y, true, out);
        }
        (SpaceKind::Words(x), Code::Word(p)) => {
            if nested {
                out.push('[');
            }
            write_product(x, p, out);
            if nested {
                out.push(']');
            }
        }
        (SpaceKind::Pow(x), Code::Pow(body)) => {
            out.push_str("pow");
            write_closed(x, body, out);
        }
        (SpaceKind::Omega(_, x), Code::Omega(oc)) => {
            out.push('(');
            write_product(x, &oc.prefix, out);
            out.push_str(", ");
            write_closed(x, &oc.tail, out);
            out.push(')');
        }
        _ => panic!("cannot print {c:?} in {}", s.describe()),
    }
}

fn write_closed(x: &Space, f: &ClosedSet, out: &mut String) {
    out.push('{');
    for (i, c) in f.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_code(x, c, true, out);
    }
    out.push('}');
}

pub fn closed_to_string(x: &Space, f: &ClosedSet) -> String {
    let mut out = String::new();
    write_closed(x, f, &mut out);
    out
}

fn write_product(x: &Space, p: &WordProduct, out: &mut String) {
    if p.is_epsilon() {
        out.push_str("eps");
        return;
    }
    for (i, atom) in p.atoms.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        match atom {
            Atom::Single(c) => {
                write_code(x, c, true, out);
                out.push('?');
            }
            Atom::Star(f) => {
                write_closed(x, f, out);
                out.push('*');
            }
        }
    }
}

pub fn product_to_string(x: &Space, p: &WordProduct) -> String {
    let mut out = String::new();
    write_product(x, p, &mut out);
    out
}

pub fn point_to_string(s: &Space, p: &Point) -> String {
    let mut out = String::new();
    write_point(s, p, false, &mut out);
    out
}

fn write_point(s: &Space, p: &Point, nested: bool, out: &mut String) {
    match (s.kind(), p) {
        (SpaceKind::Base(poset), Point::Elem(x)) => out.push_str(poset.name(*x)),
        (SpaceKind::Product(a, b), Point::Pair(x, y)) => {
            out.push('(');
            write_point(a, x, true, out);
            out.push_str(", ");
            write_point(b, y, true, out);
            out.push(')');
        }
        (SpaceKind::Sum(a, _), Point::Left(x)) => {
            out.push_str("L.");
            write_point(a, x, true, out);
        }
        (SpaceKind::Sum(_, b), Point::Right(y)) => {
            out.push_str("R.");
            write_point(b, y, true, out);
        }
        (SpaceKind::Words(x), Point::Word(w)) => {
            if nested {
                out.push('[');
            }
            write_word(x, w, out);
            if nested {
                out.push(']');
            }
        }
        (SpaceKind::Pow(x), Point::Set(elems)) => {
            out.push('{');
            for (i, e) in elems.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_point(x, e, true, out);
            }
            out.push('}');
        }
        (SpaceKind::Omega(_, x), Point::Up(w)) => {
            if nested {
                out.push('[');
            }
            write_up(x, w, out);
            if nested {
                out.push(']');
            }
        }
        _ => panic!("cannot print {p:?} in {}", s.describe()),
    }
}

fn write_word(x: &Space, w: &[Point], out: &mut String) {
    if w.is_empty() {
        out.push_str("eps");
        return;
    }
    let sep = if compact_letters(x) { "" } else { " " };
    for (i, l) in w.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        write_point(x, l, true, out);
    }
}

fn write_up(x: &Space, w: &UpWord, out: &mut String) {
    if w.is_finite() {
        write_word(x, &w.prefix, out);
        return;
    }
    if !w.prefix.is_empty() {
        write_word(x, &w.prefix, out);
        out.push('.');
    }
    out.push('(');
    write_word(x, &w.period, out);
    out.push_str(")^w");
}

pub fn up_to_string(x: &Space, w: &UpWord) -> String {
    let mut out = String::new();
    write_up(x, w, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use srep::FinitePoset;

    fn a2() -> Space {
        Space::base(FinitePoset::antichain(&["a", "b"]))
    }

    fn code(s: &Space, text: &str) -> PResult<Code> {
        let mut cur = Cursor::new(text, 1);
        let c = parse_code(s, &mut cur, false)?;
        cur.expect_end()?;
        Ok(c)
    }

    fn point(s: &Space, text: &str) -> PResult<Point> {
        let mut cur = Cursor::new(text, 1);
        let p = parse_point(s, &mut cur, false)?;
        cur.expect_end()?;
        Ok(p)
    }

    #[test]
    fn word_products() {
        let w = Space::words(a2());
        let c = code(&w, "a? {b,a}*  b?").unwrap();
        assert_eq!(code_to_string(&w, &c), "a? {a,b}* b?");
        assert_eq!(code_to_string(&w, &code(&w, "eps").unwrap()), "eps");
        assert_eq!(code(&w, "c?").unwrap_err().code, DiagCode::UnknownName);
        assert_eq!(code(&w, "a").unwrap_err().code, DiagCode::Syntax);
    }

    #[test]
    fn omega_codes_and_words() {
        let o = Space::inf_words(Space::base(FinitePoset::chain(&["a", "b"])));
        let c = code(&o, "(b?, {a})").unwrap();
        assert_eq!(code_to_string(&o, &c), "(b?, {a})");
        assert_eq!(code(&o, "(eps, {})").unwrap_err().code, DiagCode::EmptyOmegaTail);
        let p = point(&o, "ab.(ba)^w").unwrap();
        assert_eq!(point_to_string(&o, &p), "ab.(ba)^w");
        let q = point(&o, "(a)^w").unwrap();
        assert_eq!(point_to_string(&o, &q), "(a)^w");
        assert_eq!(point(&o, "ab").unwrap_err().code, DiagCode::TypeMismatch);
        let f = Space::fin_inf_words(a2());
        assert_eq!(point_to_string(&f, &point(&f, "ab").unwrap()), "ab");
        assert_eq!(point_to_string(&f, &point(&f, "eps").unwrap()), "eps");
    }

    #[test]
    fn nested_spaces() {
        let s = Space::pow(Space::words(a2()));
        let c = code(&s, "pow{[a? b?], [{a,b}*]}").unwrap();
        // a? b? is subsumed by {a,b}*
        assert_eq!(code_to_string(&s, &c), "pow{[{a,b}*]}");
        let ww = Space::words(Space::words(a2()));
        let p = point(&ww, "[ab][eps]").unwrap();
        assert_eq!(point_to_string(&ww, &p), "[ab][eps]");
        let prod = Space::product(a2(), Space::sum(a2(), a2()));
        let c = code(&prod, "(a, R.b)").unwrap();
        assert_eq!(code_to_string(&prod, &c), "(a, R.b)");
        let op = Space::fin_inf_words(Space::product(a2(), a2()));
        let p = point(&op, "((a, b))^w").unwrap();
        assert_eq!(point_to_string(&op, &p), "((a, b))^w");
        let p = point(&op, "(a, a).((b, b)(a, b))^w").unwrap();
        assert_eq!(point_to_string(&op, &p), "(a, a).((b, b)(a, b))^w");
    }

    #[test]
    fn multi_character_names_are_spaced() {
        let x = Space::base(FinitePoset::antichain(&["lo", "hi", "h"]));
        let w = Space::words(x);
        let p = point(&w, "lo hi h").unwrap();
        assert_eq!(point_to_string(&w, &p), "lo hi h");
        let p2 = point(&w, "hih").unwrap();
        assert_eq!(point_to_string(&w, &p2), "hi h");
    }
}
