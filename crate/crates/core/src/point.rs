//! Concrete points of constructed spaces and their closures.

use crate::closed::ClosedSet;
use crate::error::{Result, SrepError};
use crate::omega::{self, UpWord};
use crate::space::{Code, Space, SpaceKind};
use crate::words;

/// A point of a space. Only the representable fragment is covered: poset
/// elements, pairs, tagged points, finite words, finite subsets and
/// ultimately periodic words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Elem(usize),
    Pair(Box<Point>, Box<Point>),
    Left(Box<Point>),
    Right(Box<Point>),
    Word(Vec<Point>),
    Set(Vec<Point>),
    Up(UpWord),
}

impl Point {
    pub fn pair(a: Point, b: Point) -> Point {
        Point::Pair(Box::new(a), Box::new(b))
    }

    pub fn left(p: Point) -> Point {
        Point::Left(Box::new(p))
    }

    pub fn right(p: Point) -> Point {
        Point::Right(Box::new(p))
    }
}

/// The code of the closure `↓p` of a single point.
pub fn closure(s: &Space, p: &Point) -> Result<Code> {
    match (s.kind(), p) {
        (SpaceKind::Base(poset), Point::Elem(x)) if *x < poset.len() => Ok(Code::Elem(*x)),
        (SpaceKind::Product(a, b), Point::Pair(x, y)) => {
            Ok(Code::pair(closure(a, x)?, closure(b, y)?))
        }
        (SpaceKind::Sum(a, _), Point::Left(x)) => Ok(Code::left(closure(a, x)?)),
        (SpaceKind::Sum(_, b), Point::Right(y)) => Ok(Code::right(closure(b, y)?)),
        (SpaceKind::Words(x), Point::Word(w)) => Ok(Code::Word(words::closure_fin_word(x, w)?)),
        (SpaceKind::Pow(x), Point::Set(elems)) => {
            let codes = elems
                .iter()
                .map(|e| closure(x, e))
                .collect::<Result<Vec<_>>>()?;
            Ok(Code::Pow(ClosedSet::reduce(x, codes)))
        }
        (SpaceKind::Omega(variant, x), Point::Up(w)) => {
            Ok(Code::Omega(omega::up_closure(x, w, *variant)?))
        }
        _ => Err(SrepError::PointMismatch(format!("{p:?} in {}", s.describe()))),
    }
}

/// Whether `p` belongs to the set denoted by `code`.
pub fn member(s: &Space, p: &Point, code: &Code) -> Result<bool> {
    s.check(code)?;
    Ok(s.leq(&closure(s, p)?, code))
}

/// The specialization preorder: `p ≤ q` iff `p` lies in the closure of `q`.
pub fn point_leq(s: &Space, p: &Point, q: &Point) -> Result<bool> {
    Ok(s.leq(&closure(s, p)?, &closure(s, q)?))
}
