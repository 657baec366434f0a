//! Spaces and codes.
//!
//! A [`Space`] bundles the four ingredients needed to compute with the
//! irreducible closed subsets of a Noetherian space: a code type
//! ([`Code`]), a decidable inclusion test between codes
//! ([`Space::leq`]), a finite set of codes covering the whole space
//! ([`Space::top`]) and a binary intersection that returns a finite union
//! of codes ([`Space::meet`]).
//!
//! Spaces are built compositionally from finite posets. Every value is
//! immutable once built, so spaces and codes can be shared across threads.

use std::fmt;
use std::sync::Arc;

use crate::closed::ClosedSet;
use crate::error::{Result, SrepError};
use crate::omega::{self, OmegaCode, Variant};
use crate::poset::FinitePoset;
use crate::words::{self, Atom, WordProduct};

/// Code of an irreducible closed subset. The variant must match the
/// constructor of the space the code is used with.
///
/// The derived order is purely structural; it only serves to print
/// antichains deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Code {
    /// Principal ideal `↓x` of a poset element.
    Elem(usize),
    Pair(Box<Code>, Box<Code>),
    Left(Box<Code>),
    Right(Box<Code>),
    Word(WordProduct),
    /// Powerset code: the downward closure of a closed set of the alphabet.
    Pow(ClosedSet),
    Omega(OmegaCode),
}

impl Code {
    pub fn pair(a: Code, b: Code) -> Code {
        Code::Pair(Box::new(a), Box::new(b))
    }

    pub fn left(c: Code) -> Code {
        Code::Left(Box::new(c))
    }

    pub fn right(c: Code) -> Code {
        Code::Right(Box::new(c))
    }

    fn kind_name(&self) -> &'static str {
        match self {
            Code::Elem(_) => "element",
            Code::Pair(..) => "pair",
            Code::Left(_) | Code::Right(_) => "tagged code",
            Code::Word(_) => "word product",
            Code::Pow(_) => "powerset code",
            Code::Omega(_) => "omega code",
        }
    }
}

#[derive(Debug)]
pub enum SpaceKind {
    Base(FinitePoset),
    Product(Space, Space),
    Sum(Space, Space),
    /// Finite words under the subword topology.
    Words(Space),
    /// All subsets under the lower Vietoris topology.
    Pow(Space),
    /// Finite-or-infinite words (`Variant::FinOrInf`) or infinite words
    /// (`Variant::Inf`) under the asymptotic subword topology.
    Omega(Variant, Space),
}

#[derive(Debug)]
struct Inner {
    kind: SpaceKind,
    top: ClosedSet,
}

/// A constructed space. Cloning is cheap.
#[derive(Clone)]
pub struct Space(Arc<Inner>);

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space({})", self.describe())
    }
}

impl Space {
    fn build(kind: SpaceKind) -> Space {
        let top = compute_top(&kind);
        Space(Arc::new(Inner { kind, top }))
    }

    pub fn base(poset: FinitePoset) -> Space {
        Self::build(SpaceKind::Base(poset))
    }

    pub fn product(a: Space, b: Space) -> Space {
        Self::build(SpaceKind::Product(a, b))
    }

    pub fn sum(a: Space, b: Space) -> Space {
        Self::build(SpaceKind::Sum(a, b))
    }

    pub fn words(x: Space) -> Space {
        Self::build(SpaceKind::Words(x))
    }

    pub fn pow(x: Space) -> Space {
        Self::build(SpaceKind::Pow(x))
    }

    pub fn fin_inf_words(x: Space) -> Space {
        Self::build(SpaceKind::Omega(Variant::FinOrInf, x))
    }

    pub fn inf_words(x: Space) -> Space {
        Self::build(SpaceKind::Omega(Variant::Inf, x))
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.0.kind
    }

    /// The alphabet of a word, powerset or omega space.
    pub fn inner(&self) -> Option<&Space> {
        match self.kind() {
            SpaceKind::Words(x) | SpaceKind::Pow(x) | SpaceKind::Omega(_, x) => Some(x),
            _ => None,
        }
    }

    pub fn as_poset(&self) -> Option<&FinitePoset> {
        match self.kind() {
            SpaceKind::Base(p) => Some(p),
            _ => None,
        }
    }

    /// Constructor expression, e.g. `words(product(base, base))`.
    pub fn describe(&self) -> String {
        match self.kind() {
            SpaceKind::Base(p) => format!("base[{}]", p.names().join(",")),
            SpaceKind::Product(a, b) => format!("product({}, {})", a.describe(), b.describe()),
            SpaceKind::Sum(a, b) => format!("sum({}, {})", a.describe(), b.describe()),
            SpaceKind::Words(x) => format!("words({})", x.describe()),
            SpaceKind::Pow(x) => format!("pow({})", x.describe()),
            SpaceKind::Omega(Variant::FinOrInf, x) => format!("fininfwords({})", x.describe()),
            SpaceKind::Omega(Variant::Inf, x) => format!("infwords({})", x.describe()),
        }
    }

    /// The cached antichain of codes covering the space.
    pub fn top(&self) -> &ClosedSet {
        &self.0.top
    }

    /// Checks that `code` is a well-formed code of this space.
    pub fn check(&self, code: &Code) -> Result<()> {
        let mismatch = || {
            Err(SrepError::CodeMismatch(format!(
                "{} used with {}",
                code.kind_name(),
                self.describe()
            )))
        };
        match (self.kind(), code) {
            (SpaceKind::Base(p), Code::Elem(x)) => {
                if *x < p.len() {
                    Ok(())
                } else {
                    Err(SrepError::CodeMismatch(format!("element #{x} out of range")))
                }
            }
            (SpaceKind::Product(a, b), Code::Pair(x, y)) => {
                a.check(x)?;
                b.check(y)
            }
            (SpaceKind::Sum(a, _), Code::Left(x)) => a.check(x),
            (SpaceKind::Sum(_, b), Code::Right(y)) => b.check(y),
            (SpaceKind::Words(x), Code::Word(p)) => x.check_product(p),
            (SpaceKind::Pow(x), Code::Pow(body)) => x.check_closed(body),
            (SpaceKind::Omega(variant, x), Code::Omega(c)) => {
                x.check_product(&c.prefix)?;
                x.check_closed(&c.tail)?;
                if *variant == Variant::Inf && c.tail.is_empty() {
                    return Err(SrepError::EmptyOmegaTail);
                }
                Ok(())
            }
            _ => mismatch(),
        }
    }

    pub(crate) fn check_product(&self, p: &WordProduct) -> Result<()> {
        for atom in &p.atoms {
            match atom {
                Atom::Single(c) => self.check(c)?,
                Atom::Star(f) => self.check_closed(f)?,
            }
        }
        Ok(())
    }

    pub(crate) fn check_closed(&self, f: &ClosedSet) -> Result<()> {
        for c in f.iter() {
            self.check(c)?;
        }
        if !f.is_antichain(self) {
            return Err(SrepError::CodeMismatch(
                "closed set is not an antichain".to_string(),
            ));
        }
        Ok(())
    }

    /// Inclusion of the denoted irreducible closed sets. Both codes must
    /// belong to this space; use [`code_leq`] for a checked variant.
    ///
    /// # Panics
    ///
    /// On a code whose shape does not match the space.
    pub fn leq(&self, c1: &Code, c2: &Code) -> bool {
        match (self.kind(), c1, c2) {
            (SpaceKind::Base(p), Code::Elem(x), Code::Elem(y)) => p.leq(*x, *y),
            (SpaceKind::Product(a, b), Code::Pair(x1, y1), Code::Pair(x2, y2)) => {
                a.leq(x1, x2) && b.leq(y1, y2)
            }
            (SpaceKind::Sum(a, _), Code::Left(x), Code::Left(y)) => a.leq(x, y),
            (SpaceKind::Sum(_, b), Code::Right(x), Code::Right(y)) => b.leq(x, y),
            (SpaceKind::Sum(..), Code::Left(_), Code::Right(_))
            | (SpaceKind::Sum(..), Code::Right(_), Code::Left(_)) => false,
            (SpaceKind::Words(x), Code::Word(p), Code::Word(q)) => words::wp_leq(x, p, q),
            (SpaceKind::Pow(x), Code::Pow(u), Code::Pow(v)) => u.leq(x, v),
            (SpaceKind::Omega(_, x), Code::Omega(c), Code::Omega(d)) => omega::inf_leq(x, c, d),
            _ => panic!(
                "codes `{}`/`{}` do not belong to {}",
                c1.kind_name(),
                c2.kind_name(),
                self.describe()
            ),
        }
    }

    /// Intersection of two irreducible closed sets as an antichain of
    /// codes. Same preconditions as [`Space::leq`].
    pub fn meet(&self, c1: &Code, c2: &Code) -> Result<ClosedSet> {
        match (self.kind(), c1, c2) {
            (SpaceKind::Base(p), Code::Elem(x), Code::Elem(y)) => Ok(ClosedSet::from_antichain(
                p.meet(*x, *y).into_iter().map(Code::Elem).collect(),
            )),
            (SpaceKind::Product(a, b), Code::Pair(x1, y1), Code::Pair(x2, y2)) => {
                let left = a.meet(x1, x2)?;
                let right = b.meet(y1, y2)?;
                let mut out = Vec::with_capacity(left.len() * right.len());
                for l in left.iter() {
                    for r in right.iter() {
                        out.push(Code::pair(l.clone(), r.clone()));
                    }
                }
                Ok(ClosedSet::reduce(self, out))
            }
            (SpaceKind::Sum(a, _), Code::Left(x), Code::Left(y)) => {
                Ok(a.meet(x, y)?.map_antichain(Code::left))
            }
            (SpaceKind::Sum(_, b), Code::Right(x), Code::Right(y)) => {
                Ok(b.meet(x, y)?.map_antichain(Code::right))
            }
            (SpaceKind::Sum(..), Code::Left(_), Code::Right(_))
            | (SpaceKind::Sum(..), Code::Right(_), Code::Left(_)) => Ok(ClosedSet::empty()),
            (SpaceKind::Words(x), Code::Word(p), Code::Word(q)) => Ok(ClosedSet::reduce(
                self,
                words::wp_meet(x, p, q)?.into_iter().map(Code::Word).collect(),
            )),
            (SpaceKind::Pow(x), Code::Pow(u), Code::Pow(v)) => {
                Ok(ClosedSet::singleton(Code::Pow(u.inter(x, v)?)))
            }
            (SpaceKind::Omega(variant, x), Code::Omega(c), Code::Omega(d)) => {
                let met = omega::inf_meet(x, *variant, c, d)?;
                Ok(ClosedSet::from_antichain(
                    met.into_iter().map(Code::Omega).collect(),
                ))
            }
            _ => panic!(
                "codes `{}`/`{}` do not belong to {}",
                c1.kind_name(),
                c2.kind_name(),
                self.describe()
            ),
        }
    }
}

fn compute_top(kind: &SpaceKind) -> ClosedSet {
    match kind {
        SpaceKind::Base(p) => {
            ClosedSet::from_antichain(p.top().into_iter().map(Code::Elem).collect())
        }
        SpaceKind::Product(a, b) => {
            let mut out = Vec::new();
            for x in a.top().iter() {
                for y in b.top().iter() {
                    out.push(Code::pair(x.clone(), y.clone()));
                }
            }
            ClosedSet::from_antichain(out)
        }
        SpaceKind::Sum(a, b) => {
            let mut out: Vec<Code> = a.top().iter().cloned().map(Code::left).collect();
            out.extend(b.top().iter().cloned().map(Code::right));
            ClosedSet::from_antichain(out)
        }
        SpaceKind::Words(x) => ClosedSet::singleton(Code::Word(words::wp_top(x))),
        SpaceKind::Pow(x) => ClosedSet::singleton(Code::Pow(x.top().clone())),
        SpaceKind::Omega(_, x) => ClosedSet::singleton(Code::Omega(omega::inf_top(x))),
    }
}

/// Checked inclusion test between two codes of `s`.
pub fn code_leq(s: &Space, c1: &Code, c2: &Code) -> Result<bool> {
    s.check(c1)?;
    s.check(c2)?;
    Ok(s.leq(c1, c2))
}

/// Checked binary meet of two codes of `s`.
pub fn code_meet(s: &Space, c1: &Code, c2: &Code) -> Result<ClosedSet> {
    s.check(c1)?;
    s.check(c2)?;
    s.meet(c1, c2)
}

pub fn space_top(s: &Space) -> ClosedSet {
    s.top().clone()
}
