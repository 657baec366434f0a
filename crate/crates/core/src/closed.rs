//! Closed sets as finite antichains of codes.

use crate::error::Result;
use crate::space::{Code, Space};

/// A closed subset, stored as the antichain of its maximal irreducible
/// components. The empty antichain is the empty closed set.
///
/// Components are kept in structural order so that equal antichains
/// compare equal and print identically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedSet {
    codes: Vec<Code>,
}

/// Drops every item subsumed by another one. Among mutually subsumed
/// items the earliest wins; survivors keep their relative input order.
pub(crate) fn antichain_reduce<T>(items: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Vec<T> {
    let mut kept: Vec<T> = Vec::with_capacity(items.len());
    for item in items {
        if kept.iter().any(|k| leq(&item, k)) {
            continue;
        }
        kept.retain(|k| !leq(k, &item));
        kept.push(item);
    }
    kept
}

impl ClosedSet {
    pub fn empty() -> Self {
        ClosedSet { codes: Vec::new() }
    }

    pub fn singleton(code: Code) -> Self {
        ClosedSet { codes: vec![code] }
    }

    /// Wraps codes already known to form an antichain.
    pub(crate) fn from_antichain(mut codes: Vec<Code>) -> Self {
        codes.sort();
        ClosedSet { codes }
    }

    /// Subsumption removal. The caller guarantees the codes belong to
    /// `space`; [`cs_reduce`] is the checked entry point.
    pub fn reduce(space: &Space, codes: Vec<Code>) -> Self {
        Self::from_antichain(antichain_reduce(codes, |a, b| space.leq(a, b)))
    }

    pub(crate) fn map_antichain(&self, f: impl Fn(Code) -> Code) -> Self {
        Self::from_antichain(self.codes.iter().cloned().map(f).collect())
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Code> {
        self.codes.iter()
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Whether `code` lies below some component.
    pub fn covers(&self, space: &Space, code: &Code) -> bool {
        self.codes.iter().any(|c| space.leq(code, c))
    }

    /// Inclusion: every component of `self` lies below a component of
    /// `other`.
    pub fn leq(&self, space: &Space, other: &ClosedSet) -> bool {
        self.codes.iter().all(|c| other.covers(space, c))
    }

    pub fn equiv(&self, space: &Space, other: &ClosedSet) -> bool {
        self.leq(space, other) && other.leq(space, self)
    }

    /// Pairwise meets of the components, reduced.
    pub fn inter(&self, space: &Space, other: &ClosedSet) -> Result<ClosedSet> {
        let mut all = Vec::new();
        for c in &self.codes {
            for d in &other.codes {
                all.extend(space.meet(c, d)?.codes);
            }
        }
        Ok(Self::reduce(space, all))
    }

    pub fn union(&self, space: &Space, other: &ClosedSet) -> ClosedSet {
        let mut all = self.codes.clone();
        all.extend(other.codes.iter().cloned());
        Self::reduce(space, all)
    }

    pub fn is_antichain(&self, space: &Space) -> bool {
        self.codes.iter().enumerate().all(|(i, c)| {
            self.codes
                .iter()
                .enumerate()
                .all(|(j, d)| i == j || !space.leq(c, d))
        })
    }
}

impl<'a> IntoIterator for &'a ClosedSet {
    type Item = &'a Code;
    type IntoIter = std::slice::Iter<'a, Code>;

    fn into_iter(self) -> Self::IntoIter {
        self.codes.iter()
    }
}

/// `C ⊆ C'` for closed sets given as antichains.
pub fn cs_leq(s: &Space, c: &ClosedSet, c2: &ClosedSet) -> Result<bool> {
    s.check_closed(c)?;
    s.check_closed(c2)?;
    Ok(c.leq(s, c2))
}

pub fn cs_inter(s: &Space, c: &ClosedSet, c2: &ClosedSet) -> Result<ClosedSet> {
    s.check_closed(c)?;
    s.check_closed(c2)?;
    c.inter(s, c2)
}

/// Reduces an arbitrary finite family of codes to an antichain with the
/// same union.
pub fn cs_reduce(s: &Space, codes: Vec<Code>) -> Result<ClosedSet> {
    for c in &codes {
        s.check(c)?;
    }
    Ok(ClosedSet::reduce(s, codes))
}
