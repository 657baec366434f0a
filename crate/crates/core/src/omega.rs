//! Finite-or-infinite and infinite words.
//!
//! An [`OmegaCode`] `(P, u)` denotes `P·u^{≤ω}` (resp. `P·u^ω`), where
//! `P` is a word product and `u` a closed set of the alphabet. Both
//! inclusion and intersection reduce to the corresponding operations on
//! the finite word product `P·u*`.
//!
//! Concrete points are ultimately periodic words `prefix·period^ω`; an
//! empty period stands for the finite word `prefix`.

use crate::closed::{antichain_reduce, ClosedSet};
use crate::error::{Result, SrepError};
use crate::point::{self, Point};
use crate::space::Space;
use crate::words::{self, Atom, WordProduct};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Finite and infinite words.
    FinOrInf,
    /// Infinite words only; tails must be non-empty.
    Inf,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaCode {
    pub prefix: WordProduct,
    pub tail: ClosedSet,
}

impl OmegaCode {
    pub fn new(prefix: WordProduct, tail: ClosedSet) -> Self {
        OmegaCode { prefix, tail }
    }

    /// The finite word product `P·u*`.
    pub fn starred(&self) -> WordProduct {
        self.prefix.with_star(&self.tail)
    }
}

/// An ultimately periodic word `prefix·period^ω`. The period is taken
/// verbatim; an empty period makes the word finite.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    pub prefix: Vec<Point>,
    pub period: Vec<Point>,
}

impl UpWord {
    pub fn new(prefix: Vec<Point>, period: Vec<Point>) -> Self {
        UpWord { prefix, period }
    }

    pub fn finite(letters: Vec<Point>) -> Self {
        UpWord {
            prefix: letters,
            period: Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Same word with the period repeated `k` times (`k ≥ 1`).
    pub fn unrolled(&self, k: usize) -> UpWord {
        UpWord {
            prefix: self.prefix.clone(),
            period: (0..k.max(1)).flat_map(|_| self.period.iter().cloned()).collect(),
        }
    }
}

pub fn inf_leq(x: &Space, c: &OmegaCode, d: &OmegaCode) -> bool {
    c.tail.leq(x, &d.tail) && words::wp_leq(x, &c.starred(), &d.starred())
}

/// Removes the trailing `F*` of `p` provided `F` is equivalent to `tail`.
fn strip_tail(x: &Space, p: &WordProduct, tail: &ClosedSet) -> Option<WordProduct> {
    match p.atoms.last() {
        Some(Atom::Star(f)) if f.equiv(x, tail) => Some(WordProduct::new(
            p.atoms[..p.atoms.len() - 1].to_vec(),
        )),
        _ => None,
    }
}

/// Intersection of two omega codes.
///
/// Every product of `P·u* ⋔ P'·u'*` ends with `(u ∩ u')*`; that star is
/// split off to form the tail of the result. A product lacking it is an
/// internal error.
pub fn inf_meet(
    x: &Space,
    variant: Variant,
    c: &OmegaCode,
    d: &OmegaCode,
) -> Result<Vec<OmegaCode>> {
    let tail = c.tail.inter(x, &d.tail)?;
    if variant == Variant::Inf && tail.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for p in words::wp_meet(x, &c.starred(), &d.starred())? {
        let prefix = if tail.is_empty() {
            p
        } else {
            strip_tail(x, &p, &tail).ok_or_else(|| {
                SrepError::Invariant(format!(
                    "meet product {p:?} does not end with the common tail star"
                ))
            })?
        };
        out.push(OmegaCode::new(prefix, tail.clone()));
    }
    let mut out = antichain_reduce(out, |a, b| inf_leq(x, a, b));
    out.sort();
    Ok(out)
}

pub fn inf_top(x: &Space) -> OmegaCode {
    OmegaCode::new(WordProduct::epsilon(), x.top().clone())
}

/// Closed set of the letters lying below infinitely many letters of `w`.
pub fn up_suf(x: &Space, w: &UpWord) -> Result<ClosedSet> {
    let codes = w
        .period
        .iter()
        .map(|l| point::closure(x, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClosedSet::reduce(x, codes))
}

fn prefix_singles(x: &Space, w: &UpWord) -> Result<Vec<Atom>> {
    w.prefix
        .iter()
        .map(|l| Ok(Atom::Single(point::closure(x, l)?)))
        .collect()
}

/// Closure of the finite prefixes of `w`: `(↓w₀)? ⋯ (↓wₙ₋₁)? suf(w)*`
/// with `n` the prefix length.
pub fn up_pref(x: &Space, w: &UpWord) -> Result<WordProduct> {
    let suf = up_suf(x, w)?;
    let p = WordProduct::new(prefix_singles(x, w)?).with_star(&suf);
    Ok(words::wp_canon(x, &p))
}

/// The code of the closure of `{w}`.
pub fn up_closure(x: &Space, w: &UpWord, variant: Variant) -> Result<OmegaCode> {
    if variant == Variant::Inf && w.is_finite() {
        return Err(SrepError::FiniteWordInOmega);
    }
    let suf = up_suf(x, w)?;
    let singles = WordProduct::new(prefix_singles(x, w)?);
    if suf.is_empty() {
        return Ok(OmegaCode::new(singles, suf));
    }
    // Only letters can be absorbed here, so the trailing star survives.
    let canon = words::wp_canon(x, &singles.with_star(&suf));
    let prefix = strip_tail(x, &canon, &suf)
        .ok_or_else(|| SrepError::Invariant("closure lost its tail star".to_string()))?;
    Ok(OmegaCode::new(prefix, suf))
}

/// Membership through the prefix/suffix maps: `w ∈ P·u^{≤ω}` iff
/// `pref(w) ⊆ P·u*` and `suf(w) ⊆ u`.
pub fn inf_member(x: &Space, variant: Variant, w: &UpWord, c: &OmegaCode) -> Result<bool> {
    if variant == Variant::Inf && w.is_finite() {
        return Err(SrepError::FiniteWordInOmega);
    }
    x.check_product(&c.prefix)?;
    x.check_closed(&c.tail)?;
    let pref = up_pref(x, w)?;
    let suf = up_suf(x, w)?;
    Ok(suf.leq(x, &c.tail) && words::wp_leq(x, &pref, &c.starred()))
}

/// The subword preorder on finite-or-infinite words, decided as
/// membership of `w` in the closure of `w2`.
pub fn up_subword_leq(x: &Space, w: &UpWord, w2: &UpWord) -> Result<bool> {
    let closure = up_closure(x, w2, Variant::FinOrInf)?;
    inf_member(x, Variant::FinOrInf, w, &closure)
}
