//! Brute-force semantics for differential testing.
//!
//! Everything here is computed from the denotations directly (dynamic
//! programming over words, split search over ultimately periodic words,
//! greedy embeddings) and never goes through the inclusion or meet
//! procedures of the other modules, nor through point closures.
//! Enumeration of points is available for spaces built from finite posets
//! by products, sums and one powerset layer.

use crate::closed::ClosedSet;
use crate::omega::{OmegaCode, UpWord, Variant};
use crate::point::Point;
use crate::poset::FinitePoset;
use crate::space::{Code, Space, SpaceKind};
use crate::words::{Atom, WordProduct};

/// Bounds for enumerating words and ultimately periodic words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_len: usize,
    pub max_prefix: usize,
    pub max_period: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_len: 6,
            max_prefix: 4,
            max_period: 3,
        }
    }
}

/// Whether `p` lies in the set denoted by `code`.
///
/// # Panics
///
/// If the point or the code does not fit the space.
pub fn sem_contains(s: &Space, code: &Code, p: &Point) -> bool {
    match (s.kind(), code, p) {
        (SpaceKind::Base(poset), Code::Elem(c), Point::Elem(x)) => poset.leq(*x, *c),
        (SpaceKind::Product(a, b), Code::Pair(c1, c2), Point::Pair(x, y)) => {
            sem_contains(a, c1, x) && sem_contains(b, c2, y)
        }
        (SpaceKind::Sum(a, _), Code::Left(c), Point::Left(x)) => sem_contains(a, c, x),
        (SpaceKind::Sum(_, b), Code::Right(c), Point::Right(x)) => sem_contains(b, c, x),
        (SpaceKind::Sum(..), Code::Left(_), Point::Right(_))
        | (SpaceKind::Sum(..), Code::Right(_), Point::Left(_)) => false,
        (SpaceKind::Words(x), Code::Word(prod), Point::Word(w)) => sem_member(x, w, prod),
        (SpaceKind::Pow(x), Code::Pow(body), Point::Set(elems)) => {
            elems.iter().all(|e| sem_in_closed(x, body, e))
        }
        (SpaceKind::Omega(variant, x), Code::Omega(c), Point::Up(w)) => {
            sem_inf_member(x, *variant, w, c)
        }
        _ => panic!("oracle: {code:?} / {p:?} do not fit {}", s.describe()),
    }
}

pub fn sem_in_closed(s: &Space, f: &ClosedSet, p: &Point) -> bool {
    f.iter().any(|c| sem_contains(s, c, p))
}

/// Membership of a finite word in a word product by dynamic programming
/// over atom positions.
pub fn sem_member(x: &Space, w: &[Point], p: &WordProduct) -> bool {
    let n = p.atoms.len();
    // live[k]: the letters read so far fit into atoms[..k]; every atom
    // accepts the empty word so liveness propagates to the right
    let mut live = vec![true; n + 1];
    for letter in w {
        let mut next = vec![false; n + 1];
        for k in 0..n {
            if !live[k] {
                continue;
            }
            match &p.atoms[k] {
                Atom::Single(c) => {
                    if sem_contains(x, c, letter) {
                        next[k + 1] = true;
                    }
                }
                Atom::Star(f) => {
                    if sem_in_closed(x, f, letter) {
                        next[k] = true;
                    }
                }
            }
        }
        for k in 1..=n {
            if next[k - 1] {
                next[k] = true;
            }
        }
        live = next;
    }
    live[n]
}

/// Bounded inclusion check: looks for a word of length at most `len` in
/// `⟦p⟧ ∖ ⟦q⟧`.
pub fn sem_subset_upto(x: &Space, p: &WordProduct, q: &WordProduct, len: usize) -> bool {
    let letters = enum_points(x).expect("oracle needs an enumerable alphabet");
    enum_words_over(&letters, len)
        .iter()
        .all(|w| !sem_member(x, w, p) || sem_member(x, w, q))
}

/// `⟦p⟧ ⊆ ⟦q⟧`, searching witnesses up to length `|q| + 1`.
pub fn sem_subset(x: &Space, p: &WordProduct, q: &WordProduct) -> bool {
    sem_subset_upto(x, p, q, q.len() + 1)
}

/// Specialization order on points of a finite space.
pub fn sem_point_leq(s: &Space, p: &Point, q: &Point) -> bool {
    match (s.kind(), p, q) {
        (SpaceKind::Base(poset), Point::Elem(x), Point::Elem(y)) => poset.leq(*x, *y),
        (SpaceKind::Product(a, b), Point::Pair(x1, y1), Point::Pair(x2, y2)) => {
            sem_point_leq(a, x1, x2) && sem_point_leq(b, y1, y2)
        }
        (SpaceKind::Sum(a, _), Point::Left(x), Point::Left(y)) => sem_point_leq(a, x, y),
        (SpaceKind::Sum(_, b), Point::Right(x), Point::Right(y)) => sem_point_leq(b, x, y),
        (SpaceKind::Sum(..), _, _) => false,
        _ => panic!("oracle: point order only for finite spaces, got {}", s.describe()),
    }
}

/// Greedy subword embedding `w ≤* w2`.
pub fn sem_subword(x: &Space, w: &[Point], w2: &[Point]) -> bool {
    let mut pos = 0;
    for l in w {
        match (pos..w2.len()).find(|&i| sem_point_leq(x, l, &w2[i])) {
            Some(i) => pos = i + 1,
            None => return false,
        }
    }
    true
}

fn up_letter(w: &UpWord, i: usize) -> &Point {
    if i < w.prefix.len() {
        &w.prefix[i]
    } else {
        &w.period[(i - w.prefix.len()) % w.period.len()]
    }
}

fn up_head(w: &UpWord, n: usize) -> Vec<Point> {
    (0..n).map(|i| up_letter(w, i).clone()).collect()
}

/// Membership of an ultimately periodic word in `P·u^{≤ω}` (or `P·u^ω`)
/// by searching a split point `n`: the head `w_{<n}` must lie in `P·u*`
/// and every later letter in `u`.
pub fn sem_inf_member(x: &Space, variant: Variant, w: &UpWord, c: &OmegaCode) -> bool {
    assert!(
        variant == Variant::FinOrInf || !w.is_finite(),
        "oracle: finite word queried in an infinite-word space"
    );
    let head_lang = c.prefix.with_star(&c.tail);
    if w.is_finite() {
        return (0..=w.prefix.len()).any(|n| {
            w.prefix[n..].iter().all(|l| sem_in_closed(x, &c.tail, l))
                && sem_member(x, &w.prefix[..n], &head_lang)
        });
    }
    let periodic_ok = w.period.iter().all(|l| sem_in_closed(x, &c.tail, l));
    if !periodic_ok {
        return false;
    }
    let bound = w.prefix.len() + w.period.len() * (c.prefix.len() + 2);
    (0..=bound).any(|n| {
        let rest_ok = n >= w.prefix.len()
            || w.prefix[n..].iter().all(|l| sem_in_closed(x, &c.tail, l));
        rest_ok && sem_member(x, &up_head(w, n), &head_lang)
    })
}

/// Subword order on finite-or-infinite ultimately periodic words by
/// greedy embedding: the prefix of `w` is matched leftmost into `w2`,
/// then the period of `w` must be dominated letterwise by the period of
/// `w2`.
pub fn sem_up_subword(x: &Space, w: &UpWord, w2: &UpWord) -> bool {
    if !w.is_finite() && w2.is_finite() {
        return false;
    }
    let mut pos = 0;
    for l in &w.prefix {
        let limit = if w2.is_finite() {
            w2.prefix.len()
        } else {
            pos.max(w2.prefix.len()) + w2.period.len()
        };
        match (pos..limit).find(|&i| sem_point_leq(x, l, up_letter(w2, i))) {
            Some(i) => pos = i + 1,
            None => return false,
        }
    }
    w.period
        .iter()
        .all(|l| w2.period.iter().any(|m| sem_point_leq(x, l, m)))
}

/// All points of a finite space, or `None` when the space is infinite.
/// Powersets enumerate every subset of their finite alphabet.
pub fn enum_points(s: &Space) -> Option<Vec<Point>> {
    match s.kind() {
        SpaceKind::Base(p) => Some(p.elements().map(Point::Elem).collect()),
        SpaceKind::Product(a, b) => {
            let (xs, ys) = (enum_points(a)?, enum_points(b)?);
            let mut out = Vec::with_capacity(xs.len() * ys.len());
            for x in &xs {
                for y in &ys {
                    out.push(Point::pair(x.clone(), y.clone()));
                }
            }
            Some(out)
        }
        SpaceKind::Sum(a, b) => {
            let mut out: Vec<Point> = enum_points(a)?.into_iter().map(Point::left).collect();
            out.extend(enum_points(b)?.into_iter().map(Point::right));
            Some(out)
        }
        SpaceKind::Pow(x) => {
            let elems = enum_points(x)?;
            if elems.len() > 16 {
                return None;
            }
            Some(
                (0u32..(1 << elems.len()))
                    .map(|mask| {
                        Point::Set(
                            elems
                                .iter()
                                .enumerate()
                                .filter(|(i, _)| mask & (1 << i) != 0)
                                .map(|(_, e)| e.clone())
                                .collect(),
                        )
                    })
                    .collect(),
            )
        }
        SpaceKind::Words(_) | SpaceKind::Omega(..) => None,
    }
}

/// All words of length at most `max_len` over the given letters, in
/// length-lexicographic order.
pub fn enum_words_over(letters: &[Point], max_len: usize) -> Vec<Vec<Point>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<Point>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for l in letters {
                let mut v = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn enum_words(poset: &FinitePoset, max_len: usize) -> Vec<Vec<Point>> {
    let letters: Vec<Point> = poset.elements().map(Point::Elem).collect();
    enum_words_over(&letters, max_len)
}

/// Ultimately periodic words with bounded prefix and period. The
/// `FinOrInf` variant also yields finite words (empty period).
pub fn enum_up_words(
    letters: &[Point],
    max_prefix: usize,
    max_period: usize,
    variant: Variant,
) -> Vec<UpWord> {
    let prefixes = enum_words_over(letters, max_prefix);
    let periods: Vec<Vec<Point>> = enum_words_over(letters, max_period)
        .into_iter()
        .filter(|p| variant == Variant::FinOrInf || !p.is_empty())
        .collect();
    let mut out = Vec::with_capacity(prefixes.len() * periods.len());
    for u in &prefixes {
        for v in &periods {
            out.push(UpWord::new(u.clone(), v.clone()));
        }
    }
    out
}
