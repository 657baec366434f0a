//! Exhaustive and random generation of codes and points, for tests and
//! the command-line cross-checker.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::closed::ClosedSet;
use crate::omega::{OmegaCode, UpWord, Variant};
use crate::point::Point;
use crate::space::{Code, Space, SpaceKind};
use crate::words::{Atom, WordProduct};

/// Every code of a finite space (products and sums of posets).
pub fn enum_codes(s: &Space) -> Option<Vec<Code>> {
    match s.kind() {
        SpaceKind::Base(p) => Some(p.elements().map(Code::Elem).collect()),
        SpaceKind::Product(a, b) => {
            let (xs, ys) = (enum_codes(a)?, enum_codes(b)?);
            let mut out = Vec::new();
            for x in &xs {
                for y in &ys {
                    out.push(Code::pair(x.clone(), y.clone()));
                }
            }
            Some(out)
        }
        SpaceKind::Sum(a, b) => {
            let mut out: Vec<Code> = enum_codes(a)?.into_iter().map(Code::left).collect();
            out.extend(enum_codes(b)?.into_iter().map(Code::right));
            Some(out)
        }
        _ => None,
    }
}

/// Every antichain of codes of a finite space, the empty one first.
pub fn enum_antichains(s: &Space) -> Option<Vec<ClosedSet>> {
    let codes = enum_codes(s)?;
    let mut out = Vec::new();
    for mask in 0u32..(1 << codes.len()) {
        let pick: Vec<Code> = codes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, c)| c.clone())
            .collect();
        let set = ClosedSet::reduce(s, pick.clone());
        if set.len() == pick.len() {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Some(out)
}

/// Atoms over a finite alphabet: every `c?` and every `F*` with `F` a
/// non-empty antichain.
pub fn enum_atoms(x: &Space) -> Option<Vec<Atom>> {
    let mut out: Vec<Atom> = enum_codes(x)?.into_iter().map(Atom::Single).collect();
    out.extend(
        enum_antichains(x)?
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(Atom::Star),
    );
    Some(out)
}

/// All products of at most `max_atoms` atoms drawn from `atoms`.
pub fn enum_products(atoms: &[Atom], max_atoms: usize) -> Vec<WordProduct> {
    let mut out = vec![WordProduct::epsilon()];
    let mut layer = vec![WordProduct::epsilon()];
    for _ in 0..max_atoms {
        let mut next = Vec::new();
        for p in &layer {
            for a in atoms {
                let mut q = p.clone();
                q.atoms.push(a.clone());
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Omega codes with at most `max_atoms` leading atoms over a finite
/// alphabet; tails are non-empty for the infinite-word variant.
pub fn enum_omega_codes(x: &Space, max_atoms: usize, variant: Variant) -> Option<Vec<OmegaCode>> {
    let products = enum_products(&enum_atoms(x)?, max_atoms);
    let tails: Vec<ClosedSet> = enum_antichains(x)?
        .into_iter()
        .filter(|t| variant == Variant::FinOrInf || !t.is_empty())
        .collect();
    let mut out = Vec::with_capacity(products.len() * tails.len());
    for p in &products {
        for t in &tails {
            out.push(OmegaCode::new(p.clone(), t.clone()));
        }
    }
    Some(out)
}

/// Random closed set of up to `max` components.
pub fn random_closed<R: Rng>(x: &Space, rng: &mut R, max: usize, depth: usize) -> ClosedSet {
    let n = rng.gen_range(0..=max);
    let codes = (0..n).filter_map(|_| random_code(x, rng, depth)).collect();
    ClosedSet::reduce(x, codes)
}

fn random_nonempty_closed<R: Rng>(x: &Space, rng: &mut R, depth: usize) -> ClosedSet {
    for _ in 0..8 {
        let f = random_closed(x, rng, 2, depth);
        if !f.is_empty() {
            return f;
        }
    }
    x.top().clone()
}

pub fn random_atom<R: Rng>(x: &Space, rng: &mut R, depth: usize) -> Option<Atom> {
    if rng.gen_bool(0.5) {
        random_code(x, rng, depth).map(Atom::Single)
    } else {
        Some(Atom::Star(random_nonempty_closed(x, rng, depth)))
    }
}

pub fn random_product<R: Rng>(x: &Space, rng: &mut R, max_atoms: usize, depth: usize) -> WordProduct {
    let n = rng.gen_range(0..=max_atoms);
    WordProduct::new((0..n).filter_map(|_| random_atom(x, rng, depth)).collect())
}

/// Random code of `s`; `depth` limits the size of nested word products.
/// Returns `None` only for a space without points.
pub fn random_code<R: Rng>(s: &Space, rng: &mut R, depth: usize) -> Option<Code> {
    let inner_atoms = if depth > 1 { 2 } else { 3 };
    Some(match s.kind() {
        SpaceKind::Base(p) => {
            if p.is_empty() {
                return None;
            }
            Code::Elem(rng.gen_range(0..p.len()))
        }
        SpaceKind::Product(a, b) => Code::pair(random_code(a, rng, depth)?, random_code(b, rng, depth)?),
        SpaceKind::Sum(a, b) => {
            if rng.gen_bool(0.5) {
                Code::left(random_code(a, rng, depth)?)
            } else {
                Code::right(random_code(b, rng, depth)?)
            }
        }
        SpaceKind::Words(x) => Code::Word(random_product(x, rng, inner_atoms, depth + 1)),
        SpaceKind::Pow(x) => Code::Pow(random_closed(x, rng, 2, depth + 1)),
        SpaceKind::Omega(variant, x) => {
            let prefix = random_product(x, rng, inner_atoms.min(2), depth + 1);
            let tail = match variant {
                Variant::FinOrInf => random_closed(x, rng, 2, depth + 1),
                Variant::Inf => random_nonempty_closed(x, rng, depth + 1),
            };
            if *variant == Variant::Inf && tail.is_empty() {
                return None;
            }
            Code::Omega(OmegaCode::new(prefix, tail))
        }
    })
}

/// Random point of `s`. Ultimately periodic words get prefixes of at
/// most 3 letters and periods of at most 2.
pub fn random_point<R: Rng>(s: &Space, rng: &mut R) -> Option<Point> {
    Some(match s.kind() {
        SpaceKind::Base(p) => {
            if p.is_empty() {
                return None;
            }
            Point::Elem(rng.gen_range(0..p.len()))
        }
        SpaceKind::Product(a, b) => Point::pair(random_point(a, rng)?, random_point(b, rng)?),
        SpaceKind::Sum(a, b) => {
            if rng.gen_bool(0.5) {
                Point::left(random_point(a, rng)?)
            } else {
                Point::right(random_point(b, rng)?)
            }
        }
        SpaceKind::Words(x) => {
            let n = rng.gen_range(0..=3);
            Point::Word((0..n).filter_map(|_| random_point(x, rng)).collect())
        }
        SpaceKind::Pow(x) => {
            let n = rng.gen_range(0..=2);
            Point::Set((0..n).filter_map(|_| random_point(x, rng)).collect())
        }
        SpaceKind::Omega(variant, x) => {
            let min_period = usize::from(*variant == Variant::Inf);
            Point::Up(random_up_word(x, rng, 3, min_period, 2)?)
        }
    })
}

pub fn random_up_word<R: Rng>(
    x: &Space,
    rng: &mut R,
    max_prefix: usize,
    min_period: usize,
    max_period: usize,
) -> Option<UpWord> {
    let n = rng.gen_range(0..=max_prefix);
    let m = rng.gen_range(min_period..=max_period);
    let prefix = (0..n).map(|_| random_point(x, rng)).collect::<Option<Vec<_>>>()?;
    let period = (0..m).map(|_| random_point(x, rng)).collect::<Option<Vec<_>>>()?;
    Some(UpWord::new(prefix, period))
}

/// Picks a random element of a non-empty slice.
pub fn pick<'a, T, R: Rng>(items: &'a [T], rng: &mut R) -> &'a T {
    items.choose(rng).expect("non-empty")
}
