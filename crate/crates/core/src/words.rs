//! Word products: codes for the irreducible closed subsets of the space
//! of finite words over an alphabet space, with the subword topology.

use std::collections::HashMap;

use crate::closed::{antichain_reduce, ClosedSet};
use crate::error::Result;
use crate::point::{self, Point};
use crate::space::{Code, Space};

/// `Single(c)` is `c?`: the empty word or one letter in the set denoted by
/// `c`. `Star(F)` is `F*`: any word whose letters all lie in `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Single(Code),
    Star(ClosedSet),
}

impl Atom {
    fn is_empty_star(&self) -> bool {
        matches!(self, Atom::Star(f) if f.is_empty())
    }
}

/// A concatenation of atoms; the empty product is `ε`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordProduct {
    pub atoms: Vec<Atom>,
}

impl WordProduct {
    pub fn new(atoms: Vec<Atom>) -> Self {
        WordProduct { atoms }
    }

    pub fn epsilon() -> Self {
        WordProduct { atoms: Vec::new() }
    }

    pub fn is_epsilon(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `self · F*`; an empty `F` leaves the product unchanged.
    pub fn with_star(&self, f: &ClosedSet) -> WordProduct {
        let mut atoms = self.atoms.clone();
        if !f.is_empty() {
            atoms.push(Atom::Star(f.clone()));
        }
        WordProduct { atoms }
    }

    fn prepend(&self, atom: Atom) -> WordProduct {
        let mut atoms = Vec::with_capacity(self.atoms.len() + 1);
        atoms.push(atom);
        atoms.extend(self.atoms.iter().cloned());
        WordProduct { atoms }
    }

    fn without_empty_stars(&self) -> WordProduct {
        WordProduct {
            atoms: self
                .atoms
                .iter()
                .filter(|a| !a.is_empty_star())
                .cloned()
                .collect(),
        }
    }
}

/// Inclusion of word products, decided by a left-to-right scan.
pub fn wp_leq(x: &Space, p: &WordProduct, q: &WordProduct) -> bool {
    let (p, q) = (&p.atoms, &q.atoms);
    let (mut i, mut j) = (0, 0);
    loop {
        // ∅* denotes {ε} and never needs a partner on the right
        while i < p.len() && p[i].is_empty_star() {
            i += 1;
        }
        if i == p.len() {
            return true;
        }
        if j == q.len() {
            return false;
        }
        match (&p[i], &q[j]) {
            (Atom::Single(a), Atom::Single(b)) => {
                if x.leq(a, b) {
                    i += 1;
                }
                j += 1;
            }
            (Atom::Single(a), Atom::Star(v)) => {
                if v.covers(x, a) {
                    i += 1;
                } else {
                    j += 1;
                }
            }
            (Atom::Star(_), Atom::Single(_)) => j += 1,
            (Atom::Star(u), Atom::Star(v)) => {
                if u.leq(x, v) {
                    i += 1;
                } else {
                    j += 1;
                }
            }
        }
    }
}

struct Meet<'a> {
    alphabet: &'a Space,
    left: &'a [Atom],
    right: &'a [Atom],
    memo: HashMap<(usize, usize), Vec<WordProduct>>,
}

impl Meet<'_> {
    /// Meet of the suffixes `left[i..]` and `right[j..]`.
    fn go(&mut self, i: usize, j: usize) -> Result<Vec<WordProduct>> {
        if let Some(hit) = self.memo.get(&(i, j)) {
            return Ok(hit.clone());
        }
        let x = self.alphabet;
        let out = if i == self.left.len() || j == self.right.len() {
            vec![WordProduct::epsilon()]
        } else {
            let mut cands = Vec::new();
            match (&self.left[i], &self.right[j]) {
                (Atom::Single(a), Atom::Single(b)) => {
                    cands.extend(self.go(i, j + 1)?);
                    cands.extend(self.go(i + 1, j)?);
                    let letters = x.meet(a, b)?;
                    let tails = self.go(i + 1, j + 1)?;
                    for c in letters.iter() {
                        for t in &tails {
                            cands.push(t.prepend(Atom::Single(c.clone())));
                        }
                    }
                }
                (Atom::Single(a), Atom::Star(v)) => {
                    let letters = single_star_meet(x, a, v)?;
                    let tails = self.go(i + 1, j)?;
                    if letters.is_empty() {
                        cands.extend(tails);
                    } else {
                        for c in letters.iter() {
                            for t in &tails {
                                cands.push(t.prepend(Atom::Single(c.clone())));
                            }
                        }
                    }
                    cands.extend(self.go(i, j + 1)?);
                }
                (Atom::Star(u), Atom::Single(b)) => {
                    let letters = single_star_meet(x, b, u)?;
                    let tails = self.go(i, j + 1)?;
                    if letters.is_empty() {
                        cands.extend(tails);
                    } else {
                        for c in letters.iter() {
                            for t in &tails {
                                cands.push(t.prepend(Atom::Single(c.clone())));
                            }
                        }
                    }
                    cands.extend(self.go(i + 1, j)?);
                }
                (Atom::Star(u), Atom::Star(v)) => {
                    let star = u.inter(x, v)?;
                    let mut tails = self.go(i + 1, j)?;
                    tails.extend(self.go(i, j + 1)?);
                    if star.is_empty() {
                        cands.extend(tails);
                    } else {
                        for t in tails {
                            cands.push(t.prepend(Atom::Star(star.clone())));
                        }
                    }
                }
            }
            reduce_products(x, cands)
        };
        self.memo.insert((i, j), out.clone());
        Ok(out)
    }
}

/// `⋃_{b ∈ v} a ⋔ b`, reduced.
fn single_star_meet(x: &Space, a: &Code, v: &ClosedSet) -> Result<ClosedSet> {
    let mut all = Vec::new();
    for b in v.iter() {
        all.extend(x.meet(a, b)?.iter().cloned());
    }
    Ok(ClosedSet::reduce(x, all))
}

/// Subsumption removal on a family of word products. Among mutually
/// included products the longest one is kept, so that a product carrying
/// an explicit trailing star wins over a shorter equivalent one.
pub(crate) fn reduce_products(x: &Space, mut cands: Vec<WordProduct>) -> Vec<WordProduct> {
    cands.sort_by_key(|p| std::cmp::Reverse(p.len()));
    antichain_reduce(cands, |p, q| wp_leq(x, p, q))
}

/// Intersection of two word products as an antichain of word products.
///
/// The result is not canonicalized beyond dropping `∅*` atoms: in
/// particular, a trailing star of the form `(u ∩ u')*` produced when both
/// arguments end in stars is preserved, which the omega-word meet relies
/// on.
pub fn wp_meet(x: &Space, p: &WordProduct, q: &WordProduct) -> Result<Vec<WordProduct>> {
    let p = p.without_empty_stars();
    let q = q.without_empty_stars();
    let mut meet = Meet {
        alphabet: x,
        left: &p.atoms,
        right: &q.atoms,
        memo: HashMap::new(),
    };
    let mut out = meet.go(0, 0)?;
    out.sort();
    Ok(out)
}

/// `⊤*`: every finite word.
pub fn wp_top(x: &Space) -> WordProduct {
    WordProduct::new(vec![Atom::Star(x.top().clone())]).without_empty_stars()
}

/// Rewrites a product into a shorter equivalent one: drops `∅*`, merges
/// comparable adjacent stars and absorbs letters into an adjacent star
/// that covers them. Not a unique normal form.
pub fn wp_canon(x: &Space, p: &WordProduct) -> WordProduct {
    let mut atoms = p.without_empty_stars().atoms;
    'outer: loop {
        for k in 1..atoms.len() {
            let drop = match (&atoms[k - 1], &atoms[k]) {
                (Atom::Star(f), Atom::Star(g)) if f.leq(x, g) => Some(k - 1),
                (Atom::Star(f), Atom::Star(g)) if g.leq(x, f) => Some(k),
                (Atom::Single(c), Atom::Star(f)) if f.covers(x, c) => Some(k - 1),
                (Atom::Star(f), Atom::Single(c)) if f.covers(x, c) => Some(k),
                _ => None,
            };
            if let Some(d) = drop {
                atoms.remove(d);
                continue 'outer;
            }
        }
        return WordProduct { atoms };
    }
}

/// The closure of a finite word: `(↓w₀)? (↓w₁)? ⋯ (↓wₙ₋₁)?`.
pub fn closure_fin_word(x: &Space, w: &[Point]) -> Result<WordProduct> {
    let atoms = w
        .iter()
        .map(|l| Ok(Atom::Single(point::closure(x, l)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WordProduct { atoms })
}

/// Membership of a finite word in a word product.
pub fn wp_member(x: &Space, w: &[Point], p: &WordProduct) -> Result<bool> {
    x.check_product(p)?;
    Ok(wp_leq(x, &closure_fin_word(x, w)?, p))
}
