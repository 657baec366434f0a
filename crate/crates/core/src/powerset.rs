//! Powerset under the lower Vietoris topology.
//!
//! A powerset code is a closed set `F = C₁ ∪ ⋯ ∪ Cₙ` of the alphabet
//! (stored as [`Code::Pow`]) and denotes the family of all subsets of
//! `F`. Meets of such families are again principal, so `pow_meet` always
//! returns exactly one code.

use crate::closed::ClosedSet;
use crate::error::Result;
use crate::space::{Code, Space};

pub fn pow_leq(x: &Space, u: &ClosedSet, v: &ClosedSet) -> Result<bool> {
    x.check_closed(u)?;
    x.check_closed(v)?;
    Ok(u.leq(x, v))
}

pub fn pow_meet(x: &Space, u: &ClosedSet, v: &ClosedSet) -> Result<Vec<ClosedSet>> {
    x.check_closed(u)?;
    x.check_closed(v)?;
    Ok(vec![u.inter(x, v)?])
}

pub fn pow_top(x: &Space) -> Vec<ClosedSet> {
    vec![x.top().clone()]
}

/// Wraps a body as a code of `pow(x)`.
pub fn pow_code(x: &Space, codes: Vec<Code>) -> Result<Code> {
    for c in &codes {
        x.check(c)?;
    }
    Ok(Code::Pow(ClosedSet::reduce(x, codes)))
}
