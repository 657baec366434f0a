//! Finite partially ordered sets, the ground alphabets of every space.

use crate::error::{Result, SrepError};

/// A finite poset with named elements. Elements are identified by their
/// index in declaration order; `leq` is stored as a reflexive-transitive
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds a poset from element names and covering pairs `(lo, hi)`,
    /// meaning `lo < hi`. The order is the reflexive-transitive closure of
    /// the pairs; a cycle is rejected.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(SrepError::DuplicateElement(n.clone()));
            }
        }
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(SrepError::UnknownElement(format!("#{}", lo.max(hi))));
            }
            leq[lo][hi] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    let row_k = leq[k].clone();
                    for (cell, &via) in leq[i].iter_mut().zip(&row_k) {
                        *cell |= via;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(SrepError::NotAntisymmetric(
                        names[i].clone(),
                        names[j].clone(),
                    ));
                }
            }
        }
        Ok(FinitePoset { names, leq })
    }

    /// Same as [`FinitePoset::new`] with covering pairs given by name.
    pub fn from_names(elements: &[&str], covers: &[(&str, &str)]) -> Result<Self> {
        let index = |s: &str| {
            elements
                .iter()
                .position(|e| *e == s)
                .ok_or_else(|| SrepError::UnknownElement(s.to_string()))
        };
        let pairs = covers
            .iter()
            .map(|(lo, hi)| Ok((index(lo)?, index(hi)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements.iter().copied(), &pairs)
    }

    pub fn antichain(elements: &[&str]) -> Self {
        Self::from_names(elements, &[]).expect("distinct names")
    }

    /// A chain `e0 < e1 < ...`.
    pub fn chain(elements: &[&str]) -> Self {
        let covers: Vec<(usize, usize)> = (1..elements.len()).map(|i| (i - 1, i)).collect();
        Self::new(elements.iter().copied(), &covers).expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// Maximal elements of `subset`, in increasing index order.
    pub fn maximal(&self, subset: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&x| !subset.iter().any(|&y| y != x && self.leq(x, y)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Maximal elements of `↓x ∩ ↓y`.
    pub fn meet(&self, x: usize, y: usize) -> Vec<usize> {
        let below: Vec<usize> = self
            .elements()
            .filter(|&z| self.leq(z, x) && self.leq(z, y))
            .collect();
        self.maximal(&below)
    }

    pub fn top(&self) -> Vec<usize> {
        let all: Vec<usize> = self.elements().collect();
        self.maximal(&all)
    }
}
