use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

/// An equivalence relation on `{1, ..., n}`.
///
/// Stored as a restricted-growth string: point `i` (1-based) carries label
/// `labels[i - 1]`, labels appear in order of first use. Two relations are
/// equal exactly when their label strings are equal, which matches the
/// canonical class ordering (classes sorted by least element).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EquivalenceRelation {
    labels: Vec<u16>,
}

impl EquivalenceRelation {
    /// The equality relation, every class a singleton.
    pub fn trivial(n: usize) -> Self {
        EquivalenceRelation {
            labels: (0..n as u16).collect(),
        }
    }

    /// The universal relation, a single class (empty when `n == 0`).
    pub fn universal(n: usize) -> Self {
        EquivalenceRelation { labels: vec![0; n] }
    }

    /// Builds a relation from 1-based classes.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &x in class {
                if x == 0 || x > n {
                    return Err(Error::Index { index: x, n });
                }
                if owner[x - 1] != usize::MAX {
                    return Err(Error::Overlap { vertex: x });
                }
                owner[x - 1] = c;
            }
        }
        if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Coverage { vertex: i + 1 });
        }
        Ok(Self::from_keys(n, |i| owner[i]))
    }

    /// Builds the relation "same key" on `0..n` (reported 1-based).
    pub(crate) fn from_keys<K: PartialEq>(n: usize, mut key: impl FnMut(usize) -> K) -> Self {
        let mut seen: Vec<K> = Vec::new();
        let labels = (0..n)
            .map(|i| {
                let k = key(i);
                match seen.iter().position(|s| *s == k) {
                    Some(p) => p as u16,
                    None => {
                        seen.push(k);
                        (seen.len() - 1) as u16
                    }
                }
            })
            .collect();
        EquivalenceRelation { labels }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Restricted-growth labels, 0-based positions.
    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    /// Number of classes, `|n / ε|`.
    pub fn class_count(&self) -> usize {
        self.labels
            .iter()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Classes as sorted 1-based lists, ordered by least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(i + 1);
        }
        out
    }

    /// Whether 1-based points `x` and `y` are related.
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x - 1] == self.labels[y - 1]
    }

    pub fn is_trivial(&self) -> bool {
        self.class_count() == self.n()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count() <= 1
    }

    /// Least equivalence containing both relations.
    pub fn join(&self, other: &EquivalenceRelation) -> Result<EquivalenceRelation> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let n = self.n();
        let mut d = DisjointSets::new(n);
        for rel in [self, other] {
            let mut first = vec![usize::MAX; rel.class_count()];
            for (i, &l) in rel.labels.iter().enumerate() {
                let f = &mut first[l as usize];
                if *f == usize::MAX {
                    *f = i;
                } else {
                    d.union(*f, i);
                }
            }
        }
        Ok(EquivalenceRelation {
            labels: d.labels(0..n),
        })
    }

    /// Multiset of class sizes, indexed by size: entry `i` counts classes of size `i`.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut mu = vec![0; self.n() + 1];
        for class in self.classes() {
            mu[class.len()] += 1;
        }
        mu
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_round_trip() {
        let e =
            EquivalenceRelation::from_classes(6, &[vec![4, 1], vec![2, 3], vec![5, 6]]).unwrap();
        assert_eq!(e.classes(), vec![vec![1, 4], vec![2, 3], vec![5, 6]]);
        assert_eq!(e.class_count(), 3);
        assert!(e.related(1, 4));
        assert!(!e.related(1, 2));
    }

    #[test]
    fn join_is_transitive_closure() {
        let a =
            EquivalenceRelation::from_classes(6, &[vec![1, 4], vec![2, 3], vec![5, 6]]).unwrap();
        let b =
            EquivalenceRelation::from_classes(6, &[vec![1, 3, 6], vec![2], vec![4, 5]]).unwrap();
        assert!(a.join(&b).unwrap().is_universal());
        let c = EquivalenceRelation::from_classes(6, &[vec![1, 3], vec![2, 4], vec![5], vec![6]])
            .unwrap();
        let d = EquivalenceRelation::from_classes(6, &[vec![1], vec![2], vec![3], vec![4, 5, 6]])
            .unwrap();
        assert_eq!(
            c.join(&d).unwrap().classes(),
            vec![vec![1, 3], vec![2, 4, 5, 6]]
        );
    }

    #[test]
    fn rejects_bad_classes() {
        assert_eq!(
            EquivalenceRelation::from_classes(2, &[vec![1, 2], vec![2]]),
            Err(Error::Overlap { vertex: 2 })
        );
        assert_eq!(
            EquivalenceRelation::from_classes(3, &[vec![1, 2]]),
            Err(Error::Coverage { vertex: 3 })
        );
    }

    #[test]
    fn empty_relation() {
        let e = EquivalenceRelation::trivial(0);
        assert_eq!(e, EquivalenceRelation::universal(0));
        assert_eq!(e.class_count(), 0);
        assert!(e.is_trivial() && e.is_universal());
    }
}
