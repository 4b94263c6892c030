//! Diagram partitions, their product and structural invariants.
//!
//! A diagram on `n` points is a set partition of the `2n` vertices
//! `0..2n`, where vertex `i < n` is the upper point `i + 1` and vertex
//! `n + i` is the lower point `(i + 1)'`. Internally a diagram is a
//! restricted-growth string over those vertices, so blocks are always kept
//! in canonical order (sorted by least vertex) and equality is equality of
//! label strings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::equivalence::EquivalenceRelation;
use crate::error::{Error, Result};
use crate::family::MonoidFamily;
use crate::lambda::LambdaGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramPartition {
    n: usize,
    labels: Vec<u16>,
}

/// Rank, domains and kernels of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructuralProfile {
    pub rank: usize,
    /// Upper points (1-based) whose block reaches the lower row.
    pub upper_domain: Vec<usize>,
    /// Lower points (1-based) whose block reaches the upper row.
    pub lower_domain: Vec<usize>,
    pub upper_kernel: EquivalenceRelation,
    pub lower_kernel: EquivalenceRelation,
    /// Join of the upper and lower kernels.
    pub kernel: EquivalenceRelation,
}

/// Output of [`DiagramPartition::multiply`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub product: DiagramPartition,
    /// Number of product-graph components lying entirely in the middle row.
    pub middle: usize,
}

/// One irreducible summand: a kernel class (1-based points) and the
/// restriction of the diagram to it, re-indexed onto `1..=class.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub class: Vec<usize>,
    pub part: DiagramPartition,
}

/// Row of a vertex of the three-row product graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row {
    Top,
    Middle,
    Bottom,
}

/// Connectivity of the product graph of two diagrams on `n` points.
///
/// Nodes are `Top` = upper row of the left factor, `Middle` = its lower row
/// glued to the upper row of the right factor, `Bottom` = lower row of the
/// right factor.
pub struct ProductGraph {
    n: usize,
    sets: DisjointSets,
}

impl ProductGraph {
    pub fn new(a: &DiagramPartition, b: &DiagramPartition) -> Result<Self> {
        if a.n != b.n {
            return Err(Error::DimensionMismatch {
                left: a.n,
                right: b.n,
            });
        }
        let n = a.n;
        let mut sets = DisjointSets::new(3 * n);
        // a occupies nodes 0..2n as is; b is shifted by n.
        for (diagram, offset) in [(a, 0), (b, n)] {
            let mut first = vec![usize::MAX; diagram.block_count()];
            for (v, &l) in diagram.labels.iter().enumerate() {
                let f = &mut first[l as usize];
                if *f == usize::MAX {
                    *f = v;
                } else {
                    sets.union(*f + offset, v + offset);
                }
            }
        }
        Ok(ProductGraph { n, sets })
    }

    fn node(&self, row: Row, point: usize) -> usize {
        debug_assert!(point >= 1 && point <= self.n);
        let i = point - 1;
        match row {
            Row::Top => i,
            Row::Middle => self.n + i,
            Row::Bottom => 2 * self.n + i,
        }
    }

    /// Whether two 1-based points are joined by a path.
    pub fn connected(&mut self, a: (Row, usize), b: (Row, usize)) -> bool {
        let (x, y) = (self.node(a.0, a.1), self.node(b.0, b.1));
        self.sets.same(x, y)
    }

    pub fn product(&mut self) -> Product {
        let n = self.n;
        let mut label_of = vec![u16::MAX; 3 * n];
        let mut next = 0u16;
        let labels: Vec<u16> = (0..n)
            .chain(2 * n..3 * n)
            .map(|v| {
                let r = self.sets.find(v);
                if label_of[r] == u16::MAX {
                    label_of[r] = next;
                    next += 1;
                }
                label_of[r]
            })
            .collect();
        let outer_roots: Vec<bool> = label_of.iter().map(|&l| l != u16::MAX).collect();
        let mut middle_roots = vec![false; 3 * n];
        for v in n..2 * n {
            let r = self.sets.find(v);
            if !outer_roots[r] {
                middle_roots[r] = true;
            }
        }
        Product {
            product: DiagramPartition { n, labels },
            middle: middle_roots.iter().filter(|&&m| m).count(),
        }
    }
}

impl DiagramPartition {
    /// Builds a diagram from 0-based vertex blocks, validating that they
    /// partition `0..2n`.
    pub fn new(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut owner = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &v in block {
                if v >= 2 * n {
                    return Err(Error::Index { index: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::Overlap { vertex: v });
                }
                owner[v] = b;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Coverage { vertex: v });
        }
        Ok(Self::from_keys(n, &owner))
    }

    /// Builds a diagram from any block labelling of the `2n` vertices.
    pub fn from_keys<K: PartialEq>(n: usize, keys: &[K]) -> Self {
        assert_eq!(keys.len(), 2 * n);
        let labels = EquivalenceRelation::from_keys(2 * n, |i| &keys[i])
            .labels()
            .to_vec();
        DiagramPartition { n, labels }
    }

    /// Wraps a restricted-growth string; the caller guarantees canonicity.
    pub(crate) fn from_rgs(n: usize, labels: Vec<u16>) -> Self {
        debug_assert_eq!(labels.len(), 2 * n);
        DiagramPartition { n, labels }
    }

    /// The identity `{{1,1'}, ..., {n,n'}}`; the empty diagram when `n == 0`.
    pub fn identity(n: usize) -> Self {
        let keys: Vec<usize> = (0..n).chain(0..n).collect();
        Self::from_keys(n, &keys)
    }

    /// The diagram induced by a permutation of `1..=n` (`perm[i-1]` is the
    /// image of `i`), with blocks `{i, perm(i)'}`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let blocks: Vec<Vec<usize>> = perm
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![i, n + p.wrapping_sub(1)])
            .collect();
        Self::new(n, &blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Restricted-growth labels over the `2n` vertices.
    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Blocks as sorted 0-based vertex lists, ordered by least vertex.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(v);
        }
        out
    }

    fn block_shape(&self) -> Vec<(usize, usize)> {
        let mut shape = vec![(0, 0); self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            if v < self.n {
                shape[l as usize].0 += 1;
            } else {
                shape[l as usize].1 += 1;
            }
        }
        shape
    }

    /// Number of transversal blocks.
    pub fn rank(&self) -> usize {
        self.block_shape()
            .iter()
            .filter(|&&(u, l)| u > 0 && l > 0)
            .count()
    }

    pub fn multiply(&self, other: &DiagramPartition) -> Result<Product> {
        Ok(ProductGraph::new(self, other)?.product())
    }

    pub fn profile(&self) -> StructuralProfile {
        let n = self.n;
        let shape = self.block_shape();
        let transversal = |v: usize| {
            let (u, l) = shape[self.labels[v] as usize];
            u > 0 && l > 0
        };
        let upper_domain = (0..n).filter(|&i| transversal(i)).map(|i| i + 1).collect();
        let lower_domain = (0..n)
            .filter(|&i| transversal(n + i))
            .map(|i| i + 1)
            .collect();
        let upper_kernel = EquivalenceRelation::from_keys(n, |i| self.labels[i]);
        let lower_kernel = EquivalenceRelation::from_keys(n, |i| self.labels[n + i]);
        let kernel = upper_kernel.join(&lower_kernel).expect("same size");
        StructuralProfile {
            rank: self.rank(),
            upper_domain,
            lower_domain,
            upper_kernel,
            lower_kernel,
            kernel,
        }
    }

    pub fn kernel(&self) -> EquivalenceRelation {
        self.profile().kernel
    }

    pub fn is_irreducible(&self) -> bool {
        self.kernel().is_universal()
    }

    /// Splits the diagram along its kernel classes.
    ///
    /// Fails with [`Error::NotDecomposable`] when some block meets two
    /// kernel classes.
    pub fn decompose_irreducible(&self) -> Result<Vec<Summand>> {
        let n = self.n;
        let kernel = self.kernel();
        let point_class = |v: usize| kernel.labels()[if v < n { v } else { v - n }];
        let mut block_class: Vec<Option<u16>> = vec![None; self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            let c = point_class(v);
            match block_class[l as usize] {
                None => block_class[l as usize] = Some(c),
                Some(prev) if prev != c => return Err(Error::NotDecomposable),
                Some(_) => {}
            }
        }
        Ok(kernel
            .classes()
            .into_iter()
            .map(|class| {
                let m = class.len();
                let keys: Vec<u16> = class
                    .iter()
                    .map(|&p| self.labels[p - 1])
                    .chain(class.iter().map(|&p| self.labels[n + p - 1]))
                    .collect();
                let part = Self::from_keys(m, &keys);
                Summand { class, part }
            })
            .collect())
    }

    /// Reassembles a diagram on `n` points from summands over disjoint
    /// classes covering `1..=n`.
    pub fn direct_sum(n: usize, summands: &[Summand]) -> Result<Self> {
        let mut keys = vec![(usize::MAX, 0u16); 2 * n];
        for (s, summand) in summands.iter().enumerate() {
            let m = summand.class.len();
            if summand.part.n != m {
                return Err(Error::DimensionMismatch {
                    left: summand.part.n,
                    right: m,
                });
            }
            for (j, &p) in summand.class.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::Index { index: p, n });
                }
                if keys[p - 1].0 != usize::MAX {
                    return Err(Error::Overlap { vertex: p - 1 });
                }
                keys[p - 1] = (s, summand.part.labels[j]);
                keys[n + p - 1] = (s, summand.part.labels[m + j]);
            }
        }
        if let Some(v) = keys.iter().position(|k| k.0 == usize::MAX) {
            return Err(Error::Coverage { vertex: v });
        }
        Ok(Self::from_keys(n, &keys))
    }

    /// Membership in the given family.
    pub fn belongs_to(&self, family: MonoidFamily) -> bool {
        let shape = self.block_shape();
        match family {
            MonoidFamily::P => true,
            MonoidFamily::PB => shape.iter().all(|&(u, l)| u + l <= 2),
            MonoidFamily::B => shape.iter().all(|&(u, l)| u + l == 2),
            MonoidFamily::T => {
                let p = self.profile();
                p.upper_domain.len() == self.n && p.lower_kernel.is_trivial()
            }
            MonoidFamily::I => {
                let p = self.profile();
                p.upper_kernel.is_trivial() && p.lower_kernel.is_trivial()
            }
            MonoidFamily::Idual => shape.iter().all(|&(u, l)| u > 0 && l > 0),
        }
    }

    /// The two-coloured graph of a partial Brauer diagram.
    pub fn lambda_graph(&self) -> Result<LambdaGraph> {
        LambdaGraph::of(self)
    }

    /// Parses the text format with an explicit number of points.
    pub fn parse_with_n(s: &str, n: usize) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|(p, lower)| if lower { n + p - 1 } else { p - 1 })
                    .collect()
            })
            .collect();
        for b in &blocks {
            for &v in b {
                if v >= 2 * n {
                    return Err(Error::Index { index: v, n });
                }
            }
        }
        Self::new(n, &blocks)
    }
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<(usize, bool)>>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split('|')
        .map(|block| {
            block
                .split(',')
                .map(|tok| {
                    let tok: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
                    let (digits, lower) = match tok.strip_suffix('\'') {
                        Some(d) => (d.to_string(), true),
                        None => (tok.clone(), false),
                    };
                    if digits.is_empty() {
                        return Err(Error::EmptyBlock);
                    }
                    let p: usize = digits
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad point `{tok}`")))?;
                    if p == 0 {
                        return Err(Error::Parse("points are numbered from 1".into()));
                    }
                    Ok((p, lower))
                })
                .collect()
        })
        .collect()
}

impl FromStr for DiagramPartition {
    type Err = Error;

    /// Parses `1,4|2,3,4',5'|...`, taking `n` to be the largest point named.
    fn from_str(s: &str) -> Result<Self> {
        let n = parse_blocks(s)?
            .iter()
            .flatten()
            .map(|&(p, _)| p)
            .max()
            .unwrap_or(0);
        Self::parse_with_n(s, n)
    }
}

impl fmt::Display for DiagramPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            for (k, &v) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                if v < n {
                    write!(f, "{}", v + 1)?;
                } else {
                    write!(f, "{}'", v - n + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Validating constructor over 0-based vertex blocks.
pub fn make_partition(n: usize, blocks: &[Vec<usize>]) -> Result<DiagramPartition> {
    DiagramPartition::new(n, blocks)
}
