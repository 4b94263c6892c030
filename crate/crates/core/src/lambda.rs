//! Two-coloured loop graphs of partial Brauer diagrams.
//!
//! Red items record the upper row: an edge `{i, j}` for each upper block
//! `{i, j}` and a loop at `i` for each singleton block `{i}`. Blue items
//! record the lower row the same way. Points lying in transversal blocks
//! carry no item of that colour.

use serde::{Deserialize, Serialize};

use crate::diagram::DiagramPartition;
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

/// One colour class of a [`LambdaGraph`]: sorted 1-based edges `(i, j)`
/// with `i < j`, and sorted loop vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfGraph {
    pub edges: Vec<(usize, usize)>,
    pub loops: Vec<usize>,
}

impl HalfGraph {
    fn validate(&self, n: usize, colour: &str) -> Result<()> {
        let mut used = vec![false; n + 1];
        let mut mark = |v: usize| -> Result<()> {
            if v == 0 || v > n {
                return Err(Error::Index { index: v, n });
            }
            if used[v] {
                return Err(Error::Domain(format!(
                    "vertex {v} carries two {colour} items"
                )));
            }
            used[v] = true;
            Ok(())
        };
        for &(a, b) in &self.edges {
            if a == b {
                return Err(Error::Domain(format!("{colour} edge ({a}, {b}) is a loop")));
            }
            mark(a)?;
            mark(b)?;
        }
        for &v in &self.loops {
            mark(v)?;
        }
        Ok(())
    }

    fn normalise(&mut self) {
        for e in &mut self.edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.edges.sort_unstable();
        self.loops.sort_unstable();
    }

    /// Vertices touched by an edge or loop.
    pub fn covered(&self, n: usize) -> Vec<bool> {
        let mut c = vec![false; n + 1];
        for &(a, b) in &self.edges {
            c[a] = true;
            c[b] = true;
        }
        for &v in &self.loops {
            c[v] = true;
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaGraph {
    n: usize,
    red: HalfGraph,
    blue: HalfGraph,
}

impl LambdaGraph {
    /// Builds a graph on `1..=n`, checking that every vertex carries at most
    /// one item of each colour.
    pub fn new(n: usize, mut red: HalfGraph, mut blue: HalfGraph) -> Result<Self> {
        red.normalise();
        blue.normalise();
        red.validate(n, "red")?;
        blue.validate(n, "blue")?;
        Ok(LambdaGraph { n, red, blue })
    }

    pub(crate) fn of(a: &DiagramPartition) -> Result<Self> {
        let n = a.n();
        let mut red = HalfGraph::default();
        let mut blue = HalfGraph::default();
        for block in a.blocks() {
            match block.as_slice() {
                [v] if *v < n => red.loops.push(v + 1),
                [v] => blue.loops.push(v - n + 1),
                [u, v] if *v < n => red.edges.push((u + 1, v + 1)),
                [u, v] if *u >= n => blue.edges.push((u - n + 1, v - n + 1)),
                [_, _] => {}
                other => return Err(Error::NotPartialBrauer { size: other.len() }),
            }
        }
        red.normalise();
        blue.normalise();
        Ok(LambdaGraph { n, red, blue })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn red(&self) -> &HalfGraph {
        &self.red
    }

    pub fn blue(&self) -> &HalfGraph {
        &self.blue
    }

    /// Connected components (1-based vertex lists) under red and blue edges.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut d = DisjointSets::new(self.n);
        for &(a, b) in self.red.edges.iter().chain(&self.blue.edges) {
            d.union(a - 1, b - 1);
        }
        let labels = d.labels(0..self.n);
        let count = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut out = vec![Vec::new(); count];
        for (i, &l) in labels.iter().enumerate() {
            out[l as usize].push(i + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_empty_graph() {
        let g = DiagramPartition::identity(3).lambda_graph().unwrap();
        assert_eq!(g.red(), &HalfGraph::default());
        assert_eq!(g.blue(), &HalfGraph::default());
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn loops_and_edges() {
        let a: DiagramPartition = "1|2|1',2'".parse().unwrap();
        let g = a.lambda_graph().unwrap();
        assert_eq!(
            g.red(),
            &HalfGraph {
                edges: vec![],
                loops: vec![1, 2]
            }
        );
        assert_eq!(
            g.blue(),
            &HalfGraph {
                edges: vec![(1, 2)],
                loops: vec![]
            }
        );
    }

    #[test]
    fn rejects_large_blocks() {
        let a: DiagramPartition = "1,2,1'|2'".parse().unwrap();
        assert_eq!(a.lambda_graph(), Err(Error::NotPartialBrauer { size: 3 }));
    }

    #[test]
    fn validates_colour_degrees() {
        let red = HalfGraph {
            edges: vec![(1, 2)],
            loops: vec![2],
        };
        assert!(LambdaGraph::new(2, red, HalfGraph::default()).is_err());
    }
}
