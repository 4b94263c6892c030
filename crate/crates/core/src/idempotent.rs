//! Idempotency tests and the component forms of balanced graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::DiagramPartition;
use crate::error::{Error, Result};
use crate::lambda::LambdaGraph;

/// Order of the root of unity twisting the product, or `0` when no root of
/// unity of order at most `n` applies. Congruence modulo `0` is equality.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct TwistOrder {
    pub m: usize,
}

impl TwistOrder {
    pub const fn new(m: usize) -> Self {
        TwistOrder { m }
    }

    /// `a ≡ b (mod M)`.
    pub fn congruent(self, a: usize, b: usize) -> bool {
        if self.m == 0 {
            a == b
        } else {
            a % self.m == b % self.m
        }
    }
}

/// The shapes a connected component of a balanced graph can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentType {
    /// Alternating path with an even number of edges and no loops.
    EvenPath,
    /// Alternating circuit.
    EvenCircuit,
    /// Even alternating path with a loop at each end.
    EvenPathLoops,
    /// Odd alternating path with a loop at each end.
    OddPathLoops,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `a² = a`, ignoring the number of floating components.
pub fn is_idempotent_direct(a: &DiagramPartition) -> bool {
    a.multiply(a).map(|p| p.product == *a).unwrap_or(false)
}

/// Block containment in kernel classes plus rank at most one on each class.
pub fn is_idempotent_structural(a: &DiagramPartition) -> bool {
    match a.decompose_irreducible() {
        Ok(summands) => summands.iter().all(|s| s.part.rank() <= 1),
        Err(_) => false,
    }
}

/// Idempotency in the twisted algebra: `a` is idempotent and the number of
/// kernel classes is congruent to the rank modulo `M`.
pub fn is_twisted_idempotent(a: &DiagramPartition, t: TwistOrder) -> bool {
    if !is_idempotent_structural(a) {
        return false;
    }
    let k = a.kernel().class_count();
    let rank = a.rank();
    if t.m == 0 {
        rank == k
    } else {
        (k - rank).is_multiple_of(t.m)
    }
}

/// Labels each connected component of `g` with its form.
pub fn classify_lambda_components(g: &LambdaGraph) -> Result<Vec<(Vec<usize>, ComponentType)>> {
    let n = g.n();
    let mut red_edge = vec![false; n + 1];
    let mut blue_edge = vec![false; n + 1];
    let mut red_loop = vec![false; n + 1];
    let mut blue_loop = vec![false; n + 1];
    for &(a, b) in &g.red().edges {
        red_edge[a] = true;
        red_edge[b] = true;
    }
    for &(a, b) in &g.blue().edges {
        blue_edge[a] = true;
        blue_edge[b] = true;
    }
    for &v in &g.red().loops {
        red_loop[v] = true;
    }
    for &v in &g.blue().loops {
        blue_loop[v] = true;
    }

    let mut out = Vec::new();
    for comp in g.components() {
        let size = comp.len();
        let edges = comp
            .iter()
            .map(|&v| red_edge[v] as usize + blue_edge[v] as usize)
            .sum::<usize>()
            / 2;
        let loops = comp
            .iter()
            .map(|&v| red_loop[v] as usize + blue_loop[v] as usize)
            .sum::<usize>();
        let saturated = comp
            .iter()
            .all(|&v| (red_edge[v] || red_loop[v]) && (blue_edge[v] || blue_loop[v]));
        // Each vertex has at most one item per colour, so a connected
        // component is a path or a circuit; the edge count tells which.
        let form = if edges == size && size >= 2 && loops == 0 {
            Some(ComponentType::EvenCircuit)
        } else if edges + 1 != size {
            None
        } else if loops == 0 && size % 2 == 1 {
            Some(ComponentType::EvenPath)
        } else if loops == 2 && saturated {
            Some(if size % 2 == 1 {
                ComponentType::EvenPathLoops
            } else {
                ComponentType::OddPathLoops
            })
        } else {
            None
        };
        match form {
            Some(f) => out.push((comp, f)),
            None => return Err(Error::NotBalanced { vertices: comp }),
        }
    }
    Ok(out)
}
