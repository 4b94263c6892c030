//! Disjoint-set forest with union by size and path compression.

#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns `true` when `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Restricted-growth labelling of `range`: the first element gets 0 and
    /// each new set gets the next unused label in order of first appearance.
    pub fn labels(&mut self, range: std::ops::Range<usize>) -> Vec<u16> {
        let mut label_of = vec![u16::MAX; self.parent.len()];
        let mut next = 0u16;
        range
            .map(|x| {
                let r = self.find(x);
                if label_of[r] == u16::MAX {
                    label_of[r] = next;
                    next += 1;
                }
                label_of[r]
            })
            .collect()
    }
}
