//! Exhaustive generation of small diagram monoids and direct tallies.
//!
//! Nothing here uses the counting formulas: elements are generated as set
//! partitions, idempotency is tested by squaring, and Green classes are
//! recovered either from signatures or from orbits under multiplication.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::combinatorics::{bell, involutions, matchings, Count};
use crate::diagram::DiagramPartition;
use crate::dsu::DisjointSets;
use crate::equivalence::EquivalenceRelation;
use crate::error::{Error, Result};
use crate::family::MonoidFamily;
use crate::idempotent::{is_idempotent_direct, is_twisted_idempotent, TwistOrder};

/// Default ceiling on the number of generated set partitions.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Number of set partitions the generator walks for `f_n`. For `P`, `B` and
/// `PB` this is the monoid's size; the other families are filtered out of
/// `P_n`, so their cost is `|P_n|`.
pub fn generation_cost(f: MonoidFamily, n: usize) -> Count {
    match f {
        MonoidFamily::B => matchings(n),
        MonoidFamily::PB => involutions(2 * n),
        _ => bell(2 * n),
    }
}

/// Restricted-growth strings of a fixed length in lexicographic order, with
/// an optional bound on block sizes. With `perfect` set every block has
/// size exactly two.
struct RgsWalker {
    len: usize,
    cap: usize,
    perfect: bool,
    labels: Vec<u16>,
    sizes: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgsWalker {
    fn new(len: usize, cap: usize, perfect: bool) -> Self {
        RgsWalker {
            len,
            cap,
            perfect,
            labels: vec![0; len],
            sizes: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn completable(&self, filled: usize) -> bool {
        if !self.perfect {
            return true;
        }
        let remaining = self.len - filled;
        let singles = self.sizes.iter().filter(|&&s| s == 1).count();
        singles <= remaining && (remaining - singles).is_multiple_of(2)
    }

    fn remove(&mut self, pos: usize) {
        let l = self.labels[pos] as usize;
        self.sizes[l] -= 1;
        if self.sizes[l] == 0 {
            debug_assert_eq!(l + 1, self.sizes.len());
            self.sizes.pop();
        }
    }

    /// Places the least admissible label `>= from` at `pos`.
    fn assign(&mut self, pos: usize, from: usize) -> bool {
        for l in from..=self.sizes.len() {
            if l == self.sizes.len() {
                self.sizes.push(1);
            } else if self.sizes[l] < self.cap {
                self.sizes[l] += 1;
            } else {
                continue;
            }
            self.labels[pos] = l as u16;
            if self.completable(pos + 1) {
                return true;
            }
            self.remove(pos);
        }
        false
    }

    fn fill_from(&mut self, start: usize) -> bool {
        (start..self.len).all(|p| self.assign(p, 0))
    }

    fn advance(&mut self) -> Option<&[u16]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill_from(0) {
                self.done = true;
                return None;
            }
            return Some(&self.labels);
        }
        let mut pos = self.len;
        while pos > 0 {
            pos -= 1;
            let l = self.labels[pos] as usize;
            self.remove(pos);
            if self.assign(pos, l + 1) {
                let ok = self.fill_from(pos + 1);
                debug_assert!(ok);
                return Some(&self.labels);
            }
        }
        self.done = true;
        None
    }
}

/// Stream of the elements of a family in canonical (lexicographic
/// label-string) order.
pub struct Elements {
    n: usize,
    walker: RgsWalker,
    filter: Option<MonoidFamily>,
}

impl Iterator for Elements {
    type Item = DiagramPartition;

    fn next(&mut self) -> Option<DiagramPartition> {
        loop {
            let labels = self.walker.advance()?.to_vec();
            let d = DiagramPartition::from_rgs(self.n, labels);
            match self.filter {
                Some(f) if !d.belongs_to(f) => continue,
                _ => return Some(d),
            }
        }
    }
}

/// Every element of `f_n`, refusing when [`generation_cost`] exceeds `cap`.
/// Decimal form, shortened to scientific notation past 20 digits.
fn abbreviate(x: &Count) -> String {
    let s = x.to_string();
    if s.len() <= 20 {
        return s;
    }
    format!("{}.{}e{}", &s[..1], &s[1..4], s.len() - 1)
}

pub fn enumerate_elements(f: MonoidFamily, n: usize, cap: u64) -> Result<Elements> {
    let cost = generation_cost(f, n);
    if cost > Count::from(cap) {
        return Err(Error::TooLarge {
            predicted: abbreviate(&cost),
            cap,
        });
    }
    let (block_cap, perfect, filter) = match f {
        MonoidFamily::P => (usize::MAX, false, None),
        MonoidFamily::B => (2, true, None),
        MonoidFamily::PB => (2, false, None),
        other => (usize::MAX, false, Some(other)),
    };
    Ok(Elements {
        n,
        walker: RgsWalker::new(2 * n, block_cap, perfect),
        filter,
    })
}

/// Which Green relation a key describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenSide {
    R,
    L,
    H,
    D,
}

/// Canonical class key for a Green relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GreenKey {
    R(Vec<usize>, EquivalenceRelation),
    L(Vec<usize>, EquivalenceRelation),
    H(
        (Vec<usize>, EquivalenceRelation),
        (Vec<usize>, EquivalenceRelation),
    ),
    D(usize),
}

/// `R`: upper domain and kernel; `L`: lower domain and kernel; `H`: both;
/// `D`: rank.
pub fn green_signature(a: &DiagramPartition, side: GreenSide) -> GreenKey {
    if side == GreenSide::D {
        return GreenKey::D(a.rank());
    }
    let p = a.profile();
    let upper = (p.upper_domain, p.upper_kernel);
    let lower = (p.lower_domain, p.lower_kernel);
    match side {
        GreenSide::R => GreenKey::R(upper.0, upper.1),
        GreenSide::L => GreenKey::L(lower.0, lower.1),
        GreenSide::H => GreenKey::H(upper, lower),
        GreenSide::D => unreachable!(),
    }
}

/// Green classes of a finite monoid from right and left ideals: `a R b` iff
/// `aS = bS`, `a L b` iff `Sa = Sb`, `H = R ∩ L`, and `D` is the join of `R`
/// and `L`. Classes are lists of indices into `elements`, sorted.
pub fn green_classes_by_orbits(
    elements: &[DiagramPartition],
    side: GreenSide,
) -> Result<Vec<Vec<usize>>> {
    let index: HashMap<&DiagramPartition, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let ideal = |a: &DiagramPartition, right: bool| -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(elements.len());
        for s in elements {
            let p = if right {
                a.multiply(s)?
            } else {
                s.multiply(a)?
            };
            let i = *index.get(&p.product).ok_or_else(|| {
                Error::Domain("element set is not closed under multiplication".into())
            })?;
            out.push(i);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    };
    let class_labels = |right: bool| -> Result<Vec<usize>> {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        elements
            .iter()
            .map(|a| {
                let key = ideal(a, right)?;
                let next = ids.len();
                Ok(*ids.entry(key).or_insert(next))
            })
            .collect()
    };
    let m = elements.len();
    let labels: Vec<usize> = match side {
        GreenSide::R => class_labels(true)?,
        GreenSide::L => class_labels(false)?,
        GreenSide::H => {
            let r = class_labels(true)?;
            let l = class_labels(false)?;
            let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
            (0..m)
                .map(|i| {
                    let next = ids.len();
                    *ids.entry((r[i], l[i])).or_insert(next)
                })
                .collect()
        }
        GreenSide::D => {
            let r = class_labels(true)?;
            let l = class_labels(false)?;
            let mut d = DisjointSets::new(m);
            let mut first_r: HashMap<usize, usize> = HashMap::new();
            let mut first_l: HashMap<usize, usize> = HashMap::new();
            for i in 0..m {
                let fr = *first_r.entry(r[i]).or_insert(i);
                d.union(fr, i);
                let fl = *first_l.entry(l[i]).or_insert(i);
                d.union(fl, i);
            }
            (0..m).map(|i| d.find(i)).collect()
        }
    };
    Ok(partition_of(&labels))
}

/// Groups indices by label, as sorted lists ordered by least index.
pub fn partition_of<K: std::hash::Hash + Eq>(labels: &[K]) -> Vec<Vec<usize>> {
    let mut groups: HashMap<&K, usize> = HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, k) in labels.iter().enumerate() {
        let next = out.len();
        let g = *groups.entry(k).or_insert(next);
        if g == out.len() {
            out.push(Vec::new());
        }
        out[g].push(i);
    }
    out
}

/// Tallies for one R-class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RClassTally {
    pub rank: usize,
    /// Upper points forming singleton non-transversal blocks.
    pub loops: usize,
    pub elements: u64,
    pub idempotents: u64,
    pub twisted: u64,
}

/// Outcome of an exhaustive sweep.
#[derive(Debug, Clone)]
pub struct BruteReport {
    pub family: MonoidFamily,
    pub n: usize,
    pub twist: Option<TwistOrder>,
    pub total_elements: Count,
    pub idempotents_total: Count,
    pub idempotents_by_rank: BTreeMap<usize, Count>,
    pub twisted_total: Count,
    pub twisted_by_rank: BTreeMap<usize, Count>,
    pub r_class_counts: BTreeMap<GreenKey, RClassTally>,
    /// Elements where the structural idempotency test disagreed with squaring.
    pub structural_disagreements: u64,
    pub elapsed: Duration,
}

#[derive(Default)]
struct Partial {
    elements: u64,
    idempotents: BTreeMap<usize, u64>,
    twisted: BTreeMap<usize, u64>,
    classes: BTreeMap<GreenKey, RClassTally>,
    disagreements: u64,
}

impl Partial {
    fn add(mut self, a: DiagramPartition, twist: Option<TwistOrder>) -> Self {
        let rank = a.rank();
        let idem = is_idempotent_direct(&a);
        if idem != crate::idempotent::is_idempotent_structural(&a) {
            self.disagreements += 1;
        }
        let tw = match twist {
            Some(t) => is_twisted_idempotent(&a, t),
            None => false,
        };
        self.elements += 1;
        if idem {
            *self.idempotents.entry(rank).or_default() += 1;
        }
        if tw {
            *self.twisted.entry(rank).or_default() += 1;
        }
        let key = green_signature(&a, GreenSide::R);
        let tally = self.classes.entry(key).or_insert_with(|| RClassTally {
            rank,
            loops: upper_loops(&a),
            ..RClassTally::default()
        });
        tally.elements += 1;
        tally.idempotents += idem as u64;
        tally.twisted += tw as u64;
        self
    }

    fn merge(mut self, other: Partial) -> Self {
        self.elements += other.elements;
        self.disagreements += other.disagreements;
        for (r, v) in other.idempotents {
            *self.idempotents.entry(r).or_default() += v;
        }
        for (r, v) in other.twisted {
            *self.twisted.entry(r).or_default() += v;
        }
        for (k, t) in other.classes {
            match self.classes.get_mut(&k) {
                Some(mine) => {
                    mine.elements += t.elements;
                    mine.idempotents += t.idempotents;
                    mine.twisted += t.twisted;
                }
                None => {
                    self.classes.insert(k, t);
                }
            }
        }
        self
    }
}

fn upper_loops(a: &DiagramPartition) -> usize {
    let n = a.n();
    a.blocks()
        .iter()
        .filter(|b| b.len() == 1 && b[0] < n)
        .count()
}

/// Sweeps every element of `f_n`, counting idempotents by squaring and, when
/// `twist` is given, twisted idempotents.
pub fn brute_report(
    f: MonoidFamily,
    n: usize,
    twist: Option<TwistOrder>,
    cap: u64,
) -> Result<BruteReport> {
    let start = Instant::now();
    let elements = enumerate_elements(f, n, cap)?;
    let partial = elements
        .par_bridge()
        .fold(Partial::default, |acc, a| acc.add(a, twist))
        .reduce(Partial::default, Partial::merge);
    let to_counts = |m: BTreeMap<usize, u64>| -> BTreeMap<usize, Count> {
        m.into_iter().map(|(r, v)| (r, Count::from(v))).collect()
    };
    let idempotents_total = Count::from(partial.idempotents.values().sum::<u64>());
    let twisted_total = Count::from(partial.twisted.values().sum::<u64>());
    Ok(BruteReport {
        family: f,
        n,
        twist,
        total_elements: Count::from(partial.elements),
        idempotents_total,
        idempotents_by_rank: to_counts(partial.idempotents),
        twisted_total,
        twisted_by_rank: to_counts(partial.twisted),
        r_class_counts: partial.classes,
        structural_disagreements: partial.disagreements,
        elapsed: start.elapsed(),
    })
}
