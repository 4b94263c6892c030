//! Exact idempotent counts.
//!
//! Every count factors through the numbers `c_0(K_m)` and `c_1(K_m)` of
//! irreducible idempotents of rank 0 and 1. [`Engine`] evaluates the
//! formulas from those values; the free functions use the standard values.
//! An engine with overridden c-values is useful to check that a test suite
//! actually notices wrong inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    bell, binomial, e_nrs, factorial, integer_partitions, involutions, matchings, pi_count, Count,
    IntegerPartitionSpec, Memo,
};
use crate::error::{Error, Result};
use crate::family::MonoidFamily;
use crate::idempotent::TwistOrder;

/// Computation path for a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    Formula,
    Recurrence,
    MuSum,
    Closed,
    Bruteforce,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Recurrence => "recurrence",
            Method::MuSum => "mu_sum",
            Method::Closed => "closed",
            Method::Bruteforce => "bruteforce",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Method::Formula,
            Method::Recurrence,
            Method::MuSum,
            Method::Closed,
            Method::Bruteforce,
        ]
        .into_iter()
        .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
        .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

/// Irreducible idempotent counts by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CValues {
    pub c0: Count,
    pub c1: Count,
    pub c: Count,
}

/// Evaluates counts from a table of c-values, optionally overridden.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    overrides: BTreeMap<(MonoidFamily, usize), (Count, Count)>,
}

static STANDARD: Engine = Engine {
    overrides: BTreeMap::new(),
};

static C_VALUES: Memo<(MonoidFamily, usize)> = Memo::new();
static C1_VALUES: Memo<(MonoidFamily, usize)> = Memo::new();

fn standard_c(f: MonoidFamily, n: usize) -> (Count, Count) {
    debug_assert!(n >= 1);
    let c0 = C_VALUES.get_or((f, n), || standard_c_uncached(f, n).0);
    let c1 = C1_VALUES.get_or((f, n), || standard_c_uncached(f, n).1);
    (c0, c1)
}

fn standard_c_uncached(f: MonoidFamily, n: usize) -> (Count, Count) {
    let zero = Count::zero;
    match f {
        MonoidFamily::P => {
            let mut c0 = Count::zero();
            let mut c1 = Count::zero();
            for r in 1..=n {
                for s in 1..=n {
                    let e = e_nrs(n, r, s).expect("indices in range");
                    c1 += &e * (r * s);
                    c0 += e;
                }
            }
            (c0, c1)
        }
        MonoidFamily::B => {
            if n % 2 == 1 {
                (zero(), factorial(n))
            } else {
                (factorial(n - 1), zero())
            }
        }
        MonoidFamily::PB => {
            if n % 2 == 1 {
                (factorial(n), factorial(n))
            } else {
                (factorial(n - 1) * (n + 1), zero())
            }
        }
        MonoidFamily::T => (zero(), Count::from(n)),
        MonoidFamily::I => {
            if n == 1 {
                (Count::one(), Count::one())
            } else {
                (zero(), zero())
            }
        }
        MonoidFamily::Idual => (zero(), Count::one()),
    }
}

fn check_rank(n: usize, r: usize) -> Result<()> {
    if r > n {
        Err(Error::Domain(format!("rank {r} exceeds n = {n}")))
    } else {
        Ok(())
    }
}

fn closed_family(f: MonoidFamily) -> Result<()> {
    match f {
        MonoidFamily::B | MonoidFamily::PB => Ok(()),
        _ => Err(Error::Domain(format!("no closed form for family {f}"))),
    }
}

fn unsupported(what: &str, method: Method) -> Error {
    Error::Domain(format!("method {method} is not available for {what}"))
}

/// Product of `(c0 + c1 x)^{mu_i}` over the parts, as a coefficient list.
fn rank_polynomial(mu: &IntegerPartitionSpec, c: impl Fn(usize) -> (Count, Count)) -> Vec<Count> {
    let mut poly = vec![Count::one()];
    for (i, m) in mu.size_classes() {
        let (c0, c1) = c(i);
        for _ in 0..m {
            let mut next = vec![Count::zero(); poly.len() + 1];
            for (k, p) in poly.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                next[k] += p * &c0;
                next[k + 1] += p * &c1;
            }
            poly = next;
        }
    }
    poly
}

/// `n! / (prod mu_i! * prod (2j)^{mu_2j})`, with an extra factor
/// `prod (2j+1)^{mu_2j}` when `plus_one` is set; always an exact division.
fn brauer_term(mu: &IntegerPartitionSpec, plus_one: bool) -> Count {
    let n = mu.n();
    let mut num = factorial(n);
    let mut den = Count::one();
    for (i, m) in mu.size_classes() {
        den *= factorial(m);
        if i % 2 == 0 {
            den *= num_traits::pow(Count::from(i), m);
            if plus_one {
                num *= num_traits::pow(Count::from(i + 1), m);
            }
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}

impl Engine {
    /// The standard engine.
    pub fn standard() -> &'static Engine {
        &STANDARD
    }

    /// Replaces `(c_0(f_n), c_1(f_n))`.
    pub fn with_c_override(mut self, f: MonoidFamily, n: usize, c0: Count, c1: Count) -> Self {
        self.overrides.insert((f, n), (c0, c1));
        self
    }

    fn c(&self, f: MonoidFamily, n: usize) -> (Count, Count) {
        match self.overrides.get(&(f, n)) {
            Some(v) => v.clone(),
            None => standard_c(f, n),
        }
    }

    pub fn c_values(&self, f: MonoidFamily, n: usize) -> Result<CValues> {
        if n == 0 {
            return Err(Error::Domain("c-values are defined for n >= 1".into()));
        }
        let (c0, c1) = self.c(f, n);
        let c = &c0 + &c1;
        Ok(CValues { c0, c1, c })
    }

    /// `e(f_n)`, the number of idempotents.
    pub fn e_total(&self, f: MonoidFamily, n: usize, method: Method) -> Result<Count> {
        match method {
            Method::Formula | Method::MuSum => Ok(integer_partitions(n)
                .map(|mu| {
                    let prod = mu.size_classes().fold(Count::one(), |acc, (i, m)| {
                        let (c0, c1) = self.c(f, i);
                        acc * num_traits::pow(c0 + c1, m)
                    });
                    pi_count(&mu) * prod
                })
                .sum()),
            Method::Recurrence => Ok(self.exponential_recurrence(n, |m| {
                let (c0, c1) = self.c(f, m);
                c0 + c1
            })),
            Method::Closed => {
                closed_family(f)?;
                let pb = f == MonoidFamily::PB;
                Ok(integer_partitions(n)
                    .map(|mu| {
                        let t = brauer_term(&mu, pb);
                        if pb {
                            t << mu.odd_part_count()
                        } else {
                            t
                        }
                    })
                    .sum())
            }
            Method::Bruteforce => Err(unsupported("e_total in the engine", method)),
        }
    }

    /// `x_0 = 1`, `x_n = sum_m C(n-1, m-1) w(m) x_{n-m}`.
    fn exponential_recurrence(&self, n: usize, w: impl Fn(usize) -> Count) -> Count {
        let weights: Vec<Count> = (0..=n)
            .map(|m| if m == 0 { Count::zero() } else { w(m) })
            .collect();
        let mut x = vec![Count::one()];
        for k in 1..=n {
            let v = (1..=k)
                .map(|m| binomial(k - 1, m - 1) * &weights[m] * &x[k - m])
                .sum();
            x.push(v);
        }
        x.pop().expect("nonempty")
    }

    /// `e(D_r(f_n))`, idempotents of rank `r`.
    pub fn e_rank(&self, f: MonoidFamily, n: usize, r: usize, method: Method) -> Result<Count> {
        check_rank(n, r)?;
        match method {
            Method::MuSum | Method::Formula => Ok(integer_partitions(n)
                .map(|mu| {
                    let poly = rank_polynomial(&mu, |i| self.c(f, i));
                    match poly.get(r) {
                        Some(coef) if !coef.is_zero() => pi_count(&mu) * coef,
                        _ => Count::zero(),
                    }
                })
                .sum()),
            Method::Recurrence => Ok(self.rank_table(f, n).swap_remove(n).swap_remove(r)),
            Method::Closed => {
                closed_family(f)?;
                let pb = f == MonoidFamily::PB;
                Ok(integer_partitions(n)
                    .filter(|mu| {
                        if pb {
                            mu.odd_part_count() >= r
                        } else {
                            mu.odd_part_count() == r
                        }
                    })
                    .map(|mu| {
                        let t = brauer_term(&mu, pb);
                        if pb {
                            t * binomial(mu.odd_part_count(), r)
                        } else {
                            t
                        }
                    })
                    .sum())
            }
            Method::Bruteforce => Err(unsupported("e_rank in the engine", method)),
        }
    }

    /// Rows `0..=n` of `e(D_r(f_k))` by the rank recurrence.
    fn rank_table(&self, f: MonoidFamily, n: usize) -> Vec<Vec<Count>> {
        let diagram = f.is_diagram_family();
        let c: Vec<(Count, Count)> = (0..=n)
            .map(|m| {
                if m == 0 {
                    (Count::zero(), Count::zero())
                } else {
                    self.c(f, m)
                }
            })
            .collect();
        let mut d: Vec<Vec<Count>> = vec![vec![Count::one()]];
        for k in 1..=n {
            let mut row = Vec::with_capacity(k + 1);
            for r in 0..=k {
                let v = if diagram && r == k {
                    Count::one()
                } else if diagram && r == 0 {
                    let rho = rho_rank_zero(f, k).expect("diagram family");
                    &rho * &rho
                } else {
                    let mut acc = Count::zero();
                    for m in 1..=k {
                        let prev = &d[k - m];
                        let mut inner = Count::zero();
                        if let Some(x) = prev.get(r) {
                            inner += &c[m].0 * x;
                        }
                        if r >= 1 {
                            if let Some(x) = prev.get(r - 1) {
                                inner += &c[m].1 * x;
                            }
                        }
                        acc += binomial(k - 1, m - 1) * inner;
                    }
                    acc
                };
                row.push(v);
            }
            d.push(row);
        }
        d
    }

    /// Idempotents of the twisted algebra.
    pub fn exi_total(
        &self,
        f: MonoidFamily,
        n: usize,
        t: TwistOrder,
        method: Method,
    ) -> Result<Count> {
        if t.m > 0 {
            return match method {
                Method::Formula | Method::MuSum => Ok(integer_partitions(n)
                    .map(|mu| {
                        let h = mu.height();
                        let poly = rank_polynomial(&mu, |i| self.c(f, i));
                        let selected: Count = poly
                            .iter()
                            .enumerate()
                            .filter(|&(r, _)| t.congruent(r, h))
                            .map(|(_, c)| c)
                            .sum();
                        if selected.is_zero() {
                            selected
                        } else {
                            pi_count(&mu) * selected
                        }
                    })
                    .sum()),
                _ => Err(unsupported("twisted totals with M > 0", method)),
            };
        }
        match method {
            Method::Formula | Method::MuSum => Ok(integer_partitions(n)
                .map(|mu| {
                    let prod = mu.size_classes().fold(Count::one(), |acc, (i, m)| {
                        acc * num_traits::pow(self.c(f, i).1, m)
                    });
                    if prod.is_zero() {
                        prod
                    } else {
                        pi_count(&mu) * prod
                    }
                })
                .sum()),
            Method::Recurrence => Ok(self.exponential_recurrence(n, |m| self.c(f, m).1)),
            Method::Closed => {
                closed_family(f)?;
                Ok(integer_partitions(n)
                    .filter(|mu| mu.size_classes().all(|(i, _)| i % 2 == 1))
                    .map(|mu| {
                        let den = mu
                            .size_classes()
                            .fold(Count::one(), |acc, (_, m)| acc * factorial(m));
                        factorial(n) / den
                    })
                    .sum())
            }
            Method::Bruteforce => Err(unsupported("exi_total in the engine", method)),
        }
    }

    /// Twisted idempotents of rank `r`, for `M = 0`.
    pub fn exi_rank(
        &self,
        f: MonoidFamily,
        n: usize,
        r: usize,
        t: TwistOrder,
        method: Method,
    ) -> Result<Count> {
        check_rank(n, r)?;
        if t.m != 0 {
            return Err(Error::Domain("per-rank twisted counts need M = 0".into()));
        }
        match method {
            Method::MuSum | Method::Formula => Ok(integer_partitions(n)
                .filter(|mu| mu.height() == r)
                .map(|mu| {
                    let prod = mu.size_classes().fold(Count::one(), |acc, (i, m)| {
                        acc * num_traits::pow(self.c(f, i).1, m)
                    });
                    if prod.is_zero() {
                        prod
                    } else {
                        pi_count(&mu) * prod
                    }
                })
                .sum()),
            Method::Recurrence => {
                let diagram = f.is_diagram_family();
                let c1: Vec<Count> = (0..=n)
                    .map(|m| {
                        if m == 0 {
                            Count::zero()
                        } else {
                            self.c(f, m).1
                        }
                    })
                    .collect();
                let mut d: Vec<Vec<Count>> = vec![vec![Count::one()]];
                for k in 1..=n {
                    let mut row = Vec::with_capacity(k + 1);
                    for s in 0..=k {
                        let v = if diagram && s == k {
                            Count::one()
                        } else if s == 0 {
                            Count::zero()
                        } else {
                            (1..=k)
                                .filter_map(|m| {
                                    d[k - m]
                                        .get(s - 1)
                                        .map(|x| binomial(k - 1, m - 1) * &c1[m] * x)
                                })
                                .sum()
                        };
                        row.push(v);
                    }
                    d.push(row);
                }
                Ok(d.swap_remove(n).swap_remove(r))
            }
            Method::Closed => {
                closed_family(f)?;
                if (n - r) % 2 == 1 {
                    return Ok(Count::zero());
                }
                Ok(rho_nr(n, r)? * b_nr(n, r)?)
            }
            Method::Bruteforce => Err(unsupported("exi_rank in the engine", method)),
        }
    }

    /// `sum_r r! e(D_r(f_n))`.
    pub fn completely_regular_count(&self, f: MonoidFamily, n: usize) -> Result<Count> {
        (0..=n)
            .map(|r| Ok(factorial(r) * self.e_rank(f, n, r, Method::Recurrence)?))
            .sum()
    }

    /// Idempotents in the ideal of elements of rank at most `r`.
    pub fn ideal_idempotents(&self, f: MonoidFamily, n: usize, r: usize) -> Result<Count> {
        check_rank(n, r)?;
        let table = self.rank_table(f, n);
        Ok(table[n][..=r].iter().sum())
    }
}

pub fn c_values(f: MonoidFamily, n: usize) -> Result<CValues> {
    STANDARD.c_values(f, n)
}

pub fn e_total(f: MonoidFamily, n: usize, method: Method) -> Result<Count> {
    STANDARD.e_total(f, n, method)
}

pub fn e_rank(f: MonoidFamily, n: usize, r: usize, method: Method) -> Result<Count> {
    STANDARD.e_rank(f, n, r, method)
}

/// Twisted total by the default route for `M`.
pub fn exi_total(f: MonoidFamily, n: usize, t: TwistOrder) -> Result<Count> {
    STANDARD.exi_total(f, n, t, Method::Formula)
}

pub fn exi_rank(
    f: MonoidFamily,
    n: usize,
    r: usize,
    t: TwistOrder,
    method: Method,
) -> Result<Count> {
    STANDARD.exi_rank(f, n, r, t, method)
}

pub fn completely_regular_count(f: MonoidFamily, n: usize) -> Result<Count> {
    STANDARD.completely_regular_count(f, n)
}

pub fn ideal_idempotents(f: MonoidFamily, n: usize, r: usize) -> Result<Count> {
    STANDARD.ideal_idempotents(f, n, r)
}

fn rho_rank_zero(f: MonoidFamily, n: usize) -> Result<Count> {
    match f {
        MonoidFamily::P => Ok(bell(n)),
        MonoidFamily::B => Ok(if n.is_multiple_of(2) {
            matchings(n / 2)
        } else {
            Count::zero()
        }),
        MonoidFamily::PB => Ok(involutions(n)),
        _ => Err(Error::Domain(format!(
            "rank-zero R-class counts are defined for P, B and PB, not {f}"
        ))),
    }
}

/// R-class counts: `rho(f_n)` for the rank-zero D-class, `rho_nr` for
/// Brauer (`r` given), `rho_nrt` for partial Brauer (`r` and `t` given).
pub fn rho(f: MonoidFamily, n: usize, r: Option<usize>, t: Option<usize>) -> Result<Count> {
    match (r, t) {
        (None, None) => rho_rank_zero(f, n),
        (Some(r), None) if f == MonoidFamily::B => rho_nr(n, r),
        (Some(r), Some(t)) if f == MonoidFamily::PB => rho_nrt(n, r, t),
        _ => Err(Error::Domain(format!(
            "rho for {f} takes {}",
            match f {
                MonoidFamily::B => "no index or a rank",
                MonoidFamily::PB => "no index or a rank and a loop count",
                _ => "no index",
            }
        ))),
    }
}

fn parity(n: usize, used: usize, what: &str) -> Result<usize> {
    if used > n {
        return Err(Error::Domain(format!("{what} exceeds n = {n}")));
    }
    if (n - used) % 2 == 1 {
        return Err(Error::Parity(format!("n - {what} must be even (n = {n})")));
    }
    Ok((n - used) / 2)
}

/// R-classes in `D_r(B_n)`: `C(n, r) (2k - 1)!!` with `n - r = 2k`.
pub fn rho_nr(n: usize, r: usize) -> Result<Count> {
    let k = parity(n, r, "r")?;
    Ok(binomial(n, r) * matchings(k))
}

/// R-classes in `D_r(PB_n)` with `t` upper loops.
pub fn rho_nrt(n: usize, r: usize, t: usize) -> Result<Count> {
    let k = parity(n, r + t, "r - t")?;
    Ok(binomial(n, r) * binomial(n - r, t) * matchings(k))
}

static A_NR: Memo<(usize, usize)> = Memo::new();
static B_NR: Memo<(usize, usize)> = Memo::new();
static A_NRT: Memo<(usize, usize, usize)> = Memo::new();

/// Idempotents in an R-class of `D_r(B_n)`.
pub fn a_nr(n: usize, r: usize) -> Result<Count> {
    parity(n, r, "r")?;
    Ok(brauer_class(n, r, false))
}

/// Twisted (`M = 0`) idempotents in an R-class of `D_r(B_n)`.
pub fn b_nr(n: usize, r: usize) -> Result<Count> {
    parity(n, r, "r")?;
    Ok(brauer_class(n, r, true))
}

fn brauer_class(n: usize, r: usize, twisted: bool) -> Count {
    if r == n {
        return Count::one();
    }
    if r == 0 {
        return if twisted {
            Count::zero()
        } else {
            matchings(n / 2)
        };
    }
    let memo = if twisted { &B_NR } else { &A_NR };
    memo.get_or((n, r), || {
        brauer_class(n - 1, r - 1, twisted) + brauer_class(n - 2, r, twisted) * (n - r)
    })
}

/// Idempotents in an R-class of `D_r(PB_n)` whose upper graph has `t` loops.
pub fn a_nrt(n: usize, r: usize, t: usize) -> Result<Count> {
    parity(n, r + t, "r - t")?;
    Ok(partial_brauer_class(n, r, t))
}

fn partial_brauer_class(n: usize, r: usize, t: usize) -> Count {
    if r == n {
        return Count::one();
    }
    if r == 0 {
        return involutions(n);
    }
    A_NRT.get_or((n, r, t), || {
        let mut v = partial_brauer_class(n - 1, r - 1, t);
        if r + t < n {
            v += partial_brauer_class(n - 2, r, t) * (n - r - t);
        }
        v
    })
}

/// A family of counts over a range of indices, with the method used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub family: MonoidFamily,
    pub kind: String,
    pub method: Method,
    pub entries: BTreeMap<Vec<usize>, Count>,
}

impl CountTable {
    /// Fills a table by evaluating `value` at every index.
    pub fn build(
        family: MonoidFamily,
        kind: &str,
        method: Method,
        indices: impl IntoIterator<Item = Vec<usize>>,
        mut value: impl FnMut(&[usize]) -> Result<Count>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for idx in indices {
            let v = value(&idx)?;
            entries.insert(idx, v);
        }
        Ok(CountTable {
            family,
            kind: kind.to_string(),
            method,
            entries,
        })
    }

    /// `e(D_r(f_n))` for `0 <= r <= n <= max_n`.
    pub fn e_rank(family: MonoidFamily, max_n: usize, method: Method) -> Result<Self> {
        let idx = (0..=max_n).flat_map(|n| (0..=n).map(move |r| vec![n, r]));
        Self::build(family, "e_rank", method, idx, |i| {
            e_rank(family, i[0], i[1], method)
        })
    }

    pub fn get(&self, index: &[usize]) -> Option<&Count> {
        self.entries.get(index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MonoidFamily::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn c_value_examples() {
        assert_eq!(
            c_values(B, 3).unwrap(),
            CValues {
                c0: c(0),
                c1: c(6),
                c: c(6)
            }
        );
        assert_eq!(
            c_values(PB, 2).unwrap(),
            CValues {
                c0: c(3),
                c1: c(0),
                c: c(3)
            }
        );
        assert_eq!(
            c_values(P, 3).unwrap(),
            CValues {
                c0: c(15),
                c1: c(43),
                c: c(58)
            }
        );
        assert!(c_values(P, 0).is_err());
    }

    #[test]
    fn totals() {
        assert_eq!(e_total(B, 4, Method::Formula).unwrap(), c(40));
        assert_eq!(e_total(PB, 5, Method::Recurrence).unwrap(), c(1922));
        assert_eq!(e_total(P, 4, Method::Formula).unwrap(), c(1512));
        for f in MonoidFamily::ALL {
            assert_eq!(e_total(f, 0, Method::Recurrence).unwrap(), c(1));
        }
        assert!(e_total(P, 3, Method::Closed).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(e_rank(B, 6, 2, Method::MuSum).unwrap(), c(1575));
        assert_eq!(e_rank(PB, 4, 0, Method::Recurrence).unwrap(), c(100));
        assert_eq!(e_rank(P, 3, 1, Method::MuSum).unwrap(), c(70));
        assert!(e_rank(P, 3, 4, Method::MuSum).is_err());
        assert!(e_rank(T, 3, 1, Method::Closed).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(B, 10, Some(2), None).unwrap(), c(4725));
        assert_eq!(rho(PB, 4, None, None).unwrap(), c(10));
        assert_eq!(rho(P, 3, None, None).unwrap(), c(5));
        assert_eq!(rho(B, 3, None, None).unwrap(), c(0));
        assert!(matches!(rho(B, 5, Some(2), None), Err(Error::Parity(_))));
        assert!(matches!(
            rho(PB, 5, Some(2), Some(2)),
            Err(Error::Parity(_))
        ));
        assert!(rho(T, 3, None, None).is_err());
    }

    #[test]
    fn class_sequences() {
        assert_eq!(a_nr(4, 2).unwrap(), c(5));
        assert_eq!(a_nr(7, 7).unwrap(), c(1));
        assert_eq!(a_nr(10, 0).unwrap(), c(945));
        assert!(matches!(a_nr(4, 1), Err(Error::Parity(_))));
        assert_eq!(a_nrt(5, 5, 0).unwrap(), c(1));
        assert_eq!(a_nrt(4, 0, 0).unwrap(), c(10));
        assert_eq!(b_nr(5, 1).unwrap(), c(8));
        assert_eq!(b_nr(10, 2).unwrap(), c(1920));
        assert_eq!(b_nr(10, 4).unwrap(), c(960));
        let s: Count = [(3, 0), (2, 1), (1, 2), (0, 3), (1, 0), (0, 1)]
            .into_iter()
            .map(|(r, t)| rho_nrt(3, r, t).unwrap() * a_nrt(3, r, t).unwrap())
            .sum();
        assert_eq!(s, c(38));
    }

    #[test]
    fn twisted() {
        let m0 = TwistOrder::new(0);
        assert_eq!(exi_total(B, 5, m0).unwrap(), c(181));
        assert_eq!(exi_total(P, 4, m0).unwrap(), c(807));
        assert_eq!(exi_total(P, 4, TwistOrder::new(1)).unwrap(), c(1512));
        assert_eq!(exi_rank(B, 3, 1, m0, Method::Recurrence).unwrap(), c(6));
        assert_eq!(exi_rank(P, 3, 1, m0, Method::MuSum).unwrap(), c(43));
        for n in 1..=6 {
            assert_eq!(exi_rank(B, n, 0, m0, Method::Recurrence).unwrap(), c(0));
        }
        assert!(exi_rank(P, 3, 1, TwistOrder::new(2), Method::MuSum).is_err());
    }

    #[test]
    fn override_changes_results() {
        let e = Engine::default().with_c_override(B, 3, c(0), c(7));
        assert_eq!(e.e_total(B, 3, Method::Formula).unwrap(), c(11));
        assert_eq!(e_total(B, 3, Method::Formula).unwrap(), c(10));
    }

    #[test]
    fn helpers() {
        assert_eq!(ideal_idempotents(B, 4, 4).unwrap(), c(40));
        assert_eq!(ideal_idempotents(B, 4, 0).unwrap(), c(9));
        assert_eq!(completely_regular_count(B, 2).unwrap(), c(1 + 2));
        let t = CountTable::e_rank(B, 4, Method::Recurrence).unwrap();
        assert_eq!(t.get(&[4, 2]), Some(&c(30)));
        assert_eq!(t.entries.len(), 15);
    }
}
