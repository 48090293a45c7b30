//! Exceptional bundles on the projective plane, tracked through their classes
//! `(rank, c1)` in K-theory, and the Markov numbers that occur as their ranks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::count::Count;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernPair {
    r: BigInt,
    c: BigInt,
}

impl ChernPair {
    pub fn new(r: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (r, c) = (r.into(), c.into());
        if !r.is_positive() {
            return Err(Error::InvalidArgument(format!("rank {r} is not positive")));
        }
        if !r.gcd(&c).is_one() {
            return Err(Error::InvalidArgument(format!(
                "rank {r} and c1 {c} are not coprime"
            )));
        }
        Ok(ChernPair { r, c })
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The second Chern character, forced by `chi(E, E) = 1`.
    pub fn s(&self) -> BigRational {
        let num = BigInt::one() + &self.c * &self.c - &self.r * &self.r;
        BigRational::new(num, BigInt::from(2) * &self.r)
    }

    pub fn slope(&self) -> BigRational {
        BigRational::new(self.c.clone(), self.r.clone())
    }

    /// Tensor with `O(k)`.
    pub fn twist(&self, k: i64) -> ChernPair {
        ChernPair {
            r: self.r.clone(),
            c: &self.c + &self.r * k,
        }
    }

    pub fn dual(&self) -> ChernPair {
        ChernPair {
            r: self.r.clone(),
            c: -&self.c,
        }
    }

    /// Slope moved into `[0, 1/2]` by twists and dualization, as `(r, c)`.
    pub fn representative(&self) -> (BigInt, BigInt) {
        let c = self.c.mod_floor(&self.r);
        let c = if BigInt::from(2) * &c > self.r {
            &self.r - c
        } else {
            c
        };
        (self.r.clone(), c)
    }
}

impl fmt::Display for ChernPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.c)
    }
}

/// `chi(a, b)` from Riemann-Roch. Non-integral values are reported as errors.
pub fn euler_chi(a: &ChernPair, b: &ChernPair) -> Result<BigInt> {
    let int = |x: &BigInt| BigRational::from_integer(x.clone());
    let (ra, ca, rb, cb) = (int(&a.r), int(&a.c), int(&b.r), int(&b.c));
    let half = BigRational::new(BigInt::from(3), BigInt::from(2));
    let v = &ra * &rb + half * (&ra * &cb - &ca * &rb) + &ra * b.s() + a.s() * &rb - &ca * &cb;
    if !v.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "chi({a}, {b}) = {v} is not integral"
        )));
    }
    Ok(v.to_integer())
}

/// Class `k [x] - [y]`, made positive in rank.
fn combine(k: &BigInt, x: &ChernPair, y: &ChernPair) -> Result<ChernPair> {
    let mut r = k * &x.r - &y.r;
    let mut c = k * &x.c - &y.c;
    if r.is_negative() {
        r = -r;
        c = -c;
    }
    ChernPair::new(r, c)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkovTriple(pub u64, pub u64, pub u64);

impl MarkovTriple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        let sq = |x: u64| (x as u128) * (x as u128);
        if sq(a) + sq(b) + sq(c) != 3 * (a as u128) * (b as u128) * (c as u128) {
            return Err(Error::InvalidArgument(format!(
                "({a}, {b}, {c}) is not a Markov triple"
            )));
        }
        Ok(MarkovTriple(a, b, c))
    }
}

fn markov_holds(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    a * a + b * b + c * c == BigInt::from(3) * a * b * c
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExcTriple(ChernPair, ChernPair, ChernPair);

impl ExcTriple {
    pub fn new(e1: ChernPair, e2: ChernPair, e3: ChernPair) -> Result<Self> {
        if !markov_holds(&e1.r, &e2.r, &e3.r) {
            return Err(Error::InvalidArgument(format!(
                "ranks of ({e1}, {e2}, {e3}) violate the Markov equation"
            )));
        }
        Ok(ExcTriple(e1, e2, e3))
    }

    /// `(O, O(1), O(2))`.
    pub fn seed() -> Self {
        let o = |c: i64| ChernPair::new(1, c).expect("line bundle");
        ExcTriple(o(0), o(1), o(2))
    }

    pub fn entries(&self) -> [&ChernPair; 3] {
        [&self.0, &self.1, &self.2]
    }

    pub fn ranks(&self) -> [&BigInt; 3] {
        [&self.0.r, &self.1.r, &self.2.r]
    }

    pub fn twist(&self, k: i64) -> ExcTriple {
        ExcTriple(self.0.twist(k), self.1.twist(k), self.2.twist(k))
    }

    /// Representative modulo tensoring with `O(3)`: `c1` of the first entry in `[0, 3r)`.
    fn normalized(&self) -> ExcTriple {
        let three_r = BigInt::from(3) * &self.0.r;
        let shift = (&self.0.c).div_floor(&three_r);
        let k = -shift.to_i64().expect("twist fits in i64") * 3;
        self.twist(k)
    }
}

impl fmt::Display for ExcTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0, self.1, self.2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Left12,
    Left23,
    Right12,
    Right23,
    Twist,
}

impl Move {
    pub const MUTATIONS: [Move; 4] = [Move::Left12, Move::Left23, Move::Right12, Move::Right23];
}

pub fn mutate(t: &ExcTriple, mv: Move) -> Result<ExcTriple> {
    let ExcTriple(e1, e2, e3) = t;
    let (a, b, c) = match mv {
        Move::Left12 => (
            combine(&euler_chi(e1, e2)?, e1, e2)?,
            e1.clone(),
            e3.clone(),
        ),
        Move::Left23 => (
            e1.clone(),
            combine(&euler_chi(e2, e3)?, e2, e3)?,
            e2.clone(),
        ),
        Move::Right12 => (
            e2.clone(),
            combine(&euler_chi(e1, e2)?, e2, e1)?,
            e3.clone(),
        ),
        Move::Right23 => (
            e1.clone(),
            e3.clone(),
            combine(&euler_chi(e2, e3)?, e3, e2)?,
        ),
        Move::Twist => return Ok(t.twist(3)),
    };
    ExcTriple::new(a, b, c)
}

/// All Markov numbers up to `limit`.
pub fn markov_numbers(limit: u64) -> Vec<u64> {
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    let mut queue = VecDeque::from([[1u64, 1, 1]]);
    while let Some(t) = queue.pop_front() {
        let mut key = t;
        key.sort_unstable();
        if t.iter().any(|&x| x > limit) || !seen.insert(key) {
            continue;
        }
        out.extend(t);
        for i in 0..3 {
            let (y, z) = (t[(i + 1) % 3] as u128, t[(i + 2) % 3] as u128);
            let next = 3 * y * z - t[i] as u128;
            if next <= limit as u128 {
                let mut n = t;
                n[i] = next as u64;
                queue.push_back(n);
            }
        }
    }
    out.into_iter().collect()
}

pub fn markov_triples(limit: u64) -> Vec<MarkovTriple> {
    let nums = markov_numbers(limit);
    let mut out = Vec::new();
    for (i, &a) in nums.iter().enumerate() {
        for (j, &b) in nums.iter().enumerate().skip(i) {
            for &c in &nums[j..] {
                if let Ok(t) = MarkovTriple::new(a, b, c) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Bfs,
    Dfs,
}

/// Exceptional triples reachable from `seed` by mutations that keep every
/// rank at most `max_rank`, up to tensoring with `O(3)`, in discovery order.
pub fn mutation_tree(seed: &ExcTriple, max_rank: u64, order: Order) -> Result<Vec<ExcTriple>> {
    let bound = BigInt::from(max_rank);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier = VecDeque::from([seed.normalized()]);
    while let Some(t) = match order {
        Order::Bfs => frontier.pop_front(),
        Order::Dfs => frontier.pop_back(),
    } {
        if !seen.insert(t.clone()) {
            continue;
        }
        for mv in Move::MUTATIONS {
            let n = mutate(&t, mv)?;
            if n.ranks().iter().all(|r| **r <= bound) {
                let n = n.normalized();
                if !seen.contains(&n) {
                    frontier.push_back(n);
                }
            }
        }
        out.push(t);
    }
    Ok(out)
}

/// Classes of exceptional bundles of rank at most `max_rank`.
pub fn exceptional_bundles(
    seed: &ExcTriple,
    max_rank: u64,
    order: Order,
) -> Result<BTreeSet<ChernPair>> {
    Ok(mutation_tree(seed, max_rank, order)?
        .iter()
        .flat_map(|t| t.entries().into_iter().cloned())
        .collect())
}

fn slopes_of(bundles: &BTreeSet<ChernPair>) -> BTreeSet<(BigInt, BigInt)> {
    bundles.iter().map(|e| e.representative()).collect()
}

/// Representative slopes `c / r` in `[0, 1/2]` of bundles of rank at most `max_rank`.
pub fn exceptional_slopes(max_rank: u64) -> Result<BTreeSet<(BigInt, BigInt)>> {
    exceptional_slopes_from(&ExcTriple::seed(), max_rank, Order::Bfs)
}

pub fn exceptional_slopes_from(
    seed: &ExcTriple,
    max_rank: u64,
    order: Order,
) -> Result<BTreeSet<(BigInt, BigInt)>> {
    Ok(slopes_of(&exceptional_bundles(seed, max_rank, order)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P2Group {
    Serre,
    Full,
}

/// Residues `c1 mod m` of exceptional bundles of rank `m`, closed under duality.
pub fn residues(m: u64) -> Result<BTreeSet<u64>> {
    if !markov_numbers(m).contains(&m) {
        return Err(Error::NotMarkov(m));
    }
    Ok(residues_in(
        &exceptional_bundles(&ExcTriple::seed(), m, Order::Bfs)?,
        m,
    ))
}

fn residues_in(bundles: &BTreeSet<ChernPair>, m: u64) -> BTreeSet<u64> {
    let modulus = BigInt::from(m);
    let mut out = BTreeSet::new();
    for e in bundles {
        if e.r == modulus {
            for c in [e.c.clone(), -e.c.clone()] {
                out.insert(c.mod_floor(&modulus).to_u64().expect("residue below m"));
            }
        }
    }
    out
}

/// Curves of genus `3m - 1` up to the group, indexed by the Markov number `m`.
pub fn count_c(m: u64, group: P2Group) -> Result<Count> {
    let full = residues(m)?.len() as u64;
    Ok(Count::from(match group {
        P2Group::Full => full,
        P2Group::Serre => 3 * full,
    }))
}

/// Count for an arbitrary genus `l`. A genus `l` curve is generated by a
/// bundle of rank `(l + 1) / 3`, and no rank-zero class is exceptional, so
/// genus `-1` is empty.
pub fn count_genus(l: i64, group: P2Group) -> Result<Count> {
    if l < -1 {
        return Err(Error::UnsupportedGenus(l));
    }
    if l == -1 || (l + 1) % 3 != 0 {
        return Ok(Count::from(0u64));
    }
    let m = ((l + 1) / 3) as u64;
    match count_c(m, group) {
        Err(Error::NotMarkov(_)) => Ok(Count::from(0u64)),
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TyurinReport {
    pub counts: BTreeMap<u64, u64>,
    pub violations: Vec<u64>,
}

pub fn tyurin_scan(max_rank: u64) -> Result<TyurinReport> {
    if max_rank < 3 {
        return Err(Error::InvalidArgument("max rank must be at least 3".into()));
    }
    let mut counts = BTreeMap::new();
    let mut violations = Vec::new();
    let bundles = exceptional_bundles(&ExcTriple::seed(), max_rank, Order::Bfs)?;
    for m in markov_numbers(max_rank).into_iter().filter(|&m| m > 2) {
        let n = residues_in(&bundles, m).len() as u64;
        if n != 2 {
            violations.push(m);
        }
        counts.insert(m, n);
    }
    Ok(TyurinReport { counts, violations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub markov: u64,
    pub slope: String,
    pub full: String,
    pub serre: String,
}

/// One row per Markov number up to `limit`.
pub fn markov_table(limit: u64) -> Result<Vec<TableRow>> {
    let slopes = exceptional_slopes(limit)?;
    let mut rows = Vec::new();
    for m in markov_numbers(limit) {
        let mb = BigInt::from(m);
        let slope = slopes
            .iter()
            .filter(|(r, _)| *r == mb)
            .map(|(r, c)| format!("{c}/{r}"))
            .collect::<Vec<_>>()
            .join(",");
        rows.push(TableRow {
            markov: m,
            slope,
            full: count_c(m, P2Group::Full)?.to_string(),
            serre: count_c(m, P2Group::Serre)?.to_string(),
        });
    }
    Ok(rows)
}

pub fn is_zero_rank(e: &ChernPair) -> bool {
    e.r.is_zero()
}
