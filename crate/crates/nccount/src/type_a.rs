//! Subcategories of `T_n = D^b(A_{n+1})`.
//!
//! The public counting functions take `N`, the number of vertices of `A_N`.
//! Everything else works with `n = N - 1`, so the quiver is `0 -> 1 -> ... -> n`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::quiver::{self, DimVector, HomProfile, Quiver};

/// The exceptional object `s_{i,j}`, supported on the vertices `i..=j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub i: usize,
    pub j: usize,
}

impl Interval {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i <= j, "interval s_{{{i},{j}}} is empty");
        Interval { i, j }
    }

    pub fn dim(&self, n: usize) -> DimVector {
        let v = (0..=n)
            .map(|x| i64::from(self.i <= x && x <= self.j))
            .collect();
        DimVector::new(v).expect("entries are 0 or 1")
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{},{}", self.i, self.j)
    }
}

/// Ordered generator list of a subcategory.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSetA(pub Vec<Interval>);

impl fmt::Display for GenSetA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "<{}>", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Id,
    Full,
}

pub fn enum_points(n: usize) -> Vec<Interval> {
    (0..=n)
        .flat_map(|i| (i..=n).map(move |j| Interval::new(i, j)))
        .collect()
}

pub fn hom_profile(a: Interval, b: Interval, n: usize) -> HomProfile {
    quiver::dynkin_hom_profile(&Quiver::a(n), &a.dim(n), &b.dim(n)).expect("A_n is Dynkin")
}

pub fn hom_total(a: Interval, b: Interval, n: usize) -> u64 {
    hom_profile(a, b, n).total()
}

pub fn is_exceptional_pair(a: Interval, b: Interval, n: usize) -> bool {
    quiver::is_exceptional_pair(&Quiver::a(n), &a.dim(n), &b.dim(n)).expect("A_n is Dynkin")
}

pub fn is_orthogonal(a: Interval, b: Interval, n: usize) -> bool {
    hom_total(a, b, n) == 0 && hom_total(b, a, n) == 0
}

/// Exceptional objects of the subcategory generated by `gens`, computed as the
/// left orthogonal of the right orthogonal.
pub fn span(gens: &[Interval], n: usize) -> BTreeSet<Interval> {
    let points = enum_points(n);
    let right: Vec<Interval> = points
        .iter()
        .copied()
        .filter(|&y| gens.iter().all(|&g| hom_total(g, y, n) == 0))
        .collect();
    points
        .into_iter()
        .filter(|&x| right.iter().all(|&y| hom_total(x, y, n) == 0))
        .collect()
}

/// An element of `X_n^k`: `0 <= a_0 <= ... <= a_k <= n + 1 - k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneSeq {
    n: usize,
    k: usize,
    values: Vec<usize>,
}

impl MonotoneSeq {
    pub fn new(n: usize, k: usize, values: Vec<usize>) -> Result<Self> {
        if k == 0 || k > n + 1 {
            return Err(Error::InvalidArgument(format!(
                "k={k} outside 1..={}",
                n + 1
            )));
        }
        if values.len() != k + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} values, got {}",
                k + 1,
                values.len()
            )));
        }
        let delta = n + 1 - k;
        if values.windows(2).any(|w| w[0] > w[1]) || values[k] > delta {
            return Err(Error::InvalidArgument(format!(
                "{values:?} is not weakly increasing in [0, {delta}]"
            )));
        }
        Ok(MonotoneSeq { n, k, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn delta(&self) -> usize {
        self.n + 1 - self.k
    }
}

/// All of `X_n^k` in lexicographic order.
pub fn enum_seqs(n: usize, k: usize) -> Vec<MonotoneSeq> {
    assert!(k >= 1 && k <= n + 1);
    let delta = n + 1 - k;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + 1);
    fn rec(
        cur: &mut Vec<usize>,
        lo: usize,
        delta: usize,
        len: usize,
        n: usize,
        k: usize,
        out: &mut Vec<MonotoneSeq>,
    ) {
        if cur.len() == len {
            out.push(MonotoneSeq {
                n,
                k,
                values: cur.clone(),
            });
            return;
        }
        for v in lo..=delta {
            cur.push(v);
            rec(cur, v, delta, len, n, k, out);
            cur.pop();
        }
    }
    rec(&mut cur, 0, delta, k + 1, n, k, &mut out);
    out
}

/// Staircase generators `s_{a_j + j, a_{j+1} + j}` for `j = 0..k`.
pub fn seq_to_subcategory(a: &MonotoneSeq) -> GenSetA {
    let v = &a.values;
    GenSetA(
        (0..a.k)
            .map(|j| Interval::new(v[j] + j, v[j + 1] + j))
            .collect(),
    )
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

/// Number of `D^b(A_k)` subcategories of `D^b(A_N)`.
pub fn count_id(k: u64, big_n: u64) -> BigUint {
    if k > big_n {
        return BigUint::zero();
    }
    binomial(big_n + 1, k + 1)
}

pub fn serre_step(a: &MonotoneSeq) -> MonotoneSeq {
    let delta = a.delta();
    let values = if a.values[a.k] < delta {
        a.values.iter().map(|v| v + 1).collect()
    } else {
        let mut v = Vec::with_capacity(a.k + 1);
        v.push(0);
        v.extend_from_slice(&a.values[..a.k]);
        v
    };
    MonotoneSeq {
        n: a.n,
        k: a.k,
        values,
    }
}

/// Serre functor on `s_{i,j}`; the flag records a shift by one.
pub fn serre_on_point(i: usize, j: usize, n: usize) -> (Interval, bool) {
    if j < n {
        (Interval::new(i + 1, j + 1), true)
    } else {
        (Interval::new(0, i), false)
    }
}

pub fn serre_point(p: Interval, n: usize) -> Interval {
    serre_on_point(p.i, p.j, n).0
}

/// `d` in `1..=k+1` with `(k+1)/d` and `d(n+2)/(k+1)` integral.
pub fn divisors_of_kn(k: usize, n: usize) -> Vec<usize> {
    let d_big = (k + 1).gcd(&(n + 2));
    let mut out: Vec<usize> = (1..=d_big)
        .filter(|x| d_big % x == 0)
        .map(|x| (k + 1) / d_big * x)
        .collect();
    out.sort_unstable();
    out
}

pub fn is_d_additive(a: &MonotoneSeq, d: usize) -> Result<bool> {
    if !divisors_of_kn(a.k, a.n).contains(&d) {
        return Err(Error::NotADivisor(d as u64));
    }
    let v = &a.values;
    if d == a.k + 1 {
        return Ok(v[0] == 0);
    }
    let step = d * a.delta() / (a.k + 1);
    if d * a.delta() % (a.k + 1) != 0 || v[d] != step {
        return Ok(false);
    }
    for j in 0..=a.k {
        let mut i = 0;
        while j + i * d <= a.k {
            if v[j + i * d] != v[j] + i * step {
                return Ok(false);
            }
            i += 1;
        }
    }
    Ok(true)
}

/// Least divisor `d` of `(k, n)` for which `a` is `d`-additive.
pub fn period(a: &MonotoneSeq) -> Result<usize> {
    if a.values[0] != 0 {
        return Err(Error::InvalidArgument("period needs a(0) = 0".into()));
    }
    for d in divisors_of_kn(a.k, a.n) {
        if is_d_additive(a, d)? {
            return Ok(d);
        }
    }
    unreachable!("every sequence with a(0) = 0 is (k+1)-additive")
}

/// Orbit partition of a finite set under a permutation, in order of first element.
pub fn orbits_of<T, F>(items: &[T], step: F) -> Vec<Vec<T>>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T) -> T,
{
    let mut seen: HashSet<T> = HashSet::with_capacity(items.len());
    let mut out = Vec::new();
    for x in items {
        if seen.contains(x) {
            continue;
        }
        let mut orbit = vec![x.clone()];
        seen.insert(x.clone());
        let mut y = step(x);
        while &y != x {
            seen.insert(y.clone());
            orbit.push(y.clone());
            y = step(&y);
        }
        out.push(orbit);
    }
    out
}

pub fn seq_orbits(n: usize, k: usize) -> Vec<Vec<MonotoneSeq>> {
    orbits_of(&enum_seqs(n, k), serre_step)
}

/// Counts sequences that are lexicographically least in their Serre orbit.
pub fn count_orbits_brute(k: usize, big_n: usize) -> Result<BigUint> {
    check_kn(k, big_n)?;
    let seqs = enum_seqs(big_n - 1, k);
    let minima = seqs.par_iter().filter(|a| is_orbit_minimum(a)).count();
    Ok(BigUint::from(minima))
}

fn is_orbit_minimum(a: &MonotoneSeq) -> bool {
    let mut y = serre_step(a);
    while &y != a {
        if y < *a {
            return false;
        }
        y = serre_step(&y);
    }
    true
}

fn check_kn(k: usize, big_n: usize) -> Result<()> {
    if k == 0 || k > big_n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= N, got k={k}, N={big_n}"
        )));
    }
    Ok(())
}

pub fn mobius(mut m: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// Closed form for the number of Serre orbits, a Möbius sum over pairs of
/// divisors `y | x | D` with `D = gcd(k+1, n+2)`.
pub fn count_orbits_formula(k: usize, big_n: usize) -> Result<BigUint> {
    check_kn(k, big_n)?;
    let n = big_n - 1;
    let (kp, np) = ((k + 1) as u64, (n + 2) as u64);
    let d_big = kp.gcd(&np);
    let divs: Vec<u64> = (1..=d_big).filter(|x| d_big % x == 0).collect();
    let mut sum = BigRational::zero();
    for &x in &divs {
        for &y in divs.iter().filter(|&&y| x % y == 0) {
            let mu = mobius(x / y);
            if mu == 0 {
                continue;
            }
            let coeff = BigRational::new(BigInt::from(mu * d_big as i64), BigInt::from(kp * x));
            let b = binomial(y * np / d_big - 1, y * kp / d_big - 1);
            sum += coeff * BigRational::from_integer(BigInt::from(b));
        }
    }
    assert!(sum.is_integer(), "orbit count must be integral");
    Ok(sum
        .to_integer()
        .to_biguint()
        .expect("orbit count is non-negative"))
}

/// Orthogonal pairs `<s_{a,b}, s_{i,j}>`: disjoint and non-adjacent, or strictly nested.
pub fn enum_genus_minus1(n: usize) -> Vec<GenSetA> {
    let mut out = Vec::new();
    let pts = enum_points(n);
    for &p in &pts {
        for &q in &pts {
            let separated = p.j + 1 < q.i;
            let nested = p.i < q.i && q.j < p.j;
            if separated || nested {
                out.push(GenSetA(vec![p, q]));
            }
        }
    }
    out.sort();
    out
}

/// Genus -1 curves as unordered orthogonal pairs, found by the Euler form.
pub fn orthogonal_pairs_brute(n: usize) -> Vec<(Interval, Interval)> {
    let pts = enum_points(n);
    let mut out = Vec::new();
    for (a, &p) in pts.iter().enumerate() {
        for &q in &pts[a + 1..] {
            if is_orthogonal(p, q, n) {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn genus_minus1_orbits(n: usize) -> Vec<Vec<(Interval, Interval)>> {
    let norm = |(p, q): (Interval, Interval)| if p <= q { (p, q) } else { (q, p) };
    orbits_of(&orthogonal_pairs_brute(n), |&(p, q)| {
        norm((serre_point(p, n), serre_point(q, n)))
    })
}

/// Number of genus `g` curves in `D^b(A_N)`, by closed forms.
pub fn count_genus(g: i64, big_n: u64, group: Group) -> Result<Count> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let n = big_n - 1;
    match (g, group) {
        (g, _) if g >= 1 => Ok(Count::from(0u64)),
        (0, Group::Id) => Ok(binomial(n + 2, 3).into()),
        (0, Group::Full) => {
            let num = (n + 1) * n + if n >= 1 && (n - 1) % 3 == 0 { 4 } else { 0 };
            if n == 0 {
                return Ok(Count::from(0u64));
            }
            Ok(Count::from(num / 6))
        }
        (-1, Group::Id) => Ok((binomial(n + 2, 4) * 2u32).into()),
        (-1, Group::Full) => {
            let m = big_n;
            let v = if m % 2 == 0 {
                m * (m - 1) * m.saturating_sub(2) / 12
            } else {
                (m - 1) * ((m - 1) * (m - 1) + 2) / 12
            };
            Ok(Count::from(v))
        }
        (g, _) => Err(Error::UnsupportedGenus(g)),
    }
}

/// Number of genus `g` curves in `D^b(A_N)`, by exhaustive orbit partition.
pub fn count_genus_brute(g: i64, big_n: usize, group: Group) -> Result<Count> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let n = big_n - 1;
    match (g, group) {
        (g, _) if g >= 1 => Ok(Count::from(0u64)),
        (0, _) if big_n < 2 => Ok(Count::from(0u64)),
        (0, Group::Id) => Ok(Count::from(enum_seqs(n, 2).len())),
        (0, Group::Full) => Ok(Count::from(seq_orbits(n, 2).len())),
        (-1, Group::Id) => Ok(Count::from(orthogonal_pairs_brute(n).len())),
        (-1, Group::Full) => Ok(Count::from(genus_minus1_orbits(n).len())),
        (g, _) => Err(Error::UnsupportedGenus(g)),
    }
}

/// Relative position of two intervals read off directly from their endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    NotExceptional,
    Orthogonal,
    Hom0,
    Hom1,
}

pub fn pair_kind_by_endpoints(x: Interval, y: Interval) -> PairKind {
    let (a, b, i, j) = (x.i, x.j, y.i, y.j);
    if (a, b) == (i, j) {
        return PairKind::NotExceptional;
    }
    if a < i && b < j {
        return match b {
            b if b + 1 == i => PairKind::Hom1,
            b if b + 1 < i => PairKind::Orthogonal,
            _ => PairKind::NotExceptional,
        };
    }
    if i < a && j < b {
        return if j + 1 < a {
            PairKind::Orthogonal
        } else {
            PairKind::NotExceptional
        };
    }
    if a <= i && j <= b {
        return match (a == i, j < b) {
            (true, true) => PairKind::Hom0,
            (false, true) => PairKind::Orthogonal,
            _ => PairKind::NotExceptional,
        };
    }
    // i <= a <= b <= j
    match (i < a, b == j) {
        (true, true) => PairKind::Hom0,
        (true, false) => PairKind::Orthogonal,
        _ => PairKind::NotExceptional,
    }
}

pub fn pair_kind(x: Interval, y: Interval, n: usize) -> PairKind {
    if x == y || !is_exceptional_pair(x, y, n) {
        return PairKind::NotExceptional;
    }
    let p = hom_profile(x, y, n);
    match (p.hom0, p.hom1) {
        (0, 0) => PairKind::Orthogonal,
        (_, 0) => PairKind::Hom0,
        _ => PairKind::Hom1,
    }
}

/// Orbit sizes of the Serre functor on derived points.
pub fn point_orbit_sizes(n: usize) -> Vec<usize> {
    orbits_of(&enum_points(n), |&p| serre_point(p, n))
        .iter()
        .map(|o| o.len())
        .collect()
}

pub fn to_u64(v: &BigUint) -> u64 {
    v.to_u64().expect("fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, k: usize, v: &[usize]) -> MonotoneSeq {
        MonotoneSeq::new(n, k, v.to_vec()).unwrap()
    }

    #[test]
    fn points() {
        assert_eq!(enum_points(3).len(), 10);
        assert_eq!(enum_points(0), vec![Interval::new(0, 0)]);
        assert_eq!(enum_points(2).len(), 6);
    }

    #[test]
    fn staircase() {
        let g = seq_to_subcategory(&seq(2, 2, &[0, 0, 0]));
        assert_eq!(g.0, vec![Interval::new(0, 0), Interval::new(1, 1)]);
        let g = seq_to_subcategory(&seq(2, 3, &[0, 0, 0, 0]));
        assert_eq!(
            g.0,
            vec![
                Interval::new(0, 0),
                Interval::new(1, 1),
                Interval::new(2, 2)
            ]
        );
        let g = seq_to_subcategory(&seq(4, 2, &[0, 1, 3]));
        assert_eq!(g.0, vec![Interval::new(0, 1), Interval::new(2, 4)]);
    }

    #[test]
    fn identity_counts() {
        assert_eq!(count_id(1, 3), BigUint::from(6u32));
        assert_eq!(count_id(1, 4), BigUint::from(10u32));
        assert_eq!(count_id(4, 4), BigUint::one());
        assert_eq!(count_id(5, 3), BigUint::zero());
    }

    #[test]
    fn serre_examples() {
        assert_eq!(serre_step(&seq(4, 2, &[0, 1, 2])).values(), &[1, 2, 3]);
        assert_eq!(serre_step(&seq(4, 2, &[1, 2, 3])).values(), &[0, 1, 2]);
        assert_eq!(serre_on_point(0, 0, 2), (Interval::new(1, 1), true));
        assert_eq!(serre_on_point(1, 2, 2), (Interval::new(0, 1), false));
    }

    #[test]
    fn divisors() {
        assert_eq!(divisors_of_kn(2, 4), vec![1, 3]);
        assert_eq!(divisors_of_kn(3, 6), vec![1, 2, 4]);
        assert_eq!(divisors_of_kn(2, 3), vec![3]);
    }

    #[test]
    fn d_additive_examples() {
        assert!(is_d_additive(&seq(4, 2, &[0, 1, 2]), 1).unwrap());
        assert!(is_d_additive(&seq(4, 2, &[0, 2, 3]), 3).unwrap());
        assert!(!is_d_additive(&seq(4, 2, &[0, 0, 0]), 1).unwrap());
        assert_eq!(
            is_d_additive(&seq(4, 2, &[0, 0, 0]), 2),
            Err(Error::NotADivisor(2))
        );
        assert_eq!(period(&seq(4, 2, &[0, 0, 0])).unwrap(), 3);
        assert_eq!(period(&seq(4, 2, &[0, 1, 2])).unwrap(), 1);
        assert!(period(&seq(4, 2, &[1, 1, 2])).is_err());
    }

    #[test]
    fn orbit_anchors() {
        assert_eq!(count_orbits_brute(2, 5).unwrap(), BigUint::from(4u32));
        assert_eq!(count_orbits_brute(3, 6).unwrap(), BigUint::from(5u32));
        assert_eq!(count_orbits_brute(1, 3).unwrap(), BigUint::from(2u32));
        assert_eq!(count_orbits_formula(2, 5).unwrap(), BigUint::from(4u32));
        assert_eq!(count_orbits_formula(3, 6).unwrap(), BigUint::from(5u32));
        for k in 1..8 {
            assert_eq!(count_orbits_formula(k, k).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn genus_anchors() {
        assert_eq!(count_genus(-1, 3, Group::Id).unwrap(), Count::from(2u64));
        assert_eq!(count_genus(-1, 3, Group::Full).unwrap(), Count::from(1u64));
        assert_eq!(count_genus(0, 3, Group::Id).unwrap(), Count::from(4u64));
        assert_eq!(count_genus(3, 5, Group::Full).unwrap(), Count::from(0u64));
        assert_eq!(
            count_genus(-2, 5, Group::Id),
            Err(Error::UnsupportedGenus(-2))
        );
    }

    #[test]
    fn genus_minus1_small() {
        let e = enum_genus_minus1(2);
        assert_eq!(e.len(), 2);
        assert!(enum_genus_minus1(1).is_empty());
        let pairs: BTreeSet<BTreeSet<Interval>> =
            e.iter().map(|g| g.0.iter().copied().collect()).collect();
        let expect: BTreeSet<BTreeSet<Interval>> = [
            [Interval::new(0, 0), Interval::new(2, 2)]
                .into_iter()
                .collect(),
            [Interval::new(1, 1), Interval::new(0, 2)]
                .into_iter()
                .collect(),
        ]
        .into_iter()
        .collect();
        assert_eq!(pairs, expect);
        for g in &e {
            assert!(is_exceptional_pair(g.0[0], g.0[1], 2));
            assert!(is_exceptional_pair(g.0[1], g.0[0], 2));
        }
    }

    #[test]
    fn lemma_cases_match_euler_form() {
        for n in 0..=8 {
            for x in enum_points(n) {
                for y in enum_points(n) {
                    assert_eq!(
                        pair_kind(x, y, n),
                        pair_kind_by_endpoints(x, y),
                        "{x} {y} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn a3_noep_example() {
        let (p, q) = (Interval::new(0, 1), Interval::new(1, 2));
        assert!(!is_exceptional_pair(p, q, 2));
        assert!(!is_exceptional_pair(q, p, 2));
    }

    #[test]
    fn mutation_identities() {
        for n in 1..=6 {
            for a in 0..=n {
                for b in a..n {
                    for j in b + 1..=n {
                        let s = |i, j| Interval::new(i, j);
                        let x = span(&[s(b + 1, j), s(a, j)], n);
                        let y = span(&[s(a, b), s(b + 1, j)], n);
                        let z = span(&[s(a, j), s(a, b)], n);
                        assert_eq!(x, y);
                        assert_eq!(y, z);
                        assert_eq!(x.len(), 3);
                    }
                }
            }
        }
    }

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expect.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), m);
        }
    }
}
