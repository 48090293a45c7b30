//! Vertex subsets of a regular polygon up to rotation.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::type_a::{binomial, MonotoneSeq};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgon {
    m: usize,
    vertices: Vec<usize>,
}

impl Subgon {
    pub fn new(m: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidArgument(
                "a subgon needs at least one vertex".into(),
            ));
        }
        if let Some(&v) = set.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not a residue mod {m}"
            )));
        }
        Ok(Subgon {
            m,
            vertices: set.into_iter().collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn rotate(&self, by: usize) -> Subgon {
        let mut v: Vec<usize> = self.vertices.iter().map(|x| (x + by) % self.m).collect();
        v.sort_unstable();
        Subgon {
            m: self.m,
            vertices: v,
        }
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> Subgon {
        (0..self.m)
            .map(|r| self.rotate(r))
            .min_by(|a, b| a.vertices.cmp(&b.vertices))
            .expect("m >= 1")
    }
}

impl fmt::Display for Subgon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vertices.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}} mod {}", v.join(","), self.m)
    }
}

/// `a -> {a_j + j mod (n+2)}`.
pub fn seq_to_subgon(a: &MonotoneSeq) -> Subgon {
    let m = a.n() + 2;
    Subgon::new(m, a.values().iter().enumerate().map(|(j, v)| (v + j) % m))
        .expect("values are distinct residues")
}

fn check(m: usize, s: usize) -> Result<()> {
    if s == 0 || s > m {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= s <= m, got s={s}, m={m}"
        )));
    }
    Ok(())
}

fn subsets(m: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn rec(start: usize, m: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            if m - v < s - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, m, s, cur, out);
            cur.pop();
        }
    }
    rec(0, m, s, &mut cur, &mut out);
    out
}

/// Canonical representatives of all rotation classes of `s`-subsets of `Z/m`.
pub fn subgon_classes(m: usize, s: usize) -> Result<Vec<Subgon>> {
    check(m, s)?;
    let set: BTreeSet<Subgon> = subsets(m, s)
        .into_iter()
        .map(|v| Subgon { m, vertices: v }.canonical())
        .collect();
    Ok(set.into_iter().collect())
}

/// Rotation classes of subsets of `Z/m`, indexed by size, via a visited bitmap
/// over all `2^m` subsets.
pub fn class_counts_by_size(m: usize) -> Vec<u64> {
    assert!(
        (1..=30).contains(&m),
        "bitmask enumeration supports 1 <= m <= 30"
    );
    let full: u32 = (1u32 << m) - 1;
    let rot = |x: u32| ((x << 1) | (x >> (m - 1))) & full;
    let mut visited = vec![0u64; (1usize << m).div_ceil(64)];
    let mut counts = vec![0u64; m + 1];
    for x in 0..=full {
        let i = x as usize;
        if visited[i / 64] >> (i % 64) & 1 == 1 {
            continue;
        }
        counts[x.count_ones() as usize] += 1;
        let mut y = x;
        loop {
            let j = y as usize;
            visited[j / 64] |= 1 << (j % 64);
            y = rot(y);
            if y == x {
                break;
            }
        }
    }
    counts
}

pub fn count_subgon_classes_brute(m: usize, s: usize) -> Result<BigUint> {
    check(m, s)?;
    Ok(BigUint::from(class_counts_by_size(m)[s]))
}

pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Burnside: `(1/m) sum_{d | gcd(m, s)} phi(d) C(m/d, s/d)`.
pub fn count_subgon_classes_burnside(m: usize, s: usize) -> Result<BigUint> {
    check(m, s)?;
    let (m, s) = (m as u64, s as u64);
    let g = m.gcd(&s);
    let mut sum = BigUint::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        sum += binomial(m / d, s / d) * totient(d);
    }
    let (q, r) = sum.div_rem(&BigUint::from(m));
    assert!(r.is_zero(), "Burnside sum must be divisible by m");
    Ok(q)
}

/// Number of `s`-subgons of a regular `m`-gon up to rotation. Both counting
/// routes run when `m` is small enough for enumeration.
pub fn count_subgon_classes(m: usize, s: usize) -> Result<BigUint> {
    let formula = count_subgon_classes_burnside(m, s)?;
    if m <= 20 {
        let brute = count_subgon_classes_brute(m, s)?;
        if brute != formula {
            return Err(Error::InvalidArgument(format!(
                "Burnside {formula} disagrees with enumeration {brute} at ({m}, {s})"
            )));
        }
    }
    Ok(formula)
}
