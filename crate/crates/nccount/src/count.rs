use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

/// A cardinality: an exact non-negative integer or infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(BigUint),
    Infinite,
}

impl Count {
    pub fn finite<T: Into<BigUint>>(v: T) -> Self {
        Count::Finite(v.into())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Count::Infinite)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count::Finite(BigUint::from(v))
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count::Finite(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count::Finite(v)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(v) => write!(f, "{v}"),
            Count::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Orbits of a finite set under the group generated by `gens`, each orbit
/// sorted and the list ordered by least element.
pub fn orbit_partition<T, F>(items: &[T], gens: &[F]) -> Vec<Vec<T>>
where
    T: Clone + Ord,
    F: Fn(&T) -> T,
{
    use std::collections::BTreeSet;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut sorted: Vec<T> = items.to_vec();
    sorted.sort();
    for x in sorted {
        if seen.contains(&x) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            if !orbit.insert(y.clone()) {
                continue;
            }
            for g in gens {
                let z = g(&y);
                if !orbit.contains(&z) {
                    stack.push(z);
                }
            }
        }
        seen.extend(orbit.iter().cloned());
        out.push(orbit.into_iter().collect());
    }
    out
}
