//! Quivers, dimension vectors and the Euler form.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and arrows given as `(source, target)` ids.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S)]) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(Error::DuplicateVertex(v.as_ref().to_string()));
            }
        }
        let lookup = |v: &S| {
            index
                .get(v.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))
        };
        let arrows = arrows
            .iter()
            .map(|(s, t)| Ok((lookup(s)?, lookup(t)?)))
            .collect::<Result<Vec<_>>>()?;
        let q = Quiver {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            arrows,
        };
        if !q.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(q)
    }

    /// `A_{n+1}`: vertices `0..=n` with arrows `i -> i+1`.
    pub fn a(n: usize) -> Self {
        let vertices = (0..=n).map(|i| i.to_string()).collect();
        let arrows = (0..n).map(|i| (i, i + 1)).collect();
        Quiver { vertices, arrows }
    }

    /// `D_4` with vertices `1, 2, 3, o` and every arrow pointing into `o`.
    pub fn d4() -> Self {
        Quiver {
            vertices: ["1", "2", "3", "o"].iter().map(|s| s.to_string()).collect(),
            arrows: vec![(0, 3), (1, 3), (2, 3)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        seen == n
    }

    /// True iff the underlying graph is a simply laced Dynkin diagram.
    pub fn is_dynkin(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut edges = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            if s == t || !edges.insert((s.min(t), s.max(t))) {
                return false;
            }
            adj[s].push(t);
            adj[t].push(s);
        }
        if edges.len() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
        match branch.as_slice() {
            [] => true,
            [b] if adj[*b].len() == 3 => {
                // arm lengths p, q, r counted with the branch vertex
                let mut arms: Vec<u64> = adj[*b]
                    .iter()
                    .map(|&start| {
                        let (mut prev, mut cur, mut len) = (*b, start, 2u64);
                        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                            prev = cur;
                            cur = next;
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                let (p, q, r) = (arms[0], arms[1], arms[2]);
                q * r + p * r + p * q > p * q * r
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(&e) = entries.iter().find(|&&e| e < 0) {
            return Err(Error::InvalidArgument(format!("negative dimension {e}")));
        }
        Ok(DimVector(entries))
    }

    pub fn zero(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomProfile {
    pub hom0: u64,
    pub hom1: u64,
}

impl HomProfile {
    pub fn total(&self) -> u64 {
        self.hom0 + self.hom1
    }
}

fn check_dims(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<()> {
    for v in [a, b] {
        if v.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: q.vertex_count(),
                got: v.len(),
            });
        }
    }
    Ok(())
}

/// `<a, b> = sum_v a_v b_v - sum_{x -> y} a_x b_y`.
pub fn euler_form(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64> {
    check_dims(q, a, b)?;
    let (a, b) = (a.entries(), b.entries());
    let mut acc: i64 = 0;
    for v in 0..a.len() {
        let t = a[v].checked_mul(b[v]).ok_or(Error::Overflow)?;
        acc = acc.checked_add(t).ok_or(Error::Overflow)?;
    }
    for &(x, y) in q.arrows() {
        let t = a[x].checked_mul(b[y]).ok_or(Error::Overflow)?;
        acc = acc.checked_sub(t).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Hom and Ext dimensions between exceptional representations of a Dynkin quiver.
pub fn dynkin_hom_profile(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<HomProfile> {
    if !q.is_dynkin() {
        return Err(Error::NotDynkin);
    }
    let e = euler_form(q, a, b)?;
    Ok(HomProfile {
        hom0: e.max(0) as u64,
        hom1: (-e).max(0) as u64,
    })
}

/// `(a, b)` is exceptional iff nothing maps back from `b` to `a`, i.e. `<b, a> = 0`.
pub fn is_exceptional_pair(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<bool> {
    if !q.is_dynkin() {
        return Err(Error::NotDynkin);
    }
    Ok(euler_form(q, b, a)? == 0)
}
