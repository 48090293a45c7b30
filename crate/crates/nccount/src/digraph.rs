//! Valued directed graphs whose vertices are subcategories and whose edges
//! are semi-orthogonal pairs, with the simplicial complex they span.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::{self, AffObject, AffQuiver, AffSub, Fam};
use crate::d4::{self, D4Kind, PairClass};
use crate::error::{Error, Result};
use crate::type_a::{self, Interval, PairKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub genus: Option<i64>,
    /// Set on windowed graphs when edges may leave the window.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub boundary: bool,
}

impl Vertex {
    fn point(id: impl Into<String>) -> Self {
        Vertex {
            id: id.into(),
            genus: None,
            boundary: false,
        }
    }
}

/// Double-sided edges are stored as two arcs, both unweighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedDigraph {
    category: String,
    vertices: Vec<Vertex>,
    arcs: BTreeMap<(usize, usize), Option<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Census {
    pub vertices: usize,
    pub one_sided: usize,
    pub double_sided: usize,
}

impl Census {
    pub fn edges(&self) -> usize {
        self.one_sided + self.double_sided
    }
}

impl ValuedDigraph {
    pub fn new(
        category: impl Into<String>,
        vertices: Vec<Vertex>,
        arcs: BTreeMap<(usize, usize), Option<u64>>,
    ) -> Result<Self> {
        let ids: BTreeSet<&str> = vertices.iter().map(|v| v.id.as_str()).collect();
        if ids.len() != vertices.len() {
            return Err(Error::InvalidArgument("duplicate vertex id".into()));
        }
        for (&(a, b), w) in &arcs {
            if a == b {
                return Err(Error::InvalidArgument(format!(
                    "self-loop at {}",
                    vertices[a].id
                )));
            }
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::InvalidArgument("arc endpoint out of range".into()));
            }
            if w.is_some() && arcs.contains_key(&(b, a)) {
                return Err(Error::InvalidArgument(
                    "weight on a double-sided edge".into(),
                ));
            }
        }
        Ok(ValuedDigraph {
            category: category.into(),
            vertices,
            arcs,
        })
    }

    /// Builds the graph from a pair oracle returning the total hom of an
    /// exceptional pair, or `None` if the pair is not exceptional.
    fn from_oracle<F>(category: &str, vertices: Vec<Vertex>, weigh: F) -> Self
    where
        F: Fn(usize, usize) -> Option<Option<u64>>,
    {
        let n = vertices.len();
        let mut arcs = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                if let Some(w) = weigh(a, b) {
                    let double = weigh(b, a).is_some();
                    arcs.insert((a, b), if double { None } else { w });
                }
            }
        }
        ValuedDigraph::new(category, vertices, arcs).expect("oracle graphs are well formed")
    }

    pub fn category(&self) -> &str {
        &self.category
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains_key(&(a, b))
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<u64> {
        self.arcs.get(&(a, b)).copied().flatten()
    }

    pub fn is_double(&self, a: usize, b: usize) -> bool {
        self.has_arc(a, b) && self.has_arc(b, a)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, Option<u64>)> + '_ {
        self.arcs.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    pub fn census(&self) -> Census {
        let double = self
            .arcs
            .keys()
            .filter(|&&(a, b)| self.has_arc(b, a))
            .count();
        Census {
            vertices: self.vertices.len(),
            one_sided: self.arcs.len() - double,
            double_sided: double / 2,
        }
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.keys().filter(|&&(a, _)| a == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.keys().filter(|&&(_, b)| b == v).count()
    }

    /// Sorted cycle lengths if every vertex has in- and out-degree one.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        if (0..n).any(|v| self.out_degree(v) != 1 || self.in_degree(v) != 1) {
            return None;
        }
        let next: BTreeMap<usize, usize> = self.arcs.keys().copied().collect();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = next[&v];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        Some(out)
    }

    /// The full subgraph on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> ValuedDigraph {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arcs = self
            .arcs
            .iter()
            .filter_map(|(&(a, b), &w)| Some(((*pos.get(&a)?, *pos.get(&b)?), w)))
            .collect();
        ValuedDigraph {
            category: self.category.clone(),
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arcs,
        }
    }

    fn admits_ordering(&self, set: &[usize]) -> bool {
        if set.len() <= 1 {
            return true;
        }
        set.iter().enumerate().any(|(i, &first)| {
            let rest: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            rest.iter().all(|&v| self.has_arc(first, v)) && self.admits_ordering(&rest)
        })
    }

    /// Vertex sets of size at most `max_dim + 1` with a semi-orthogonal ordering.
    pub fn sc_simplices(&self, max_dim: usize) -> Vec<Vec<usize>> {
        let mut layer: Vec<Vec<usize>> = (0..self.vertices.len()).map(|v| vec![v]).collect();
        let mut out = layer.clone();
        for _ in 0..max_dim {
            let mut next = Vec::new();
            for s in &layer {
                let last = *s.last().expect("simplices are non-empty");
                for v in last + 1..self.vertices.len() {
                    let mut t = s.clone();
                    t.push(v);
                    if self.admits_ordering(&t) {
                        next.push(t);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let q = |s: &str| format!("\"{}\"", s.replace('"', "\\\""));
        let mut out = format!("digraph {} {{\n", q(&self.category));
        for v in &self.vertices {
            let _ = writeln!(out, "  {};", q(&v.id));
        }
        for (&(a, b), w) in &self.arcs {
            let (sa, sb) = (q(&self.vertices[a].id), q(&self.vertices[b].id));
            if self.is_double(a, b) {
                if a < b {
                    let _ = writeln!(out, "  {sa} -> {sb} [dir=both];");
                }
            } else if let Some(w) = w {
                let _ = writeln!(out, "  {sa} -> {sb} [label={w}];");
            } else {
                let _ = writeln!(out, "  {sa} -> {sb};");
            }
        }
        out.push_str("}\n");
        out
    }

    fn to_doc(&self) -> GraphDoc {
        let edges = self
            .arcs
            .iter()
            .filter(|(&(a, b), _)| !self.is_double(a, b) || a < b)
            .map(|(&(a, b), &w)| EdgeDoc {
                src: self.vertices[a].id.clone(),
                dst: self.vertices[b].id.clone(),
                weight: w,
                both: self.is_double(a, b),
            })
            .collect();
        GraphDoc {
            category: self.category.clone(),
            vertices: self.vertices.clone(),
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("graph documents serialize")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("graph documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let index: BTreeMap<&str, usize> = doc
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let mut arcs = BTreeMap::new();
        for e in &doc.edges {
            let a = *index
                .get(e.src.as_str())
                .ok_or_else(|| Error::UnknownVertex(e.src.clone()))?;
            let b = *index
                .get(e.dst.as_str())
                .ok_or_else(|| Error::UnknownVertex(e.dst.clone()))?;
            if e.both {
                arcs.insert((a, b), None);
                arcs.insert((b, a), None);
            } else {
                arcs.insert((a, b), e.weight);
            }
        }
        ValuedDigraph::new(doc.category, doc.vertices, arcs)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeDoc {
    src: String,
    dst: String,
    weight: Option<u64>,
    both: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    category: String,
    vertices: Vec<Vertex>,
    edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Category {
    /// `D^b(A_N)`.
    A(usize),
    D4,
    Q1(RangeInclusive<i64>),
    Q2(RangeInclusive<i64>),
    /// The curve of genus `l`, windowed when it has infinitely many points.
    NP(i64, RangeInclusive<i64>),
}

impl Category {
    /// Parses `a3`, `d4`, `q1`, `q2`, `np0`, `np-1`; affine and `np` windows are `-w..=w`.
    pub fn parse(s: &str, window: i64) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        let w = -window..=window;
        if s == "d4" {
            return Ok(Category::D4);
        }
        if s == "q1" || s == "q2" {
            return Ok(match AffQuiver::from_str(&s)? {
                AffQuiver::Q1 => Category::Q1(w),
                AffQuiver::Q2 => Category::Q2(w),
            });
        }
        if let Some(rest) = s.strip_prefix("np") {
            let l: i64 = rest
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad genus in {s}")))?;
            if l < -1 {
                return Err(Error::UnsupportedGenus(l));
            }
            return Ok(Category::NP(l, w));
        }
        if let Some(rest) = s.strip_prefix('a') {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 1 {
                    return Ok(Category::A(n));
                }
            }
        }
        Err(Error::InvalidArgument(format!("unknown category {s}")))
    }

    pub fn name(&self) -> String {
        match self {
            Category::A(n) => format!("A({n})"),
            Category::D4 => "D4".into(),
            Category::Q1(_) => "Q1".into(),
            Category::Q2(_) => "Q2".into(),
            Category::NP(l, _) => format!("NP({l})"),
        }
    }
}

fn point_id(p: Interval) -> String {
    format!("<{p}>")
}

pub fn build_point_graph(cat: &Category) -> ValuedDigraph {
    match cat {
        Category::A(big_n) => a_point_graph(&cat.name(), *big_n),
        Category::D4 => {
            let labels = d4::ALL;
            let vertices = labels
                .iter()
                .map(|l| Vertex::point(format!("<{}>", l.name())))
                .collect();
            ValuedDigraph::from_oracle(&cat.name(), vertices, |a, b| {
                match d4::d4_pair_class(labels[a], labels[b]) {
                    PairClass::NotExceptional => None,
                    _ => Some(Some(d4::hom_total(labels[a], labels[b]))),
                }
            })
        }
        Category::Q1(w) => affine_point_graph(AffQuiver::Q1, w),
        Category::Q2(w) => affine_point_graph(AffQuiver::Q2, w),
        Category::NP(-1, _) => {
            let vertices = vec![Vertex::point("<E1>"), Vertex::point("<E2>")];
            ValuedDigraph::from_oracle(&cat.name(), vertices, |_, _| Some(Some(0)))
        }
        Category::NP(0, _) => a_point_graph(&cat.name(), 2),
        Category::NP(l, w) => {
            let idx: Vec<i64> = w.clone().collect();
            let vertices = idx
                .iter()
                .map(|i| Vertex {
                    id: format!("<s{i}>"),
                    genus: None,
                    boundary: i == w.start() || i == w.end(),
                })
                .collect();
            let weight = (*l + 1) as u64;
            ValuedDigraph::from_oracle(&cat.name(), vertices, |a, b| {
                (idx[b] == idx[a] + 1).then_some(Some(weight))
            })
        }
    }
}

fn a_point_graph(category: &str, big_n: usize) -> ValuedDigraph {
    let n = big_n - 1;
    let pts = type_a::enum_points(n);
    let vertices = pts.iter().map(|&p| Vertex::point(point_id(p))).collect();
    ValuedDigraph::from_oracle(
        category,
        vertices,
        |a, b| match type_a::pair_kind_by_endpoints(pts[a], pts[b]) {
            PairKind::NotExceptional => None,
            PairKind::Orthogonal => Some(Some(0)),
            PairKind::Hom0 | PairKind::Hom1 => Some(Some(1)),
        },
    )
}

fn on_boundary(x: &AffObject, w: &RangeInclusive<i64>) -> bool {
    x.family.is_series() && (x.index == *w.start() || x.index == *w.end())
}

fn affine_point_graph(q: AffQuiver, w: &RangeInclusive<i64>) -> ValuedDigraph {
    let objs = affine::objects_in_window(q, w);
    let vertices = objs
        .iter()
        .map(|x| Vertex {
            id: format!("<{x}>"),
            genus: None,
            boundary: on_boundary(x, w),
        })
        .collect();
    ValuedDigraph::from_oracle(&q.to_string(), vertices, |a, b| {
        affine::aff_pair_class(&objs[a], &objs[b])
            .expect("same quiver")
            .hom_total()
            .map(Some)
    })
}

/// Curves of `D^b(D_4)` of genus `-1` and `0`.
pub fn d4_curve_graph() -> ValuedDigraph {
    let mut gens = Vec::new();
    let mut vertices = Vec::new();
    for (kind, genus) in [(D4Kind::GenusMinus1, -1), (D4Kind::Genus0, 0)] {
        for g in d4::d4_enum(kind) {
            vertices.push(Vertex {
                id: g.to_string(),
                genus: Some(genus),
                boundary: false,
            });
            gens.push(g.generators);
        }
    }
    ValuedDigraph::from_oracle("D4 curves", vertices, |a, b| {
        let semi = gens[a]
            .iter()
            .all(|&x| gens[b].iter().all(|&y| x != y && d4::hom_total(y, x) == 0));
        semi.then_some(None)
    })
}

/// Curves of `D^b(Q2)` of genus `-1`, `0`, `1` with index in the window.
pub fn q2_curve_graph(w: &RangeInclusive<i64>) -> ValuedDigraph {
    let mut curves: Vec<AffSub> = Vec::new();
    for genus in -1..=1 {
        curves.extend(affine::aff_enum_curves(AffQuiver::Q2, genus, w.clone()));
    }
    curves.retain(|c| c.index().map_or(true, |m| w.contains(&m)));
    let gens: Vec<Vec<AffObject>> = curves.iter().map(|c| c.generators()).collect();
    let vertices = curves
        .iter()
        .map(|c| Vertex {
            id: c.to_string(),
            genus: c.genus(),
            boundary: c.index().is_some_and(|m| m == *w.start() || m == *w.end()),
        })
        .collect();
    ValuedDigraph::from_oracle("Q2 curves", vertices, |a, b| {
        let semi = gens[a]
            .iter()
            .all(|x| gens[b].iter().all(|y| affine::is_exceptional_pair(x, y)));
        semi.then_some(None)
    })
}

/// A copy of the point graph of `Q1` inside the point graph of `Q2`, given by
/// `a^m -> x^m`, `b^m -> y^(m + offset)`, `M -> p`, `M' -> p_prime`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Q1Pattern {
    pub x: Fam,
    pub y: Fam,
    pub offset: i64,
    pub p: Fam,
    pub p_prime: Fam,
}

impl Q1Pattern {
    pub fn apply(&self, o: &AffObject) -> AffObject {
        let q2 = AffQuiver::Q2;
        let (f, m) = match o.family {
            Fam::A => (self.x, o.index),
            Fam::B => (self.y, o.index + self.offset),
            Fam::M => (self.p, 0),
            _ => (self.p_prime, 0),
        };
        AffObject::new(q2, f, m).expect("pattern families lie in Q2")
    }

    pub fn families(&self) -> BTreeSet<Fam> {
        [self.x, self.y, self.p, self.p_prime].into_iter().collect()
    }
}

/// All family-shaped copies of the `Q1` point graph in `Q2`, checked on a
/// window wider than every index offset in the rule tables.
pub fn q1_patterns_in_q2() -> Vec<Q1Pattern> {
    let series = [Fam::A, Fam::B, Fam::C, Fam::D];
    let sporadic = [Fam::Fp, Fam::Fm, Fam::Gp, Fam::Gm];
    let src = affine::objects_in_window(AffQuiver::Q1, &(-3..=3));
    let mut out = Vec::new();
    for x in series {
        for y in series.into_iter().filter(|&y| y != x) {
            for offset in -3..=3 {
                for p in sporadic {
                    for p_prime in sporadic.into_iter().filter(|&f| f != p) {
                        let pat = Q1Pattern {
                            x,
                            y,
                            offset,
                            p,
                            p_prime,
                        };
                        let full = src.iter().all(|u| {
                            src.iter().all(|v| {
                                let here = affine::aff_pair_class(u, v).expect("same quiver");
                                let there = affine::aff_pair_class(&pat.apply(u), &pat.apply(v))
                                    .expect("same quiver");
                                here == there
                            })
                        });
                        if full {
                            out.push(pat);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Distinct images of the `Q1` pattern, as sets of families.
pub fn q1_pattern_images() -> BTreeSet<BTreeSet<Fam>> {
    q1_patterns_in_q2().iter().map(|p| p.families()).collect()
}

/// True iff `f` maps arcs and weights of `small` exactly onto the full subgraph of `big`.
pub fn is_full_embedding(small: &ValuedDigraph, big: &ValuedDigraph, f: &[usize]) -> bool {
    let n = small.vertices.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            a == b
                || (small.has_arc(a, b) == big.has_arc(f[a], f[b])
                    && small.weight(a, b) == big.weight(f[a], f[b]))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{self, Quiver};

    #[test]
    fn a3_census() {
        let g = build_point_graph(&Category::A(3));
        assert_eq!(
            g.census(),
            Census {
                vertices: 6,
                one_sided: 12,
                double_sided: 2
            }
        );
        assert!(g.arcs().all(|(a, b, w)| g.is_double(a, b) || w == Some(1)));
    }

    #[test]
    fn a3_two_simplices() {
        let g = build_point_graph(&Category::A(3));
        let sc = g.sc_simplices(3);
        let triples: Vec<_> = sc.iter().filter(|s| s.len() == 3).collect();
        let pts = type_a::enum_points(2);
        let mut expected = 0;
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    let set = [pts[a], pts[b], pts[c]];
                    let perms = [
                        [0, 1, 2],
                        [0, 2, 1],
                        [1, 0, 2],
                        [1, 2, 0],
                        [2, 0, 1],
                        [2, 1, 0],
                    ];
                    if perms.iter().any(|p| {
                        (0..3).all(|i| {
                            (i + 1..3).all(|j| type_a::is_exceptional_pair(set[p[i]], set[p[j]], 2))
                        })
                    }) {
                        expected += 1;
                    }
                }
            }
        }
        assert_eq!(triples.len(), expected);
        assert_eq!(sc.iter().filter(|s| s.len() == 1).count(), 6);
        assert!(sc.iter().all(|s| s.len() <= 3));
    }

    #[test]
    fn edges_match_euler_form() {
        for big_n in 1..=6 {
            let n = big_n - 1;
            let g = build_point_graph(&Category::A(big_n));
            let pts = type_a::enum_points(n);
            let q = Quiver::a(n);
            for (a, &x) in pts.iter().enumerate() {
                for (b, &y) in pts.iter().enumerate() {
                    if a != b {
                        let euler = quiver::is_exceptional_pair(&q, &x.dim(n), &y.dim(n)).unwrap();
                        assert_eq!(g.has_arc(a, b), euler, "{x} {y}");
                    }
                }
            }
        }
        let g = build_point_graph(&Category::D4);
        let q = Quiver::d4();
        for (a, &x) in d4::ALL.iter().enumerate() {
            for (b, &y) in d4::ALL.iter().enumerate() {
                if a != b {
                    assert_eq!(
                        g.has_arc(a, b),
                        quiver::is_exceptional_pair(&q, &x.dim(), &y.dim()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn type_a_inclusions_are_full() {
        for big_n in 1..=6 {
            let small = build_point_graph(&Category::A(big_n));
            let big = build_point_graph(&Category::A(big_n + 1));
            let f: Vec<usize> = small
                .vertices()
                .iter()
                .map(|v| big.index_of(&v.id).unwrap())
                .collect();
            assert!(is_full_embedding(&small, &big, &f));
        }
    }

    #[test]
    fn d4_census() {
        let g = build_point_graph(&Category::D4);
        let c = g.census();
        assert_eq!((c.vertices, c.edges(), c.double_sided), (12, 54, 9));
    }

    #[test]
    fn d4_full_collections() {
        let g = build_point_graph(&Category::D4);
        let tets = g
            .sc_simplices(3)
            .into_iter()
            .filter(|s| s.len() == 4)
            .count();
        let mut sets = BTreeSet::new();
        for seq in d4::exceptional_collections(4) {
            let mut s = seq.clone();
            s.sort();
            sets.insert(s);
        }
        assert_eq!(tets, sets.len());
    }

    #[test]
    fn np_graphs() {
        let g = build_point_graph(&Category::NP(-1, 0..=0));
        assert_eq!(
            g.census(),
            Census {
                vertices: 2,
                one_sided: 0,
                double_sided: 1
            }
        );
        let g = build_point_graph(&Category::NP(0, 0..=0));
        assert_eq!(g.cycle_lengths(), Some(vec![3]));
        assert!(g.arcs().all(|(_, _, w)| w == Some(1)));
        let g = build_point_graph(&Category::NP(2, -2..=2));
        assert_eq!(
            g.census(),
            Census {
                vertices: 5,
                one_sided: 4,
                double_sided: 0
            }
        );
        assert!(g.arcs().all(|(a, b, w)| b == a + 1 && w == Some(3)));
        assert!(g.vertices()[0].boundary && !g.vertices()[2].boundary);
    }

    #[test]
    fn q1_weights() {
        let w = -3..=3;
        let g = build_point_graph(&Category::Q1(w.clone()));
        let objs = affine::objects_in_window(AffQuiver::Q1, &w);
        for (a, b, wt) in g.arcs() {
            let (x, y) = (objs[a], objs[b]);
            let succ = x.family == y.family && x.family.is_series() && y.index == x.index + 1;
            assert_eq!(wt == Some(2), succ, "{x} {y}");
        }
    }

    #[test]
    fn d4_curve_cycles() {
        let g = d4_curve_graph();
        assert_eq!(g.census().vertices, 24);
        assert_eq!(g.census().edges(), 24);
        assert_eq!(g.cycle_lengths(), Some(vec![3, 3, 6, 6, 6]));
    }

    #[test]
    fn q2_curve_four_cycles() {
        let g = q2_curve_graph(&(-2..=2));
        let ids = ["C", "FG-", "D", "FG+"];
        let idx: Vec<usize> = ids.iter().map(|i| g.index_of(i).unwrap()).collect();
        for k in 0..4 {
            assert!(g.has_arc(idx[k], idx[(k + 1) % 4]));
        }
        let ids = ["A", "F+-", "B", "G+-"];
        let idx: Vec<usize> = ids.iter().map(|i| g.index_of(i).unwrap()).collect();
        for k in 0..4 {
            assert!(g.has_arc(idx[k], idx[(k + 1) % 4]));
        }
    }

    #[test]
    fn q1_patterns() {
        let images = q1_pattern_images();
        assert_eq!(images.len(), 4);
        for pat in q1_patterns_in_q2() {
            let rest: Vec<Fam> = [Fam::Fp, Fam::Fm, Fam::Gp, Fam::Gm]
                .into_iter()
                .filter(|f| *f != pat.p && *f != pat.p_prime)
                .collect();
            let hosts: Vec<AffSub> = rest
                .iter()
                .map(|&f| AffSub::Perp(AffObject::new(AffQuiver::Q2, f, 0).unwrap()))
                .filter(|s| {
                    affine::objects_in_window(AffQuiver::Q1, &(-2..=2))
                        .iter()
                        .all(|o| s.contains(&pat.apply(o)))
                })
                .collect();
            assert_eq!(hosts.len(), 1, "{pat:?}");
        }
    }

    #[test]
    fn json_round_trip() {
        for cat in [
            Category::A(3),
            Category::D4,
            Category::NP(1, -2..=2),
            Category::Q2(-1..=1),
        ] {
            let g = build_point_graph(&cat);
            let back = ValuedDigraph::from_json(&g.to_json()).unwrap();
            assert_eq!(back, g);
        }
        let empty = ValuedDigraph::new("empty", vec![], BTreeMap::new()).unwrap();
        assert_eq!(empty.to_dot(), "digraph \"empty\" {\n}\n");
        assert_eq!(ValuedDigraph::from_json(&empty.to_json()).unwrap(), empty);
    }

    #[test]
    fn dot_np0() {
        let dot = build_point_graph(&Category::NP(0, 0..=0)).to_dot();
        assert_eq!(dot.matches("[label=1]").count(), 3);
        assert_eq!(dot.matches(";\n").count(), 6);
    }

    #[test]
    fn rejects_bad_graphs() {
        let v = vec![Vertex::point("x"), Vertex::point("y")];
        let loops = BTreeMap::from([((0, 0), None)]);
        assert!(ValuedDigraph::new("g", v.clone(), loops).is_err());
        let weighted_double = BTreeMap::from([((0, 1), Some(1)), ((1, 0), None)]);
        assert!(ValuedDigraph::new("g", v, weighted_double).is_err());
        assert!(Category::parse("e8", 2).is_err());
        assert_eq!(
            Category::parse("np-1", 2).unwrap(),
            Category::NP(-1, -2..=2)
        );
    }
}
