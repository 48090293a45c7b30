//! The twelve exceptional objects of `D^b(D_4)` and the curves they span.
//!
//! Vertices are ordered `1, 2, 3, o` and every arrow points into `o`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::count::orbit_partition;
use crate::error::{Error, Result};
use crate::quiver::{self, DimVector, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum D4Label {
    S1,
    S2,
    S3,
    S1o,
    S2o,
    S3o,
    S12,
    S13,
    S23,
    S123,
    So,
    Delta,
}

use D4Label::*;

pub const ALL: [D4Label; 12] = [S1, S2, S3, S1o, S2o, S3o, S12, S13, S23, S123, So, Delta];

impl D4Label {
    pub fn name(self) -> &'static str {
        match self {
            S1 => "s1",
            S2 => "s2",
            S3 => "s3",
            S1o => "s1o",
            S2o => "s2o",
            S3o => "s3o",
            S12 => "s12",
            S13 => "s13",
            S23 => "s23",
            S123 => "s123",
            So => "so",
            Delta => "delta",
        }
    }

    pub fn dim(self) -> DimVector {
        let v: [i64; 4] = match self {
            S1 => [1, 0, 0, 0],
            S2 => [0, 1, 0, 0],
            S3 => [0, 0, 1, 0],
            S1o => [1, 0, 0, 1],
            S2o => [0, 1, 0, 1],
            S3o => [0, 0, 1, 1],
            S12 => [1, 1, 0, 1],
            S13 => [1, 0, 1, 1],
            S23 => [0, 1, 1, 1],
            S123 => [1, 1, 1, 1],
            So => [0, 0, 0, 1],
            Delta => [1, 1, 1, 2],
        };
        DimVector::new(v.to_vec()).expect("non-negative")
    }
}

impl fmt::Display for D4Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for D4Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL.iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown D4 object {s}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D4Object {
    pub label: D4Label,
    pub dim: DimVector,
}

pub fn d4_objects() -> Vec<D4Object> {
    ALL.iter()
        .map(|&label| D4Object {
            label,
            dim: label.dim(),
        })
        .collect()
}

pub fn hom_total(a: D4Label, b: D4Label) -> u64 {
    quiver::dynkin_hom_profile(&Quiver::d4(), &a.dim(), &b.dim())
        .expect("D4 is Dynkin")
        .total()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    NotExceptional,
    Orthogonal,
    HomOne,
}

pub fn d4_pair_class(a: D4Label, b: D4Label) -> PairClass {
    let q = Quiver::d4();
    if a == b || !quiver::is_exceptional_pair(&q, &a.dim(), &b.dim()).expect("D4 is Dynkin") {
        return PairClass::NotExceptional;
    }
    match hom_total(a, b) {
        0 => PairClass::Orthogonal,
        _ => PairClass::HomOne,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D4Generator {
    Kappa,
    Serre,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D4Group {
    Id,
    Kappa,
    Serre,
    Full,
}

impl D4Group {
    pub fn generators(self) -> &'static [D4Generator] {
        match self {
            D4Group::Id => &[],
            D4Group::Kappa => &[D4Generator::Kappa],
            D4Group::Serre => &[D4Generator::Serre],
            D4Group::Full => &[D4Generator::Kappa, D4Generator::Serre],
        }
    }
}

pub fn d4_act(g: D4Generator, x: D4Label) -> D4Label {
    match g {
        D4Generator::Kappa => match x {
            S1 => S2,
            S2 => S3,
            S3 => S1,
            S1o => S2o,
            S2o => S3o,
            S3o => S1o,
            S12 => S23,
            S23 => S13,
            S13 => S12,
            other => other,
        },
        D4Generator::Serre => match x {
            Delta => So,
            So => S123,
            S123 => Delta,
            S1 => S23,
            S2 => S13,
            S3 => S12,
            S23 => S1o,
            S13 => S2o,
            S12 => S3o,
            S1o => S1,
            S2o => S2,
            S3o => S3,
        },
    }
}

/// A subcategory, identified by the set of exceptional objects it contains.
pub type Span = BTreeSet<D4Label>;

pub fn span(gens: &[D4Label]) -> Span {
    let right: Vec<D4Label> = ALL
        .iter()
        .copied()
        .filter(|&y| gens.iter().all(|&g| hom_total(g, y) == 0))
        .collect();
    ALL.iter()
        .copied()
        .filter(|&x| right.iter().all(|&y| hom_total(x, y) == 0))
        .collect()
}

fn act_span(g: D4Generator, s: &Span) -> Span {
    s.iter().map(|&x| d4_act(g, x)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D4Kind {
    Points,
    Genus0,
    GenusMinus1,
    TriplesA3,
    TriplesA1Cubed,
}

impl FromStr for D4Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "points" => D4Kind::Points,
            "genus0" => D4Kind::Genus0,
            "genus-1" | "genusMinus1" => D4Kind::GenusMinus1,
            "triples-A3" | "triples-a3" => D4Kind::TriplesA3,
            "triples-A1cubed" | "triples-a1cubed" => D4Kind::TriplesA1Cubed,
            _ => return Err(Error::InvalidArgument(format!("unknown D4 kind {s}"))),
        })
    }
}

/// A subcategory together with its least ordered generating collection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct D4GenSet {
    pub generators: Vec<D4Label>,
    pub objects: Span,
}

impl fmt::Display for D4GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<&str> = self.generators.iter().map(|l| l.name()).collect();
        write!(f, "<{}>", g.join(" "))
    }
}

fn is_collection(seq: &[D4Label]) -> bool {
    seq.iter().enumerate().all(|(i, &a)| {
        seq[i + 1..]
            .iter()
            .all(|&b| d4_pair_class(a, b) != PairClass::NotExceptional)
    })
}

fn collections(len: usize) -> Vec<Vec<D4Label>> {
    let mut out: Vec<Vec<D4Label>> = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|seq| {
                ALL.iter().filter_map(move |&x| {
                    let mut next = seq.clone();
                    next.push(x);
                    is_collection(&next).then_some(next)
                })
            })
            .collect();
    }
    out
}

/// All exceptional collections of length `len`, in lexicographic order.
pub fn exceptional_collections(len: usize) -> Vec<Vec<D4Label>> {
    collections(len)
}

fn group_by_span(seqs: Vec<Vec<D4Label>>) -> Vec<D4GenSet> {
    let mut found: Vec<D4GenSet> = Vec::new();
    for seq in seqs {
        let objects = span(&seq);
        if !found.iter().any(|g| g.objects == objects) {
            found.push(D4GenSet {
                generators: seq,
                objects,
            });
        }
    }
    found.sort();
    found
}

pub fn d4_enum(kind: D4Kind) -> Vec<D4GenSet> {
    match kind {
        D4Kind::Points => group_by_span(collections(1)),
        D4Kind::Genus0 | D4Kind::GenusMinus1 => {
            let want = if kind == D4Kind::Genus0 {
                PairClass::HomOne
            } else {
                PairClass::Orthogonal
            };
            let pairs = collections(2)
                .into_iter()
                .filter(|p| d4_pair_class(p[0], p[1]) == want)
                .collect();
            group_by_span(pairs)
        }
        D4Kind::TriplesA3 | D4Kind::TriplesA1Cubed => {
            let size = if kind == D4Kind::TriplesA3 { 6 } else { 3 };
            group_by_span(collections(3))
                .into_iter()
                .filter(|g| g.objects.len() == size)
                .collect()
        }
    }
}

pub fn d4_orbits(kind: D4Kind, group: D4Group) -> Vec<Vec<Span>> {
    let spans: Vec<Span> = d4_enum(kind).into_iter().map(|g| g.objects).collect();
    let gens: Vec<_> = group
        .generators()
        .iter()
        .map(|&g| move |s: &Span| act_span(g, s))
        .collect();
    orbit_partition(&spans, &gens)
}

pub fn d4_count(kind: D4Kind, group: D4Group) -> BigUint {
    BigUint::from(d4_orbits(kind, group).len())
}

/// `<X>^perp`: objects with no morphisms from `X`.
pub fn right_orthogonal(x: D4Label) -> Span {
    ALL.iter()
        .copied()
        .filter(|&y| y != x && hom_total(x, y) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objects() {
        let objs = d4_objects();
        assert_eq!(objs.len(), 12);
        assert_eq!(Delta.dim().entries(), &[1, 1, 1, 2]);
        assert_eq!(So.dim().entries(), &[0, 0, 0, 1]);
        for o in &objs {
            assert_eq!(
                quiver::euler_form(&Quiver::d4(), &o.dim, &o.dim).unwrap(),
                1
            );
        }
    }

    #[test]
    fn pair_class_examples() {
        assert_eq!(d4_pair_class(S1, S2), PairClass::Orthogonal);
        assert_eq!(d4_pair_class(S1o, Delta), PairClass::HomOne);
        assert_eq!(d4_pair_class(Delta, S1), PairClass::NotExceptional);
    }

    #[test]
    fn actions() {
        assert_eq!(d4_act(D4Generator::Serre, Delta), So);
        assert_eq!(d4_act(D4Generator::Kappa, Delta), Delta);
        for x in ALL {
            let s3 = (0..3).fold(x, |y, _| d4_act(D4Generator::Serre, y));
            assert_eq!(s3, x);
            let sk = d4_act(D4Generator::Serre, d4_act(D4Generator::Kappa, x));
            let ks = d4_act(D4Generator::Kappa, d4_act(D4Generator::Serre, x));
            assert_eq!(sk, ks);
        }
    }

    #[test]
    fn serre_preserves_pair_classes() {
        for a in ALL {
            for b in ALL {
                for g in [D4Generator::Kappa, D4Generator::Serre] {
                    assert_eq!(
                        d4_pair_class(a, b),
                        d4_pair_class(d4_act(g, a), d4_act(g, b))
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(d4_enum(D4Kind::Points).len(), 12);
        assert_eq!(d4_enum(D4Kind::Genus0).len(), 15);
        assert_eq!(d4_enum(D4Kind::GenusMinus1).len(), 9);
        assert_eq!(d4_enum(D4Kind::TriplesA3).len(), 9);
        assert_eq!(d4_enum(D4Kind::TriplesA1Cubed).len(), 3);
    }

    #[test]
    fn genus0_contains_sko_delta() {
        let g0: Vec<Span> = d4_enum(D4Kind::Genus0)
            .into_iter()
            .map(|g| g.objects)
            .collect();
        for k in [S1o, S2o, S3o] {
            assert!(g0.contains(&span(&[k, Delta])));
        }
    }

    #[test]
    fn orthogonal_triples() {
        let t: BTreeSet<Span> = d4_enum(D4Kind::TriplesA1Cubed)
            .into_iter()
            .map(|g| g.objects)
            .collect();
        let expect: BTreeSet<Span> = [Delta, So, S123]
            .iter()
            .map(|&x| right_orthogonal(x))
            .collect();
        assert_eq!(t, expect);
    }

    #[test]
    fn labels_round_trip() {
        for x in ALL {
            assert_eq!(x.name().parse::<D4Label>().unwrap(), x);
        }
        assert!("s4".parse::<D4Label>().is_err());
    }
}
