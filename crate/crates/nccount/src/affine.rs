//! The affine quivers `Q1` (triangle `1 -> 2 -> 3`, `1 -> 3`) and `Q2`
//! (square `1 -> 2 -> 3`, `1 -> 4 -> 3`).
//!
//! Exceptional objects come in `Z`-indexed series (`a^m`, `b^m`, and for `Q2`
//! also `c^m`, `d^m`) plus finitely many sporadic objects. Hom data is not
//! computable from the Euler form here, so pair classes come from rule tables
//! with symbolic index offsets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_integer::Integer;

use crate::count::Count;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffQuiver {
    Q1,
    Q2,
}

impl FromStr for AffQuiver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q1" => Ok(AffQuiver::Q1),
            "q2" => Ok(AffQuiver::Q2),
            _ => Err(Error::InvalidArgument(format!("unknown quiver {s}"))),
        }
    }
}

impl fmt::Display for AffQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AffQuiver::Q1 => "Q1",
            AffQuiver::Q2 => "Q2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fam {
    A,
    B,
    C,
    D,
    M,
    Mp,
    Fp,
    Fm,
    Gp,
    Gm,
}

impl Fam {
    pub fn is_series(self) -> bool {
        matches!(self, Fam::A | Fam::B | Fam::C | Fam::D)
    }

    fn name(self) -> &'static str {
        match self {
            Fam::A => "a",
            Fam::B => "b",
            Fam::C => "c",
            Fam::D => "d",
            Fam::M => "M",
            Fam::Mp => "M'",
            Fam::Fp => "F+",
            Fam::Fm => "F-",
            Fam::Gp => "G+",
            Fam::Gm => "G-",
        }
    }
}

/// An exceptional object up to shift. Sporadic objects carry index 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffObject {
    pub quiver: AffQuiver,
    pub family: Fam,
    pub index: i64,
}

impl AffObject {
    pub fn new(quiver: AffQuiver, family: Fam, index: i64) -> Result<Self> {
        if !families(quiver).contains(&family) {
            return Err(Error::InvalidArgument(format!(
                "{} is not an object family of {quiver}",
                family.name()
            )));
        }
        let index = if family.is_series() { index } else { 0 };
        Ok(AffObject {
            quiver,
            family,
            index,
        })
    }

    fn of(quiver: AffQuiver, family: Fam, index: i64) -> Self {
        AffObject::new(quiver, family, index).expect("family belongs to quiver")
    }
}

impl fmt::Display for AffObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_series() {
            write!(f, "{}^{}", self.family.name(), self.index)
        } else {
            f.write_str(self.family.name())
        }
    }
}

pub fn families(q: AffQuiver) -> &'static [Fam] {
    match q {
        AffQuiver::Q1 => &[Fam::A, Fam::B, Fam::M, Fam::Mp],
        AffQuiver::Q2 => &[
            Fam::A,
            Fam::B,
            Fam::C,
            Fam::D,
            Fam::Fp,
            Fam::Fm,
            Fam::Gp,
            Fam::Gm,
        ],
    }
}

/// All objects whose index (if any) lies in `window`.
pub fn objects_in_window(q: AffQuiver, window: &RangeInclusive<i64>) -> Vec<AffObject> {
    let mut out = Vec::new();
    for &f in families(q) {
        if f.is_series() {
            out.extend(window.clone().map(|m| AffObject::of(q, f, m)));
        } else {
            out.push(AffObject::of(q, f, 0));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffPairClass {
    NotExceptional,
    Orthogonal,
    HomOne,
    HomTwo,
}

impl AffPairClass {
    pub fn hom_total(self) -> Option<u64> {
        match self {
            AffPairClass::NotExceptional => None,
            AffPairClass::Orthogonal => Some(0),
            AffPairClass::HomOne => Some(1),
            AffPairClass::HomTwo => Some(2),
        }
    }
}

/// `(x^{m+dx}, y^{m+dy})` for every `m`; offsets of sporadic objects are ignored.
type Pattern = (Fam, i64, Fam, i64);

use Fam::*;

const HOM_TWO_Q1: [Pattern; 2] = [(A, 0, A, 1), (B, 0, B, 1)];
const HOM_TWO_Q2: [Pattern; 4] = [(A, 0, A, 1), (B, 0, B, 1), (C, 0, C, 1), (D, 0, D, 1)];

/// Hom-one pairs of `Q1`, grouped by the curve they span: the row with
/// index `m` spans `<a^m>^perp`, resp. `<b^m>^perp`.
const Q1_ROWS: [[Pattern; 3]; 2] = [
    [(Mp, 0, A, -1), (A, -1, B, 0), (B, 0, Mp, 0)],
    [(M, 0, B, -1), (B, -1, A, -1), (A, -1, M, 0)],
];

const ORTH_Q2: [Pattern; 12] = [
    (A, 0, B, 1),
    (B, 1, A, 0),
    (C, 0, D, 0),
    (D, 0, C, 0),
    (Fp, 0, Fm, 0),
    (Fm, 0, Fp, 0),
    (Gp, 0, Gm, 0),
    (Gm, 0, Gp, 0),
    (Fp, 0, Gp, 0),
    (Gp, 0, Fp, 0),
    (Fm, 0, Gm, 0),
    (Gm, 0, Fm, 0),
];

/// Hom-one pairs of `Q2`; the three pairs of a row span the same curve.
const Q2_ROWS: [[Pattern; 3]; 8] = [
    [(A, -1, C, 0), (C, 0, Gm, 0), (Gm, 0, A, -1)],
    [(C, 0, A, 0), (A, 0, Fp, 0), (Fp, 0, C, 0)],
    [(A, -1, D, 0), (D, 0, Gp, 0), (Gp, 0, A, -1)],
    [(D, 0, A, 0), (A, 0, Fm, 0), (Fm, 0, D, 0)],
    [(B, 0, C, 0), (C, 0, Fm, 0), (Fm, 0, B, 0)],
    [(C, -1, B, 0), (B, 0, Gp, 0), (Gp, 0, C, -1)],
    [(B, 0, D, 0), (D, 0, Fp, 0), (Fp, 0, B, 0)],
    [(D, -1, B, 0), (B, 0, Gm, 0), (Gm, 0, D, -1)],
];

/// Full exceptional collections extending the first pair of each `Q2` row.
const Q2_ROW_EXTENSIONS: [[(Fam, i64); 4]; 8] = [
    [(A, -1), (C, 0), (Fm, 0), (D, 0)],
    [(C, 0), (A, 0), (Fm, 0), (B, 1)],
    [(A, -1), (D, 0), (A, 0), (Fp, 0)],
    [(D, 0), (A, 0), (D, 1), (Fp, 0)],
    [(B, 0), (C, 0), (B, 1), (Gm, 0)],
    [(C, -1), (B, 0), (Gm, 0), (A, -1)],
    [(B, 0), (D, 0), (Gp, 0), (C, 0)],
    [(D, -1), (B, 0), (D, 0), (Gp, 0)],
];

const Q2_ROW_NAMES: [&str; 8] = ["cG-", "aF+", "dG+", "aF-", "cF-", "bG+", "dF+", "bG-"];

fn match_pattern(p: &Pattern, x: &AffObject, y: &AffObject) -> Option<i64> {
    let &(fx, dx, fy, dy) = p;
    if x.family != fx || y.family != fy {
        return None;
    }
    match (fx.is_series(), fy.is_series()) {
        (true, true) => (x.index - dx == y.index - dy).then_some(x.index - dx),
        (true, false) => Some(x.index - dx),
        (false, true) => Some(y.index - dy),
        (false, false) => Some(0),
    }
}

fn instantiate(q: AffQuiver, p: &Pattern, m: i64) -> (AffObject, AffObject) {
    (
        AffObject::of(q, p.0, m + p.1),
        AffObject::of(q, p.2, m + p.3),
    )
}

fn find<'a>(
    pats: impl IntoIterator<Item = &'a Pattern>,
    x: &AffObject,
    y: &AffObject,
) -> Option<i64> {
    pats.into_iter().find_map(|p| match_pattern(p, x, y))
}

pub fn aff_pair_class(x: &AffObject, y: &AffObject) -> Result<AffPairClass> {
    if x.quiver != y.quiver {
        return Err(Error::InvalidArgument(
            "objects from different quivers".into(),
        ));
    }
    if x == y {
        return Ok(AffPairClass::NotExceptional);
    }
    let (two, orth, rows): (&[Pattern], &[Pattern], &[[Pattern; 3]]) = match x.quiver {
        AffQuiver::Q1 => (&HOM_TWO_Q1, &[], &Q1_ROWS),
        AffQuiver::Q2 => (&HOM_TWO_Q2, &ORTH_Q2, &Q2_ROWS),
    };
    Ok(if find(two, x, y).is_some() {
        AffPairClass::HomTwo
    } else if find(orth, x, y).is_some() {
        AffPairClass::Orthogonal
    } else if find(rows.iter().flatten(), x, y).is_some() {
        AffPairClass::HomOne
    } else {
        AffPairClass::NotExceptional
    })
}

pub fn is_exceptional_pair(x: &AffObject, y: &AffObject) -> bool {
    aff_pair_class(x, y)
        .map(|c| c != AffPairClass::NotExceptional)
        .unwrap_or(false)
}

pub fn is_exceptional_collection(seq: &[AffObject]) -> bool {
    seq.iter()
        .enumerate()
        .all(|(i, x)| seq[i + 1..].iter().all(|y| is_exceptional_pair(x, y)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffGenerator {
    Serre,
    Theta,
    Zeta,
}

pub fn aff_act(g: AffGenerator, x: &AffObject) -> Result<AffObject> {
    let q = x.quiver;
    let m = x.index;
    let (f, i) = match (q, g) {
        (AffQuiver::Q1, AffGenerator::Serre) => match x.family {
            A => (B, m - 1),
            B => (A, m - 2),
            M => (Mp, 0),
            Mp => (M, 0),
            _ => unreachable!(),
        },
        (AffQuiver::Q1, AffGenerator::Zeta) => match x.family {
            A => (B, m),
            B => (A, m - 1),
            M => (Mp, 0),
            Mp => (M, 0),
            _ => unreachable!(),
        },
        (AffQuiver::Q1, AffGenerator::Theta) => {
            return Err(Error::Undefined("theta on Q1".into()));
        }
        (AffQuiver::Q2, AffGenerator::Serre) => match x.family {
            A => (B, m),
            B => (A, m - 2),
            C => (D, m - 1),
            D => (C, m - 1),
            Fm => (Gp, 0),
            Gm => (Fp, 0),
            Gp => (Fm, 0),
            Fp => (Gm, 0),
            _ => unreachable!(),
        },
        (AffQuiver::Q2, AffGenerator::Theta) => match x.family {
            A => (A, m),
            B => (B, m),
            C => (D, m),
            D => (C, m),
            Fp => (Fm, 0),
            Fm => (Fp, 0),
            Gp => (Gm, 0),
            Gm => (Gp, 0),
            _ => unreachable!(),
        },
        (AffQuiver::Q2, AffGenerator::Zeta) => match x.family {
            A => (D, m),
            B => (C, m - 1),
            C => (B, m),
            D => (A, m - 1),
            Fp => (Fp, 0),
            Gm => (Gm, 0),
            Gp => (Fm, 0),
            Fm => (Gp, 0),
            _ => unreachable!(),
        },
    };
    Ok(AffObject::of(q, f, i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Q2Family {
    Row(u8),
    AB,
    CD,
    Fpm,
    Gpm,
    FGp,
    FGm,
    BigA,
    BigB,
    BigC,
    BigD,
}

impl Q2Family {
    fn indexed(self) -> bool {
        matches!(self, Q2Family::Row(_) | Q2Family::AB | Q2Family::CD)
    }

    fn genus(self) -> i64 {
        match self {
            Q2Family::Row(_) => 0,
            Q2Family::BigA | Q2Family::BigB | Q2Family::BigC | Q2Family::BigD => 1,
            _ => -1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Q2Family::Row(r) => Q2_ROW_NAMES[r as usize],
            Q2Family::AB => "AB",
            Q2Family::CD => "CD",
            Q2Family::Fpm => "F+-",
            Q2Family::Gpm => "G+-",
            Q2Family::FGp => "FG+",
            Q2Family::FGm => "FG-",
            Q2Family::BigA => "A",
            Q2Family::BigB => "B",
            Q2Family::BigC => "C",
            Q2Family::BigD => "D",
        }
    }
}

/// A subcategory generated by an exceptional pair or triple.
///
/// `Perp(X)` is the right orthogonal `<X>^perp`: a curve in `Q1`, a triple in `Q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffSub {
    Perp(AffObject),
    Q2(Q2Family, i64),
}

impl AffSub {
    pub fn index(&self) -> Option<i64> {
        match self {
            AffSub::Perp(x) => x.family.is_series().then_some(x.index),
            AffSub::Q2(f, m) => f.indexed().then_some(*m),
        }
    }

    fn with_index(&self, m: i64) -> AffSub {
        match self {
            AffSub::Perp(x) => AffSub::Perp(AffObject::of(x.quiver, x.family, m)),
            AffSub::Q2(f, _) if f.indexed() => AffSub::Q2(*f, m),
            other => *other,
        }
    }

    fn family_key(&self) -> AffSub {
        self.with_index(0)
    }

    pub fn quiver(&self) -> AffQuiver {
        match self {
            AffSub::Perp(x) => x.quiver,
            AffSub::Q2(..) => AffQuiver::Q2,
        }
    }

    /// Genus of a curve, or `None` for a triple.
    pub fn genus(&self) -> Option<i64> {
        match self {
            AffSub::Perp(x) if x.quiver == AffQuiver::Q1 => {
                Some(if x.family.is_series() { 0 } else { 1 })
            }
            AffSub::Perp(_) => None,
            AffSub::Q2(f, _) => Some(f.genus()),
        }
    }

    /// An ordered exceptional collection generating the subcategory.
    pub fn generators(&self) -> Vec<AffObject> {
        let q2 = AffQuiver::Q2;
        let o = |f, m| AffObject::of(q2, f, m);
        match *self {
            AffSub::Perp(x) => perp_generators(&x),
            AffSub::Q2(Q2Family::Row(r), m) => {
                let (a, b) = instantiate(q2, &Q2_ROWS[r as usize][0], m);
                vec![a, b]
            }
            AffSub::Q2(Q2Family::AB, m) => vec![o(A, m), o(B, m + 1)],
            AffSub::Q2(Q2Family::CD, m) => vec![o(C, m), o(D, m)],
            AffSub::Q2(Q2Family::Fpm, _) => vec![o(Fp, 0), o(Fm, 0)],
            AffSub::Q2(Q2Family::Gpm, _) => vec![o(Gp, 0), o(Gm, 0)],
            AffSub::Q2(Q2Family::FGp, _) => vec![o(Fp, 0), o(Gp, 0)],
            AffSub::Q2(Q2Family::FGm, _) => vec![o(Fm, 0), o(Gm, 0)],
            AffSub::Q2(Q2Family::BigA, _) => vec![o(A, 0), o(A, 1)],
            AffSub::Q2(Q2Family::BigB, _) => vec![o(B, 0), o(B, 1)],
            AffSub::Q2(Q2Family::BigC, _) => vec![o(C, 0), o(C, 1)],
            AffSub::Q2(Q2Family::BigD, _) => vec![o(D, 0), o(D, 1)],
        }
    }

    /// A full exceptional collection containing the generators, and whether
    /// the subcategory is its head (`true`) or its tail.
    fn full_collection(&self) -> (Vec<AffObject>, bool) {
        let q2 = AffQuiver::Q2;
        let o = |f, m| AffObject::of(q2, f, m);
        match *self {
            AffSub::Perp(x) => {
                let mut g = perp_generators(&x);
                g.push(x);
                (g, true)
            }
            AffSub::Q2(Q2Family::Row(r), m) => (
                Q2_ROW_EXTENSIONS[r as usize]
                    .iter()
                    .map(|&(f, d)| o(f, m + d))
                    .collect(),
                true,
            ),
            AffSub::Q2(Q2Family::AB, m) => (vec![o(C, m), o(D, m), o(A, m), o(B, m + 1)], false),
            AffSub::Q2(Q2Family::CD, m) => (vec![o(C, m), o(D, m), o(A, m), o(B, m + 1)], true),
            AffSub::Q2(Q2Family::Fpm, _) => (vec![o(A, 0), o(A, 1), o(Fp, 0), o(Fm, 0)], false),
            AffSub::Q2(Q2Family::Gpm, _) => (vec![o(B, 0), o(B, 1), o(Gp, 0), o(Gm, 0)], false),
            AffSub::Q2(Q2Family::FGp, _) => (vec![o(D, 0), o(D, 1), o(Fp, 0), o(Gp, 0)], false),
            AffSub::Q2(Q2Family::FGm, _) => (vec![o(C, 0), o(C, 1), o(Gm, 0), o(Fm, 0)], false),
            AffSub::Q2(Q2Family::BigA, _) => (vec![o(A, 0), o(A, 1), o(Fp, 0), o(Fm, 0)], true),
            AffSub::Q2(Q2Family::BigB, _) => (vec![o(B, 0), o(B, 1), o(Gp, 0), o(Gm, 0)], true),
            AffSub::Q2(Q2Family::BigC, _) => (vec![o(C, 0), o(C, 1), o(Gm, 0), o(Fm, 0)], true),
            AffSub::Q2(Q2Family::BigD, _) => (vec![o(D, 0), o(D, 1), o(Fp, 0), o(Gp, 0)], true),
        }
    }

    /// Membership of an exceptional object, decided through the orthogonal
    /// complement inside a full exceptional collection.
    pub fn contains(&self, x: &AffObject) -> bool {
        let (full, head) = self.full_collection();
        let size = self.generators().len();
        if head {
            full[size..]
                .iter()
                .all(|t| t != x && is_exceptional_pair(x, t))
        } else {
            full[..full.len() - size]
                .iter()
                .all(|h| h != x && is_exceptional_pair(h, x))
        }
    }
}

impl fmt::Display for AffSub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffSub::Perp(x) => write!(f, "<{x}>^perp"),
            AffSub::Q2(fam, m) if fam.indexed() => write!(f, "{}^{}", fam.name(), m),
            AffSub::Q2(fam, _) => f.write_str(fam.name()),
        }
    }
}

/// Lex-least exceptional collection completing `x` to a full one, searched
/// among objects with index near that of `x`.
fn perp_generators(x: &AffObject) -> Vec<AffObject> {
    let rank = match x.quiver {
        AffQuiver::Q1 => 3,
        AffQuiver::Q2 => 4,
    };
    let near: Vec<AffObject> = objects_in_window(x.quiver, &(x.index - 2..=x.index + 2))
        .into_iter()
        .filter(|o| o != x && is_exceptional_pair(o, x))
        .collect();
    fn extend(near: &[AffObject], acc: &mut Vec<AffObject>, len: usize) -> bool {
        if acc.len() == len {
            return true;
        }
        for o in near {
            if acc.iter().all(|p| is_exceptional_pair(p, o)) {
                acc.push(*o);
                if extend(near, acc, len) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    assert!(extend(&near, &mut acc, rank - 1), "{x} has no complement");
    acc
}

/// The curve spanned by an exceptional pair.
pub fn curve_of_pair(x: &AffObject, y: &AffObject) -> Option<AffSub> {
    let class = aff_pair_class(x, y).ok()?;
    let q = x.quiver;
    match (q, class) {
        (_, AffPairClass::NotExceptional) => None,
        (AffQuiver::Q1, AffPairClass::HomTwo) => {
            let fam = if x.family == A { M } else { Mp };
            Some(AffSub::Perp(AffObject::of(q, fam, 0)))
        }
        (AffQuiver::Q1, AffPairClass::HomOne) => {
            let (row, m) = Q1_ROWS
                .iter()
                .enumerate()
                .find_map(|(r, row)| find(row, x, y).map(|m| (r, m)))?;
            let fam = if row == 0 { A } else { B };
            Some(AffSub::Perp(AffObject::of(q, fam, m)))
        }
        (AffQuiver::Q1, AffPairClass::Orthogonal) => None,
        (AffQuiver::Q2, AffPairClass::HomTwo) => Some(AffSub::Q2(
            match x.family {
                A => Q2Family::BigA,
                B => Q2Family::BigB,
                C => Q2Family::BigC,
                _ => Q2Family::BigD,
            },
            0,
        )),
        (AffQuiver::Q2, AffPairClass::Orthogonal) => {
            let (fx, fy) = (x.family.min(y.family), x.family.max(y.family));
            Some(match (fx, fy) {
                (A, B) => AffSub::Q2(Q2Family::AB, if x.family == A { x.index } else { y.index }),
                (C, D) => AffSub::Q2(Q2Family::CD, x.index),
                (Fp, Fm) => AffSub::Q2(Q2Family::Fpm, 0),
                (Gp, Gm) => AffSub::Q2(Q2Family::Gpm, 0),
                (Fp, Gp) => AffSub::Q2(Q2Family::FGp, 0),
                (Fm, Gm) => AffSub::Q2(Q2Family::FGm, 0),
                _ => return None,
            })
        }
        (AffQuiver::Q2, AffPairClass::HomOne) => Q2_ROWS
            .iter()
            .enumerate()
            .find_map(|(r, row)| find(row, x, y).map(|m| AffSub::Q2(Q2Family::Row(r as u8), m))),
    }
}

pub fn aff_act_sub(g: AffGenerator, s: &AffSub) -> Result<AffSub> {
    match s {
        AffSub::Perp(x) => Ok(AffSub::Perp(aff_act(g, x)?)),
        AffSub::Q2(..) => {
            let gens = s.generators();
            let (x, y) = (aff_act(g, &gens[0])?, aff_act(g, &gens[1])?);
            curve_of_pair(&x, &y)
                .ok_or_else(|| Error::Undefined(format!("image of {s} is not a listed curve")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffKind {
    GenusMinus1,
    Genus0,
    Genus1,
    TriplesA3,
    TriplesQ1,
}

impl FromStr for AffKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "genus-1" | "genusMinus1" => AffKind::GenusMinus1,
            "genus0" => AffKind::Genus0,
            "genus1" => AffKind::Genus1,
            "triples-A3" | "triples-a3" => AffKind::TriplesA3,
            "triples-Q1" | "triples-q1" => AffKind::TriplesQ1,
            _ => return Err(Error::InvalidArgument(format!("unknown affine kind {s}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffGroup {
    Id,
    Serre,
    Full,
}

impl AffGroup {
    pub fn generators(self, q: AffQuiver) -> Vec<AffGenerator> {
        match (self, q) {
            (AffGroup::Id, _) => vec![],
            (AffGroup::Serre, _) => vec![AffGenerator::Serre],
            (AffGroup::Full, AffQuiver::Q1) => vec![AffGenerator::Serre, AffGenerator::Zeta],
            (AffGroup::Full, AffQuiver::Q2) => {
                vec![AffGenerator::Serre, AffGenerator::Theta, AffGenerator::Zeta]
            }
        }
    }
}

/// One representative per family of the given kind, indexed families at index 0.
pub fn family_representatives(q: AffQuiver, kind: AffKind) -> Result<Vec<AffSub>> {
    let perp = |fams: &[Fam]| {
        fams.iter()
            .map(|&f| AffSub::Perp(AffObject::of(q, f, 0)))
            .collect()
    };
    let q2 = |fams: &[Q2Family]| fams.iter().map(|&f| AffSub::Q2(f, 0)).collect();
    Ok(match (q, kind) {
        (AffQuiver::Q1, AffKind::GenusMinus1) => vec![],
        (AffQuiver::Q1, AffKind::Genus0) => perp(&[A, B]),
        (AffQuiver::Q1, AffKind::Genus1) => perp(&[M, Mp]),
        (AffQuiver::Q1, _) => {
            return Err(Error::InvalidArgument(
                "triples are counted for Q2 only".into(),
            ));
        }
        (AffQuiver::Q2, AffKind::GenusMinus1) => q2(&[
            Q2Family::AB,
            Q2Family::CD,
            Q2Family::Fpm,
            Q2Family::Gpm,
            Q2Family::FGp,
            Q2Family::FGm,
        ]),
        (AffQuiver::Q2, AffKind::Genus0) => {
            (0..8).map(|r| AffSub::Q2(Q2Family::Row(r), 0)).collect()
        }
        (AffQuiver::Q2, AffKind::Genus1) => q2(&[
            Q2Family::BigA,
            Q2Family::BigB,
            Q2Family::BigC,
            Q2Family::BigD,
        ]),
        (AffQuiver::Q2, AffKind::TriplesA3) => perp(&[A, B, C, D]),
        (AffQuiver::Q2, AffKind::TriplesQ1) => perp(&[Fp, Fm, Gp, Gm]),
    })
}

/// Orbit count on a union of families `F x Z` (or single points) on which each
/// generator acts by `(F, m) -> (F', m + offset)`. Inside a connected
/// component the orbits are the cosets of the subgroup of `Z` generated by
/// the cycle weights.
pub fn aff_count(q: AffQuiver, kind: AffKind, group: AffGroup) -> Result<Count> {
    let reps = family_representatives(q, kind)?;
    let gens = group.generators(q);
    if gens.is_empty() {
        return Ok(if reps.iter().any(|r| r.index().is_some()) {
            Count::Infinite
        } else {
            Count::from(reps.len())
        });
    }
    let keys: Vec<AffSub> = reps.iter().map(|r| r.family_key()).collect();
    let pos = |k: &AffSub| keys.iter().position(|x| x == k);
    let mut edges = Vec::new();
    for (u, rep) in reps.iter().enumerate() {
        for &g in &gens {
            let img0 = aff_act_sub(g, rep)?;
            let v = pos(&img0.family_key())
                .ok_or_else(|| Error::Undefined(format!("{img0} leaves the family list")))?;
            let offset = match (rep.index(), img0.index()) {
                (Some(_), Some(i0)) => {
                    let img1 = aff_act_sub(g, &rep.with_index(1))?;
                    if img1.family_key() != img0.family_key() || img1.index() != Some(i0 + 1) {
                        return Err(Error::Undefined(format!(
                            "{g:?} is not a translation on {rep}"
                        )));
                    }
                    i0
                }
                (None, None) => 0,
                _ => {
                    return Err(Error::Undefined(format!(
                        "{g:?} mixes indexed and finite families"
                    )))
                }
            };
            edges.push((u, v, offset));
        }
    }
    let n = reps.len();
    let mut comp = vec![usize::MAX; n];
    let mut potential = vec![0i64; n];
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(u, v, w) in &edges {
        adj[u].push((v, w));
        adj[v].push((u, -w));
    }
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = ncomp;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &(v, w) in &adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = ncomp;
                    potential[v] = potential[u] + w;
                    stack.push(v);
                }
            }
        }
        ncomp += 1;
    }
    let mut gcds = vec![0i64; ncomp];
    for &(u, v, w) in &edges {
        let c = comp[u];
        gcds[c] = gcds[c].gcd(&(potential[u] + w - potential[v]));
    }
    let mut total: u64 = 0;
    for c in 0..ncomp {
        let indexed = (0..n).any(|u| comp[u] == c && reps[u].index().is_some());
        if !indexed {
            total += 1;
        } else if gcds[c] == 0 {
            return Ok(Count::Infinite);
        } else {
            total += gcds[c].unsigned_abs();
        }
    }
    Ok(Count::from(total))
}

/// Brute-force orbit count on a finite window, for generators that act by
/// translations. Orbits are taken modulo the translation lattice, so every
/// index is reduced into `0..period`.
pub fn aff_count_window(q: AffQuiver, kind: AffKind, group: AffGroup, period: i64) -> Result<u64> {
    let reps = family_representatives(q, kind)?;
    let reduce = |s: AffSub| match s.index() {
        Some(m) => s.with_index(m.rem_euclid(period)),
        None => s,
    };
    let mut items: Vec<AffSub> = Vec::new();
    for r in &reps {
        if r.index().is_some() {
            items.extend((0..period).map(|m| r.with_index(m)));
        } else {
            items.push(*r);
        }
    }
    let gens = group.generators(q);
    let mut parent: BTreeMap<AffSub, AffSub> = items.iter().map(|&s| (s, s)).collect();
    fn root(p: &mut BTreeMap<AffSub, AffSub>, s: AffSub) -> AffSub {
        let mut r = s;
        while p[&r] != r {
            r = p[&r];
        }
        p.insert(s, r);
        r
    }
    for &s in &items {
        for &g in &gens {
            let t = reduce(aff_act_sub(g, &s)?);
            let (a, b) = (root(&mut parent, s), root(&mut parent, t));
            if a != b {
                parent.insert(a, b);
            }
        }
    }
    let roots: BTreeSet<AffSub> = items.iter().map(|&s| root(&mut parent, s)).collect();
    Ok(roots.len() as u64)
}

/// The published table entries.
pub fn aff_table_value(q: AffQuiver, kind: AffKind, group: AffGroup) -> Option<Count> {
    use AffGroup as G;
    use AffKind as K;
    let v = |x: u64| Some(Count::from(x));
    match (q, kind, group) {
        (AffQuiver::Q1, K::GenusMinus1, _) => v(0),
        (AffQuiver::Q1, K::Genus0, G::Id) => Some(Count::Infinite),
        (AffQuiver::Q1, K::Genus0, G::Serre) => v(3),
        (AffQuiver::Q1, K::Genus0, G::Full) => v(1),
        (AffQuiver::Q1, K::Genus1, G::Id) => v(2),
        (AffQuiver::Q1, K::Genus1, _) => v(1),
        (AffQuiver::Q1, _, _) => None,
        (AffQuiver::Q2, K::GenusMinus1, G::Id) => Some(Count::Infinite),
        (AffQuiver::Q2, K::GenusMinus1, G::Serre) => v(4),
        (AffQuiver::Q2, K::GenusMinus1, G::Full) => v(2),
        (AffQuiver::Q2, K::Genus0, G::Id) => Some(Count::Infinite),
        (AffQuiver::Q2, K::Genus0, G::Serre) => v(8),
        (AffQuiver::Q2, K::Genus0, G::Full) => v(1),
        (AffQuiver::Q2, K::Genus1, G::Id) => v(4),
        (AffQuiver::Q2, K::Genus1, G::Serre) => v(2),
        (AffQuiver::Q2, K::Genus1, G::Full) => v(1),
        (AffQuiver::Q2, K::TriplesA3, G::Id) => Some(Count::Infinite),
        (AffQuiver::Q2, K::TriplesA3, G::Serre) => v(4),
        (AffQuiver::Q2, K::TriplesA3, G::Full) => v(1),
        (AffQuiver::Q2, K::TriplesQ1, G::Id) => v(4),
        (AffQuiver::Q2, K::TriplesQ1, G::Serre) => v(2),
        (AffQuiver::Q2, K::TriplesQ1, G::Full) => v(1),
    }
}

/// Curves of the given genus spanned by pairs of objects with index in `window`.
pub fn aff_enum_curves(q: AffQuiver, genus: i64, window: RangeInclusive<i64>) -> Vec<AffSub> {
    let objs = objects_in_window(q, &window);
    let mut out = BTreeSet::new();
    for x in &objs {
        for y in &objs {
            if let Some(c) = curve_of_pair(x, y) {
                if c.genus() == Some(genus) {
                    out.insert(c);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Exceptional objects of `s` with index in `window`.
pub fn points_in_window(s: &AffSub, window: &RangeInclusive<i64>) -> BTreeSet<AffObject> {
    objects_in_window(s.quiver(), window)
        .into_iter()
        .filter(|x| s.contains(x))
        .collect()
}

/// True iff no genus `l` curve exists. A genus `l` curve is spanned by a pair
/// with `l + 1` morphisms, and the rule tables stop at two.
pub fn aff_vanishing(q: AffQuiver, l: i64) -> Result<bool> {
    if l < -1 {
        return Err(Error::UnsupportedGenus(l));
    }
    let objs = objects_in_window(q, &(-3..=3));
    for x in &objs {
        for y in &objs {
            if aff_pair_class(x, y)?.hom_total() == Some((l + 1) as u64) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
