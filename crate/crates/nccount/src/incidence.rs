//! Derived points on genus-0 curves and the point/line configurations they form.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;

use crate::d4;
use crate::error::{Error, Result};
use crate::type_a::{self, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncCategory {
    A3,
    D4,
}

impl FromStr for IncCategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a3" => Ok(IncCategory::A3),
            "d4" => Ok(IncCategory::D4),
            _ => Err(Error::InvalidArgument(format!("no incidence data for {s}"))),
        }
    }
}

/// Exceptional objects of a finite category with their total hom table.
#[derive(Debug, Clone)]
pub struct PointSpace {
    names: Vec<String>,
    hom: Vec<Vec<u64>>,
}

pub type ObjSet = BTreeSet<usize>;

impl PointSpace {
    pub fn new(cat: IncCategory) -> Self {
        match cat {
            IncCategory::A3 => {
                let pts: Vec<Interval> = type_a::enum_points(2);
                PointSpace {
                    names: pts.iter().map(|p| p.to_string()).collect(),
                    hom: pts
                        .iter()
                        .map(|&x| pts.iter().map(|&y| type_a::hom_total(x, y, 2)).collect())
                        .collect(),
                }
            }
            IncCategory::D4 => PointSpace {
                names: d4::ALL.iter().map(|l| l.name().to_string()).collect(),
                hom: d4::ALL
                    .iter()
                    .map(|&x| d4::ALL.iter().map(|&y| d4::hom_total(x, y)).collect())
                    .collect(),
            },
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Accepts `s0,1` style names for `A_3` and the usual labels for `D_4`.
    pub fn object(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    fn is_pair(&self, x: usize, y: usize) -> bool {
        x != y && self.hom[y][x] == 0
    }

    /// Objects of the subcategory generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> ObjSet {
        let n = self.len();
        let right: Vec<usize> = (0..n)
            .filter(|&y| gens.iter().all(|&g| self.hom[g][y] == 0))
            .collect();
        (0..n)
            .filter(|&x| right.iter().all(|&y| self.hom[x][y] == 0))
            .collect()
    }

    pub fn curve_genus(&self, x: usize, y: usize) -> Option<i64> {
        self.is_pair(x, y).then(|| self.hom[x][y] as i64 - 1)
    }

    pub fn derived_points(&self, x: usize, y: usize) -> Result<ObjSet> {
        if self.curve_genus(x, y) != Some(0) {
            return Err(Error::NotGenusZero);
        }
        Ok(self.span(&[x, y]))
    }

    /// Genus-0 curves, each as its least generating pair and its objects.
    pub fn genus0_curves(&self) -> Vec<((usize, usize), ObjSet)> {
        let mut out: Vec<((usize, usize), ObjSet)> = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.curve_genus(x, y) == Some(0) {
                    let pts = self.span(&[x, y]);
                    if !out.iter().any(|(_, p)| *p == pts) {
                        out.push(((x, y), pts));
                    }
                }
            }
        }
        out
    }

    pub fn curve_id(&self, gens: (usize, usize)) -> String {
        format!("<{} {}>", self.names[gens.0], self.names[gens.1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Empty,
    Point(usize),
    Equal,
}

/// Intersection of two curves of genus at most 0, given by their objects.
pub fn intersect_curves(c1: &ObjSet, c2: &ObjSet) -> Result<Intersection> {
    for c in [c1, c2] {
        if !(2..=3).contains(&c.len()) {
            return Err(Error::InvalidArgument("curve of genus above 0".into()));
        }
    }
    if c1 == c2 {
        return Ok(Intersection::Equal);
    }
    let common: Vec<usize> = c1.intersection(c2).copied().collect();
    match common.as_slice() {
        [] => Ok(Intersection::Empty),
        [p] => Ok(Intersection::Point(*p)),
        _ => Err(Error::Undefined(
            "distinct curves share more than one point".into(),
        )),
    }
}

/// Members of the families `trivial`, `A_1`, `A_2` (genus-0 curves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sub {
    Trivial,
    Point(usize),
    Curve(ObjSet),
}

impl Sub {
    fn objects(&self) -> ObjSet {
        match self {
            Sub::Trivial => ObjSet::new(),
            Sub::Point(p) => ObjSet::from([*p]),
            Sub::Curve(c) => c.clone(),
        }
    }

    pub fn from_objects(space: &PointSpace, objs: ObjSet) -> Result<Sub> {
        match objs.len() {
            0 => Ok(Sub::Trivial),
            1 => Ok(Sub::Point(*objs.iter().next().expect("one element"))),
            3 if space.genus0_curves().iter().any(|(_, p)| *p == objs) => Ok(Sub::Curve(objs)),
            _ => Err(Error::InvalidArgument(
                "greatest lower bounds are defined for points and genus-0 curves only".into(),
            )),
        }
    }
}

/// The full subcategory on the common objects.
pub fn glb(space: &PointSpace, x: &Sub, y: &Sub) -> Result<Sub> {
    for s in [x, y] {
        Sub::from_objects(space, s.objects())?;
    }
    let common: ObjSet = x.objects().intersection(&y.objects()).copied().collect();
    Sub::from_objects(space, common)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    pub id: String,
    pub points: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceStructure {
    pub points: Vec<String>,
    pub lines: Vec<Line>,
}

impl IncidenceStructure {
    pub fn incidences(&self) -> usize {
        self.lines.iter().map(|l| l.points.len()).sum()
    }

    pub fn degree(&self, point: &str) -> usize {
        self.lines
            .iter()
            .filter(|l| l.points.iter().any(|p| p == point))
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("incidence structures serialize")
    }
}

pub fn incidence_structure(cat: IncCategory) -> IncidenceStructure {
    let space = PointSpace::new(cat);
    let lines = space
        .genus0_curves()
        .into_iter()
        .map(|(gens, pts)| Line {
            id: space.curve_id(gens),
            points: pts.iter().map(|&p| space.name(p).to_string()).collect(),
        })
        .collect();
    IncidenceStructure {
        points: space.names.clone(),
        lines,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(space: &PointSpace, s: &ObjSet) -> BTreeSet<String> {
        s.iter().map(|&i| space.name(i).to_string()).collect()
    }

    fn set(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn derived_point_examples() {
        let a = PointSpace::new(IncCategory::A3);
        let (x, y) = (a.object("s0,0").unwrap(), a.object("s1,1").unwrap());
        assert_eq!(
            names(&a, &a.derived_points(x, y).unwrap()),
            set(&["s0,0", "s1,1", "s0,1"])
        );
        let d = PointSpace::new(IncCategory::D4);
        let p = d
            .derived_points(d.object("s3o").unwrap(), d.object("delta").unwrap())
            .unwrap();
        assert_eq!(names(&d, &p), set(&["s3o", "delta", "s12"]));
        let p = d
            .derived_points(d.object("s1").unwrap(), d.object("so").unwrap())
            .unwrap();
        assert_eq!(names(&d, &p), set(&["s1", "so", "s1o"]));
        assert!(d
            .derived_points(d.object("s1").unwrap(), d.object("s2").unwrap())
            .is_err());
    }

    #[test]
    fn any_two_points_regenerate() {
        for cat in [IncCategory::A3, IncCategory::D4] {
            let space = PointSpace::new(cat);
            for (_, pts) in space.genus0_curves() {
                assert_eq!(pts.len(), 3);
                for &x in &pts {
                    for &y in &pts {
                        if space.curve_genus(x, y).is_some() {
                            assert_eq!(space.span(&[x, y]), pts);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn intersections() {
        let a = PointSpace::new(IncCategory::A3);
        let o = |n| a.object(n).unwrap();
        let c1 = a.span(&[o("s0,0"), o("s1,1")]);
        let c2 = a.span(&[o("s1,1"), o("s2,2")]);
        assert_eq!(
            intersect_curves(&c1, &c2).unwrap(),
            Intersection::Point(o("s1,1"))
        );
        assert_eq!(intersect_curves(&c1, &c1).unwrap(), Intersection::Equal);
        let d = PointSpace::new(IncCategory::D4);
        let o = |n| d.object(n).unwrap();
        let c1 = d.span(&[o("s1"), o("s2o")]);
        let c2 = d.span(&[o("s2"), o("s3o")]);
        assert_eq!(intersect_curves(&c1, &c2).unwrap(), Intersection::Empty);
    }

    #[test]
    fn lines_meet_at_most_once() {
        for cat in [IncCategory::A3, IncCategory::D4] {
            let space = PointSpace::new(cat);
            let curves = space.genus0_curves();
            for (_, a) in &curves {
                for (_, b) in &curves {
                    assert!(intersect_curves(a, b).is_ok());
                }
            }
        }
    }

    #[test]
    fn greatest_lower_bounds() {
        let a = PointSpace::new(IncCategory::A3);
        let o = |n| a.object(n).unwrap();
        let c1 = Sub::Curve(a.span(&[o("s0,0"), o("s1,1")]));
        let c2 = Sub::Curve(a.span(&[o("s1,1"), o("s2,2")]));
        let c3 = Sub::Curve(a.span(&[o("s0,0"), o("s1,2")]));
        assert_eq!(glb(&a, &c1, &c2).unwrap(), Sub::Point(o("s1,1")));
        assert_eq!(glb(&a, &c1, &c1).unwrap(), c1);
        assert_eq!(glb(&a, &c2, &c3).unwrap(), Sub::Point(o("s1,2")));
        assert_eq!(
            glb(&a, &Sub::Point(o("s0,1")), &c1).unwrap(),
            Sub::Point(o("s0,1"))
        );
        let orth = Sub::Curve(a.span(&[o("s0,0"), o("s2,2")]));
        assert!(glb(&a, &orth, &c1).is_err());
        let d = PointSpace::new(IncCategory::D4);
        let o = |n| d.object(n).unwrap();
        let e1 = Sub::Curve(d.span(&[o("s1"), o("s2o")]));
        let e2 = Sub::Curve(d.span(&[o("s2"), o("s3o")]));
        assert_eq!(glb(&d, &e1, &e2).unwrap(), Sub::Trivial);
    }

    #[test]
    fn a3_structure() {
        let s = incidence_structure(IncCategory::A3);
        assert_eq!((s.points.len(), s.lines.len(), s.incidences()), (6, 4, 12));
        assert!(s.points.iter().all(|p| s.degree(p) == 2));
    }

    #[test]
    fn d4_structure() {
        let s = incidence_structure(IncCategory::D4);
        assert_eq!(
            (s.points.len(), s.lines.len(), s.incidences()),
            (12, 15, 45)
        );
        let three: BTreeSet<String> = s
            .points
            .iter()
            .filter(|p| s.degree(p) == 3)
            .cloned()
            .collect();
        assert_eq!(three, set(&["delta", "so", "s123"]));
        assert!(s
            .points
            .iter()
            .all(|p| s.degree(p) == 3 || s.degree(p) == 4));
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v["lines"].as_array().unwrap().len(), 15);
    }
}
