//! Complete convex sets `conv(generators) + R^n_+` in the nonnegative orthant.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, Relation};
use crate::rational::{dot, format_rational, is_integer, Rational, RationalRepr};

/// A point of the closed nonnegative orthant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Point> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some((index, value)) = coords.iter().enumerate().find(|(_, c)| c.is_negative()) {
            return Err(Error::NegativeCoordinate { index, value: format_rational(value) });
        }
        Ok(Point(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Point> {
        Point::new(coords.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn origin(dim: usize) -> Point {
        Point(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_lattice(&self) -> bool {
        self.0.iter().all(is_integer)
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn scaled(&self, c: &Rational) -> Point {
        Point(self.0.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `A = c*B + x` with `c > 0` and `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomothetyWitness {
    pub c: Rational,
    pub x: Point,
}

/// An indicator diagram, stored by its vertices in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    dim: usize,
    generators: Vec<Point>,
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Exact LP test for `p in conv(others) + R^n_+`.
fn in_hull_plus_orthant(p: &[Rational], others: &[&Point]) -> bool {
    if others.is_empty() {
        return false;
    }
    if others.iter().any(|q| q.coords().iter().zip(p).all(|(a, b)| a <= b)) {
        return true;
    }
    // lambda >= 0, sum lambda = 1, sum lambda_j q_j <= p
    let mut lp = LinearProgram::new(others.len());
    lp.add(vec![Rational::one(); others.len()], Relation::Eq, Rational::one());
    for (k, pk) in p.iter().enumerate() {
        let row = others.iter().map(|q| q.coords()[k].clone()).collect();
        lp.add(row, Relation::Le, pk.clone());
    }
    lp.is_feasible()
}

fn cross2(o: &Point, a: &Point, b: &Point) -> Rational {
    let (o, a, b) = (o.coords(), a.coords(), b.coords());
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Vertices of `conv(points) + R^n_+` for a set of distinct, mutually
/// non-dominating points.
fn vertices_of(dim: usize, points: Vec<Point>) -> Vec<Point> {
    if points.len() <= 2 {
        return points;
    }
    if dim == 2 {
        // Pareto points sorted by x have strictly decreasing y; the vertices
        // form the lower convex chain.
        let mut chain: Vec<Point> = Vec::with_capacity(points.len());
        for p in points {
            while chain.len() >= 2 && cross2(&chain[chain.len() - 2], &chain[chain.len() - 1], &p) <= Rational::zero() {
                chain.pop();
            }
            chain.push(p);
        }
        return chain;
    }
    // Unique minimizers of a positive weight are vertices; everything else
    // goes through the LP.
    let mut known = vec![false; points.len()];
    for k in 0..=dim {
        let w: Vec<Rational> =
            (0..dim).map(|i| if i + 1 == k { Rational::from_integer(3.into()) } else { Rational::one() }).collect();
        let values: Vec<Rational> = points.iter().map(|p| dot(&w, p.coords())).collect();
        let min = values.iter().min().cloned().expect("nonempty");
        let hits: Vec<usize> = (0..points.len()).filter(|&i| values[i] == min).collect();
        if hits.len() == 1 {
            known[hits[0]] = true;
        }
    }
    (0..points.len())
        .filter(|&i| {
            known[i] || {
                let others: Vec<&Point> = points.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
                !in_hull_plus_orthant(points[i].coords(), &others)
            }
        })
        .map(|i| points[i].clone())
        .collect()
}

impl Diagram {
    /// The minimal generator set of `conv(raw_points) + R^n_+`.
    pub fn canonicalize(dim: usize, raw_points: impl IntoIterator<Item = Point>) -> Result<Diagram> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for p in raw_points {
            check_dim(dim, p.dim())?;
            set.insert(p);
        }
        if set.is_empty() {
            return Err(Error::EmptyInput);
        }
        let all: Vec<Point> = set.into_iter().collect();
        let pareto: Vec<Point> =
            all.iter().filter(|p| !all.iter().any(|q| q != *p && q.dominated_by(p))).cloned().collect();
        let mut generators = vertices_of(dim, pareto);
        generators.sort();
        Ok(Diagram { dim, generators })
    }

    /// Builds a diagram from integer coordinates; handy in tests and examples.
    pub fn from_ints(points: &[&[i64]]) -> Result<Diagram> {
        let pts = points.iter().map(|p| Point::from_ints(p)).collect::<Result<Vec<_>>>()?;
        let dim = pts.first().map(Point::dim).ok_or(Error::EmptyInput)?;
        Diagram::canonicalize(dim, pts)
    }

    /// The full orthant `R^n_+`, i.e. the diagram of the zero singularity.
    pub fn orthant(dim: usize) -> Diagram {
        Diagram { dim, generators: vec![Point::origin(dim)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn is_lattice(&self) -> bool {
        self.generators.iter().all(Point::is_lattice)
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        check_dim(self.dim, p.dim())?;
        let gens: Vec<&Point> = self.generators.iter().collect();
        Ok(in_hull_plus_orthant(p.coords(), &gens))
    }

    /// `sup { <t, a> : a in self }` for `t <= 0`.
    pub fn support_value(&self, t: &[Rational]) -> Result<Rational> {
        check_dim(self.dim, t.len())?;
        if let Some((index, value)) = t.iter().enumerate().find(|(_, c)| c.is_positive()) {
            return Err(Error::PositiveDirection { index, value: format_rational(value) });
        }
        Ok(self.generators.iter().map(|g| dot(t, g.coords())).max().expect("nonempty"))
    }

    /// `min <a, g>` over generators; `a` must be strictly positive.
    pub fn lelong_directional(&self, a: &[Rational]) -> Result<Rational> {
        check_dim(self.dim, a.len())?;
        if let Some((index, value)) = a.iter().enumerate().find(|(_, c)| !c.is_positive()) {
            return Err(Error::NonpositiveWeight { index, value: format_rational(value) });
        }
        let neg: Vec<Rational> = a.iter().map(|x| -x).collect();
        Ok(-self.support_value(&neg)?)
    }

    pub fn minkowski_sum(&self, other: &Diagram) -> Result<Diagram> {
        check_dim(self.dim, other.dim)?;
        let sums = self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| a.add(b)));
        Diagram::canonicalize(self.dim, sums)
    }

    pub fn scale(&self, c: &Rational) -> Result<Diagram> {
        if !c.is_positive() {
            return Err(Error::NonpositiveScale(format_rational(c)));
        }
        // Positive scaling preserves both vertex status and lexicographic order.
        Ok(Diagram { dim: self.dim, generators: self.generators.iter().map(|g| g.scaled(c)).collect() })
    }

    pub fn translate(&self, x: &Point) -> Result<Diagram> {
        check_dim(self.dim, x.dim())?;
        Ok(Diagram { dim: self.dim, generators: self.generators.iter().map(|g| g.add(x)).collect() })
    }

    /// Returns `(c, x)` with `self = c*other + x`, `c > 0`, `x >= 0`, if any.
    pub fn is_homothetic_to(&self, other: &Diagram) -> Result<Option<HomothetyWitness>> {
        check_dim(self.dim, other.dim)?;
        let (a, b) = (&self.generators, &other.generators);
        if a.len() != b.len() {
            return Ok(None);
        }
        if a.len() == 1 {
            let (a, b) = (a[0].coords(), b[0].coords());
            // Largest admissible c is min a_k / b_k over b_k > 0.
            let c = a
                .iter()
                .zip(b)
                .filter(|(_, bk)| bk.is_positive())
                .map(|(ak, bk)| ak / bk)
                .min()
                .unwrap_or_else(Rational::one);
            if !c.is_positive() {
                return Ok(None);
            }
            let x = a.iter().zip(b).map(|(ak, bk)| ak - &c * bk).collect();
            return Ok(Some(HomothetyWitness { c, x: Point(x) }));
        }
        // Positive homotheties preserve lexicographic order, so vertices pair up in order.
        let (a0, b0) = (a[0].coords(), b[0].coords());
        let (a1, b1) = (a[1].coords(), b[1].coords());
        let k = (0..self.dim).find(|&k| b1[k] != b0[k]).expect("distinct vertices");
        let c = (&a1[k] - &a0[k]) / (&b1[k] - &b0[k]);
        if !c.is_positive() {
            return Ok(None);
        }
        let x: Vec<Rational> = a0.iter().zip(b0).map(|(ak, bk)| ak - &c * bk).collect();
        if x.iter().any(Signed::is_negative) {
            return Ok(None);
        }
        let consistent = a
            .iter()
            .zip(b)
            .all(|(ai, bi)| ai.coords().iter().zip(bi.coords()).zip(&x).all(|((ak, bk), xk)| *ak == &c * bk + xk));
        Ok(consistent.then_some(HomothetyWitness { c, x: Point(x) }))
    }

    /// Canonical hull of the union of both generator sets.
    pub fn hull_union(&self, other: &Diagram) -> Result<Diagram> {
        check_dim(self.dim, other.dim)?;
        Diagram::canonicalize(self.dim, self.generators.iter().chain(&other.generators).cloned())
    }

    /// True iff `R^n_+ \ self` is bounded.
    pub fn touches_all_axes(&self) -> bool {
        (0..self.dim)
            .all(|k| self.generators.iter().any(|g| g.coords().iter().enumerate().all(|(i, c)| i == k || c.is_zero())))
    }

    /// Smallest coordinate of each axis over all generators.
    pub fn floor(&self) -> Point {
        let coords = (0..self.dim)
            .map(|k| self.generators.iter().map(|g| g.coords()[k].clone()).min().expect("nonempty"))
            .collect();
        Point(coords)
    }

    /// Vertices and compact edges of the diagram.
    pub fn compact_graph(&self) -> CompactGraph {
        let m = self.generators.len();
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.is_compact_edge(i, j) {
                    let dir = self.generators[j]
                        .coords()
                        .iter()
                        .zip(self.generators[i].coords())
                        .map(|(b, a)| b - a)
                        .collect();
                    edges.push(Edge { from: i, to: j, direction: dir });
                }
            }
        }
        CompactGraph { vertices: self.generators.clone(), edges }
    }

    /// `[v_i, v_j]` is a face iff some strictly positive weight is minimized
    /// exactly on `{v_i, v_j}`. Strict inequalities are homogeneous, so they
    /// are scaled to `>= 1`.
    fn is_compact_edge(&self, i: usize, j: usize) -> bool {
        let n = self.dim;
        let v = &self.generators;
        let mut lp = LinearProgram::new(n);
        for k in 0..n {
            lp.add_sparse(&[(k, Rational::one())], Relation::Ge, Rational::one());
        }
        let diff =
            |a: &Point, b: &Point| -> Vec<Rational> { a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect() };
        lp.add(diff(&v[i], &v[j]), Relation::Eq, Rational::zero());
        for (k, vk) in v.iter().enumerate() {
            if k != i && k != j {
                lp.add(diff(vk, &v[i]), Relation::Ge, Rational::one());
            }
        }
        lp.is_feasible()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// A compact edge `[vertices[from], vertices[to]]`, `direction = to - from`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub direction: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactGraph {
    pub vertices: Vec<Point>,
    pub edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr<G> {
    dim: usize,
    generators: Vec<Vec<G>>,
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr {
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.coords().iter().map(format_rational).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DiagramRepr::<RationalRepr>::deserialize(d)?;
        let points = repr
            .generators
            .into_iter()
            .map(|g| Point::new(g.into_iter().map(|r| r.0).collect()))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Diagram::canonicalize(repr.dim, points).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn d(points: &[&[i64]]) -> Diagram {
        Diagram::from_ints(points).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(d(&[&[3, 0], &[2, 1], &[2, 0], &[1, 1], &[0, 2]]), d(&[&[2, 0], &[0, 2]]));
        assert_eq!(d(&[&[1, 2]]).generators().len(), 1);
        assert_eq!(
            d(&[&[3, 0], &[2, 1], &[1, 1], &[0, 2]]).generators(),
            &[
                Point::from_ints(&[0, 2]).unwrap(),
                Point::from_ints(&[1, 1]).unwrap(),
                Point::from_ints(&[3, 0]).unwrap()
            ]
        );
    }

    #[test]
    fn canonicalize_errors() {
        assert_eq!(Diagram::canonicalize(2, vec![]), Err(Error::EmptyInput));
        assert!(matches!(Point::from_ints(&[1, -1]), Err(Error::NegativeCoordinate { index: 1, .. })));
        let p = Point::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(Diagram::canonicalize(2, vec![p]), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn canonicalize_three_dims_drops_interior_points() {
        let g = d(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0], &[1, 1, 1], &[2, 2, 2]]);
        assert_eq!(g, d(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]));
        // (1,1,0) is a vertex once (0,2,0) is gone.
        let g = d(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 2], &[1, 1, 0]]);
        assert_eq!(g.generators().len(), 4);
    }

    #[test]
    fn contains_examples() {
        let g = d(&[&[2, 0], &[0, 2]]);
        assert!(g.contains(&Point::from_ints(&[1, 1]).unwrap()).unwrap());
        assert!(g.contains(&Point::from_ints(&[5, 7]).unwrap()).unwrap());
        assert!(!g.contains(&Point::from_ints(&[1, 0]).unwrap()).unwrap());
        assert!(g.contains(&Point::from_ints(&[1, 1, 1]).unwrap()).is_err());
    }

    #[test]
    fn support_and_lelong() {
        let g = d(&[&[2, 0], &[0, 2]]);
        assert_eq!(g.support_value(&ints(&[-1, -1])).unwrap(), int(-2));
        let h = d(&[&[3, 0], &[1, 1], &[0, 2]]);
        assert_eq!(h.support_value(&ints(&[-1, -2])).unwrap(), int(-3));
        assert_eq!(h.support_value(&ints(&[0, 0])).unwrap(), int(0));
        assert!(matches!(h.support_value(&ints(&[1, -1])), Err(Error::PositiveDirection { index: 0, .. })));
        assert_eq!(g.lelong_directional(&ints(&[1, 1])).unwrap(), int(2));
        assert_eq!(h.lelong_directional(&ints(&[1, 1])).unwrap(), int(2));
        assert_eq!(Diagram::orthant(3).lelong_directional(&ints(&[5, 1, 2])).unwrap(), int(0));
        assert!(matches!(h.lelong_directional(&ints(&[1, 0])), Err(Error::NonpositiveWeight { index: 1, .. })));
    }

    #[test]
    fn minkowski_examples() {
        let a = d(&[&[1, 0], &[0, 1]]);
        let b = d(&[&[2, 0], &[0, 1]]);
        assert_eq!(a.minkowski_sum(&b).unwrap(), d(&[&[3, 0], &[1, 1], &[0, 2]]));
        assert_eq!(a.minkowski_sum(&Diagram::orthant(2)).unwrap(), a);
        let g = d(&[&[2, 0], &[0, 2]]);
        assert_eq!(g.minkowski_sum(&g).unwrap(), d(&[&[4, 0], &[0, 4]]));
        assert!(g.minkowski_sum(&Diagram::orthant(3)).is_err());
    }

    #[test]
    fn scale_and_translate() {
        let a = d(&[&[1, 0], &[0, 1]]);
        assert_eq!(a.scale(&int(2)).unwrap(), d(&[&[2, 0], &[0, 2]]));
        let h = d(&[&[3, 0], &[1, 1], &[0, 2]]);
        assert_eq!(h.scale(&int(1)).unwrap(), h);
        let third = h.scale(&frac(1, 3)).unwrap();
        let expected = Diagram::canonicalize(
            2,
            vec![
                Point::new(vec![int(1), int(0)]).unwrap(),
                Point::new(vec![frac(1, 3), frac(1, 3)]).unwrap(),
                Point::new(vec![int(0), frac(2, 3)]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(third, expected);
        assert!(matches!(h.scale(&int(0)), Err(Error::NonpositiveScale(_))));
        assert_eq!(a.translate(&Point::from_ints(&[1, 1]).unwrap()).unwrap(), d(&[&[2, 1], &[1, 2]]));
        assert_eq!(a.translate(&Point::origin(2)).unwrap(), a);
        assert_eq!(Diagram::orthant(2).translate(&Point::from_ints(&[2, 3]).unwrap()).unwrap(), d(&[&[2, 3]]));
    }

    #[test]
    fn homothety_examples() {
        let unit = d(&[&[1, 0], &[0, 1]]);
        let w = d(&[&[2, 0], &[0, 2]]).is_homothetic_to(&unit).unwrap().unwrap();
        assert_eq!((w.c, w.x), (int(2), Point::origin(2)));
        let shifted = d(&[&[2, 1], &[1, 2]]);
        let w = shifted.is_homothetic_to(&unit).unwrap().unwrap();
        assert_eq!((w.c, w.x), (int(1), Point::from_ints(&[1, 1]).unwrap()));
        assert_eq!(unit.is_homothetic_to(&shifted).unwrap(), None);
        assert_eq!(d(&[&[3, 0], &[1, 1], &[0, 2]]).is_homothetic_to(&unit).unwrap(), None);
        let w = shifted.is_homothetic_to(&shifted).unwrap().unwrap();
        assert_eq!((w.c, w.x), (int(1), Point::origin(2)));
    }

    #[test]
    fn homothety_single_vertex() {
        let one_one = d(&[&[1, 1]]);
        let e1 = d(&[&[1, 0]]);
        assert_eq!(e1.is_homothetic_to(&one_one).unwrap(), None);
        let w = one_one.is_homothetic_to(&e1).unwrap().unwrap();
        assert_eq!((w.c, w.x), (int(1), Point::from_ints(&[0, 1]).unwrap()));
        let w = e1.is_homothetic_to(&Diagram::orthant(2)).unwrap().unwrap();
        assert_eq!((w.c, w.x), (int(1), Point::from_ints(&[1, 0]).unwrap()));
    }

    #[test]
    fn hull_union_examples() {
        assert_eq!(d(&[&[2, 0]]).hull_union(&d(&[&[0, 2]])).unwrap(), d(&[&[2, 0], &[0, 2]]));
        let g = d(&[&[3, 0], &[1, 1], &[0, 2]]);
        assert_eq!(g.hull_union(&g).unwrap(), g);
        assert_eq!(d(&[&[1, 0], &[0, 1]]).hull_union(&d(&[&[2, 0], &[0, 1]])).unwrap(), d(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn compact_graph_examples() {
        let g = d(&[&[3, 0], &[1, 1], &[0, 2]]).compact_graph();
        let pairs: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.from, e.to)).collect();
        // vertices are ordered (0,2), (1,1), (3,0)
        assert_eq!(pairs, vec![(0, 1), (1, 2)]);
        assert_eq!(g.edges[1].direction, ints(&[2, -1]));
        assert_eq!(d(&[&[2, 0], &[0, 2]]).compact_graph().edges.len(), 1);
        assert!(d(&[&[1, 1]]).compact_graph().edges.is_empty());
    }

    #[test]
    fn compact_graph_of_simplex_and_flat_pair() {
        // Standard simplex in 3-D: all three edges are compact.
        assert_eq!(d(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).compact_graph().edges.len(), 3);
        // Two vertices without a compact facet still span a compact edge.
        assert_eq!(d(&[&[1, 0, 0], &[0, 1, 0]]).compact_graph().edges.len(), 1);
    }

    #[test]
    fn axes() {
        assert!(d(&[&[2, 0], &[0, 2]]).touches_all_axes());
        assert!(!d(&[&[1, 1]]).touches_all_axes());
        assert!(d(&[&[3, 0], &[1, 1], &[0, 2]]).touches_all_axes());
    }

    #[test]
    fn json_roundtrip_is_canonical() {
        let g = Diagram::canonicalize(
            2,
            vec![Point::new(vec![frac(1, 2), int(0)]).unwrap(), Point::new(vec![int(0), frac(4, 6)]).unwrap()],
        )
        .unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"dim":2,"generators":[["0","2/3"],["1/2","0"]]}"#);
        let back: Diagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let loose: Diagram = serde_json::from_str(r#"{"dim":2,"generators":[[3,0],["1","1"],[0,2],[4,4]]}"#).unwrap();
        assert_eq!(loose, d(&[&[3, 0], &[1, 1], &[0, 2]]));
        assert!(serde_json::from_str::<Diagram>(r#"{"dim":2,"generators":[["-1","0"]]}"#).is_err());
    }
}
