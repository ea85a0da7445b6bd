//! Numerical invariants of diagrams: Newton numbers, indicator values and
//! relative types against monomial weights.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::diagram::{Diagram, Point};
use crate::error::{Error, Result};
use crate::geometry::{determinant, normal_vector, normalized_volume, triangulate};
use crate::polynomial::{SingularityInput, Weight};
use crate::rational::{dot, format_rational, Rational};

/// `n! Vol(R^n_+ \ G)`, infinite when the complement is unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NewtonNumber {
    Finite(Rational),
    Infinite,
}

impl NewtonNumber {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            NewtonNumber::Finite(v) => Some(v),
            NewtonNumber::Infinite => None,
        }
    }
}

impl fmt::Display for NewtonNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NewtonNumber::Finite(v) => write!(f, "{}", format_rational(v)),
            NewtonNumber::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for NewtonNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The diagram `{x >= 0 : <x, a> >= 1}`, with vertices `e_k / a_k`.
pub fn weighted_simplex(a: &Weight) -> Diagram {
    intercept_simplex(&a.reciprocal())
}

/// The simplex diagram with vertices `b_k e_k`.
pub fn intercept_simplex(b: &Weight) -> Diagram {
    let n = b.dim();
    let points = (0..n).map(|k| {
        let coords = (0..n).map(|i| if i == k { b.coords()[k].clone() } else { Rational::zero() }).collect();
        Point::new(coords).expect("positive intercepts")
    });
    Diagram::canonicalize(n, points).expect("valid simplex")
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// Largest axis intercept `M`; the complement of `g` lies in `[0, M]^n`.
pub fn max_axis_intercept(g: &Diagram) -> Option<Rational> {
    if !g.touches_all_axes() {
        return None;
    }
    let n = g.dim();
    (0..n)
        .map(|k| {
            g.generators()
                .iter()
                .filter(|p| p.coords().iter().enumerate().all(|(i, c)| i == k || c.is_zero()))
                .map(|p| p.coords()[k].clone())
                .min()
                .expect("touches every axis")
        })
        .max()
}

/// Compact facets: hyperplanes through `n` affinely independent vertices
/// with a strictly positive normal that supports every vertex.
fn compact_facets(g: &Diagram) -> Vec<Vec<usize>> {
    let n = g.dim();
    let v: Vec<&[Rational]> = g.generators().iter().map(Point::coords).collect();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for subset in (0..v.len()).combinations(n) {
        let base = v[subset[0]];
        let diffs: Vec<Vec<Rational>> =
            subset[1..].iter().map(|&i| v[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let mut w = normal_vector(&diffs, n);
        if w.iter().all(Signed::is_negative) {
            w.iter_mut().for_each(|x| *x = -x.clone());
        }
        if !w.iter().all(Signed::is_positive) {
            continue;
        }
        let h = dot(&w, base);
        if v.iter().any(|p| dot(&w, p) < h) {
            continue;
        }
        let on: Vec<usize> = (0..v.len()).filter(|&i| dot(&w, v[i]) == h).collect();
        if !facets.contains(&on) {
            facets.push(on);
        }
    }
    facets
}

/// Newton number `n! Vol(R^n_+ \ g)`: the complement is the union of cones
/// from the origin over the compact facets, each triangulated exactly.
pub fn newton_number(g: &Diagram) -> NewtonNumber {
    if !g.touches_all_axes() {
        return NewtonNumber::Infinite;
    }
    if g.generators().iter().any(Point::is_origin) {
        return NewtonNumber::Finite(Rational::zero());
    }
    let mut total = Rational::zero();
    for facet in compact_facets(g) {
        let pts: Vec<Vec<Rational>> = facet.iter().map(|&i| g.generators()[i].coords().to_vec()).collect();
        for simplex in triangulate(&pts) {
            let rows: Vec<Vec<Rational>> = simplex.iter().map(|&i| pts[i].clone()).collect();
            total += determinant(&rows).abs();
        }
    }
    NewtonNumber::Finite(total)
}

/// `Vol([0, side]^n ∩ g)`, computed from the corner points
/// `v + sum_{k in S} (side - v_k) e_k` of the clipped vertex boxes.
/// `side` must dominate every vertex coordinate.
pub fn clipped_volume(g: &Diagram, side: &Rational) -> Result<Rational> {
    let n = g.dim();
    if g.generators().iter().any(|p| p.coords().iter().any(|c| c > side)) {
        return Err(Error::InvariantViolation(format!(
            "box side {} does not contain every vertex",
            format_rational(side)
        )));
    }
    let mut corners = Vec::new();
    for p in g.generators() {
        for mask in 0..(1u32 << n) {
            let c: Vec<Rational> =
                (0..n).map(|k| if mask & (1 << k) != 0 { side.clone() } else { p.coords()[k].clone() }).collect();
            corners.push(c);
        }
    }
    corners.sort();
    corners.dedup();
    let full_dim = crate::geometry::pivot_columns(
        &corners[1..].iter().map(|c| c.iter().zip(&corners[0]).map(|(a, b)| a - b).collect()).collect::<Vec<_>>(),
    )
    .len()
        == n;
    if !full_dim {
        return Ok(Rational::zero());
    }
    Ok(normalized_volume(&corners) / factorial(n))
}

/// Shoelace area of the polygon `(0,0)`, vertices by increasing `x`, `(0,0)`.
pub fn covolume_2d_oracle(g: &Diagram) -> Result<Rational> {
    if g.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: g.dim() });
    }
    if !g.touches_all_axes() {
        return Err(Error::Unbounded);
    }
    let mut poly: Vec<&[Rational]> = g.generators().iter().map(Point::coords).collect();
    poly.sort_by(|a, b| a[0].cmp(&b[0]));
    let origin = [Rational::zero(), Rational::zero()];
    let mut ring = vec![&origin[..]];
    // Counter-clockwise: along the x axis first, back up the y axis.
    ring.extend(poly.into_iter().rev());
    let twice: Rational = (0..ring.len())
        .map(|i| {
            let (p, q) = (ring[i], ring[(i + 1) % ring.len()]);
            &p[0] * &q[1] - &q[0] * &p[1]
        })
        .sum();
    Ok(twice.abs() / Rational::from_integer(2.into()))
}

/// Relative type against the monomial weight `max_k log|z_k| / a_k`, which
/// is the directional Lelong number of the input.
pub fn relative_type_monomial(u: &SingularityInput, a: &Weight) -> Result<Rational> {
    u.diagram()?.lelong_directional(a.coords())
}

/// The convex image of the indicator at `|z_k| = e^{t_k}`.
pub fn indicator_eval(g: &Diagram, t: &[Rational]) -> Result<Rational> {
    g.support_value(t)
}
