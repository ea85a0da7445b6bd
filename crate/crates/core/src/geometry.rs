//! Exact linear algebra, facet enumeration and fan triangulation.
//!
//! Everything here is brute force over subsets of points, which is adequate
//! at the sizes this crate targets (a few dozen points, n <= 4).

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::rational::{dot, Rational};

/// Determinant by Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Column indices of a row-echelon basis of the span of `vectors`.
#[allow(clippy::needless_range_loop)]
pub fn pivot_columns(vectors: &[Vec<Rational>]) -> Vec<usize> {
    let mut a = vectors.to_vec();
    let width = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(p, row);
        let pivot = a[row][col].clone();
        for r in row + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..width {
                let delta = &f * &a[row][c];
                a[r][c] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// A vector orthogonal to `d - 1` vectors in `R^d` via cofactor expansion;
/// zero iff the vectors are linearly dependent.
pub fn normal_vector(vectors: &[Vec<Rational>], d: usize) -> Vec<Rational> {
    debug_assert_eq!(vectors.len() + 1, d);
    (0..d)
        .map(|k| {
            let minor: Vec<Vec<Rational>> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, x)| x.clone()).collect())
                .collect();
            let m = determinant(&minor);
            if k % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A facet of a full-dimensional point configuration: the indices of the
/// points on it, with an inward normal `w` and offset `h` (`<w, p> >= h`).
#[derive(Debug, Clone)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub points: Vec<usize>,
}

/// Facets of `conv(points)` for points spanning `R^d`.
pub fn facets_full_dim(points: &[Vec<Rational>]) -> Vec<Facet> {
    let d = points[0].len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for subset in (0..points.len()).combinations(d) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<Rational>> = subset[1..].iter().map(|&i| sub(&points[i], base)).collect();
        let mut w = normal_vector(&diffs, d);
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        let mut h = dot(&w, base);
        let sides: Vec<Rational> = points.iter().map(|p| dot(&w, p) - &h).collect();
        let below = sides.iter().any(Signed::is_negative);
        let above = sides.iter().any(Signed::is_positive);
        if below && above {
            continue;
        }
        if below {
            w.iter_mut().for_each(|x| *x = -x.clone());
            h = -h;
        }
        let on: Vec<usize> = (0..points.len()).filter(|&i| sides[i].is_zero()).collect();
        if seen.insert(on.clone()) {
            out.push(Facet { normal: w, offset: h, points: on });
        }
    }
    out
}

/// Triangulates `conv(points)` within its affine hull. Points must be
/// distinct. Each simplex lists `k + 1` indices, `k` the affine dimension.
pub fn triangulate(points: &[Vec<Rational>]) -> Vec<Vec<usize>> {
    if points.len() == 1 {
        return vec![vec![0]];
    }
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    let pivots = pivot_columns(&diffs);
    let k = pivots.len();
    if k == 0 {
        return vec![vec![0]];
    }
    // A coordinate projection onto the pivot columns is injective on the affine hull.
    let projected: Vec<Vec<Rational>> = points.iter().map(|p| pivots.iter().map(|&c| p[c].clone()).collect()).collect();
    let mut simplices = Vec::new();
    for facet in facets_full_dim(&projected) {
        if facet.points.contains(&0) {
            continue;
        }
        let sub_points: Vec<Vec<Rational>> = facet.points.iter().map(|&i| projected[i].clone()).collect();
        for s in triangulate(&sub_points) {
            let mut simplex = vec![0];
            simplex.extend(s.into_iter().map(|i| facet.points[i]));
            simplices.push(simplex);
        }
    }
    simplices
}

/// `d! * Vol(conv(points))` for points spanning `R^d`.
pub fn normalized_volume(points: &[Vec<Rational>]) -> Rational {
    let mut distinct: Vec<Vec<Rational>> = points.to_vec();
    distinct.sort();
    distinct.dedup();
    triangulate(&distinct)
        .into_iter()
        .filter(|s| s.len() == distinct[0].len() + 1)
        .map(|s| {
            let rows: Vec<Vec<Rational>> = s[1..].iter().map(|&i| sub(&distinct[i], &distinct[s[0]])).collect();
            determinant(&rows).abs()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(determinant(&pts(&[&[2, 1], &[1, 3]])), int(5));
        assert_eq!(determinant(&pts(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(&pts(&[&[1, 2], &[2, 4]])), int(0));
        assert_eq!(determinant(&pts(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), int(6));
    }

    #[test]
    fn cube_volume_and_facets() {
        let cube =
            pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(facets_full_dim(&cube).len(), 6);
        // 3! * 1
        assert_eq!(normalized_volume(&cube), int(6));
    }

    #[test]
    fn square_with_interior_point() {
        let sq = pts(&[&[1, 1], &[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert_eq!(normalized_volume(&sq), int(8));
    }

    #[test]
    fn triangulates_lower_dimensional_sets() {
        // A square embedded in the plane z = 1 of R^3.
        let sq = pts(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let simplices = triangulate(&sq);
        assert_eq!(simplices.len(), 2);
        assert!(simplices.iter().all(|s| s.len() == 3));
    }
}
