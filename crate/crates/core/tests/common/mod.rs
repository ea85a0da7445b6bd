#![allow(dead_code)]

use pshdiag_core::lp::{LinearProgram, Relation};
use pshdiag_core::rational::{frac, int};
use pshdiag_core::{Diagram, Point, Polynomial, Rational, Weight};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lattice_points(rng: &mut impl Rng, n: usize, count: usize, max: i64) -> Vec<Point> {
    (0..count).map(|_| Point::new((0..n).map(|_| int(rng.gen_range(0..=max))).collect()).unwrap()).collect()
}

pub fn random_diagram(rng: &mut impl Rng, n: usize, max_points: usize, max: i64) -> Diagram {
    let count = rng.gen_range(1..=max_points);
    Diagram::canonicalize(n, lattice_points(rng, n, count, max)).unwrap()
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(1..=9), rng.gen_range(1..=5))
}

pub fn random_weight(rng: &mut impl Rng, n: usize) -> Weight {
    Weight::new((0..n).map(|_| random_rational(rng)).collect()).unwrap()
}

pub fn random_direction(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| frac(-rng.gen_range(0..=7), rng.gen_range(1..=4))).collect()
}

/// A nonzero polynomial with at most `max_terms` terms of total degree <= `max_deg`.
pub fn random_poly(rng: &mut impl Rng, n: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    loop {
        let terms = (0..rng.gen_range(1..=max_terms)).map(|_| {
            let mut e = vec![0u32; n];
            let deg = rng.gen_range(0..=max_deg);
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            let c = frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            (e, c)
        });
        let p = Polynomial::from_terms(n, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Brute-force membership `p in conv(others) + R^n_+` by a direct LP.
pub fn lp_member(p: &Point, others: &[Point]) -> bool {
    if others.is_empty() {
        return false;
    }
    let mut lp = LinearProgram::new(others.len());
    lp.add(vec![int(1); others.len()], Relation::Eq, int(1));
    for k in 0..p.dim() {
        lp.add(others.iter().map(|q| q.coords()[k].clone()).collect(), Relation::Le, p.coords()[k].clone());
    }
    lp.is_feasible()
}

/// Vertex set by testing every point against all the others.
pub fn lp_vertices(points: &[Point]) -> Vec<Point> {
    let mut distinct = points.to_vec();
    distinct.sort();
    distinct.dedup();
    (0..distinct.len())
        .filter(|&i| {
            let others: Vec<Point> =
                distinct.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            !lp_member(&distinct[i], &others)
        })
        .map(|i| distinct[i].clone())
        .collect()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}
