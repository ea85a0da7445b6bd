mod common;

use common::*;
use pshdiag_core::rational::{frac, int};
use pshdiag_core::{Diagram, Error, Point, Polynomial, RationalMatrix, SingularityInput};
use rand::Rng;

#[test]
fn valuation_and_diagram_are_multiplicative() {
    let mut r = rng(42);
    for _ in 0..100 {
        let n = r.gen_range(1..=3);
        let p = random_poly(&mut r, n, 5, 4);
        let q = random_poly(&mut r, n, 5, 4);
        let pq = p.mul(&q).unwrap();
        for _ in 0..3 {
            let a = random_weight(&mut r, n);
            assert_eq!(pq.index_of(&a).unwrap(), p.index_of(&a).unwrap() + q.index_of(&a).unwrap());
        }
        assert_eq!(
            pq.newton_diagram().unwrap(),
            p.newton_diagram().unwrap().minkowski_sum(&q.newton_diagram().unwrap()).unwrap()
        );
    }
}

#[test]
fn valuation_of_a_sum_is_at_least_the_min() {
    let mut r = rng(43);
    for _ in 0..100 {
        let n = r.gen_range(1..=3);
        let p = random_poly(&mut r, n, 5, 4);
        let q = random_poly(&mut r, n, 5, 4);
        let s = p.add(&q).unwrap();
        if s.is_zero() {
            continue;
        }
        let a = random_weight(&mut r, n);
        assert!(s.index_of(&a).unwrap() >= p.index_of(&a).unwrap().min(q.index_of(&a).unwrap()));
    }
}

fn permutation_matrix(perm: &[usize]) -> RationalMatrix {
    let n = perm.len();
    RationalMatrix::new((0..n).map(|i| (0..n).map(|j| if perm[i] == j { int(1) } else { int(0) }).collect()).collect())
        .unwrap()
}

#[test]
fn permuting_variables_permutes_the_diagram() {
    let mut r = rng(44);
    for _ in 0..50 {
        let p = random_poly(&mut r, 3, 5, 5);
        let mut perm = vec![0, 1, 2];
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut r);
        // z_i = zeta_{perm[i]}: the exponent of z_i moves to slot perm[i].
        let q = p.substitute_linear(&permutation_matrix(&perm)).unwrap();
        let original = p.newton_diagram().unwrap();
        let moved = original.generators().iter().map(|g| {
            let mut c = vec![int(0); 3];
            for i in 0..3 {
                c[perm[i]] = g.coords()[i].clone();
            }
            Point::new(c).unwrap()
        });
        assert_eq!(q.newton_diagram().unwrap(), Diagram::canonicalize(3, moved).unwrap());
    }
}

#[test]
fn substitution_then_inverse_is_identity() {
    let mut r = rng(45);
    for _ in 0..40 {
        let n = r.gen_range(2..=3);
        let m = loop {
            let rows =
                (0..n).map(|_| (0..n).map(|_| frac(r.gen_range(-3..=3), r.gen_range(1..=2))).collect()).collect();
            let m = RationalMatrix::new(rows).unwrap();
            if m.determinant() != int(0) {
                break m;
            }
        };
        let p = random_poly(&mut r, n, 4, 4);
        let back = p.substitute_linear(&m).unwrap().substitute_linear(&m.inverse().unwrap()).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn singular_substitution_is_rejected() {
    let p = Polynomial::parse("z1*z2", 2).unwrap();
    let m = RationalMatrix::new(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
    assert!(matches!(p.substitute_linear(&m), Err(Error::SingularMatrix)));
}

#[test]
fn display_round_trips_through_the_parser() {
    let mut r = rng(46);
    for _ in 0..200 {
        let n = r.gen_range(1..=3);
        let p = random_poly(&mut r, n, 6, 5);
        let text = p.to_string();
        assert_eq!(Polynomial::parse(&text, n).unwrap(), p, "{text}");
    }
}

#[test]
fn singularity_diagram_is_hull_of_all_supports() {
    let mut r = rng(47);
    for _ in 0..50 {
        let n = r.gen_range(2..=3);
        let polys: Vec<Polynomial> = (0..r.gen_range(1..=3)).map(|_| random_poly(&mut r, n, 5, 3)).collect();
        let expected =
            polys.iter().map(|p| p.newton_diagram().unwrap()).reduce(|a, b| a.hull_union(&b).unwrap()).unwrap();
        let u = SingularityInput::new(n, polys).unwrap();
        assert_eq!(u.diagram().unwrap(), expected);
        let json = serde_json::to_string(&u).unwrap();
        let back: SingularityInput = serde_json::from_str(&json).unwrap();
        assert_eq!(back.diagram().unwrap(), expected);
    }
}

#[test]
fn parser_reports_bad_input() {
    assert!(matches!(Polynomial::parse("z3", 2), Err(Error::UnknownVariable { .. })));
    assert!(matches!(Polynomial::parse("z1^-2", 2), Err(Error::NegativeExponent { .. })));
    assert!(matches!(Polynomial::parse("z1 +", 2), Err(Error::Syntax { .. })));
    assert!(matches!(Polynomial::parse("0", 2).unwrap().newton_diagram(), Err(Error::ZeroPolynomial)));
}
