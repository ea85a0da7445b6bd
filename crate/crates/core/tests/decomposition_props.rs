mod common;

use common::*;
use num_traits::{One, Signed, Zero};
use pshdiag_core::lp::LpOutcome;
use pshdiag_core::rational::{frac, int};
use pshdiag_core::{
    decide_decomposability, decide_decomposability_general, verify_decomposition, weighted_simplex,
    DecompositionCertificate, Diagram, Rational, SummandSystem,
};
use rand::Rng;

fn corpus(seed: u64, count: usize) -> Vec<Diagram> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=3);
            random_diagram(&mut r, n, 5, 5)
        })
        .collect()
}

#[test]
fn every_decomposable_verdict_verifies() {
    for g in corpus(200, 80) {
        if let DecompositionCertificate::Decomposable { left, right, .. } = decide_decomposability(&g).unwrap() {
            assert!(verify_decomposition(&g, &left, &right).unwrap(), "{g}");
            assert_eq!(left.minkowski_sum(&right).unwrap(), g);
            assert!(left <= right);
        }
    }
}

#[test]
fn two_dim_verdicts_follow_vertex_count_and_floor() {
    let mut r = rng(201);
    for _ in 0..150 {
        let g = random_diagram(&mut r, 2, 5, 6);
        let m = g.generators().len();
        let v = g.generators()[0].coords();
        let expected = match m {
            1 => v.iter().all(Signed::is_positive),
            2 => !g.floor().is_origin(),
            _ => true,
        };
        assert_eq!(decide_decomposability(&g).unwrap().is_decomposable(), expected, "{g}");
    }
}

#[test]
fn verdict_is_scale_invariant() {
    let mut r = rng(202);
    for g in corpus(203, 40) {
        let c = frac(r.gen_range(1..=7), r.gen_range(1..=4));
        assert_eq!(
            decide_decomposability(&g).unwrap().is_decomposable(),
            decide_decomposability(&g.scale(&c).unwrap()).unwrap().is_decomposable(),
            "{g} scaled by {c}"
        );
    }
}

#[test]
fn fast_path_agrees_with_general_path() {
    let mut r = rng(204);
    for _ in 0..30 {
        let n = r.gen_range(2..=3);
        let g = weighted_simplex(&random_weight(&mut r, n));
        assert!(!decide_decomposability(&g).unwrap().is_decomposable());
        assert!(!decide_decomposability_general(&g).unwrap().is_decomposable(), "{g}");
    }
}

#[test]
fn summand_and_co_summand_add_back_to_the_base() {
    let mut r = rng(205);
    let mut checked = 0;
    for g in corpus(206, 40) {
        let system = SummandSystem::new(&g);
        let lp = system.linear_program();
        let n = g.dim();
        let edges = system.graph().edges.len();
        for _ in 0..3 {
            let objective: Vec<Rational> = (0..lp.num_vars()).map(|_| int(r.gen_range(-3..=3))).collect();
            let LpOutcome::Optimal { solution, .. } = lp.maximize(&objective) else {
                panic!("summand system is bounded and contains zero");
            };
            // Variable layout: vertex images first, then one scale per edge.
            let t = solution[solution.len() - edges..].to_vec();
            let a = system.assignment_from_edge_scales(t, 0, solution[..n].to_vec()).unwrap();
            let k1 = system.summand_of(&a).unwrap();
            let k2 = system.co_summand_of(&a).unwrap();
            assert_eq!(k1.minkowski_sum(&k2).unwrap(), g);
            checked += 1;
        }
    }
    assert_eq!(checked, 120);
}

#[test]
fn homothetic_assignments_lie_in_the_homothety_set() {
    let mut r = rng(207);
    for g in corpus(208, 40) {
        let system = SummandSystem::new(&g);
        let floor = g.floor();
        for _ in 0..5 {
            let lambda = frac(r.gen_range(1..=4), 4);
            // Largest admissible translation is (1 - lambda) * floor.
            let x: Vec<Rational> =
                floor.coords().iter().map(|f| (Rational::one() - &lambda) * f * frac(r.gen_range(0..=2), 2)).collect();
            let a = system.homothetic_assignment(&lambda, &x);
            system.check(&a).unwrap();
            let w = system.summand_homothety(&a).expect("homothetic summand");
            assert_eq!(g.scale(&w.c).unwrap().translate(&w.x).unwrap(), system.summand_of(&a).unwrap());
            // A single vertex has many witnesses; otherwise the witness is unique.
            if g.generators().len() > 1 {
                assert_eq!(w.c, lambda);
                assert_eq!(w.x.coords(), x.as_slice());
            }
        }
        // The zero scale collapses the summand to a point, never a homothetic copy.
        if g.generators().len() > 1 {
            let a = system.homothetic_assignment(&Rational::zero(), &vec![Rational::zero(); g.dim()]);
            assert!(system.summand_homothety(&a).is_none());
        }
    }
}

#[test]
fn one_sided_splits_are_not_witnesses() {
    // The floor split has a homothetic co-summand in one direction only.
    let g = Diagram::from_ints(&[&[2, 1], &[1, 2]]).unwrap();
    let half = g.scale(&frac(1, 2)).unwrap();
    assert!(!verify_decomposition(&g, &half, &half).unwrap());
    let floor = Diagram::from_ints(&[&[1, 1]]).unwrap();
    let rest = Diagram::from_ints(&[&[1, 0], &[0, 1]]).unwrap();
    assert!(verify_decomposition(&g, &floor, &rest).unwrap());
    // Reversing the floor split: G - floor is not a nonnegative translate of G.
    assert!(rest.is_homothetic_to(&g).unwrap().is_none());
    assert!(g.is_homothetic_to(&rest).unwrap().is_some());
}
