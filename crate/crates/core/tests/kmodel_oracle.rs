//! The rational model from `k_model` must agree pointwise with the
//! reconstructed model pulled back along the substitution of its column.
//! The pull-back is recomputed here by evaluating the standard form in the
//! relevant algebra at substituted points.

mod common;

use ciani_core::exactnum::{rat, Ring};
use ciani_core::reconstruct::{
    root_pattern, KModelColumn, QuadraticAlgebra, RootPattern, SplittingAlgebra,
};
use ciani_core::{k_model, resolvent, CianiTuple, Rational};
use common::*;
use rand::Rng;

fn standard_eval<R: Ring>(c: &[R; 6], x: &[R; 3]) -> R {
    let sq = x.clone().map(|v| v.clone() * v);
    let [x2, y2, z2] = sq;
    c[0].clone() * x2.clone() * x2.clone()
        + c[1].clone() * y2.clone() * y2.clone()
        + c[2].clone() * z2.clone() * z2.clone()
        + c[3].clone() * y2.clone() * z2.clone()
        + c[4].clone() * x2.clone() * z2
        + c[5].clone() * x2 * y2
}

fn random_points(seed: u64) -> Vec<[Rational; 3]> {
    let mut r = rng(seed);
    (0..8).map(|_| [0, 1, 2].map(|_| rat(r.gen_range(-5..=5)))).collect()
}

fn check_vandermonde(t: &CianiTuple) {
    let km = k_model(t).unwrap();
    assert_eq!(km.column, KModelColumn::Vandermonde);
    let alg = SplittingAlgebra::new(resolvent(t));
    let roots = alg.roots();
    let p = alg.constant(&t.p_invariant());
    let coeffs = [roots[0].clone(), roots[1].clone(), roots[2].clone(), p.clone(), p.clone(), p];
    for v in random_points(11) {
        let [v0, v1, v2] = v.clone().map(|q| alg.constant(&q));
        let x = roots
            .clone()
            .map(|r| v0.clone() + r.clone() * v1.clone() + r.clone() * r * v2.clone());
        let value = standard_eval(&coeffs, &x).as_rational().expect("rational value");
        assert_eq!(km.form.eval(&v), value, "at {v:?}");
    }
}

fn check_conjugate(t: &CianiTuple) {
    let km = k_model(t).unwrap();
    assert_eq!(km.column, KModelColumn::Conjugate);
    let RootPattern::LinearQuadratic { root, quadratic } = root_pattern(&resolvent(t)) else {
        panic!("expected a linear times quadratic resolvent");
    };
    let alg = QuadraticAlgebra::new(quadratic.clone());
    let (u, w) = (alg.generator(), alg.conjugate_generator());
    let p = alg.constant(&t.p_invariant());
    let coeffs = [alg.constant(&root), u.clone(), w.clone(), p.clone(), p.clone(), p];
    for v in random_points(12) {
        let [v0, v1, v2] = v.clone().map(|q| alg.constant(&q));
        let x = [v0, v1.clone() + u.clone() * v2.clone(), v1 + w.clone() * v2];
        let value = standard_eval(&coeffs, &x).as_rational().expect("rational value");
        assert_eq!(km.form.eval(&v), value, "at {v:?}");
    }
    let disc = quadratic.discriminant();
    assert_eq!(km.det_fourth, &disc * &disc);
}

#[test]
fn vandermonde_example() {
    check_vandermonde(&CianiTuple::from_ints([1, -6, 1, 1]));
}

#[test]
fn conjugate_from_quadratic_family() {
    let mut r = rng(21);
    let mut seen = 0;
    for _ in 0..40 {
        let g = shaped_cubic(&mut r, 5, Shape::Quadratic);
        let t = hyperelliptic_family(&g, 5, 1);
        if t.is_singular() || t.is_special() != Ok(false) || t.p_invariant() == rat(0) {
            continue;
        }
        if matches!(root_pattern(&resolvent(&t)), RootPattern::LinearQuadratic { .. }) {
            check_conjugate(&t);
            seen += 1;
        }
    }
    assert!(seen >= 5, "only {seen} conjugate cases generated");
}

#[test]
fn vandermonde_on_random_tuples() {
    let mut r = rng(22);
    let mut seen = 0;
    while seen < 20 {
        let t = CianiTuple::from_array([0, 1, 2, 3].map(|_| rat(r.gen_range(-25..=25))));
        if t.is_singular() || t.is_special() != Ok(false) || t.p_invariant() == rat(0) {
            continue;
        }
        if root_pattern(&resolvent(&t)) == RootPattern::Irreducible {
            check_vandermonde(&t);
            seen += 1;
        }
    }
}

#[test]
fn identity_for_model_tuples() {
    let mut r = rng(23);
    for _ in 0..30 {
        let m = random_model(&mut r);
        let t = m.invariants();
        if t.is_special() != Ok(false) {
            continue;
        }
        let km = k_model(&t).unwrap();
        if t.p_invariant() != rat(0) {
            assert_eq!(km.column, KModelColumn::Identity);
        }
        let std = km.form.as_standard().expect("diagonal model");
        assert_eq!(std.invariants(), km.invariants);
        assert_eq!(t.weighted_scale(&km.lambda), km.invariants);
    }
}
