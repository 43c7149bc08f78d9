//! Generators and independent reference formulas shared by the integration
//! tests. The formulas here are written out longhand on plain rationals so
//! they do not go through the library's generic evaluators.

#![allow(dead_code)]

use ciani_core::exactnum::{prime_power, rat, Ring};
use ciani_core::reconstruct::{CubicPoly, SplittingAlgebra};
use ciani_core::{CianiTuple, Rational, StandardModel};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R, bound: i64, nonzero: bool) -> Rational {
    loop {
        let num = rng.gen_range(-bound..=bound);
        let den = if rng.gen_bool(0.2) { rng.gen_range(1..=6) } else { 1 };
        if !nonzero || num != 0 {
            return Rational::new(num.into(), den.into());
        }
    }
}

/// A random smooth standard model with small coefficients.
pub fn random_model<R: Rng>(rng: &mut R) -> StandardModel {
    loop {
        let m = StandardModel::new([
            small_rational(rng, 9, true),
            small_rational(rng, 9, true),
            small_rational(rng, 9, true),
            small_rational(rng, 12, false),
            small_rational(rng, 12, false),
            small_rational(rng, 12, false),
        ]);
        if oracle_discriminant(&oracle_invariants(&m)) != Rational::zero() {
            return m;
        }
    }
}

/// `(I3, I3', I3'', I6)` straight from the defining polynomials.
pub fn oracle_invariants(m: &StandardModel) -> [Rational; 4] {
    let [ca, cb, cc, a, b, c] = m.coeffs().clone();
    let da = &a * &a - rat(4) * &cb * &cc;
    let db = &b * &b - rat(4) * &ca * &cc;
    let dc = &c * &c - rat(4) * &ca * &cb;
    let i3 = &ca * &cb * &cc;
    let i3p = &ca * &da + &cb * &db + &cc * &dc;
    let i3pp = rat(-4) * &i3 + &ca * &a * &a + &cb * &b * &b + &cc * &c * &c - &a * &b * &c;
    [i3, i3p, i3pp, da * db * dc]
}

pub fn oracle_discriminant(t: &[Rational; 4]) -> Rational {
    let [i3, _, i3pp, i6] = t;
    let i3pp2 = i3pp * i3pp;
    rat(1 << 20) * i3 * &i3pp2 * &i3pp2 * i6 * i6
}

pub fn tuple(t: &[Rational; 4]) -> CianiTuple {
    CianiTuple::from_array(t.clone())
}

/// `(S1, S2, S3)` of the resolvent, written from the tuple directly.
pub fn oracle_resolvent(t: &[Rational; 4]) -> [Rational; 3] {
    let [i3, i3p, i3pp, i6] = t;
    let p = rat(8) * i3 + i3p - i3pp;
    let s1 = i3p + rat(12) * i3;
    let s2 = (&p * &p + rat(16) * i3 * (&p + i3pp) - i6) / rat(4);
    let s3 = i3 * &p * &p;
    [s1, s2, s3]
}

/// Discriminant of `T³ − s1 T² + s2 T − s3`, from the general cubic formula
/// `b²c² − 4ac³ − 4b³d − 27a²d² + 18abcd` with `(a, b, c, d) = (1, −s1, s2, −s3)`.
pub fn cubic_discriminant(s: &[Rational; 3]) -> Rational {
    let (a, b, c, d) = (rat(1), -&s[0], s[1].clone(), -&s[2]);
    &b * &b * &c * &c - rat(4) * &a * &c * &c * &c - rat(4) * &b * &b * &b * &d
        - rat(27) * &a * &a * &d * &d
        + rat(18) * &a * &b * &c * &d
}

/// How the resolvent of a generated hyperelliptic family is meant to split
/// over the maximal unramified extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Split,
    Quadratic,
    Cubic,
}

/// A cubic `g` whose roots generate an extension of the requested degree
/// over the maximal unramified extension of `Q_p`.
pub fn shaped_cubic<R: Rng>(rng: &mut R, p: u64, shape: Shape) -> CubicPoly {
    let unit = |rng: &mut R| loop {
        let w: i64 = rng.gen_range(-40..=40);
        if w.rem_euclid(p as i64) != 0 {
            return rat(w);
        }
    };
    match shape {
        Shape::Split => loop {
            let r = [0, 1, 2].map(|_| rat(rng.gen_range(-30..=30)));
            if r[0] != r[1] && r[1] != r[2] && r[0] != r[2] {
                return CubicPoly::with_roots(&r);
            }
        },
        Shape::Quadratic => {
            // (X − u)((X − v)² − p^k w) with k odd
            let (u, v) = (rat(rng.gen_range(-20..=20)), rat(rng.gen_range(-20..=20)));
            let k = [1, 3][rng.gen_range(0..2)];
            let pw = prime_power(p, k) * unit(rng);
            let s1 = &u + rat(2) * &v;
            let s2 = rat(2) * &u * &v + &v * &v - &pw;
            let s3 = &u * (&v * &v - &pw);
            CubicPoly::new(s1, s2, s3)
        }
        Shape::Cubic => {
            // (X − u)³ − p^k w with 3 ∤ k
            let u = rat(rng.gen_range(-20..=20));
            let k = [1, 2, 4][rng.gen_range(0..3)];
            let pw = prime_power(p, k) * unit(rng);
            CubicPoly::new(rat(3) * &u, rat(3) * &u * &u, &u * &u * &u + pw)
        }
    }
}

/// Invariants of `x⁴ + y⁴ + z⁴ + Σ (2 + pᵉ αᵢ)·(pair)` where the `αᵢ` are the
/// roots of `g`. The model lives over the splitting algebra of `g` but is
/// symmetric in the roots, so its invariants are rational.
pub fn hyperelliptic_family(g: &CubicPoly, p: u64, e: i64) -> CianiTuple {
    let alg = SplittingAlgebra::new(g.clone());
    let pe = prime_power(p, e);
    let one = alg.constant(&rat(1));
    let two = alg.constant(&rat(2));
    let coeff = |r: &ciani_core::reconstruct::SplittingAlgebraElement| two.clone() + r.scale(&pe);
    let [x, y, gamma] = alg.roots();
    let coeffs = [one.clone(), one.clone(), one, coeff(&x), coeff(&y), coeff(&gamma)];
    let inv = ciani_core::invariants::ciani_invariants(&coeffs);
    CianiTuple::from_array(inv.map(|v| v.as_rational().expect("symmetric in the roots")))
}
