//! Local analysis at a prime `p`: Hensel lifting, Newton polygons and the
//! degree of the splitting field of the resolvent cubic over the maximal
//! unramified extension `K` of `Q_p`.
//!
//! # Newton polygon convention
//!
//! [`NewtonPolygon`] records *root valuations*, not hull slopes: a segment
//! joining `(i, ν(cᵢ))` to `(j, ν(cⱼ))` contributes `j − i` roots of valuation
//! `(ν(cᵢ) − ν(cⱼ)) / (j − i)`. Segments are listed by increasing root
//! valuation. Roots equal to zero (vanishing low coefficients) are counted
//! separately in `zero_roots` and do not appear as segments.
//!
//! # Root counting over `K`
//!
//! The residue field of `K` is algebraically closed and `K` contains no
//! ramification, so a root of a rational polynomial lies in `K` exactly when
//! it can be isolated by a chain of integral-slope Newton polygon steps. The
//! engine works with exact rationals throughout: at each step it rescales by
//! `p^s`, reads off the residual polynomial over `F_p`, counts the simple
//! residual roots (each lifts uniquely to `K` by Hensel's lemma) and recurses
//! on the clusters attached to repeated residual roots after translating by an
//! integer lift of the repeated root. For polynomials of degree at most 3 and
//! `p > 3` a repeated residual root is always `F_p`-rational, so no residue
//! field extension is ever materialised.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{
    ext_valuation, is_prime, prime_power, rational_string, valuation, ExtValuation, Rational,
};
use crate::fp::FpPoly;
use crate::invariants::CianiTuple;
use crate::poly::RatPoly;
use crate::reconstruct::CubicPoly;
use crate::reduction::{classify, ReductionType};

fn check_tame_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    Ok(())
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Lifts a simple root of `f mod p` to a root mod `p^precision`.
///
/// `f` is an integer polynomial in ascending order. The result lies in
/// `[0, p^precision)`.
pub fn hensel_lift(f: &[BigInt], root: u64, p: u64, precision: u32) -> Result<BigInt> {
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let pb = BigInt::from(p);
    let mut r = BigInt::from(root);
    if !eval_int(f, &r).mod_floor(&pb).is_zero() {
        return Err(Error::Precondition(format!("{root} is not a root mod {p}")));
    }
    if inverse_mod(&eval_int(&df, &r), &pb).is_none() {
        return Err(Error::Precondition(format!("{root} is a repeated root mod {p}")));
    }
    let mut k = 1u32;
    while k < precision {
        k = (2 * k).min(precision);
        let m = pb.pow(k);
        let inv = inverse_mod(&eval_int(&df, &r), &m).expect("derivative is a unit");
        r = (&r - eval_int(f, &r) * inv).mod_floor(&m);
    }
    Ok(r.mod_floor(&pb.pow(precision)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonSegment {
    /// Valuation shared by the roots on this segment.
    #[serde(with = "rational_string")]
    pub valuation: Rational,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub zero_roots: usize,
    pub segments: Vec<NewtonSegment>,
}

impl NewtonPolygon {
    /// Root valuations with multiplicity, ascending.
    pub fn root_valuations(&self) -> Vec<Rational> {
        self.segments
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.valuation.clone(), s.length))
            .collect()
    }
}

/// Lower hull pieces as `(start, end, root valuation)`, by increasing index.
fn hull(vals: &[ExtValuation]) -> Vec<(usize, usize, Rational)> {
    let pts: Vec<(usize, Rational)> = vals
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.finite().map(|v| (i, v.clone())))
        .collect();
    let mut out = Vec::new();
    let mut cur = 0;
    while cur + 1 < pts.len() {
        let (i0, v0) = &pts[cur];
        let mut best = cur + 1;
        let mut best_slope = (&pts[best].1 - v0) / Rational::from_integer((pts[best].0 - i0).into());
        for (k, (i, v)) in pts.iter().enumerate().skip(cur + 2) {
            let slope = (v - v0) / Rational::from_integer((i - i0).into());
            if slope <= best_slope {
                best = k;
                best_slope = slope;
            }
        }
        out.push((*i0, pts[best].0, -best_slope));
        cur = best;
    }
    out
}

/// Newton polygon from coefficient valuations in ascending degree order.
pub fn newton_polygon(coeff_valuations: &[ExtValuation]) -> Result<NewtonPolygon> {
    match coeff_valuations.last() {
        Some(ExtValuation::Finite(_)) => {}
        _ => {
            return Err(Error::Precondition(
                "leading coefficient must have finite valuation".into(),
            ))
        }
    }
    let zero_roots = coeff_valuations
        .iter()
        .take_while(|v| v.is_infinite())
        .count();
    let mut segments: Vec<NewtonSegment> = hull(&coeff_valuations[zero_roots..])
        .into_iter()
        .map(|(i, j, valuation)| NewtonSegment {
            valuation,
            length: j - i,
        })
        .collect();
    segments.reverse();
    Ok(NewtonPolygon {
        zero_roots,
        segments,
    })
}

pub fn newton_polygon_of(f: &RatPoly, p: u64) -> Result<NewtonPolygon> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let vals: Vec<ExtValuation> = f.coeffs().iter().map(|c| ext_valuation(c, p)).collect();
    newton_polygon(&vals)
}

struct RootCounter {
    p: u64,
    depth_limit: usize,
}

impl RootCounter {
    /// Number of roots of `f` in `K`, counted without multiplicity issues
    /// since `f` is squarefree. With `positive_only`, only roots of strictly
    /// positive valuation are counted.
    fn count(&self, f: &RatPoly, positive_only: bool, depth: usize) -> Result<usize> {
        if depth > self.depth_limit {
            return Err(Error::RefinementExhausted(self.depth_limit));
        }
        let p = self.p;
        let mut count = 0;
        let mut f = f.clone();
        while f.degree().unwrap_or(0) > 0 && f.coeff(0).is_zero() {
            f = RatPoly::new(f.coeffs()[1..].to_vec());
            count += 1;
        }
        let vals: Vec<ExtValuation> = f.coeffs().iter().map(|c| ext_valuation(c, p)).collect();
        for (i0, i1, s) in hull(&vals) {
            if positive_only && s <= Rational::zero() {
                continue;
            }
            if i1 - i0 == 1 {
                count += 1;
                continue;
            }
            if !s.is_integer() {
                continue;
            }
            let si: i64 = s.to_integer().try_into().expect("slope fits in i64");
            let mu = vals[i0].finite().unwrap() + &s * Rational::from_integer(i0.into());
            let mu: i64 = mu.to_integer().try_into().expect("valuation fits in i64");
            let residual: Vec<Rational> = (i0..=i1)
                .map(|i| f.coeff(i) * prime_power(p, si * i as i64 - mu))
                .map(|c| if valuation(&c, p).is_none_or(|v| v > 0) { Rational::zero() } else { c })
                .collect();
            let r = FpPoly::from_rationals(p, &residual);
            let g = r.gcd(&r.derivative());
            let repeated = g.roots();
            if repeated.len() != radical_degree(&g) {
                return Err(Error::Internal(
                    "repeated residual root outside the prime field".into(),
                ));
            }
            let distinct = radical_degree(&r);
            count += distinct - repeated.len();
            let scale = prime_power(p, si);
            for a in repeated {
                let shift = &scale * Rational::from_integer(a.into());
                let g = f.compose_affine(&shift, &scale);
                count += self.count(&g, true, depth + 1)?;
            }
        }
        Ok(count)
    }
}

/// Number of distinct roots over the algebraic closure of `F_p`, valid
/// while every multiplicity is below `p`.
fn radical_degree(f: &FpPoly) -> usize {
    f.degree().unwrap_or(0) - f.gcd(&f.derivative()).degree().unwrap_or(0)
}

/// Number of roots in `K` of a squarefree rational polynomial.
pub fn roots_in_unramified_closure(f: &RatPoly, p: u64) -> Result<usize> {
    check_tame_prime(p)?;
    let f = f.monic();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    if f.gcd(&f.derivative()).degree() != Some(0) {
        return Err(Error::Precondition("polynomial has a repeated root".into()));
    }
    // Each refinement step raises the valuation of the differences inside a
    // cluster, which is bounded by the coefficient and discriminant data.
    let spread: usize = f
        .coeffs()
        .iter()
        .filter_map(|c| valuation(c, p))
        .map(|v| v.unsigned_abs() as usize)
        .sum();
    let counter = RootCounter {
        p,
        depth_limit: 2 * spread + cubic_disc_bound(&f, p) + 8,
    };
    counter.count(&f, false, 0)
}

fn cubic_disc_bound(f: &RatPoly, p: u64) -> usize {
    if f.degree() != Some(3) {
        return 0;
    }
    let c = CubicPoly::new(-f.coeff(2), f.coeff(1), -f.coeff(0));
    valuation(&c.discriminant(), p).map_or(0, |v| v.unsigned_abs() as usize)
}

/// Degree of the splitting field of `cubic` over the maximal unramified
/// extension of `Q_p`.
pub fn splitting_degree_nr(cubic: &CubicPoly, p: u64) -> Result<u8> {
    check_tame_prime(p)?;
    let q = cubic.discriminant();
    if q.is_zero() {
        return Err(Error::Special);
    }
    let degree = match roots_in_unramified_closure(&cubic.to_poly(), p)? {
        3 => 1,
        1 => 2,
        0 => 3,
        n => return Err(Error::Internal(format!("{n} roots of a cubic in K"))),
    };
    let vq = valuation(&q, p).unwrap();
    if vq == 0 && degree != 1 {
        return Err(Error::Internal("unit discriminant but roots do not split".into()));
    }
    if (vq.rem_euclid(2) == 1) != (degree == 2) {
        return Err(Error::Internal(format!(
            "discriminant valuation {vq} inconsistent with splitting degree {degree}"
        )));
    }
    Ok(degree)
}

/// Splitting degree from `ν(Q)` and `ν(R)` alone, valid for tuples with
/// potentially good hyperelliptic reduction.
pub fn splitting_degree_fast(t: &CianiTuple, p: u64) -> Result<u8> {
    check_tame_prime(p)?;
    match classify(t, p)? {
        ReductionType::GoodHyperelliptic { .. } => {}
        _ => return Err(Error::ProfileMismatch),
    }
    let n = t.normalize_at(p)?.tuple.expect("hyperelliptic profile is integral");
    let vq = match ext_valuation(&n.q_invariant(), p) {
        ExtValuation::Finite(v) => v.to_integer(),
        ExtValuation::Infinite => return Err(Error::Special),
    };
    let vr = ext_valuation(&n.r_invariant(), p);
    let three_vr = vr.scale(&Rational::from_integer(3.into()));
    let degree = match vq.mod_floor(&BigInt::from(6)).try_into().unwrap() {
        1 | 3 | 5 => 2,
        0 => 1,
        _ if ExtValuation::Finite(Rational::from_integer(vq)) > three_vr => 1,
        _ => 3,
    };
    Ok(degree)
}

/// Root valuation of the unique positive-valuation root, if there is one.
pub(crate) fn unique_positive_root_valuation(cubic: &CubicPoly, p: u64) -> Result<Option<Rational>> {
    let poly = newton_polygon_of(&cubic.to_poly(), p)?;
    if poly.zero_roots > 0 {
        return Err(Error::Precondition("resolvent has a zero root".into()));
    }
    let pos: Vec<&NewtonSegment> = poly
        .segments
        .iter()
        .filter(|s| s.valuation.is_positive())
        .collect();
    match pos.as_slice() {
        [] => Ok(None),
        [s] if s.length == 1 => Ok(Some(s.valuation.clone())),
        _ => Err(Error::Precondition(
            "more than one root of positive valuation".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn vals(v: &[Option<i64>]) -> Vec<ExtValuation> {
        v.iter()
            .map(|x| x.map_or(ExtValuation::Infinite, ExtValuation::int))
            .collect()
    }

    #[test]
    fn polygon_examples() {
        let unit = newton_polygon(&vals(&[Some(0); 4])).unwrap();
        assert_eq!(
            unit.segments,
            vec![NewtonSegment { valuation: rat(0), length: 3 }]
        );

        // T³ − pT: one zero root, two roots of valuation 1/2
        let np = newton_polygon(&vals(&[None, Some(1), None, Some(0)])).unwrap();
        assert_eq!(np.zero_roots, 1);
        assert_eq!(np.root_valuations(), vec![ratio(1, 2), ratio(1, 2)]);

        let eis = newton_polygon(&vals(&[Some(1), Some(5), Some(3), Some(0)])).unwrap();
        assert_eq!(eis.segments, vec![NewtonSegment { valuation: ratio(1, 3), length: 3 }]);

        // roots of valuation 0, 1 and 2
        let np = newton_polygon(&vals(&[Some(3), Some(1), Some(0), Some(0)])).unwrap();
        assert_eq!(np.root_valuations(), vec![rat(0), rat(1), rat(2)]);

        assert!(newton_polygon(&vals(&[Some(0), None])).is_err());
    }

    #[test]
    fn hensel() {
        // T² − 2 has the root 3 mod 7 (3² = 9 ≡ 2)
        let f = [BigInt::from(-2), BigInt::zero(), BigInt::one()];
        let r = hensel_lift(&f, 3, 7, 10).unwrap();
        let m = BigInt::from(7).pow(10);
        assert!(eval_int(&f, &r).mod_floor(&m).is_zero());
        assert!(hensel_lift(&f, 2, 7, 5).is_err());
    }

    #[test]
    fn splitting_examples() {
        let c = CubicPoly::from_ints(6, 8, 1);
        assert_eq!(splitting_degree_nr(&c, 5).unwrap(), 1);
        assert_eq!(splitting_degree_nr(&c, 229).unwrap(), 2);
        assert_eq!(splitting_degree_nr(&c, 3), Err(Error::UnsupportedPrime(3)));

        let split = CubicPoly::with_roots(&[rat(729), rat(2704), rat(5929)]);
        assert_eq!(splitting_degree_nr(&split, 5).unwrap(), 1);

        // T³ − 5 is Eisenstein
        assert_eq!(splitting_degree_nr(&CubicPoly::from_ints(0, 0, 5), 5).unwrap(), 3);
        // (T − 1)(T² − 7) over 7
        assert_eq!(splitting_degree_nr(&CubicPoly::from_ints(1, -7, -7), 7).unwrap(), 2);
        // (T − 1)(T² − 49·2): both square roots lie in K
        assert_eq!(splitting_degree_nr(&CubicPoly::from_ints(1, -98, -98), 7).unwrap(), 1);
        // T³ − 25 at 5 needs no translation but has valuation 2/3
        assert_eq!(splitting_degree_nr(&CubicPoly::from_ints(0, 0, 25), 5).unwrap(), 3);
        // (T − 1)³ − 250: the roots 1 + 5·∛2 all lie in K
        let c = CubicPoly::new(rat(3), rat(3), rat(1 + 250));
        assert_eq!(splitting_degree_nr(&c, 5).unwrap(), 1);
        // (T − 1)³ − 1250 clusters around 1, then ramifies
        let c = CubicPoly::new(rat(3), rat(3), rat(1 + 625 * 2));
        assert_eq!(splitting_degree_nr(&c, 5).unwrap(), 3);
    }

    #[test]
    fn positive_root() {
        let c = CubicPoly::with_roots(&[rat(25), rat(1), rat(2)]);
        assert_eq!(unique_positive_root_valuation(&c, 5).unwrap(), Some(rat(2)));
        let c = CubicPoly::with_roots(&[rat(3), rat(1), rat(2)]);
        assert_eq!(unique_positive_root_valuation(&c, 5).unwrap(), None);
    }
}
