//! Descent of the reconstructed model to a model with rational coefficients.

use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::{CubicPoly, QuadraticAlgebra, QuadraticPoly, SplittingAlgebra};
use super::form::{pull_back_standard, TernaryQuartic};
use super::{reconstruct, resolvent, ReconstructionCase};
use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, rational_string, Rational, Ring};
use crate::invariants::{CianiTuple, StandardModel};

/// How the resolvent factors over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootPattern {
    /// Three rational roots (with multiplicity), ascending.
    Split([Rational; 3]),
    /// One rational root times an irreducible quadratic.
    LinearQuadratic { root: Rational, quadratic: QuadraticPoly },
    Irreducible,
}

pub fn root_pattern(cubic: &CubicPoly) -> RootPattern {
    let f = cubic.to_poly();
    let mut roots = Vec::new();
    for r in f.rational_roots() {
        let mut g = f.clone();
        loop {
            let (q, rem) = g.div_rem(&crate::poly::RatPoly::linear(-&r, Rational::one()));
            if !rem.is_zero() {
                break;
            }
            roots.push(r.clone());
            g = q;
        }
    }
    match roots.len() {
        3 => {
            roots.sort();
            RootPattern::Split(roots.try_into().unwrap())
        }
        1 => {
            let root = roots.pop().unwrap();
            let rest = &cubic.s1 - &root;
            RootPattern::LinearQuadratic {
                quadratic: QuadraticPoly::new(rest.clone(), &cubic.s2 - &root * &rest),
                root,
            }
        }
        _ => RootPattern::Irreducible,
    }
}

/// Which substitution produced the rational model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KModelColumn {
    /// The reconstructed model is already rational.
    Identity,
    /// `x ↦ x, y ↦ y + ℬz, z ↦ y + 𝒞z` for a conjugate pair `ℬ, 𝒞`.
    Conjugate,
    /// Rows `(1, 𝒜, 𝒜²), (1, ℬ, ℬ²), (1, 𝒞, 𝒞²)`.
    Vandermonde,
    /// `x ↦ √r·x` in case C.
    SquareRoot,
}

/// A model with rational coefficients and its Ciani invariants with respect
/// to the transported Klein subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KModel {
    pub column: KModelColumn,
    pub form: TernaryQuartic,
    pub invariants: CianiTuple,
    /// `invariants = (λ I3, λ I3', λ I3'', λ² I6)` for the input tuple.
    #[serde(with = "rational_string")]
    pub lambda: Rational,
    /// `det(φ)⁴`, the factor contributed by the substitution itself.
    #[serde(with = "rational_string")]
    pub det_fourth: Rational,
}

fn identity_model(t: &CianiTuple, m: StandardModel) -> Result<KModel> {
    diagonal_model(t, m, KModelColumn::Identity, Rational::one())
}

fn diagonal_model(t: &CianiTuple, m: StandardModel, column: KModelColumn, det_fourth: Rational) -> Result<KModel> {
    let invariants = m.invariants();
    if t.i3.is_zero() || invariants.i3.is_zero() {
        return Err(Error::Internal("descended model has I3 = 0".into()));
    }
    let lambda = &invariants.i3 / &t.i3;
    if t.weighted_scale(&lambda) != invariants {
        return Err(Error::Internal(format!(
            "descended model {invariants:?} is not projectively equal to the input"
        )));
    }
    Ok(KModel {
        column,
        form: TernaryQuartic::from_standard(&m),
        invariants,
        lambda,
        det_fourth,
    })
}

fn conjugate_model(
    t: &CianiTuple,
    first: Rational,
    quadratic: QuadraticPoly,
    tail: [Rational; 3],
    lambda_rec: Rational,
) -> Result<KModel> {
    let alg = QuadraticAlgebra::new(quadratic.clone());
    let k = |q: &Rational| alg.constant(q);
    let (u, v) = (alg.generator(), alg.conjugate_generator());
    let coeffs = [k(&first), u.clone(), v.clone(), k(&tail[0]), k(&tail[1]), k(&tail[2])];
    let (zero, one) = (k(&Rational::zero()), k(&Rational::one()));
    let phi = [
        [one.clone(), zero.clone(), zero.clone()],
        [zero.clone(), one.clone(), u],
        [zero, one, v],
    ];
    let form = pull_back_standard(&coeffs, &phi).to_rational_quartic()?;
    let disc = quadratic.discriminant();
    let det_fourth = &disc * &disc;
    transported(t, form, KModelColumn::Conjugate, lambda_rec, det_fourth)
}

fn transported(
    t: &CianiTuple,
    form: TernaryQuartic,
    column: KModelColumn,
    lambda_rec: Rational,
    det_fourth: Rational,
) -> Result<KModel> {
    let lambda = lambda_rec * &det_fourth;
    Ok(KModel {
        column,
        form,
        invariants: t.weighted_scale(&lambda),
        lambda,
        det_fourth,
    })
}

/// A model of the curve with invariants `t` whose coefficients are rational.
///
/// The substitution is chosen by the factorisation of the resolvent over the
/// rationals. For non-diagonal results the invariants are transported from
/// the reconstructed model through `det(φ)⁴`.
pub fn k_model(t: &CianiTuple) -> Result<KModel> {
    let rec = reconstruct(t)?;
    let cubic = resolvent(t);
    let p = t.p_invariant();
    match rec.case {
        ReconstructionCase::A => {
            let tail = [p.clone(), p.clone(), p.clone()];
            match root_pattern(&cubic) {
                RootPattern::Split([a, b, c]) => {
                    identity_model(t, StandardModel::new([a, b, c, p.clone(), p.clone(), p]))
                }
                RootPattern::LinearQuadratic { root, quadratic } => {
                    conjugate_model(t, root, quadratic, tail, rec.lambda)
                }
                RootPattern::Irreducible => {
                    let alg = SplittingAlgebra::new(cubic.clone());
                    let roots = alg.roots();
                    let pp = alg.constant(&p);
                    let coeffs = [
                        roots[0].clone(),
                        roots[1].clone(),
                        roots[2].clone(),
                        pp.clone(),
                        pp.clone(),
                        pp,
                    ];
                    let phi = roots.clone().map(|r| [r.one_like(), r.clone(), r.clone() * r]);
                    let form = pull_back_standard(&coeffs, &phi).to_rational_quartic()?;
                    let [x, y, g] = roots;
                    let det = (y.clone() - x.clone()) * (g.clone() - x) * (g - y);
                    let det_sq = (det.clone() * det).as_rational().ok_or_else(|| {
                        Error::Internal("Vandermonde determinant squared is not rational".into())
                    })?;
                    let det_fourth = &det_sq * &det_sq;
                    transported(t, form, KModelColumn::Vandermonde, rec.lambda, det_fourth)
                }
            }
        }
        ReconstructionCase::B => {
            let s2 = cubic.s2.clone();
            let quadratic = QuadraticPoly::new(cubic.s1.clone(), s2.clone());
            let first = &t.i3 * &s2;
            let tail = [Rational::zero(), s2.clone(), s2.clone()];
            match rational_sqrt(&quadratic.discriminant()) {
                Some(root) => {
                    let two = Rational::from_integer(2.into());
                    let b = (&quadratic.trace + &root) / &two;
                    let c = (&quadratic.trace - &root) / &two;
                    let [t0, t1, t2] = tail;
                    identity_model(t, StandardModel::new([first, b, c, t0, t1, t2]))
                }
                None => conjugate_model(t, first, quadratic, tail, rec.lambda),
            }
        }
        ReconstructionCase::C => {
            let tag = rec.quadratic_tag.clone().expect("case C carries r²");
            let i3 = t.i3.clone();
            let zero = Rational::zero();
            match rational_sqrt(&tag) {
                Some(r) => identity_model(t, StandardModel::new([i3.clone(), i3.clone(), i3, zero.clone(), zero, r])),
                None => {
                    let m = StandardModel::new([&i3 * &tag, i3.clone(), i3, zero.clone(), zero, tag.clone()]);
                    diagonal_model(t, m, KModelColumn::SquareRoot, tag)
                }
            }
        }
    }
}
