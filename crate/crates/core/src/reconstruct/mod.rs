//! Reconstruction of standard models from Ciani invariants.
//!
//! Everything is driven by the resolvent cubic `𝒫`, whose roots are the
//! quantities `Aa², Bb², Cc²` of any standard model with the given
//! invariants. Depending on `P` and `S2` the model is built from all three
//! roots (case A), from the two roots of a quadratic factor (case B), or from
//! a formal square root (case C).

mod algebra;
mod form;
mod kmodel;
mod twists;

use num_traits::Zero;
use serde::Serialize;

pub use algebra::{
    CubicPoly, QuadraticAlgebra, QuadraticAlgebraElement, QuadraticPoly, SplittingAlgebra,
    SplittingAlgebraElement,
};
pub use form::{TernaryQuartic, QUARTIC_MONOMIALS};
pub use kmodel::{k_model, root_pattern, KModel, KModelColumn, RootPattern};
pub use twists::{twists, MatrixEntry, Symbol, TwistDescriptor};

use crate::error::{Error, Result};
use crate::exactnum::{rat, rational_string, Rational, Ring};
use crate::invariants::{ciani_invariants, discriminant_of, CianiTuple, StandardModel};

/// The resolvent `𝒫(T) = T³ − S1·T² + S2·T − S3` with
/// `S1 = I3' + 12 I3`, `S2 = (P² + 16 I3 (P + I3'') − I6) / 4`, `S3 = I3 P²`.
pub fn resolvent(t: &CianiTuple) -> CubicPoly {
    let p = t.p_invariant();
    let s1 = &t.i3p + rat(12) * &t.i3;
    let s2 = (&p * &p + rat(16) * &t.i3 * (&p + &t.i3pp) - &t.i6) / rat(4);
    let s3 = &t.i3 * &p * &p;
    CubicPoly::new(s1, s2, s3)
}

/// Whether `Aa², Bb², Cc²` are exactly the roots of the resolvent built from
/// the model's invariants.
pub fn roots_check(m: &StandardModel) -> bool {
    let [big_a, big_b, big_c, a, b, c] = m.coeffs();
    let roots = [big_a * a * a, big_b * b * b, big_c * c * c];
    CubicPoly::with_roots(&roots) == resolvent(&m.invariants())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ReconstructionCase {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelCoefficients {
    Cubic([SplittingAlgebraElement; 6]),
    Quadratic([QuadraticAlgebraElement; 6]),
}

impl ModelCoefficients {
    /// Human-readable coefficients; algebra generators print as `x`, `y` or `u`.
    pub fn describe(&self) -> Vec<String> {
        match self {
            ModelCoefficients::Cubic(c) => c.iter().map(ToString::to_string).collect(),
            ModelCoefficients::Quadratic(c) => c.iter().map(ToString::to_string).collect(),
        }
    }
}

/// A standard model `Y1` over an algebra containing the needed roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructedModel {
    pub case: ReconstructionCase,
    pub resolvent: CubicPoly,
    pub coefficients: ModelCoefficients,
    /// Scaling of the invariants: `I(Y1) = (λ I3, λ I3', λ I3'', λ² I6)`.
    pub lambda: Rational,
    /// In case C, the square `r² = I3·S1` of the extra coefficient `r`.
    pub quadratic_tag: Option<Rational>,
}

pub fn reconstruct(t: &CianiTuple) -> Result<ReconstructedModel> {
    if t.is_singular() {
        return Err(Error::Singular);
    }
    let cubic = resolvent(t);
    let p = t.p_invariant();
    let (s1, s2) = (cubic.s1.clone(), cubic.s2.clone());
    if !p.is_zero() {
        let alg = SplittingAlgebra::new(cubic.clone());
        let [x, y, g] = alg.roots();
        let pp = alg.constant(&p);
        return Ok(ReconstructedModel {
            case: ReconstructionCase::A,
            resolvent: cubic,
            coefficients: ModelCoefficients::Cubic([x, y, g, pp.clone(), pp.clone(), pp]),
            lambda: &p * &p,
            quadratic_tag: None,
        });
    }
    if !s2.is_zero() {
        let alg = QuadraticAlgebra::new(QuadraticPoly::new(s1.clone(), s2.clone()));
        let k = |q: &Rational| alg.constant(q);
        return Ok(ReconstructedModel {
            case: ReconstructionCase::B,
            resolvent: cubic,
            coefficients: ModelCoefficients::Quadratic([
                k(&(&t.i3 * &s2)),
                alg.generator(),
                alg.conjugate_generator(),
                k(&Rational::zero()),
                k(&s2),
                k(&s2),
            ]),
            lambda: &s2 * &s2,
            quadratic_tag: None,
        });
    }
    let tag = &t.i3 * &s1;
    let alg = QuadraticAlgebra::sqrt_of(&tag);
    let i3 = alg.constant(&t.i3);
    Ok(ReconstructedModel {
        case: ReconstructionCase::C,
        resolvent: cubic,
        coefficients: ModelCoefficients::Quadratic([
            i3.clone(),
            i3.clone(),
            i3,
            alg.constant(&Rational::zero()),
            alg.constant(&Rational::zero()),
            alg.generator(),
        ]),
        lambda: &t.i3 * &t.i3,
        quadratic_tag: Some(tag),
    })
}

const INVARIANT_NAMES: [&str; 4] = ["I3", "I3'", "I3''", "I6"];

fn rational_invariants<R: Ring + std::fmt::Display>(coeffs: &[R; 6]) -> Result<(CianiTuple, Rational)> {
    let inv = ciani_invariants(coeffs);
    let disc = discriminant_of(&inv);
    let mut out: [Rational; 4] = Default::default();
    for (k, v) in inv.iter().enumerate() {
        out[k] = v.as_rational().ok_or_else(|| Error::Verification {
            invariant: INVARIANT_NAMES[k],
            detail: format!("not rational in the algebra: {v}"),
        })?;
    }
    let disc = disc.as_rational().ok_or_else(|| Error::Verification {
        invariant: "discriminant",
        detail: format!("not rational in the algebra: {disc}"),
    })?;
    Ok((CianiTuple::from_array(out), disc))
}

/// Outcome of [`verify_reconstruction`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub case: ReconstructionCase,
    #[serde(with = "rational_string")]
    pub lambda: Rational,
    /// Invariants of the reconstructed model, computed inside the algebra.
    pub model_invariants: CianiTuple,
    #[serde(with = "rational_string")]
    pub model_discriminant: Rational,
}

/// Evaluates the invariant formulas on the reconstructed coefficients and
/// checks them against the input tuple.
pub fn verify_reconstruction(t: &CianiTuple) -> Result<ReconstructionReport> {
    let model = reconstruct(t)?;
    let (inv, disc) = match &model.coefficients {
        ModelCoefficients::Cubic(c) => rational_invariants(c)?,
        ModelCoefficients::Quadratic(c) => rational_invariants(c)?,
    };
    let expected = t.weighted_scale(&model.lambda);
    for (k, (got, want)) in inv.to_array().iter().zip(expected.to_array().iter()).enumerate() {
        if got != want {
            return Err(Error::verification(INVARIANT_NAMES[k], want, &got.to_string()));
        }
    }
    let want_disc = t.discriminant() * crate::exactnum::Ring::pow(&model.lambda, 9);
    if disc != want_disc {
        return Err(Error::verification("discriminant", &want_disc, &disc.to_string()));
    }
    Ok(ReconstructionReport {
        case: model.case,
        lambda: model.lambda,
        model_invariants: inv,
        model_discriminant: disc,
    })
}
