//! Conductor exponents at primes `p > 3` for non-special Ciani quartics.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{ext_valuation, is_prime, rat, rational_string, valuation, ExtValuation, Rational};
use crate::invariants::{CianiTuple, StandardModel};
use crate::padic::{splitting_degree_fast, splitting_degree_nr, unique_positive_root_valuation};
use crate::reconstruct::{reconstruct, resolvent, ReconstructionCase};
use crate::reduction::{classify, ReductionType};

/// Conductor exponent shared by all twists of a curve with good
/// hyperelliptic reduction, by the parity of `e` and the splitting degree.
pub fn hyperelliptic_conductor(e: u32, splitting_degree: u8) -> u32 {
    match (e % 2 == 1, splitting_degree) {
        (true, 2) => 2,
        (true, _) => 6,
        (false, 1) => 0,
        (false, _) => 4,
    }
}

/// Number of `K`-twists for a given splitting degree.
pub fn twist_count(splitting_degree: u8) -> usize {
    match splitting_degree {
        1 => 4,
        2 => 2,
        _ => 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwistConductor {
    pub index: usize,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rescaling {
    None,
    /// Divide the variable carrying the positive-valuation root by
    /// `p^exponent`.
    DivideVariable {
        variable: char,
        #[serde(with = "rational_string")]
        root_valuation: Rational,
        #[serde(with = "rational_string")]
        exponent: Rational,
    },
}

/// Evidence that a standard model with good reduction exists over `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodModelCertificate {
    pub base_case: ReconstructionCase,
    /// Coefficients of the reconstructed model of the normalised tuple.
    pub base_model: Vec<String>,
    pub rescaling: Rescaling,
    pub delta_valuation: ExtValuation,
    pub field_extension: Option<String>,
}

/// Everything known about the conductor exponent at `p`.
///
/// `conductor_min` is `None` exactly when the reduction is bad; the exponent
/// is then known to be positive but not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConductorReport {
    pub prime: u64,
    pub reduction: ReductionType,
    pub special: bool,
    pub splitting_degree: u8,
    pub nu_q: ExtValuation,
    pub nu_r: ExtValuation,
    pub conductor_min: Option<u32>,
    pub positive: bool,
    pub per_twist: Vec<TwistConductor>,
    pub good_model: Option<GoodModelCertificate>,
    pub stable_field_degree_divisor: u8,
    pub good_field_degree: Option<u32>,
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    Ok(())
}

/// `ν(Q)` and `ν(R)` of the normalised tuple.
fn normalised_q_r(t: &CianiTuple, p: u64) -> Result<(ExtValuation, ExtValuation)> {
    let prof = t.normalize_at(p)?;
    let nq = prof.normalize_valuation(&ext_valuation(&t.q_invariant(), p), 6);
    let nr = prof.normalize_valuation(&ext_valuation(&t.r_invariant(), p), 2);
    Ok((nq, nr))
}

/// The alternative form of the good-reduction criterion in the hyperelliptic
/// case, phrased through `ν(Q)` and `ν(R)` only.
fn hyperelliptic_good_by_q_r(e: u32, nu_q: i64, nu_r: &ExtValuation) -> bool {
    let r = nu_q.rem_euclid(6);
    let three_r = nu_r.scale(&rat(3));
    e % 2 == 0 && r % 2 == 0 && (r == 0 || ExtValuation::int(nu_q) > three_r)
}

pub fn conductor(t: &CianiTuple, p: u64) -> Result<ConductorReport> {
    check_prime(p)?;
    if t.is_special()? {
        return Err(Error::Special);
    }
    let reduction = classify(t, p)?;
    let degree = splitting_degree_nr(&resolvent(t), p)?;
    let (nu_q, nu_r) = normalised_q_r(t, p)?;
    let mut report = ConductorReport {
        prime: p,
        reduction,
        special: false,
        splitting_degree: degree,
        nu_q: nu_q.clone(),
        nu_r: nu_r.clone(),
        conductor_min: None,
        positive: true,
        per_twist: vec![],
        good_model: None,
        stable_field_degree_divisor: if degree == 3 { 12 } else { 8 },
        good_field_degree: None,
    };
    let uniform = |f: u32| -> Vec<TwistConductor> {
        (0..twist_count(degree))
            .map(|index| TwistConductor { index, exponent: f })
            .collect()
    };
    match reduction {
        ReductionType::GoodQuartic if nu_q == ExtValuation::int(0) => {
            if degree != 1 {
                return Err(Error::Internal("unit Q with nontrivial splitting".into()));
            }
            let mut per_twist = uniform(4);
            per_twist[0].exponent = 0;
            report.per_twist = per_twist;
            report.conductor_min = Some(0);
            report.good_model = Some(good_model(t, p)?);
            report.good_field_degree = Some(1);
        }
        ReductionType::GoodQuartic => {
            report.per_twist = uniform(4);
            report.conductor_min = Some(4);
        }
        ReductionType::GoodHyperelliptic { e } => {
            let fast = splitting_degree_fast(t, p)?;
            if fast != degree {
                return Err(Error::Internal(format!(
                    "splitting degree {degree} disagrees with the valuation criterion ({fast})"
                )));
            }
            let f = hyperelliptic_conductor(e, degree);
            let nq = nu_q
                .as_integer()
                .ok_or_else(|| Error::Internal("ν(Q) not an integer".into()))?;
            if (f == 0) != hyperelliptic_good_by_q_r(e, nq, &nu_r) {
                return Err(Error::Internal(
                    "good-reduction criteria disagree in the hyperelliptic case".into(),
                ));
            }
            report.per_twist = uniform(f);
            report.conductor_min = Some(f);
            let extra = if e % 2 == 1 && degree != 2 { 2 } else { 1 };
            report.good_field_degree = Some(degree as u32 * extra);
        }
        ReductionType::Bad { .. } => {}
    }
    report.positive = report.conductor_min.is_none_or(|f| f > 0);
    Ok(report)
}

/// Certifies that a twist with good quartic reduction exists over `K` by
/// tracking the discriminant valuation through the reconstruction.
pub fn good_model(t: &CianiTuple, p: u64) -> Result<GoodModelCertificate> {
    check_prime(p)?;
    if classify(t, p)? != ReductionType::GoodQuartic {
        return Err(Error::Precondition("reduction is not good quartic".into()));
    }
    let n = t
        .normalize_at(p)?
        .tuple
        .expect("good quartic reduction has an integral normalisation");
    if valuation(&n.q_invariant(), p) != Some(0) {
        return Err(Error::Precondition("Q is not a unit".into()));
    }
    let rec = reconstruct(&n)?;
    let nu_delta = valuation(&n.discriminant(), p).expect("smooth");
    let pv = n.p_invariant();
    let (rescaling, delta) = match rec.case {
        ReconstructionCase::A => {
            let vp = valuation(&pv, p).expect("case A has P ≠ 0");
            match unique_positive_root_valuation(&rec.resolvent, p)? {
                Some(va) if vp > 0 => {
                    let delta = rat(nu_delta + 18 * vp) - rat(9) * &va;
                    let exponent = &va / rat(4);
                    (
                        Rescaling::DivideVariable {
                            variable: 'x',
                            root_valuation: va,
                            exponent,
                        },
                        delta,
                    )
                }
                None if vp == 0 => (Rescaling::None, rat(nu_delta)),
                _ => {
                    return Err(Error::Internal(
                        "valuation of P inconsistent with the root valuations".into(),
                    ))
                }
            }
        }
        ReconstructionCase::B => {
            let vs2 = valuation(&rec.resolvent.s2, p).expect("case B has S2 ≠ 0");
            (Rescaling::None, rat(nu_delta + 18 * vs2))
        }
        ReconstructionCase::C => return Err(Error::Special),
    };
    if !delta.is_zero() {
        return Err(Error::Internal(format!(
            "good model has discriminant valuation {delta}"
        )));
    }
    let field_extension = match &rescaling {
        Rescaling::DivideVariable { exponent, .. } if !exponent.is_integer() => {
            Some(format!("K(p^({}))", crate::exactnum::format_rational(exponent)))
        }
        _ => None,
    };
    Ok(GoodModelCertificate {
        base_case: rec.case,
        base_model: rec.coefficients.describe(),
        rescaling,
        delta_valuation: ExtValuation::Finite(delta),
        field_extension,
    })
}

/// Comparison of the conductor exponent with the discriminant valuation of a
/// given integral model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OggCheck {
    pub f: u32,
    /// Set when `f` is only the minimum over twists, not the model's own value.
    pub lower_bound: bool,
    pub bound: ExtValuation,
    pub ok: bool,
}

pub fn ogg_check(m: &StandardModel, p: u64) -> Result<OggCheck> {
    check_prime(p)?;
    if m.coeffs().iter().any(|c| valuation(c, p).is_some_and(|v| v < 0)) {
        return Err(Error::Precondition("model is not p-integral".into()));
    }
    let t = m.invariants();
    let report = conductor(&t, p)?;
    if !report.reduction.is_potentially_good() {
        return Err(Error::Precondition(
            "the inequality is only established for potentially good reduction".into(),
        ));
    }
    let bound = ext_valuation(&t.discriminant(), p);
    let values: Vec<u32> = report.per_twist.iter().map(|c| c.exponent).collect();
    let (f, lower_bound) = if bound == ExtValuation::int(0) {
        (0, false)
    } else if values.windows(2).all(|w| w[0] == w[1]) && !values.is_empty() {
        (values[0], false)
    } else {
        (report.conductor_min.expect("potentially good"), true)
    };
    let ok = ExtValuation::int(f as i64) <= bound;
    Ok(OggCheck {
        f,
        lower_bound,
        bound,
        ok,
    })
}
