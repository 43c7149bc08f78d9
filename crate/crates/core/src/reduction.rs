//! Reduction type of a Ciani quartic at a prime `p > 3`, read off from the
//! valuations of its normalised invariants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{is_prime, rat, ExtValuation};
use crate::invariants::{CianiTuple, NormalizedProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BadReason {
    /// The weighted normalisation needs a ramified extension.
    NonIntegralNormalisation,
    /// The normalised valuations fit neither good-reduction profile.
    ProfileMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ReductionType {
    GoodQuartic,
    GoodHyperelliptic { e: u32 },
    Bad { reason: BadReason },
}

impl ReductionType {
    pub fn is_potentially_good(&self) -> bool {
        !matches!(self, ReductionType::Bad { .. })
    }
}

fn finite(v: &ExtValuation) -> Option<i64> {
    v.as_integer()
}

fn is_hyperelliptic_profile(profile: &NormalizedProfile) -> bool {
    let [v3, v3p, v3pp, v6] = &profile.valuations;
    let (Some(v3), Some(v3pp), Some(v6)) = (finite(v3), finite(v3pp), finite(v6)) else {
        return false;
    };
    let bound_ok = match v3p {
        ExtValuation::Infinite => true,
        ExtValuation::Finite(v) => rat(2 * v6) <= rat(6) * v,
    };
    v3 == 0 && 3 * v3pp > 0 && 3 * v3pp == 2 * v6 && bound_ok
}

/// The exponent `e = ν(I6)/3 = ν(I3'')/2` of a hyperelliptic profile.
pub fn hyper_exponent(profile: &NormalizedProfile) -> Result<u32> {
    if !profile.integral || !is_hyperelliptic_profile(profile) {
        return Err(Error::ProfileMismatch);
    }
    let v3pp = finite(&profile.valuations[2]).unwrap();
    let v6 = finite(&profile.valuations[3]).unwrap();
    if v6 % 3 != 0 || v3pp % 2 != 0 || v6 / 3 != v3pp / 2 {
        return Err(Error::Internal(format!(
            "hyperelliptic profile with ν(I3'') = {v3pp}, ν(I6) = {v6}"
        )));
    }
    Ok((v6 / 3) as u32)
}

/// Classifies the reduction at `p` of the curve with invariants `t`.
pub fn classify(t: &CianiTuple, p: u64) -> Result<ReductionType> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    if t.is_singular() {
        return Err(Error::Singular);
    }
    let profile = t.normalize_at(p)?;
    if !profile.integral {
        return Ok(ReductionType::Bad {
            reason: BadReason::NonIntegralNormalisation,
        });
    }
    if profile.discriminant_valuation() == ExtValuation::int(0) {
        return Ok(ReductionType::GoodQuartic);
    }
    if is_hyperelliptic_profile(&profile) {
        return Ok(ReductionType::GoodHyperelliptic {
            e: hyper_exponent(&profile)?,
        });
    }
    Ok(ReductionType::Bad {
        reason: BadReason::ProfileMismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::StandardModel;

    #[test]
    fn examples() {
        let t = CianiTuple::from_ints([1, -6, 1, 1]);
        assert_eq!(classify(&t, 229).unwrap(), ReductionType::GoodQuartic);
        let h = StandardModel::from_ints([1, 1, 1, 27, 52, 77]).invariants();
        assert_eq!(classify(&h, 5).unwrap(), ReductionType::GoodHyperelliptic { e: 2 });
        let h = StandardModel::from_ints([1, 1, 1, 7, 12, 17]).invariants();
        assert_eq!(classify(&h, 5).unwrap(), ReductionType::GoodHyperelliptic { e: 1 });
        assert_eq!(
            classify(&CianiTuple::from_ints([1, 5, 5, 25]), 5).unwrap(),
            ReductionType::Bad { reason: BadReason::ProfileMismatch }
        );
        assert_eq!(
            classify(&CianiTuple::from_ints([7, 7, 7, 7]), 7).unwrap(),
            ReductionType::Bad { reason: BadReason::NonIntegralNormalisation }
        );
        assert_eq!(classify(&t, 3), Err(Error::UnsupportedPrime(3)));
        assert_eq!(classify(&t, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn exponent_boundary() {
        // valuations (0, 1, 2, 3): ν(I3') = e is allowed
        let t = CianiTuple::from_ints([1, 5, 25, 125]);
        let prof = t.normalize_at(5).unwrap();
        assert_eq!(hyper_exponent(&prof).unwrap(), 1);
        let bad = CianiTuple::from_ints([1, 1, 1, 1]).normalize_at(5).unwrap();
        assert_eq!(hyper_exponent(&bad), Err(Error::ProfileMismatch));
    }

    #[test]
    fn json_shape() {
        let j = |r: ReductionType| serde_json::to_string(&r).unwrap();
        assert_eq!(j(ReductionType::GoodQuartic), r#"{"type":"good_quartic"}"#);
        assert_eq!(
            j(ReductionType::GoodHyperelliptic { e: 2 }),
            r#"{"type":"good_hyperelliptic","e":2}"#
        );
        assert_eq!(
            j(ReductionType::Bad { reason: BadReason::ProfileMismatch }),
            r#"{"type":"bad","reason":"profile_mismatch"}"#
        );
    }
}
