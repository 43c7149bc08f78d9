//! Ciani invariants of standard models and the quantities derived from them.
//!
//! A standard model is the diagonal quartic
//! `A x⁴ + B y⁴ + C z⁴ + a y²z² + b x²z² + c x²y²`, on which the Klein
//! four-group acts by sign changes. Its invariants `(I3, I3', I3'', I6)` have
//! weights `(1, 1, 1, 2)` and define a point of `P(1,1,1,2)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{
    deserialize_rationals, ext_valuation, is_prime, prime_power, rat, serialize_rationals, valuation,
    ExtValuation, Rational, Ring,
};
use crate::reconstruct::resolvent;

/// Evaluates `(I3, I3', I3'', I6)` on the coefficients `(A, B, C, a, b, c)`
/// of a standard model over any commutative ring.
pub fn ciani_invariants<R: Ring>(coeffs: &[R; 6]) -> [R; 4] {
    let [big_a, big_b, big_c, a, b, c] = coeffs.clone();
    let four = big_a.constant_int(4);
    let abc_big = big_a.clone() * big_b.clone() * big_c.clone();
    let [da, db, dc] = pair_discriminants_of(coeffs);
    let i3p = big_a.clone() * da.clone() + big_b.clone() * db.clone() + big_c.clone() * dc.clone();
    let i3pp = -(four * abc_big.clone())
        + big_a * a.clone() * a.clone()
        + big_b * b.clone() * b.clone()
        + big_c * c.clone() * c.clone()
        - a * b * c;
    let i6 = da * db * dc;
    [abc_big, i3p, i3pp, i6]
}

/// `(a² − 4BC, b² − 4AC, c² − 4AB)`, the three factors of `I6`.
pub fn pair_discriminants_of<R: Ring>(coeffs: &[R; 6]) -> [R; 3] {
    let [big_a, big_b, big_c, a, b, c] = coeffs.clone();
    let four = big_a.constant_int(4);
    [
        a.clone() * a - four.clone() * big_b.clone() * big_c.clone(),
        b.clone() * b - four.clone() * big_a.clone() * big_c,
        c.clone() * c - four * big_a * big_b,
    ]
}

/// `AB·ΔaΔb + BC·ΔbΔc + CA·ΔcΔa`.
pub fn i_invariant_of<R: Ring>(coeffs: &[R; 6]) -> R {
    let [big_a, big_b, big_c, ..] = coeffs.clone();
    let [da, db, dc] = pair_discriminants_of(coeffs);
    big_a.clone() * big_b.clone() * da.clone() * db.clone()
        + big_b * big_c.clone() * db * dc.clone()
        + big_c * big_a * dc * da
}

/// `2²⁰ · I3 · I3''⁴ · I6²` over any ring.
pub fn discriminant_of<R: Ring>(inv: &[R; 4]) -> R {
    let [i3, _, i3pp, i6] = inv.clone();
    i3.constant_int(1 << 20) * i3 * i3pp.pow(4) * i6.pow(2)
}

/// Coefficients `(A, B, C, a, b, c)` of
/// `A x⁴ + B y⁴ + C z⁴ + a y²z² + b x²z² + c x²y²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardModel {
    coeffs: [Rational; 6],
}

impl StandardModel {
    pub fn new(coeffs: [Rational; 6]) -> Self {
        StandardModel { coeffs }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        Self::new(c.map(rat))
    }

    pub fn from_slice(c: &[Rational]) -> Result<Self> {
        let coeffs: [Rational; 6] = c
            .to_vec()
            .try_into()
            .map_err(|_| Error::Parse(format!("expected 6 coefficients, got {}", c.len())))?;
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[Rational; 6] {
        &self.coeffs
    }

    pub fn invariants(&self) -> CianiTuple {
        CianiTuple::from_array(ciani_invariants(&self.coeffs))
    }

    pub fn discriminant(&self) -> Rational {
        self.invariants().discriminant()
    }

    pub fn is_smooth(&self) -> bool {
        !self.discriminant().is_zero()
    }

    pub fn pair_discriminants(&self) -> [Rational; 3] {
        pair_discriminants_of(&self.coeffs)
    }

    /// The auxiliary invariant `I` computed from the coefficients.
    pub fn i_invariant(&self) -> Rational {
        i_invariant_of(&self.coeffs)
    }

    /// Multiplies the form by `lambda`; degree-`k` invariants scale by `lambda^k`.
    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Self::new(self.coeffs.clone().map(|c| c * lambda)))
    }

    /// Substitutes `x ↦ d1·x, y ↦ d2·y, z ↦ d3·z`.
    pub fn diag_transformed(&self, d: &[Rational; 3]) -> Result<Self> {
        if d.iter().any(Zero::is_zero) {
            return Err(Error::ZeroDeterminant);
        }
        let [d1, d2, d3] = d.clone().map(|x| &x * &x);
        let [big_a, big_b, big_c, a, b, c] = self.coeffs.clone();
        Ok(Self::new([
            big_a * &d1 * &d1,
            big_b * &d2 * &d2,
            big_c * &d3 * &d3,
            a * &d2 * &d3,
            b * &d1 * &d3,
            c * &d1 * &d2,
        ]))
    }
}

impl Serialize for StandardModel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rationals(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for StandardModel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = deserialize_rationals(d)?;
        StandardModel::from_slice(&v).map_err(serde::de::Error::custom)
    }
}

/// The Ciani invariants `(I3, I3', I3'', I6)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CianiTuple {
    pub i3: Rational,
    pub i3p: Rational,
    pub i3pp: Rational,
    pub i6: Rational,
}

impl CianiTuple {
    pub fn new(i3: Rational, i3p: Rational, i3pp: Rational, i6: Rational) -> Self {
        CianiTuple { i3, i3p, i3pp, i6 }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        Self::from_array(v.map(rat))
    }

    pub fn from_array([i3, i3p, i3pp, i6]: [Rational; 4]) -> Self {
        CianiTuple { i3, i3p, i3pp, i6 }
    }

    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        let arr: [Rational; 4] = v
            .to_vec()
            .try_into()
            .map_err(|_| Error::Parse(format!("expected 4 invariants, got {}", v.len())))?;
        Ok(Self::from_array(arr))
    }

    pub fn to_array(&self) -> [Rational; 4] {
        [self.i3.clone(), self.i3p.clone(), self.i3pp.clone(), self.i6.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(Zero::is_zero)
    }

    /// `(λ I3, λ I3', λ I3'', λ² I6)`: the same weighted projective point.
    pub fn weighted_scale(&self, lambda: &Rational) -> Self {
        CianiTuple {
            i3: &self.i3 * lambda,
            i3p: &self.i3p * lambda,
            i3pp: &self.i3pp * lambda,
            i6: &self.i6 * lambda * lambda,
        }
    }

    pub fn discriminant(&self) -> Rational {
        discriminant_of(&self.to_array())
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// `P = 8 I3 + I3' − I3''`.
    pub fn p_invariant(&self) -> Rational {
        rat(8) * &self.i3 + &self.i3p - &self.i3pp
    }

    /// The invariant `I`, recovered from the quadratic relation it satisfies
    /// with the four Ciani invariants.
    pub fn i_invariant(&self) -> Rational {
        (&self.i3p * &self.i3p - &self.i6 - rat(16) * &self.i3 * &self.i3pp
            - rat(2) * &self.i3p * &self.i3pp
            + &self.i3pp * &self.i3pp)
            / rat(4)
    }

    /// The discriminant `Q` of the resolvent cubic, written in the invariants.
    pub fn q_invariant(&self) -> Rational {
        let i = self.i_invariant();
        let (i3, i3p, i6) = (&self.i3, &self.i3p, &self.i6);
        rat(-4) * i3 * i3p * i3p * i3p * i6 - rat(27) * i3 * i3 * i6 * i6
            + rat(18) * i3 * i3p * i6 * &i
            + i3p * i3p * &i * &i
            - rat(4) * &i * &i * &i
    }

    /// `R = S1² − 3 S2`.
    pub fn r_invariant(&self) -> Rational {
        let cubic = resolvent(self);
        &cubic.s1 * &cubic.s1 - rat(3) * &cubic.s2
    }

    /// Special curves (more than one Ciani subgroup) are exactly those with `Q = 0`.
    pub fn is_special(&self) -> Result<bool> {
        if self.is_singular() {
            return Err(Error::Singular);
        }
        Ok(self.q_invariant().is_zero())
    }

    /// Whether both tuples define the same point of `P(1,1,1,2)`.
    ///
    /// Only tuples with `I3 ≠ 0` are supported, which covers every smooth
    /// input.
    pub fn projectively_equal(&self, other: &CianiTuple) -> Result<bool> {
        if self.i3.is_zero() || other.i3.is_zero() {
            return Err(Error::VanishingI3);
        }
        let lambda = &other.i3 / &self.i3;
        Ok(self.weighted_scale(&lambda) == *other)
    }

    /// Normalises the tuple at `p`.
    pub fn normalize_at(&self, p: u64) -> Result<NormalizedProfile> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if self.is_zero() {
            return Err(Error::ZeroTuple);
        }
        let raw = self.to_array().map(|x| ext_valuation(&x, p));
        let half = Rational::new(1.into(), 2.into());
        let shift = [
            raw[0].clone(),
            raw[1].clone(),
            raw[2].clone(),
            raw[3].scale(&half),
        ]
        .into_iter()
        .min()
        .and_then(|m| m.finite().cloned())
        .expect("nonzero tuple has a finite valuation");
        let valuations = [
            raw[0].shift(&-&shift),
            raw[1].shift(&-&shift),
            raw[2].shift(&-&shift),
            raw[3].shift(&(-&shift * rat(2))),
        ];
        let integral = shift.is_integer();
        let tuple = integral.then(|| {
            let m: i64 = shift.to_integer().try_into().expect("valuation fits in i64");
            self.weighted_scale(&prime_power(p, -m))
        });
        Ok(NormalizedProfile {
            p,
            shift,
            valuations,
            integral,
            tuple,
        })
    }
}

impl Serialize for CianiTuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rationals(&self.to_array(), s)
    }
}

impl<'de> Deserialize<'de> for CianiTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = deserialize_rationals(d)?;
        CianiTuple::from_slice(&v).map_err(serde::de::Error::custom)
    }
}

/// Valuations of a tuple after weighted normalisation at `p`.
///
/// `shift` is `m = min(ν(I3), ν(I3'), ν(I3''), ν(I6)/2)`; the normalised
/// tuple is only available over the rationals when `m` is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedProfile {
    pub p: u64,
    pub shift: Rational,
    pub valuations: [ExtValuation; 4],
    pub integral: bool,
    pub tuple: Option<CianiTuple>,
}

impl NormalizedProfile {
    /// `ν(Δ)` of the normalised tuple, `ν(2²⁰) + ν(I3) + 4ν(I3'') + 2ν(I6)`.
    pub fn discriminant_valuation(&self) -> ExtValuation {
        let [v3, _, v3pp, v6] = &self.valuations;
        let two = valuation(&rat(2), self.p).unwrap_or(0) * 20;
        v3.shift(&rat(two)) + v3pp.scale(&rat(4)) + v6.scale(&rat(2))
    }

    /// Rescales a valuation of a weight-`w` invariant built from the original
    /// tuple to the normalised tuple.
    pub fn normalize_valuation(&self, v: &ExtValuation, weight: i64) -> ExtValuation {
        v.shift(&(-&self.shift * rat(weight)))
    }

    pub fn min_weighted_valuation(&self) -> ExtValuation {
        let half = Rational::one() / rat(2);
        let [a, b, c, d] = self.valuations.clone();
        [a, b, c, d.scale(&half)].into_iter().min().unwrap()
    }
}
