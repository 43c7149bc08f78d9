//! Ternary quartic forms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{
    deserialize_rationals, format_rational, serialize_rationals, valuation, Rational, Ring,
};
use crate::invariants::StandardModel;

/// Exponents `(i, j, k)` of `xⁱ yʲ zᵏ`, in the coefficient order of
/// [`TernaryQuartic`].
pub const QUARTIC_MONOMIALS: [[u8; 3]; 15] = [
    [4, 0, 0],
    [3, 1, 0],
    [3, 0, 1],
    [2, 2, 0],
    [2, 1, 1],
    [2, 0, 2],
    [1, 3, 0],
    [1, 2, 1],
    [1, 1, 2],
    [1, 0, 3],
    [0, 4, 0],
    [0, 3, 1],
    [0, 2, 2],
    [0, 1, 3],
    [0, 0, 4],
];

fn monomial_index(e: [u8; 3]) -> usize {
    QUARTIC_MONOMIALS
        .iter()
        .position(|m| *m == e)
        .expect("exponent of a quartic monomial")
}

/// A quartic form with rational coefficients, ordered as
/// `x⁴, x³y, x³z, x²y², x²yz, x²z², xy³, xy²z, xyz², xz³, y⁴, y³z, y²z², yz³, z⁴`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryQuartic {
    coeffs: [Rational; 15],
}

impl TernaryQuartic {
    pub fn new(coeffs: [Rational; 15]) -> Self {
        TernaryQuartic { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; 15] {
        &self.coeffs
    }

    pub fn coeff(&self, exps: [u8; 3]) -> &Rational {
        &self.coeffs[monomial_index(exps)]
    }

    pub fn from_standard(m: &StandardModel) -> Self {
        let [big_a, big_b, big_c, a, b, c] = m.coeffs().clone();
        let mut coeffs: [Rational; 15] = Default::default();
        for (e, v) in [
            ([4, 0, 0], big_a),
            ([0, 4, 0], big_b),
            ([0, 0, 4], big_c),
            ([0, 2, 2], a),
            ([2, 0, 2], b),
            ([2, 2, 0], c),
        ] {
            coeffs[monomial_index(e)] = v;
        }
        Self::new(coeffs)
    }

    /// The diagonal coefficients, if every other coefficient vanishes.
    pub fn as_standard(&self) -> Option<StandardModel> {
        let diag = [[4, 0, 0], [0, 4, 0], [0, 0, 4], [0, 2, 2], [2, 0, 2], [2, 2, 0]];
        let off_diagonal_zero = QUARTIC_MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .all(|(e, c)| diag.contains(e) || c.is_zero());
        off_diagonal_zero.then(|| StandardModel::new(diag.map(|e| self.coeff(e).clone())))
    }

    pub fn eval(&self, v: &[Rational; 3]) -> Rational {
        QUARTIC_MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| {
                let mut t = c.clone();
                for (x, &k) in v.iter().zip(e) {
                    for _ in 0..k {
                        t *= x;
                    }
                }
                t
            })
            .sum()
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.clone().map(|c| c * k))
    }

    /// Minimum `p`-adic valuation of the coefficients; `None` for the zero form.
    pub fn content_valuation(&self, p: u64) -> Option<i64> {
        self.coeffs.iter().filter_map(|c| valuation(c, p)).min()
    }

    pub fn is_integral_at(&self, p: u64) -> bool {
        self.content_valuation(p).is_none_or(|v| v >= 0)
    }
}

impl fmt::Display for TernaryQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = QUARTIC_MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let mono: Vec<String> = ["x", "y", "z"]
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                    .collect();
                format!("{}*{}", format_rational(c), mono.join("*"))
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for TernaryQuartic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rationals(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for TernaryQuartic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = deserialize_rationals(d)?;
        let coeffs: [Rational; 15] = v
            .try_into()
            .map_err(|_| serde::de::Error::custom("expected 15 coefficients"))?;
        Ok(Self::new(coeffs))
    }
}

/// A ternary form over an arbitrary ring, sparse in its monomials.
#[derive(Clone, Debug)]
pub(crate) struct Form<R> {
    terms: BTreeMap<[u8; 3], R>,
}

impl<R: Ring> Form<R> {
    fn from_terms(terms: BTreeMap<[u8; 3], R>) -> Self {
        Form { terms }
    }

    /// `l0·x + l1·y + l2·z`.
    pub(crate) fn linear(l: &[R; 3]) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in l.iter().enumerate() {
            let mut e = [0u8; 3];
            e[k] = 1;
            terms.insert(e, c.clone());
        }
        Self::from_terms(terms)
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<[u8; 3], R> = BTreeMap::new();
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let t = a.clone() * b.clone();
                let sum = match terms.remove(&e) {
                    Some(prev) => prev + t,
                    None => t,
                };
                terms.insert(e, sum);
            }
        }
        Self::from_terms(terms)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, b) in &other.terms {
            let sum = match terms.remove(e) {
                Some(prev) => prev + b.clone(),
                None => b.clone(),
            };
            terms.insert(*e, sum);
        }
        Self::from_terms(terms)
    }

    pub(crate) fn scale(&self, k: &R) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, k.clone() * c.clone()))
                .collect(),
        )
    }

    /// Descends a quartic form to the rationals, failing on the first
    /// coefficient that is not rational.
    pub(crate) fn to_rational_quartic(&self) -> Result<TernaryQuartic> {
        let mut coeffs: [Rational; 15] = Default::default();
        for (e, c) in &self.terms {
            let idx = QUARTIC_MONOMIALS
                .iter()
                .position(|m| m == e)
                .ok_or_else(|| Error::Internal(format!("monomial {e:?} in a quartic")))?;
            coeffs[idx] = c
                .as_rational()
                .ok_or(Error::NonRationalCoefficient { index: idx })?;
        }
        Ok(TernaryQuartic::new(coeffs))
    }
}

/// Expands `F(φ·v)` where `F` is the standard model with coefficients
/// `coeffs` and the rows of `phi` give the new `x, y, z`.
pub(crate) fn pull_back_standard<R: Ring>(coeffs: &[R; 6], phi: &[[R; 3]; 3]) -> Form<R> {
    let [lx, ly, lz] = phi.clone().map(|row| Form::linear(&row));
    let (x2, y2, z2) = (lx.mul(&lx), ly.mul(&ly), lz.mul(&lz));
    let [big_a, big_b, big_c, a, b, c] = coeffs;
    x2.mul(&x2)
        .scale(big_a)
        .add(&y2.mul(&y2).scale(big_b))
        .add(&z2.mul(&z2).scale(big_c))
        .add(&y2.mul(&z2).scale(a))
        .add(&x2.mul(&z2).scale(b))
        .add(&x2.mul(&y2).scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn standard_round_trip() {
        let m = StandardModel::from_ints([1, 2, 3, 4, 5, 6]);
        let q = TernaryQuartic::from_standard(&m);
        assert_eq!(q.coeff([0, 2, 2]), &rat(4));
        assert_eq!(q.as_standard(), Some(m));
        assert_eq!(
            q.to_string(),
            "1*x^4 + 6*x^2*y^2 + 5*x^2*z^2 + 2*y^4 + 4*y^2*z^2 + 3*z^4"
        );
    }

    #[test]
    fn pull_back_by_identity_and_swap() {
        let one = rat(1);
        let zero = rat(0);
        let coeffs = [1, 2, 3, 4, 5, 6].map(rat);
        let id = [
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        let q = pull_back_standard(&coeffs, &id).to_rational_quartic().unwrap();
        assert_eq!(q.as_standard(), Some(StandardModel::from_ints([1, 2, 3, 4, 5, 6])));

        // x ↦ x + y mixes monomials; check against pointwise evaluation
        let phi = [
            [one.clone(), one.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        let q = pull_back_standard(&coeffs, &phi).to_rational_quartic().unwrap();
        let base = TernaryQuartic::from_standard(&StandardModel::from_ints([1, 2, 3, 4, 5, 6]));
        for v in [[1, 2, 3], [-1, 0, 5], [2, -3, 1]] {
            let v = v.map(rat);
            let w = [&v[0] + &v[1], v[1].clone(), v[2].clone()];
            assert_eq!(q.eval(&v), base.eval(&w));
        }
        assert!(q.as_standard().is_none());
    }
}
