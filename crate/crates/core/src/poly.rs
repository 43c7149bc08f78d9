//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and otherwise has a nonzero last entry.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{is_prime, Rational};
use crate::fp::{good_reduction, FpPoly};
use crate::padic::hensel_lift;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `a + b·T`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&(Rational::one() / lc)),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].clone() / &lc;
            let shift = top - dd;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(shift + factor·T)`.
    pub fn compose_affine(&self, shift: &Rational, factor: &Rational) -> RatPoly {
        let lin = RatPoly::linear(shift.clone(), factor.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(RatPoly::zero(), |acc, c| &(&acc * &lin) + &RatPoly::constant(c.clone()))
    }
}

impl RatPoly {
    /// Distinct rational roots, ascending.
    ///
    /// The squarefree part is made monic with integer coefficients, its roots
    /// modulo a small prime of good reduction are lifted `ℓ`-adically past the
    /// Cauchy bound, and each lift is confirmed by exact evaluation.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let mut sf = self.div_rem(&self.gcd(&self.derivative())).0.monic();
        let mut roots = Vec::new();
        if sf.coeff(0).is_zero() {
            roots.push(Rational::zero());
            sf = RatPoly::new(sf.coeffs[1..].to_vec());
        }
        let n = sf.degree().unwrap();
        if n > 0 {
            // T = U / d turns sf into a monic integer polynomial h(U)
            let d = sf
                .coeffs
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let h: Vec<BigInt> = (0..=n)
                .map(|i| (sf.coeff(i) * Rational::from_integer(d.pow((n - i) as u32))).to_integer())
                .collect();
            let bound = h[..n].iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
            let ell = (5u64..)
                .find(|&l| is_prime(l) && good_reduction(&h, l))
                .unwrap();
            let ell_big = BigInt::from(ell);
            let mut precision = 1u32;
            while ell_big.pow(precision) <= &bound * 2 {
                precision += 1;
            }
            let modulus = ell_big.pow(precision);
            let half = &modulus / 2;
            for r0 in FpPoly::from_ints(ell, &h).roots() {
                let mut r = hensel_lift(&h, r0, ell, precision).expect("simple root mod a good prime");
                if r > half {
                    r -= &modulus;
                }
                let u = Rational::from_integer(r);
                let hu = h.iter().rev().fold(Rational::zero(), |acc, c| acc * &u + Rational::from_integer(c.clone()));
                if hu.is_zero() {
                    roots.push(u / Rational::from_integer(d.clone()));
                }
            }
        }
        roots.sort();
        roots
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn poly(c: &[i64]) -> RatPoly {
        RatPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (T-1)^2 (T+2) and its derivative share T-1
        let f = poly(&[2, -3, 0, 1]);
        let g = f.gcd(&f.derivative());
        assert_eq!(g, poly(&[-1, 1]));
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, poly(&[-2, 1, 1]));
    }

    #[test]
    fn affine_substitution() {
        let f = poly(&[-1, 8, -6, 1]);
        let g = f.compose_affine(&rat(2), &ratio(1, 3));
        for x in -3..4 {
            let x = rat(x);
            assert_eq!(g.eval(&x), f.eval(&(rat(2) + &x * ratio(1, 3))));
        }
    }

    #[test]
    fn rational_root_finding() {
        // 6(T − 1/2)(T + 2/3)(T − 5)
        let f = &(&poly(&[-1, 2]) * &poly(&[2, 3])) * &poly(&[-5, 1]);
        assert_eq!(f.rational_roots(), vec![ratio(-2, 3), ratio(1, 2), rat(5)]);
        // T(T − 1)²(T² + 1): repeated and irrational roots
        let g = &(&poly(&[0, 1]) * &poly(&[1, -2, 1])) * &poly(&[1, 0, 1]);
        assert_eq!(g.rational_roots(), vec![rat(0), rat(1)]);
        assert!(poly(&[-2, 0, 1]).rational_roots().is_empty());
        assert!(poly(&[7]).rational_roots().is_empty());
        // large roots need several lifting steps
        let big = &poly(&[-1_000_003, 1]) * &poly(&[999_983, 1]);
        assert_eq!(big.rational_roots(), vec![rat(-999_983), rat(1_000_003)]);
    }

    #[test]
    fn trimming() {
        assert_eq!(poly(&[1, 0, 0]).degree(), Some(0));
        assert!(poly(&[0, 0]).is_zero());
    }
}
