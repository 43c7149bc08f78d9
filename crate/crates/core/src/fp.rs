//! Polynomials over a prime field `F_p`, for `p` below 2⁶⁴.
//!
//! Only what the root-finding code needs: reduction of integer and
//! `p`-integral rational polynomials, gcds and distinct roots in `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{mul_mod, pow_mod, Rational};

/// Coefficients in ascending order, reduced mod `p` and trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

fn reduce_int(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub(crate) fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub(crate) fn from_ints(p: u64, coeffs: &[BigInt]) -> Self {
        Self::new(p, coeffs.iter().map(|n| reduce_int(n, p)).collect())
    }

    /// Reduces a polynomial whose coefficients have non-negative valuation.
    pub(crate) fn from_rationals(p: u64, coeffs: &[Rational]) -> Self {
        let c = coeffs
            .iter()
            .map(|q| {
                let d = reduce_int(q.denom(), p);
                assert!(d != 0, "coefficient is not p-integral");
                mul_mod(reduce_int(q.numer(), p), inv(d, p), p)
            })
            .collect();
        Self::new(p, c)
    }

    #[cfg(test)]
    fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub(crate) fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
            .collect();
        Self::new(self.p, c)
    }

    fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let k = inv(lc, self.p);
                Self::new(self.p, self.c.iter().map(|&x| mul_mod(x, k, self.p)).collect())
            }
        }
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = other.c.get(i).copied().unwrap_or(0);
                add_mod(a, self.p - b, self.p)
            })
            .collect();
        Self::new(self.p, c)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut c = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = add_mod(c[i + j], mul_mod(a, b, self.p), self.p);
            }
        }
        Self::new(self.p, c)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let k = inv(*d.c.last().unwrap(), self.p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = mul_mod(r[top], k, self.p);
            let s = top - dd;
            for (i, &dc) in d.c.iter().enumerate() {
                r[s + i] = add_mod(r[s + i], self.p - mul_mod(f, dc, self.p), self.p);
            }
            q[s] = f;
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub(crate) fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `base^e mod self`.
    fn pow_mod(&self, base: &Self, mut e: u64) -> Self {
        let mut acc = Self::new(self.p, vec![1]).rem(self);
        let mut b = base.rem(self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(self);
            }
            b = b.mul(&b).rem(self);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p`, ascending.
    pub(crate) fn roots(&self) -> Vec<u64> {
        let p = self.p;
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        if p < 64 {
            return (0..p).filter(|&x| self.eval(x) == 0).collect();
        }
        let x = Self::new(p, vec![0, 1]);
        // product of the distinct linear factors: gcd(f, x^p − x)
        let g = self.monic().gcd(&self.pow_mod(&x, p).sub(&x));
        let mut out = Vec::new();
        split_linear(&g, &mut out);
        out.sort_unstable();
        out
    }
}

/// Splits a squarefree product of distinct linear factors.
fn split_linear(g: &FpPoly, out: &mut Vec<u64>) {
    let p = g.p;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(mul_mod(p - g.c[0], inv(g.c[1], p), p)),
        Some(d) => {
            let half = (p - 1) / 2;
            for a in 0..p {
                let shifted = FpPoly::new(p, vec![a, 1]);
                let h = g.gcd(&g.pow_mod(&shifted, half).sub(&FpPoly::new(p, vec![1])));
                let dh = h.degree().unwrap_or(0);
                if dh > 0 && dh < d {
                    let (q, _) = g.div_rem(&h);
                    split_linear(&h, out);
                    split_linear(&q.monic(), out);
                    return;
                }
            }
            unreachable!("no splitting shift found for a product of linear factors");
        }
    }
}

/// Whether an integer polynomial stays squarefree of the same degree mod `p`.
pub(crate) fn good_reduction(coeffs: &[BigInt], p: u64) -> bool {
    let lead = coeffs.last().is_none_or(|c| reduce_int(c, p) == 0);
    !lead && !coeffs.iter().all(Zero::is_zero) && FpPoly::from_ints(p, coeffs).is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn roots_small_and_large_primes() {
        // (T − 1)(T − 2) = T² − 3T + 2 over F_5
        let f = FpPoly::new(5, vec![2, 2, 1]);
        assert_eq!(f.roots(), vec![1, 2]);
        assert_eq!(FpPoly::new(5, vec![3, 1]).roots(), vec![2]);

        let p = 1_000_000_007;
        // (T − 3)(T − 10)(T − 99)
        let f = FpPoly::new(p, vec![p - 2970, 3 * 10 + 3 * 99 + 10 * 99, p - 112, 1]);
        assert_eq!(f.roots(), vec![3, 10, 99]);
        // T² + 1 has no root when p ≡ 3 mod 4
        let g = FpPoly::new(1_000_000_007, vec![1, 0, 1]);
        assert!(g.roots().is_empty());
    }

    #[test]
    fn squarefree_and_rational_reduction() {
        let f = FpPoly::from_rationals(7, &[ratio(1, 2), ratio(0, 1), ratio(3, 1)]);
        assert_eq!(f.coeffs(), &[4, 0, 3]);
        let sq = FpPoly::new(7, vec![1, 2, 1]);
        assert!(!sq.is_squarefree());
        assert!(f.is_squarefree());
    }
}
