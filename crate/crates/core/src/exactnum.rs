//! Exact rational arithmetic, p-adic valuations and trial division.
//!
//! Every global computation in the crate happens over [`Rational`], the
//! arbitrary-precision rationals from `num-rational`. Valuations are kept as
//! exact rationals because normalising weighted invariants produces
//! half-integers and Newton polygons produce thirds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p^e` for a (possibly negative) integer exponent.
pub fn prime_power(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// Parses `"num/den"` or `"num"`, base 10. Both ASCII `-` and U+2212 are
/// accepted as the sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let cleaned: String = s.trim().replace('\u{2212}', "-");
    if cleaned.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    Rational::from_str(&cleaned).map_err(|_| Error::Parse(s.to_string()))
}

/// Parses a comma separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// Canonical text form: `"num/den"`, or `"num"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn serialize_rationals<S: Serializer>(values: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(format_rational))
}

pub(crate) fn deserialize_rationals<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
    let raw: Vec<String> = Vec::deserialize(d)?;
    raw.iter()
        .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
        .collect()
}

/// `serde(with = ...)` adapter for a single rational encoded as a string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }
}

/// A valuation in `Q ∪ {+∞}`. `Infinite` is the valuation of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtValuation {
    Finite(Rational),
    Infinite,
}

impl ExtValuation {
    pub fn int(v: i64) -> Self {
        ExtValuation::Finite(rat(v))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtValuation::Finite(v) => Some(v),
            ExtValuation::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtValuation::Infinite)
    }

    /// The value as an integer, if it is finite and integral.
    pub fn as_integer(&self) -> Option<i64> {
        self.finite()
            .filter(|v| v.is_integer())
            .and_then(|v| v.to_integer().to_i64())
    }

    /// Adds a finite rational offset; `+∞` absorbs it.
    pub fn shift(&self, by: &Rational) -> Self {
        match self {
            ExtValuation::Finite(v) => ExtValuation::Finite(v + by),
            ExtValuation::Infinite => ExtValuation::Infinite,
        }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        match self {
            ExtValuation::Finite(v) => ExtValuation::Finite(v * by),
            ExtValuation::Infinite => ExtValuation::Infinite,
        }
    }
}

impl Add for &ExtValuation {
    type Output = ExtValuation;

    fn add(self, rhs: &ExtValuation) -> ExtValuation {
        match (self, rhs) {
            (ExtValuation::Finite(a), ExtValuation::Finite(b)) => ExtValuation::Finite(a + b),
            _ => ExtValuation::Infinite,
        }
    }
}

impl Add for ExtValuation {
    type Output = ExtValuation;

    fn add(self, rhs: ExtValuation) -> ExtValuation {
        &self + &rhs
    }
}

impl PartialOrd for ExtValuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtValuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtValuation::Finite(a), ExtValuation::Finite(b)) => a.cmp(b),
            (ExtValuation::Finite(_), ExtValuation::Infinite) => Ordering::Less,
            (ExtValuation::Infinite, ExtValuation::Finite(_)) => Ordering::Greater,
            (ExtValuation::Infinite, ExtValuation::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValuation::Finite(v) => f.write_str(&format_rational(v)),
            ExtValuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtValuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtValuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        if raw == "inf" {
            return Ok(ExtValuation::Infinite);
        }
        parse_rational(&raw)
            .map(ExtValuation::Finite)
            .map_err(serde::de::Error::custom)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exponent of `p` in a nonzero integer. `p` must be at least 2.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Valuation of a rational at `p` without checking primality; `None` for 0.
pub(crate) fn valuation(q: &Rational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64)
}

pub(crate) fn ext_valuation(q: &Rational, p: u64) -> ExtValuation {
    match valuation(q, p) {
        Some(v) => ExtValuation::int(v),
        None => ExtValuation::Infinite,
    }
}

/// The `p`-adic valuation of `q`, normalised by `val_p(p) = 1`.
pub fn val_p(q: &Rational, p: u64) -> Result<ExtValuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(ext_valuation(q, p))
}

/// Divides out every prime up to `bound` from `|n|`.
///
/// Returns the prime powers found (ascending) and the remaining cofactor,
/// which has no prime factor `<= bound`. `n` must be nonzero.
pub fn trial_factor(n: &BigInt, bound: u64) -> (Vec<(u64, u32)>, BigUint) {
    assert!(!n.is_zero(), "trial_factor of zero");
    let mut rest = n.magnitude().clone();
    let mut found = Vec::new();
    let mut d: u64 = 2;
    while d <= bound {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            found.push((d, e));
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    // Whatever survives the loop is 1, a prime, or has all factors > d.
    if !rest.is_one() {
        if let Some(r) = rest.to_u64() {
            if r <= bound && is_prime(r) {
                found.push((r, 1));
                found.sort_unstable();
                rest = BigUint::one();
            }
        }
    }
    (found, rest)
}

/// Commutative ring interface used to evaluate invariant formulas and
/// ternary forms over rationals and over the splitting algebras.
pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Embeds a rational constant into the ring `self` belongs to.
    fn constant(&self, q: &Rational) -> Self;

    fn constant_int(&self, n: i64) -> Self {
        self.constant(&rat(n))
    }

    fn zero_like(&self) -> Self {
        self.constant_int(0)
    }

    fn one_like(&self) -> Self {
        self.constant_int(1)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// The element as a rational, if it lies in the base field.
    fn as_rational(&self) -> Option<Rational>;
}

impl Ring for Rational {
    fn constant(&self, q: &Rational) -> Self {
        q.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Integer square root of a rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
