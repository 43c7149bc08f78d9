//! Exact arithmetic with the roots of the resolvent cubic.
//!
//! [`SplittingAlgebraElement`] lives in the rank-6 algebra
//! `Q[x,y] / (𝒫(x), (𝒫(y) − 𝒫(x)) / (y − x))`, in which `x`, `y` and
//! `γ = S1 − x − y` are the three roots of `𝒫`. Any symmetric expression in
//! the roots is then an element whose non-constant coordinates vanish, so
//! rationality becomes a coordinate test and no number field ever has to be
//! chosen.
//!
//! [`QuadraticAlgebraElement`] is the rank-2 analogue `Q[u] / (u² − t·u + n)`,
//! used when only a quadratic factor (or a formal square root) is involved.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, rat, Rational, Ring};
use crate::poly::RatPoly;

/// The monic cubic `T³ − S1·T² + S2·T − S3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicPoly {
    pub s1: Rational,
    pub s2: Rational,
    pub s3: Rational,
}

impl CubicPoly {
    pub fn new(s1: Rational, s2: Rational, s3: Rational) -> Self {
        CubicPoly { s1, s2, s3 }
    }

    pub fn from_ints(s1: i64, s2: i64, s3: i64) -> Self {
        Self::new(rat(s1), rat(s2), rat(s3))
    }

    /// The monic cubic whose roots are the three given values.
    pub fn with_roots(r: &[Rational; 3]) -> Self {
        Self::new(
            &r[0] + &r[1] + &r[2],
            &r[0] * &r[1] + &r[1] * &r[2] + &r[2] * &r[0],
            &r[0] * &r[1] * &r[2],
        )
    }

    pub fn eval<R: Ring>(&self, t: &R) -> R {
        let t2 = t.clone() * t.clone();
        t2.clone() * t.clone() - t.constant(&self.s1) * t2 + t.constant(&self.s2) * t.clone()
            - t.constant(&self.s3)
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(vec![-&self.s3, self.s2.clone(), -&self.s1, Rational::one()])
    }

    /// `S1²S2² − 4S2³ − 4S1³S3 + 18S1S2S3 − 27S3²`.
    pub fn discriminant(&self) -> Rational {
        let (a, b, c) = (&self.s1, &self.s2, &self.s3);
        a * a * b * b - rat(4) * b * b * b - rat(4) * a * a * a * c + rat(18) * a * b * c
            - rat(27) * c * c
    }
}

impl fmt::Display for CubicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::from("T^3");
        for (coeff, mono) in [(-&self.s1, "T^2"), (self.s2.clone(), "T"), (-&self.s3, "")] {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff < Rational::zero() { " - " } else { " + " };
            let mag = format_rational(&num_traits::Signed::abs(&coeff));
            out.push_str(sign);
            match (mag.as_str(), mono) {
                ("1", "") => out.push('1'),
                ("1", m) => out.push_str(m),
                (c, "") => out.push_str(c),
                (c, m) => {
                    out.push_str(c);
                    out.push_str(m);
                }
            }
        }
        f.write_str(&out)
    }
}

const DIM: usize = 6;

/// Handle on the splitting algebra of a fixed cubic.
#[derive(Clone, Debug)]
pub struct SplittingAlgebra {
    cubic: Arc<CubicPoly>,
}

impl SplittingAlgebra {
    pub fn new(cubic: CubicPoly) -> Self {
        SplittingAlgebra { cubic: Arc::new(cubic) }
    }

    pub fn cubic(&self) -> &CubicPoly {
        &self.cubic
    }

    pub fn element(&self, coords: [Rational; DIM]) -> SplittingAlgebraElement {
        SplittingAlgebraElement {
            cubic: self.cubic.clone(),
            coords,
        }
    }

    pub fn constant(&self, q: &Rational) -> SplittingAlgebraElement {
        let mut c: [Rational; DIM] = Default::default();
        c[0] = q.clone();
        self.element(c)
    }

    fn monomial(&self, i: usize, j: usize) -> SplittingAlgebraElement {
        let mut c: [Rational; DIM] = Default::default();
        c[i + 3 * j] = Rational::one();
        self.element(c)
    }

    pub fn x(&self) -> SplittingAlgebraElement {
        self.monomial(1, 0)
    }

    pub fn y(&self) -> SplittingAlgebraElement {
        self.monomial(0, 1)
    }

    /// The third root `S1 − x − y`.
    pub fn gamma(&self) -> SplittingAlgebraElement {
        self.constant(&self.cubic.s1) - self.x() - self.y()
    }

    pub fn roots(&self) -> [SplittingAlgebraElement; 3] {
        [self.x(), self.y(), self.gamma()]
    }
}

/// An element `Σ c[i + 3j] xⁱ yʲ` with `i ≤ 2`, `j ≤ 1`.
#[derive(Clone, Debug)]
pub struct SplittingAlgebraElement {
    cubic: Arc<CubicPoly>,
    coords: [Rational; DIM],
}

impl PartialEq for SplittingAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && same_cubic(&self.cubic, &other.cubic)
    }
}

impl Eq for SplittingAlgebraElement {}

fn same_cubic(a: &Arc<CubicPoly>, b: &Arc<CubicPoly>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl SplittingAlgebraElement {
    pub fn coords(&self) -> &[Rational; DIM] {
        &self.coords
    }

    pub fn cubic(&self) -> &CubicPoly {
        &self.cubic
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        SplittingAlgebraElement {
            cubic: self.cubic.clone(),
            coords: self.coords.clone().map(|c| c * k),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_cubic(&self.cubic, &other.cubic) {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coords = self.coords.clone();
        for (c, o) in coords.iter_mut().zip(&other.coords) {
            *c += o;
        }
        Ok(SplittingAlgebraElement {
            cubic: self.cubic.clone(),
            coords,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (s1, s2, s3) = (&self.cubic.s1, &self.cubic.s2, &self.cubic.s3);
        // t[i][j] is the coefficient of xⁱyʲ before reduction.
        let mut t: Vec<[Rational; 3]> = vec![Default::default(); 7];
        for (ia, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (ib, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                t[ia % 3 + ib % 3][ia / 3 + ib / 3] += a * b;
            }
        }
        // y² = −xy − x² + S1·x + S1·y − S2
        for i in 0..=4 {
            let c = std::mem::take(&mut t[i][2]);
            if c.is_zero() {
                continue;
            }
            t[i + 1][1] -= &c;
            t[i + 2][0] -= &c;
            t[i + 1][0] += &c * s1;
            t[i][1] += &c * s1;
            t[i][0] -= &c * s2;
        }
        // x³ = S1·x² − S2·x + S3
        for k in (3..=6).rev() {
            for j in 0..2 {
                let c = std::mem::take(&mut t[k][j]);
                if c.is_zero() {
                    continue;
                }
                t[k - 1][j] += &c * s1;
                t[k - 2][j] -= &c * s2;
                t[k - 3][j] += &c * s3;
            }
        }
        let mut coords: [Rational; DIM] = Default::default();
        for i in 0..3 {
            for j in 0..2 {
                coords[i + 3 * j] = std::mem::take(&mut t[i][j]);
            }
        }
        Ok(SplittingAlgebraElement {
            cubic: self.cubic.clone(),
            coords,
        })
    }
}

impl Add for SplittingAlgebraElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("elements of different splitting algebras")
    }
}

impl Sub for SplittingAlgebraElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("elements of different splitting algebras")
    }
}

impl Mul for SplittingAlgebraElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("elements of different splitting algebras")
    }
}

impl Neg for SplittingAlgebraElement {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Ring for SplittingAlgebraElement {
    fn constant(&self, q: &Rational) -> Self {
        let mut coords: [Rational; DIM] = Default::default();
        coords[0] = q.clone();
        SplittingAlgebraElement {
            cubic: self.cubic.clone(),
            coords,
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }
}

impl fmt::Display for SplittingAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; DIM] = ["", "x", "x^2", "y", "x*y", "x^2*y"];
        write_terms(f, self.coords.iter().zip(NAMES))
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, &'static str)>,
) -> fmt::Result {
    let mut first = true;
    for (c, name) in terms.filter(|(c, _)| !c.is_zero()) {
        let negative = c < &Rational::zero();
        let mag = format_rational(&num_traits::Signed::abs(c));
        let body = match (name, mag.as_str()) {
            ("", m) => m.to_string(),
            (n, "1") => n.to_string(),
            (n, m) => format!("{m}*{n}"),
        };
        match (first, negative) {
            (true, true) => write!(f, "-{body}")?,
            (true, false) => f.write_str(&body)?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// The quadratic `u² − trace·u + norm`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticPoly {
    pub trace: Rational,
    pub norm: Rational,
}

impl QuadraticPoly {
    pub fn new(trace: Rational, norm: Rational) -> Self {
        QuadraticPoly { trace, norm }
    }

    pub fn discriminant(&self) -> Rational {
        &self.trace * &self.trace - rat(4) * &self.norm
    }
}

#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    poly: Arc<QuadraticPoly>,
}

impl QuadraticAlgebra {
    pub fn new(poly: QuadraticPoly) -> Self {
        QuadraticAlgebra { poly: Arc::new(poly) }
    }

    /// The algebra generated by a formal square root of `d`.
    pub fn sqrt_of(d: &Rational) -> Self {
        Self::new(QuadraticPoly::new(Rational::zero(), -d))
    }

    pub fn poly(&self) -> &QuadraticPoly {
        &self.poly
    }

    pub fn element(&self, a: Rational, b: Rational) -> QuadraticAlgebraElement {
        QuadraticAlgebraElement {
            poly: self.poly.clone(),
            a,
            b,
        }
    }

    pub fn constant(&self, q: &Rational) -> QuadraticAlgebraElement {
        self.element(q.clone(), Rational::zero())
    }

    /// The generator `u`.
    pub fn generator(&self) -> QuadraticAlgebraElement {
        self.element(Rational::zero(), Rational::one())
    }

    /// `trace − u`, the other root of the defining quadratic.
    pub fn conjugate_generator(&self) -> QuadraticAlgebraElement {
        self.element(self.poly.trace.clone(), -Rational::one())
    }
}

/// `a + b·u`.
#[derive(Clone, Debug)]
pub struct QuadraticAlgebraElement {
    poly: Arc<QuadraticPoly>,
    a: Rational,
    b: Rational,
}

impl PartialEq for QuadraticAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && (Arc::ptr_eq(&self.poly, &other.poly) || self.poly == other.poly)
    }
}

impl Eq for QuadraticAlgebraElement {}

impl QuadraticAlgebraElement {
    pub fn parts(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn poly(&self) -> &QuadraticPoly {
        &self.poly
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.with(&self.a * k, &self.b * k)
    }

    fn with(&self, a: Rational, b: Rational) -> Self {
        QuadraticAlgebraElement {
            poly: self.poly.clone(),
            a,
            b,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.poly, &other.poly) || self.poly == other.poly {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        // u² = trace·u − norm
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a - &bb * &self.poly.norm;
        let b = &self.a * &other.b + &self.b * &other.a + &bb * &self.poly.trace;
        Ok(self.with(a, b))
    }
}

impl Add for QuadraticAlgebraElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("elements of different quadratic algebras")
    }
}

impl Sub for QuadraticAlgebraElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("elements of different quadratic algebras")
    }
}

impl Mul for QuadraticAlgebraElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("elements of different quadratic algebras")
    }
}

impl Neg for QuadraticAlgebraElement {
    type Output = Self;

    fn neg(self) -> Self {
        self.with(-&self.a, -&self.b)
    }
}

impl Ring for QuadraticAlgebraElement {
    fn constant(&self, q: &Rational) -> Self {
        self.with(q.clone(), Rational::zero())
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
}

impl fmt::Display for QuadraticAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, [(&self.a, ""), (&self.b, "u")].into_iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_functions_are_rational() {
        let alg = SplittingAlgebra::new(CubicPoly::from_ints(6, 8, 1));
        let [x, y, g] = alg.roots();
        let e1 = x.clone() + y.clone() + g.clone();
        let e2 = x.clone() * y.clone() + y.clone() * g.clone() + g.clone() * x.clone();
        let e3 = x.clone() * y.clone() * g.clone();
        assert_eq!(e1.as_rational(), Some(rat(6)));
        assert_eq!(e2.as_rational(), Some(rat(8)));
        assert_eq!(e3.as_rational(), Some(rat(1)));
        assert!(!x.is_rational());
        for r in [x, y, g] {
            assert_eq!(alg.cubic().eval(&r).as_rational(), Some(rat(0)));
        }
    }

    #[test]
    fn mixed_algebras_are_rejected() {
        let a = SplittingAlgebra::new(CubicPoly::from_ints(6, 8, 1)).x();
        let b = SplittingAlgebra::new(CubicPoly::from_ints(1, 0, 0)).x();
        assert_eq!(a.try_mul(&b), Err(Error::MixedAlgebras));
        assert_eq!(a.try_add(&b), Err(Error::MixedAlgebras));

        let u = QuadraticAlgebra::sqrt_of(&rat(2)).generator();
        let v = QuadraticAlgebra::sqrt_of(&rat(3)).generator();
        assert_eq!(u.try_mul(&v), Err(Error::MixedAlgebras));
    }

    #[test]
    fn quadratic_relations() {
        let alg = QuadraticAlgebra::new(QuadraticPoly::new(rat(10), rat(9)));
        let (u, v) = (alg.generator(), alg.conjugate_generator());
        assert_eq!((u.clone() + v.clone()).as_rational(), Some(rat(10)));
        assert_eq!((u.clone() * v).as_rational(), Some(rat(9)));
        let r = QuadraticAlgebra::sqrt_of(&rat(5)).generator();
        assert_eq!((r.clone() * r).as_rational(), Some(rat(5)));
        assert_eq!(format!("{u}"), "u");
    }

    #[test]
    fn display() {
        assert_eq!(CubicPoly::from_ints(6, 8, 1).to_string(), "T^3 - 6T^2 + 8T - 1");
        assert_eq!(CubicPoly::from_ints(1, 0, 0).to_string(), "T^3 - T^2");
        let alg = SplittingAlgebra::new(CubicPoly::from_ints(6, 8, 1));
        assert_eq!(alg.gamma().to_string(), "6 - x - y");
    }
}
