//! Twists of a non-special Ciani quartic over the maximal unramified
//! extension of `Q_p`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::form::TernaryQuartic;
use super::kmodel::{k_model, root_pattern, RootPattern};
use super::resolvent;
use crate::error::{Error, Result};
use crate::exactnum::{is_prime, prime_power, ratio, Rational};
use crate::invariants::{CianiTuple, StandardModel};
use crate::padic::splitting_degree_nr;

/// Formal symbols appearing in twisting matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// A primitive fourth root of unity.
    Zeta4,
    /// An element of valuation 1/2.
    Pi,
    /// An element of valuation 1/4.
    Pi1,
    RootA,
    RootB,
    RootC,
}

impl Symbol {
    /// Declared valuation; root labels have none.
    pub fn valuation(&self) -> Option<Rational> {
        match self {
            Symbol::Zeta4 => Some(Rational::zero()),
            Symbol::Pi => Some(ratio(1, 2)),
            Symbol::Pi1 => Some(ratio(1, 4)),
            Symbol::RootA | Symbol::RootB | Symbol::RootC => None,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Symbol::Zeta4 => "zeta4",
            Symbol::Pi => "pi",
            Symbol::Pi1 => "pi1",
            Symbol::RootA => "A",
            Symbol::RootB => "B",
            Symbol::RootC => "C",
        }
    }
}

/// A matrix entry: zero or a product of symbols (the empty product is 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MatrixEntry {
    Zero,
    Monomial(Vec<Symbol>),
}

impl MatrixEntry {
    fn one() -> Self {
        MatrixEntry::Monomial(vec![])
    }

    fn of(symbols: &[Symbol]) -> Self {
        MatrixEntry::Monomial(symbols.to_vec())
    }
}

impl fmt::Display for MatrixEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixEntry::Zero => f.write_str("0"),
            MatrixEntry::Monomial(s) if s.is_empty() => f.write_str("1"),
            MatrixEntry::Monomial(s) => {
                let names: Vec<&str> = s.iter().map(Symbol::name).collect();
                f.write_str(&names.join("*"))
            }
        }
    }
}

impl Serialize for MatrixEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub type TwistMatrix = [[MatrixEntry; 3]; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistDescriptor {
    pub index: usize,
    pub matrix: TwistMatrix,
    /// A `p`-primitive rational equation, when one is available exactly.
    pub equation: Option<TernaryQuartic>,
    /// Ciani invariants of `equation`.
    pub equation_invariants: Option<CianiTuple>,
}

fn diagonal(entries: [MatrixEntry; 3]) -> TwistMatrix {
    let [a, b, c] = entries;
    use MatrixEntry::Zero;
    [[a, Zero, Zero], [Zero, b, Zero], [Zero, Zero, c]]
}

/// Divides by the largest power of `p` so the coefficient content is a unit.
fn primitive(form: &TernaryQuartic, invariants: &CianiTuple, p: u64) -> (TernaryQuartic, CianiTuple) {
    let v = form.content_valuation(p).unwrap_or(0);
    let k = prime_power(p, -v);
    // scaling the form by k scales weight-1 invariants by k³
    (form.scaled(&k), invariants.weighted_scale(&(&k * &k * &k)))
}

/// The `K`-models of the curve with invariants `t`, one per twist class.
///
/// The number of classes (4, 2 or 1) is governed by the splitting degree of
/// the resolvent over the maximal unramified extension. The first descriptor
/// is always the model produced by [`k_model`].
pub fn twists(t: &CianiTuple, p: u64) -> Result<Vec<TwistDescriptor>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    if t.is_special()? {
        return Err(Error::Special);
    }
    let cubic = resolvent(t);
    let degree = splitting_degree_nr(&cubic, p)?;
    let base = k_model(t)?;
    let (base_form, base_inv) = primitive(&base.form, &base.invariants, p);
    let trivial_eq = (Some(base_form), Some(base_inv));
    let one = MatrixEntry::one;
    use MatrixEntry::Zero;
    use Symbol::*;

    let out = match degree {
        1 => {
            let standard = match root_pattern(&cubic) {
                RootPattern::Split(_) => base.form.as_standard(),
                _ => None,
            };
            let mut out = vec![TwistDescriptor {
                index: 0,
                matrix: diagonal([one(), one(), one()]),
                equation: trivial_eq.0,
                equation_invariants: trivial_eq.1,
            }];
            for k in 0..3 {
                let mut entries = [one(), one(), one()];
                entries[k] = MatrixEntry::of(&[Pi]);
                let (equation, equation_invariants) = match &standard {
                    Some(m) => {
                        let twisted = pi_twist(m, k, p);
                        let (f, i) = primitive(&TernaryQuartic::from_standard(&twisted), &twisted.invariants(), p);
                        (Some(f), Some(i))
                    }
                    None => (None, None),
                };
                out.push(TwistDescriptor {
                    index: k + 1,
                    matrix: diagonal(entries),
                    equation,
                    equation_invariants,
                });
            }
            out
        }
        2 => vec![
            TwistDescriptor {
                index: 0,
                matrix: [
                    [one(), Zero, Zero],
                    [Zero, one(), MatrixEntry::of(&[RootB])],
                    [Zero, one(), MatrixEntry::of(&[RootC])],
                ],
                equation: trivial_eq.0,
                equation_invariants: trivial_eq.1,
            },
            TwistDescriptor {
                index: 1,
                matrix: [
                    [MatrixEntry::of(&[Pi1]), Zero, Zero],
                    [Zero, one(), MatrixEntry::of(&[RootB])],
                    [Zero, MatrixEntry::of(&[Zeta4]), MatrixEntry::of(&[Zeta4, RootC])],
                ],
                equation: None,
                equation_invariants: None,
            },
        ],
        _ => vec![TwistDescriptor {
            index: 0,
            matrix: diagonal([one(), one(), one()]),
            equation: trivial_eq.0,
            equation_invariants: trivial_eq.1,
        }],
    };
    Ok(out)
}

/// Substitutes `π` (with `π² = p`) into variable `k` of a standard model and
/// divides out the resulting odd power of `π`, giving a rational representative.
fn pi_twist(m: &StandardModel, k: usize, p: u64) -> StandardModel {
    let pp = Rational::from_integer(p.into());
    let on = |touches: bool| if touches { pp.clone() } else { Rational::one() };
    let [big_a, big_b, big_c, a, b, c] = m.coeffs().clone();
    StandardModel::new([
        big_a * on(k == 0) * on(k == 0),
        big_b * on(k == 1) * on(k == 1),
        big_c * on(k == 2) * on(k == 2),
        a * on(k != 0),
        b * on(k != 1),
        c * on(k != 2),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn counts() {
        let t = CianiTuple::from_ints([1, -6, 1, 1]);
        assert_eq!(twists(&t, 5).unwrap().len(), 4);
        assert_eq!(twists(&t, 229).unwrap().len(), 2);
        assert_eq!(twists(&t, 3), Err(Error::UnsupportedPrime(3)));
        assert_eq!(
            twists(&CianiTuple::from_ints([1, -12, -4, -64]), 5),
            Err(Error::Special)
        );
    }

    #[test]
    fn degree_one_equations() {
        let m = StandardModel::from_ints([1, 1, 1, 27, 52, 77]);
        let tw = twists(&m.invariants(), 5).unwrap();
        assert_eq!(tw.len(), 4);
        let eq = tw[1].equation.as_ref().unwrap().as_standard().unwrap();
        let base = tw[0].equation.as_ref().unwrap().as_standard().unwrap();
        let [ba, bb, bc, a, b, c] = base.coeffs().clone();
        assert_eq!(eq, StandardModel::new([ba * rat(25), bb, bc, a, b * rat(5), c * rat(5)]));
        for d in &tw {
            let f = d.equation.as_ref().unwrap();
            assert!(f.is_integral_at(5));
            assert_eq!(f.content_valuation(5), Some(0));
            let inv = f.as_standard().unwrap().invariants();
            assert_eq!(Some(inv), d.equation_invariants);
        }
        assert_eq!(tw[1].matrix[0][0].to_string(), "pi");
    }

    #[test]
    fn degree_two_matrices() {
        let tw = twists(&CianiTuple::from_ints([1, -6, 1, 1]), 229).unwrap();
        assert_eq!(tw[1].matrix[2][2].to_string(), "zeta4*C");
        assert!(tw[1].equation.is_none());
        assert!(tw[0].equation.is_some());
        assert_eq!(Symbol::Pi1.valuation(), Some(ratio(1, 4)));
    }
}
