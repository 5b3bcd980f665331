//! The graded dual: functionals on the monomial basis, multiplied by
//! `⟨φψ, p⟩ = ⟨φ ⊗ ψ, Δp⟩`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, factorial, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::hopf::{a_monomials_of_degree, coproduct_poly_truncated};
use crate::limits::{self, Limits};
use crate::poly::{Family, FactorWire, Generator, Monomial, Polynomial, TensorElement};

/// A finite combination of dual-basis elements `M'`, where `⟨M', N⟩ = [M = N]`
/// for monomials `M`, `N` of one family.
#[derive(Clone, PartialEq, Eq)]
pub struct DualFunctional {
    family: Family,
    terms: BTreeMap<Monomial, Rational>,
}

impl DualFunctional {
    pub fn zero(family: Family) -> Self {
        DualFunctional {
            family,
            terms: BTreeMap::new(),
        }
    }

    /// The counit `1'`, unit of the dual algebra.
    pub fn unit(family: Family) -> Self {
        DualFunctional::basis(family, Monomial::one())
    }

    /// `M'` for a monomial `M`.
    pub fn basis(family: Family, m: Monomial) -> Self {
        let mut d = DualFunctional::zero(family);
        d.add_term(m, Rational::one());
        d
    }

    /// `a'_n`.
    pub fn a_prime(n: u32) -> Result<Self> {
        Ok(DualFunctional::basis(Family::A, Monomial::generator(Generator::a(n)?)))
    }

    /// `b'_n = (n+1)! a'_{n+1}`.
    pub fn b_prime(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("b'_n is defined for n >= 1"));
        }
        Ok(DualFunctional::a_prime(n + 1)?.scale(&Rational::from_integer(factorial(n + 1))))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = DualFunctional::zero(self.family);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|m| m.degree()).collect()
    }

    fn component(&self, d: usize) -> DualFunctional {
        DualFunctional {
            family: self.family,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_family(&self, other: Option<Family>) -> Result<()> {
        match other {
            Some(f) if f != self.family => Err(Error::FamilyMismatch {
                left: self.family.to_string(),
                right: f.to_string(),
            }),
            _ => Ok(()),
        }
    }

    /// `⟨φ, p⟩`.
    pub fn pair(&self, p: &Polynomial) -> Result<Rational> {
        self.check_family(p.family())?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| c * p.coefficient(m))
            .sum())
    }

    /// `⟨φ ⊗ ψ, t⟩`.
    pub fn pair_tensor(&self, other: &DualFunctional, t: &TensorElement) -> Rational {
        t.terms()
            .map(|(l, r, c)| c * self.coefficient(l) * other.coefficient(r))
            .sum()
    }

    /// Product in the dual, evaluated on every monomial of the relevant degrees.
    pub fn mul(&self, other: &DualFunctional) -> Result<DualFunctional> {
        self.mul_with(other, Limits::global())
    }

    pub fn mul_with(&self, other: &DualFunctional, limits: &Limits) -> Result<DualFunctional> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch {
                left: self.family.to_string(),
                right: other.family.to_string(),
            });
        }
        if self.family != Family::A {
            return Err(Error::domain("dual products are implemented on the a-basis only"));
        }
        let mut out = DualFunctional::zero(self.family);
        for i in self.degrees() {
            let left = self.component(i);
            for j in other.degrees() {
                limits::check("dual grade", i + j, limits.dual_grade)?;
                let right = other.component(j);
                for m in a_monomials_of_degree(i + j) {
                    let delta = coproduct_poly_truncated(&Polynomial::monomial(m.clone()), i, j)?;
                    out.add_term(m, left.pair_tensor(&right, &delta));
                }
            }
        }
        Ok(out)
    }

    /// `φψ − ψφ`.
    pub fn commutator(&self, other: &DualFunctional) -> Result<DualFunctional> {
        Ok(self.mul(other)? - other.mul(self)?)
    }
}

impl Add for DualFunctional {
    type Output = DualFunctional;
    fn add(mut self, rhs: DualFunctional) -> DualFunctional {
        assert_eq!(self.family, rhs.family, "dual functionals of different families");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for DualFunctional {
    type Output = DualFunctional;
    fn sub(self, rhs: DualFunctional) -> DualFunctional {
        self + rhs.scale(&-Rational::one())
    }
}

impl fmt::Debug for DualFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DualFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let body = match m.as_generator() {
                Some(g) => format!("{g}'"),
                None => format!("({m})'"),
            };
            let sign = if c < &Rational::zero() { "-" } else { "+" };
            let abs = if c < &Rational::zero() { -c.clone() } else { c.clone() };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if abs.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{} {body}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DualTermWire {
    coeff: String,
    dual_of: Vec<FactorWire>,
}

impl Serialize for DualFunctional {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(m, c)| DualTermWire {
                coeff: format_rational(c),
                dual_of: m.to_wire(),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DualFunctional {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = Vec::<DualTermWire>::deserialize(d)?;
        let mut out: Option<DualFunctional> = None;
        for t in wire {
            let m = Monomial::from_wire(&t.dual_of).map_err(D::Error::custom)?;
            let c = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            let fam = m.family().unwrap_or(Family::A);
            let acc = out.get_or_insert_with(|| DualFunctional::zero(fam));
            if m.family().is_some_and(|f| f != acc.family) {
                return Err(D::Error::custom("dual functional mixes families"));
            }
            acc.add_term(m, c);
        }
        Ok(out.unwrap_or_else(|| DualFunctional::zero(Family::A)))
    }
}

/// `a'_n a'_m`, computed from the coproduct.
pub fn dual_product(n: u32, m: u32) -> Result<DualFunctional> {
    DualFunctional::a_prime(n)?.mul(&DualFunctional::a_prime(m)?)
}

/// `C(m-1+n, n) a'_{n+m-1} + (1 + [n = m]) (a_n a_m)'`.
pub fn dual_product_formula(n: u32, m: u32) -> Result<DualFunctional> {
    let first = DualFunctional::a_prime(n + m - 1)?
        .scale(&Rational::from_integer(binomial((m - 1 + n) as i64, n as i64)));
    let pair = Monomial::from_factors([(Generator::a(n)?, 1), (Generator::a(m)?, 1)])?;
    let mult = if n == m { 2 } else { 1 };
    Ok(first + DualFunctional::basis(Family::A, pair).scale(&Rational::from_integer(mult.into())))
}

/// `[b'_n, b'_m]`, computed from the coproduct.
pub fn b_bracket(n: u32, m: u32) -> Result<DualFunctional> {
    DualFunctional::b_prime(n)?.commutator(&DualFunctional::b_prime(m)?)
}
