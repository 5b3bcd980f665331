//! Truncated exponential power series `f(t) = Σ_{n≥1} f_n tⁿ/n!` with no
//! constant term: composition, Lagrange reversion and the analyticity bound.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::partitions::bell_table;

/// Coefficients `f_1, …, f_N` in exponential normalization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExpSeries {
    coeffs: Vec<Rational>,
}

impl ExpSeries {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("a series needs order >= 1"));
        }
        Ok(ExpSeries { coeffs })
    }

    /// `t`, truncated at `order`.
    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order.max(1)];
        coeffs[0] = Rational::one();
        ExpSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `f_n`, one-based.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n - 1]
    }

    /// Tangent to the identity: `f_1 = 1`.
    pub fn is_unital(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub fn truncate(&self, order: usize) -> ExpSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(1), Rational::zero());
        ExpSeries { coeffs }
    }

    fn check_same_order(&self, other: &ExpSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for ExpSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "ExpSeries[{}]", c.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct ExpSeriesWire {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for ExpSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpSeriesWire {
            order: self.order(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExpSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ExpSeriesWire::deserialize(d)?;
        if wire.order == 0 {
            return Err(D::Error::custom(Error::parse("order", "must be >= 1")));
        }
        if wire.coeffs.len() > wire.order {
            return Err(D::Error::custom(Error::parse(
                "coeffs",
                format!("{} coefficients for order {}", wire.coeffs.len(), wire.order),
            )));
        }
        let mut coeffs = Vec::with_capacity(wire.order);
        for (i, c) in wire.coeffs.iter().enumerate() {
            let r = parse_rational(c)
                .map_err(|e| D::Error::custom(Error::parse(format!("coeffs[{i}]"), e.to_string())))?;
            coeffs.push(r);
        }
        coeffs.resize(wire.order, Rational::zero());
        Ok(ExpSeries { coeffs })
    }
}

/// `f ∘ g` via `h_n = Σ_k f_k B_{n,k}(g_1, …, g_{n+1-k})`.
pub fn compose(f: &ExpSeries, g: &ExpSeries) -> Result<ExpSeries> {
    f.check_same_order(g)?;
    let order = f.order();
    let bell = bell_table(order, g.coeffs());
    let coeffs = (1..=order)
        .map(|n| {
            (1..=n)
                .filter(|&k| !f.coeff(k).is_zero())
                .map(|k| f.coeff(k) * &bell[n][k])
                .sum()
        })
        .collect();
    Ok(ExpSeries { coeffs })
}

/// `f ∘ g` by direct truncated substitution with Cauchy products, no Bell polynomials.
pub fn compose_oracle(f: &ExpSeries, g: &ExpSeries) -> Result<ExpSeries> {
    f.check_same_order(g)?;
    let order = f.order();
    // ordinary coefficients, index 0..=order
    let to_ordinary = |s: &ExpSeries| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            v[n] = s.coeff(n) / Rational::from_integer(factorial(n as u32));
        }
        v
    };
    let fo = to_ordinary(f);
    let go = to_ordinary(g);
    let mut power = vec![Rational::zero(); order + 1];
    power[0] = Rational::one();
    let mut h = vec![Rational::zero(); order + 1];
    for k in 1..=order {
        let mut next = vec![Rational::zero(); order + 1];
        for (i, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for j in 1..=(order - i) {
                next[i + j] += p * &go[j];
            }
        }
        power = next;
        for n in 0..=order {
            h[n] += &fo[k] * &power[n];
        }
    }
    let coeffs = (1..=order)
        .map(|n| &h[n] * Rational::from_integer(factorial(n as u32)))
        .collect();
    Ok(ExpSeries { coeffs })
}

/// Compositional inverse of a unital series by Lagrange reversion,
/// `g_n = Σ_{k=1}^{n-1} (-1)^k B_{n-1+k,k}(0, f_2, f_3, …)`.
pub fn revert(f: &ExpSeries) -> Result<ExpSeries> {
    if !f.is_unital() {
        return Err(Error::NotUnital(format_rational(f.coeff(1))));
    }
    let order = f.order();
    let mut args = f.coeffs().to_vec();
    args[0] = Rational::zero();
    let bell = bell_table(2 * order, &args);
    let mut coeffs = vec![Rational::one()];
    for n in 2..=order {
        let mut g = Rational::zero();
        for k in 1..n {
            let b = &bell[n - 1 + k][k];
            if k % 2 == 0 {
                g += b;
            } else {
                g -= b;
            }
        }
        coeffs.push(g);
    }
    Ok(ExpSeries { coeffs })
}

/// `E·n!/Fⁿ` with `E = AC/(A+D)`, `F = BD/(A+D)`: the coefficient bound for
/// `f ∘ g` when `|g_m| ≤ A·m!/Bᵐ` and `|f_k| ≤ C·k!/Dᵏ`.
pub fn majorant_bound(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    n: usize,
) -> Result<Rational> {
    if [a, b, c, d].iter().any(|x| *x <= &Rational::zero()) {
        return Err(Error::domain("majorant constants must be positive"));
    }
    let e = a * c / (a + d);
    let f = b * d / (a + d);
    Ok(e * Rational::from_integer(factorial(n as u32)) / num_traits::pow(f, n))
}
