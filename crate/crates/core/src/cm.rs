//! Connes–Moscovici coordinates `δ_n(f) = [log f'(t)]^{(n)}(0)`.
//!
//! `Δδ_n` is available three ways: transport through the `a` coordinates
//! ([`coproduct_delta`]), the bilinear part alone ([`bilinear_part`]), and
//! the closed sum over compositions weighted by [`k_coefficient`]
//! ([`coproduct_delta_closed`]).

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::hopf::coproduct_poly;
use crate::limits::{self, Limits};
use crate::partitions::bell_partial_at;
use crate::poly::{Generator, Monomial, Polynomial, TensorElement};

/// A composition `n̄ = (n_1, …, n_r)` of its weight `n_1 + ⋯ + n_r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionVector(Vec<u32>);

impl CompositionVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(Error::domain("composition entries must be positive and nonempty"));
        }
        Ok(CompositionVector(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Member of `N_n`.
    pub fn in_n(&self, n: u32) -> bool {
        self.weight() == n
    }

    /// Member of `N'_n`: weight `n` and at least two parts.
    pub fn in_n_prime(&self, n: u32) -> bool {
        self.in_n(n) && self.len() > 1
    }
}

impl fmt::Debug for CompositionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Every composition of `n`, in lexicographic order.
pub fn compositions(n: u32) -> Vec<CompositionVector> {
    fn go(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<CompositionVector>) {
        if rest == 0 {
            out.push(CompositionVector(cur.clone()));
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            go(rest - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

fn check_positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("coordinates are indexed from 1"));
    }
    Ok(())
}

/// `δ_n = Σ_k (-1)^{k-1} (k-1)! B_{n,k}(a_2, …, a_{n+2-k})`.
pub fn delta_in_a(n: u32) -> Result<Polynomial> {
    check_positive(n)?;
    let args: Vec<Polynomial> = (2..=n + 1).map(|i| Polynomial::generator(Generator::A(i))).collect();
    let mut out = Polynomial::zero();
    for k in 1..=n as usize {
        let mut c = Rational::from_integer(factorial(k as u32 - 1));
        if k % 2 == 0 {
            c = -c;
        }
        out = out + bell_partial_at(n as usize, k, &args)?.scale(&c);
    }
    Ok(out)
}

/// `a_{n+1} = Σ_k B_{n,k}(δ_1, …, δ_{n+1-k})`.
pub fn a_in_delta(n: u32) -> Result<Polynomial> {
    check_positive(n)?;
    let args: Vec<Polynomial> = (1..=n).map(|i| Polynomial::generator(Generator::Delta(i))).collect();
    let mut out = Polynomial::zero();
    for k in 1..=n as usize {
        out = out + bell_partial_at(n as usize, k, &args)?;
    }
    Ok(out)
}

/// Rewrites a polynomial in the `a` family in terms of the `δ_n`.
pub fn a_to_delta(p: &Polynomial) -> Result<Polynomial> {
    p.substitute_with(|g| match g {
        Generator::A(m) => a_in_delta(m - 1),
        other => Err(Error::domain(format!("expected an a-generator, got {other}"))),
    })
}

/// Rewrites a polynomial in the `δ` family in terms of the `a_n`.
pub fn delta_to_a(p: &Polynomial) -> Result<Polynomial> {
    p.substitute_with(|g| match g {
        Generator::Delta(m) => delta_in_a(*m),
        other => Err(Error::domain(format!("expected a δ-generator, got {other}"))),
    })
}

/// Which computation of `Δδ_n` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaRoute {
    /// `δ_n → a`, apply `Δ`, map both legs back to `δ`.
    Substitution,
    /// Sum over `N'_n` with the `K` coefficients.
    Closed,
}

impl FromStr for DeltaRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subst" | "substitution" => Ok(DeltaRoute::Substitution),
            "closed" => Ok(DeltaRoute::Closed),
            _ => Err(Error::parse("route", format!("unknown route {s:?} (subst|closed)"))),
        }
    }
}

pub fn coproduct_delta_by(n: u32, route: DeltaRoute) -> Result<TensorElement> {
    match route {
        DeltaRoute::Substitution => coproduct_delta(n),
        DeltaRoute::Closed => coproduct_delta_closed(n),
    }
}

/// `Δδ_n` by transport through the `a` coordinates.
pub fn coproduct_delta(n: u32) -> Result<TensorElement> {
    coproduct_delta_with(n, Limits::global())
}

pub fn coproduct_delta_with(n: u32, limits: &Limits) -> Result<TensorElement> {
    check_positive(n)?;
    limits::check("δ coproduct index n", n as usize, limits.delta)?;
    let in_a = delta_in_a(n)?;
    let back = |m: &Monomial| a_to_delta(&Polynomial::monomial(m.clone()));
    coproduct_poly(&in_a)?.map_legs(back, back)
}

/// `B(δ_n) = Σ_{i=1}^{n-1} C(n, i-1) δ_{n-i} ⊗ δ_i`, zero for `n < 2`.
pub fn bilinear_part(n: u32) -> TensorElement {
    let mut out = TensorElement::zero();
    for i in 1..n {
        out.add_term(
            Monomial::generator(Generator::Delta(n - i)),
            Monomial::generator(Generator::Delta(i)),
            Rational::from_integer(binomial(n as i64, i as i64 - 1)),
        );
    }
    out
}

/// The generator ⊗ generator part of a tensor.
pub fn bilinear_component(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (l, r, c) in t.terms() {
        if l.as_generator().is_some() && r.as_generator().is_some() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
    }
    out
}

/// `K_{n_r}^{n_1,…,n_{r-1}}`.
///
/// The inner sum runs over the ways of cutting `(n_1, …, n_{r-1})` into `k`
/// consecutive nonempty segments; a segment of length `ρ` and entry sum `s`
/// contributes `1/(ρ!·(1+s))`.
pub fn k_coefficient(nbar: &CompositionVector) -> Result<Rational> {
    let r = nbar.len();
    if r < 2 {
        return Err(Error::domain("K needs a composition with at least two parts"));
    }
    let head = &nbar.entries()[..r - 1];
    let last = nbar.entries()[r - 1] as i64;
    let mut total = Rational::zero();
    for cut in compositions(head.len() as u32) {
        let k = cut.len() as i64;
        let b = binomial(last, k);
        if b.is_zero() {
            continue;
        }
        let mut term = Rational::from_integer(b);
        let mut start = 0usize;
        for &len in cut.entries() {
            let seg = &head[start..start + len as usize];
            let s: u32 = seg.iter().sum();
            term /= Rational::from_integer(factorial(len) * (1 + s));
            start += len as usize;
        }
        total += term;
    }
    Ok(total)
}

/// `Δδ_n` from the closed formula over `N'_n`.
pub fn coproduct_delta_closed(n: u32) -> Result<TensorElement> {
    coproduct_delta_closed_with(n, Limits::global())
}

pub fn coproduct_delta_closed_with(n: u32, limits: &Limits) -> Result<TensorElement> {
    check_positive(n)?;
    limits::check("δ coproduct index n", n as usize, limits.delta)?;
    let dn = Polynomial::generator(Generator::Delta(n));
    let mut out = TensorElement::primitive(&dn);
    let n_fact = factorial(n);
    for nbar in compositions(n).into_iter().filter(|c| c.in_n_prime(n)) {
        let e = nbar.entries();
        let r = e.len();
        let denom = e.iter().fold(num_bigint::BigInt::one(), |acc, &x| acc * factorial(x));
        let c = Rational::new(n_fact.clone(), denom) * k_coefficient(&nbar)?;
        let left = Monomial::from_factors(e[..r - 1].iter().map(|&x| (Generator::Delta(x), 1)))?;
        out.add_term(left, Monomial::generator(Generator::Delta(e[r - 1])), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::poly::{a, delta};

    fn t(p: &Polynomial, q: &Polynomial) -> TensorElement {
        TensorElement::from_polys(p, q)
    }

    fn delta4_golden() -> TensorElement {
        TensorElement::primitive(&delta(4))
            + t(&delta(1), &delta(3)).scale(&rat(6))
            + t(&(delta(1).pow(2).scale(&rat(7)) + delta(2).scale(&rat(4))), &delta(2))
            + t(&((delta(1) * delta(2)).scale(&rat(3)) + delta(1).pow(3) + delta(3)), &delta(1))
    }

    #[test]
    fn delta_in_a_values() {
        assert_eq!(delta_in_a(1).unwrap(), a(2));
        assert_eq!(delta_in_a(2).unwrap(), a(3) - a(2).pow(2));
        assert_eq!(
            delta_in_a(3).unwrap(),
            a(4) - (a(2) * a(3)).scale(&rat(3)) + a(2).pow(3).scale(&rat(2))
        );
        assert_eq!(
            delta_in_a(4).unwrap(),
            a(5) - a(3).pow(2).scale(&rat(3)) - (a(2) * a(4)).scale(&rat(4))
                + (a(2).pow(2) * a(3)).scale(&rat(12))
                - a(2).pow(4).scale(&rat(6))
        );
        assert!(delta_in_a(0).is_err());
    }

    #[test]
    fn a_in_delta_values() {
        assert_eq!(a_in_delta(1).unwrap(), delta(1));
        assert_eq!(a_in_delta(2).unwrap(), delta(2) + delta(1).pow(2));
        for n in 1..=8 {
            let back = a_to_delta(&delta_in_a(n).unwrap()).unwrap();
            assert_eq!(back, delta(n), "δ_{n}");
            let forward = delta_to_a(&a_in_delta(n).unwrap()).unwrap();
            assert_eq!(forward, a(n + 1), "a_{}", n + 1);
        }
    }

    #[test]
    fn delta_images_are_homogeneous() {
        for n in 1..=8 {
            let p = delta_in_a(n).unwrap();
            assert!(p.terms().all(|(m, _)| m.degree() == n as usize));
        }
    }

    #[test]
    fn delta4_coproduct_both_routes() {
        assert_eq!(coproduct_delta(4).unwrap(), delta4_golden());
        assert_eq!(coproduct_delta_closed(4).unwrap(), delta4_golden());
        let p1 = TensorElement::primitive(&delta(1));
        assert_eq!(coproduct_delta(1).unwrap(), p1);
        assert_eq!(coproduct_delta_closed(1).unwrap(), p1);
        let d2 = TensorElement::primitive(&delta(2)) + t(&delta(1), &delta(1));
        assert_eq!(coproduct_delta(2).unwrap(), d2);
        assert_eq!(coproduct_delta_closed(2).unwrap(), d2);
    }

    #[test]
    fn routes_agree() {
        for n in 1..=7 {
            assert_eq!(coproduct_delta(n).unwrap(), coproduct_delta_closed(n).unwrap(), "n={n}");
        }
        assert!(matches!(coproduct_delta(9), Err(Error::LimitExceeded { .. })));
        assert!(coproduct_delta_closed(9).is_err());
    }

    #[test]
    fn bilinear_parts() {
        assert_eq!(
            bilinear_part(4),
            t(&delta(3), &delta(1)) + t(&delta(2), &delta(2)).scale(&rat(4)) + t(&delta(1), &delta(3)).scale(&rat(6))
        );
        assert_eq!(bilinear_part(2), t(&delta(1), &delta(1)));
        assert_eq!(bilinear_part(3), t(&delta(2), &delta(1)) + t(&delta(1), &delta(2)).scale(&rat(3)));
        assert!(bilinear_part(1).is_zero());
        for n in 1..=8 {
            assert_eq!(bilinear_component(&coproduct_delta(n).unwrap()), bilinear_part(n), "n={n}");
        }
    }

    #[test]
    fn right_legs_are_single_generators() {
        for n in 1..=8 {
            for (l, r, _) in coproduct_delta(n).unwrap().terms() {
                assert!(r.is_one() || r.as_generator().is_some(), "{l} ⊗ {r}");
                assert_eq!(l.degree() + r.degree(), n as usize);
            }
        }
    }

    #[test]
    fn k_coefficient_values() {
        let k = k_coefficient(&CompositionVector::new(vec![3, 1]).unwrap()).unwrap();
        assert_eq!(k, ratio(1, 4));
        for n in 2..=9u32 {
            for i in 1..n {
                let k = k_coefficient(&CompositionVector::new(vec![n - i, i]).unwrap()).unwrap();
                assert_eq!(k, ratio(i as i64, 1 + (n - i) as i64));
                let coeff = Rational::from_integer(binomial(n as i64, i as i64)) * k;
                assert_eq!(coeff, Rational::from_integer(binomial(n as i64, i as i64 - 1)));
            }
        }
        assert_eq!(k_coefficient(&CompositionVector::new(vec![1, 1, 2]).unwrap()).unwrap(), ratio(7, 12));
        assert!(k_coefficient(&CompositionVector::new(vec![4]).unwrap()).is_err());
    }

    #[test]
    fn composition_sets() {
        assert_eq!(compositions(4).len(), 8);
        let c = CompositionVector::new(vec![1, 2]).unwrap();
        assert!(c.in_n(3) && c.in_n_prime(3));
        assert!(!CompositionVector::new(vec![3]).unwrap().in_n_prime(3));
        assert!(CompositionVector::new(vec![1, 0]).is_err());
        assert_eq!("closed".parse::<DeltaRoute>().unwrap(), DeltaRoute::Closed);
        assert!("x".parse::<DeltaRoute>().is_err());
    }
}
