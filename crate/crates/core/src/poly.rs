//! Sparse polynomials over ℚ in the graded generator families `a_n`, `δ_n`
//! and the coloured `Π̃^r_{n̄}`, plus elements of the tensor square.
//!
//! A polynomial never mixes families; constants belong to every family.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    Delta,
    Pi,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::Delta => "delta",
            Family::Pi => "pi",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        match s {
            "a" => Some(Family::A),
            "delta" | "δ" => Some(Family::Delta),
            "pi" | "Π" => Some(Family::Pi),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An algebra generator. `a_1` does not exist (it is the unit) and coloured
/// generators of weight one are constants, so constructors reject both.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A(u32),
    Delta(u32),
    Pi { colour: u32, counts: Vec<u32> },
}

impl Generator {
    pub fn a(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("a_{n} is not a generator (a_1 = 1)")));
        }
        Ok(Generator::A(n))
    }

    pub fn delta(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("δ generators start at δ_1"));
        }
        Ok(Generator::Delta(n))
    }

    pub fn pi(colour: u32, counts: Vec<u32>) -> Result<Self> {
        if colour < 1 || colour as usize > counts.len() {
            return Err(Error::domain(format!(
                "colour {colour} out of range for {} colours",
                counts.len()
            )));
        }
        let weight: u32 = counts.iter().sum();
        if weight < 2 {
            return Err(Error::domain(format!(
                "coloured generator needs weight >= 2, got {weight}"
            )));
        }
        Ok(Generator::Pi { colour, counts })
    }

    pub fn family(&self) -> Family {
        match self {
            Generator::A(_) => Family::A,
            Generator::Delta(_) => Family::Delta,
            Generator::Pi { .. } => Family::Pi,
        }
    }

    /// Grading: `#a_n = n − 1`, `#δ_n = n`, `#Π̃^r_{n̄} = |n̄| − 1`.
    pub fn degree(&self) -> usize {
        match self {
            Generator::A(n) => *n as usize - 1,
            Generator::Delta(n) => *n as usize,
            Generator::Pi { counts, .. } => counts.iter().sum::<u32>() as usize - 1,
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A(n) => write!(f, "a_{n}"),
            Generator::Delta(n) => write!(f, "δ_{n}"),
            Generator::Pi { colour, counts } => {
                let c: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                write!(f, "Π^{colour}_({})", c.join(","))
            }
        }
    }
}

/// A product of generator powers, factors sorted by generator.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    pub fn power(g: Generator, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(g, e)])
        }
    }

    /// Builds a monomial from arbitrary factors, merging repeats.
    pub fn from_factors(factors: impl IntoIterator<Item = (Generator, u32)>) -> Result<Self> {
        let mut map: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in factors {
            if e > 0 {
                *map.entry(g).or_default() += e;
            }
        }
        let m = Monomial(map.into_iter().collect());
        m.check_family()?;
        Ok(m)
    }

    fn check_family(&self) -> Result<()> {
        if let Some((first, _)) = self.0.first() {
            let fam = first.family();
            if let Some((g, _)) = self.0.iter().find(|(g, _)| g.family() != fam) {
                return Err(Error::FamilyMismatch {
                    left: fam.to_string(),
                    right: g.family().to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    /// The single generator, if this monomial is exactly one generator to the first power.
    pub fn as_generator(&self) -> Option<&Generator> {
        match self.0.as_slice() {
            [(g, 1)] => Some(g),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<Family> {
        self.0.first().map(|(g, _)| g.family())
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|(g, e)| g.degree() * *e as usize).sum()
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn length(&self) -> usize {
        self.0.iter().map(|(_, e)| *e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if let (Some(a), Some(b)) = (self.family(), other.family()) {
            if a != b {
                return Err(Error::FamilyMismatch {
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
        let (x, y) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(x[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(y[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((x[i].0.clone(), x[i].1 + y[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        Ok(Monomial(out))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: monomial → nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(Rational::one(), m)
    }

    pub fn generator(g: Generator) -> Self {
        Polynomial::monomial(Monomial::generator(g))
    }

    /// `a_n`, with `a_1 = 1`.
    pub fn a(n: u32) -> Result<Self> {
        match n {
            0 => Err(Error::domain("a_0 is not defined")),
            1 => Ok(Polynomial::one()),
            _ => Ok(Polynomial::generator(Generator::A(n))),
        }
    }

    pub fn delta(n: u32) -> Result<Self> {
        Ok(Polynomial::generator(Generator::delta(n)?))
    }

    /// `Π̃^r_{n̄}`; weight-one indices give the constants `Π̃^r_{e_s} = [r = s]`.
    pub fn pi(colour: u32, counts: &[u32]) -> Result<Self> {
        let weight: u32 = counts.iter().sum();
        if colour < 1 || colour as usize > counts.len() {
            return Err(Error::domain(format!(
                "colour {colour} out of range for {} colours",
                counts.len()
            )));
        }
        match weight {
            0 => Err(Error::domain("coloured generator of weight 0")),
            1 => Ok(if counts[colour as usize - 1] == 1 {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }),
            _ => Ok(Polynomial::generator(Generator::pi(colour, counts.to_vec())?)),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.check_compatible_monomial(&m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// The family of the non-constant part; `None` for constants.
    pub fn family(&self) -> Option<Family> {
        self.terms.keys().find_map(|m| m.family())
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(g, _)| g.clone()))
            .collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    fn check_compatible_monomial(&self, m: &Monomial) -> Result<()> {
        match (self.family(), m.family()) {
            (Some(a), Some(b)) if a != b => Err(Error::FamilyMismatch {
                left: a.to_string(),
                right: b.to_string(),
            }),
            _ => Ok(()),
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        match (self.family(), other.family()) {
            (Some(a), Some(b)) if a != b => Err(Error::FamilyMismatch {
                left: a.to_string(),
                right: b.to_string(),
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of the monomials of degree exactly `d`.
    pub fn homogeneous_component(&self, d: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Ring-morphism extension of `image` applied to every generator.
    pub fn substitute_with<F>(&self, mut image: F) -> Result<Polynomial>
    where
        F: FnMut(&Generator) -> Result<Polynomial>,
    {
        let mut cache: BTreeMap<Generator, Vec<Polynomial>> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(c.clone());
            for (g, e) in m.factors() {
                if !cache.contains_key(g) {
                    cache.insert(g.clone(), vec![Polynomial::one(), image(g)?]);
                }
                let powers = cache.get_mut(g).unwrap();
                while powers.len() <= *e as usize {
                    let next = powers.last().unwrap().checked_mul(&powers[1])?;
                    powers.push(next);
                }
                prod = prod.checked_mul(&powers[*e as usize])?;
            }
            out = out.checked_add(&prod)?;
        }
        Ok(out)
    }

    /// Substitution from an explicit image table; every generator must be present.
    pub fn substitute(&self, images: &BTreeMap<Generator, Polynomial>) -> Result<Polynomial> {
        self.substitute_with(|g| {
            images
                .get(g)
                .cloned()
                .ok_or_else(|| Error::MissingImage(g.to_string()))
        })
    }

    /// Evaluates at scalar values of the generators (a character).
    pub fn evaluate<F>(&self, mut value: F) -> Result<Rational>
    where
        F: FnMut(&Generator) -> Result<Rational>,
    {
        let mut cache: BTreeMap<Generator, Rational> = BTreeMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (g, e) in m.factors() {
                let v = match cache.get(g) {
                    Some(v) => v.clone(),
                    None => {
                        let v = value(g)?;
                        cache.insert(g.clone(), v.clone());
                        v
                    }
                };
                prod *= num_traits::pow(v, *e as usize);
            }
            total += prod;
        }
        Ok(total)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `c·m` terms as a signed sum. `first` tracks whether a leading sign is needed.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &Rational,
    body: Option<String>,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if *first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    *first = false;
    match body {
        None => write!(f, "{}", format_rational(&abs)),
        Some(b) if abs.is_one() => f.write_str(&b),
        Some(b) if abs.is_integer() => write!(f, "{} {b}", abs),
        Some(b) => write!(f, "({}) {b}", abs),
    }
}

/// Graded order for printing: by degree, then by descending monomial.
fn graded_key(m: &Monomial) -> (usize, std::cmp::Reverse<&Monomial>) {
    (m.degree(), std::cmp::Reverse(m))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| graded_key(a.0).cmp(&graded_key(b.0)));
        let mut first = true;
        for (m, c) in terms {
            let body = (!m.is_one()).then(|| m.to_string());
            write_term(f, &mut first, c, body)?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial operands from different families")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

/// Element of the tensor square: `(left, right)` monomial pairs with nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `1 ⊗ 1`.
    pub fn one() -> Self {
        TensorElement::pure(Rational::one(), Monomial::one(), Monomial::one())
    }

    pub fn pure(c: Rational, left: Monomial, right: Monomial) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(left, right, c);
        t
    }

    /// `p ⊗ q` expanded bilinearly.
    pub fn from_polys(p: &Polynomial, q: &Polynomial) -> Self {
        let mut t = TensorElement::zero();
        for (m1, c1) in p.terms() {
            for (m2, c2) in q.terms() {
                t.add_term(m1.clone(), m2.clone(), c1 * c2);
            }
        }
        t
    }

    /// `p ⊗ 1 + 1 ⊗ p`.
    pub fn primitive(p: &Polynomial) -> Self {
        TensorElement::from_polys(p, &Polynomial::one()) + TensorElement::from_polys(&Polynomial::one(), p)
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, left: &Monomial, right: &Monomial) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), x) in &self.terms {
            out.add_term(l.clone(), r.clone(), x * c);
        }
        out
    }

    /// `(x⊗y)(u⊗v) = xu ⊗ yv`, extended bilinearly.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(l1.mul(l2)?, r1.mul(r2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Like [`mul`](Self::mul) but drops terms whose leg degrees exceed the bounds.
    pub fn mul_truncated(
        &self,
        other: &TensorElement,
        max_left: usize,
        max_right: usize,
    ) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in &self.terms {
            let (dl1, dr1) = (l1.degree(), r1.degree());
            if dl1 > max_left || dr1 > max_right {
                continue;
            }
            for ((l2, r2), c2) in &other.terms {
                if dl1 + l2.degree() > max_left || dr1 + r2.degree() > max_right {
                    continue;
                }
                out.add_term(l1.mul(l2)?, r1.mul(r2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Part of bidegree `(i, j)`.
    pub fn bidegree_component(&self, i: usize, j: usize) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|((l, r), _)| l.degree() == i && r.degree() == j)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `left` and `right` to each leg and expands.
    pub fn map_legs<F, G>(&self, mut left: F, mut right: G) -> Result<TensorElement>
    where
        F: FnMut(&Monomial) -> Result<Polynomial>,
        G: FnMut(&Monomial) -> Result<Polynomial>,
    {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            let lp = left(l)?;
            let rp = right(r)?;
            for (m1, c1) in lp.terms() {
                for (m2, c2) in rp.terms() {
                    out.add_term(m1.clone(), m2.clone(), c * c1 * c2);
                }
            }
        }
        Ok(out)
    }

    /// `m(φ ⊗ ψ)`: multiply legs after applying `left`/`right`.
    pub fn contract<F, G>(&self, mut left: F, mut right: G) -> Result<Polynomial>
    where
        F: FnMut(&Monomial) -> Result<Polynomial>,
        G: FnMut(&Monomial) -> Result<Polynomial>,
    {
        let mut out = Polynomial::zero();
        for ((l, r), c) in &self.terms {
            let prod = left(l)?.checked_mul(&right(r)?)?;
            out = out.checked_add(&prod.scale(c))?;
        }
        Ok(out)
    }
}

impl Add for TensorElement {
    type Output = TensorElement;
    fn add(mut self, rhs: TensorElement) -> TensorElement {
        for ((l, r), c) in rhs.terms {
            self.add_term(l, r, c);
        }
        self
    }
}

impl Sub for TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: TensorElement) -> TensorElement {
        self + rhs.scale(&-Rational::one())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        // Highest left degree first, so `x ⊗ 1` leads and `1 ⊗ x` closes the primitive pair.
        terms.sort_by(|((l1, r1), _), ((l2, r2), _)| {
            (r1.degree(), r1, l1).cmp(&(r2.degree(), r2, l2))
        });
        let mut first = true;
        for ((l, r), c) in terms {
            write_term(f, &mut first, c, Some(format!("{l} ⊗ {r}")))?;
        }
        Ok(())
    }
}

/// Ring operations shared by scalars and polynomials, so that Bell polynomials
/// can be evaluated at either.
pub trait Ring: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn scale_int(&self, c: &BigInt) -> Self;
}

impl Ring for Rational {
    fn ring_zero() -> Self {
        Rational::zero()
    }
    fn ring_one() -> Self {
        Rational::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self * Rational::from_integer(c.clone())
    }
}

impl Ring for Polynomial {
    fn ring_zero() -> Self {
        Polynomial::zero()
    }
    fn ring_one() -> Self {
        Polynomial::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&Rational::from_integer(c.clone()))
    }
}

// ---------------------------------------------------------------------------
// JSON wire format

/// Generator index on the wire: an integer, or `[colour, [counts…]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexWire {
    Single(u32),
    Coloured(u32, Vec<u32>),
}

/// `[family, index, exponent]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorWire(pub String, pub IndexWire, pub u32);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermWire {
    pub coeff: String,
    pub mono: Vec<FactorWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermWire {
    pub left: Vec<FactorWire>,
    pub right: Vec<FactorWire>,
    pub coeff: String,
}

impl Monomial {
    pub fn to_wire(&self) -> Vec<FactorWire> {
        self.0
            .iter()
            .map(|(g, e)| {
                let index = match g {
                    Generator::A(n) | Generator::Delta(n) => IndexWire::Single(*n),
                    Generator::Pi { colour, counts } => IndexWire::Coloured(*colour, counts.clone()),
                };
                FactorWire(g.family().name().to_string(), index, *e)
            })
            .collect()
    }

    pub fn from_wire(factors: &[FactorWire]) -> Result<Monomial> {
        let mut out = Vec::with_capacity(factors.len());
        for FactorWire(family, index, e) in factors {
            let fam = Family::from_name(family)
                .ok_or_else(|| Error::parse("mono", format!("unknown family {family:?}")))?;
            let g = match (fam, index) {
                (Family::A, IndexWire::Single(n)) => Generator::a(*n),
                (Family::Delta, IndexWire::Single(n)) => Generator::delta(*n),
                (Family::Pi, IndexWire::Coloured(r, c)) => Generator::pi(*r, c.clone()),
                _ => Err(Error::domain(format!("index shape does not fit family {fam}"))),
            }
            .map_err(|e| Error::parse("mono", e.to_string()))?;
            out.push((g, *e));
        }
        Monomial::from_factors(out)
    }
}

impl Polynomial {
    /// Terms in graded order.
    pub fn to_wire(&self) -> Vec<PolyTermWire> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| graded_key(a.0).cmp(&graded_key(b.0)));
        terms
            .into_iter()
            .map(|(m, c)| PolyTermWire {
                coeff: format_rational(c),
                mono: m.to_wire(),
            })
            .collect()
    }

    pub fn from_wire(terms: &[PolyTermWire]) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for t in terms {
            let c = parse_rational(&t.coeff).map_err(|e| Error::parse("coeff", e.to_string()))?;
            let m = Monomial::from_wire(&t.mono)?;
            out.check_compatible_monomial(&m)?;
            out.add_term(m, c);
        }
        Ok(out)
    }
}

impl TensorElement {
    pub fn to_wire(&self) -> Vec<TensorTermWire> {
        self.terms
            .iter()
            .map(|((l, r), c)| TensorTermWire {
                left: l.to_wire(),
                right: r.to_wire(),
                coeff: format_rational(c),
            })
            .collect()
    }

    pub fn from_wire(terms: &[TensorTermWire]) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for t in terms {
            let c = parse_rational(&t.coeff).map_err(|e| Error::parse("coeff", e.to_string()))?;
            out.add_term(Monomial::from_wire(&t.left)?, Monomial::from_wire(&t.right)?, c);
        }
        Ok(out)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<PolyTermWire>::deserialize(d)?;
        Polynomial::from_wire(&wire).map_err(serde::de::Error::custom)
    }
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<TensorTermWire>::deserialize(d)?;
        TensorElement::from_wire(&wire).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: `a_n` as a polynomial, panicking on `n = 0`.
pub fn a(n: u32) -> Polynomial {
    Polynomial::a(n).expect("a_0 is not defined")
}

/// Shorthand: `δ_n` as a polynomial.
pub fn delta(n: u32) -> Polynomial {
    Polynomial::delta(n).expect("δ_0 is not defined")
}

/// Shorthand: rational constant polynomial.
pub fn constant(c: Rational) -> Polynomial {
    Polynomial::constant(c)
}
