//! The Faà di Bruno Hopf algebra on the generators `a_2, a_3, …` (`a_1 = 1`).
//!
//! `Δa_n = Σ_k Σ_λ ⟨n; λ; k⟩ a_1^{λ_1} a_2^{λ_2} ⋯ a_n^{λ_n} ⊗ a_k`, so that
//! a pair of characters multiplies like the composition of the matching
//! series in the reverse order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{enumerate_type_vectors, fdb_multinomial, format_rational, Rational};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::linalg::nullspace;
use crate::partitions::bell_table;
use crate::poly::{Family, Generator, Monomial, Polynomial, TensorElement};
use crate::series::ExpSeries;

fn a_monomial(k: u32) -> Monomial {
    if k == 1 {
        Monomial::one()
    } else {
        Monomial::generator(Generator::A(k))
    }
}

fn check_generator_index(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("a_{n} is not a generator (need n >= 2)")));
    }
    Ok(())
}

fn build_coproduct(n: u32) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in 1..=n {
        for tv in enumerate_type_vectors(n as usize, Some(k as usize)) {
            let left = Monomial::from_factors(
                tv.nonzero().filter(|(i, _)| *i > 1).map(|(i, l)| (Generator::A(i), l)),
            )
            .expect("single family");
            out.add_term(left, a_monomial(k), Rational::from_integer(fdb_multinomial(&tv)));
        }
    }
    out
}

/// `Δa_n` for `n >= 2`. Results are memoized process-wide.
pub fn coproduct(n: u32) -> Result<Arc<TensorElement>> {
    coproduct_with(n, Limits::global())
}

pub fn coproduct_with(n: u32, limits: &Limits) -> Result<Arc<TensorElement>> {
    check_generator_index(n)?;
    limits::check("coproduct index n", n as usize, limits.coproduct)?;
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<TensorElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let t = Arc::new(build_coproduct(n));
    Ok(Arc::clone(cache.lock().unwrap().entry(n).or_insert(t)))
}

/// Multiplicative extension of a generator coproduct to a polynomial in the
/// `a` family, optionally dropping everything outside the leg-degree bounds.
pub fn coproduct_poly_by<F>(
    p: &Polynomial,
    mut generator: F,
    bounds: Option<(usize, usize)>,
) -> Result<TensorElement>
where
    F: FnMut(u32) -> Result<TensorElement>,
{
    if let Some(fam) = p.family() {
        if fam != Family::A {
            return Err(Error::FamilyMismatch {
                left: Family::A.to_string(),
                right: fam.to_string(),
            });
        }
    }
    let (max_l, max_r) = bounds.unwrap_or((usize::MAX, usize::MAX));
    let mut gen_cache: BTreeMap<u32, TensorElement> = BTreeMap::new();
    let mut out = TensorElement::zero();
    for (m, c) in p.terms() {
        let mut acc = TensorElement::pure(c.clone(), Monomial::one(), Monomial::one());
        for (g, e) in m.factors() {
            let Generator::A(n) = g else { unreachable!("family checked above") };
            if !gen_cache.contains_key(n) {
                gen_cache.insert(*n, generator(*n)?);
            }
            let dg = &gen_cache[n];
            for _ in 0..*e {
                acc = acc.mul_truncated(dg, max_l, max_r)?;
            }
        }
        out = out + acc;
    }
    Ok(out)
}

/// `Δp`, extending `Δa_n` multiplicatively.
pub fn coproduct_poly(p: &Polynomial) -> Result<TensorElement> {
    coproduct_poly_by(p, |n| coproduct(n).map(|t| (*t).clone()), None)
}

/// `Δp` restricted to leg degrees at most `(max_left, max_right)`.
pub fn coproduct_poly_truncated(p: &Polynomial, max_left: usize, max_right: usize) -> Result<TensorElement> {
    coproduct_poly_by(p, |n| coproduct(n).map(|t| (*t).clone()), Some((max_left, max_right)))
}

/// The counit: constant term.
pub fn counit(p: &Polynomial) -> Rational {
    p.constant_term()
}

/// `S(a_n) = Σ_{k=1}^{n-1} (-1)^k B_{n-1+k,k}(0, a_2, a_3, …)`.
pub fn antipode(n: u32) -> Result<Polynomial> {
    check_generator_index(n)?;
    static CACHE: OnceLock<Mutex<HashMap<u32, Polynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let n_us = n as usize;
    let mut args = vec![Polynomial::zero()];
    args.extend((2..=n).map(|i| Polynomial::generator(Generator::A(i))));
    let bell = bell_table(2 * n_us - 2, &args);
    let mut s = Polynomial::zero();
    for k in 1..n_us {
        let b = &bell[n_us - 1 + k][k];
        s = if k % 2 == 0 { s + b } else { s - b };
    }
    cache.lock().unwrap().insert(n, s.clone());
    Ok(s)
}

/// The antipode from the axiom `m(S ⊗ id)Δa_n = 0`, solved degree by degree.
pub fn antipode_recursive(n: u32) -> Result<Polynomial> {
    check_generator_index(n)?;
    let mut memo: BTreeMap<u32, Polynomial> = BTreeMap::new();
    antipode_rec(n, &mut memo)
}

fn antipode_rec(n: u32, memo: &mut BTreeMap<u32, Polynomial>) -> Result<Polynomial> {
    if let Some(p) = memo.get(&n) {
        return Ok(p.clone());
    }
    let delta = coproduct(n)?;
    let top = a_monomial(n);
    let mut s = -Polynomial::monomial(top.clone());
    for (l, r, c) in delta.terms() {
        if (l == &top && r.is_one()) || (l.is_one() && r == &top) {
            continue;
        }
        let mut left = Polynomial::constant(c.clone());
        for (g, e) in l.factors() {
            let Generator::A(i) = g else { unreachable!() };
            left = left * antipode_rec(*i, memo)?.pow(*e);
        }
        s = s - left * Polynomial::monomial(r.clone());
    }
    memo.insert(n, s.clone());
    Ok(s)
}

/// Antipode extended multiplicatively to any polynomial in the `a` family.
pub fn antipode_poly(p: &Polynomial) -> Result<Polynomial> {
    if let Some(fam) = p.family() {
        if fam != Family::A {
            return Err(Error::FamilyMismatch {
                left: Family::A.to_string(),
                right: fam.to_string(),
            });
        }
    }
    p.substitute_with(|g| match g {
        Generator::A(n) => antipode(*n),
        _ => unreachable!("family checked above"),
    })
}

/// Outcome of an axiom sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub upto: usize,
    pub checks: usize,
    /// First failing identity, if any.
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub(crate) fn new(suite: &str, upto: usize) -> Self {
        CheckReport {
            suite: suite.to_string(),
            upto,
            checks: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Records one check; returns `false` once a failure has been recorded.
    pub(crate) fn record(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
        self.passed()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{} up to {}: pass ({} checks)", self.suite, self.upto, self.checks),
            Some(c) => write!(f, "{} up to {}: FAIL after {} checks: {c}", self.suite, self.upto, self.checks),
        }
    }
}

type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Rational>;

fn add3(t: &mut Tensor3, key: (Monomial, Monomial, Monomial), c: Rational) {
    let e = t.entry(key).or_insert_with(Rational::zero);
    *e += c;
}

fn clean3(mut t: Tensor3) -> Tensor3 {
    t.retain(|_, c| !c.is_zero());
    t
}

/// Coassociativity, both counit laws and both antipode laws on `a_2, …, a_upto`.
pub fn check_hopf_axioms(upto: u32) -> Result<CheckReport> {
    check_hopf_axioms_by(upto, |n| coproduct(n).map(|t| (*t).clone()))
}

/// As [`check_hopf_axioms`], with a caller-supplied generator coproduct.
pub fn check_hopf_axioms_by<F>(upto: u32, mut generator: F) -> Result<CheckReport>
where
    F: FnMut(u32) -> Result<TensorElement>,
{
    let mut report = CheckReport::new("hopf", upto as usize);
    let mut cache: BTreeMap<u32, TensorElement> = BTreeMap::new();
    for n in 2..=upto {
        cache.insert(n, generator(n)?);
    }
    let gen = |n: u32| -> Result<TensorElement> {
        cache
            .get(&n)
            .cloned()
            .ok_or_else(|| Error::domain(format!("a_{n} above the checked range")))
    };
    let delta_mono = |m: &Monomial| coproduct_poly_by(&Polynomial::monomial(m.clone()), gen, None);

    for n in 2..=upto {
        let an = Polynomial::monomial(a_monomial(n));
        let d = gen(n)?;

        let mut lhs = Tensor3::new();
        let mut rhs = Tensor3::new();
        for (l, r, c) in d.terms() {
            for (l1, l2, c2) in delta_mono(l)?.terms() {
                add3(&mut lhs, (l1.clone(), l2.clone(), r.clone()), c * c2);
            }
            for (r1, r2, c2) in delta_mono(r)?.terms() {
                add3(&mut rhs, (l.clone(), r1.clone(), r2.clone()), c * c2);
            }
        }
        if !report.record(clean3(lhs) == clean3(rhs), || format!("coassociativity fails on a_{n}")) {
            break;
        }

        let left_counit = d.contract(
            |l| Ok(Polynomial::constant(counit(&Polynomial::monomial(l.clone())))),
            |r| Ok(Polynomial::monomial(r.clone())),
        )?;
        if !report.record(left_counit == an, || format!("(ε⊗id)Δa_{n} = {left_counit}")) {
            break;
        }
        let right_counit = d.contract(
            |l| Ok(Polynomial::monomial(l.clone())),
            |r| Ok(Polynomial::constant(counit(&Polynomial::monomial(r.clone())))),
        )?;
        if !report.record(right_counit == an, || format!("(id⊗ε)Δa_{n} = {right_counit}")) {
            break;
        }

        let left_s = d.contract(
            |l| antipode_poly(&Polynomial::monomial(l.clone())),
            |r| Ok(Polynomial::monomial(r.clone())),
        )?;
        if !report.record(left_s.is_zero(), || format!("m(S⊗id)Δa_{n} = {left_s}")) {
            break;
        }
        let right_s = d.contract(
            |l| Ok(Polynomial::monomial(l.clone())),
            |r| antipode_poly(&Polynomial::monomial(r.clone())),
        )?;
        if !report.record(right_s.is_zero(), || format!("m(id⊗S)Δa_{n} = {right_s}")) {
            break;
        }
    }
    Ok(report)
}

/// An algebra morphism `𝓕 → ℚ`, given by its values `f_n = ⟨f, a_n⟩` for
/// `2 <= n <= order` (with `f_1 = 1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    values: Vec<Rational>,
}

impl Character {
    /// The counit, unit of convolution: every generator maps to zero.
    pub fn identity(order: usize) -> Self {
        Character {
            values: vec![Rational::zero(); order.saturating_sub(1)],
        }
    }

    /// `values[i]` is the value on `a_{i+2}`.
    pub fn new(values: Vec<Rational>) -> Self {
        Character { values }
    }

    pub fn from_series(f: &ExpSeries) -> Result<Self> {
        if !f.is_unital() {
            return Err(Error::NotUnital(format_rational(f.coeff(1))));
        }
        Ok(Character {
            values: f.coeffs()[1..].to_vec(),
        })
    }

    pub fn to_series(&self) -> ExpSeries {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(self.values.iter().cloned());
        ExpSeries::new(coeffs).expect("nonempty")
    }

    /// Highest `n` with a stored value `⟨f, a_n⟩`.
    pub fn order(&self) -> usize {
        self.values.len() + 1
    }

    /// `⟨f, a_n⟩`.
    pub fn value(&self, n: u32) -> Result<Rational> {
        match n {
            0 => Err(Error::domain("a_0 is not defined")),
            1 => Ok(Rational::one()),
            _ => self
                .values
                .get(n as usize - 2)
                .cloned()
                .ok_or_else(|| Error::domain(format!("character of order {} has no value on a_{n}", self.order()))),
        }
    }

    pub fn evaluate(&self, p: &Polynomial) -> Result<Rational> {
        p.evaluate(|g| match g {
            Generator::A(n) => self.value(*n),
            other => Err(Error::FamilyMismatch {
                left: Family::A.to_string(),
                right: other.family().to_string(),
            }),
        })
    }

    /// Convolution inverse `f ∘ S`.
    pub fn inverse(&self) -> Result<Character> {
        let values = (2..=self.order() as u32)
            .map(|n| self.evaluate(&antipode(n)?))
            .collect::<Result<_>>()?;
        Ok(Character { values })
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "Character[a_2..: {}]", c.join(", "))
    }
}

/// `⟨f * g, a_n⟩ = m(f ⊗ g) Δa_n`.
pub fn convolve(f: &Character, g: &Character) -> Result<Character> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch {
            left: f.order(),
            right: g.order(),
        });
    }
    let values = (2..=f.order() as u32)
        .map(|n| {
            let mut total = Rational::zero();
            for (l, r, c) in coproduct(n)?.terms() {
                let lv = f.evaluate(&Polynomial::monomial(l.clone()))?;
                let rv = g.evaluate(&Polynomial::monomial(r.clone()))?;
                total += c * lv * rv;
            }
            Ok(total)
        })
        .collect::<Result<_>>()?;
    Ok(Character { values })
}

/// All monomials in the `a` family of degree `d` (`#a_n = n - 1`), ascending.
pub fn a_monomials_of_degree(d: usize) -> Vec<Monomial> {
    if d == 0 {
        return vec![Monomial::one()];
    }
    let mut out: Vec<Monomial> = enumerate_type_vectors(d, None)
        .into_iter()
        .map(|tv| {
            Monomial::from_factors(tv.nonzero().map(|(i, l)| (Generator::A(i + 1), l)))
                .expect("single family")
        })
        .collect();
    out.sort();
    out
}

/// Basis of the primitive elements of degree `d`, found by solving
/// `Δp − p⊗1 − 1⊗p = 0` over all monomials of degree `d`.
///
/// Each basis element has coefficient 1 on one of the later (in monomial
/// order) monomials, so degree 2 yields `a_3 − (3/2) a_2²`.
pub fn primitive_space(d: usize) -> Result<Vec<Polynomial>> {
    primitive_space_with(d, Limits::global())
}

pub fn primitive_space_with(d: usize, limits: &Limits) -> Result<Vec<Polynomial>> {
    if d == 0 {
        return Err(Error::domain("primitive space is graded from degree 1"));
    }
    limits::check("primitive degree", d, limits.primitive_degree)?;
    let monos = a_monomials_of_degree(d);
    let mut row_index: BTreeMap<(Monomial, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::new();
    for m in &monos {
        let p = Polynomial::monomial(m.clone());
        let reduced = coproduct_poly(&p)? - TensorElement::primitive(&p);
        let mut col = Vec::new();
        for (l, r, c) in reduced.terms() {
            let next = row_index.len();
            let idx = *row_index.entry((l.clone(), r.clone())).or_insert(next);
            col.push((idx, c.clone()));
        }
        columns.push(col);
    }
    let mut rows = vec![vec![Rational::zero(); monos.len()]; row_index.len()];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            rows[*i][j] = c.clone();
        }
    }
    Ok(nullspace(rows, monos.len())
        .into_iter()
        .map(|v| {
            let mut p = Polynomial::zero();
            for (m, c) in monos.iter().zip(v) {
                p.add_term(m.clone(), c);
            }
            p
        })
        .collect())
}
