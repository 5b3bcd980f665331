//! Integer words, the shuffle and concatenation Hopf algebras, and the image
//! `Γ_n` of `δ_n` in the shuffle algebra.
//!
//! A word `n̄` stands for `u^{n̄}` on the shuffle side and for `X_{n̄}` on the
//! concatenation side; the two bases pair to the identity.
//!
//! The recursive route for `Γ_n` rests on one observation. Pairing
//! `b'_{n_1} ⊗ (b'_{n_2}⋯b'_{n_r})` against `Δδ_m` only sees the terms whose
//! left leg is a single generator, since a primitive functional kills
//! products and `1`. Those terms are exactly the bilinear part
//! `Σ C(m, i-1) δ_{m-i} ⊗ δ_i` plus `δ_m ⊗ 1`, which gives
//! `⟨δ_m, b'_{n_1}⋯b'_{n_r}⟩ = C(m, n_1+1) (n_1+1)! ⟨δ_{m-n_1}, b'_{n_2}⋯b'_{n_r}⟩`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, format_rational, parse_rational, Rational};
use crate::cm::{bilinear_part, compositions, coproduct_delta_with};
use crate::error::{Error, Result};
use crate::hopf::CheckReport;
use crate::limits::{self, Limits};
use crate::poly::{Generator, Monomial, Polynomial};

/// A finite sequence of positive integers; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::domain("word letters must be positive"));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(n: u32) -> Result<Self> {
        Word::new(vec![n])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        Word::new(Vec::<u32>::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => f.write_str("∅"),
            [n] => write!(f, "({n})"),
            ls => {
                let parts: Vec<String> = ls.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// A rational combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordElement {
    terms: BTreeMap<Word, Rational>,
}

impl WordElement {
    pub fn zero() -> Self {
        WordElement::default()
    }

    pub fn one() -> Self {
        WordElement::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        WordElement::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut e = WordElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = WordElement::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Bilinear extension of [`shuffle_product`].
    pub fn shuffle(&self, other: &WordElement) -> WordElement {
        let mut out = WordElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                for (w, c) in shuffle_product(u, v).terms {
                    out.add_term(w, c * a * b);
                }
            }
        }
        out
    }

    /// Bilinear extension of concatenation.
    pub fn concat(&self, other: &WordElement) -> WordElement {
        let mut out = WordElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// The pairing `⟨u^{ū}, X_{v̄}⟩ = [ū = v̄]`, extended bilinearly.
    pub fn pair(&self, other: &WordElement) -> Rational {
        self.terms.iter().map(|(w, c)| c * other.coefficient(w)).sum()
    }

    /// Linear extension of [`deconcatenation`].
    pub fn deconcatenation(&self) -> WordTensor {
        let mut out = WordTensor::zero();
        for (w, c) in &self.terms {
            for (l, r, x) in deconcatenation(w).terms() {
                out.add_term(l.clone(), r.clone(), x * c);
            }
        }
        out
    }
}

impl Add for WordElement {
    type Output = WordElement;
    fn add(mut self, rhs: WordElement) -> WordElement {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Sub for WordElement {
    type Output = WordElement;
    fn sub(self, rhs: WordElement) -> WordElement {
        self + rhs.scale(&-Rational::one())
    }
}

impl fmt::Debug for WordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for WordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Longer words last, then lexicographic.
        let mut keys: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        keys.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        for (i, (w, c)) in keys.into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let body = if w.is_empty() { "1".to_string() } else { format!("u^{w}") };
            if abs.is_one() {
                f.write_str(&body)?;
            } else if w.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else {
                write!(f, "{} {body}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WordTermWire {
    word: Word,
    coeff: String,
}

impl Serialize for WordElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(w, c)| WordTermWire {
                word: w.clone(),
                coeff: format_rational(c),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WordElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let mut out = WordElement::zero();
        for t in Vec::<WordTermWire>::deserialize(d)? {
            out.add_term(t.word, parse_rational(&t.coeff).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

/// A rational combination of `word ⊗ word`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct WordTensor {
    terms: BTreeMap<(Word, Word), Rational>,
}

impl WordTensor {
    pub fn zero() -> Self {
        WordTensor::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coefficient(&self, l: &Word, r: &Word) -> Rational {
        self.terms
            .get(&(l.clone(), r.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, l: Word, r: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `Σ c · (x ⊗ y)` expanded into words.
    pub fn add_product(&mut self, x: &WordElement, y: &WordElement, c: &Rational) {
        for (l, a) in x.terms() {
            for (r, b) in y.terms() {
                self.add_term(l.clone(), r.clone(), a * b * c);
            }
        }
    }
}

impl fmt::Display for WordTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(l, r, c)| format!("{} {l}⊗{r}", format_rational(c)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `u^{ū} u^{v̄}`: every interleaving of the two words, with multiplicity.
pub fn shuffle_product(u: &Word, v: &Word) -> WordElement {
    let mut out = WordElement::zero();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_into(u.letters(), v.letters(), &mut buf, &mut out);
    out
}

fn shuffle_into(u: &[u32], v: &[u32], buf: &mut Vec<u32>, out: &mut WordElement) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.add_term(Word(w), Rational::one());
        return;
    }
    buf.push(u[0]);
    shuffle_into(&u[1..], v, buf, out);
    buf.pop();
    buf.push(v[0]);
    shuffle_into(u, &v[1..], buf, out);
    buf.pop();
}

/// `Δu^{n̄}`: every split of the word into prefix ⊗ suffix.
pub fn deconcatenation(u: &Word) -> WordTensor {
    let mut out = WordTensor::zero();
    for i in 0..=u.len() {
        out.add_term(Word(u.0[..i].to_vec()), Word(u.0[i..].to_vec()), Rational::one());
    }
    out
}

/// `ΔX_{n̄}` with every letter primitive: the sum over subsets of positions.
pub fn concat_coproduct(u: &Word) -> WordTensor {
    let mut out = WordTensor::zero();
    let r = u.len();
    assert!(r < 64, "word too long for the unshuffle coproduct");
    for mask in 0u64..(1u64 << r) {
        let (mut l, mut rt) = (Vec::new(), Vec::new());
        for (i, &x) in u.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l.push(x);
            } else {
                rt.push(x);
            }
        }
        out.add_term(Word(l), Word(rt), Rational::one());
    }
    out
}

/// How to compute `Γ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaRoute {
    Closed,
    Recursive,
}

impl FromStr for GammaRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(GammaRoute::Closed),
            "recursive" => Ok(GammaRoute::Recursive),
            other => Err(Error::parse("route", format!("expected closed or recursive, got {other:?}"))),
        }
    }
}

pub fn gamma(n: u32, route: GammaRoute) -> Result<WordElement> {
    match route {
        GammaRoute::Closed => gamma_closed(n),
        GammaRoute::Recursive => gamma_recursive(n),
    }
}

fn check_gamma_index(n: u32, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("Γ_n is defined for n >= 1"));
    }
    limits::check("Γ index n", n as usize, limits.gamma)
}

/// `C^{n̄} = (n_r + 1) Π_{i=2}^r (n_i + … + n_r)`.
pub fn c_coefficient(w: &Word) -> Rational {
    let l = w.letters();
    let Some(&last) = l.last() else {
        return Rational::one();
    };
    let mut c = num_bigint::BigInt::from(last + 1);
    let mut tail = 0u32;
    for i in (1..l.len()).rev() {
        tail += l[i];
        c *= tail;
    }
    Rational::from_integer(c)
}

/// `Γ_n = n! Σ_{n̄ ⊨ n} C^{n̄} u^{n̄}`.
pub fn gamma_closed(n: u32) -> Result<WordElement> {
    gamma_closed_with(n, Limits::global())
}

pub fn gamma_closed_with(n: u32, limits: &Limits) -> Result<WordElement> {
    check_gamma_index(n, limits)?;
    let nf = Rational::from_integer(factorial(n));
    let mut out = WordElement::zero();
    for c in compositions(n) {
        let w = Word(c.entries().to_vec());
        let coeff = c_coefficient(&w) * &nf;
        out.add_term(w, coeff);
    }
    Ok(out)
}

/// `Γ_n` with coefficients `⟨δ_n, b'_{n_1}⋯b'_{n_r}⟩` peeled off one letter
/// at a time through the bilinear part of `Δδ_m`.
pub fn gamma_recursive(n: u32) -> Result<WordElement> {
    gamma_recursive_with(n, Limits::global())
}

pub fn gamma_recursive_with(n: u32, limits: &Limits) -> Result<WordElement> {
    check_gamma_index(n, limits)?;
    let mut out = WordElement::zero();
    for c in compositions(n) {
        let v = delta_against_b_word(n, c.entries());
        out.add_term(Word(c.entries().to_vec()), v);
    }
    Ok(out)
}

/// `⟨δ_m, b'_{w_1}⋯b'_{w_r}⟩`.
fn delta_against_b_word(m: u32, w: &[u32]) -> Rational {
    let b_on_delta = |n: u32| Rational::from_integer(factorial(n + 1));
    match w {
        [] => Rational::zero(),
        [n] if *n == m => b_on_delta(m),
        [_] => Rational::zero(),
        [first, rest @ ..] => {
            let mut total = Rational::zero();
            for (l, r, c) in bilinear_part(m).terms() {
                if l.as_generator() == Some(&Generator::Delta(*first)) {
                    let Some(Generator::Delta(i)) = r.as_generator() else {
                        continue;
                    };
                    total += c * b_on_delta(*first) * delta_against_b_word(*i, rest);
                }
            }
            total
        }
    }
}

/// `ρᵗ`: `δ_m ↦ Γ_m`, products to shuffles.
pub fn rho_t(p: &Polynomial) -> Result<WordElement> {
    let mut cache: BTreeMap<u32, WordElement> = BTreeMap::new();
    let mut out = WordElement::zero();
    for (m, c) in p.terms() {
        out = out + rho_t_monomial(m, &mut cache)?.scale(c);
    }
    Ok(out)
}

fn rho_t_monomial(m: &Monomial, cache: &mut BTreeMap<u32, WordElement>) -> Result<WordElement> {
    let mut acc = WordElement::one();
    for (g, e) in m.factors() {
        let Generator::Delta(k) = g else {
            return Err(Error::FamilyMismatch {
                left: "delta".into(),
                right: g.family().to_string(),
            });
        };
        if !cache.contains_key(k) {
            cache.insert(*k, gamma_closed(*k)?);
        }
        for _ in 0..*e {
            acc = acc.shuffle(&cache[k]);
        }
    }
    Ok(acc)
}

/// Checks `Δ(Γ_m) = (ρᵗ ⊗ ρᵗ)(Δδ_m)` for `1 <= m <= n`.
pub fn check_hopf_embedding(n: u32) -> Result<CheckReport> {
    check_hopf_embedding_with(n, Limits::global())
}

pub fn check_hopf_embedding_with(n: u32, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("gamma", n as usize);
    let mut cache: BTreeMap<u32, WordElement> = BTreeMap::new();
    for m in 1..=n {
        let lhs = gamma_closed_with(m, limits)?.deconcatenation();
        let mut rhs = WordTensor::zero();
        for (l, r, c) in coproduct_delta_with(m, limits)?.terms() {
            let x = rho_t_monomial(l, &mut cache)?;
            let y = rho_t_monomial(r, &mut cache)?;
            rhs.add_product(&x, &y, c);
        }
        if !report.record(lhs == rhs, || format!("ΔΓ_{m} differs from (ρᵗ⊗ρᵗ)Δδ_{m}")) {
            break;
        }
    }
    Ok(report)
}

/// Closed and recursive `Γ_m` agree for `m <= n`, and `ΔΓ_m` matches `Δδ_m`
/// for `m <= min(n, δ cap)`.
pub fn check_gamma(n: u32) -> Result<CheckReport> {
    let limits = Limits::global();
    let mut report = CheckReport::new("gamma", n as usize);
    for m in 1..=n {
        let ok = gamma_closed(m)? == gamma_recursive(m)?;
        if !report.record(ok, || format!("closed and recursive Γ_{m} differ")) {
            return Ok(report);
        }
    }
    let emb = check_hopf_embedding(n.min(limits.delta as u32 - 1))?;
    report.checks += emb.checks;
    report.counterexample = emb.counterexample;
    Ok(report)
}
