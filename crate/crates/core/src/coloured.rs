//! Series in several variables and the coloured-partition Hopf algebras
//! `𝓕(N)`.
//!
//! An [`NSeries`] with `N` variables has components
//! `f^r(t) = Σ_{n̄} f^r_{n̄} t^{n̄}/n̄!`, `r = 1, …, N`. Its values `f^r_{n̄}`
//! are also the values of a character on the generators `Π̃^r_{n̄}`; the
//! weight-one generators `Π̃^r_{e_s}` are the constants `[r = s]`, so a
//! character always has identity linear part.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::hopf::CheckReport;
use crate::limits::{self, Limits};
use crate::partitions::for_each_partition_labels;
use crate::poly::{Generator, Monomial, Polynomial, TensorElement};
use crate::series::ExpSeries;

/// A vector `n̄ ∈ ℕ^N`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a multi-index needs at least one variable"));
        }
        Ok(MultiIndex(entries))
    }

    pub fn zero(vars: usize) -> Self {
        MultiIndex(vec![0; vars])
    }

    /// `e_s`, one-based.
    pub fn unit(vars: usize, s: usize) -> Self {
        let mut v = vec![0; vars];
        v[s - 1] = 1;
        MultiIndex(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    /// `|n̄|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `n̄! = Π n_i!`.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&x| factorial(x)).product()
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }


    fn sub(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `n̄ ∈ ℕ^vars` of weight `w`, in lexicographic order.
pub fn multi_indices(vars: usize, w: u32) -> Vec<MultiIndex> {
    fn go(vars: usize, w: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if cur.len() == vars - 1 {
            cur.push(w);
            out.push(MultiIndex(cur.clone()));
            cur.pop();
            return;
        }
        for x in 0..=w {
            cur.push(x);
            go(vars, w - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if vars > 0 {
        go(vars, w, &mut Vec::with_capacity(vars), &mut out);
    }
    out
}

/// A partition of the canonical coloured set with colour counts `n̄`, with
/// a colour on every block.
///
/// Elements are numbered `0..|n̄|`; the first `n_1` have colour 1, the next
/// `n_2` colour 2, and so on. Singleton blocks carry their element's colour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouredPartition {
    element_colours: Vec<u32>,
    blocks: Vec<Vec<usize>>,
    block_colours: Vec<u32>,
}

impl ColouredPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_colours(&self) -> &[u32] {
        &self.block_colours
    }

    pub fn element_colours(&self) -> &[u32] {
        &self.element_colours
    }

    fn vars(&self) -> usize {
        self.element_colours.iter().copied().max().unwrap_or(1) as usize
    }

    /// `|B|`: colour counts of the elements of block `i`.
    pub fn block_counts(&self, i: usize, vars: usize) -> MultiIndex {
        let mut v = vec![0u32; vars];
        for &x in &self.blocks[i] {
            v[self.element_colours[x] as usize - 1] += 1;
        }
        MultiIndex(v)
    }

    /// `|π|`: how many blocks carry each colour.
    pub fn colour_profile(&self, vars: usize) -> MultiIndex {
        let mut v = vec![0u32; vars];
        for &c in &self.block_colours {
            v[c as usize - 1] += 1;
        }
        MultiIndex(v)
    }
}

impl fmt::Display for ColouredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.vars();
        let parts: Vec<String> = (0..self.blocks.len())
            .map(|i| {
                let els: Vec<String> = self.blocks[i].iter().map(|x| (x + 1).to_string()).collect();
                format!("{{{}}}^{}{}", els.join(","), self.block_colours[i], self.block_counts(i, vars))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_shape(vars: usize, weight: u32, limits: &Limits) -> Result<()> {
    if vars == 0 {
        return Err(Error::domain("need at least one colour"));
    }
    limits::check("number of colours N", vars, limits.colours)?;
    limits::check("coloured weight |n̄|", weight as usize, limits.colour_weight)
}

fn element_colours(n: &MultiIndex) -> Vec<u32> {
    n.0.iter()
        .enumerate()
        .flat_map(|(c, &k)| std::iter::repeat_n(c as u32 + 1, k as usize))
        .collect()
}

/// Visits every coloured partition of the canonical set with counts `n̄`.
/// The visitor sees the blocks as element lists and one colour per block.
fn for_each_coloured_partition(n: &MultiIndex, mut visit: impl FnMut(&[Vec<usize>], &[u32])) {
    let colours = element_colours(n);
    let vars = n.vars() as u32;
    for_each_partition_labels(colours.len(), |labels, k| {
        let mut blocks = vec![Vec::new(); k];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        let free: Vec<usize> = (0..k).filter(|&b| blocks[b].len() > 1).collect();
        let mut block_colours: Vec<u32> = blocks.iter().map(|b| colours[b[0]]).collect();
        // Odometer over colourings of the non-singleton blocks.
        for &b in &free {
            block_colours[b] = 1;
        }
        loop {
            visit(&blocks, &block_colours);
            let mut i = 0;
            while i < free.len() && block_colours[free[i]] == vars {
                block_colours[free[i]] = 1;
                i += 1;
            }
            if i == free.len() {
                break;
            }
            block_colours[free[i]] += 1;
        }
    });
}

/// Every coloured partition of the canonical set with colour counts `n̄`, in
/// a fixed order. The top colour `r` only labels the poset and is validated.
pub fn enumerate_coloured_partitions(n: &MultiIndex, r: u32) -> Result<Vec<ColouredPartition>> {
    enumerate_coloured_partitions_with(n, r, Limits::global())
}

pub fn enumerate_coloured_partitions_with(
    n: &MultiIndex,
    r: u32,
    limits: &Limits,
) -> Result<Vec<ColouredPartition>> {
    check_shape(n.vars(), n.weight(), limits)?;
    check_colour(r, n.vars())?;
    if n.weight() == 0 {
        return Err(Error::domain("coloured partitions need |n̄| >= 1"));
    }
    let element_colours = element_colours(n);
    let mut out = Vec::new();
    for_each_coloured_partition(n, |blocks, cols| {
        out.push(ColouredPartition {
            element_colours: element_colours.clone(),
            blocks: blocks.to_vec(),
            block_colours: cols.to_vec(),
        })
    });
    Ok(out)
}

fn check_colour(r: u32, vars: usize) -> Result<()> {
    if r < 1 || r as usize > vars {
        return Err(Error::domain(format!("colour {r} out of range 1..={vars}")));
    }
    Ok(())
}

fn block_counts(blocks: &[Vec<usize>], colours: &[u32], vars: usize) -> Vec<MultiIndex> {
    blocks
        .iter()
        .map(|b| {
            let mut v = vec![0u32; vars];
            for &x in b {
                v[colours[x] as usize - 1] += 1;
            }
            MultiIndex(v)
        })
        .collect()
}

fn profile(block_colours: &[u32], vars: usize) -> MultiIndex {
    let mut v = vec![0u32; vars];
    for &c in block_colours {
        v[c as usize - 1] += 1;
    }
    MultiIndex(v)
}

/// `Δ Π̃^r_{n̄} = Σ_π (Π_{B∈π} Π̃^{θ(B)}_{|B|}) ⊗ Π̃^r_{|π|}`.
pub fn coloured_coproduct(r: u32, n: &MultiIndex) -> Result<TensorElement> {
    coloured_coproduct_with(r, n, Limits::global())
}

pub fn coloured_coproduct_with(r: u32, n: &MultiIndex, limits: &Limits) -> Result<TensorElement> {
    check_shape(n.vars(), n.weight(), limits)?;
    check_colour(r, n.vars())?;
    if n.weight() == 0 {
        return Err(Error::domain("Π̃ generators need |n̄| >= 1"));
    }
    let vars = n.vars();
    let colours = element_colours(n);
    let mut out = TensorElement::zero();
    let mut err = None;
    for_each_coloured_partition(n, |blocks, cols| {
        if err.is_some() {
            return;
        }
        let counts = block_counts(blocks, &colours, vars);
        let step = || -> Result<TensorElement> {
            let right = Polynomial::pi(r, profile(cols, vars).entries())?;
            let mut left = Polynomial::one();
            for (c, m) in cols.iter().zip(&counts) {
                left = left.checked_mul(&Polynomial::pi(*c, m.entries())?)?;
            }
            Ok(TensorElement::from_polys(&left, &right))
        };
        match step() {
            Ok(t) => out = std::mem::take(&mut out) + t,
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// A tuple of `N` series in `N` variables, known up to total degree `M`.
#[derive(Clone, PartialEq, Eq)]
pub struct NSeries {
    vars: usize,
    order: u32,
    /// `(r, n̄) ↦ f^r_{n̄}` for `1 <= |n̄| <= M`, zeros omitted.
    coeffs: BTreeMap<(u32, MultiIndex), Rational>,
}

impl NSeries {
    /// `f^r(t) = t_r`.
    pub fn identity(vars: usize, order: u32) -> Result<Self> {
        if vars == 0 || order == 0 {
            return Err(Error::domain("an N-series needs N >= 1 and M >= 1"));
        }
        let mut coeffs = BTreeMap::new();
        for r in 1..=vars {
            coeffs.insert((r as u32, MultiIndex::unit(vars, r)), Rational::one());
        }
        Ok(NSeries { vars, order, coeffs })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `f^r_{n̄}`; zero for `|n̄| = 0`.
    pub fn coeff(&self, r: u32, n: &MultiIndex) -> Rational {
        self.coeffs
            .get(&(r, n.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in canonical order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &MultiIndex, &Rational)> {
        self.coeffs.iter().map(|((r, n), c)| (*r, n, c))
    }

    pub fn set(&mut self, r: u32, n: MultiIndex, value: Rational) -> Result<()> {
        check_colour(r, self.vars)?;
        if n.vars() != self.vars {
            return Err(Error::domain(format!("index {n} has {} entries, expected {}", n.vars(), self.vars)));
        }
        let w = n.weight();
        if w == 0 || w > self.order {
            return Err(Error::domain(format!("index {n} outside 1 <= |n̄| <= {}", self.order)));
        }
        if value.is_zero() {
            self.coeffs.remove(&(r, n));
        } else {
            self.coeffs.insert((r, n), value);
        }
        Ok(())
    }

    /// Linear part is the identity: `f^r_{e_s} = [r = s]`.
    pub fn is_unital(&self) -> bool {
        (1..=self.vars as u32).all(|r| {
            (1..=self.vars).all(|s| {
                let want = if r as usize == s { Rational::one() } else { Rational::zero() };
                self.coeff(r, &MultiIndex::unit(self.vars, s)) == want
            })
        })
    }

    fn require_unital(&self) -> Result<()> {
        if self.is_unital() {
            Ok(())
        } else {
            Err(Error::NotUnital("the linear part of the N-series is not the identity".into()))
        }
    }

    fn check_same_shape(&self, other: &NSeries) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::domain(format!(
                "N-series in {} and {} variables",
                self.vars, other.vars
            )));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order as usize,
                right: other.order as usize,
            });
        }
        Ok(())
    }

    pub fn from_exp_series(f: &ExpSeries) -> Self {
        let mut out = NSeries {
            vars: 1,
            order: f.order() as u32,
            coeffs: BTreeMap::new(),
        };
        for n in 1..=f.order() {
            out.set(1, MultiIndex(vec![n as u32]), f.coeff(n).clone())
                .expect("index in range");
        }
        out
    }

    /// The single component of a one-variable series.
    pub fn to_exp_series(&self) -> Result<ExpSeries> {
        if self.vars != 1 {
            return Err(Error::domain("only one-variable N-series are plain series"));
        }
        ExpSeries::new((1..=self.order).map(|n| self.coeff(1, &MultiIndex(vec![n]))).collect())
    }

    /// The character value on a polynomial in the `Π̃` generators.
    pub fn evaluate(&self, p: &Polynomial) -> Result<Rational> {
        p.evaluate(|g| match g {
            Generator::Pi { colour, counts } if counts.len() == self.vars => {
                let n = MultiIndex(counts.clone());
                if n.weight() > self.order {
                    return Err(Error::domain(format!("{g} is above the series order {}", self.order)));
                }
                Ok(self.coeff(*colour, &n))
            }
            other => Err(Error::domain(format!("{other} is not a generator of 𝓕({})", self.vars))),
        })
    }
}

impl fmt::Debug for NSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NSeries(N={}, M={})[", self.vars, self.order)?;
        let parts: Vec<String> = self
            .coeffs()
            .map(|(r, n, c)| format!("f^{r}_{n}={}", format_rational(c)))
            .collect();
        write!(f, "{}]", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct NSeriesWire {
    #[serde(rename = "N")]
    vars: usize,
    #[serde(rename = "M")]
    order: u32,
    coeffs: Vec<NCoeffWire>,
}

#[derive(Serialize, Deserialize)]
struct NCoeffWire {
    component: u32,
    index: Vec<u32>,
    value: String,
}

impl Serialize for NSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NSeriesWire {
            vars: self.vars,
            order: self.order,
            coeffs: self
                .coeffs()
                .filter(|(_, n, _)| n.weight() > 1)
                .map(|(r, n, c)| NCoeffWire {
                    component: r,
                    index: n.0.clone(),
                    value: format_rational(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = NSeriesWire::deserialize(d)?;
        let mut out = NSeries::identity(wire.vars, wire.order).map_err(|_| {
            D::Error::custom(Error::parse(if wire.vars == 0 { "N" } else { "M" }, "must be >= 1"))
        })?;
        for (i, c) in wire.coeffs.into_iter().enumerate() {
            let value = parse_rational(&c.value)
                .map_err(|e| D::Error::custom(Error::parse(format!("coeffs[{i}].value"), e.to_string())))?;
            if c.component < 1 || c.component as usize > wire.vars {
                return Err(D::Error::custom(Error::parse(
                    format!("coeffs[{i}].component"),
                    format!("must lie in 1..={}", wire.vars),
                )));
            }
            if c.index.len() != wire.vars || c.index.iter().sum::<u32>() == 0 {
                return Err(D::Error::custom(Error::parse(
                    format!("coeffs[{i}].index"),
                    format!("expected {} nonnegative entries with positive sum", wire.vars),
                )));
            }
            let n = MultiIndex(c.index);
            out.set(c.component, n, value)
                .map_err(|e| D::Error::custom(Error::parse(format!("coeffs[{i}].index"), e.to_string())))?;
        }
        Ok(out)
    }
}

/// `f ∘ g`, coefficientwise: for each `n̄`, sum over multisets of atoms
/// `(i, m̄)` with `Σ m̄ = n̄` of
/// `f^r_{k̄} · n̄! Π (g^i_{m̄})^λ / (λ! (m̄!)^λ)`, where `k_i` counts the
/// atoms of colour `i`.
pub fn nseries_compose(f: &NSeries, g: &NSeries) -> Result<NSeries> {
    f.check_same_shape(g)?;
    f.require_unital()?;
    g.require_unital()?;
    let vars = f.vars;
    let mut out = NSeries::identity(vars, f.order)?;
    for w in 2..=f.order {
        for n in multi_indices(vars, w) {
            let atoms: Vec<(u32, &MultiIndex, &Rational)> = g.coeffs().filter(|(_, m, _)| m.fits_in(&n)).collect();
            let mut sums = vec![Rational::zero(); vars];
            let mut counts: Vec<u32> = vec![0; atoms.len()];
            let n_fact = Rational::from_integer(n.factorial());
            multiset_atoms(&atoms, 0, &n, &mut counts, &mut |counts| {
                let mut k = vec![0u32; vars];
                let mut weight = n_fact.clone();
                for (j, &lam) in counts.iter().enumerate() {
                    if lam == 0 {
                        continue;
                    }
                    let (i, m, gv) = atoms[j];
                    k[i as usize - 1] += lam;
                    let denom = factorial(lam) * m.factorial().pow(lam);
                    weight = weight * gv.pow(lam as i32) / Rational::from_integer(denom);
                }
                let k = MultiIndex(k);
                for r in 1..=vars as u32 {
                    let fv = f.coeff(r, &k);
                    if !fv.is_zero() {
                        sums[r as usize - 1] += &weight * fv;
                    }
                }
            });
            for (r, v) in sums.into_iter().enumerate() {
                out.set(r as u32 + 1, n.clone(), v)?;
            }
        }
    }
    Ok(out)
}

fn multiset_atoms(
    atoms: &[(u32, &MultiIndex, &Rational)],
    j: usize,
    rem: &MultiIndex,
    counts: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if rem.weight() == 0 {
        visit(counts);
        return;
    }
    if j == atoms.len() {
        return;
    }
    let m = atoms[j].1;
    let mut r = rem.clone();
    let mut lam = 0;
    loop {
        counts[j] = lam;
        multiset_atoms(atoms, j + 1, &r, counts, visit);
        if !m.fits_in(&r) {
            break;
        }
        r = r.sub(m);
        lam += 1;
    }
    counts[j] = 0;
}

/// `(g * f)(Π̃^r_{n̄}) = Σ_π f^r_{|π|} Π_{B∈π} g^{θ(B)}_{|B|}`.
pub fn coloured_convolution(g: &NSeries, f: &NSeries) -> Result<NSeries> {
    coloured_convolution_with(g, f, Limits::global())
}

pub fn coloured_convolution_with(g: &NSeries, f: &NSeries, limits: &Limits) -> Result<NSeries> {
    g.check_same_shape(f)?;
    g.require_unital()?;
    f.require_unital()?;
    check_shape(f.vars, f.order, limits)?;
    let vars = f.vars;
    let mut out = NSeries::identity(vars, f.order)?;
    for w in 2..=f.order {
        for n in multi_indices(vars, w) {
            let colours = element_colours(&n);
            let mut sums = vec![Rational::zero(); vars];
            for_each_coloured_partition(&n, |blocks, cols| {
                let mut prod = Rational::one();
                for (c, m) in cols.iter().zip(block_counts(blocks, &colours, vars)) {
                    prod *= g.coeff(*c, &m);
                    if prod.is_zero() {
                        return;
                    }
                }
                let p = profile(cols, vars);
                for r in 1..=vars as u32 {
                    sums[r as usize - 1] += f.coeff(r, &p) * &prod;
                }
            });
            for (r, v) in sums.into_iter().enumerate() {
                out.set(r as u32 + 1, n.clone(), v)?;
            }
        }
    }
    Ok(out)
}

/// The compositional inverse `g` of `f`, as the character `f ∘ S`.
///
/// Uses the antipode recursion `S(x) = −x − Σ' S(x') x''` under `f`, so
/// `g^r_{n̄} = −Σ_{π ≠ whole} f^r_{|π|} Π_B g^{θ(B)}_{|B|}`, graded by `|n̄|`.
pub fn nseries_revert(f: &NSeries) -> Result<NSeries> {
    nseries_revert_with(f, Limits::global())
}

pub fn nseries_revert_with(f: &NSeries, limits: &Limits) -> Result<NSeries> {
    f.require_unital()?;
    check_shape(f.vars, f.order, limits)?;
    let vars = f.vars;
    let mut g = NSeries::identity(vars, f.order)?;
    for w in 2..=f.order {
        for n in multi_indices(vars, w) {
            let colours = element_colours(&n);
            let mut sums = vec![Rational::zero(); vars];
            for_each_coloured_partition(&n, |blocks, cols| {
                if blocks.len() == 1 {
                    return;
                }
                let mut prod = Rational::one();
                for (c, m) in cols.iter().zip(block_counts(blocks, &colours, vars)) {
                    prod *= g.coeff(*c, &m);
                    if prod.is_zero() {
                        return;
                    }
                }
                let p = profile(cols, vars);
                for r in 1..=vars as u32 {
                    sums[r as usize - 1] -= f.coeff(r, &p) * &prod;
                }
            });
            for (r, v) in sums.into_iter().enumerate() {
                g.set(r as u32 + 1, n.clone(), v)?;
            }
        }
    }
    Ok(g)
}

/// Coproducts and antipodes of `𝓕(N)` on polynomials, memoized per generator.
struct ColouredHopf<'a> {
    limits: &'a Limits,
    coproducts: HashMap<Generator, TensorElement>,
    antipodes: HashMap<Generator, Polynomial>,
}

impl<'a> ColouredHopf<'a> {
    fn new(limits: &'a Limits) -> Self {
        ColouredHopf {
            limits,
            coproducts: HashMap::new(),
            antipodes: HashMap::new(),
        }
    }

    fn generator_coproduct(&mut self, g: &Generator) -> Result<TensorElement> {
        if let Some(t) = self.coproducts.get(g) {
            return Ok(t.clone());
        }
        let Generator::Pi { colour, counts } = g else {
            return Err(Error::domain(format!("{g} is not a coloured generator")));
        };
        let t = coloured_coproduct_with(*colour, &MultiIndex(counts.clone()), self.limits)?;
        self.coproducts.insert(g.clone(), t.clone());
        Ok(t)
    }

    fn monomial_coproduct(&mut self, m: &Monomial) -> Result<TensorElement> {
        let mut acc = TensorElement::one();
        for (g, e) in m.factors() {
            let d = self.generator_coproduct(g)?;
            for _ in 0..*e {
                acc = acc.mul(&d)?;
            }
        }
        Ok(acc)
    }

    /// `S(x) = −x − Σ' S(x') x''` over the terms with both legs of positive degree.
    fn generator_antipode(&mut self, g: &Generator) -> Result<Polynomial> {
        if let Some(p) = self.antipodes.get(g) {
            return Ok(p.clone());
        }
        let x = Polynomial::generator(g.clone());
        let mut s = -x;
        for (l, r, c) in self.generator_coproduct(g)?.terms() {
            if l.is_one() || r.is_one() {
                continue;
            }
            let sl = self.monomial_antipode(l)?;
            s = s - sl.checked_mul(&Polynomial::monomial(r.clone()))?.scale(c);
        }
        self.antipodes.insert(g.clone(), s.clone());
        Ok(s)
    }

    fn monomial_antipode(&mut self, m: &Monomial) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for (g, e) in m.factors() {
            let s = self.generator_antipode(g)?;
            acc = acc.checked_mul(&s.pow(*e))?;
        }
        Ok(acc)
    }
}

/// `S(Π̃^r_{n̄})` by the grade recursion.
pub fn coloured_antipode(r: u32, n: &MultiIndex) -> Result<Polynomial> {
    let limits = Limits::global();
    check_shape(n.vars(), n.weight(), limits)?;
    let p = Polynomial::pi(r, n.entries())?;
    match p.generators().into_iter().next() {
        Some(g) => ColouredHopf::new(limits).generator_antipode(&g),
        None => Ok(p),
    }
}

/// Coassociativity, both counit laws and both antipode laws on every
/// `Π̃^r_{n̄}` with `N = vars` and `2 <= |n̄| <= upto`.
pub fn check_coloured_axioms(vars: usize, upto: u32) -> Result<CheckReport> {
    check_coloured_axioms_with(vars, upto, Limits::global())
}

pub fn check_coloured_axioms_with(vars: usize, upto: u32, limits: &Limits) -> Result<CheckReport> {
    check_shape(vars, upto, limits)?;
    let mut report = CheckReport::new("nseries", upto as usize);
    let mut h = ColouredHopf::new(limits);
    let counit = |m: &Monomial| if m.is_one() { Rational::one() } else { Rational::zero() };
    for w in 2..=upto {
        for n in multi_indices(vars, w) {
            for r in 1..=vars as u32 {
                let g = Generator::pi(r, n.entries().to_vec())?;
                let x = Polynomial::generator(g.clone());
                let d = h.generator_coproduct(&g)?;

                let mut lhs: BTreeMap<(Monomial, Monomial, Monomial), Rational> = BTreeMap::new();
                let mut rhs = lhs.clone();
                for (l, rr, c) in d.terms() {
                    for (l1, l2, c2) in h.monomial_coproduct(l)?.terms() {
                        *lhs.entry((l1.clone(), l2.clone(), rr.clone())).or_insert_with(Rational::zero) += c * c2;
                    }
                    for (r1, r2, c2) in h.monomial_coproduct(rr)?.terms() {
                        *rhs.entry((l.clone(), r1.clone(), r2.clone())).or_insert_with(Rational::zero) += c * c2;
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                rhs.retain(|_, c| !c.is_zero());
                if !report.record(lhs == rhs, || format!("coassociativity fails on {g}")) {
                    return Ok(report);
                }

                let left = d.contract(
                    |l| Ok(Polynomial::constant(counit(l))),
                    |r| Ok(Polynomial::monomial(r.clone())),
                )?;
                let right = d.contract(
                    |l| Ok(Polynomial::monomial(l.clone())),
                    |r| Ok(Polynomial::constant(counit(r))),
                )?;
                if !report.record(left == x && right == x, || format!("counit law fails on {g}")) {
                    return Ok(report);
                }

                let mut hs = |m: &Monomial| h.monomial_antipode(m);
                let s_left = d.contract(&mut hs, |r| Ok(Polynomial::monomial(r.clone())))?;
                if !report.record(s_left.is_zero(), || format!("m(S⊗id)Δ{g} = {s_left}")) {
                    return Ok(report);
                }
                let mut terms = Vec::new();
                for (l, rr, c) in d.terms() {
                    terms.push((l.clone(), rr.clone(), c.clone()));
                }
                let mut s_right = Polynomial::zero();
                for (l, rr, c) in terms {
                    let sr = h.monomial_antipode(&rr)?;
                    s_right = s_right + Polynomial::monomial(l).checked_mul(&sr)?.scale(&c);
                }
                if !report.record(s_right.is_zero(), || format!("m(id⊗S)Δ{g} = {s_right}")) {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
