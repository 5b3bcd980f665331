//! Exact scalars and the counting functions the rest of the crate is built on.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The scalar field: reduced fractions of unbounded integers.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int_to_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"` or `"p"`. The result is always reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |m: &str| Error::parse("rational", format!("{m}: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
            if q.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad("not an integer"))?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Canonical text form: `"p/q"` with `q > 0`, or `"p"` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// serde adapter storing rationals as canonical strings.
pub mod rational_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n choose k`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Block-size profile `(λ_1, …, λ_n)` of a set partition of an `n`-set:
/// `λ_i` blocks of size `i`, so `Σ i·λ_i = n` and `Σ λ_i = k` blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct TypeVector {
    entries: Vec<u32>,
}

impl TypeVector {
    /// Builds a type vector, padding with zeros to length `n = Σ i·λ_i`.
    pub fn new(entries: impl Into<Vec<u32>>) -> Result<Self> {
        let mut entries = entries.into();
        let n: u64 = entries
            .iter()
            .enumerate()
            .map(|(i, &l)| (i as u64 + 1) * l as u64)
            .sum();
        if n == 0 {
            return Err(Error::domain("type vector must describe a nonempty set"));
        }
        entries.resize(n as usize, 0);
        Ok(TypeVector { entries })
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.entries.iter().map(|&l| l as usize).sum()
    }

    /// Full length-`n` vector, trailing zeros included.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `λ_i`, one-based; zero beyond `n`.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    /// Entries with trailing zeros removed.
    pub fn trimmed(&self) -> &[u32] {
        let end = self.entries.iter().rposition(|&l| l != 0).map_or(0, |p| p + 1);
        &self.entries[..end]
    }

    /// `(size, multiplicity)` for every block size that occurs.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(i, &l)| (i as u32 + 1, l))
    }
}

impl TryFrom<Vec<u32>> for TypeVector {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        TypeVector::new(v)
    }
}

impl From<TypeVector> for Vec<u32> {
    fn from(t: TypeVector) -> Self {
        t.trimmed().to_vec()
    }
}

impl fmt::Debug for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeVector{:?}", self.trimmed())
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.trimmed().iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `n! / (λ_1!⋯λ_n! · (1!)^{λ_1}⋯(n!)^{λ_n})`: the number of set partitions
/// of an `n`-set with block profile `tv`.
pub fn fdb_multinomial(tv: &TypeVector) -> BigInt {
    let mut denom = BigInt::one();
    for (size, mult) in tv.nonzero() {
        denom *= factorial(mult);
        denom *= num_traits::pow(factorial(size), mult as usize);
    }
    let num = factorial(tv.n() as u32);
    debug_assert!((&num % &denom).is_zero());
    num / denom
}

/// All type vectors of weight `n`, restricted to `k` blocks when given,
/// in ascending lexicographic order of `(λ_1, λ_2, …)`.
pub fn enumerate_type_vectors(n: usize, k: Option<usize>) -> Vec<TypeVector> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = vec![0u32; n];
    fill_type_vectors(1, n, k, &mut current, &mut out);
    out
}

fn fill_type_vectors(
    size: usize,
    remaining: usize,
    blocks_left: Option<usize>,
    current: &mut Vec<u32>,
    out: &mut Vec<TypeVector>,
) {
    let n = current.len();
    if size > n {
        if remaining == 0 && blocks_left.is_none_or(|b| b == 0) {
            out.push(TypeVector {
                entries: current.clone(),
            });
        }
        return;
    }
    let mut max = remaining / size;
    if let Some(b) = blocks_left {
        max = max.min(b);
    }
    for mult in 0..=max {
        current[size - 1] = mult as u32;
        fill_type_vectors(
            size + 1,
            remaining - mult * size,
            blocks_left.map(|b| b - mult),
            current,
            out,
        );
    }
    current[size - 1] = 0;
}
