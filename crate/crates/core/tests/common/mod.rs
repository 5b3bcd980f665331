//! Independent oracles and seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use fdb::arith::{factorial, Rational};
use fdb::coloured::{multi_indices, MultiIndex, NSeries};
use fdb::series::ExpSeries;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `p/q` with `|p| <= 9`, `1 <= q <= 4`.
pub fn small_rational(rng: &mut TestRng) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
}

pub fn random_unital(rng: &mut TestRng, order: usize) -> ExpSeries {
    let mut c = vec![Rational::one()];
    c.extend((1..order).map(|_| small_rational(rng)));
    ExpSeries::new(c).unwrap()
}

pub fn random_nseries(rng: &mut TestRng, vars: usize, order: u32) -> NSeries {
    let mut f = NSeries::identity(vars, order).unwrap();
    for w in 2..=order {
        for n in multi_indices(vars, w) {
            for r in 1..=vars as u32 {
                if rng.gen_bool(0.6) {
                    f.set(r, n.clone(), small_rational(rng)).unwrap();
                }
            }
        }
    }
    f
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u32))
}

/// Truncated ordinary power series `c_0 + c_1 t + …`.
fn ordinary(s: &ExpSeries) -> Vec<Rational> {
    let mut v = vec![Rational::zero()];
    v.extend((1..=s.order()).map(|n| s.coeff(n) / fact(n)));
    v
}

fn mul_trunc(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..n - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// `f ∘ g` by Horner evaluation of `f` at the truncated series `g`.
pub fn compose_by_horner(f: &ExpSeries, g: &ExpSeries) -> ExpSeries {
    let fo = ordinary(f);
    let go = ordinary(g);
    let mut acc = vec![Rational::zero(); go.len()];
    for c in fo.iter().rev() {
        acc = mul_trunc(&acc, &go);
        acc[0] += c;
    }
    ExpSeries::new((1..go.len()).map(|n| &acc[n] * fact(n)).collect()).unwrap()
}

/// Inverse of a unital `f` by the fixed point `g ← t − (f(g) − g)`.
pub fn revert_by_iteration(f: &ExpSeries) -> ExpSeries {
    let order = f.order();
    let mut g = ExpSeries::identity(order);
    for _ in 0..order {
        let fg = compose_by_horner(f, &g);
        let next: Vec<Rational> = (1..=order)
            .map(|n| {
                let t = if n == 1 { Rational::one() } else { Rational::zero() };
                t - (fg.coeff(n) - g.coeff(n))
            })
            .collect();
        g = ExpSeries::new(next).unwrap();
    }
    g
}

type Multivariate = BTreeMap<Vec<u32>, Rational>;

fn mv_mul(a: &Multivariate, b: &Multivariate, max: u32) -> Multivariate {
    let mut out = Multivariate::new();
    for (x, c) in a {
        for (y, d) in b {
            let z: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            if z.iter().sum::<u32>() <= max {
                *out.entry(z).or_insert_with(Rational::zero) += c * d;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn component(f: &NSeries, r: u32) -> Multivariate {
    f.coeffs()
        .filter(|(c, _, _)| *c == r)
        .map(|(_, n, v)| (n.entries().to_vec(), v / Rational::from_integer(n.factorial())))
        .collect()
}

/// `f ∘ g` for N-series by expanding `f^r(g^1, …, g^N)` as polynomials.
pub fn nseries_substitute(f: &NSeries, g: &NSeries) -> NSeries {
    let vars = f.vars();
    let max = f.order();
    let gs: Vec<Multivariate> = (1..=vars as u32).map(|i| component(g, i)).collect();
    let mut out = NSeries::identity(vars, max).unwrap();
    for r in 1..=vars as u32 {
        let mut acc = Multivariate::new();
        for (k, c) in component(f, r) {
            let mut term: Multivariate = [(vec![0; vars], c)].into_iter().collect();
            for (i, &e) in k.iter().enumerate() {
                for _ in 0..e {
                    term = mv_mul(&term, &gs[i], max);
                }
            }
            for (z, v) in term {
                *acc.entry(z).or_insert_with(Rational::zero) += v;
            }
        }
        for (z, v) in acc {
            let n = MultiIndex::new(z).unwrap();
            let scaled = v * Rational::from_integer(n.factorial());
            out.set(r, n, scaled).unwrap();
        }
    }
    out
}
