//! Exact computation in the Faà di Bruno Hopf algebra of formal
//! diffeomorphisms tangent to the identity.
//!
//! Everything is over the rationals. The layers, bottom up:
//!
//! - [`arith`], [`poly`]: rationals, type vectors, sparse polynomials and
//!   tensors in the `a_n`, `δ_n` and coloured generators.
//! - [`partitions`]: set partitions, Bell polynomials, Stirling numbers.
//! - [`series`]: composition and reversion of exponential series.
//! - [`hopf`]: coproduct, antipode, characters, primitive elements.
//! - [`cm`]: the `δ_n` coordinates and their coproduct.
//! - [`dual`], [`words`]: the graded dual, shuffle and concatenation
//!   algebras, and the embedding `Γ_n`.
//! - [`coloured`]: series in several variables and coloured partitions.
//! - [`cli`]: the `fdb` command line.
//!
//! Enumeration sizes are capped by [`Limits`].

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod poly;

pub mod partitions;
pub mod series;

pub mod cm;
pub mod hopf;

pub mod coloured;
pub mod dual;
pub mod words;

pub mod cli;

pub use arith::{Rational, TypeVector};
pub use error::{Error, Result};
pub use limits::Limits;
pub use poly::{Family, Generator, Monomial, Polynomial, TensorElement};
pub use series::ExpSeries;
