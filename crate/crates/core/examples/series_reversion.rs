//! Composition and reversion of exponential series, read from JSON or
//! built in.
//!
//!     cargo run --example series_reversion
//!     cargo run --example series_reversion -- f.json

use fdb::arith::rat;
use fdb::hopf::{convolve, Character};
use fdb::series::{compose, majorant_bound, revert, ExpSeries};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f: ExpSeries = match std::env::args().nth(1) {
        Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        // t + t²
        None => ExpSeries::new(vec![rat(1), rat(2), rat(0), rat(0), rat(0), rat(0)])?,
    };
    let g = revert(&f)?;
    println!("f      = {}", serde_json::to_string(&f)?);
    println!("f^-1   = {}", serde_json::to_string(&g)?);
    println!("f∘f^-1 = {}", serde_json::to_string(&compose(&f, &g)?)?);

    // Characters compose in the opposite order.
    let (cf, cg) = (Character::from_series(&f)?, Character::from_series(&g)?);
    println!("f * f^-1 = {:?}", convolve(&cf, &cg)?);

    let one = rat(1);
    let bounds: Vec<String> = (1..=6)
        .map(|n| majorant_bound(&one, &one, &one, &one, n).map(|b| b.to_string()))
        .collect::<Result<_, _>>()?;
    println!("majorant for A=B=C=D=1: {}", bounds.join(", "));
    Ok(())
}
