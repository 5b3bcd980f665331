//! The δ coordinates: conversion to and from the a_n, and the coproduct of
//! δ_n by two routes.
//!
//!     cargo run --example connes_moscovici -- 5

use fdb::cm::{a_in_delta, bilinear_component, coproduct_delta, coproduct_delta_closed, delta_in_a};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let upto: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    for n in 1..=upto {
        println!("δ_{n} = {}", delta_in_a(n)?);
        println!("a_{} = {}", n + 1, a_in_delta(n)?);
    }
    for n in 1..=upto {
        let d = coproduct_delta(n)?;
        assert_eq!(d, coproduct_delta_closed(n)?);
        println!("Δδ_{n} = {d}");
        println!("  bilinear part: {}", bilinear_component(&d));
    }
    Ok(())
}
