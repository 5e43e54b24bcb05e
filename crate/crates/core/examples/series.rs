//! Exact truncated power series and the catalog of generating functions.
//!
//! cargo run --example series

use airpockets::catalog::NAMES;
use airpockets::{evaluate, Params, TruncatedSeries};

fn main() {
    let order = 12;
    let x = TruncatedSeries::x(order);
    let one = TruncatedSeries::one(order);

    // 1 / (1 - x - x^2) gives the Fibonacci numbers.
    let fib = one.try_div(&(&(&one - &x) - &(&x * &x))).unwrap();
    println!("1/(1-x-x^2)   = {fib}");

    // sqrt(1 - 4x) recovers the Catalan numbers through (1 - sqrt)/2x.
    let s = (&one - &x.scale_int(4)).sqrt().unwrap();
    let catalan = (&one - &s)
        .shift(-1)
        .unwrap()
        .try_div(&TruncatedSeries::monomial(2, 0, order - 1))
        .unwrap();
    println!("Catalan       = {catalan}");

    for (name, params) in [
        ("A", Params::default()),
        ("G", Params::default()),
        ("prefix", Params::k(-1)),
        ("minorized", Params::m(-2)),
        ("g0t", Params::t(3)),
        ("sym", Params::t(2)),
        ("H", Params::default()),
    ] {
        let named = evaluate(name, params, 10).unwrap();
        let ints: Vec<String> = named
            .series
            .to_integers()
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!(
            "{:<16} {}",
            format!("{}{}", name, fmt_params(&params)),
            ints.join(" ")
        );
    }

    println!("\n{} catalog entries:", NAMES.len());
    for (name, desc, params) in NAMES {
        println!("  {name:<17} {params:<4} {desc}");
    }
}

fn fmt_params(p: &Params) -> String {
    let mut out = Vec::new();
    if let Some(k) = p.k {
        out.push(format!("k={k}"));
    }
    if let Some(t) = p.t {
        out.push(format!("t={t}"));
    }
    if let Some(m) = p.m {
        out.push(format!("m={m}"));
    }
    if out.is_empty() {
        String::new()
    } else {
        format!("[{}]", out.join(","))
    }
}
