//! Building, classifying and decomposing air-pocket paths.
//!
//! cargo run --example paths

use airpockets::path::Decomposition;
use airpockets::LatticePath;

fn main() {
    let p: LatticePath = "UUD2UUDUD2".parse().expect("valid path");
    println!("path     {p}");
    println!("profile  {:?}", p.profile());
    let c = p.classify();
    println!(
        "length {} final {} heights [{}, {}] dap {} gdap {} prime {}",
        c.length, c.final_ordinate, c.min_height, c.max_height, c.is_dap, c.is_gdap, c.is_prime
    );

    // Two consecutive down-steps are rejected at construction.
    match "UUDD".parse::<LatticePath>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("UUDD     rejected: {e}"),
    }

    println!("mirror   {}", p.mirror());
    match p.first_return_decompose().expect("a DAP") {
        Decomposition::ThenPrime(beta, gamma) => println!("split    {beta} | {gamma}"),
        other => println!("split    {other:?}"),
    }

    let q: LatticePath = "UUD2".parse().unwrap();
    let r: LatticePath = "D2UUUD3".parse().unwrap();
    let merged = q.merge(&r).expect("mergeable");
    println!(
        "merge    {q} + {r} = {merged} (ends at {})",
        merged.final_ordinate()
    );
}
