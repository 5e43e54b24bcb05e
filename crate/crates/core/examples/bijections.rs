//! Height-bounded grand paths and parity-alternating compositions.
//!
//! cargo run --example bijections

use airpockets::bijection::{block_decompose, phi, phi_inv, psi, psi_inv};
use airpockets::oracle::{enum_paths, FamilySpec};
use airpockets::printed::{PHI_EXAMPLE_PATH, PSI_EXAMPLE_PATH};
use airpockets::LatticePath;

fn main() {
    let a: LatticePath = PSI_EXAMPLE_PATH.parse().unwrap();
    let blocks: Vec<String> = block_decompose(&a.slice(1, a.len() - 1))
        .blocks
        .iter()
        .map(|b| b.to_string())
        .collect();
    let c = psi(&a).unwrap();
    println!(
        "psi  {a}\n     blocks {}\n     -> {c} -> {}",
        blocks.join(" | "),
        psi_inv(&c).unwrap()
    );

    let b: LatticePath = PHI_EXAMPLE_PATH.parse().unwrap();
    let c = phi(&b).unwrap();
    println!("phi  {b}\n     -> {c} -> {}", phi_inv(&c).unwrap());

    println!("\nphi on every grand path of length 6 inside [-1, 1]:");
    for p in enum_paths(6, &FamilySpec::gdap().bounded(-1, 1)).unwrap() {
        let c = phi(&p).unwrap();
        assert_eq!(phi_inv(&c).unwrap(), p);
        println!("  {p:<12} {c}");
    }
}
