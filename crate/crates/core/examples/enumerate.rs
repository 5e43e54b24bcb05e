//! Brute-force enumeration and memoised counting, checked against the
//! generating functions.
//!
//! cargo run --example enumerate

use airpockets::evaluate;
use airpockets::oracle::{count_paths, enum_paths, FamilySpec, StepKind};
use airpockets::Params;

fn main() {
    let spec = FamilySpec::gdap().bounded(-1, 1);
    println!("grand paths of length 4 inside [-1, 1]:");
    for p in enum_paths(4, &spec).unwrap() {
        println!("  {p}");
    }

    let families = [
        ("G", Params::default(), FamilySpec::gdap()),
        (
            "Gm",
            Params::default(),
            FamilySpec::gdap().start_step(StepKind::Down),
        ),
        (
            "prefix",
            Params::k(-2),
            FamilySpec::prefix().end_ordinate(-2),
        ),
        ("minorized", Params::m(-1), FamilySpec::prefix().min_y(-1)),
        ("sym", Params::t(2), FamilySpec::gdap().bounded(-2, 2)),
    ];
    let max_n = 12;
    for (name, params, spec) in families {
        let gf = evaluate(name, params, max_n)
            .unwrap()
            .series
            .to_i128s()
            .unwrap();
        let counts: Vec<i128> = (0..=max_n)
            .map(|n| count_paths(n, &spec).unwrap() as i128)
            .collect();
        let verdict = if gf == counts { "matches" } else { "MISMATCH" };
        println!("{name:<10} {verdict} {counts:?}");
    }
}
