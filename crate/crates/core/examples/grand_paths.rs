//! Whole grand paths: closed forms against the first-return linear systems.
//!
//! cargo run --example grand_paths

use airpockets::catalog::grand::{grand, grand_from_systems, GrandSeries};

fn main() {
    let order = 15;
    let solved = grand_from_systems(order).expect("system is regular at x = 0");
    for which in GrandSeries::ALL {
        let closed = grand(which, order);
        let system = solved.get(which).truncate(order);
        let ints: Vec<String> = closed
            .to_integers()
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        let agree = if closed.truncate(order) == system {
            "agree"
        } else {
            "DIFFER"
        };
        println!("{:<4} {agree:<6} {}", which.name(), ints.join(" "));
    }
}
