//! The class H of paths built level by level, its generating function, and
//! its comparison with restricted Motzkin paths.
//!
//! cargo run --example special_h

use airpockets::catalog::special::{special_h, special_h_levels};
use airpockets::oracle::{enum_h, enum_motzkin_avoiding};

fn main() {
    let order = 14;
    let h = special_h(order);
    println!("H = {h}");

    for (k, (a, b)) in special_h_levels(3, 8).iter().enumerate() {
        println!("level {}: A = {a}\n         B = {b}", k + 1);
    }

    println!("\nn  |H_n|  Motzkin(no UH, HU, HH)");
    for n in 0..=order {
        let members = enum_h(n).len();
        let motzkin = if n <= 12 {
            enum_motzkin_avoiding(n).len().to_string()
        } else {
            "-".into()
        };
        println!("{n:<2} {members:<6} {motzkin}");
    }
    println!(
        "length 5: {:?}",
        enum_h(5).iter().map(|p| p.to_string()).collect::<Vec<_>>()
    );
}
