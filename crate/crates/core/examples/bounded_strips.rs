//! Paths confined to a horizontal strip: determinants, Cramer numerators and
//! the resulting generating functions.
//!
//! cargo run --example bounded_strips

use airpockets::catalog::bounded::{
    bounded_sym, bounded_sym_cramer, d_closed, d_determinant, d_prime_determinant, d_recurrence,
    g0t_closed, n_determinant, transfer_matrix,
};

fn main() {
    let order = 20;
    for t in 0..=5 {
        let d = d_recurrence(t, order);
        let same = d == d_closed(t, order) && d == d_determinant(t, order);
        println!(
            "D_{t} = {d}{}",
            if same { "" } else { "  (methods disagree)" }
        );
    }

    println!("\nCramer numerators for t = 2:");
    for k in 0..=5 {
        println!("  N_{k}^2 = {}", n_determinant(k, 2, order).unwrap());
    }

    let system = transfer_matrix(2, order);
    println!(
        "\nthe [0, 2] strip is a {}-unknown system",
        system.dimension()
    );

    for t in 1..=4 {
        let g = g0t_closed(t, 12);
        println!("g0t t={t}: {g}");
    }

    for t in 1..=3 {
        let sym = bounded_sym(t, 12).unwrap();
        assert_eq!(sym, bounded_sym_cramer(t, 12).unwrap());
        assert_eq!(d_prime_determinant(t, order), d_recurrence(2 * t, order));
        println!("[-{t}, {t}]: {sym}");
    }
}
