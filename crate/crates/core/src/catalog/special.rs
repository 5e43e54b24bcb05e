//! The class ℋ: DAP whose first-return decomposition `αβ` has
//! `α ∈ P ∪ {UD}`, `α♭ ∈ ℋ` when `α ≠ UD`, `β ∈ ℋ`, and `h(α) >= h(β)`.
//!
//! With `A_k` (`B_k`) counting members of maximal height exactly (at most)
//! `k`:
//!
//! ```text
//! A_0 = B_0 = 1,   A_1 = x^2 B_1,   A_k = x A_{k-1} B_k,   B_k = B_{k-1} + A_k
//! ```
//!
//! so each step is linear in `B_k`: `B_k = B_{k-1} / (1 - c_k)` with
//! `c_1 = x^2` and `c_k = x A_{k-1}`.

use crate::series::TruncatedSeries;

use super::poly;

/// `B(x) = (1 - x^3 - sqrt(x^6 - 2x^3 - 4x^2 + 1)) / (2x^2)`.
pub fn special_h(order: usize) -> TruncatedSeries {
    let w = order + 2;
    let root = poly(&[1, 0, -4, -2, 0, 0, 1], w)
        .sqrt()
        .expect("constant term 1");
    let num = &poly(&[1, 0, 0, -1], w) - &root;
    num.try_div(&poly(&[0, 0, 2], w))
        .expect("numerator has valuation 2")
        .truncate(order)
}

/// `(2x^2 B - (1 - x^3))^2 - (x^6 - 2x^3 - 4x^2 + 1)`; zero for the true `B`.
pub fn special_h_residual(b: &TruncatedSeries) -> TruncatedSeries {
    let n = b.order();
    let lhs = &(b * &poly(&[0, 0, 2], n)) - &poly(&[1, 0, 0, -1], n);
    &(&lhs * &lhs) - &poly(&[1, 0, -4, -2, 0, 0, 1], n)
}

/// `(A_0, B_0), ..., (A_k, B_k)` by the forward recurrence. `B_1 = 1/(1-x^2)`
/// includes the empty path.
pub fn special_h_levels(k: usize, order: usize) -> Vec<(TruncatedSeries, TruncatedSeries)> {
    let one = TruncatedSeries::one(order);
    let mut out = vec![(one.clone(), one.clone())];
    for level in 1..=k {
        let (a_prev, b_prev) = &out[level - 1];
        let c = if level == 1 {
            poly(&[0, 0, 1], order)
        } else {
            a_prev.shift(1).expect("positive shift")
        };
        let b = b_prev.try_div(&(&one - &c)).expect("1 - c_k is a unit");
        let a = &b - b_prev;
        out.push((a, b));
    }
    out
}

/// `B_k`: members of ℋ of height at most `k`.
pub fn special_h_bounded(k: usize, order: usize) -> TruncatedSeries {
    special_h_levels(k, order).pop().unwrap().1
}

/// `B_{k-1} (x^2 B_k + x) - ((1 - x^3 + x) B_k - 1)`: the backward relation
/// between consecutive levels, cleared of its denominator.
pub fn backward_residual(b_prev: &TruncatedSeries, b_k: &TruncatedSeries) -> TruncatedSeries {
    let n = b_k.order().min(b_prev.order());
    let lhs = b_prev * &(&(b_k * &poly(&[0, 0, 1], n)) + &TruncatedSeries::x(n));
    let rhs = &(b_k * &poly(&[1, 1, 0, -1], n)) - &TruncatedSeries::one(n);
    &lhs - &rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_expansion() {
        let b = special_h(12).to_i128s().unwrap();
        assert_eq!(b, vec![1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273]);
        assert!(special_h_residual(&special_h(30)).is_zero());
    }

    #[test]
    fn levels_converge_and_satisfy_backward_relation() {
        let order = 16;
        let levels = special_h_levels(order, order);
        assert_eq!(levels[order].1, special_h(order));
        assert_eq!(levels[1].1.to_i128s().unwrap()[..6], [1, 0, 1, 0, 1, 0]);
        for k in 1..=order {
            assert!(
                backward_residual(&levels[k - 1].1, &levels[k].1).is_zero(),
                "k={k}"
            );
        }
    }

    #[test]
    fn literal_nonempty_b1_breaks_the_relation() {
        let order = 8;
        let b1 = poly(&[0, 0, 1], order)
            .try_div(&poly(&[1, 0, -1], order))
            .unwrap();
        assert!(!backward_residual(&TruncatedSeries::one(order), &b1).is_zero());
    }
}
