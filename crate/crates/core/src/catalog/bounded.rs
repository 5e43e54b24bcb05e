//! Prefixes confined to a horizontal strip.
//!
//! For a window `[lo, hi]` containing 0, let `f_k` (`g_k`) count prefixes
//! ending at ordinate `k` with an up-step (down-step), the empty path being
//! carried by `f_0`. Then
//!
//! ```text
//! f_lo = [lo == 0]
//! f_k  = [k == 0] + x (f_{k-1} + g_{k-1})      lo < k <= hi
//! g_k  = x (f_{k+1} + ... + f_hi)
//! ```
//!
//! Written as `A * (f, g) = b`, the window `[0, t]` gives the matrix `A_t`,
//! and `[-t, t]` gives `A'_t`, which has the same matrix as `A_{2t}` and a
//! right-hand side moved to the `f_0` row.

use std::collections::HashMap;

use crate::series::TruncatedSeries;
use crate::system::{SeriesSystem, SystemError};

use super::{poly, radicand_sqrt, CatalogError};

/// Builds the strip system for `[lo, hi]`. Unknowns are ordered
/// `f_lo..=f_hi, g_lo..=g_hi`.
pub fn window_system(lo: i64, hi: i64, order: usize) -> Result<SeriesSystem, CatalogError> {
    if lo > 0 || hi < 0 {
        return Err(CatalogError::BadParams(format!(
            "window [{lo}, {hi}] must contain 0"
        )));
    }
    let width = (hi - lo + 1) as usize;
    let dim = 2 * width;
    let zero = TruncatedSeries::zero(order);
    let x = TruncatedSeries::x(order);
    let minus_one = TruncatedSeries::monomial(-1, 0, order);
    let mut m = vec![vec![zero.clone(); dim]; dim];
    let mut b = vec![zero; dim];
    for i in 0..width {
        m[i][i] = minus_one.clone();
        if i > 0 {
            m[i][i - 1] = x.clone();
            m[i][width + i - 1] = x.clone();
        }
        if lo + i as i64 == 0 {
            b[i] = minus_one.clone();
        }
        let gi = width + i;
        m[gi][gi] = minus_one.clone();
        for j in i + 1..width {
            m[gi][j] = x.clone();
        }
    }
    Ok(SeriesSystem::new(m, b)?)
}

/// `A_t`, the strip `[0, t]`.
pub fn transfer_matrix(t: usize, order: usize) -> SeriesSystem {
    window_system(0, t as i64, order).expect("[0, t] contains 0")
}

/// `A'_t`, the strip `[-t, t]`.
pub fn symmetric_transfer_matrix(t: usize, order: usize) -> SeriesSystem {
    window_system(-(t as i64), t as i64, order).expect("[-t, t] contains 0")
}

/// `D_t` from `D_{t+2} = (1 + x - x^2) D_{t+1} - x D_t`, `D_0 = 1`,
/// `D_1 = 1 - x^2`.
pub fn d_recurrence(t: usize, order: usize) -> TruncatedSeries {
    d_sequence(t, order).pop().unwrap()
}

fn d_sequence(t: usize, order: usize) -> Vec<TruncatedSeries> {
    let mut out = vec![TruncatedSeries::one(order), poly(&[1, 0, -1], order)];
    let c = poly(&[1, 1, -1], order);
    let x = TruncatedSeries::x(order);
    while out.len() <= t {
        let n = out.len();
        let next = &(&c * &out[n - 1]) - &(&x * &out[n - 2]);
        out.push(next);
    }
    out.truncate(t + 1);
    out
}

/// `D_t` from the closed form in `W = sqrt(x^4 - 2x^3 - x^2 - 2x + 1)`:
///
/// ```text
/// D_t = 2^t x^{t+1} / W * ( (W - x^2 + x - 1) / (W - x^2 + x + 1)^{t+1}
///                           + (-1)^{t+1} (W + x^2 - x + 1) / (W + x^2 - x - 1)^{t+1} )
/// ```
///
/// `W + x^2 - x - 1` has valuation 1, so the second quotient has a pole that
/// the prefactor cancels; the two terms are put over a common denominator
/// before dividing.
pub fn d_closed(t: usize, order: usize) -> TruncatedSeries {
    let w = order + t + 4;
    let wr = radicand_sqrt(w);
    let p = |c: &[i64]| poly(c, w);
    let e = t as i64 + 1;
    let num1 = &wr + &p(&[-1, 1, -1]);
    let den1 = (&wr + &p(&[1, 1, -1])).pow(e).unwrap();
    let num2 = &wr + &p(&[1, -1, 1]);
    let den2 = (&wr + &p(&[-1, -1, 1])).pow(e).unwrap();
    let sign = if (t + 1).is_multiple_of(2) { 1 } else { -1 };
    let combined = &(&num1 * &den2) + &(&num2 * &den1).scale_int(sign);
    let numer = combined.shift(e).unwrap().scale_int(1 << t);
    let denom = &(&wr * &den1) * &den2;
    numer.try_div(&denom).expect("pole cancels").truncate(order)
}

/// `D_t = det(A_t)`, computed exactly from the assembled matrix.
pub fn d_determinant(t: usize, order: usize) -> TruncatedSeries {
    transfer_matrix(t, order).polynomial_determinant()
}

/// `N_k^t` for `0 <= k <= 2t + 1` from
///
/// ```text
/// N_0^t      = D_t
/// N_{2t+1}^t = 0
/// N_k^t      = x N_{k-1}^{t-1}              1 <= k <= t
/// N_{t+k}^t  = x N_{t+k-2}^{t-1}            2 <= k <= t
/// N_{t+1}^t  = x^2 N_0^{t-1} + x N_t^{t-1}
/// ```
pub fn n_recurrence(k: usize, t: usize, order: usize) -> Result<TruncatedSeries, CatalogError> {
    if k > 2 * t + 1 {
        return Err(CatalogError::IndexOutOfRange { k: k as i64, t });
    }
    let ds = d_sequence(t, order);
    let mut memo = HashMap::new();
    Ok(n_rec(k, t, order, &ds, &mut memo))
}

fn n_rec(
    k: usize,
    t: usize,
    order: usize,
    ds: &[TruncatedSeries],
    memo: &mut HashMap<(usize, usize), TruncatedSeries>,
) -> TruncatedSeries {
    if let Some(v) = memo.get(&(k, t)) {
        return v.clone();
    }
    let x = TruncatedSeries::x(order);
    let v = if k == 0 {
        ds[t].clone()
    } else if k == 2 * t + 1 {
        TruncatedSeries::zero(order)
    } else if k <= t {
        &x * &n_rec(k - 1, t - 1, order, ds, memo)
    } else if k == t + 1 {
        let x2 = poly(&[0, 0, 1], order);
        &(&x2 * &n_rec(0, t - 1, order, ds, memo)) + &(&x * &n_rec(t, t - 1, order, ds, memo))
    } else {
        &x * &n_rec(k - 2, t - 1, order, ds, memo)
    };
    memo.insert((k, t), v.clone());
    v
}

/// `N_k^t = det A_t(k)`: the determinant with column `k` replaced by the
/// right-hand side.
pub fn n_determinant(k: usize, t: usize, order: usize) -> Result<TruncatedSeries, CatalogError> {
    if k > 2 * t + 1 {
        return Err(CatalogError::IndexOutOfRange { k: k as i64, t });
    }
    Ok(transfer_matrix(t, order)
        .with_column_replaced(k)
        .polynomial_determinant())
}

/// `Ñ_k^t` for `-t <= k <= 3t + 1`: the determinant of `A'_t` with the
/// column of unknown `k + t` replaced. Indices `-t..=t` are the `f_k`,
/// `2t+1+k` is `g_k`.
pub fn n_tilde_determinant(
    k: i64,
    t: usize,
    order: usize,
) -> Result<TruncatedSeries, CatalogError> {
    let ti = t as i64;
    if k < -ti || k > 3 * ti + 1 {
        return Err(CatalogError::IndexOutOfRange { k, t });
    }
    Ok(symmetric_transfer_matrix(t, order)
        .with_column_replaced((k + ti) as usize)
        .polynomial_determinant())
}

/// `det A'_t`.
pub fn d_prime_determinant(t: usize, order: usize) -> TruncatedSeries {
    symmetric_transfer_matrix(t, order).polynomial_determinant()
}

/// Closed form for `N_{t+1}^t`:
///
/// ```text
/// 2^{t+2} x^{t+3} (-1)^t / (W (x^2-x-1)^2 - W^3)
///     * ( (x^2-x-1+W)^{-t} - (x^2-x-1-W)^{-t} )
/// ```
pub fn n_upper_closed(t: usize, order: usize) -> TruncatedSeries {
    let w = order + 2 * t + 6;
    let wr = radicand_sqrt(w);
    let base = poly(&[-1, -1, 1], w);
    let plus = (&base + &wr).pow(t as i64).unwrap();
    let minus = (&base - &wr).pow(t as i64).unwrap();
    let sign = if t.is_multiple_of(2) { 1 } else { -1 };
    let numer = (&minus - &plus)
        .shift(t as i64 + 3)
        .unwrap()
        .scale_int(sign * (1 << (t + 2)));
    let outer = &(&(&base * &base) * &wr) - &(&(&wr * &wr) * &wr);
    let denom = &(&outer * &plus) * &minus;
    numer.try_div(&denom).expect("pole cancels").truncate(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndKind {
    /// Ends with an up-step (or is empty).
    F,
    /// Ends with a down-step.
    G,
}

/// `f_k^t = N_k^t / D_t` or `g_k^t = N_{t+1+k}^t / D_t` (Cramer's rule).
pub fn bounded_0t(
    k: usize,
    t: usize,
    kind: EndKind,
    order: usize,
) -> Result<TruncatedSeries, CatalogError> {
    if k > t {
        return Err(CatalogError::IndexOutOfRange { k: k as i64, t });
    }
    let idx = match kind {
        EndKind::F => k,
        EndKind::G => t + 1 + k,
    };
    let n = n_recurrence(idx, t, order)?;
    Ok(n.try_div(&d_recurrence(t, order))?)
}

/// Solution `(f_0..f_t, g_0..g_t)` of the `[0, t]` strip system.
pub fn bounded_0t_system(t: usize, order: usize) -> Result<Vec<TruncatedSeries>, SystemError> {
    transfer_matrix(t, order).solve()
}

/// Nonempty grand paths in `[0, t]` from the closed forms, `N_{t+1}^t / D_t`.
pub fn g0t_closed(t: usize, order: usize) -> TruncatedSeries {
    n_upper_closed(t, order)
        .try_div(&d_closed(t, order))
        .expect("D_t has constant term 1")
}

/// Grand paths in `[-t, t]` (the empty path included):
/// `D_{t-1} / D_{2t} * (D_t + N_{t+1}^t)`.
pub fn bounded_sym(t: usize, order: usize) -> Result<TruncatedSeries, CatalogError> {
    if t == 0 {
        return Err(CatalogError::BadParams(
            "the symmetric strip needs t >= 1".into(),
        ));
    }
    let ds = d_sequence(2 * t, order);
    let n = n_recurrence(t + 1, t, order)?;
    let num = &ds[t - 1] * &(&ds[t] + &n);
    Ok(num.try_div(&ds[2 * t])?)
}

/// `(Ñ_0^t + Ñ_{2t+1}^t) / D'_t` with every determinant taken directly.
pub fn bounded_sym_cramer(t: usize, order: usize) -> Result<TruncatedSeries, CatalogError> {
    let f = n_tilde_determinant(0, t, order)?;
    let g = n_tilde_determinant(2 * t as i64 + 1, t, order)?;
    Ok((&f + &g).try_div(&d_prime_determinant(t, order))?)
}

/// Per-ordinate solution of the `[-t, t]` strip:
/// `(k, f_k^t, g_k^t)` for `k = -t..=t`.
pub fn bounded_sym_system(
    t: usize,
    order: usize,
) -> Result<Vec<(i64, TruncatedSeries, TruncatedSeries)>, SystemError> {
    let sol = symmetric_transfer_matrix(t, order).solve()?;
    let width = 2 * t + 1;
    Ok((0..width)
        .map(|i| (i as i64 - t as i64, sol[i].clone(), sol[width + i].clone()))
        .collect())
}

/// Minorized prefixes resolved by ordinate: `(k, f_k + g_k)` for
/// `k = m..=order`, from the strip `[m, order]`. Exact to `x^order` because a
/// prefix of length `n` never climbs above `n`.
pub fn minorized_by_ordinate(
    m: i64,
    order: usize,
) -> Result<Vec<(i64, TruncatedSeries)>, CatalogError> {
    let hi = order as i64;
    let sol = window_system(m, hi, order)?.solve()?;
    let width = (hi - m + 1) as usize;
    Ok((0..width)
        .map(|i| (m + i as i64, &sol[i] + &sol[width + i]))
        .collect())
}

/// Sum of [`minorized_by_ordinate`] over every ordinate.
pub fn minorized_from_system(m: i64, order: usize) -> Result<TruncatedSeries, CatalogError> {
    Ok(minorized_by_ordinate(m, order)?
        .into_iter()
        .fold(TruncatedSeries::zero(order), |acc, (_, s)| &acc + &s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_determinants() {
        assert_eq!(d_recurrence(1, 12), poly(&[1, 0, -1], 12));
        assert_eq!(d_recurrence(2, 12), poly(&[1, 0, -2, -1, 1], 12));
        assert_eq!(d_recurrence(3, 12), poly(&[1, 0, -3, -2, 2, 2, -1], 12));
    }

    #[test]
    fn three_routes_for_d() {
        for t in 0..=4 {
            let r = d_recurrence(t, 20);
            assert_eq!(r, d_closed(t, 20), "closed t={t}");
            assert_eq!(r, d_determinant(t, 20), "det t={t}");
            assert_eq!(
                r,
                transfer_matrix(t, 20).determinant().unwrap(),
                "elim t={t}"
            );
        }
    }

    #[test]
    fn window_zero_is_identity_like() {
        let sol = bounded_0t_system(0, 5).unwrap();
        assert_eq!(sol[0], TruncatedSeries::one(5));
        assert!(sol[1].is_zero());
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            n_recurrence(4, 1, 5),
            Err(CatalogError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            bounded_0t(3, 2, EndKind::F, 5),
            Err(CatalogError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            n_tilde_determinant(-2, 1, 5),
            Err(CatalogError::IndexOutOfRange { .. })
        ));
        assert!(window_system(1, 3, 5).is_err());
    }
}
