//! Unbounded families: Dyck paths with air pockets, grand paths and their
//! start/end splits, prefixes ending at a fixed ordinate, and prefixes kept
//! above a line `y = m`.

use std::fmt;
use std::str::FromStr;

use crate::series::{SeriesError, TruncatedSeries};
use crate::system::{SeriesSystem, SystemError};

use super::{poly, radicand_sqrt, CatalogError};

/// `x^4 - 2x^3 - x^2 - 2x + 1`, the radicand shared by every algebraic
/// series in this module.
pub fn radicand(order: usize) -> TruncatedSeries {
    poly(&[1, -2, -1, -2, 1], order)
}

/// `A(x) = (1 - x - x^2 - R) / (2x)`: Dyck paths with air pockets.
pub fn dap(order: usize) -> TruncatedSeries {
    let w = order + 2;
    let r = radicand_sqrt(w);
    let num = &poly(&[1, -1, -1], w) - &r;
    let a = num
        .try_div(&poly(&[0, 2], w))
        .expect("numerator has valuation >= 1");
    a.truncate(order)
}

/// `x^2 + x^2 A + x A + x A^2 - A`, which vanishes for the DAP series.
pub fn dap_functional_residual(a: &TruncatedSeries) -> TruncatedSeries {
    let n = a.order();
    let x = TruncatedSeries::x(n);
    let x2 = poly(&[0, 0, 1], n);
    let xa = &x * a;
    &(&(&(&x2 + &(&x2 * a)) + &xa) + &(&xa * a)) - a
}

/// Prime DAP: `P(x) = x A(x)`.
pub fn prime(order: usize) -> TruncatedSeries {
    &TruncatedSeries::x(order) * &dap(order)
}

/// `s_2 = (1 + x - x^2 - R) / (2x)`, the root with a Taylor expansion at 0.
/// It coincides with the kernel root `r_2` of the minorized equation.
pub fn s2(order: usize) -> TruncatedSeries {
    let w = order + 2;
    let num = &poly(&[1, 1, -1], w) - &radicand_sqrt(w);
    num.try_div(&poly(&[0, 2], w))
        .expect("numerator has valuation >= 1")
        .truncate(order)
}

/// The nine whole-path series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrandSeries {
    /// Start with U, end with a down-step.
    Gp1,
    /// Start with U, end with U.
    Gp2,
    /// Start with U, or empty.
    Gp,
    /// Start with a down-step.
    Gm,
    /// All grand paths.
    G,
    Gm1,
    Gm2,
    /// Grand paths ending with an up-step.
    F0,
    /// Grand paths ending with a down-step.
    G0,
}

impl GrandSeries {
    pub const ALL: [GrandSeries; 9] = [
        GrandSeries::Gp1,
        GrandSeries::Gp2,
        GrandSeries::Gp,
        GrandSeries::Gm,
        GrandSeries::G,
        GrandSeries::Gm1,
        GrandSeries::Gm2,
        GrandSeries::F0,
        GrandSeries::G0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GrandSeries::Gp1 => "Gp1",
            GrandSeries::Gp2 => "Gp2",
            GrandSeries::Gp => "Gp",
            GrandSeries::Gm => "Gm",
            GrandSeries::G => "G",
            GrandSeries::Gm1 => "Gm1",
            GrandSeries::Gm2 => "Gm2",
            GrandSeries::F0 => "f0",
            GrandSeries::G0 => "g0",
        }
    }
}

impl fmt::Display for GrandSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GrandSeries {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GrandSeries::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| CatalogError::UnknownName(s.to_string()))
    }
}

/// Closed forms as rational functions of `x` and `R`.
///
/// For `Gm` and `G` the denominator carries `R^2`; with a single `R` the
/// expressions expand to `1 - x + x^2 - x^3 - ...`, which is not a counting
/// series.
pub fn grand(which: GrandSeries, order: usize) -> TruncatedSeries {
    let w = order + 4;
    let r = radicand_sqrt(w);
    let rad = radicand(w);
    let p = |c: &[i64]| poly(c, w);
    let div = |a: &TruncatedSeries, b: &TruncatedSeries| {
        a.try_div(b).expect("closed form has no pole at x = 0")
    };
    let denom2 = p(&[2, -4, -2, -4, 2]);
    let s = match which {
        GrandSeries::Gp1 => div(&p(&[0, 0, 1]), &r),
        GrandSeries::Gp2 => {
            let num = &(&p(&[1, -1, -1]) * &r) + &p(&[-1, 2, 1, 2, -1]);
            div(&num, &denom2)
        }
        GrandSeries::Gp => {
            let num = &(&p(&[1, -1, 1]) * &r) + &rad;
            div(&num, &denom2)
        }
        GrandSeries::Gm => {
            let a = &p(&[1, -1, 1]) - &r;
            let b = &rad + &(&p(&[1, -1, 1]) * &r);
            let den = (&(&p(&[1, 1, -1]) + &r) * &rad).scale_int(2);
            div(&(&a * &b), &den)
        }
        GrandSeries::G => {
            let num = &rad + &(&p(&[1, -1, 1]) * &r);
            let den = &(&p(&[1, 1, -1]) + &r) * &rad;
            div(&num, &den)
        }
        GrandSeries::Gm2 => return grand(GrandSeries::Gp1, order),
        GrandSeries::Gm1 => {
            return &grand(GrandSeries::Gm, order) - &grand(GrandSeries::Gm2, order)
        }
        GrandSeries::F0 => {
            let num = &p(&[1, -1, 1]) + &r;
            &div(&num, &r.scale_int(2)) - &TruncatedSeries::one(w)
        }
        GrandSeries::G0 => {
            let num = &(&p(&[1, 1, -1]) - &r) * &TruncatedSeries::x(w);
            div(&num, &r.scale_int(2))
        }
    };
    s.truncate(order)
}

/// All nine series obtained by solving the first-return linear systems
/// rather than from the closed forms.
#[derive(Clone, Debug, PartialEq)]
pub struct GrandSolution {
    pub gp1: TruncatedSeries,
    pub gp2: TruncatedSeries,
    pub gp: TruncatedSeries,
    pub gm: TruncatedSeries,
    pub g: TruncatedSeries,
}

impl GrandSolution {
    pub fn get(&self, which: GrandSeries) -> TruncatedSeries {
        match which {
            GrandSeries::Gp1 | GrandSeries::Gm2 => self.gp1.clone(),
            GrandSeries::Gp2 => self.gp2.clone(),
            GrandSeries::Gp => self.gp.clone(),
            GrandSeries::Gm => self.gm.clone(),
            GrandSeries::G => self.g.clone(),
            GrandSeries::Gm1 => &self.gm - &self.gp1,
            GrandSeries::F0 => &self.gp2 + &self.gp1,
            GrandSeries::G0 => &self.gp1 + &(&self.gm - &self.gp1),
        }
    }
}

/// Solves
///
/// ```text
/// Gp1 = Gp (x^2 + P)
/// Gp2 = Gp2 (x^2 + P) + Gp1 (x^2 + P) / x
/// Gp  = 1 + Gp1 + Gp2
/// Gm  = (x^2 + P) G
/// G   = Gp + (x^2 + P) G
/// ```
///
/// where `x^2 + P` collects the blocks `UD` and prime paths.
pub fn grand_from_systems(order: usize) -> Result<GrandSolution, SystemError> {
    let w = order + 1;
    let a = dap(w);
    let x = TruncatedSeries::x(w);
    let q = &poly(&[0, 0, 1], w) + &(&x * &a);
    let q_over_x = &x + &a;
    let one = TruncatedSeries::one(w);
    let zero = TruncatedSeries::zero(w);

    let plus = SeriesSystem::new(
        vec![
            vec![one.clone(), zero.clone(), -&q],
            vec![-&q_over_x, &one - &q, zero.clone()],
            vec![-&one, -&one, one.clone()],
        ],
        vec![zero.clone(), zero.clone(), one.clone()],
    )?
    .solve()?;
    let (gp1, gp2, gp) = (plus[0].clone(), plus[1].clone(), plus[2].clone());

    let minus = SeriesSystem::new(
        vec![vec![one.clone(), -&q], vec![zero.clone(), &one - &q]],
        vec![zero, gp.clone()],
    )?
    .solve()?;

    Ok(GrandSolution {
        gp1: gp1.truncate(order),
        gp2: gp2.truncate(order),
        gp: gp.truncate(order),
        gm: minus[0].truncate(order),
        g: minus[1].truncate(order),
    })
}

/// `T_k = x^k s_2^{k+1}`: DAP prefixes ending at ordinate `k >= 0`.
pub fn dap_prefix(k: u32, order: usize) -> TruncatedSeries {
    let s = s2(order);
    s.pow(i64::from(k) + 1)
        .expect("nonnegative power")
        .shift(i64::from(k))
        .expect("positive shift")
}

/// `R_k = (s_2 - 1) s_2^{-k-1} / x` for `k <= -1`.
pub fn reversed_prefix(k: i64, order: usize) -> Result<TruncatedSeries, CatalogError> {
    if k > -1 {
        return Err(CatalogError::BadParams(format!(
            "R_k needs k <= -1, got {k}"
        )));
    }
    let w = order + 1;
    let s = s2(w);
    let num = &(&s - &TruncatedSeries::one(w)) * &s.pow(-k - 1)?;
    Ok(num.shift(-1)?.truncate(order))
}

/// Prefixes of grand paths ending at ordinate `k >= 1`: `(1 + f_0) T_k`.
pub fn prefix_positive(k: u32, order: usize) -> Result<TruncatedSeries, CatalogError> {
    if k == 0 {
        return Err(CatalogError::BadParams(
            "prefix_positive needs k >= 1".into(),
        ));
    }
    let f0 = grand(GrandSeries::F0, order);
    Ok(&(&TruncatedSeries::one(order) + &f0) * &dap_prefix(k, order))
}

/// Prefixes ending at any positive ordinate, from the closed form
/// `(x^2 - x - 1 + R)^2 / (4 x R)`.
pub fn prefix_positive_total(order: usize) -> TruncatedSeries {
    let w = order + 2;
    let r = radicand_sqrt(w);
    let base = &poly(&[-1, -1, 1], w) + &r;
    let den = (&r * &TruncatedSeries::x(w)).scale_int(4);
    (&base * &base)
        .try_div(&den)
        .expect("numerator has valuation 2")
        .truncate(order)
}

/// The same total, summed ordinate by ordinate (`k = 1 ..= order` suffices
/// since a path of length `n` ends no higher than `n`).
pub fn prefix_positive_sum(order: usize) -> TruncatedSeries {
    (1..=order as u32).fold(TruncatedSeries::zero(order), |acc, k| {
        &acc + &prefix_positive(k, order).expect("k >= 1")
    })
}

/// Prefixes ending at ordinate `k <= -1`: `R_k (1 + g_0 / x)`.
pub fn prefix_negative(k: i64, order: usize) -> Result<TruncatedSeries, CatalogError> {
    let w = order + 1;
    let g0 = grand(GrandSeries::G0, w);
    let factor = &TruncatedSeries::one(order) + &g0.shift(-1)?;
    Ok(&reversed_prefix(k, order)? * &factor)
}

/// Prefixes ending at ordinate `k != 0`.
pub fn prefix(k: i64, order: usize) -> Result<TruncatedSeries, CatalogError> {
    match k {
        0 => Err(CatalogError::BadParams(
            "prefixes ending at 0 are grand paths; use G".into(),
        )),
        k if k > 0 => prefix_positive(k as u32, order),
        k => prefix_negative(k, order),
    }
}

/// Prefixes never going below `y = m` (`m <= 0`), counted with the empty
/// path: `(r_2^{-m} - r_2^{-1-m} - x^2) / x^3`.
pub fn minorized(m: i64, order: usize) -> Result<TruncatedSeries, CatalogError> {
    if m > 0 {
        return Err(CatalogError::BadParams(format!(
            "minorized needs m <= 0, got {m}"
        )));
    }
    let w = order + 3;
    let r2 = s2(w);
    let num = &(&r2.pow(-m)? - &r2.pow(-1 - m)?) - &poly(&[0, 0, 1], w);
    Ok(num
        .shift(-3)
        .map_err(|e: SeriesError| CatalogError::Series(e))?
        .truncate(order))
}
