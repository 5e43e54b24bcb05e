//! Named generating functions, polynomial families and linear systems.
//!
//! Every entry is available by name through [`evaluate`], which is what the
//! command-line `series` subcommand and the verification suites use.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::series::{SeriesError, TruncatedSeries};
use crate::system::SystemError;

pub mod bounded;
pub mod grand;
pub mod special;

pub use bounded::EndKind;
pub use grand::GrandSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("index k={k} out of range for t={t}")]
    IndexOutOfRange { k: i64, t: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    System(#[from] SystemError),
}

/// Polynomial with integer coefficients as a series of the given order.
pub fn poly(coeffs: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(coeffs, order)
}

/// `sqrt(x^4 - 2x^3 - x^2 - 2x + 1)`, written `R` or `W`.
pub fn radicand_sqrt(order: usize) -> TruncatedSeries {
    grand::radicand(order).sqrt().expect("constant term 1")
}

/// Optional integer parameters of a catalog entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub k: Option<i64>,
    pub t: Option<i64>,
    pub m: Option<i64>,
}

impl Params {
    pub fn k(k: i64) -> Self {
        Params {
            k: Some(k),
            ..Default::default()
        }
    }

    pub fn t(t: i64) -> Self {
        Params {
            t: Some(t),
            ..Default::default()
        }
    }

    pub fn m(m: i64) -> Self {
        Params {
            m: Some(m),
            ..Default::default()
        }
    }

    pub fn kt(k: i64, t: i64) -> Self {
        Params {
            k: Some(k),
            t: Some(t),
            m: None,
        }
    }

    fn as_map(&self) -> BTreeMap<String, i64> {
        [("k", self.k), ("t", self.t), ("m", self.m)]
            .into_iter()
            .filter_map(|(n, v)| v.map(|v| (n.to_string(), v)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedSeries {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub series: TruncatedSeries,
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            let p: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "[{}]", p.join(","))?;
        }
        write!(f, " = {}", self.series)
    }
}

/// Catalog keys with a short description and the parameters they take.
pub const NAMES: &[(&str, &str, &str)] = &[
    ("A", "dispersed Dyck-like paths (DAP)", ""),
    ("P", "prime DAP", ""),
    ("W", "sqrt(x^4 - 2x^3 - x^2 - 2x + 1)", ""),
    ("s2", "DAP prefixes ending at 0, with the empty path", ""),
    (
        "Gp1",
        "grand paths starting with U, ending with a down-step",
        "",
    ),
    ("Gp2", "grand paths starting with U, ending with U", ""),
    ("Gp", "grand paths starting with U, or empty", ""),
    ("Gm", "grand paths starting with a down-step", ""),
    ("G", "all grand paths", ""),
    (
        "Gm1",
        "grand paths starting and ending with a down-step",
        "",
    ),
    (
        "Gm2",
        "grand paths starting with a down-step, ending with U",
        "",
    ),
    ("f0", "nonempty grand paths ending with U", ""),
    ("g0", "grand paths ending with a down-step", ""),
    ("T", "DAP prefixes ending at ordinate k >= 0", "k"),
    ("R", "R_k for k <= -1", "k"),
    (
        "prefix",
        "grand-path prefixes ending at ordinate k != 0",
        "k",
    ),
    ("prefix_pos_total", "grand-path prefixes ending above 0", ""),
    (
        "minorized",
        "prefixes staying at or above y = m <= 0, with the empty path",
        "m",
    ),
    ("D", "determinant D_t of the [0, t] strip", "t"),
    ("Dprime", "determinant of the [-t, t] strip", "t"),
    ("N", "Cramer numerator N_k^t, 0 <= k <= 2t+1", "k,t"),
    (
        "Ntilde",
        "Cramer numerator of the [-t, t] strip, -t <= k <= 3t+1",
        "k,t",
    ),
    ("fkt", "prefixes in [0, t] ending at k with U", "k,t"),
    (
        "gkt",
        "prefixes in [0, t] ending at k with a down-step",
        "k,t",
    ),
    ("g0t", "nonempty grand paths in [0, t]", "t"),
    ("sym", "grand paths in [-t, t], with the empty path", "t"),
    ("H", "the class H", ""),
    ("Hk", "members of H of height at most k", "k"),
];

fn need(p: Option<i64>, name: &str, which: &str) -> Result<i64, CatalogError> {
    p.ok_or_else(|| CatalogError::BadParams(format!("{name} needs --{which}")))
}

fn nonneg(v: i64, name: &str, which: &str) -> Result<usize, CatalogError> {
    usize::try_from(v)
        .map_err(|_| CatalogError::BadParams(format!("{name} needs {which} >= 0, got {v}")))
}

/// Evaluates a catalog entry to the given order.
pub fn evaluate(name: &str, params: Params, order: usize) -> Result<NamedSeries, CatalogError> {
    let series = match name {
        "A" => grand::dap(order),
        "P" => grand::prime(order),
        "W" => radicand_sqrt(order),
        "s2" => grand::s2(order),
        "T" => {
            let k = need(params.k, name, "k")?;
            grand::dap_prefix(nonneg(k, name, "k")? as u32, order)
        }
        "R" => grand::reversed_prefix(need(params.k, name, "k")?, order)?,
        "prefix" => grand::prefix(need(params.k, name, "k")?, order)?,
        "prefix_pos_total" => grand::prefix_positive_total(order),
        "minorized" => grand::minorized(need(params.m, name, "m")?, order)?,
        "D" => bounded::d_recurrence(nonneg(need(params.t, name, "t")?, name, "t")?, order),
        "Dprime" => {
            bounded::d_prime_determinant(nonneg(need(params.t, name, "t")?, name, "t")?, order)
        }
        "N" => {
            let t = nonneg(need(params.t, name, "t")?, name, "t")?;
            let k = need(params.k, name, "k")?;
            if k < 0 {
                return Err(CatalogError::IndexOutOfRange { k, t });
            }
            bounded::n_recurrence(k as usize, t, order)?
        }
        "Ntilde" => {
            let t = nonneg(need(params.t, name, "t")?, name, "t")?;
            bounded::n_tilde_determinant(need(params.k, name, "k")?, t, order)?
        }
        "fkt" | "gkt" => {
            let t = nonneg(need(params.t, name, "t")?, name, "t")?;
            let k = need(params.k, name, "k")?;
            if k < 0 {
                return Err(CatalogError::IndexOutOfRange { k, t });
            }
            let kind = if name == "fkt" {
                EndKind::F
            } else {
                EndKind::G
            };
            bounded::bounded_0t(k as usize, t, kind, order)?
        }
        "g0t" => {
            let t = nonneg(need(params.t, name, "t")?, name, "t")?;
            bounded::bounded_0t(0, t, EndKind::G, order)?
        }
        "sym" => {
            let t = nonneg(need(params.t, name, "t")?, name, "t")?;
            bounded::bounded_sym(t, order)?
        }
        "H" => special::special_h(order),
        "Hk" => special::special_h_bounded(nonneg(need(params.k, name, "k")?, name, "k")?, order),
        other => match other.parse::<GrandSeries>() {
            Ok(g) => grand::grand(g, order),
            Err(_) => return Err(CatalogError::UnknownName(other.to_string())),
        },
    };
    Ok(NamedSeries {
        name: name.to_string(),
        params: params.as_map(),
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_is_known() {
        for (name, _, needs) in NAMES {
            let mut p = Params::default();
            if needs.contains('k') {
                p.k = Some(if *name == "R" || *name == "prefix" {
                    -1
                } else {
                    1
                });
            }
            if needs.contains('t') {
                p.t = Some(2);
            }
            if needs.contains('m') {
                p.m = Some(-1);
            }
            let s = evaluate(name, p, 8).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(s.series.is_integral(), "{name}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            evaluate("nope", Params::default(), 5),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(
            evaluate("T", Params::default(), 5),
            Err(CatalogError::BadParams(_))
        ));
        assert!(matches!(
            evaluate("minorized", Params::m(2), 5),
            Err(CatalogError::BadParams(_))
        ));
        assert!(matches!(
            evaluate("N", Params::kt(9, 2), 5),
            Err(CatalogError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn deterministic() {
        let a = evaluate("sym", Params::t(2), 12).unwrap();
        let b = evaluate("sym", Params::t(2), 12).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string().split(" = ").next(), Some("sym[t=2]"));
    }
}
