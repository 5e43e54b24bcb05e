//! Coefficient lists as printed in the literature, kept as data so that the
//! verification suites and tests compare against exactly the same values.
//!
//! Each list starts at `x^0` and runs through the last printed power.

use crate::catalog::Params;

#[derive(Clone, Copy, Debug)]
pub struct PrintedSeries {
    pub name: &'static str,
    pub params: Params,
    pub coeffs: &'static [i64],
}

const NONE: Params = Params {
    k: None,
    t: None,
    m: None,
};

const fn k(k: i64) -> Params {
    Params {
        k: Some(k),
        t: None,
        m: None,
    }
}

const fn t(t: i64) -> Params {
    Params {
        k: None,
        t: Some(t),
        m: None,
    }
}

const fn m(m: i64) -> Params {
    Params {
        k: None,
        t: None,
        m: Some(m),
    }
}

const fn kt(k: i64, t: i64) -> Params {
    Params {
        k: Some(k),
        t: Some(t),
        m: None,
    }
}

const fn s(name: &'static str, params: Params, coeffs: &'static [i64]) -> PrintedSeries {
    PrintedSeries {
        name,
        params,
        coeffs,
    }
}

pub const SERIES: &[PrintedSeries] = &[
    s("A", NONE, &[0, 0, 1, 1, 2, 4, 8, 17, 37, 82, 185]),
    s("Gp1", NONE, &[0, 0, 1, 1, 2, 5, 11, 26, 63, 153, 376]),
    s("Gp2", NONE, &[0, 0, 0, 1, 2, 5, 13, 32, 80, 201, 505]),
    s("Gp", NONE, &[1, 0, 1, 2, 4, 10, 24, 58, 143, 354, 881]),
    s("Gm", NONE, &[0, 0, 1, 1, 3, 7, 16, 39, 95, 233, 577]),
    s("G", NONE, &[1, 0, 2, 3, 7, 17, 40, 97, 238, 587, 1458]),
    s("Gm1", NONE, &[0, 0, 0, 0, 1, 2, 5, 13, 32, 80, 201]),
    s("Gm2", NONE, &[0, 0, 1, 1, 2, 5, 11, 26, 63, 153, 376]),
    s("f0", NONE, &[0, 0, 1, 2, 4, 10, 24, 58, 143, 354, 881]),
    s("g0", NONE, &[0, 0, 1, 1, 3, 7, 16, 39, 95, 233, 577]),
    s(
        "prefix_pos_total",
        NONE,
        &[0, 1, 1, 4, 9, 22, 55, 136, 339, 849, 2132],
    ),
    s(
        "prefix",
        k(-1),
        &[0, 1, 2, 4, 10, 24, 58, 143, 354, 881, 2204],
    ),
    s(
        "prefix",
        k(-2),
        &[0, 1, 2, 5, 13, 32, 80, 201, 505, 1273, 3217],
    ),
    s(
        "minorized",
        m(-1),
        &[1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283],
    ),
    s(
        "minorized",
        m(-2),
        &[1, 3, 6, 13, 29, 65, 148, 341, 793, 1860, 4395],
    ),
    s("g0t", t(1), &[0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]),
    s("g0t", t(2), &[0, 0, 1, 1, 1, 3, 2, 6, 6, 11, 16]),
    s("g0t", t(3), &[0, 0, 1, 1, 2, 3, 7, 9, 22, 32, 66]),
    s("g0t", t(4), &[0, 0, 1, 1, 2, 4, 7, 16, 27, 63, 112]),
    s("sym", t(1), &[1, 0, 2, 1, 3, 4, 5, 10, 11, 21, 27]),
    s("sym", t(2), &[1, 0, 2, 3, 5, 13, 22, 48, 93, 190, 375]),
    s("sym", t(3), &[1, 0, 2, 3, 7, 15, 36, 75, 176, 386, 869]),
    s("H", NONE, &[1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273]),
];

/// `D_0 ..= D_3`.
pub const D: &[&[i64]] = &[
    &[1],
    &[1, 0, -1],
    &[1, 0, -2, -1, 1],
    &[1, 0, -3, -2, 2, 2, -1],
];

/// `N_k^t` for `t <= 3`, `k <= 2t + 1`, as `(k, t, polynomial)`.
pub const N_TABLE: &[(usize, usize, &[i64])] = &[
    (0, 0, &[1]),
    (1, 0, &[0]),
    (0, 1, &[1, 0, -1]),
    (1, 1, &[0, 1]),
    (2, 1, &[0, 0, 1]),
    (3, 1, &[0]),
    (0, 2, &[1, 0, -2, -1, 1]),
    (1, 2, &[0, 1, 0, -1]),
    (2, 2, &[0, 0, 1]),
    (3, 2, &[0, 0, 1, 1, -1]),
    (4, 2, &[0, 0, 0, 1]),
    (5, 2, &[0]),
    (0, 3, &[1, 0, -3, -2, 2, 2, -1]),
    (1, 3, &[0, 1, 0, -2, -1, 1]),
    (2, 3, &[0, 0, 1, 0, -1]),
    (3, 3, &[0, 0, 0, 1]),
    (4, 3, &[0, 0, 1, 1, -1, -2, 1]),
    (5, 3, &[0, 0, 0, 1, 1, -1]),
    (6, 3, &[0, 0, 0, 0, 1]),
    (7, 3, &[0]),
];

pub fn n_table_params(k_: usize, t_: usize) -> Params {
    kt(k_ as i64, t_ as i64)
}

/// Length-4 and length-5 members of ℋ, in step order.
pub const H4: &[&str] = &["UUUD3", "UDUD"];
pub const H5: &[&str] = &["UUUUD4", "UUDUD2", "UUD2UD"];

pub const PSI_EXAMPLE_PATH: &str = "UUD2UUDUD2UDUDUUD2";
pub const PSI_EXAMPLE_COMPOSITION: &str = "1,2,3,6,1";
pub const PHI_EXAMPLE_PATH: &str = "UD2UUDUD2UDUDUUD";
pub const PHI_EXAMPLE_COMPOSITION: &str = "3,6,3,2,1,2";
