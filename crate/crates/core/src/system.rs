//! Square linear systems whose entries are truncated power series.
//!
//! Two determinant routes are provided. [`SeriesSystem::determinant`] runs
//! elimination over the series ring and is exact whenever every pivot is a
//! unit. [`SeriesSystem::polynomial_determinant`] treats the entries as
//! polynomials, evaluates the matrix at integer points, and interpolates; it
//! is exact regardless of the determinant's valuation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("system is singular to the working order (no unit pivot in column {column})")]
    SingularToOrder { column: usize },
    #[error("matrix is not square or does not match the right-hand side")]
    Shape,
    #[error("residual A*x - b does not vanish to order {order}")]
    Residual { order: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSystem {
    matrix: Vec<Vec<TruncatedSeries>>,
    rhs: Vec<TruncatedSeries>,
}

impl SeriesSystem {
    pub fn new(
        matrix: Vec<Vec<TruncatedSeries>>,
        rhs: Vec<TruncatedSeries>,
    ) -> Result<Self, SystemError> {
        let n = matrix.len();
        if n == 0 || rhs.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(SystemError::Shape);
        }
        Ok(SeriesSystem { matrix, rhs })
    }

    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<TruncatedSeries>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[TruncatedSeries] {
        &self.rhs
    }

    pub fn entry(&self, row: usize, col: usize) -> &TruncatedSeries {
        &self.matrix[row][col]
    }

    /// Working order: the smallest order among all entries.
    pub fn order(&self) -> usize {
        self.matrix
            .iter()
            .flatten()
            .chain(self.rhs.iter())
            .map(TruncatedSeries::order)
            .min()
            .unwrap()
    }

    /// The matrix with column `col` replaced by the right-hand side (Cramer).
    pub fn with_column_replaced(&self, col: usize) -> SeriesSystem {
        let mut matrix = self.matrix.clone();
        for (row, b) in matrix.iter_mut().zip(&self.rhs) {
            row[col] = b.clone();
        }
        SeriesSystem {
            matrix,
            rhs: self.rhs.clone(),
        }
    }

    /// Gaussian elimination pivoting on the entry of least valuation.
    /// Errors with `SingularToOrder` when no unit pivot exists, i.e. when the
    /// determinant has zero constant term.
    pub fn solve(&self) -> Result<Vec<TruncatedSeries>, SystemError> {
        let n = self.dimension();
        let order = self.order();
        let mut a: Vec<Vec<TruncatedSeries>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|e| e.truncate(order)).collect())
            .collect();
        let mut b: Vec<TruncatedSeries> = self.rhs.iter().map(|e| e.truncate(order)).collect();

        for col in 0..n {
            let pivot_row = pick_unit_pivot(&a, col)?;
            a.swap(col, pivot_row);
            b.swap(col, pivot_row);
            let inv = a[col][col].inverse()?;
            for row in col + 1..n {
                if a[row][col].is_zero() {
                    continue;
                }
                let factor = &a[row][col] * &inv;
                for k in col..n {
                    let delta = &factor * &a[col][k];
                    a[row][k] = &a[row][k] - &delta;
                }
                let delta = &factor * &b[col];
                b[row] = &b[row] - &delta;
            }
        }

        let mut x = vec![TruncatedSeries::zero(order); n];
        for row in (0..n).rev() {
            let mut acc = b[row].clone();
            for k in row + 1..n {
                acc = &acc - &(&a[row][k] * &x[k]);
            }
            x[row] = &acc * &a[row][row].inverse()?;
        }

        if !self.residual_vanishes(&x) {
            return Err(SystemError::Residual { order });
        }
        Ok(x)
    }

    /// True when `A*x - b` is zero to the working order.
    pub fn residual_vanishes(&self, x: &[TruncatedSeries]) -> bool {
        self.matrix.iter().zip(&self.rhs).all(|(row, b)| {
            let mut acc = -b;
            for (aij, xj) in row.iter().zip(x) {
                acc = &acc + &(aij * xj);
            }
            acc.is_zero()
        })
    }

    /// Determinant by elimination over the series ring (unit pivots only).
    pub fn determinant(&self) -> Result<TruncatedSeries, SystemError> {
        let n = self.dimension();
        let order = self.order();
        let mut a: Vec<Vec<TruncatedSeries>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|e| e.truncate(order)).collect())
            .collect();
        let mut det = TruncatedSeries::one(order);
        for col in 0..n {
            let pivot_row = pick_unit_pivot(&a, col)?;
            if pivot_row != col {
                a.swap(col, pivot_row);
                det = -det;
            }
            let inv = a[col][col].inverse()?;
            for row in col + 1..n {
                if a[row][col].is_zero() {
                    continue;
                }
                let factor = &a[row][col] * &inv;
                for k in col..n {
                    let delta = &factor * &a[col][k];
                    a[row][k] = &a[row][k] - &delta;
                }
            }
            det = &det * &a[col][col];
        }
        Ok(det)
    }

    /// Exact determinant of a matrix with polynomial entries, computed by
    /// evaluating at `x = 0, 1, ..., d` (with `d` the row-degree bound) and
    /// interpolating. The result is returned as a series of the working order.
    pub fn polynomial_determinant(&self) -> TruncatedSeries {
        let order = self.order();
        let bound: usize = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .filter_map(TruncatedSeries::degree)
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        let points: Vec<BigRational> = (0..=bound)
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .collect();
        let values: Vec<BigRational> = points
            .iter()
            .map(|p| {
                let m: Vec<Vec<BigRational>> = self
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|e| e.eval_polynomial(p)).collect())
                    .collect();
                rational_determinant(m)
            })
            .collect();
        TruncatedSeries::from_rationals(interpolate(&points, &values), order)
    }
}

fn pick_unit_pivot(a: &[Vec<TruncatedSeries>], col: usize) -> Result<usize, SystemError> {
    let best = (col..a.len())
        .filter_map(|r| a[r][col].valuation().map(|v| (v, r)))
        .min();
    match best {
        Some((0, r)) => Ok(r),
        _ => Err(SystemError::SingularToOrder { column: col }),
    }
}

/// Determinant of a rational matrix by fraction-based elimination.
pub fn rational_determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &pivot;
            for k in col..n {
                let delta = &factor * &m[col][k];
                m[row][k] -= delta;
            }
        }
    }
    det
}

/// Monomial coefficients of the interpolating polynomial through
/// `(points[i], values[i])`, via Newton divided differences.
fn interpolate(points: &[BigRational], values: &[BigRational]) -> Vec<BigRational> {
    let n = points.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i] - &points[i - level]);
        }
    }
    // Horner expansion of the Newton form, innermost term first.
    let mut poly = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (x - points[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += c;
            }
            next[k] -= c * &points[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_ints(c, order)
    }

    #[test]
    fn identity_system_returns_rhs() {
        let order = 6;
        let id = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        if i == j {
                            TruncatedSeries::one(order)
                        } else {
                            TruncatedSeries::zero(order)
                        }
                    })
                    .collect()
            })
            .collect();
        let rhs = vec![s(&[1, 2], order), s(&[0, 0, 3], order), s(&[5], order)];
        let sys = SeriesSystem::new(id, rhs.clone()).unwrap();
        assert_eq!(sys.solve().unwrap(), rhs);
        assert_eq!(sys.determinant().unwrap(), TruncatedSeries::one(order));
    }

    #[test]
    fn singular_constant_term_is_rejected() {
        let order = 4;
        let x = TruncatedSeries::x(order);
        let sys = SeriesSystem::new(
            vec![
                vec![x.clone(), TruncatedSeries::zero(order)],
                vec![TruncatedSeries::zero(order), TruncatedSeries::one(order)],
            ],
            vec![TruncatedSeries::one(order), TruncatedSeries::one(order)],
        )
        .unwrap();
        assert_eq!(sys.solve(), Err(SystemError::SingularToOrder { column: 0 }));
        // the polynomial route still gets it right
        assert_eq!(sys.polynomial_determinant(), x);
    }

    #[test]
    fn two_by_two_solution() {
        // (1 - x) f = 1  and  g - x f = 0
        let order = 8;
        let sys = SeriesSystem::new(
            vec![
                vec![s(&[1, -1], order), TruncatedSeries::zero(order)],
                vec![s(&[0, -1], order), TruncatedSeries::one(order)],
            ],
            vec![TruncatedSeries::one(order), TruncatedSeries::zero(order)],
        )
        .unwrap();
        let sol = sys.solve().unwrap();
        assert_eq!(sol[0], s(&[1; 9], order));
        let mut g = vec![1; 9];
        g[0] = 0;
        assert_eq!(sol[1], s(&g, order));
    }

    #[test]
    fn determinant_routes_agree() {
        let order = 10;
        let m = vec![
            vec![s(&[1, 2], order), s(&[0, 1], order), s(&[3], order)],
            vec![s(&[0, 0, 1], order), s(&[-1, 1], order), s(&[0, 4], order)],
            vec![s(&[2], order), s(&[0, 1], order), s(&[1, 0, -1], order)],
        ];
        let sys = SeriesSystem::new(m, vec![TruncatedSeries::zero(order); 3]).unwrap();
        assert_eq!(sys.determinant().unwrap(), sys.polynomial_determinant());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let pts: Vec<BigRational> = (0..4)
            .map(|i| BigRational::from_integer(i.into()))
            .collect();
        // 2 - x + 3x^3
        let vals: Vec<BigRational> = pts
            .iter()
            .map(|p| {
                BigRational::from_integer(2.into()) - p
                    + p * p * p * BigRational::from_integer(3.into())
            })
            .collect();
        let c = interpolate(&pts, &vals);
        let expect: Vec<BigRational> = [2, -1, 0, 3]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        assert_eq!(c, expect);
    }
}
