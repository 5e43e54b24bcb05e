//! Truncated power series in `x` with exact rational coefficients.
//!
//! A [`TruncatedSeries`] of order `N` knows the coefficients of
//! `x^0 ..= x^N`. The checked operations (`try_add`, `try_mul`, ...) insist on
//! equal orders; the operator overloads instead return a series whose order is
//! the smaller of the two, which is the precision actually known.
//!
//! Operations that divide by a power of `x` lose precision: dividing by a
//! series of valuation `v` (or shifting down by `v`) yields a series of order
//! `N - v`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("division by a series that is zero to its order")]
    DivisionByZeroSeries,
    #[error("result would have a pole at x = 0")]
    ValuationUnderflow,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("negative power of a series with zero constant term")]
    NonInvertible,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(rat(1), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^power`, or zero if `power > order`.
    pub fn monomial(c: i64, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = rat(c);
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(1, 1, order)
    }

    /// Series from integer coefficients (a polynomial when short enough).
    /// Coefficients beyond `order` are dropped.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = rat(*v);
        }
        s
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or `None` if any coefficient is not an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Like [`Self::to_integers`] but narrowed to `i128`.
    pub fn to_i128s(&self) -> Option<Vec<i128>> {
        self.to_integers()?.iter().map(|c| c.to_i128()).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Evaluates the series as a polynomial at `x = at`.
    pub fn eval_polynomial(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(n + 1);
        q.push(inv0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                let b = &self.coeffs[i];
                if !b.is_zero() {
                    acc += b * &q[k - i];
                }
            }
            q.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// `self / other`. The common power of `x` is cancelled first, so the
    /// result has order `min(orders) - valuation(other)`.
    pub fn try_div(&self, other: &Self) -> Result<Self, SeriesError> {
        let v = other.valuation().ok_or(SeriesError::DivisionByZeroSeries)?;
        let order = self.order().min(other.order());
        if self.truncate(order).is_zero() {
            return Ok(Self::zero(order - v));
        }
        let va = self.valuation().unwrap();
        if va < v {
            return Err(SeriesError::ValuationUnderflow);
        }
        let num = self.truncate(order).shift(-(v as i64))?;
        let den = other.truncate(order).shift(-(v as i64))?;
        Ok(&num * &den.inverse()?)
    }

    /// Multiplies by `x^j`. Positive `j` drops coefficients past the order;
    /// negative `j` divides exactly and lowers the order by `|j|`.
    pub fn shift(&self, j: i64) -> Result<Self, SeriesError> {
        let n = self.order();
        if j >= 0 {
            let j = j as usize;
            let mut s = Self::zero(n);
            for i in j..=n {
                s.coeffs[i] = self.coeffs[i - j].clone();
            }
            Ok(s)
        } else {
            let j = (-j) as usize;
            if j > n {
                return Err(SeriesError::ValuationUnderflow);
            }
            if self.coeffs[..j].iter().any(|c| !c.is_zero()) {
                return Err(SeriesError::ValuationUnderflow);
            }
            Ok(TruncatedSeries {
                coeffs: self.coeffs[j..].to_vec(),
            })
        }
    }

    /// Square root with constant term `+1`, by Newton iteration
    /// `s <- (s + a/s) / 2` with the working precision doubling each round.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let n = self.order();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut s = Self::one(0);
        let mut known = 1usize; // number of correct coefficients in s
        while known < n + 1 {
            known = (2 * known).min(n + 1);
            let prec = known - 1;
            let s_ext = s.truncate(prec);
            let quotient = self.truncate(prec).try_div(&s_ext)?;
            s = (&s_ext + &quotient).scale(&half);
        }
        Ok(s.truncate(n))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident) => {
        impl $Op<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $op(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$op(&rhs)
            }
        }
        impl<'a> $Op<&'a TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $op(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$op(rhs)
            }
        }
        impl<'a> $Op<TruncatedSeries> for &'a TruncatedSeries {
            type Output = TruncatedSeries;
            fn $op(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
