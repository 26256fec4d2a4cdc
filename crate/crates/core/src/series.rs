//! Truncated Maclaurin series with complex coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `z^0, ..., z^N`. Binary operations require both operands to carry the same
//! order and the result is truncated to that order, so no operation ever
//! reads a coefficient past what is stored.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Order used for every internal series. Only coefficients through `z^3`
/// enter the bounds; the rest is headroom against truncation bugs.
pub const WORKING_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients padded with zeros (or cut) to `order`.
    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); order + 1];
        for (slot, &c) in out.iter_mut().zip(coeffs) {
            *slot = Complex64::new(c, 0.0);
        }
        Self { coeffs: out }
    }

    /// Complex coefficients padded with zeros (or cut) to `order`.
    pub fn from_complex(coeffs: &[Complex64], order: usize) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); order + 1];
        for (slot, &c) in out.iter_mut().zip(coeffs) {
            *slot = c;
        }
        Self { coeffs: out }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_real(&[], order)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::from_complex(&[c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_real(&[1.0], order)
    }

    /// The identity series `z`.
    pub fn variable(order: usize) -> Self {
        Self::from_real(&[0.0, 1.0], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, or `None` past the stored order.
    pub fn coeff(&self, k: usize) -> Option<Complex64> {
        self.coeffs.get(k).copied()
    }

    /// Same series viewed at a different order, zero padded when raising.
    ///
    /// Raising the order asserts that the dropped tail is zero, so only do it
    /// for series that are polynomials.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_complex(&self.coeffs, order)
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let n = self.coeffs.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// The unique `q` with `q * divisor = self` to the stored order.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_orders(divisor)?;
        let b0 = divisor.coeffs[0];
        if b0 == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroConstantDivisor);
        }
        let n = self.coeffs.len();
        let mut q: Vec<Complex64> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= divisor.coeffs[j] * q[k - j];
            }
            q.push(acc / b0);
        }
        Ok(Self { coeffs: q })
    }

    /// `outer(inner(z))` by Horner's rule; `inner` must vanish at the origin.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        outer.check_orders(inner)?;
        if inner.coeffs[0] != Complex64::new(0.0, 0.0) {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = outer.order();
        let mut acc = Self::constant(*outer.coeffs.last().unwrap(), order);
        for &c in outer.coeffs.iter().rev().skip(1) {
            acc = acc.mul(inner)?.add_constant(c);
        }
        Ok(acc)
    }

    /// Term-by-term derivative; the result has order one less, since the
    /// top coefficient of the derivative would need `z^{N+1}`.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        Self { coeffs }
    }

    /// Multiplication by `z`; exact, so the order grows by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Division by `z`; the constant term must vanish and the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if self.coeffs[0] != Complex64::new(0.0, 0.0) {
            return Err(Error::NonzeroInnerConstant);
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self^e` for a series with constant term one, by the power recurrence
    /// `s y' = e s' y`. Integer exponents of integer series come out exact.
    pub fn powf(&self, e: f64) -> Result<Self> {
        if self.coeffs[0] != Complex64::new(1.0, 0.0) {
            return Err(Error::UnitConstantRequired);
        }
        let n = self.coeffs.len();
        let mut y: Vec<Complex64> = Vec::with_capacity(n);
        y.push(Complex64::new(1.0, 0.0));
        for k in 1..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=k {
                acc += self.coeffs[j] * y[k - j] * ((e + 1.0) * j as f64 - k as f64);
            }
            y.push(acc / k as f64);
        }
        Ok(Self { coeffs: y })
    }

    /// Largest absolute coefficient difference, for approximate comparisons.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_orders(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.im == 0.0 {
                write!(f, "({})", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Elementary functions with a built-in Maclaurin expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Elementary {
    /// `e^z`
    Exp,
    /// `log(1 + z)`
    Log1p,
    /// `sqrt(1 + z)`
    Sqrt1p,
    /// `(1 + z)^e` for a real exponent `e`
    Pow1p(f64),
}

impl FromStr for Elementary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exp" => Ok(Self::Exp),
            "log1p" => Ok(Self::Log1p),
            "sqrt1p" => Ok(Self::Sqrt1p),
            _ => match s.strip_prefix("pow1p:") {
                Some(e) => e
                    .parse()
                    .map(Self::Pow1p)
                    .map_err(|_| Error::UnsupportedKind(s.to_string())),
                None => Err(Error::UnsupportedKind(s.to_string())),
            },
        }
    }
}

/// Maclaurin series of `kind` through `z^order`; `order` must be at least 3.
pub fn elementary(kind: Elementary, order: usize) -> Result<TruncatedSeries> {
    const MIN_ORDER: usize = 3;
    if order < MIN_ORDER {
        return Err(Error::OrderTooLow {
            order,
            min: MIN_ORDER,
        });
    }
    let mut coeffs = vec![0.0; order + 1];
    match kind {
        Elementary::Exp => {
            coeffs[0] = 1.0;
            for k in 1..=order {
                coeffs[k] = coeffs[k - 1] / k as f64;
            }
        }
        Elementary::Log1p => {
            for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                *c = sign / k as f64;
            }
        }
        Elementary::Sqrt1p => return elementary(Elementary::Pow1p(0.5), order),
        Elementary::Pow1p(e) => {
            coeffs[0] = 1.0;
            for k in 1..=order {
                coeffs[k] = coeffs[k - 1] * (e - (k - 1) as f64) / k as f64;
            }
        }
    }
    Ok(TruncatedSeries::from_real(&coeffs, order))
}
