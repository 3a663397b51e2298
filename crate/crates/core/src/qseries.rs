//! Truncated power series in `q` with exact rational coefficients.
//!
//! A `QSeries` stores coefficients of `q^0 .. q^N` for its truncation
//! order `N`. Arithmetic never silently extends past the smaller
//! truncation of the two operands: the result order is the minimum.

use std::ops::{Add, Mul, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// The zero series truncated at `q^order`.
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, value: Rational) {
        self.coeffs[k] = value;
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let order = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Formal logarithm; requires constant term exactly 1. Computed by the
    /// first-order recurrence `n f_n = Σ_{k=1}^{n} k g_k f_{n-k}` solved
    /// for `g_n`, all exact.
    pub fn log(&self) -> Result<QSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm {
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut g = vec![Rational::zero(); n + 1];
        for m in 1..=n {
            let mut acc = Rational::from_integer(m.into()) * &self.coeffs[m];
            for k in 1..m {
                acc -= Rational::from_integer(k.into()) * &g[k] * &self.coeffs[m - k];
            }
            g[m] = acc / Rational::from_integer(m.into());
        }
        Ok(QSeries { coeffs: g })
    }

    /// Formal exponential; requires constant term exactly 0. Inverse of
    /// [`QSeries::log`] by the same recurrence run forward.
    pub fn exp(&self) -> Result<QSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm {
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut h = vec![Rational::zero(); n + 1];
        h[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += Rational::from_integer(k.into()) * &self.coeffs[k] * &h[m - k];
            }
            h[m] = acc / Rational::from_integer(m.into());
        }
        Ok(QSeries { coeffs: h })
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        QSeries { coeffs }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        QSeries { coeffs }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QSeries { coeffs }
    }
}

impl std::fmt::Debug for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})q^{k}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
