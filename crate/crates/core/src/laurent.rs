//! Real-coefficient Laurent polynomials in two variables `z, w`.
//!
//! Terms are kept in a sorted map from exponent pairs to coefficients, so
//! iteration order (and everything serialized from it) is deterministic.

use std::collections::BTreeMap;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), f64>,
}

/// One serialized term `c * z^i * w^j`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct LaurentTerm {
    pub i: i64,
    pub j: i64,
    pub c: f64,
}

impl LaurentPoly2 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64, f64)>) -> Self {
        let mut p = Self::new();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: i64, j: i64, c: f64) {
        if c == 0.0 {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(0.0);
        *entry += c;
        if *entry == 0.0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), f64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> f64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(i, j), &c) in &self.terms {
            acc += c * z.powi(i as i32) * w.powi(j as i32);
        }
        acc
    }

    pub fn scale(&self, c: f64) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, &v)| (k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::new();
        for (&(a, b), &x) in &self.terms {
            for (&(c, d), &y) in &other.terms {
                out.add_term(a + c, b + d, x * y);
            }
        }
        out
    }

    /// `P(sz * z, sw * w)`: multiplies the coefficient of `z^i w^j` by
    /// `sz^i * sw^j`.
    pub fn substitute_scaling(&self, sz: f64, sw: f64) -> LaurentPoly2 {
        let mut out = LaurentPoly2::new();
        for (&(i, j), &c) in &self.terms {
            out.add_term(i, j, c * sz.powi(i as i32) * sw.powi(j as i32));
        }
        out
    }

    /// Exponent ranges `(min_i, max_i, min_j, max_j)`; `None` for zero.
    pub fn exponent_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        let mut bx = (i0, i0, j0, j0);
        for &(i, j) in it {
            bx.0 = bx.0.min(i);
            bx.1 = bx.1.max(i);
            bx.2 = bx.2.min(j);
            bx.3 = bx.3.max(j);
        }
        Some(bx)
    }

    /// Degree span in `w` (0 for polynomials not involving `w`).
    pub fn w_span(&self) -> i64 {
        match self.exponent_box() {
            Some((_, _, jmin, jmax)) => jmax - jmin,
            None => 0,
        }
    }

    /// Multiplies by a monomial unit `±z^a w^b` so that the lowest exponent
    /// in each variable is 0 and the coefficient of the lexicographically
    /// greatest exponent pair is positive.
    pub fn normalize_monomial(&self) -> LaurentPoly2 {
        let Some((imin, _, jmin, _)) = self.exponent_box() else {
            return LaurentPoly2::new();
        };
        let mut terms: BTreeMap<(i64, i64), f64> = self
            .terms
            .iter()
            .map(|(&(i, j), &c)| ((i - imin, j - jmin), c))
            .collect();
        let lead = *terms.keys().next_back().expect("nonzero");
        if terms[&lead] < 0.0 {
            for v in terms.values_mut() {
                *v = -*v;
            }
        }
        LaurentPoly2 { terms }
    }

    /// Coefficients of the univariate polynomial `w -> P(z0, w)`, scaled by
    /// `w^{-jmin}`: index `t` holds the coefficient of `w^{jmin + t}`.
    /// Returns `(jmin, coefficients)`; empty for the zero polynomial.
    pub fn univariate_in_w(&self, z0: Complex64) -> (i64, Vec<Complex64>) {
        let Some((_, _, jmin, jmax)) = self.exponent_box() else {
            return (0, Vec::new());
        };
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (jmax - jmin + 1) as usize];
        for (&(i, j), &c) in &self.terms {
            coeffs[(j - jmin) as usize] += c * z0.powi(i as i32);
        }
        (jmin, coeffs)
    }

    pub fn to_term_list(&self) -> Vec<LaurentTerm> {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| LaurentTerm { i, j, c })
            .collect()
    }

    pub fn from_term_list(terms: &[LaurentTerm]) -> Self {
        Self::from_terms(terms.iter().map(|t| (t.i, t.j, t.c)))
    }
}

impl std::fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if i != 0 {
                write!(f, "*z^{i}")?;
            }
            if j != 0 {
                write!(f, "*w^{j}")?;
            }
            first = false;
        }
        Ok(())
    }
}
