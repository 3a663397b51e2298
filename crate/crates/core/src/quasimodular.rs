//! Eisenstein series, the monomial basis E2^a E4^b E6^c, and exact
//! membership testing of elliptic-target generating functions in the ring
//! they generate.
//!
//! Normalization is fixed to
//!
//!   E2 = 1 - 24 Σ σ1(n) q^n,  E4 = 1 + 240 Σ σ3(n) q^n,
//!   E6 = 1 - 504 Σ σ5(n) q^n.
//!
//! Ring membership does not depend on this choice, but coefficient maps in
//! output do, so the convention is recorded here and in emitted metadata.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::gw::{stationary_gw, StationaryInsertions};
use crate::qseries::QSeries;
use crate::rational::{rat_int, Rational};

pub const EISENSTEIN_NORMALIZATION: &str = "E2=1-24*sum sigma1(n) q^n; E4=1+240*sum sigma3(n) q^n; E6=1-504*sum sigma5(n) q^n";

/// Eisenstein series of weight `k ∈ {2, 4, 6}` truncated at `q^order`.
pub fn eisenstein(k: u32, order: usize) -> Result<QSeries> {
    let (scale, power): (i64, u32) = match k {
        2 => (-24, 1),
        4 => (240, 3),
        6 => (-504, 5),
        other => return Err(Error::BadEisensteinWeight(other)),
    };
    // Divisor power sums σ_r(n) for n <= order by direct sieving.
    let mut sigma = vec![0i128; order + 1];
    for d in 1..=order as i128 {
        let dp = d.pow(power);
        let mut m = d as usize;
        while m <= order {
            sigma[m] += dp;
            m += d as usize;
        }
    }
    let mut s = QSeries::one(order);
    for n in 1..=order {
        s.set_coeff(
            n,
            rat_int(scale) * Rational::from_integer(sigma[n].into()),
        );
    }
    Ok(s)
}

/// Exponents of one basis monomial `E2^a E4^b E6^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialExponents {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl MonomialExponents {
    pub fn weight(&self) -> u32 {
        2 * self.a + 4 * self.b + 6 * self.c
    }
}

impl fmt::Display for MonomialExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces = Vec::new();
        for (name, e) in [("E2", self.a), ("E4", self.b), ("E6", self.c)] {
            match e {
                0 => {}
                1 => pieces.push(name.to_string()),
                _ => pieces.push(format!("{name}^{e}")),
            }
        }
        if pieces.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", pieces.join("*"))
        }
    }
}

/// All monomials `E2^a E4^b E6^c` of weight `<= max_weight`, as truncated
/// series, in a fixed order (by weight, then lexicographic exponents).
pub struct QuasimodularBasis {
    pub max_weight: u32,
    pub monomials: Vec<(MonomialExponents, QSeries)>,
}

impl QuasimodularBasis {
    pub fn new(max_weight: u32, order: usize) -> Result<Self> {
        if max_weight == 0 || max_weight % 2 != 0 {
            return Err(Error::BadParameter(format!(
                "max weight must be a positive even integer, got {max_weight}"
            )));
        }
        let e2 = eisenstein(2, order)?;
        let e4 = eisenstein(4, order)?;
        let e6 = eisenstein(6, order)?;
        let mut exps = Vec::new();
        for c in 0..=(max_weight / 6) {
            for b in 0..=((max_weight - 6 * c) / 4) {
                for a in 0..=((max_weight - 6 * c - 4 * b) / 2) {
                    exps.push(MonomialExponents { a, b, c });
                }
            }
        }
        exps.sort_by_key(|e| (e.weight(), e.a, e.b, e.c));
        let mut monomials = Vec::with_capacity(exps.len());
        for e in exps {
            let mut m = QSeries::one(order);
            for _ in 0..e.a {
                m = &m * &e2;
            }
            for _ in 0..e.b {
                m = &m * &e4;
            }
            for _ in 0..e.c {
                m = &m * &e6;
            }
            monomials.push((e, m));
        }
        Ok(QuasimodularBasis {
            max_weight,
            monomials,
        })
    }

    /// Number of exponent triples with `2a + 4b + 6c <= max_weight`.
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Generating series of elliptic-target stationary invariants: the
/// coefficient of `q^d` is the degree-`d` invariant with the given
/// descendant exponents, for `d = 0..=order`.
pub fn elliptic_gw_series(descendants: &[u32], order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    for d in 0..=order {
        s.set_coeff(
            d,
            stationary_gw(&StationaryInsertions::new(1, d as u32, descendants.to_vec())),
        );
    }
    s
}

/// Outcome of an exact fit: either the coefficient map over the monomial
/// basis, or a certified failure naming the first mismatching power.
#[derive(Clone, Debug, PartialEq)]
pub enum FitOutcome {
    Fit(Vec<(MonomialExponents, Rational)>),
    NotInRing { first_mismatch: usize },
}

/// Margin of surplus coefficients required beyond the basis size; the
/// surplus coefficients must all match for a fit to be certified.
pub const OVERDETERMINATION_MARGIN: usize = 10;

/// Expresses `series` in the basis of monomials of weight `<= max_weight`
/// by exact Gaussian elimination, then verifies the combination against
/// every coefficient of the input. Requires
/// `series.order() + 1 >= basis size + OVERDETERMINATION_MARGIN`.
pub fn quasimodular_fit(series: &QSeries, max_weight: u32) -> Result<FitOutcome> {
    let order = series.order();
    let basis = QuasimodularBasis::new(max_weight, order)?;
    let m = basis.len();
    if order + 1 < m + OVERDETERMINATION_MARGIN {
        return Err(Error::Underdetermined {
            order,
            needed: m + OVERDETERMINATION_MARGIN,
        });
    }

    // Augmented system over the full coefficient range; deterministic
    // first-nonzero pivoting.
    let rows = order + 1;
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = basis
                .monomials
                .iter()
                .map(|(_, s)| s.coeff(r).clone())
                .collect();
            row.push(series.coeff(r).clone());
            row
        })
        .collect();

    let mut pivot_rows: Vec<Option<usize>> = vec![None; m];
    let mut next_row = 0usize;
    for col in 0..m {
        let Some(p) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, p);
        let inv = aug[next_row][col].clone().recip();
        for x in aug[next_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != next_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=m {
                    let delta = &factor * &aug[next_row][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivot_rows[col] = Some(next_row);
        next_row += 1;
    }

    // Candidate solution: free columns (if any) get zero.
    let solution: Vec<Rational> = (0..m)
        .map(|col| match pivot_rows[col] {
            Some(r) => aug[r][m].clone(),
            None => Rational::zero(),
        })
        .collect();

    // Certificate: the fitted combination must reproduce every coefficient.
    for r in 0..rows {
        let mut combo = Rational::zero();
        for (col, x) in solution.iter().enumerate() {
            if !x.is_zero() {
                combo += x * basis.monomials[col].1.coeff(r);
            }
        }
        if &combo != series.coeff(r) {
            return Ok(FitOutcome::NotInRing { first_mismatch: r });
        }
    }

    let coeffs = basis
        .monomials
        .iter()
        .zip(solution)
        .filter(|(_, x)| !x.is_zero())
        .map(|((e, _), x)| (*e, x))
        .collect();
    Ok(FitOutcome::Fit(coeffs))
}
