//! Stationary invariants of target curves: the finite partition sum
//!
//!   Σ_{|λ|=d} (dim λ / d!)^{2-2g(V)} ∏_i p_{k_i+1}(λ) / (k_i+1)!
//!
//! (disconnected domains included), the domain-genus constraint solver,
//! and the side-by-side comparison with the cycle-type character sum under
//! the substitution `f_{k+1} -> p_{k+1}/(k+1)!`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_number, BranchData};
use crate::partition::partitions_of;
use crate::rational::{factorial, pow_i32, Rational};
use crate::shifted::shifted_power_sum;

/// Target genus, degree, and the descendant exponents `k_1, …, k_n` of the
/// point-class insertions.
#[derive(Clone, Debug)]
pub struct StationaryInsertions {
    pub target_genus: u32,
    pub degree: u32,
    pub descendants: Vec<u32>,
}

impl StationaryInsertions {
    pub fn new(target_genus: u32, degree: u32, descendants: Vec<u32>) -> Self {
        StationaryInsertions {
            target_genus,
            degree,
            descendants,
        }
    }
}

/// The disconnected stationary invariant, exact. `d = 0` keeps only the
/// empty-partition term (a convention: the sum below is simply evaluated
/// as written, and the empty partition is the unique partition of 0).
pub fn stationary_gw(ins: &StationaryInsertions) -> Rational {
    let d = ins.degree;
    let exponent = 2 - 2 * ins.target_genus as i32;
    let d_fact = Rational::from_integer(factorial(d as u64));
    let weights: Vec<Rational> = ins
        .descendants
        .iter()
        .map(|&k| Rational::from_integer(factorial(k as u64 + 1)))
        .collect();
    let mut total = Rational::zero();
    for lambda in partitions_of(d) {
        let mut term = if exponent == 0 {
            Rational::one()
        } else {
            pow_i32(
                &(Rational::from_integer(lambda.dimension()) / d_fact.clone()),
                exponent,
            )
        };
        for (i, &k) in ins.descendants.iter().enumerate() {
            term *= shifted_power_sum(&lambda, k + 1) / &weights[i];
        }
        total += term;
    }
    total
}

/// Solves the dimension constraint `Σ (k_i + 1) = d(2 - 2g(V)) + 2g - 2 + n`
/// for the domain genus `g`, returning the exact rational
/// `g = (Σ k_i - d(2 - 2g(V)) + 2) / 2`. A non-integer value means the
/// invariant vanishes for degree reasons.
pub fn domain_genus(ins: &StationaryInsertions) -> Rational {
    let sum_k: i64 = ins.descendants.iter().map(|&k| k as i64).sum();
    let euler = ins.degree as i64 * (2 - 2 * ins.target_genus as i64);
    Rational::new((sum_k - euler + 2).into(), 2.into())
}

/// Runs both sides of the cycle-to-power-sum substitution on single-cycle
/// branch data: returns `(character sum with f_{k_i+1}, partition sum with
/// p_{k_i+1}/(k_i+1)!)`. The sides agree when every cycle has length 2
/// (`p_2 = 2 f_2`), and generally differ by completion terms.
pub fn gwh_substitution_check(data: &BranchData) -> Result<(Rational, Rational)> {
    let mut descendants = Vec::with_capacity(data.profiles.len());
    for profile in &data.profiles {
        let parts = profile.profile().parts();
        if parts.len() != 1 {
            return Err(Error::NotACycle(profile.to_string()));
        }
        descendants.push(parts[0] - 1);
    }
    let hurwitz_side = hurwitz_number(data)?;
    let gw_side = stationary_gw(&StationaryInsertions::new(
        data.target_genus,
        data.degree,
        descendants,
    ));
    Ok((hurwitz_side, gw_side))
}
