//! Symmetric-group characters via the Murnaghan–Nakayama rule, conjugacy
//! class sizes, and central characters `f_k` / `f_η`.
//!
//! Characters are exact integers; they are returned as [`Rational`] so
//! that one scalar type flows through all downstream formulas.

use std::cell::RefCell;
use std::collections::HashMap;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{factorial, Rational};

/// Cycle type of a conjugacy class of `S_n`. Parts of size 1 may be left
/// implicit: padding to the ambient `n` happens at use sites.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    profile: Partition,
}

impl CycleType {
    pub fn new(profile: Partition) -> Self {
        CycleType { profile }
    }

    /// Single cycle of length `k`.
    pub fn cycle(k: u32) -> Self {
        CycleType {
            profile: if k == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![k])
            },
        }
    }

    pub fn profile(&self) -> &Partition {
        &self.profile
    }

    pub fn size(&self) -> u64 {
        self.profile.size()
    }

    /// Pads with fixed points (parts of size 1) to ambient size `n`.
    pub fn padded_to(&self, n: u64) -> Result<Partition> {
        let s = self.profile.size();
        if s > n {
            return Err(Error::SizeMismatch {
                profile: s,
                ambient: n,
            });
        }
        let mut parts = self.profile.parts().to_vec();
        parts.extend(std::iter::repeat(1).take((n - s) as usize));
        Ok(Partition::new(parts))
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.profile.fmt(f)
    }
}

// The Hurwitz sums re-query the same (shape, cycle type) pairs heavily, so
// character values are memoized per thread. Entries are complete values;
// a concurrent caller on another thread simply has its own table.
thread_local! {
    static MEMO: RefCell<HashMap<(Vec<u32>, Vec<u32>), BigInt>> = RefCell::new(HashMap::new());
}

/// `χ^λ(μ)` where `μ` is padded to `|λ|`. Recursive border-strip expansion
/// over first-column hook lengths (beta-sets).
pub fn character(lambda: &Partition, mu: &CycleType) -> Result<Rational> {
    let padded = mu.padded_to(lambda.size())?;
    let value = chi(lambda.parts(), padded.parts());
    Ok(Rational::from_integer(value))
}

fn chi(lambda: &[u32], mu: &[u32]) -> BigInt {
    if mu.is_empty() {
        // lambda is empty too whenever sizes matched at the top level.
        return BigInt::one();
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }

    // Remove one border strip of length mu[0] in all possible ways.
    // Beta-set encoding: beta_i = lambda_i + (L - 1 - i); removing a strip
    // of length r moves one bead from b to b - r, legal iff the target is
    // free; the strip height is the number of beads passed over.
    let r = mu[0];
    let rest = &mu[1..];
    let len = lambda.len();
    let beta: Vec<u32> = (0..len)
        .map(|i| lambda[i] + (len - 1 - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        // Beads strictly between target and b sit at positions pos+1.. in
        // the (strictly decreasing) beta vector.
        let passed = beta[pos + 1..].iter().filter(|&&x| x > target).count();
        let mut new_beta: Vec<u32> = beta
            .iter()
            .enumerate()
            .map(|(i, &x)| if i == pos { target } else { x })
            .collect();
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        // Convert back to a partition, trimming trailing zeros.
        let mut new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i) as u32)
            .collect();
        while new_lambda.last() == Some(&0) {
            new_lambda.pop();
        }
        let sub = chi(&new_lambda, rest);
        if passed % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }

    MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// Size of the conjugacy class with cycle type `μ` padded to `S_n`:
/// `n! / (∏_j j^{m_j} · m_j!)` where `m_j` counts parts equal to `j`.
pub fn class_size(mu: &CycleType, n: u64) -> Result<BigInt> {
    let padded = mu.padded_to(n)?;
    let mut mult: HashMap<u32, u64> = HashMap::new();
    for &p in padded.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut denom = BigInt::one();
    for (part, m) in mult {
        for _ in 0..m {
            denom *= BigInt::from(part);
        }
        denom *= factorial(m);
    }
    Ok(factorial(n) / denom)
}

/// Central character `f_η(λ) = |C_η| · χ^λ(η) / dim λ`, the scalar by which
/// the class sum of `η` (padded to `|λ|`) acts on the irreducible `λ`.
///
/// Conventions: `f_1(λ) = |λ|`, and `f_η(λ) = 0` whenever the profile does
/// not fit inside `λ`, so products over branch points are total functions.
pub fn central_character(lambda: &Partition, eta: &CycleType) -> Result<Rational> {
    if eta.profile().parts() == [1] {
        return Ok(Rational::from_integer(BigInt::from(lambda.size())));
    }
    if eta.size() > lambda.size() {
        return Ok(Rational::zero());
    }
    burnside_factor(lambda, eta)
}

/// The raw Burnside class factor `|C_η| · χ^λ(η padded) / dim λ` with no
/// `f_1` convention; this is the quantity the cover-counting sums use, and
/// the one the permutation-enumeration oracle reproduces.
pub fn burnside_factor(lambda: &Partition, eta: &CycleType) -> Result<Rational> {
    let n = lambda.size();
    let size = class_size(eta, n)?;
    let chi = character(lambda, eta)?;
    let dim = lambda.dimension();
    Ok(Rational::from_integer(size) * chi / Rational::from_integer(dim))
}

/// Sign of the class: `(-1)^{n - #cycles}` with fixed points counted.
pub fn class_sign(mu: &CycleType, n: u64) -> Result<i32> {
    let padded = mu.padded_to(n)?;
    let cycles = padded.len() as u64;
    Ok(if (n - cycles) % 2 == 0 { 1 } else { -1 })
}
