//! Hurwitz numbers of branched covers.
//!
//! The primitive is the *disconnected* count: covers of a genus-`g` surface
//! of degree `d` with prescribed ramification profiles, weighted by
//! `1/|Aut|`. It is computed two independent ways:
//!
//! * [`hurwitz_number`]: the character sum
//!   `Σ_{|λ|=d} (dim λ / d!)^{2-2g} ∏_i f_{η_i}(λ)` over partitions of `d`;
//! * [`hurwitz_oracle`]: brute-force enumeration of monodromy tuples
//!   `(a_1, b_1, …, a_g, b_g, σ_1, …, σ_n)` in `S_d` with
//!   `∏ [a_i, b_i] · ∏ σ_j = id` and `σ_j` in the prescribed class,
//!   divided by `d!`.
//!
//! Connectivity is derived only at the generating-series level, via the
//! formal logarithm ([`connected_series`]).

use num::{One, Zero};

use crate::characters::{burnside_factor, CycleType};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::qseries::QSeries;
use crate::rational::{factorial, pow_i32, Rational};

/// Degree, target genus, and ramification profiles of a branched cover.
#[derive(Clone, Debug)]
pub struct BranchData {
    pub target_genus: u32,
    pub degree: u32,
    pub profiles: Vec<CycleType>,
}

impl BranchData {
    pub fn new(target_genus: u32, degree: u32, profiles: Vec<CycleType>) -> Self {
        BranchData {
            target_genus,
            degree,
            profiles,
        }
    }
}

/// Per-branch-point factor of the character sum: the raw Burnside class
/// factor, extended by zero when the profile does not fit in `S_d`. A
/// profile that pads to the identity class (all parts 1) contributes 1,
/// matching what tuple enumeration counts.
fn branch_factor(lambda: &Partition, eta: &CycleType) -> Result<Rational> {
    if eta.size() > lambda.size() {
        return Ok(Rational::zero());
    }
    burnside_factor(lambda, eta)
}

/// Disconnected Hurwitz number by the character sum. Exact; covers with
/// automorphisms are weighted `1/|Aut|` through the `/d!` normalization,
/// so callers must not correct for automorphisms again.
pub fn hurwitz_number(data: &BranchData) -> Result<Rational> {
    let d = data.degree;
    let exponent = 2 - 2 * data.target_genus as i32;
    let d_fact = Rational::from_integer(factorial(d as u64));
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
        for eta in &data.profiles {
            if term.is_zero() {
                break;
            }
            term *= branch_factor(&lambda, eta)?;
        }
        total += term;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Enumeration oracle
// ---------------------------------------------------------------------------

type Perm = Vec<u8>;

fn identity(d: usize) -> Perm {
    (0..d as u8).collect()
}

/// `a ∘ b`: apply `b` first.
fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0u8; a.len()];
    for (i, &ai) in a.iter().enumerate() {
        inv[ai as usize] = i as u8;
    }
    inv
}

fn cycle_type(a: &Perm) -> Vec<u32> {
    let mut seen = vec![false; a.len()];
    let mut lens = Vec::new();
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = a[i] as usize;
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|x, y| y.cmp(x));
    lens
}

fn all_permutations(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(d);
    heap_permutations(&mut cur, d, &mut out);
    out
}

fn heap_permutations(cur: &mut Perm, k: usize, out: &mut Vec<Perm>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

const ORACLE_MAX_DEGREE: u32 = 6;
const ORACLE_MAX_GENUS: u32 = 1;
const ORACLE_MAX_PROFILES: usize = 4;
// Cap on the estimated number of enumerated tuples; keeps the worst legal
// corner of the guard from running for hours.
const ORACLE_MAX_WORK: f64 = 5e8;

/// Brute-force Hurwitz count. Guarded: `d <= 6`, `target_genus <= 1`, at
/// most 4 profiles, and a total-work estimate. Exact rational output;
/// must agree with [`hurwitz_number`] on every admissible input.
pub fn hurwitz_oracle(data: &BranchData) -> Result<Rational> {
    let d = data.degree;
    if d > ORACLE_MAX_DEGREE
        || data.target_genus > ORACLE_MAX_GENUS
        || data.profiles.len() > ORACLE_MAX_PROFILES
    {
        return Err(Error::GuardExceeded {
            what: "hurwitz oracle",
            detail: format!(
                "degree {} (max {ORACLE_MAX_DEGREE}), genus {} (max {ORACLE_MAX_GENUS}), {} profiles (max {ORACLE_MAX_PROFILES})",
                d,
                data.target_genus,
                data.profiles.len()
            ),
        });
    }
    if d == 0 {
        // The empty cover: one tuple (all groups trivial) iff every profile
        // is empty; S_0 has order 1.
        let ok = data.profiles.iter().all(|p| p.size() == 0);
        return Ok(if ok { Rational::one() } else { Rational::zero() });
    }

    let dd = d as usize;
    let perms = all_permutations(dd);

    // Padded cycle types of each profile; an oversized profile means no
    // permutation can realize it.
    let mut padded: Vec<Vec<u32>> = Vec::new();
    for p in &data.profiles {
        match p.padded_to(d as u64) {
            Ok(part) => padded.push(part.parts().to_vec()),
            Err(_) => return Ok(Rational::zero()),
        }
    }

    // Class members per profile. The largest class is made the *forced*
    // one (its element is determined by the others), so only the smaller
    // classes are enumerated.
    let mut classes: Vec<Vec<&Perm>> = padded
        .iter()
        .map(|t| perms.iter().filter(|p| &cycle_type(p) == t).collect())
        .collect();
    let forced_type: Option<Vec<u32>> = if classes.is_empty() {
        None
    } else {
        let imax = (0..classes.len())
            .max_by_key(|&i| classes[i].len())
            .unwrap();
        let t = padded.swap_remove(imax);
        classes.swap_remove(imax);
        Some(t)
    };

    let genus_pairs: f64 = if data.target_genus == 1 {
        (perms.len() * perms.len()) as f64
    } else {
        1.0
    };
    let work: f64 = genus_pairs * classes.iter().map(|c| c.len() as f64).product::<f64>();
    if work > ORACLE_MAX_WORK {
        return Err(Error::GuardExceeded {
            what: "hurwitz oracle",
            detail: format!("estimated {work:.2e} tuples exceeds cap {ORACLE_MAX_WORK:.0e}"),
        });
    }

    let mut count: u64 = 0;
    let id = identity(dd);

    // Enumerate commutator prefixes ∏[a,b] (just `id` for genus 0), then
    // the non-forced classes depth-first; the final element is forced to
    // be the inverse of the running product and only its type is checked.
    let mut prefixes: Vec<Perm> = Vec::new();
    match data.target_genus {
        0 => prefixes.push(id.clone()),
        1 => {
            for a in &perms {
                let a_inv = inverse(a);
                for b in &perms {
                    // [a, b] = a b a^{-1} b^{-1}
                    let c = compose(&compose(a, b), &compose(&a_inv, &inverse(b)));
                    prefixes.push(c);
                }
            }
        }
        _ => unreachable!("guard checked above"),
    }

    fn dfs(
        running: &Perm,
        classes: &[Vec<&Perm>],
        forced_type: &Option<Vec<u32>>,
        id: &Perm,
        count: &mut u64,
    ) {
        match classes.split_first() {
            None => match forced_type {
                // running · forced = id  =>  forced = running^{-1}, whose
                // cycle type equals that of `running`.
                Some(t) => {
                    if &cycle_type(running) == t {
                        *count += 1;
                    }
                }
                None => {
                    if running == id {
                        *count += 1;
                    }
                }
            },
            Some((first, rest)) => {
                for sigma in first {
                    let next = compose(running, sigma);
                    dfs(&next, rest, forced_type, id, count);
                }
            }
        }
    }

    for prefix in &prefixes {
        dfs(prefix, &classes, &forced_type, &id, &mut count);
    }

    Ok(Rational::from_integer(count.into()) / Rational::from_integer(factorial(d as u64)))
}

/// Connected counts from disconnected ones: the formal logarithm of the
/// disconnected generating series. Requires constant term exactly 1 (the
/// empty-cover term must be adjoined by the caller).
pub fn connected_series(disconnected: &QSeries) -> Result<QSeries> {
    disconnected.log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(Partition::new(parts.to_vec()))
    }

    #[test]
    fn sphere_double_cover_weighted_by_automorphisms() {
        let data = BranchData::new(0, 2, vec![ct(&[2]), ct(&[2])]);
        assert_eq!(hurwitz_number(&data).unwrap(), rat(1, 2));
        assert_eq!(hurwitz_oracle(&data).unwrap(), rat(1, 2));
    }

    #[test]
    fn torus_unbranched_double_covers() {
        let data = BranchData::new(1, 2, vec![]);
        assert_eq!(hurwitz_number(&data).unwrap(), rat_int(2));
        assert_eq!(hurwitz_oracle(&data).unwrap(), rat_int(2));
    }

    #[test]
    fn identity_cover() {
        let data = BranchData::new(0, 1, vec![]);
        assert_eq!(hurwitz_number(&data).unwrap(), rat_int(1));
        assert_eq!(hurwitz_oracle(&data).unwrap(), rat_int(1));
    }

    #[test]
    fn torus_two_simple_branch_points() {
        let data = BranchData::new(1, 2, vec![ct(&[2]), ct(&[2])]);
        assert_eq!(hurwitz_oracle(&data).unwrap(), rat_int(2));
        assert_eq!(hurwitz_number(&data).unwrap(), rat_int(2));
    }

    #[test]
    fn four_transpositions_on_the_sphere_degree_three() {
        // Fixed by the oracle itself: exhaustive S_3 tuple enumeration.
        let data = BranchData::new(0, 3, vec![ct(&[2]), ct(&[2]), ct(&[2]), ct(&[2])]);
        let oracle = hurwitz_oracle(&data).unwrap();
        assert_eq!(oracle, rat(9, 2));
        assert_eq!(hurwitz_number(&data).unwrap(), oracle);
    }

    #[test]
    fn single_transposition_cannot_close_up() {
        let data = BranchData::new(0, 2, vec![ct(&[2])]);
        assert_eq!(hurwitz_oracle(&data).unwrap(), rat_int(0));
        assert_eq!(hurwitz_number(&data).unwrap(), rat_int(0));
    }

    #[test]
    fn parity_obstruction_forces_zero_on_the_sphere() {
        // Σ_i (d - #cycles(η_i)) odd with genus 0 target: no valid tuple.
        for d in 2..=4u32 {
            // A single simple branch point, or three transpositions.
            for profiles in [vec![ct(&[2])], vec![ct(&[2]), ct(&[2]), ct(&[2])]] {
                let data = BranchData::new(0, d, profiles);
                assert_eq!(hurwitz_number(&data).unwrap(), rat_int(0), "d={d}");
                assert_eq!(hurwitz_oracle(&data).unwrap(), rat_int(0), "d={d}");
            }
        }
    }

    #[test]
    fn oracle_guard_rejects_large_inputs() {
        let too_big = BranchData::new(0, 7, vec![]);
        assert!(matches!(
            hurwitz_oracle(&too_big),
            Err(Error::GuardExceeded { .. })
        ));
        let too_branched = BranchData::new(0, 3, vec![ct(&[2]); 5]);
        assert!(matches!(
            hurwitz_oracle(&too_branched),
            Err(Error::GuardExceeded { .. })
        ));
        let too_wild = BranchData::new(2, 2, vec![]);
        assert!(matches!(
            hurwitz_oracle(&too_wild),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn oversized_profile_gives_zero() {
        let data = BranchData::new(0, 2, vec![ct(&[3]), ct(&[3])]);
        assert_eq!(hurwitz_oracle(&data).unwrap(), rat_int(0));
        assert_eq!(hurwitz_number(&data).unwrap(), rat_int(0));
    }

    #[test]
    fn burnside_equals_oracle_on_a_sweep() {
        // Exhaustive small sweep (the randomized version runs in the
        // acceptance suite): all single/double profile choices for d <= 4.
        for d in 1..=4u32 {
            let mut profile_pool: Vec<Vec<u32>> = vec![];
            for j in 2..=d {
                for p in partitions_of(j) {
                    // Skip pure fixed-point profiles: padding makes them
                    // the identity class anyway.
                    if p.parts().iter().any(|&x| x >= 2) {
                        profile_pool.push(p.parts().to_vec());
                    }
                }
            }
            for g in 0..=1u32 {
                let data = BranchData::new(g, d, vec![]);
                assert_eq!(
                    hurwitz_number(&data).unwrap(),
                    hurwitz_oracle(&data).unwrap()
                );
                for p1 in &profile_pool {
                    let data = BranchData::new(g, d, vec![ct(p1)]);
                    assert_eq!(
                        hurwitz_number(&data).unwrap(),
                        hurwitz_oracle(&data).unwrap(),
                        "g={g} d={d} p1={p1:?}"
                    );
                    for p2 in &profile_pool {
                        let data = BranchData::new(g, d, vec![ct(p1), ct(p2)]);
                        assert_eq!(
                            hurwitz_number(&data).unwrap(),
                            hurwitz_oracle(&data).unwrap(),
                            "g={g} d={d} p1={p1:?} p2={p2:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unbranched_torus_series_log_gives_sigma_over_d() {
        // Disconnected unbranched degree-d torus covers number p(d); the
        // connected counts are σ(d)/d. Divisor sums computed directly.
        let order = 12;
        let mut disconnected = QSeries::zero(order);
        for d in 0..=order {
            disconnected.set_coeff(d, rat_int(partitions_of(d as u32).len() as i64));
        }
        let connected = connected_series(&disconnected).unwrap();
        for d in 1..=order {
            let sigma: i64 = (1..=d as i64).filter(|k| d as i64 % k == 0).sum();
            assert_eq!(connected.coeff(d), &rat(sigma, d as i64), "d={d}");
        }
    }

    #[test]
    fn connected_series_requires_unit_constant_term() {
        let bad = QSeries::zero(5);
        assert!(connected_series(&bad).is_err());
    }

    #[test]
    fn constant_one_series_has_no_connected_covers() {
        let one = QSeries::one(10);
        assert!(connected_series(&one).unwrap().is_zero());
    }
}
