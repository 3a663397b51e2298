//! Integer partitions: construction, enumeration, conjugation, hook
//! lengths, and irreducible-representation dimensions.
//!
//! A partition is a weakly decreasing sequence of positive integers. The
//! empty partition is a first-class value (it is the unique partition of 0
//! and the `d = 0` term of every generating series).

use std::fmt;

use num::bigint::BigInt;
use num::One;
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::factorial;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    /// Panics on increasing or zero parts; use [`Partition::try_new`] for
    /// untrusted input.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing and positive")
    }

    pub fn try_new(parts: Vec<u32>) -> Option<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.last().map_or(true, |&p| p > 0);
        (decreasing && positive).then_some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `n = Σ λ_i`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based index `i`, zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// The conjugate partition `λ'` with `λ'_i = #{j : λ_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let rows = match self.parts.first() {
            Some(&first) => first as usize,
            None => return Partition::empty(),
        };
        let mut parts = vec![0u32; rows];
        for &p in &self.parts {
            for slot in parts.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition { parts }
    }

    /// Hook length of the cell `(i, j)` (0-based): `λ_i - j + λ'_j - i - 1`.
    pub fn hook_length(&self, i: usize, j: usize, conj: &Partition) -> u32 {
        self.parts[i] - j as u32 + conj.parts[j] - i as u32 - 1
    }

    /// `dim λ`: the number of standard Young tableaux of shape `λ`, by the
    /// hook length formula `n! / ∏ hooks` over big integers.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] as usize {
                hooks *= BigInt::from(self.hook_length(i, j, &conj));
            }
        }
        factorial(self.size()) / hooks
    }

    /// Contents `j - i` of all cells (1-based rows/columns).
    pub fn content_sum(&self) -> i64 {
        let mut acc = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as i64 {
                acc += j - i as i64;
            }
        }
        acc
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1,…,1)` last. The order is fixed so series coefficients and pmf
/// listings are reproducible across runs.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = max_part.min(remaining);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

// Wire format: a JSON array of parts, e.g. [3,1].
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PartsVisitor;
        impl<'de> Visitor<'de> for PartsVisitor {
            type Value = Partition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a weakly decreasing array of positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<u32>()? {
                    parts.push(p);
                }
                Partition::try_new(parts)
                    .ok_or_else(|| serde::de::Error::custom("parts not weakly decreasing/positive"))
            }
        }
        deserializer.deserialize_seq(PartsVisitor)
    }
}
