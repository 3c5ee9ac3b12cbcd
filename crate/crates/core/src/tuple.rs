//! The 5-tuple calculus.
//!
//! A diameter-one curve with Rao module `k(-c)^r` carries the 5-tuple
//! `(a1, a2, b1, b2, r) = (β₁,c+4, β₁,c, β₂,c+4, β₂,c, β₃,c+4)`. Four basic
//! reductions act on it; the minimal tuples reachable from a curve's tuple are
//! in bijection with the irreducible components of the Hilbert scheme through
//! the curve.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const ENTRY_NAMES: [&str; 5] = ["a1", "a2", "b1", "b2", "r"];

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 5]", into = "[u64; 5]")]
pub struct FiveTuple {
    pub a1: u64,
    pub a2: u64,
    pub b1: u64,
    pub b2: u64,
    pub r: u64,
}

impl FiveTuple {
    pub const ZERO: FiveTuple = FiveTuple::new(0, 0, 0, 0, 0);

    pub const fn new(a1: u64, a2: u64, b1: u64, b2: u64, r: u64) -> Self {
        Self { a1, a2, b1, b2, r }
    }

    pub fn to_array(self) -> [u64; 5] {
        [self.a1, self.a2, self.b1, self.b2, self.r]
    }

    pub fn sum(self) -> u64 {
        self.to_array().iter().sum()
    }

    pub fn checked_sub(self, v: [u64; 5]) -> Option<Self> {
        let a = self.to_array();
        let mut out = [0; 5];
        for i in 0..5 {
            out[i] = a[i].checked_sub(v[i])?;
        }
        Some(out.into())
    }

    pub fn checked_add(self, v: [u64; 5]) -> Option<Self> {
        let a = self.to_array();
        let mut out = [0; 5];
        for i in 0..5 {
            out[i] = a[i].checked_add(v[i])?;
        }
        Some(out.into())
    }

    /// Reduction steps that keep every entry non-negative, in the fixed order
    /// `P1, P2, Qc, Qc4`.
    pub fn applicable_steps(self) -> impl Iterator<Item = ReductionStep> {
        ReductionStep::ALL
            .into_iter()
            .filter(move |s| self.checked_sub(s.vector()).is_some())
    }
}

impl From<[u64; 5]> for FiveTuple {
    fn from(a: [u64; 5]) -> Self {
        Self::new(a[0], a[1], a[2], a[3], a[4])
    }
}

impl From<FiveTuple> for [u64; 5] {
    fn from(t: FiveTuple) -> Self {
        t.to_array()
    }
}

impl fmt::Display for FiveTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.a1, self.a2, self.b1, self.b2, self.r
        )
    }
}

impl fmt::Debug for FiveTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for FiveTuple {
    type Err = Error;

    /// Parses `"a1,a2,b1,b2,r"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(Error::Malformed(format!(
                "expected 5 comma-separated entries, got {}",
                parts.len()
            )));
        }
        let mut a = [0u64; 5];
        for (slot, p) in a.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Malformed(format!("bad 5-tuple entry {p:?}")))?;
        }
        Ok(a.into())
    }
}

/// One of the four basic reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReductionStep {
    /// Lowers `r` and `β₂,c+4`; preserves postulation.
    P1,
    /// Lowers `r` and `β₁,c`; drops `γ(c)`.
    P2,
    /// Cancels a ghost pair in degree `c`.
    Qc,
    /// Cancels a ghost pair in degree `c+4`.
    Qc4,
}

impl ReductionStep {
    pub const ALL: [ReductionStep; 4] = [
        ReductionStep::P1,
        ReductionStep::P2,
        ReductionStep::Qc,
        ReductionStep::Qc4,
    ];

    /// The subtraction vector in `(a1, a2, b1, b2, r)` coordinates.
    pub const fn vector(self) -> [u64; 5] {
        match self {
            ReductionStep::P1 => [0, 0, 1, 0, 1],
            ReductionStep::P2 => [0, 1, 0, 0, 1],
            ReductionStep::Qc => [0, 1, 0, 1, 0],
            ReductionStep::Qc4 => [1, 0, 1, 0, 0],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ReductionStep::P1 => "P1",
            ReductionStep::P2 => "P2",
            ReductionStep::Qc => "Qc",
            ReductionStep::Qc4 => "Qc4",
        }
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Multiplicities of `Qc4, P1, P2, Qc` in a reduction of a source tuple.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct ReductionWitness {
    pub k1: u64,
    pub k2: u64,
    pub k3: u64,
    pub k4: u64,
}

impl ReductionWitness {
    /// Applies the witness to `t`, or `None` if an entry would go negative.
    pub fn apply(self, t: FiveTuple) -> Option<FiveTuple> {
        let Self { k1, k2, k3, k4 } = self;
        Some(FiveTuple::new(
            t.a1.checked_sub(k1)?,
            t.a2.checked_sub(k3.checked_add(k4)?)?,
            t.b1.checked_sub(k1.checked_add(k2)?)?,
            t.b2.checked_sub(k4)?,
            t.r.checked_sub(k2.checked_add(k3)?)?,
        ))
    }
}

pub fn apply_reduction(t: FiveTuple, step: ReductionStep) -> Result<FiveTuple> {
    let v = step.vector();
    let a = t.to_array();
    if let Some(i) = (0..5).find(|&i| a[i] < v[i]) {
        return Err(Error::ReductionBlocked {
            step,
            tuple: t,
            entry: ENTRY_NAMES[i],
        });
    }
    Ok(t.checked_sub(v).expect("checked above"))
}

/// No basic reduction applies: every adjacent product along the chain
/// `a1, b1, r, a2, b2` vanishes.
pub fn is_minimal(t: FiveTuple) -> bool {
    t.a1 * t.b1 == 0 && t.b1 * t.r == 0 && t.r * t.a2 == 0 && t.a2 * t.b2 == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalTuple {
    pub tuple: FiveTuple,
    pub witness: ReductionWitness,
}

/// All minimal tuples reachable from `t`, sorted, each with its
/// lexicographically least witness.
///
/// Exhausts every `(k1, k2, k3, k4)` satisfying
/// `k1 ≤ a1, k1+k2 ≤ b1, k2+k3 ≤ r, k3+k4 ≤ a2, k4 ≤ b2`
/// and keeps those where no `k_i` can be raised, i.e. in every neighbouring
/// pair of inequalities at least one is tight.
pub fn enumerate_minimal(t: FiveTuple) -> Vec<MinimalTuple> {
    let mut found: BTreeMap<FiveTuple, ReductionWitness> = BTreeMap::new();
    for k1 in 0..=t.a1.min(t.b1) {
        for k2 in 0..=(t.b1 - k1).min(t.r) {
            for k3 in 0..=(t.r - k2).min(t.a2) {
                for k4 in 0..=(t.a2 - k3).min(t.b2) {
                    let tight = [
                        k1 == t.a1,
                        k1 + k2 == t.b1,
                        k2 + k3 == t.r,
                        k3 + k4 == t.a2,
                        k4 == t.b2,
                    ];
                    if tight.windows(2).all(|w| w[0] || w[1]) {
                        let w = ReductionWitness { k1, k2, k3, k4 };
                        let reduced = w.apply(t).expect("within bounds");
                        found.entry(reduced).or_insert(w);
                    }
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(tuple, witness)| MinimalTuple { tuple, witness })
        .collect()
}

/// Closed-form component counts: `N_B` minimal tuples with `r' > 0` and
/// `N_CM` with `r' = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCount {
    pub buchsbaum: u128,
    pub acm: u128,
}

impl ComponentCount {
    pub fn total(self) -> u128 {
        self.buchsbaum + self.acm
    }
}

pub fn count_components(t: FiveTuple) -> ComponentCount {
    let (a1, a2, b1, b2, r) = (
        i128::from(t.a1),
        i128::from(t.a2),
        i128::from(t.b1),
        i128::from(t.b2),
        i128::from(t.r),
    );
    // Triangular numbers, zero below 2 (negative arguments included).
    let tri = |m: i128| if m < 2 { 0 } else { m * (m - 1) / 2 };
    let a2_hat = (a2 - b2).max(0);
    let b1_hat = (b1 - a1).max(0);

    let nb = tri(r - b1_hat - a2_hat + 1) - tri(r - b1 - a2_hat) - tri(r - b1_hat - a2)
        + tri(r - b1 - a2 - 1);
    let ncm = if r <= b1.max(a2) {
        b1.min(a2).min(r) + 1
    } else if r <= b1 + a2 {
        b1 + a2 - r + 1
    } else {
        0
    };
    debug_assert!(nb >= 0 && ncm >= 0);
    ComponentCount {
        buchsbaum: nb as u128,
        acm: ncm as u128,
    }
}

/// Exactly one minimal tuple specializes to `t`: along each triplet
/// `(a1,b1,r), (b1,r,a2), (r,a2,b2)` either some entry vanishes or the middle
/// one dominates the outer two.
pub fn has_unique_minimal(t: FiveTuple) -> bool {
    [(t.a1, t.b1, t.r), (t.b1, t.r, t.a2), (t.r, t.a2, t.b2)]
        .into_iter()
        .all(|(x, y, z)| x == 0 || y == 0 || z == 0 || y >= x + z)
}

/// Obstructedness of a diameter-one curve from its 5-tuple. ACM tuples
/// (`r = 0`) are unobstructed.
pub fn is_obstructed(t: FiveTuple) -> bool {
    t.r != 0 && (t.a2 * t.b1 != 0 || t.a1 * t.b1 != 0 || t.a2 * t.b2 != 0)
}
