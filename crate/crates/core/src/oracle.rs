//! Exhaustive cross-check of the closed-form counts against brute force.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::components::{specialization_lattice, SpecializationLattice};
use crate::tuple::{
    count_components, enumerate_minimal, has_unique_minimal, is_minimal, is_obstructed, FiveTuple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleCheck {
    /// `N_B + N_CM` and the `r > 0` split agree with enumeration.
    CountFormula,
    /// The uniqueness criterion holds iff enumeration finds one tuple.
    Uniqueness,
    /// Sinks of the specialization lattice are the enumerated tuples.
    LatticeMinimal,
    /// Minimal tuples are unobstructed.
    MinimalUnobstructed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub tuple: FiveTuple,
    pub check: OracleCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub max: u64,
    pub checked: u64,
    pub failures: u64,
    /// Smallest failing tuple in lexicographic order, if any.
    pub first_counterexample: Option<Counterexample>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// All tuples with entries in `0..=max`, in lexicographic order.
pub fn tuples_up_to(max: u64) -> impl Iterator<Item = FiveTuple> {
    let n = max + 1;
    (0..n.pow(5)).map(move |mut i| {
        let mut a = [0u64; 5];
        for slot in a.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        a.into()
    })
}

/// First failing check for `t`, if any.
pub fn check_tuple(t: FiveTuple) -> Option<OracleCheck> {
    let minimal = enumerate_minimal(t);
    let count = count_components(t);
    let buchsbaum = minimal.iter().filter(|m| m.tuple.r > 0).count() as u128;
    if count.total() != minimal.len() as u128 || count.buchsbaum != buchsbaum {
        return Some(OracleCheck::CountFormula);
    }
    if has_unique_minimal(t) != (minimal.len() == 1) {
        return Some(OracleCheck::Uniqueness);
    }
    let lattice: SpecializationLattice = match specialization_lattice(t) {
        Ok(l) => l,
        Err(_) => return Some(OracleCheck::LatticeMinimal),
    };
    if !lattice
        .minimal_tuples()
        .into_iter()
        .eq(minimal.iter().map(|m| m.tuple))
    {
        return Some(OracleCheck::LatticeMinimal);
    }
    if is_minimal(t) && is_obstructed(t) {
        return Some(OracleCheck::MinimalUnobstructed);
    }
    None
}

pub fn sweep(max: u64) -> OracleSummary {
    let all: Vec<FiveTuple> = tuples_up_to(max).collect();
    let failed: Vec<Counterexample> = all
        .par_iter()
        .filter_map(|&tuple| check_tuple(tuple).map(|check| Counterexample { tuple, check }))
        .collect();
    OracleSummary {
        max,
        checked: all.len() as u64,
        failures: failed.len() as u64,
        first_counterexample: failed.first().copied(),
    }
}
