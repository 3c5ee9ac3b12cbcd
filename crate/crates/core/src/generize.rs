//! Generizations acting on full Betti tables: ghost-term cancellation `Qi`
//! in any degree, and the composite of `p1` moves `P1` and `p2` moves `P2`
//! with every optional cancellation in degrees `c+1..c+3` carried out.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::betti::{five_tuple_at, rao_profile, BettiTable, RaoForm};
use crate::error::{Error, Result};
use crate::tuple::ReductionStep;

/// How many `P1`, `P2` and per-degree `Qi` moves to apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerizationPlan {
    pub p1: u64,
    pub p2: u64,
    pub q: BTreeMap<i64, u64>,
}

impl GenerizationPlan {
    pub fn pq(p1: u64, p2: u64) -> Self {
        Self {
            p1,
            p2,
            q: BTreeMap::new(),
        }
    }

    pub fn with_q(mut self, degree: i64, times: u64) -> Self {
        *self.q.entry(degree).or_default() += times;
        self
    }

    pub fn is_empty(&self) -> bool {
        self.p1 == 0 && self.p2 == 0 && self.q.values().all(|&n| n == 0)
    }
}

/// Cancels one ghost pair `R(-i)` between `F₂` and `F₁`.
///
/// In degree `c+3` of a diameter-one table the first `4r` copies of `R(-c-3)`
/// in `F₂` belong to the Koszul block and cannot be cancelled.
pub fn apply_qi(table: &BettiTable, i: i64) -> Result<BettiTable> {
    let koszul = match rao_profile(table)? {
        RaoForm::DiameterOne(p) if i == p.c + 3 => p.r.checked_mul(4).ok_or(Error::Overflow)?,
        _ => 0,
    };
    let (b1, b2) = (table.beta1().get(i), table.beta2().get(i));
    if b1 == 0 || b2 <= koszul {
        return Err(Error::GhostBlocked {
            degree: i,
            koszul_block: b1 > 0 && b2 > 0 && b2 <= koszul,
        });
    }
    let (mut f1, mut f2, f3) = table.clone().into_parts();
    f1.remove(i, 1);
    f2.remove(i, 1);
    BettiTable::new(f1, f2, f3)
}

/// `p1` applications of `P1` and `p2` of `P2`, with maximal cancellation in
/// degrees `c+1, c+2, c+3`.
///
/// Requires a diameter-one table with `p1 ≤ β₂,c+4`, `p2 ≤ β₁,c` and
/// `p1 + p2 ≤ r`. When `p1 + p2 = r` the result is ACM.
pub fn apply_pq(table: &BettiTable, p1: u64, p2: u64) -> Result<BettiTable> {
    if p1 == 0 && p2 == 0 {
        return Ok(table.clone());
    }
    let blocked = |reason: String| Error::PqBlocked { p1, p2, reason };
    let profile = rao_profile(table)?
        .profile()
        .ok_or_else(|| blocked("the table is ACM".into()))?;
    let c = profile.c;
    let beta = |j, i| i128::from(table.beta(j, i));
    let (p1i, p2i) = (i128::from(p1), i128::from(p2));

    if p1i > beta(2, c + 4) {
        return Err(blocked(format!(
            "p1 exceeds beta2 in degree c+4 = {}",
            beta(2, c + 4)
        )));
    }
    if p2i > beta(1, c) {
        return Err(blocked(format!(
            "p2 exceeds beta1 in degree c = {}",
            beta(1, c)
        )));
    }
    if p1i + p2i > i128::from(profile.r) {
        return Err(blocked(format!("p1 + p2 exceeds r = {}", profile.r)));
    }

    let m3 = (4 * p1i).min(beta(1, c + 3));
    let m2 = (6 * p2i).min(beta(1, c + 2));
    let m1 = (4 * p2i).min(beta(2, c + 1));

    let updates: [(usize, i64, i128); 9] = [
        (2, c + 4, beta(2, c + 4) - p1i),
        (3, c + 4, beta(3, c + 4) - p1i - p2i),
        (1, c + 3, beta(1, c + 3) - m3),
        (2, c + 3, beta(2, c + 3) - 4 * p2i - m3),
        (1, c + 2, beta(1, c + 2) - m2),
        (2, c + 2, beta(2, c + 2) + 6 * p2i - m2),
        (1, c + 1, beta(1, c + 1) + 4 * p2i - m1),
        (2, c + 1, beta(2, c + 1) - m1),
        (1, c, beta(1, c) - p2i),
    ];
    let (mut f1, mut f2, mut f3) = table.clone().into_parts();
    for (j, i, value) in updates {
        // beta2 in degree c+3 stays non-negative because it holds the 4r Koszul summands.
        assert!(value >= 0, "beta{j},{i} would become {value}");
        let value = u64::try_from(value).map_err(|_| Error::Overflow)?;
        match j {
            1 => f1.set(i, value),
            2 => f2.set(i, value),
            _ => f3.set(i, value),
        }
    }
    BettiTable::new(f1, f2, f3)
}

/// Result of applying a plan; `c` is kept even when the output is ACM.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generization {
    pub table: BettiTable,
    pub c: Option<i64>,
}

/// Applies the `Qi` moves (ascending degree) and then `apply_pq`.
///
/// `c` is only needed for ACM tables; it is ignored (or checked) otherwise.
pub fn apply_plan(
    table: &BettiTable,
    plan: &GenerizationPlan,
    c: Option<i64>,
) -> Result<Generization> {
    let c = source_c(table, c)?;
    let mut current = table.clone();
    for (&degree, &times) in &plan.q {
        for _ in 0..times {
            current = apply_qi(&current, degree)?;
        }
    }
    let table = apply_pq(&current, plan.p1, plan.p2)?;
    Ok(Generization { table, c })
}

fn source_c(table: &BettiTable, c: Option<i64>) -> Result<Option<i64>> {
    match rao_profile(table)? {
        RaoForm::DiameterOne(p) => match c {
            Some(given) if given != p.c => Err(Error::Malformed(format!(
                "c = {given} given but the table has c = {}",
                p.c
            ))),
            _ => Ok(Some(p.c)),
        },
        RaoForm::Acm => Ok(c),
    }
}

/// Upper semi-continuity of `β₁,v, β₂,v` for `v ∉ {c+1, c+2, c+3}` and of
/// `β₃,c+4` from `before` to its generization `after`.
pub fn semicontinuity_check(before: &BettiTable, after: &BettiTable, c: i64) -> bool {
    let window = (c + 1)..=(c + 3);
    let degrees = |j: usize| {
        let m = if j == 1 { after.beta1() } else { after.beta2() };
        m.iter().map(|(d, _)| d).collect::<Vec<_>>()
    };
    for j in [1, 2] {
        for v in degrees(j) {
            if !window.contains(&v) && after.beta(j, v) > before.beta(j, v) {
                return false;
            }
        }
    }
    after.beta(3, c + 4) <= before.beta(3, c + 4)
}

/// Whether the table-level plan projects onto the tuple-level reduction by
/// `p1·P1 + p2·P2 + q(c)·Qc + q(c+4)·Qc4`.
pub fn tuple_consistency(
    table: &BettiTable,
    plan: &GenerizationPlan,
    c: Option<i64>,
) -> Result<bool> {
    let out = apply_plan(table, plan, c)?;
    let c = out.c.ok_or(Error::AcmNeedsC)?;
    let before = five_tuple_at(table, c);
    let after = five_tuple_at(&out.table, c);
    let moves = [
        (ReductionStep::P1, plan.p1),
        (ReductionStep::P2, plan.p2),
        (ReductionStep::Qc, plan.q.get(&c).copied().unwrap_or(0)),
        (
            ReductionStep::Qc4,
            plan.q.get(&(c + 4)).copied().unwrap_or(0),
        ),
    ];
    let mut expected = Some(before);
    for (step, times) in moves {
        let v = step.vector().map(|x| x * times);
        expected = expected.and_then(|t| t.checked_sub(v));
    }
    Ok(expected == Some(after))
}
