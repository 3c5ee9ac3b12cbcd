//! Linkage by complete intersections: the effect on `c`, degree, genus, the
//! 5-tuple, and the full Betti table of a diameter-one curve.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::betti::{
    degree_genus, hilbert_function, rao_profile, BettiTable, DiameterOneProfile, GradedModule,
};
use crate::error::{Error, Result};
use crate::tuple::FiveTuple;

/// Complete intersection of two surfaces of degrees `f` and `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CiType {
    pub f: i64,
    pub g: i64,
}

impl CiType {
    pub fn new(f: i64, g: i64) -> Result<Self> {
        if f < 1 || g < 1 {
            return Err(Error::NoSuchCi(format!(
                "surface degrees must be positive, got ({f},{g})"
            )));
        }
        Ok(Self { f, g })
    }

    pub fn sum(self) -> i64 {
        self.f + self.g
    }
}

impl fmt::Display for CiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.f, self.g)
    }
}

impl FromStr for CiType {
    type Err = Error;

    /// Parses `"f,g"`.
    fn from_str(s: &str) -> Result<Self> {
        let (f, g) = s
            .split_once(',')
            .ok_or_else(|| Error::Malformed(format!("expected \"f,g\", got {s:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Malformed(format!("bad surface degree {x:?}")))
        };
        Self::new(parse(f)?, parse(g)?)
    }
}

/// `c` of the linked curve: `f + g − 4 − c`.
pub fn link_c(c: i64, ci: CiType) -> i64 {
    ci.sum() - 4 - c
}

/// Degree and genus of the linked curve: `d' = fg − d` and
/// `g' = g + (f+g−4)(d'−d)/2`.
pub fn link_numerics(degree: i64, genus: i64, ci: CiType) -> Result<(i64, i64)> {
    let fg = ci.f.checked_mul(ci.g).ok_or(Error::Overflow)?;
    if fg < degree {
        return Err(Error::NoSuchCi(format!(
            "a curve of degree {degree} does not lie on a complete intersection of degree {fg}"
        )));
    }
    let linked = fg - degree;
    // fg odd forces f + g even, so the product is always even.
    let twice = (ci.sum() - 4)
        .checked_mul(linked - degree)
        .ok_or(Error::Overflow)?;
    debug_assert_eq!(twice % 2, 0);
    Ok((linked, genus + twice / 2))
}

/// Linkage reverses the first four entries and keeps `r`.
pub fn link_tuple(t: FiveTuple) -> FiveTuple {
    FiveTuple::new(t.b2, t.b1, t.a2, t.a1, t.r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedTable {
    pub table: BettiTable,
    pub profile: DiameterOneProfile,
    /// Copies of `R(-f)`, `R(-g)` that split off because the surfaces are
    /// minimal generators of the source ideal.
    pub ci_cancellations: u64,
    /// Copies cancelled in degree `c(D)+2` between the dual Koszul block and
    /// the dual of the source generators of degree `c+2`, assuming the
    /// connecting map has maximal rank.
    pub koszul_cancellations: u64,
    /// `true` when no cancellation rested on the maximal-rank assumption.
    pub minimal_certified: bool,
}

/// Betti table of the curve linked to `table` by a general complete
/// intersection of type `ci`, from the dual mapping cone
///
/// `0 → L₀^∨ → L₁^∨ ⊕ F₁^∨ → L₂^∨ ⊕ F₂^∨ ⊕ R(-f) ⊕ R(-g) → I(D) → 0`
///
/// (all duals twisted by `-f-g`), where `L₀ → L₁ → L₂` is the Koszul part
/// `R(-c)^r → R(-c-1)^{4r} → R(-c-2)^{6r}` and `F₂` excludes the `4r` Koszul
/// summands in degree `c+3`.
///
/// Two kinds of redundant pairs are cancelled: `R(-f)`, `R(-g)` against the
/// duals of source generators of degrees `g`, `f`; and, in degree `c(D)+2`,
/// `L₂^∨` against the duals of source generators of degree `c+2`. The
/// remaining coincidences (degree `c(D)+4` against `L₀^∨`, degree `c(D)+3`
/// against `L₁^∨`, duals against duals) come from zero components of the
/// mapping cone differential and are genuine ghost terms.
pub fn link_table(table: &BettiTable, ci: CiType) -> Result<LinkedTable> {
    let profile = rao_profile(table)?.profile().ok_or_else(|| {
        Error::NoSuchCi("linking an ACM table needs a diameter-one profile".into())
    })?;
    for e in [ci.f, ci.g] {
        if hilbert_function(table, e) <= 0 {
            return Err(Error::NoSuchCi(format!(
                "the ideal has no forms of degree {e}"
            )));
        }
    }
    let (degree, _) = degree_genus(table)?;
    if degree >= ci.f * ci.g {
        return Err(Error::NoSuchCi(format!(
            "degree {degree} leaves nothing to link inside a complete intersection of type ({ci})"
        )));
    }

    let (c, r) = (profile.c, profile.r);
    let s = ci.sum();
    let koszul = |mult: u64, degree: i64| -> Result<GradedModule> {
        let mut m = GradedModule::new();
        m.add(degree, r.checked_mul(mult).ok_or(Error::Overflow)?)?;
        Ok(m)
    };
    let dual0 = koszul(1, s - c)?;
    let dual1 = koszul(4, s - c - 1)?;
    let mut dual2 = koszul(6, s - c - 2)?;

    let mut f2 = table.beta2().clone();
    f2.remove(c + 3, 4 * r);
    let dual_f2 = f2.reflect(s);
    let mut dual_f1 = table.beta1().reflect(s);

    let mut surfaces = GradedModule::new();
    surfaces.add(ci.f, 1)?;
    surfaces.add(ci.g, 1)?;

    // R(f) ⊕ R(g) against the duals of the surfaces when they are minimal
    // generators; the copy for the degree-e surface sits in degree s - e.
    let mut ci_cancellations = 0;
    let ci_degrees: Vec<(i64, u64)> = surfaces.iter().collect();
    for (e, copies) in ci_degrees {
        let n = copies.min(table.beta1().get(e));
        surfaces.remove(s - e, n);
        dual_f1.remove(s - e, n);
        ci_cancellations += n;
    }

    let k = s - c - 2;
    let koszul_cancellations = dual2.get(k).min(dual_f1.get(k));
    dual2.remove(k, koszul_cancellations);
    dual_f1.remove(k, koszul_cancellations);

    let mut beta1 = dual2;
    for (d, m) in dual_f2.iter().chain(surfaces.iter()) {
        beta1.add(d, m)?;
    }
    let mut beta2 = dual1;
    for (d, m) in dual_f1.iter() {
        beta2.add(d, m)?;
    }
    let linked = BettiTable::new(beta1, beta2, dual0)?;
    let profile = DiameterOneProfile {
        c: link_c(c, ci),
        r,
    };
    debug_assert_eq!(
        rao_profile(&linked).ok().and_then(|p| p.profile()),
        Some(profile)
    );

    Ok(LinkedTable {
        table: linked,
        profile,
        ci_cancellations,
        koszul_cancellations,
        minimal_certified: koszul_cancellations == 0,
    })
}
