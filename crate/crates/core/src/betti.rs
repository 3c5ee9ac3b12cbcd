//! Graded free modules, Betti tables of length-3 resolutions of curve ideals,
//! and the numerics (Hilbert function, degree, genus) they determine.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tuple::FiveTuple;

/// `binom(n, k)` with the convention that it vanishes whenever `n < k`,
/// including negative `n`.
pub fn binom(n: i64, k: u32) -> i128 {
    let k = i64::from(k);
    if n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * i128::from(n - j) / i128::from(j + 1);
    }
    acc
}

/// A finitely generated graded free module `⊕ R(-i)^{m_i}`, stored as the map
/// `i ↦ m_i` with only strictly positive multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<i64, i64>", into = "BTreeMap<i64, u64>")]
pub struct GradedModule(BTreeMap<i64, u64>);

impl GradedModule {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a module from `(degree, multiplicity)` pairs. Zero entries are
    /// dropped, repeated degrees are summed, negative multiplicities are rejected.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut map = BTreeMap::new();
        for (degree, mult) in pairs {
            if mult < 0 {
                return Err(Error::Malformed(format!(
                    "negative multiplicity {mult} in degree {degree}"
                )));
            }
            if mult > 0 {
                let slot: &mut u64 = map.entry(degree).or_default();
                *slot = slot.checked_add(mult as u64).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self(map))
    }

    /// Multiplicity of `R(-degree)`; zero when absent.
    pub fn get(&self, degree: i64) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn set(&mut self, degree: i64, mult: u64) {
        if mult == 0 {
            self.0.remove(&degree);
        } else {
            self.0.insert(degree, mult);
        }
    }

    pub fn add(&mut self, degree: i64, mult: u64) -> Result<()> {
        let v = self.get(degree).checked_add(mult).ok_or(Error::Overflow)?;
        self.set(degree, v);
        Ok(())
    }

    /// Removes `mult` copies of `R(-degree)`. Panics if fewer are present;
    /// callers check availability first.
    pub fn remove(&mut self, degree: i64, mult: u64) {
        let have = self.get(degree);
        assert!(
            have >= mult,
            "removing {mult} of R(-{degree}) but only {have} present"
        );
        self.set(degree, have - mult);
    }

    pub fn rank(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&d, &m)| (d, m))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// The module `⊕ R(-(s - i))^{m_i}`, i.e. the dual twisted by `-s`.
    pub fn reflect(&self, s: i64) -> Self {
        Self(self.0.iter().map(|(&d, &m)| (s - d, m)).collect())
    }
}

impl TryFrom<BTreeMap<i64, i64>> for GradedModule {
    type Error = Error;

    fn try_from(raw: BTreeMap<i64, i64>) -> Result<Self> {
        Self::from_pairs(raw)
    }
}

impl From<GradedModule> for BTreeMap<i64, u64> {
    fn from(m: GradedModule) -> Self {
        m.0
    }
}

impl<const N: usize> TryFrom<[(i64, u64); N]> for GradedModule {
    type Error = Error;

    fn try_from(pairs: [(i64, u64); N]) -> Result<Self> {
        let mut m = Self::new();
        for (d, k) in pairs {
            m.add(d, k)?;
        }
        Ok(m)
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        // Highest twist first, the way resolutions are usually written.
        let mut first = true;
        for (d, m) in self.0.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "R(-{d})")?;
            } else {
                write!(f, "R(-{d})^{m}")?;
            }
        }
        Ok(())
    }
}

/// Canonical form of a raw degree → multiplicity map.
pub fn canonicalize<I>(raw: I) -> Result<GradedModule>
where
    I: IntoIterator<Item = (i64, i64)>,
{
    GradedModule::from_pairs(raw)
}

/// Graded ranks of a resolution
/// `0 → F₃ → F₂ → F₁ → I(C) → 0` of a homogeneous curve ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTable")]
pub struct BettiTable {
    beta1: GradedModule,
    beta2: GradedModule,
    beta3: GradedModule,
}

#[derive(Deserialize)]
struct RawTable {
    beta1: GradedModule,
    beta2: GradedModule,
    #[serde(default)]
    beta3: GradedModule,
}

impl TryFrom<RawTable> for BettiTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        Self::new(raw.beta1, raw.beta2, raw.beta3)
    }
}

impl BettiTable {
    /// Checks the alternating rank sum and that `F₃` does not sit below `F₂`.
    pub fn new(beta1: GradedModule, beta2: GradedModule, beta3: GradedModule) -> Result<Self> {
        let sum = i128::from(beta1.rank()) - i128::from(beta2.rank()) + i128::from(beta3.rank());
        if sum != 1 {
            return Err(Error::InvalidResolution(format!(
                "alternating rank sum is {sum}, expected 1"
            )));
        }
        if let Some(lo3) = beta3.min_degree() {
            match beta2.min_degree() {
                Some(lo2) if lo3 >= lo2 => {}
                _ => {
                    return Err(Error::InvalidResolution(format!(
                        "beta3 has a summand in degree {lo3} below every summand of beta2"
                    )))
                }
            }
        }
        Ok(Self {
            beta1,
            beta2,
            beta3,
        })
    }

    /// Shorthand for literal tables, mainly in tests and fixtures.
    pub fn from_slices(b1: &[(i64, u64)], b2: &[(i64, u64)], b3: &[(i64, u64)]) -> Result<Self> {
        let module = |s: &[(i64, u64)]| {
            let mut m = GradedModule::new();
            for &(d, k) in s {
                m.add(d, k)?;
            }
            Ok::<_, Error>(m)
        };
        Self::new(module(b1)?, module(b2)?, module(b3)?)
    }

    pub fn beta1(&self) -> &GradedModule {
        &self.beta1
    }

    pub fn beta2(&self) -> &GradedModule {
        &self.beta2
    }

    pub fn beta3(&self) -> &GradedModule {
        &self.beta3
    }

    /// `β_{j,i}` for `j ∈ {1,2,3}`.
    pub fn beta(&self, j: usize, i: i64) -> u64 {
        match j {
            1 => self.beta1.get(i),
            2 => self.beta2.get(i),
            3 => self.beta3.get(i),
            _ => 0,
        }
    }

    pub(crate) fn into_parts(self) -> (GradedModule, GradedModule, GradedModule) {
        (self.beta1, self.beta2, self.beta3)
    }

    pub fn is_acm(&self) -> bool {
        self.beta3.is_empty()
    }

    pub fn max_degree(&self) -> i64 {
        [&self.beta1, &self.beta2, &self.beta3]
            .iter()
            .filter_map(|m| m.max_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "0 → {} → {} → {} → I → 0",
            self.beta3, self.beta2, self.beta1
        )
    }
}

/// `γ(v) = h⁰(I_C(v))`, by additivity of Hilbert functions along the
/// resolution.
pub fn hilbert_function(table: &BettiTable, v: i64) -> i128 {
    let part = |m: &GradedModule| -> i128 {
        m.iter()
            .map(|(i, k)| i128::from(k) * binom(v - i + 3, 3))
            .sum()
    };
    part(&table.beta1) - part(&table.beta2) + part(&table.beta3)
}

/// Degree and arithmetic genus, read off the Hilbert polynomial
/// `binom(v+3,3) − γ(v) = d·v + 1 − g` past the last twist.
pub fn degree_genus(table: &BettiTable) -> Result<(i64, i64)> {
    let hp = |v: i64| binom(v + 3, 3) - hilbert_function(table, v);
    let v1 = table.max_degree() + 1;
    let (p1, p2, p3) = (hp(v1), hp(v1 + 1), hp(v1 + 2));
    let d = p2 - p1;
    if p3 - p2 != d {
        return Err(Error::InvalidResolution(
            "Hilbert polynomial is not linear; the table does not resolve a curve".into(),
        ));
    }
    let g = 1 - (p1 - d * i128::from(v1));
    let d = i64::try_from(d).map_err(|_| Error::Overflow)?;
    let g = i64::try_from(g).map_err(|_| Error::Overflow)?;
    Ok((d, g))
}

/// A diameter-one Rao module `k(-c)^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiameterOneProfile {
    pub c: i64,
    pub r: u64,
}

/// Outcome of reading the Rao form off a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RaoForm {
    Acm,
    DiameterOne(DiameterOneProfile),
}

impl RaoForm {
    pub fn profile(&self) -> Option<DiameterOneProfile> {
        match *self {
            RaoForm::Acm => None,
            RaoForm::DiameterOne(p) => Some(p),
        }
    }
}

/// Reads `(c, r)` from `F₃ = R(-c-4)^r`, checking that `F₂` contains the
/// Koszul block `R(-c-3)^{4r}`.
pub fn rao_profile(table: &BettiTable) -> Result<RaoForm> {
    let mut support = table.beta3.iter();
    let Some((e, r)) = support.next() else {
        return Ok(RaoForm::Acm);
    };
    if support.next().is_some() {
        return Err(Error::NotDiameterOne(format!(
            "beta3 = {} is supported in more than one degree",
            table.beta3
        )));
    }
    let need = r.checked_mul(4).ok_or(Error::Overflow)?;
    let have = table.beta2.get(e - 1);
    if have < need {
        return Err(Error::NotDiameterOne(format!(
            "beta2 in degree {} is {have}, below the Koszul block 4r = {need}",
            e - 1
        )));
    }
    Ok(RaoForm::DiameterOne(DiameterOneProfile { c: e - 4, r }))
}

/// Reads `(β₁,c+4, β₁,c, β₂,c+4, β₂,c, β₃,c+4)` at a given `c`, with no
/// validation.
pub fn five_tuple_at(table: &BettiTable, c: i64) -> FiveTuple {
    FiveTuple::new(
        table.beta1.get(c + 4),
        table.beta1.get(c),
        table.beta2.get(c + 4),
        table.beta2.get(c),
        table.beta3.get(c + 4),
    )
}

/// The 5-tuple of a diameter-one table, or of an ACM table at an explicit `c`.
///
/// An explicit `c` that disagrees with the table's Rao profile is rejected.
pub fn five_tuple(table: &BettiTable, c: Option<i64>) -> Result<FiveTuple> {
    match (rao_profile(table)?, c) {
        (RaoForm::Acm, None) => Err(Error::AcmNeedsC),
        (RaoForm::Acm, Some(c)) => Ok(five_tuple_at(table, c)),
        (RaoForm::DiameterOne(p), Some(c)) if c != p.c => Err(Error::Malformed(format!(
            "c = {c} given but the table has c = {}",
            p.c
        ))),
        (RaoForm::DiameterOne(p), _) => Ok(five_tuple_at(table, p.c)),
    }
}

/// Postulation, deficiency and specialization of a curve with the given table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveNumerics {
    pub degree: i64,
    pub genus: i64,
    table: BettiTable,
    rao: RaoForm,
}

impl CurveNumerics {
    pub fn new(table: &BettiTable) -> Result<Self> {
        let (degree, genus) = degree_genus(table)?;
        let rao = rao_profile(table)?;
        Ok(Self {
            degree,
            genus,
            table: table.clone(),
            rao,
        })
    }

    pub fn rao(&self) -> RaoForm {
        self.rao
    }

    /// `γ(v) = h⁰(I_C(v))`.
    pub fn gamma(&self, v: i64) -> i128 {
        hilbert_function(&self.table, v)
    }

    /// `ρ(v) = h¹(I_C(v))`.
    pub fn rho(&self, v: i64) -> i128 {
        match self.rao {
            RaoForm::DiameterOne(p) if p.c == v => i128::from(p.r),
            _ => 0,
        }
    }

    /// `χ(I_C(v)) = binom(v+3,3) − (d·v + 1 − g)`, valid for `v ≥ −3`.
    pub fn chi(&self, v: i64) -> i128 {
        binom(v + 3, 3) - (i128::from(self.degree) * i128::from(v) + 1 - i128::from(self.genus))
    }

    /// `σ(v) = h¹(O_C(v))`, from `γ + σ − ρ = χ`; valid for `v ≥ −3`.
    pub fn sigma(&self, v: i64) -> i128 {
        self.chi(v) - self.gamma(v) + self.rho(v)
    }
}
