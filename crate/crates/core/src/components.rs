//! Irreducible components through a curve, generic-curve shape checks, the
//! singular locus of a Buchsbaum component, and the specialization lattice.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, DiameterOneProfile};
use crate::error::{Error, Result};
use crate::tuple::{enumerate_minimal, is_minimal, FiveTuple, ReductionStep, ReductionWitness};

/// Node budget for [`specialization_lattice`].
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Buchsbaum,
    Acm,
}

/// One irreducible component containing a curve, identified by a minimal
/// 5-tuple of its generic member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub minimal_tuple: FiveTuple,
    pub kind: ComponentKind,
    pub witness: ReductionWitness,
    pub generically_smooth: bool,
}

pub fn component_report(t: FiveTuple) -> Vec<ComponentReport> {
    enumerate_minimal(t)
        .into_iter()
        .map(|m| ComponentReport {
            minimal_tuple: m.tuple,
            kind: if m.tuple.r > 0 {
                ComponentKind::Buchsbaum
            } else {
                ComponentKind::Acm
            },
            witness: m.witness,
            generically_smooth: true,
        })
        .collect()
}

/// The shape constraint on Betti tables of generic diameter-one curves:
/// `β₁,c+3 · (β₂,c+3 − 4r) = 0` and `β₁,i · β₂,i = 0` for `i ∉ {c, c+3, c+4}`.
pub fn satisfies_pluss(table: &BettiTable, profile: DiameterOneProfile) -> bool {
    let c = profile.c;
    let koszul = 4 * profile.r;
    let first = table.beta(1, c + 3) == 0 || table.beta(2, c + 3) == koszul;
    first
        && table
            .beta1()
            .iter()
            .filter(|&(i, _)| i != c && i != c + 3 && i != c + 4)
            .all(|(i, _)| table.beta(2, i) == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SingularCase {
    I,
    Ii,
    Iii,
    Iv,
    V,
}

impl fmt::Display for SingularCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingularCase::I => "i",
            SingularCase::Ii => "ii",
            SingularCase::Iii => "iii",
            SingularCase::Iv => "iv",
            SingularCase::V => "v",
        })
    }
}

/// Betti stratum `V(base + Σ offsets)`, given formally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDescriptor {
    pub base: FiveTuple,
    pub offsets: Vec<ReductionStep>,
    pub label: String,
}

impl StratumDescriptor {
    fn new(base: FiveTuple, offsets: &[ReductionStep]) -> Self {
        let label = offsets
            .iter()
            .map(|s| match s {
                ReductionStep::P1 => "p1",
                ReductionStep::P2 => "p2",
                ReductionStep::Qc => "q_c",
                ReductionStep::Qc4 => "q_c+4",
            })
            .collect::<Vec<_>>()
            .join("+");
        Self {
            base,
            offsets: offsets.to_vec(),
            label,
        }
    }

    /// `base + Σ offsets`.
    pub fn tuple(&self) -> FiveTuple {
        self.offsets
            .iter()
            .try_fold(self.base, |t, s| t.checked_add(s.vector()))
            .expect("stratum offsets overflow")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularLocus {
    pub case: SingularCase,
    pub strata: Vec<StratumDescriptor>,
}

/// Strata making up the singular locus of the Buchsbaum component with
/// minimal tuple `t`. Emptiness of the strata is not decided.
pub fn classify_singular_locus(t: FiveTuple) -> Result<SingularLocus> {
    use ReductionStep::{Qc, Qc4, P1, P2};
    if !is_minimal(t) {
        return Err(Error::NotMinimal(t));
    }
    let pos = |x: u64| x > 0;
    let FiveTuple { a1, a2, b1, b2, r } = t;
    let case = if (pos(a1) && a2 == 0 && b1 == 0 && pos(b2))
        || (a1 == 0 && pos(a2) && pos(b1) && b2 == 0 && r == 0)
    {
        SingularCase::I
    } else if (a1 == 0 && a2 == 0 && b1 == 0 && pos(b2))
        || (a1 == 0 && a2 == 0 && pos(b1) && r == 0)
    {
        SingularCase::Ii
    } else if (pos(a1) && a2 == 0 && b1 == 0 && b2 == 0)
        || (pos(a2) && b1 == 0 && b2 == 0 && r == 0)
    {
        SingularCase::Iii
    } else if a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0 && pos(r) {
        SingularCase::Iv
    } else {
        assert_eq!(
            t,
            FiveTuple::ZERO,
            "minimal tuple {t} matches no singular-locus pattern"
        );
        SingularCase::V
    };

    let offsets: Vec<&[ReductionStep]> = match case {
        SingularCase::I => vec![&[P1], &[P2]],
        SingularCase::Ii => vec![&[P2]],
        SingularCase::Iii => vec![&[P1]],
        SingularCase::Iv => vec![&[P1, P2]],
        SingularCase::V => vec![&[P1, P2], &[P1, Qc], &[P1, Qc4], &[P2, Qc], &[P2, Qc4]],
    };
    let mut strata: Vec<StratumDescriptor> = offsets
        .into_iter()
        .map(|o| StratumDescriptor::new(t, o))
        .collect();
    if r > 0 {
        strata.push(StratumDescriptor::new(t, &[Qc]));
        strata.push(StratumDescriptor::new(t, &[Qc4]));
    }
    Ok(SingularLocus { case, strata })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeEdge {
    pub from: usize,
    pub to: usize,
    pub step: ReductionStep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeNode {
    pub id: usize,
    pub tuple: FiveTuple,
    pub minimal: bool,
}

/// Every tuple reachable from a root by the four reductions, in
/// breadth-first discovery order (steps tried as `P1, P2, Qc, Qc4`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationLattice {
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<LatticeEdge>,
}

pub fn specialization_lattice(t: FiveTuple) -> Result<SpecializationLattice> {
    specialization_lattice_with_budget(t, DEFAULT_NODE_BUDGET)
}

pub fn specialization_lattice_with_budget(
    t: FiveTuple,
    budget: usize,
) -> Result<SpecializationLattice> {
    let mut index: HashMap<FiveTuple, usize> = HashMap::new();
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();

    let mut visit = |t: FiveTuple,
                     nodes: &mut Vec<LatticeNode>,
                     queue: &mut VecDeque<usize>|
     -> Result<usize> {
        if let Some(&id) = index.get(&t) {
            return Ok(id);
        }
        if nodes.len() >= budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let id = nodes.len();
        index.insert(t, id);
        nodes.push(LatticeNode {
            id,
            tuple: t,
            minimal: is_minimal(t),
        });
        queue.push_back(id);
        Ok(id)
    };

    visit(t, &mut nodes, &mut queue)?;
    while let Some(from) = queue.pop_front() {
        let here = nodes[from].tuple;
        for step in here.applicable_steps() {
            let next = here.checked_sub(step.vector()).expect("applicable step");
            let to = visit(next, &mut nodes, &mut queue)?;
            edges.push(LatticeEdge { from, to, step });
        }
    }
    Ok(SpecializationLattice { nodes, edges })
}

impl SpecializationLattice {
    pub fn minimal_tuples(&self) -> BTreeSet<FiveTuple> {
        self.nodes
            .iter()
            .filter(|n| n.minimal)
            .map(|n| n.tuple)
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph specialization {\n");
        for n in &self.nodes {
            let extra = if n.minimal { ", peripheries=2" } else { "" };
            let _ = writeln!(out, "  n{} [label=\"{}\"{}];", n.id, n.tuple, extra);
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                e.from,
                e.to,
                e.step.label()
            );
        }
        out.push_str("}\n");
        out
    }
}
