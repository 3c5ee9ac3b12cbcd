//! Betti-level calculus for diameter-one Buchsbaum space curves.
//!
//! A curve is represented by the graded Betti numbers of its ideal. From a
//! table in Rao form the crate reads off the 5-tuple
//! `(β₁,c+4, β₁,c, β₂,c+4, β₂,c, β₃,c+4)`, which determines the irreducible
//! components of the Hilbert scheme through the curve, their number,
//! obstructedness, and the singular locus of each component. Tables can be
//! generized by cancelling ghost terms and Koszul blocks, and linked through
//! complete intersections.
//!
//! ```
//! use buchsbaum::{count_components, FiveTuple};
//!
//! let t: FiveTuple = "3,7,5,5,6".parse().unwrap();
//! let n = count_components(t);
//! assert_eq!((n.buchsbaum, n.acm), (3, 6));
//! ```
//!
//! Only graded ranks are tracked. Whether a table is realized by an actual
//! curve is never decided; counts are formal.

pub mod betti;
pub mod components;
pub mod error;
pub mod generize;
pub mod liaison;
pub mod oracle;
pub mod tuple;

pub use betti::{
    binom, canonicalize, degree_genus, five_tuple, five_tuple_at, hilbert_function, rao_profile,
    BettiTable, CurveNumerics, DiameterOneProfile, GradedModule, RaoForm,
};
pub use components::{
    classify_singular_locus, component_report, satisfies_pluss, specialization_lattice,
    specialization_lattice_with_budget, ComponentKind, ComponentReport, LatticeEdge, LatticeNode,
    SingularCase, SingularLocus, SpecializationLattice, StratumDescriptor, DEFAULT_NODE_BUDGET,
};
pub use error::{Error, Result};
pub use generize::{
    apply_plan, apply_pq, apply_qi, semicontinuity_check, tuple_consistency, Generization,
    GenerizationPlan,
};
pub use liaison::{link_c, link_numerics, link_table, link_tuple, CiType, LinkedTable};
pub use oracle::{sweep, OracleSummary};
pub use tuple::{
    apply_reduction, count_components, enumerate_minimal, has_unique_minimal, is_minimal,
    is_obstructed, ComponentCount, FiveTuple, MinimalTuple, ReductionStep, ReductionWitness,
};
