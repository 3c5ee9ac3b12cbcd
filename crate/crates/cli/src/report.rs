//! JSON reports. Everything goes through `serde_json::Value`, whose maps are
//! ordered, so output has sorted keys.

use anyhow::Result;
use buchsbaum::{
    classify_singular_locus, component_report, count_components, degree_genus, five_tuple,
    has_unique_minimal, is_minimal, is_obstructed, link_numerics, link_table, rao_profile,
    satisfies_pluss, semicontinuity_check, tuple_consistency, BettiTable, CiType, CurveNumerics,
    DiameterOneProfile, FiveTuple, GenerizationPlan, RaoForm, SpecializationLattice,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub fn canonical<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}

/// Exact counts; beyond `u64` they are written as decimal strings.
fn count(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn tuple_section(t: FiveTuple) -> Value {
    let n = count_components(t);
    let singular = classify_singular_locus(t).ok();
    json!({
        "five_tuple": t,
        "obstructed": is_obstructed(t),
        "minimal": is_minimal(t),
        "unique_component": has_unique_minimal(t),
        "components": {
            "buchsbaum": count(n.buchsbaum),
            "acm": count(n.acm),
            "total": count(n.total()),
            "reports": component_report(t),
        },
        "singular_locus": singular,
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

pub fn analyze_tuple(t: FiveTuple) -> Value {
    merge(
        json!({
            "input": { "tuple": t },
            "rao": Value::Null,
            "pluss": Value::Null,
            "numerics": Value::Null,
        }),
        tuple_section(t),
    )
}

pub fn analyze_table(table: &BettiTable, c: Option<i64>) -> Result<Value> {
    let rao = rao_profile(table)?;
    let t = five_tuple(table, c)?;
    let profile = match rao {
        RaoForm::DiameterOne(p) => p,
        RaoForm::Acm => DiameterOneProfile {
            c: c.expect("five_tuple demands c"),
            r: 0,
        },
    };
    let numerics = CurveNumerics::new(table)?;
    let mut near = Map::new();
    for v in profile.c - 1..=profile.c + 5 {
        near.insert(
            v.to_string(),
            json!({
                "gamma": numerics.gamma(v) as i64,
                "rho": numerics.rho(v) as i64,
                "sigma": numerics.sigma(v) as i64,
            }),
        );
    }
    Ok(merge(
        json!({
            "input": { "table": table, "c": c },
            "rao": rao,
            "pluss": satisfies_pluss(table, profile),
            "numerics": {
                "degree": numerics.degree,
                "genus": numerics.genus,
                "near_c": near,
            },
        }),
        tuple_section(t),
    ))
}

pub fn generize(table: &BettiTable, plan: &GenerizationPlan, c: Option<i64>) -> Result<Value> {
    let out = buchsbaum::apply_plan(table, plan, c)?;
    let (semicontinuity, consistency, tuple) = match out.c {
        Some(c) => (
            Some(semicontinuity_check(table, &out.table, c)),
            Some(tuple_consistency(table, plan, Some(c))?),
            Some(buchsbaum::five_tuple_at(&out.table, c)),
        ),
        None => (None, None, None),
    };
    Ok(json!({
        "input": { "table": table, "c": c },
        "plan": plan,
        "table": out.table,
        "c": out.c,
        "five_tuple": tuple,
        "degree_genus": degree_genus(&out.table)?,
        "semicontinuity_check": semicontinuity,
        "tuple_consistency": consistency,
    }))
}

pub fn link(table: &BettiTable, ci: CiType) -> Result<Value> {
    let linked = link_table(table, ci)?;
    let (d, g) = degree_genus(table)?;
    let (d2, g2) = link_numerics(d, g, ci)?;
    debug_assert_eq!(degree_genus(&linked.table)?, (d2, g2));
    Ok(json!({
        "input": { "table": table, "ci": ci },
        "table": linked.table,
        "c": linked.profile.c,
        "r": linked.profile.r,
        "five_tuple": buchsbaum::five_tuple_at(&linked.table, linked.profile.c),
        "degree": d2,
        "genus": g2,
        "ci_cancellations": linked.ci_cancellations,
        "koszul_cancellations": linked.koszul_cancellations,
        "minimal_certified": linked.minimal_certified,
    }))
}

pub fn lattice_summary(lattice: &SpecializationLattice) -> Value {
    json!({
        "nodes": lattice.nodes.len(),
        "edges": lattice.edges.len(),
        "minimal": lattice.minimal_tuples().len(),
        "minimal_tuples": lattice.minimal_tuples(),
    })
}
