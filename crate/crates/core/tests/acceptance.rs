mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use buchsbaum::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn t(a: [u64; 5]) -> FiveTuple {
    a.into()
}

fn sweep_tuples(max: u64) -> impl Iterator<Item = FiveTuple> {
    oracle::tuples_up_to(max)
}

fn c1() -> Outcome {
    let x = t([3, 7, 5, 5, 6]);
    let n = count_components(x);
    let all = enumerate_minimal(x);
    check(
        (n.buchsbaum, n.acm) == (3, 6) && all.len() == 9,
        format!(
            "N_B = {}, N_CM = {}, |minimal| = {}",
            n.buchsbaum,
            n.acm,
            all.len()
        ),
    )
}

fn c2() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for x in sweep_tuples(6) {
        n += 1;
        let k = enumerate_minimal(x).len();
        if count_components(x).total() != k as u128 || has_unique_minimal(x) != (k == 1) {
            bad.push(x);
        }
    }
    check(
        bad.is_empty() && n == 16807,
        format!("{n} tuples, {} mismatches {:?}", bad.len(), bad.first()),
    )
}

fn c3() -> Outcome {
    let cases = [
        ([0, 1, 1, 0, 2], 1),
        ([1, 0, 1, 0, 1], 2),
        ([0, 1, 1, 0, 1], 2),
        ([1, 0, 2, 0, 1], 1),
        ([0, 2, 0, 1, 1], 1),
    ];
    let got: Vec<u128> = cases
        .iter()
        .map(|&(x, _)| count_components(t(x)).total())
        .collect();
    let want: Vec<u128> = cases.iter().map(|&(_, n)| n).collect();
    check(got == want, format!("counts {got:?}"))
}

fn c4() -> Outcome {
    let named = is_obstructed(t([0, 1, 1, 0, 2])) && is_obstructed(t([1, 0, 1, 0, 1]));
    let mut minimal = 0;
    let mut bad = None;
    for x in sweep_tuples(6).filter(|&x| is_minimal(x)) {
        minimal += 1;
        if is_obstructed(x) {
            bad.get_or_insert(x);
        }
    }
    check(
        named && bad.is_none(),
        format!("named examples obstructed: {named}; {minimal} minimal tuples, first obstructed {bad:?}"),
    )
}

fn c5() -> Outcome {
    let out = apply_pq(&common::exe10(), 0, 1);
    let want = common::table(&[(3, 4)], &[(4, 3)], &[]);
    check(out.as_ref() == Ok(&want), format!("{out:?}"))
}

fn c6() -> Outcome {
    let d = link_table(&common::exe10(), CiType::new(4, 4).unwrap());
    let want_d = common::table(&[(4, 5)], &[(6, 1), (5, 4)], &[(6, 1)]);
    let table_ok = d.as_ref().map(|l| &l.table) == Ok(&want_d);
    let wa = link_numerics(42, 177, CiType::new(8, 8).unwrap());
    let tuple = link_tuple(t([1, 0, 2, 0, 1]));
    let chain = link_numerics(2, -1, CiType::new(4, 2).unwrap())
        .and_then(|(d, g)| link_numerics(d, g, CiType::new(4, 6).unwrap()));
    check(
        table_ok && wa == Ok((22, 57)) && tuple == t([0, 2, 0, 1, 1]) && chain == Ok((18, 39)),
        format!("I(D) table {table_ok}, WA {wa:?}, tuple {tuple}, chain {chain:?}"),
    )
}

fn applicable_outputs(table: &BettiTable) -> Vec<(String, BettiTable, u64)> {
    let mut out = Vec::new();
    for (p1, p2) in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1)] {
        if let Ok(g) = apply_pq(table, p1, p2) {
            out.push((format!("pq({p1},{p2})"), g, p2));
        }
    }
    let degrees: BTreeSet<i64> = table.beta1().iter().map(|(d, _)| d).collect();
    for i in degrees {
        if let Ok(g) = apply_qi(table, i) {
            out.push((format!("Q{i}"), g, 0));
        }
    }
    out
}

fn random_tables() -> Vec<(BettiTable, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..1000).map(|_| common::random_table(&mut rng)).collect()
}

fn c7() -> Outcome {
    let mut moves = 0;
    for (table, c) in random_tables() {
        let dg = degree_genus(&table).unwrap();
        let lo = table.beta1().min_degree().unwrap() - 3;
        let hi = table.max_degree() + 5;
        for (name, out, p2) in applicable_outputs(&table) {
            moves += 1;
            if degree_genus(&out).ok() != Some(dg) {
                return check(false, format!("{name} changed (d, g) of {table}"));
            }
            for v in lo..=hi {
                let drop = hilbert_function(&table, v) - hilbert_function(&out, v);
                let want = if v == c { p2 as i128 } else { 0 };
                if drop != want {
                    return check(
                        false,
                        format!("{name} on {table}: gamma({v}) dropped by {drop}, expected {want}"),
                    );
                }
            }
        }
    }
    check(
        moves > 1000,
        format!("1000 tables, {moves} moves conserved"),
    )
}

fn c8() -> (Outcome, Outcome) {
    let mut moves = 0;
    let mut first_bad = None;
    let mut tables = random_tables();
    tables.extend(common::diameter_one_seeds());
    for (table, c) in &tables {
        for (name, out, _) in applicable_outputs(table) {
            moves += 1;
            if !semicontinuity_check(table, &out, *c) {
                first_bad.get_or_insert(format!("{name} on {table}"));
            }
        }
    }
    let suite = check(
        first_bad.is_none(),
        format!("{moves} generizations checked, first violation {first_bad:?}"),
    );
    let control = semicontinuity_check(&common::ex22_x(), &common::sernesi(), 4);
    let negative = check(
        !control,
        format!("semicontinuity_check(X, Sernesi table, c = 4) = {control}, expected false"),
    );
    (suite, negative)
}

fn c9() -> Outcome {
    let mut n = 0;
    for x in sweep_tuples(4) {
        n += 1;
        let want: BTreeSet<FiveTuple> = enumerate_minimal(x).into_iter().map(|m| m.tuple).collect();
        match specialization_lattice(x) {
            Ok(l) if l.minimal_tuples() == want => {}
            other => {
                return check(
                    false,
                    format!(
                        "disagreement at {x}: {:?}",
                        other.map(|l| l.minimal_tuples())
                    ),
                )
            }
        }
    }
    check(n == 3125, format!("{n} tuples agree"))
}

fn c10() -> Outcome {
    let v = classify_singular_locus(FiveTuple::ZERO).unwrap();
    let labels: Vec<&str> = v.strata.iter().map(|s| s.label.as_str()).collect();
    let v_ok = v.case == SingularCase::V
        && labels == ["p1+p2", "p1+q_c", "p1+q_c+4", "p2+q_c", "p2+q_c+4"];
    let iv_ok = classify_singular_locus(t([0, 0, 0, 0, 2])).map(|l| l.case) == Ok(SingularCase::Iv);
    let mut minimal = 0;
    let mut uncovered = None;
    for x in sweep_tuples(6).filter(|&x| is_minimal(x)) {
        minimal += 1;
        let covered = std::panic::catch_unwind(|| classify_singular_locus(x)).map(|r| r.is_ok());
        if !matches!(covered, Ok(true)) {
            uncovered.get_or_insert(x);
        }
    }
    check(
        v_ok && iv_ok && uncovered.is_none(),
        format!("case v {v_ok}, case iv {iv_ok}, {minimal} minimal tuples classified, first uncovered {uncovered:?}"),
    )
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let bound = |limit_ms: u64| Some(Duration::from_millis(limit_ms));
    let mut rows: Vec<(&str, &str, Outcome, Duration, Option<Duration>)> = Vec::new();

    let (o, d) = timed(c1);
    rows.push(("1", "component count worked example", o, d, bound(1)));
    let (o, d) = timed(c2);
    rows.push((
        "2",
        "formula vs enumeration, entries <= 6",
        o,
        d,
        bound(10_000),
    ));
    let (o, d) = timed(c3);
    rows.push(("3", "component counts of the worked examples", o, d, None));
    let (o, d) = timed(c4);
    rows.push(("4", "obstructedness", o, d, None));
    let (o, d) = timed(c5);
    rows.push(("5", "P2 generization golden table", o, d, None));
    let (o, d) = timed(c6);
    rows.push(("6", "linkage golden tests", o, d, None));
    let (o, d) = timed(c7);
    rows.push(("7", "conservation under generization", o, d, bound(5_000)));
    let ((suite, negative), d) = timed(c8);
    rows.push((
        "8a",
        "semicontinuity of implemented generizations",
        suite,
        d,
        None,
    ));
    rows.push((
        "8b",
        "Sernesi pair negative control",
        negative,
        Duration::ZERO,
        None,
    ));
    let (o, d) = timed(c9);
    rows.push((
        "9",
        "lattice minimal nodes vs enumeration, entries <= 4",
        o,
        d,
        bound(10_000),
    ));
    let (o, d) = timed(c10);
    rows.push(("10", "singular-locus classification", o, d, None));

    let mut failed = 0;
    for (id, name, outcome, elapsed, limit) in &rows {
        let in_time = limit.is_none_or(|l| *elapsed < l);
        let pass = outcome.ok && in_time;
        if !pass {
            failed += 1;
        }
        let budget = match limit {
            Some(l) => format!(
                "{:.3} ms of {} ms",
                elapsed.as_secs_f64() * 1e3,
                l.as_millis()
            ),
            None => format!("{:.3} ms", elapsed.as_secs_f64() * 1e3),
        };
        println!(
            "criterion {id:>3} {} {name} [{budget}] {}",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        rows.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
