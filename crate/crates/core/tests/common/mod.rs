#![allow(dead_code)]

use buchsbaum::{BettiTable, GradedModule};
use rand::Rng;

pub fn table(b1: &[(i64, u64)], b2: &[(i64, u64)], b3: &[(i64, u64)]) -> BettiTable {
    BettiTable::from_slices(b1, b2, b3).unwrap()
}

pub fn exe10() -> BettiTable {
    table(&[(4, 3), (2, 1)], &[(5, 4)], &[(6, 1)])
}

pub fn bkm1() -> BettiTable {
    table(
        &[(9, 1), (8, 1), (7, 5)],
        &[(10, 2), (9, 1), (8, 4)],
        &[(9, 1)],
    )
}

pub fn ex22_x() -> BettiTable {
    table(&[(6, 4), (4, 1)], &[(8, 1), (7, 4)], &[(8, 1)])
}

pub fn ex28a() -> BettiTable {
    table(&[(8, 7), (6, 1)], &[(10, 1), (9, 8)], &[(10, 2)])
}

pub fn ghex() -> BettiTable {
    table(&[(5, 1), (4, 4)], &[(7, 1), (5, 4)], &[(6, 1)])
}

pub fn wa_a() -> BettiTable {
    table(
        &[(10, 1), (9, 2), (8, 5)],
        &[(11, 2), (10, 2), (9, 4)],
        &[(10, 1)],
    )
}

pub fn sernesi() -> BettiTable {
    table(&[(5, 4)], &[(8, 1), (6, 2)], &[])
}

pub fn skew_lines() -> BettiTable {
    table(&[(2, 4)], &[(3, 4)], &[(4, 1)])
}

/// Diameter-one tables with their `c`.
pub fn diameter_one_seeds() -> Vec<(BettiTable, i64)> {
    vec![
        (exe10(), 2),
        (bkm1(), 5),
        (ex22_x(), 4),
        (ex28a(), 6),
        (ghex(), 2),
        (wa_a(), 6),
        (skew_lines(), 0),
    ]
}

fn bump(t: &BettiTable, changes: &[(usize, i64, u64)]) -> BettiTable {
    let mut parts = [t.beta1().clone(), t.beta2().clone(), t.beta3().clone()];
    for &(j, degree, k) in changes {
        parts[j - 1].add(degree, k).unwrap();
    }
    let [b1, b2, b3]: [GradedModule; 3] = parts;
    BettiTable::new(b1, b2, b3).unwrap()
}

/// Adds a ghost pair `R(-i)^k` to `β₁` and `β₂`.
pub fn add_ghost(t: &BettiTable, i: i64, k: u64) -> BettiTable {
    bump(t, &[(1, i, k), (2, i, k)])
}

/// Undoes a `P1` generization: one more Rao summand with its Koszul block and
/// the cancelled pair in degree `c + 4`.
pub fn inverse_p1(t: &BettiTable, c: i64) -> BettiTable {
    bump(
        t,
        &[(3, c + 4, 1), (2, c + 4, 1), (2, c + 3, 4), (1, c + 3, 4)],
    )
}

/// Undoes a `P2` generization: one more Rao summand, its full Koszul complex
/// and the generator in degree `c`.
pub fn inverse_p2(t: &BettiTable, c: i64) -> BettiTable {
    bump(
        t,
        &[
            (3, c + 4, 1),
            (1, c, 1),
            (2, c + 3, 4),
            (1, c + 2, 6),
            (2, c + 1, 4),
        ],
    )
}

/// A valid diameter-one table built from a known table or an ACM seed by a
/// few random inverse generizations and ghost pairs.
pub fn random_table<R: Rng>(rng: &mut R) -> (BettiTable, i64) {
    let mut seeds = diameter_one_seeds();
    for c in 0..4 {
        seeds.push((table(&[(3, 4)], &[(4, 3)], &[]), c));
        seeds.push((table(&[(2, 1), (4, 1)], &[(6, 1)], &[]), c + 1));
    }
    let (mut t, c) = seeds[rng.gen_range(0..seeds.len())].clone();
    for _ in 0..rng.gen_range(1..=6) {
        t = match rng.gen_range(0..4) {
            0 | 1 => add_ghost(&t, rng.gen_range(c - 1..=c + 7), rng.gen_range(1..=2)),
            2 => inverse_p1(&t, c),
            _ => inverse_p2(&t, c),
        };
    }
    if t.is_acm() {
        t = inverse_p1(&t, c);
    }
    (t, c)
}
