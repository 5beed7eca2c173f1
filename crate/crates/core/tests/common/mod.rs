//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use knotinv::knot_algebra::{Atom, KnotExpression};
use knotinv::pl::{int, PLFunction, Rational};
use knotinv::semigroup::{phi_of_set, IntSet, PhiSequence};

/// Membership table of the monoid generated by `gens` on `[0, limit]`.
pub fn naive_members(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut bits = vec![false; limit as usize + 1];
    bits[0] = true;
    for n in 1..=limit as usize {
        bits[n] = gens.iter().any(|&g| g as usize <= n && bits[n - g as usize]);
    }
    bits
}

/// Gap counts of a membership table whose last entry is a member.
pub fn naive_phi(bits: &[bool]) -> Vec<i64> {
    let mut counts = vec![0i64; bits.len() + 1];
    let mut run = 0usize;
    let mut seen_member = false;
    for &b in bits {
        if b {
            if seen_member && run > 0 {
                counts[run] += 1;
            }
            seen_member = true;
            run = 0;
        } else {
            run += 1;
        }
    }
    counts.remove(0);
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

pub fn torus_bits(p: i64, q: i64) -> Vec<bool> {
    naive_members(&[p, q], (p - 1) * (q - 1) + 1)
}

pub fn naive_phi_torus(p: i64, q: i64) -> Vec<i64> {
    naive_phi(&torus_bits(p, q))
}

pub fn phi_vec(s: &PhiSequence) -> Vec<i64> {
    s.to_vec(s.support_max())
}

/// `max_{0 <= m <= 2g} ( -2 #(S ∩ [0, m)) - t(g - m) )`, with every integer
/// `m` in range as a candidate.
pub fn upsilon_oracle(bits: &[bool], g: i64, t: &Rational) -> Rational {
    let mut best: Option<Rational> = None;
    let mut below = 0i64;
    for m in 0..=2 * g {
        let v = int(-2 * below) - t * int(g - m);
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
        if bits.get(m as usize).copied().unwrap_or(true) {
            below += 1;
        }
    }
    best.unwrap_or_else(|| int(0))
}

/// Sample points: every breakpoint of `f`, the midpoints between them, and a
/// uniform grid with the given denominator.
pub fn sample_points(f: &PLFunction, grid: i64) -> Vec<Rational> {
    let mut ts: BTreeSet<Rational> = (0..=2 * grid).map(|i| Rational::new(i.into(), grid.into())).collect();
    let pts = f.points();
    for w in pts.windows(2) {
        ts.insert(w[0].0.clone());
        ts.insert((&w[0].0 + &w[1].0) / int(2));
    }
    ts.into_iter().collect()
}

pub fn coprime_pairs(pmax: i64, qmax: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=pmax).flat_map(move |p| (p + 1..=qmax).filter(move |q| q.gcd(&p) == 1).map(move |q| (p, q)))
}

/// Admissible `(p, r, k)` for the two families: coprime and `2 <= r <= p-2`.
pub fn family_triples(pmax: i64, kmax: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (4..=pmax).flat_map(move |p| {
        (2..=p - 2)
            .filter(move |r| r.gcd(&p) == 1)
            .flat_map(move |r| (1..=kmax).map(move |k| (p, r, k)))
    })
}

/// Case count with failure persistence off, since the tests live outside `src`.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(cases) }
}

pub fn int_set() -> impl Strategy<Value = IntSet> {
    (
        proptest::option::of(-60i64..-25),
        proptest::collection::btree_set(-24i64..24, 0..20),
        proptest::option::of(25i64..60),
    )
        .prop_map(|(lo, members, hi)| IntSet::new(lo, members, hi))
}

/// Gap counts of `a` by scanning integers between its extreme anchors.
pub fn naive_phi_of_set(a: &IntSet) -> Vec<i64> {
    let ex = a.explicit();
    let lo = a.lower_tail().or_else(|| ex.first().copied());
    let hi = a.upper_tail().or_else(|| ex.last().copied());
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo <= hi => naive_phi(&(lo..=hi).map(|n| a.contains(n)).collect::<Vec<_>>()),
        _ => Vec::new(),
    }
}

pub fn check_phi_set_properties(a: &IntSet, b: i64) -> Result<(), TestCaseError> {
    let phi = phi_of_set(a);
    prop_assert_eq!(phi_vec(&phi), naive_phi_of_set(a));
    prop_assert_eq!(&phi_of_set(&a.translate(b)), &phi);
    prop_assert_eq!(&phi_of_set(&a.reflect(b)), &phi);
    let mut cuts: Vec<i64> = a.explicit().to_vec();
    cuts.extend(a.lower_tail().map(|x| x - 3));
    cuts.extend(a.upper_tail().map(|x| x + 3));
    for m in cuts {
        let split = phi_of_set(&a.restrict(None, Some(m))) + phi_of_set(&a.restrict(Some(m), None));
        prop_assert_eq!(&split, &phi, "split at {}", m);
    }
    Ok(())
}

pub fn atom() -> impl Strategy<Value = Atom> {
    let torus = (2i64..10, 3i64..30)
        .prop_filter("coprime, p < q", |&(p, q)| p < q && p.gcd(&q) == 1)
        .prop_map(|(p, q)| Atom::torus(p, q).unwrap().unwrap());
    let cable = (2i64..5, 2i64..12)
        .prop_filter("coprime cable of the trefoil", |&(a, b)| b >= a && a.gcd(&b) == 1)
        .prop_map(|(a, b)| Atom::cable(2, 3, a, b).unwrap().unwrap());
    prop_oneof![4 => torus, 1 => cable]
}

pub fn expression() -> impl Strategy<Value = KnotExpression> {
    proptest::collection::vec((atom(), -3i64..=3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(KnotExpression::unknot(), |mut e, (a, c)| {
            e.add_term(a, c);
            e
        })
    })
}

/// Renders `e` with irregular spacing, `+` separators and the sign placed
/// after the coefficient, all of which the parser accepts.
pub fn noisy_rendering(e: &KnotExpression, seed: u64) -> String {
    if e.is_unknot() {
        return " 0 ".into();
    }
    let parts: Vec<String> = e
        .terms()
        .enumerate()
        .map(|(i, (a, c))| {
            let flip = (seed >> i) & 1 == 1;
            match (c, flip) {
                (1, _) => format!(" {a}"),
                (-1, _) => format!("- {a}"),
                (c, true) if c < 0 => format!("{} * -{a}", -c),
                (c, _) => format!("{c}*{a}"),
            }
        })
        .collect();
    let sep = if seed.is_multiple_of(2) { " + " } else { "#" };
    parts.join(sep)
}
