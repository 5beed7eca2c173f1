mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use common::*;
use knotinv::epsilon_order::{compare_brackets, split_prefix, BracketClass, CompareResult};
use knotinv::knot_algebra::KnotExpression;
use knotinv::phi::{basis_decompose, basis_reconstruct};
use knotinv::semigroup::{torus_semigroup, NumericalSemigroup, PhiSequence};
use knotinv::staircase::{semigroup_from_staircase, staircase_from_semigroup, Staircase};

fn palindrome(half: Vec<i64>) -> Vec<i64> {
    let mut b = half.clone();
    b.extend(half.into_iter().rev());
    b
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn phi_of_set_is_additive_and_rigid(a in int_set(), b in -50i64..=50) {
        check_phi_set_properties(&a, b)?;
    }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn parser_round_trip(e in expression(), seed in any::<u64>()) {
        let printed = e.to_string();
        prop_assert_eq!(printed.parse::<KnotExpression>().unwrap(), e.clone());
        let noisy = noisy_rendering(&e, seed);
        prop_assert_eq!(noisy.parse::<KnotExpression>().unwrap(), e);
    }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn upsilon_is_symmetric(e in expression()) {
        let f = e.upsilon();
        prop_assert_eq!(f.reflect(), f);
    }

    #[test]
    fn invariants_are_homomorphisms(a in expression(), b in expression()) {
        let sum = &a + &b;
        prop_assert_eq!(sum.phi(), a.phi() + b.phi());
        prop_assert_eq!(sum.upsilon(), &a.upsilon() + &b.upsilon());
        prop_assert_eq!((-&a).phi(), -a.phi());
        prop_assert_eq!((-&a).upsilon(), -&a.upsilon());
        prop_assert!((&a - &a).is_unknot());
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn basis_round_trip(v in proptest::collection::vec(-5i64..=5, 0..15)) {
        let s = PhiSequence::from_slice(&v);
        prop_assert_eq!(basis_reconstruct(&basis_decompose(&s)), s);
    }

    #[test]
    fn staircase_round_trip(half in proptest::collection::vec(1i64..6, 1..6)) {
        let st = Staircase::new(palindrome(half)).unwrap();
        let set = semigroup_from_staircase(&st);
        // Not every staircase is a semigroup; the set still encodes it.
        if let Ok(s) = NumericalSemigroup::from_int_set(&set) {
            prop_assert_eq!(staircase_from_semigroup(&s).unwrap(), st.clone());
        }
        prop_assert_eq!(st.alpha().last().copied(), Some(2 * st.genus()));
    }

    #[test]
    fn bracket_comparison_is_antisymmetric(
        x in proptest::collection::vec(1i64..5, 1..4),
        y in proptest::collection::vec(1i64..5, 1..4),
    ) {
        let (x, y) = (BracketClass::new(palindrome(x)).unwrap(), BracketClass::new(palindrome(y)).unwrap());
        let xy = compare_brackets(&x, &y);
        let yx = compare_brackets(&y, &x);
        prop_assert_eq!(xy, yx.flip());
        prop_assert_eq!(xy == CompareResult::Equal, x == y);
    }

    #[test]
    fn split_prefix_reassembles(
        k in 0usize..4,
        n in 1i64..6,
        core_half in proptest::collection::vec(1i64..6, 0..4),
    ) {
        let core_half: Vec<i64> = core_half.into_iter().map(|x| x.min(n)).collect();
        let mut half = Vec::new();
        for _ in 0..k {
            half.extend([1, n]);
        }
        half.extend(core_half);
        let b = BracketClass::new(palindrome(half)).unwrap();
        let (got_k, core) = split_prefix(&b, n).unwrap();
        prop_assert!(got_k as usize >= k);
        let mut rebuilt = Vec::new();
        for _ in 0..got_k {
            rebuilt.extend([1, n]);
        }
        rebuilt.extend_from_slice(core.steps());
        for _ in 0..got_k {
            rebuilt.extend([n, 1]);
        }
        prop_assert_eq!(rebuilt.as_slice(), b.steps());
    }

    #[test]
    fn torus_semigroup_matches_naive(p in 2i64..20, q in 2i64..60) {
        prop_assume!(num_integer::Integer::gcd(&p, &q) == 1);
        let s = torus_semigroup(p, q).unwrap();
        let bits = torus_bits(p, q);
        for (n, &b) in bits.iter().enumerate() {
            prop_assert_eq!(s.contains(n as i64), b);
        }
        prop_assert_eq!(s.genus(), (p - 1) * (q - 1) / 2);
    }
}

#[test]
fn basis_of_t_8_11() {
    let phi = torus_semigroup(8, 11).map(|s| knotinv::phi::phi_lspace(&s)).unwrap();
    let want = BTreeMap::from([(2, 6), (3, 6), (4, -1), (5, 1), (7, -1), (8, 1)]);
    assert_eq!(basis_decompose(&phi), want);
}
