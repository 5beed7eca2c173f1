mod common;

use num_integer::Integer;

use common::*;
use knotinv::knot_algebra::{family_phi, family_upsilon, jk, Atom};
use knotinv::phi::{check_rough, p_minus_two_entries, phi_from_staircase, phi_lspace, verify_recursion_blocks, TorusPhiCache};
use knotinv::pl::{int, rat};
use knotinv::semigroup::{apery, torus_semigroup, verify_block_lemma};
use knotinv::staircase::{semigroup_from_staircase, staircase_from_semigroup};
use knotinv::upsilon::{delta_prime, lambda, upsilon_lspace, xi};

#[test]
fn phi_recursion_matches_gap_count_oracle() {
    let mut cache = TorusPhiCache::new();
    for (p, q) in coprime_pairs(40, 200) {
        assert_eq!(phi_vec(&cache.get(p, q).unwrap()), naive_phi_torus(p, q), "T({p},{q})");
    }
}

#[test]
fn phi_routes_agree_on_cables() {
    for a in 2..6i64 {
        for b in (a..4 * a + 3).filter(|b| b.gcd(&a) == 1) {
            let atom = Atom::cable(2, 3, a, b).unwrap().unwrap();
            let s = atom.semigroup();
            let bits = naive_members(&[2 * a, 3 * a, b], s.conductor() + 1);
            assert_eq!(phi_vec(&phi_lspace(&s)), naive_phi(&bits), "{atom}");
            let st = staircase_from_semigroup(&s).unwrap();
            assert_eq!(phi_from_staircase(&st), phi_lspace(&s), "{atom}");
        }
    }
}

#[test]
fn upsilon_matches_all_integer_minimization() {
    let mut cases: Vec<(String, Vec<bool>, i64, knotinv::pl::PLFunction)> = Vec::new();
    for (p, q) in coprime_pairs(9, 30) {
        let s = torus_semigroup(p, q).unwrap();
        cases.push((format!("T({p},{q})"), torus_bits(p, q), s.genus(), upsilon_lspace(&s)));
    }
    for k in 3..7 {
        let atom = Atom::cable(2, 3, k, 2 * k - 1).unwrap().unwrap();
        let s = atom.semigroup();
        let bits = naive_members(&[2 * k, 3 * k, 2 * k - 1], s.conductor() + 1);
        cases.push((atom.to_string(), bits, s.genus(), upsilon_lspace(&s)));
    }
    for (name, bits, g, f) in cases {
        for t in sample_points(&f, 84) {
            assert_eq!(f.eval(&t), upsilon_oracle(&bits, g, &t), "{name} at t = {t}");
        }
    }
}

#[test]
fn upsilon_shape_facts() {
    for (p, q) in coprime_pairs(20, 60) {
        let f = upsilon_lspace(&torus_semigroup(p, q).unwrap());
        assert_eq!(f.slopes()[0], int(-(p - 1) * (q - 1) / 2), "T({p},{q})");
        assert_eq!(f.eval(&int(0)), int(0));
        assert_eq!(f.reflect(), f);
        assert_eq!(f.first_singularity(), Some(rat(2, p)), "T({p},{q})");
    }
}

#[test]
fn kappa_relations() {
    for (p, q) in coprime_pairs(30, 200) {
        let (k, r) = q.div_rem(&p);
        let u = apery(&torus_semigroup(p, q).unwrap(), p).unwrap();
        let mut sorted = u.kappa.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..p).collect::<Vec<_>>());
        for (w, kap) in u.omega.iter().zip(&u.kappa) {
            assert_eq!(*kap, w - Integer::div_floor(w, &p) * p);
        }
        if r == 0 || k == 0 {
            continue;
        }
        let v = apery(&torus_semigroup(p, r).unwrap(), p).unwrap();
        let w = apery(&torus_semigroup(p, p - r).unwrap(), p).unwrap();
        assert_eq!(u.kappa, v.kappa, "({p},{q})");
        for l in 1..p as usize {
            assert_eq!(w.kappa[l], p - v.kappa[l], "({p},{q}) l={l}");
        }
    }
}

fn floor_step(i: i64, a: i64, p: i64) -> i64 {
    Integer::div_floor(&(i * a), &p) - Integer::div_floor(&((i - 1) * a), &p)
}

#[test]
fn floor_identity() {
    for p in 2..=60i64 {
        for r in (1..p).filter(|r| r.gcd(&p) == 1) {
            for k in 0..=6 {
                let q = k * p + r;
                for i in 2..p {
                    let lhs = floor_step(i, q, p);
                    let rhs = (k + 1) * floor_step(i, r, p)
                        + k * floor_step(i, p - r, p);
                    assert_eq!(lhs, rhs, "p={p} r={r} k={k} i={i}");
                }
            }
        }
    }
}

#[test]
fn block_lemma_sweep() {
    for p in 2..=30i64 {
        for q in (2..=90i64).filter(|q| q.gcd(&p) == 1 && *q != p) {
            let s = torus_semigroup(p, q).unwrap();
            for base in [p, q] {
                assert!(verify_block_lemma(&s, base).unwrap().passed(), "<{p},{q}> base {base}");
            }
        }
    }
}

#[test]
fn recursion_blocks_sweep() {
    for p in 2..=25i64 {
        for r in (1..p).filter(|r| r.gcd(&p) == 1) {
            for k in 1..=4 {
                assert!(verify_recursion_blocks(p, r, k).unwrap(), "p={p} r={r} k={k}");
            }
        }
    }
}

#[test]
fn staircase_round_trip_sweep() {
    for (p, q) in coprime_pairs(30, 61) {
        let s = torus_semigroup(p, q).unwrap();
        let st = staircase_from_semigroup(&s).unwrap();
        assert!(st.steps().iter().eq(st.steps().iter().rev()));
        assert_eq!(semigroup_from_staircase(&st), s.to_int_set());
        assert_eq!(st.genus(), (p - 1) * (q - 1) / 2);
        assert_eq!(*st.alpha().last().unwrap(), 2 * s.genus());
    }
}

#[test]
fn rough_and_p_minus_two() {
    for p in 3..=25i64 {
        for r in (1..p).filter(|r| r.gcd(&p) == 1) {
            for k in 1..=4 {
                assert!(check_rough(p, r, k).unwrap().passed(), "p={p} r={r} k={k}");
                if (2..=p - 2).contains(&r) {
                    assert_eq!(p_minus_two_entries(p, r, k).unwrap(), (0, k));
                }
            }
        }
    }
}

#[test]
fn family_sweeps() {
    for (p, r, k) in family_triples(15, 3) {
        let kp = &family_phi(&[(p, r, k)]).unwrap()[0];
        assert!(kp.upsilon().is_zero(), "phi family {p},{r},{k}");
        assert_eq!(kp.phi().get((p - 2) as usize), -k);

        let ku = &family_upsilon(&[(p, r, k)]).unwrap()[0];
        assert!(ku.phi().is_zero(), "upsilon family {p},{r},{k}");
        let f = ku.upsilon();
        assert!(!f.is_zero());
        let x = xi(&f, p).unwrap();
        assert_eq!(x, int(k));
        assert!(x.is_integer());
        for j in 1..=p {
            assert!(lambda(&f, j).unwrap().is_integer());
        }
        let t0 = rat(2, p - 1);
        assert_eq!(delta_prime(&f, &t0).unwrap(), int(k * (p - 1)));
    }
}

#[test]
fn cable_lambda_values() {
    for k in 3..=7 {
        let f = jk(k).unwrap().upsilon();
        for j in 1..=2 * k {
            assert!(lambda(&f, j).unwrap().is_integer(), "k={k} j={j}");
        }
    }
}
