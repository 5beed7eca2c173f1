//! The phi invariant of L-space knots and torus knots.
//!
//! For an L-space knot, `φ_j` counts the `j`-gaps of the formal semigroup.
//! Torus knots additionally admit a recursion that reduces `T(p, kp + r)`
//! to torus knots with smaller parameters and the basis knots `T(n, n + 1)`.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot_algebra::KnotExpression;
use crate::semigroup::{apery, phi_of_set, torus_semigroup, NumericalSemigroup, PhiSequence};
use crate::staircase::Staircase;

/// `φ(K) = Φ(S_K)`, read off the gap runs of the semigroup.
pub fn phi_lspace(s: &NumericalSemigroup) -> PhiSequence {
    let mut out = PhiSequence::zero();
    let mut run = 0usize;
    for n in 0..=s.conductor() {
        if s.contains(n) {
            if run > 0 {
                out.add_at(run, 1);
            }
            run = 0;
        } else {
            run += 1;
        }
    }
    out
}

/// `φ_j = #{i : b_{2i} = j}`.
pub fn phi_from_staircase(st: &Staircase) -> PhiSequence {
    let mut out = PhiSequence::zero();
    for &b in st.steps().iter().skip(1).step_by(2) {
        out.add_at(b as usize, 1);
    }
    out
}

/// `φ(T(n, n+1)) = (1, ..., 1, 0, ...)` with `n - 1` ones.
pub fn phi_basis_knot(n: i64) -> PhiSequence {
    PhiSequence::ones((n - 1).max(0) as usize)
}

/// Memoized evaluation of the torus-knot recursion.
///
/// The table is owned by the caller, so separate instances never share
/// state.
#[derive(Debug, Default)]
pub struct TorusPhiCache {
    memo: HashMap<(i64, i64), PhiSequence>,
}

impl TorusPhiCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: i64, q: i64) -> Result<PhiSequence> {
        if p <= 0 || q <= 0 {
            return Err(Error::NonPositive(p, q));
        }
        let g = p.gcd(&q);
        if g != 1 {
            return Err(Error::NotCoprime(p, q, g));
        }
        Ok(self.eval(p.min(q), p.max(q)))
    }

    fn eval(&mut self, p: i64, q: i64) -> PhiSequence {
        if p == 1 {
            return PhiSequence::zero();
        }
        if q == p + 1 {
            return phi_basis_knot(p);
        }
        if let Some(hit) = self.memo.get(&(p, q)) {
            return hit.clone();
        }
        let (k, r) = q.div_rem(&p);
        // (k+1)φ(T(r,p)) + kφ(T(p-r,p)) + k(φ(T(p,p+1)) - φ(T(p-1,p)))
        let mut out = (k + 1) * &self.eval(r, p);
        out += &(k * &self.eval(p - r, p));
        let corr = &self.eval(p, p + 1) - &self.eval(p - 1, p);
        out += &(k * &corr);
        self.memo.insert((p, q), out.clone());
        out
    }
}

/// `φ(T(p, q))` computed by recursion alone, never building a semigroup.
pub fn phi_torus_recursive(p: i64, q: i64) -> Result<PhiSequence> {
    TorusPhiCache::new().get(p, q)
}

pub fn phi_torus_direct(p: i64, q: i64) -> Result<PhiSequence> {
    Ok(phi_lspace(&torus_semigroup(p, q)?))
}

/// `Σ c·φ(atom)` over the terms of `e`.
pub fn phi_expression(e: &KnotExpression) -> PhiSequence {
    e.phi()
}

/// Block-by-block form of the recursion for `U = ⟨p, kp+r⟩`,
/// `V = ⟨p, r⟩`, `W = ⟨p, p-r⟩` with base `p`:
/// `Φ(A_i(U)) = (k+1)Φ(A_i(V)) + kΦ(A_i(W))` for `i >= 2`, and `A_1(U)`
/// contributes `k` copies of a `(p-1)`-gap.
pub fn verify_recursion_blocks(p: i64, r: i64, k: i64) -> Result<bool> {
    if !(1..p).contains(&r) || k < 0 {
        return Err(Error::Precondition(format!("need 0 < r < p and k >= 0, got p={p} r={r} k={k}")));
    }
    let u = apery(&torus_semigroup(p, k * p + r)?, p)?;
    let v = apery(&torus_semigroup(p, r)?, p)?;
    let w = apery(&torus_semigroup(p, p - r)?, p)?;
    for i in 2..p as usize {
        let lhs = phi_of_set(&u.blocks[i - 1]);
        let rhs = (k + 1) * &phi_of_set(&v.blocks[i - 1]) + k * phi_of_set(&w.blocks[i - 1]);
        if lhs != rhs {
            return Ok(false);
        }
    }
    if p >= 2 {
        let mut first = PhiSequence::zero();
        first.add_at((p - 1) as usize, k);
        let rhs = (k + 1) * &phi_of_set(&v.blocks[0]) + k * phi_of_set(&w.blocks[0]) + first;
        if phi_of_set(&u.blocks[0]) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vanishing pattern of `φ(T(p, kp + r))` near the top index.
#[derive(Clone, Debug, Serialize)]
pub struct RoughReport {
    pub p: i64,
    pub r: i64,
    pub k: i64,
    pub phi: PhiSequence,
    /// `φ_j = 0` for every `j >= p`.
    pub vanishes_from_p: bool,
    /// `φ_j = 0` for `max(r, p-r) <= j <= p-2`; only asserted when
    /// `2 <= r <= p-2`.
    pub vanishes_middle: Option<bool>,
    /// `φ_{p-1}`, expected to be `k`.
    pub top: i64,
}

impl RoughReport {
    pub fn passed(&self) -> bool {
        self.vanishes_from_p && self.vanishes_middle.unwrap_or(true) && self.top == self.k
    }
}

pub fn check_rough(p: i64, r: i64, k: i64) -> Result<RoughReport> {
    if !(1..p).contains(&r) || k < 1 {
        return Err(Error::Precondition(format!("need 0 < r < p and k >= 1, got p={p} r={r} k={k}")));
    }
    let phi = phi_torus_direct(p, k * p + r)?;
    let pu = p as usize;
    let vanishes_from_p = phi.iter().all(|(j, _)| j < pu);
    let vanishes_middle = (2 <= r && r <= p - 2).then(|| {
        let lo = r.max(p - r) as usize;
        (lo..=pu - 2).all(|j| phi.get(j) == 0)
    });
    let top = phi.get(pu - 1);
    Ok(RoughReport { p, r, k, phi, vanishes_from_p, vanishes_middle, top })
}

/// Returns `(φ_{p-2}(T(p, kp+r)), φ_{p-2}(T(r, p) # k T(p, p+1)))`,
/// expected to be `(0, k)` when `2 <= r <= p-2`.
pub fn p_minus_two_entries(p: i64, r: i64, k: i64) -> Result<(i64, i64)> {
    if !(2..=p - 2).contains(&r) || k < 1 {
        return Err(Error::Precondition(format!("need 2 <= r <= p-2 and k >= 1, got p={p} r={r} k={k}")));
    }
    let j = (p - 2) as usize;
    let torus = phi_torus_direct(p, k * p + r)?;
    let sum = phi_torus_direct(r, p)? + k * phi_torus_direct(p, p + 1)?;
    Ok((torus.get(j), sum.get(j)))
}

/// Coefficients `c_n` with `s = Σ_n c_n φ(T(n, n+1))`, namely
/// `c_{j+1} = s_j - s_{j+1}`. Only nonzero coefficients are returned.
pub fn basis_decompose(s: &PhiSequence) -> BTreeMap<i64, i64> {
    (1..=s.support_max())
        .map(|j| (j as i64 + 1, s.get(j) - s.get(j + 1)))
        .filter(|&(_, c)| c != 0)
        .collect()
}

pub fn basis_reconstruct(coeffs: &BTreeMap<i64, i64>) -> PhiSequence {
    coeffs
        .iter()
        .fold(PhiSequence::zero(), |acc, (&n, &c)| acc + c * phi_basis_knot(n))
}

/// `N(K)`: the largest `j` with `φ_j ≠ 0`, or 0.
pub fn n_invariant(s: &PhiSequence) -> usize {
    s.support_max()
}
