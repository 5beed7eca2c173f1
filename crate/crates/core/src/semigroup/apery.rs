//! Apéry sets and the block decomposition `S = A_1 ∪ ... ∪ A_{p-1} ∪ tail`.

use serde::Serialize;

use super::{phi_of_set, IntSet, NumericalSemigroup, PhiSequence};
use crate::error::{Error, Result};

/// Apéry set data of a semigroup `S` with respect to a member `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyData {
    pub base: i64,
    /// `beta[i]` is the least member congruent to `i` mod `p`.
    pub beta: Vec<i64>,
    /// The Apéry set in increasing order.
    pub omega: Vec<i64>,
    /// `kappa[i] = omega[i] mod p`.
    pub kappa: Vec<i64>,
    /// `blocks[i - 1] = S ∩ [⌊ω_{i-1}/p⌋p, ⌊ω_i/p⌋p]` for `i = 1..p-1`.
    pub blocks: Vec<IntSet>,
}

impl AperyData {
    /// `⌊ω_i / p⌋`.
    pub fn level(&self, i: usize) -> i64 {
        self.omega[i].div_euclid(self.base)
    }

    /// `{κ_0, ..., κ_{i-1}, p}`.
    pub fn kappa_prefix_set(&self, i: usize) -> IntSet {
        IntSet::finite(self.kappa[..i].iter().copied().chain([self.base]))
    }
}

pub fn apery(s: &NumericalSemigroup, p: i64) -> Result<AperyData> {
    if p < 1 || !s.contains(p) {
        return Err(Error::NotMember(p));
    }
    let pu = p as usize;
    let mut beta = vec![-1i64; pu];
    let mut found = 0;
    let mut n = 0i64;
    while found < pu {
        let slot = &mut beta[(n % p) as usize];
        if *slot < 0 && s.contains(n) {
            *slot = n;
            found += 1;
        }
        n += 1;
    }
    let mut omega = beta.clone();
    omega.sort_unstable();
    let kappa: Vec<i64> = omega.iter().map(|w| w.rem_euclid(p)).collect();
    let blocks = (1..pu)
        .map(|i| {
            let lo = omega[i - 1].div_euclid(p) * p;
            let hi = omega[i].div_euclid(p) * p;
            IntSet::finite((lo..=hi).filter(|&x| s.contains(x)))
        })
        .collect();
    Ok(AperyData { base: p, beta, omega, kappa, blocks })
}

/// One row of the block lemma check: `Φ(A_i)` against
/// `(⌊ω_i/p⌋ - ⌊ω_{i-1}/p⌋) · Φ({κ_0, ..., κ_{i-1}, p})`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockCheck {
    pub i: usize,
    pub block_phi: PhiSequence,
    pub multiplier: i64,
    pub kappa_phi: PhiSequence,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockLemmaReport {
    pub base: i64,
    pub rows: Vec<BlockCheck>,
}

impl BlockLemmaReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

pub fn verify_block_lemma(s: &NumericalSemigroup, p: i64) -> Result<BlockLemmaReport> {
    let data = apery(s, p)?;
    let rows = (1..p as usize)
        .map(|i| {
            let block_phi = phi_of_set(&data.blocks[i - 1]);
            let multiplier = data.level(i) - data.level(i - 1);
            let kappa_phi = phi_of_set(&data.kappa_prefix_set(i));
            let holds = block_phi == multiplier * &kappa_phi;
            BlockCheck { i, block_phi, multiplier, kappa_phi, holds }
        })
        .collect();
    Ok(BlockLemmaReport { base: p, rows })
}
