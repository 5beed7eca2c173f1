//! Staircase complexes of L-space knots.
//!
//! An L-space knot complex is `St(b_1, ..., b_{2m})` for a palindromic
//! vector of positive integers. Partial sums `α_i` are the exponents of the
//! Alexander polynomial, and the runs `b_i` alternate between members and
//! gaps of the formal semigroup.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{torus_semigroup, IntSet, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase {
    b: Vec<i64>,
}

impl Staircase {
    pub fn new(b: Vec<i64>) -> Result<Self> {
        if !b.len().is_multiple_of(2) {
            return Err(Error::InvalidStaircase(b, "odd length"));
        }
        if b.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidStaircase(b, "entries must be positive"));
        }
        if !b.iter().eq(b.iter().rev()) {
            return Err(Error::InvalidStaircase(b, "not palindromic"));
        }
        Ok(Staircase { b })
    }

    /// The unknot complex `St()`.
    pub fn empty() -> Self {
        Staircase { b: Vec::new() }
    }

    pub fn steps(&self) -> &[i64] {
        &self.b
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// `α_0 = 0 < α_1 < ... < α_{2m}`.
    pub fn alpha(&self) -> Vec<i64> {
        std::iter::once(0)
            .chain(self.b.iter().scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            }))
            .collect()
    }

    pub fn genus(&self) -> i64 {
        self.b.iter().sum::<i64>() / 2
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.b.iter().map(i64::to_string).collect();
        write!(f, "St({})", body.join(","))
    }
}

/// Alternating run lengths of members and gaps of `s` below its conductor.
pub fn staircase_from_semigroup(s: &NumericalSemigroup) -> Result<Staircase> {
    if let Some(n) = s.first_asymmetry() {
        return Err(Error::NotSymmetric(n));
    }
    let mut b = Vec::new();
    let mut n = 0;
    let mut in_members = true;
    while n < s.conductor() {
        let start = n;
        while n < s.conductor() && s.contains(n) == in_members {
            n += 1;
        }
        b.push(n - start);
        in_members = !in_members;
    }
    Staircase::new(b)
}

/// `{α_0, ..., α_1 - 1} ∪ {α_2, ..., α_3 - 1} ∪ ... ∪ Z≥α_{2m}`.
pub fn semigroup_from_staircase(st: &Staircase) -> IntSet {
    let alpha = st.alpha();
    let top = *alpha.last().unwrap();
    let members = alpha
        .chunks(2)
        .filter(|c| c.len() == 2)
        .flat_map(|c| c[0]..c[1]);
    IntSet::with_upper_tail(members, top)
}

pub fn torus_staircase(p: i64, q: i64) -> Result<Staircase> {
    staircase_from_semigroup(&torus_semigroup(p, q)?)
}
