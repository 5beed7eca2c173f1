//! Gap statistics of integer sets.
//!
//! A `j`-gap of a set `A` is a run of `j` consecutive integers missing from
//! `A` whose two neighbours both belong to `A`. The sequence of `j`-gap
//! counts is what the phi invariant of an L-space knot reads off its
//! semigroup.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::IntSet;

/// A finitely supported integer sequence `(s_j)_{j >= 1}`.
///
/// Only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiSequence(BTreeMap<usize, i64>);

impl PhiSequence {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a sequence from `(s_1, s_2, ...)`.
    pub fn from_slice(values: &[i64]) -> Self {
        let mut s = Self::zero();
        for (i, &v) in values.iter().enumerate() {
            s.add_at(i + 1, v);
        }
        s
    }

    /// The sequence `(1, ..., 1, 0, ...)` with `n` leading ones.
    pub fn ones(n: usize) -> Self {
        Self((1..=n).map(|j| (j, 1)).collect())
    }

    pub fn get(&self, j: usize) -> i64 {
        self.0.get(&j).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, j: usize, v: i64) {
        assert!(j >= 1, "sequence index starts at 1");
        if v == 0 {
            return;
        }
        let e = self.0.entry(j).or_insert(0);
        *e += v;
        if *e == 0 {
            self.0.remove(&j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index with a nonzero entry, or 0 for the zero sequence.
    pub fn support_max(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    /// Nonzero entries in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0.iter().map(|(&j, &v)| (j, v))
    }

    /// `(s_1, ..., s_len)`.
    pub fn to_vec(&self, len: usize) -> Vec<i64> {
        (1..=len).map(|j| self.get(j)).collect()
    }
}

impl fmt::Display for PhiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_max().max(1);
        let body: Vec<String> = self.to_vec(n).iter().map(i64::to_string).collect();
        write!(f, "({},0,...)", body.join(","))
    }
}

impl AddAssign<&PhiSequence> for PhiSequence {
    fn add_assign(&mut self, rhs: &PhiSequence) {
        for (j, v) in rhs.iter() {
            self.add_at(j, v);
        }
    }
}

impl Add for &PhiSequence {
    type Output = PhiSequence;
    fn add(self, rhs: &PhiSequence) -> PhiSequence {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PhiSequence {
    type Output = PhiSequence;
    fn add(mut self, rhs: PhiSequence) -> PhiSequence {
        self += &rhs;
        self
    }
}

impl Neg for &PhiSequence {
    type Output = PhiSequence;
    fn neg(self) -> PhiSequence {
        PhiSequence(self.0.iter().map(|(&j, &v)| (j, -v)).collect())
    }
}

impl Neg for PhiSequence {
    type Output = PhiSequence;
    fn neg(self) -> PhiSequence {
        -&self
    }
}

impl Sub for &PhiSequence {
    type Output = PhiSequence;
    fn sub(self, rhs: &PhiSequence) -> PhiSequence {
        self + &(-rhs)
    }
}

impl Sub for PhiSequence {
    type Output = PhiSequence;
    fn sub(self, rhs: PhiSequence) -> PhiSequence {
        &self - &rhs
    }
}

impl Mul<&PhiSequence> for i64 {
    type Output = PhiSequence;
    fn mul(self, rhs: &PhiSequence) -> PhiSequence {
        if self == 0 {
            return PhiSequence::zero();
        }
        PhiSequence(rhs.0.iter().map(|(&j, &v)| (j, self * v)).collect())
    }
}

impl Mul<PhiSequence> for i64 {
    type Output = PhiSequence;
    fn mul(self, rhs: PhiSequence) -> PhiSequence {
        self * &rhs
    }
}

/// `Φ(A)`: entry `j` counts the `j`-gaps of `A`.
pub fn phi_of_set(a: &IntSet) -> PhiSequence {
    let mut out = PhiSequence::zero();
    let mut prev: Option<i64> = None;
    for x in a.anchors() {
        if let Some(p) = prev {
            let gap = x - p - 1;
            if gap > 0 {
                out.add_at(gap as usize, 1);
            }
        }
        prev = Some(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_example_counts_two_four_gaps() {
        // {3,4,5,6} and {9,10,11,12} are both 4-gaps.
        let a = IntSet::with_upper_tail([0, 2, 7, 8, 13], 14);
        let phi = phi_of_set(&a);
        assert_eq!(phi.get(1), 1);
        assert_eq!(phi.get(4), 2);
        assert_eq!(phi, PhiSequence::from_slice(&[1, 0, 0, 2]));
    }

    #[test]
    fn singletons_and_rays_have_no_gaps() {
        for b in [-7, 0, 12] {
            assert!(phi_of_set(&IntSet::finite([b])).is_zero());
            assert!(phi_of_set(&IntSet::with_upper_tail([], b)).is_zero());
            assert!(phi_of_set(&IntSet::with_lower_tail(b, [])).is_zero());
        }
        assert!(phi_of_set(&IntSet::finite([])).is_zero());
    }

    #[test]
    fn trefoil_semigroup_has_one_gap() {
        let s = IntSet::with_upper_tail([0], 2);
        assert_eq!(phi_of_set(&s), PhiSequence::from_slice(&[1]));
    }

    #[test]
    fn arithmetic() {
        let a = PhiSequence::from_slice(&[1, 2, 0, 3]);
        let b = PhiSequence::from_slice(&[1, 0, 0, 3]);
        assert_eq!(&a - &b, PhiSequence::from_slice(&[0, 2]));
        assert_eq!((&a - &a), PhiSequence::zero());
        assert_eq!(2 * &b, PhiSequence::from_slice(&[2, 0, 0, 6]));
        assert_eq!(a.support_max(), 4);
        assert_eq!(a.to_string(), "(1,2,0,3,0,...)");
    }
}
