//! Numerical semigroups of L-space knots and their gap statistics.

mod apery;
mod gaps;
mod intset;

pub use apery::{apery, verify_block_lemma, AperyData, BlockCheck, BlockLemmaReport};
pub use gaps::{phi_of_set, PhiSequence};
pub use intset::IntSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A cofinite additive submonoid of the nonnegative integers.
///
/// Membership is stored as a bit table over `[0, conductor]`; everything
/// from the conductor on is a member.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    conductor: i64,
    member: Vec<bool>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.member == other.member
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, which must be positive with gcd 1.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        if let Some(&g) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositive(g, g));
        }
        let g = generators.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GeneratorsNotCoprime(generators, g));
        }
        let smallest = generators[0];
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0i64;
        let mut n = 0i64;
        loop {
            let is_member = n == 0
                || generators
                    .iter()
                    .any(|&g| n >= g && member[(n - g) as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
            if run == smallest {
                break;
            }
            n += 1;
        }
        let conductor = n - smallest + 1;
        member.truncate(conductor as usize + 1);
        Ok(NumericalSemigroup { generators, conductor, member })
    }

    /// Builds a semigroup from a membership set, checking every semigroup
    /// axiom exhaustively. The stored generators are the minimal ones.
    pub fn from_int_set(set: &IntSet) -> Result<Self> {
        if set.lower_tail().is_some() {
            return Err(Error::Precondition("set has a lower tail".into()));
        }
        let Some(conductor) = set.upper_tail() else {
            return Err(Error::Precondition("set is not cofinite".into()));
        };
        if !set.contains(0) {
            return Err(Error::Precondition("0 is not a member".into()));
        }
        if let Some(&neg) = set.explicit().iter().find(|&&m| m < 0) {
            return Err(Error::Precondition(format!("negative member {neg}")));
        }
        let member: Vec<bool> = (0..=conductor).map(|n| set.contains(n)).collect();
        let members: Vec<i64> = (1..conductor).filter(|&n| member[n as usize]).collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                if x + y >= conductor {
                    break;
                }
                if !member[(x + y) as usize] {
                    return Err(Error::NotClosed(x, y));
                }
            }
        }
        let mut s = NumericalSemigroup { generators: Vec::new(), conductor, member };
        s.generators = s.minimal_generators();
        Ok(s)
    }

    fn minimal_generators(&self) -> Vec<i64> {
        if self.conductor == 0 {
            return vec![1];
        }
        let limit = self.conductor + self.multiplicity();
        (1..limit)
            .filter(|&n| self.contains(n))
            .filter(|&n| !(1..=n / 2).any(|x| self.contains(x) && self.contains(n - x)))
            .collect()
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Least `c >= 0` with `[c, ∞)` inside the semigroup.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        (1..=self.conductor.max(1)).find(|&n| self.contains(n)).unwrap_or(1)
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n >= self.conductor || self.member[n as usize])
    }

    /// Number of gaps. For the semigroup of an L-space knot this is the
    /// Seifert genus.
    pub fn genus(&self) -> i64 {
        self.member.iter().filter(|&&m| !m).count() as i64
    }

    /// Symmetric semigroups satisfy `n ∈ S ⇔ c - 1 - n ∉ S` on `[0, c - 1]`.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<i64> {
        let c = self.conductor;
        (0..c).find(|&n| self.contains(n) == self.contains(c - 1 - n))
    }

    /// Members in `[0, bound)`, increasing.
    pub fn members_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..bound).filter(|&n| self.contains(n))
    }

    pub fn to_int_set(&self) -> IntSet {
        IntSet::with_upper_tail(self.members_below(self.conductor), self.conductor)
    }
}

fn check_coprime(p: i64, q: i64) -> Result<()> {
    if p <= 0 || q <= 0 {
        return Err(Error::NonPositive(p, q));
    }
    let g = p.gcd(&q);
    if g != 1 {
        return Err(Error::NotCoprime(p, q, g));
    }
    Ok(())
}

/// `⟨p, q⟩`, the semigroup of the torus knot `T(p, q)`.
pub fn torus_semigroup(p: i64, q: i64) -> Result<NumericalSemigroup> {
    check_coprime(p, q)?;
    NumericalSemigroup::from_generators(&[p, q])
}

/// Semigroup of the `(a, b)`-cable of an L-space knot with semigroup `s`,
/// namely `a·S + b·Z≥0`. The cable is an L-space knot only when
/// `b >= a(2g - 1)`.
pub fn cable_semigroup(s: &NumericalSemigroup, a: i64, b: i64) -> Result<NumericalSemigroup> {
    check_coprime(a, b)?;
    if a == 1 {
        // The (1, b)-cable is isotopic to the companion.
        return Ok(s.clone());
    }
    let genus = s.genus();
    if genus > 0 && b < a * (2 * genus - 1) {
        return Err(Error::CablingCondition { a, b, genus });
    }
    // Every n >= a·c(S) + a·b lies in the cable; scan below that bound.
    let bound = a * s.conductor() + a * b;
    let is_member = |n: i64| {
        (0..=n / b).any(|t| {
            let rest = n - b * t;
            rest % a == 0 && s.contains(rest / a)
        })
    };
    let member: Vec<bool> = (0..=bound).map(is_member).collect();
    let conductor = member.iter().rposition(|&m| !m).map_or(0, |last| last as i64 + 1);
    let mut generators: Vec<i64> = s.generators().iter().map(|g| a * g).collect();
    generators.push(b);
    generators.sort_unstable();
    generators.dedup();
    Ok(NumericalSemigroup {
        generators,
        conductor,
        member: member[..=conductor as usize].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_5_8_members() {
        let s = torus_semigroup(5, 8).unwrap();
        assert_eq!(
            s.to_int_set(),
            IntSet::with_upper_tail([0, 5, 8, 10, 13, 15, 16, 18, 20, 21, 23, 24, 25, 26], 28)
        );
        assert_eq!(s.conductor(), 28);
        assert_eq!(s.genus(), 14);
    }

    #[test]
    fn torus_3_5_members() {
        let s = torus_semigroup(3, 5).unwrap();
        assert_eq!(s.to_int_set(), IntSet::with_upper_tail([0, 3, 5, 6], 8));
    }

    #[test]
    fn unknot_semigroup_is_everything() {
        for n in [1, 2, 17] {
            let s = torus_semigroup(1, n).unwrap();
            assert_eq!(s.conductor(), 0);
            assert_eq!(s.genus(), 0);
            assert_eq!(s.to_int_set(), IntSet::with_upper_tail([], 0));
        }
    }

    #[test]
    fn torus_conductor_formula() {
        for p in 2..15i64 {
            for q in 2..40i64 {
                if p.gcd(&q) == 1 {
                    let s = torus_semigroup(p, q).unwrap();
                    assert_eq!(s.conductor(), (p - 1) * (q - 1));
                    assert!(s.is_symmetric());
                }
            }
        }
    }

    #[test]
    fn torus_rejects_bad_input() {
        assert_eq!(torus_semigroup(4, 6), Err(Error::NotCoprime(4, 6, 2)));
        assert_eq!(torus_semigroup(0, 3), Err(Error::NonPositive(0, 3)));
        assert_eq!(torus_semigroup(-2, 3), Err(Error::NonPositive(-2, 3)));
    }

    #[test]
    fn cable_of_trefoil() {
        let t23 = torus_semigroup(2, 3).unwrap();
        let c = cable_semigroup(&t23, 3, 5).unwrap();
        assert_eq!(c.to_int_set(), IntSet::with_upper_tail([0, 5, 6, 9, 10, 11, 12], 14));
        assert_eq!(c.genus(), 7);
        assert!(c.is_symmetric());
    }

    #[test]
    fn cable_of_unknot_is_torus() {
        let u = torus_semigroup(1, 1).unwrap();
        for (p, q) in [(2, 3), (3, 7), (5, 4)] {
            assert_eq!(cable_semigroup(&u, p, q).unwrap(), torus_semigroup(p, q).unwrap());
        }
    }

    #[test]
    fn cable_condition_enforced() {
        let t23 = torus_semigroup(2, 3).unwrap();
        assert_eq!(
            cable_semigroup(&t23, 3, 2),
            Err(Error::CablingCondition { a: 3, b: 2, genus: 1 })
        );
        assert!(matches!(cable_semigroup(&t23, 3, 6), Err(Error::NotCoprime(3, 6, 3))));
    }

    #[test]
    fn from_int_set_checks_closure() {
        let s = NumericalSemigroup::from_int_set(&IntSet::with_upper_tail([0, 3, 5, 6], 8)).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
        assert_eq!(s, torus_semigroup(3, 5).unwrap());
        let bad = IntSet::with_upper_tail([0, 2], 5);
        assert_eq!(NumericalSemigroup::from_int_set(&bad), Err(Error::NotClosed(2, 2)));
    }

    #[test]
    fn asymmetric_semigroup_detected() {
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(s.conductor(), 3);
        assert!(!s.is_symmetric());
    }
}
