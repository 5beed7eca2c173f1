//! The Upsilon invariant of L-space knots, computed exactly.
//!
//! For an L-space knot with semigroup `S` and genus `g`,
//!
//! ```text
//! Υ(t) = -2 · min_{m ∈ S ∩ [0, 2g]} ( #(S ∩ (0, m]) + (t/2)(g - m) )
//! ```
//!
//! which is the upper envelope of the lines `(m - g)t - 2#(S ∩ (0, m])`.
//! Torus knots can also be reached through the cabling recursion
//! `Υ(T(p, kp+r)) = Υ(T(r, p)) + kΥ(T(p, p+1))`, which serves as an
//! independent check of the envelope.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::knot_algebra::KnotExpression;
use crate::pl::{int, rat, PLFunction, Rational};
use crate::semigroup::{torus_semigroup, NumericalSemigroup};

/// A line `slope·t + intercept` with integer coefficients.
#[derive(Clone, Copy, Debug)]
struct Line {
    slope: i64,
    intercept: i64,
}

impl Line {
    fn at(&self, t: &Rational) -> Rational {
        int(self.slope) * t + int(self.intercept)
    }
}

/// Upper envelope of lines given in strictly increasing slope order.
fn upper_hull(lines: impl IntoIterator<Item = Line>) -> Vec<Line> {
    let mut hull: Vec<Line> = Vec::new();
    for l3 in lines {
        while hull.len() >= 2 {
            let l1 = hull[hull.len() - 2];
            let l2 = hull[hull.len() - 1];
            // l2 is dominated when l1 and l3 cross at or left of where l1 and l2 cross.
            let lhs = (l1.intercept - l3.intercept) as i128 * (l2.slope - l1.slope) as i128;
            let rhs = (l1.intercept - l2.intercept) as i128 * (l3.slope - l1.slope) as i128;
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(l3);
    }
    hull
}

pub fn upsilon_lspace(s: &NumericalSemigroup) -> PLFunction {
    let g = s.genus();
    if g == 0 {
        return PLFunction::zero();
    }
    let mut count = 0i64;
    let lines = (0..=2 * g).filter(|&m| s.contains(m)).map(|m| {
        if m > 0 {
            count += 1;
        }
        Line { slope: m - g, intercept: -2 * count }
    });
    let hull = upper_hull(lines);

    let two = int(2);
    let mut ts = vec![int(0)];
    for w in hull.windows(2) {
        let t = rat(w[0].intercept - w[1].intercept, w[1].slope - w[0].slope);
        if t > int(0) && t < two {
            ts.push(t);
        }
    }
    ts.push(two);
    let points = ts
        .into_iter()
        .map(|t| {
            let v = hull.iter().map(|l| l.at(&t)).max().expect("hull is nonempty");
            (t, v)
        })
        .collect();
    PLFunction::from_points(points).expect("envelope breakpoints are increasing")
}

pub fn upsilon_torus_direct(p: i64, q: i64) -> Result<PLFunction> {
    Ok(upsilon_lspace(&torus_semigroup(p, q)?))
}

/// Memoized cabling recursion for torus knots, bottoming out at `T(n, n+1)`
/// (computed from its semigroup) and `T(1, n)` (zero).
#[derive(Debug, Default)]
pub struct TorusUpsilonCache {
    memo: HashMap<(i64, i64), PLFunction>,
}

impl TorusUpsilonCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: i64, q: i64) -> Result<PLFunction> {
        if p <= 0 || q <= 0 {
            return Err(Error::NonPositive(p, q));
        }
        let g = p.gcd(&q);
        if g != 1 {
            return Err(Error::NotCoprime(p, q, g));
        }
        Ok(self.eval(p.min(q), p.max(q)))
    }

    fn eval(&mut self, p: i64, q: i64) -> PLFunction {
        if p == 1 {
            return PLFunction::zero();
        }
        if let Some(hit) = self.memo.get(&(p, q)) {
            return hit.clone();
        }
        let out = if q == p + 1 {
            upsilon_lspace(&torus_semigroup(p, q).expect("consecutive integers are coprime"))
        } else {
            let (k, r) = q.div_rem(&p);
            let basis = self.eval(p, p + 1);
            &self.eval(r, p) + &basis.scale(&int(k))
        };
        self.memo.insert((p, q), out.clone());
        out
    }
}

pub fn upsilon_torus_fk(p: i64, q: i64) -> Result<PLFunction> {
    TorusUpsilonCache::new().get(p, q)
}

pub fn upsilon_expression(e: &KnotExpression) -> PLFunction {
    e.upsilon()
}

pub fn delta_prime(f: &PLFunction, t: &Rational) -> Result<Rational> {
    f.delta_prime(t)
}

fn jump_or_zero(f: &PLFunction, t: &Rational) -> Rational {
    f.delta_prime(t).unwrap_or_else(|_| Rational::zero())
}

/// `λ_j = (ΔΥ'(2/(2j-1)) - ΔΥ'(4/(2j-1))) / (2j-1)`.
///
/// A jump location outside `(0, 2)` contributes 0, which only happens for
/// `j = 1`.
pub fn lambda(f: &PLFunction, j: i64) -> Result<Rational> {
    if j < 1 {
        return Err(Error::Precondition(format!("lambda index must be >= 1, got {j}")));
    }
    let d = 2 * j - 1;
    Ok((jump_or_zero(f, &rat(2, d)) - jump_or_zero(f, &rat(4, d))) / int(d))
}

/// `ξ_p = ΔΥ'(2/(p-1)) / (p-1)`; `p = 2` puts the jump at `t = 2` and yields 0.
pub fn xi(f: &PLFunction, p: i64) -> Result<Rational> {
    if p < 2 {
        return Err(Error::Precondition(format!("xi index must be >= 2, got {p}")));
    }
    Ok(jump_or_zero(f, &rat(2, p - 1)) / int(p - 1))
}

/// Reciprocal of the first singularity, or 0 for a function without one.
pub fn t_invariant(f: &PLFunction) -> Rational {
    f.first_singularity()
        .map_or_else(Rational::zero, |t| Rational::from_integer(1.into()) / t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let f = upsilon_torus_direct(2, 3).unwrap();
        let want = PLFunction::from_points(vec![(int(0), int(0)), (int(1), int(-1)), (int(2), int(0))]).unwrap();
        assert_eq!(f, want);
        assert_eq!(delta_prime(&f, &int(1)).unwrap(), int(2));
        assert_eq!(t_invariant(&f), int(1));
    }

    #[test]
    fn unknot_is_zero() {
        assert!(upsilon_torus_direct(1, 1).unwrap().is_zero());
        assert!(upsilon_torus_fk(1, 7).unwrap().is_zero());
        assert_eq!(t_invariant(&PLFunction::zero()), int(0));
    }

    #[test]
    fn t_3_4_closed_form() {
        // Υ(T(3,4)) = -3t on [0, 2/3], then -2 on [2/3, 4/3], symmetric.
        let f = upsilon_torus_direct(3, 4).unwrap();
        assert_eq!(f.eval(&rat(2, 3)), int(-2));
        assert_eq!(f.eval(&int(1)), int(-2));
        assert_eq!(f.slopes()[0], int(-3));
        assert_eq!(delta_prime(&f, &rat(2, 3)).unwrap(), int(3));
    }

    #[test]
    fn fk_matches_direct_small() {
        for (p, q) in [(2, 5), (3, 5), (3, 7), (4, 7), (5, 8), (5, 12), (7, 9)] {
            assert_eq!(upsilon_torus_fk(p, q).unwrap(), upsilon_torus_direct(p, q).unwrap(), "T({p},{q})");
        }
    }

    #[test]
    fn basis_first_jump() {
        for p in 3..12 {
            let f = upsilon_torus_direct(p - 1, p).unwrap();
            assert_eq!(f.first_singularity(), Some(rat(2, p - 1)));
            assert_eq!(delta_prime(&f, &rat(2, p - 1)).unwrap(), int(p - 1));
        }
    }

    #[test]
    fn lambda_and_xi_bounds() {
        let f = upsilon_torus_direct(2, 3).unwrap();
        assert!(lambda(&f, 0).is_err());
        assert!(xi(&f, 1).is_err());
        assert_eq!(xi(&f, 2).unwrap(), int(0));
        assert_eq!(xi(&f, 3).unwrap(), int(1));
    }
}
