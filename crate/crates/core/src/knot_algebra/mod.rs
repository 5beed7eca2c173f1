//! Formal connected sums of L-space knots and the invariants evaluated on
//! them.
//!
//! Mirrors only ever appear as negative coefficients: both invariants are
//! homomorphisms, so a mirrored atom contributes the negated invariant.

mod certificate;
mod families;
mod parse;

pub use certificate::{genus_bounds, independence_certificate, GenusBounds, Hom, IndependenceCertificate};
pub use families::{family_jk_lk, family_phi, family_upsilon, jk, lk};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::phi::phi_lspace;
use crate::pl::{int, PLFunction};
use crate::semigroup::{cable_semigroup, torus_semigroup, NumericalSemigroup, PhiSequence};
use crate::upsilon::upsilon_lspace;

/// A prime summand: a torus knot `T(p, q)` with `2 <= p < q`, or an
/// L-space cable `C(T(p, q); a, b)` with `a >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Torus { p: i64, q: i64 },
    Cable { p: i64, q: i64, a: i64, b: i64 },
}

fn coprime(p: i64, q: i64) -> Result<()> {
    if p <= 0 || q <= 0 {
        return Err(Error::NonPositive(p, q));
    }
    let g = p.gcd(&q);
    if g != 1 {
        return Err(Error::NotCoprime(p, q, g));
    }
    Ok(())
}

impl Atom {
    /// `T(p, q)` in normalized form, or `None` for the unknot.
    pub fn torus(p: i64, q: i64) -> Result<Option<Atom>> {
        coprime(p, q)?;
        let (p, q) = (p.min(q), p.max(q));
        Ok((p > 1).then_some(Atom::Torus { p, q }))
    }

    /// `C(T(p, q); a, b)` in normalized form. Cables of the unknot are torus
    /// knots and `(1, b)`-cables are the companion itself.
    pub fn cable(p: i64, q: i64, a: i64, b: i64) -> Result<Option<Atom>> {
        let inner = Atom::torus(p, q)?;
        coprime(a, b)?;
        match inner {
            None => Atom::torus(a, b),
            Some(inner) if a == 1 => Ok(Some(inner)),
            Some(Atom::Torus { p, q }) => {
                let genus = (p - 1) * (q - 1) / 2;
                if b < a * (2 * genus - 1) {
                    return Err(Error::CablingCondition { a, b, genus });
                }
                Ok(Some(Atom::Cable { p, q, a, b }))
            }
            Some(Atom::Cable { .. }) => unreachable!("torus constructor returns a torus atom"),
        }
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        match *self {
            Atom::Torus { p, q } => torus_semigroup(p, q).expect("atoms are validated"),
            Atom::Cable { p, q, a, b } => {
                let inner = torus_semigroup(p, q).expect("atoms are validated");
                cable_semigroup(&inner, a, b).expect("atoms are validated")
            }
        }
    }

    pub fn phi(&self) -> PhiSequence {
        phi_lspace(&self.semigroup())
    }

    pub fn upsilon(&self) -> PLFunction {
        upsilon_lspace(&self.semigroup())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Torus { p, q } => write!(f, "T({p},{q})"),
            Atom::Cable { p, q, a, b } => write!(f, "C(T({p},{q});{a},{b})"),
        }
    }
}

/// A formal integer combination of atoms, i.e. a connected sum of knots
/// and their mirrors up to concordance-invariant bookkeeping.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KnotExpression {
    terms: BTreeMap<Atom, i64>,
}

impl KnotExpression {
    pub fn unknot() -> Self {
        Self::default()
    }

    pub fn atom(atom: Atom) -> Self {
        Self::term(atom, 1)
    }

    pub fn term(atom: Atom, coeff: i64) -> Self {
        let mut e = Self::default();
        e.add_term(atom, coeff);
        e
    }

    /// `c · T(p, q)`; the unknot gives the empty expression.
    pub fn torus(p: i64, q: i64, coeff: i64) -> Result<Self> {
        Ok(Atom::torus(p, q)?.map_or_else(Self::unknot, |a| Self::term(a, coeff)))
    }

    pub fn add_term(&mut self, atom: Atom, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(atom).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&atom);
        }
    }

    pub fn is_unknot(&self) -> bool {
        self.terms.is_empty()
    }

    /// Atoms with their nonzero coefficients, in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Atom, i64)> + '_ {
        self.terms.iter().map(|(&a, &c)| (a, c))
    }

    pub fn scale(&self, n: i64) -> Self {
        if n == 0 {
            return Self::unknot();
        }
        KnotExpression { terms: self.terms.iter().map(|(&a, &c)| (a, n * c)).collect() }
    }

    pub fn phi(&self) -> PhiSequence {
        self.terms().fold(PhiSequence::zero(), |acc, (a, c)| acc + c * a.phi())
    }

    pub fn upsilon(&self) -> PLFunction {
        self.terms()
            .fold(PLFunction::zero(), |acc, (a, c)| &acc + &a.upsilon().scale(&int(c)))
    }
}

impl fmt::Display for KnotExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(a, c)| match c {
                1 => a.to_string(),
                -1 => format!("-{a}"),
                c => format!("{c}*{a}"),
            })
            .collect();
        write!(f, "{}", parts.join(" # "))
    }
}

impl Add for &KnotExpression {
    type Output = KnotExpression;
    fn add(self, rhs: &KnotExpression) -> KnotExpression {
        let mut out = self.clone();
        for (a, c) in rhs.terms() {
            out.add_term(a, c);
        }
        out
    }
}

impl Add for KnotExpression {
    type Output = KnotExpression;
    fn add(self, rhs: KnotExpression) -> KnotExpression {
        &self + &rhs
    }
}

impl Neg for &KnotExpression {
    type Output = KnotExpression;
    fn neg(self) -> KnotExpression {
        self.scale(-1)
    }
}

impl Neg for KnotExpression {
    type Output = KnotExpression;
    fn neg(self) -> KnotExpression {
        self.scale(-1)
    }
}

impl Sub for &KnotExpression {
    type Output = KnotExpression;
    fn sub(self, rhs: &KnotExpression) -> KnotExpression {
        self + &(-rhs)
    }
}

impl Sub for KnotExpression {
    type Output = KnotExpression;
    fn sub(self, rhs: KnotExpression) -> KnotExpression {
        &self - &rhs
    }
}
