use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::KnotExpression;
use crate::error::{Error, Result};
use crate::phi::n_invariant;
use crate::pl::{int, rat, rational_from_json, rational_to_json, PLFunction, Rational};
use crate::semigroup::PhiSequence;
use crate::upsilon::{lambda, t_invariant, xi};

/// A homomorphism from the concordance group to `Q` used as a column of an
/// independence matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hom {
    Lambda(i64),
    Xi(i64),
    /// `sign · φ_j`, with `sign` either `1` or `-1`.
    PhiEntry { j: usize, sign: i64 },
}

impl Hom {
    fn needs_upsilon(&self) -> bool {
        !matches!(self, Hom::PhiEntry { .. })
    }

    fn eval(&self, phi: Option<&PhiSequence>, ups: Option<&PLFunction>) -> Result<Rational> {
        match *self {
            Hom::Lambda(j) => lambda(ups.expect("upsilon evaluated"), j),
            Hom::Xi(p) => xi(ups.expect("upsilon evaluated"), p),
            Hom::PhiEntry { j, sign } => Ok(int(sign * phi.expect("phi evaluated").get(j))),
        }
    }

    pub fn evaluate(&self, e: &KnotExpression) -> Result<Rational> {
        if self.needs_upsilon() {
            self.eval(None, Some(&e.upsilon()))
        } else {
            self.eval(Some(&e.phi()), None)
        }
    }
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hom::Lambda(j) => write!(f, "lambda_{j}"),
            Hom::Xi(p) => write!(f, "xi_{p}"),
            Hom::PhiEntry { j, sign: 1 } => write!(f, "phi_{j}"),
            Hom::PhiEntry { j, .. } => write!(f, "-phi_{j}"),
        }
    }
}

impl FromStr for Hom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown homomorphism label `{s}`"));
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (name, index) = body.split_once('_').ok_or_else(bad)?;
        let n: i64 = index.parse().map_err(|_| bad())?;
        match (neg, name) {
            (false, "lambda") if n >= 1 => Ok(Hom::Lambda(n)),
            (false, "xi") if n >= 2 => Ok(Hom::Xi(n)),
            (_, "phi") if n >= 1 => Ok(Hom::PhiEntry { j: n as usize, sign: if neg { -1 } else { 1 } }),
            _ => Err(bad()),
        }
    }
}

/// Evaluation matrix `M[i][h] = hom_h(K_i)` together with the verdict of the
/// triangularity test, in the given row and column order.
#[derive(Clone, Debug, PartialEq)]
pub struct IndependenceCertificate {
    pub knots: Vec<String>,
    pub homs: Vec<String>,
    pub matrix: Vec<Vec<Rational>>,
    pub verdict: bool,
}

fn triangular(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    matrix.iter().enumerate().all(|(i, row)| {
        row.len() == n && !row[i].is_zero() && row[i + 1..].iter().all(Zero::is_zero)
    })
}

pub fn independence_certificate(knots: &[KnotExpression], homs: &[Hom]) -> Result<IndependenceCertificate> {
    if knots.len() != homs.len() {
        return Err(Error::Precondition(format!(
            "{} knots but {} homomorphisms",
            knots.len(),
            homs.len()
        )));
    }
    let want_ups = homs.iter().any(Hom::needs_upsilon);
    let want_phi = homs.iter().any(|h| !h.needs_upsilon());
    let matrix = knots
        .iter()
        .map(|k| {
            let ups = want_ups.then(|| k.upsilon());
            let phi = want_phi.then(|| k.phi());
            homs.iter().map(|h| h.eval(phi.as_ref(), ups.as_ref())).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IndependenceCertificate {
        knots: knots.iter().map(ToString::to_string).collect(),
        homs: homs.iter().map(ToString::to_string).collect(),
        verdict: triangular(&matrix),
        matrix,
    })
}

impl IndependenceCertificate {
    /// `{knots, homs, matrix: [[[num, den], ...], ...], verdict}`.
    pub fn to_json(&self) -> Value {
        json!({
            "knots": self.knots,
            "homs": self.homs,
            "matrix": self.matrix.iter().map(|row| row.iter().map(rational_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "verdict": self.verdict,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let strings = |key: &str| -> Result<Vec<String>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Certificate(format!("missing `{key}` list")))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Certificate(format!("`{key}` entry {s} is not a string")))
                })
                .collect()
        };
        let rows = v
            .get("matrix")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Certificate("missing `matrix`".into()))?;
        let matrix = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Certificate("matrix row is not a list".into()))?
                    .iter()
                    .map(|q| rational_from_json(q).map_err(|e| Error::Certificate(e.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let verdict = v
            .get("verdict")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Certificate("missing `verdict`".into()))?;
        Ok(IndependenceCertificate { knots: strings("knots")?, homs: strings("homs")?, matrix, verdict })
    }

    /// Re-parses every knot and label, re-evaluates the matrix and checks
    /// that it and the verdict agree with what is recorded.
    pub fn recheck(&self) -> Result<bool> {
        let knots = self
            .knots
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<KnotExpression>>>()?;
        let homs = self.homs.iter().map(|s| s.parse()).collect::<Result<Vec<Hom>>>()?;
        let fresh = independence_certificate(&knots, &homs)?;
        Ok(fresh.matrix == self.matrix && fresh.verdict == self.verdict && triangular(&self.matrix) == self.verdict)
    }

    /// True when every matrix entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.matrix.iter().flatten().all(|q| q.denom().is_one())
    }
}

/// Lower bounds for the splitting concordance genus: `N(K)/2` and `T(K)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusBounds {
    pub half_n: Rational,
    pub t_bound: Rational,
}

pub fn genus_bounds(e: &KnotExpression) -> GenusBounds {
    GenusBounds {
        half_n: rat(n_invariant(&e.phi()) as i64, 2),
        t_bound: t_invariant(&e.upsilon()),
    }
}
