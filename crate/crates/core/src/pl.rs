//! Exact continuous piecewise linear functions on `[0, 2]`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A continuous function on `[0, 2]`, linear between consecutive
/// breakpoints.
///
/// Stored canonically: breakpoints strictly increase from 0 to 2 and no
/// interior breakpoint has equal left and right slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLFunction {
    points: Vec<(Rational, Rational)>,
}

impl PLFunction {
    pub fn zero() -> Self {
        PLFunction { points: vec![(int(0), int(0)), (int(2), int(0))] }
    }

    pub fn from_points(points: Vec<(Rational, Rational)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidPl("need at least two points"));
        }
        if points[0].0 != int(0) || points[points.len() - 1].0 != int(2) {
            return Err(Error::InvalidPl("domain must be exactly [0, 2]"));
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidPl("breakpoints must strictly increase"));
        }
        let mut f = PLFunction { points };
        f.canonicalize();
        Ok(f)
    }

    fn canonicalize(&mut self) {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.points.len());
        for pt in self.points.drain(..) {
            while out.len() >= 2 {
                let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
                let s1 = (&b.1 - &a.1) / (&b.0 - &a.0);
                let s2 = (&pt.1 - &b.1) / (&pt.0 - &b.0);
                if s1 == s2 {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(pt);
        }
        self.points = out;
    }

    /// `(t, f(t))` pairs including both endpoints.
    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn is_zero(&self) -> bool {
        self.points.iter().all(|(_, v)| v.is_zero())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let idx = self.points.partition_point(|(x, _)| x < t);
        if idx < self.points.len() && &self.points[idx].0 == t {
            return self.points[idx].1.clone();
        }
        let idx = idx.clamp(1, self.points.len() - 1);
        let (x0, y0) = &self.points[idx - 1];
        let (x1, y1) = &self.points[idx];
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    /// Slopes of the linear pieces, left to right.
    pub fn slopes(&self) -> Vec<Rational> {
        self.points
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
            .collect()
    }

    /// Interior breakpoints with their slope jumps (right minus left).
    /// Canonical form guarantees every jump is nonzero.
    pub fn singularities(&self) -> Vec<(Rational, Rational)> {
        let slopes = self.slopes();
        self.points[1..self.points.len() - 1]
            .iter()
            .zip(slopes.windows(2))
            .map(|((t, _), s)| (t.clone(), &s[1] - &s[0]))
            .collect()
    }

    /// Right slope minus left slope at an interior `t`; 0 off the breakpoints.
    pub fn delta_prime(&self, t: &Rational) -> Result<Rational> {
        if !t.is_positive() || t >= &int(2) {
            return Err(Error::OutOfDomain(t.to_string()));
        }
        Ok(self
            .singularities()
            .into_iter()
            .find(|(x, _)| x == t)
            .map_or_else(Rational::zero, |(_, jump)| jump))
    }

    /// Smallest interior breakpoint, if any.
    pub fn first_singularity(&self) -> Option<Rational> {
        (self.points.len() > 2).then(|| self.points[1].0.clone())
    }

    /// `t ↦ f(2 - t)`.
    pub fn reflect(&self) -> Self {
        let two = int(2);
        let points = self.points.iter().rev().map(|(t, v)| (&two - t, v.clone())).collect();
        PLFunction { points }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let points = self.points.iter().map(|(t, v)| (t.clone(), v * c)).collect();
        PLFunction { points }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "breakpoints": self.points.iter().map(|(t, _)| rational_to_json(t)).collect::<Vec<_>>(),
            "values": self.points.iter().map(|(_, v)| rational_to_json(v)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let list = |key: &str| -> Result<Vec<Rational>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or(Error::InvalidPl("missing breakpoints or values"))?
                .iter()
                .map(rational_from_json)
                .collect()
        };
        let ts = list("breakpoints")?;
        let vs = list("values")?;
        if ts.len() != vs.len() {
            return Err(Error::InvalidPl("breakpoints and values differ in length"));
        }
        Self::from_points(ts.into_iter().zip(vs).collect())
    }

    /// One `t_num,t_den,v_num,v_den` row per breakpoint, with header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t_num,t_den,v_num,v_den\n");
        for (t, v) in &self.points {
            out.push_str(&format!("{},{},{},{}\n", t.numer(), t.denom(), v.numer(), v.denom()));
        }
        out
    }
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.points.iter().map(|(t, v)| format!("({t}, {v})")).collect();
        write!(f, "{}", body.join(" "))
    }
}

fn pointwise(a: &PLFunction, b: &PLFunction, op: impl Fn(Rational, Rational) -> Rational) -> PLFunction {
    let mut ts: Vec<&Rational> = a.points.iter().chain(&b.points).map(|(t, _)| t).collect();
    ts.sort();
    ts.dedup();
    let points = ts.into_iter().map(|t| (t.clone(), op(a.eval(t), b.eval(t)))).collect();
    let mut f = PLFunction { points };
    f.canonicalize();
    f
}

impl Add for &PLFunction {
    type Output = PLFunction;
    fn add(self, rhs: &PLFunction) -> PLFunction {
        pointwise(self, rhs, |x, y| x + y)
    }
}

impl Sub for &PLFunction {
    type Output = PLFunction;
    fn sub(self, rhs: &PLFunction) -> PLFunction {
        pointwise(self, rhs, |x, y| x - y)
    }
}

impl Neg for &PLFunction {
    type Output = PLFunction;
    fn neg(self) -> PLFunction {
        self.scale(&-Rational::one())
    }
}

/// `[num, den]`, using JSON integers when they fit in 64 bits and decimal
/// strings otherwise.
pub fn rational_to_json(q: &Rational) -> Value {
    let part = |n: &BigInt| n.to_i64().map_or_else(|| Value::String(n.to_string()), Value::from);
    json!([part(q.numer()), part(q.denom())])
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let bad = || Error::InvalidPl("rational must be [num, den]");
    let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
    let part = |x: &Value| -> Result<BigInt> {
        match x {
            Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
            Value::String(s) => s.parse().map_err(|_| bad()),
            _ => Err(bad()),
        }
    };
    let den = part(&arr[1])?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(part(&arr[0])?, den))
}
