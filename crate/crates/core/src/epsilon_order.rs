//! Partial comparison of ε-equivalence classes of staircase complexes.
//!
//! Write `g ≪ h` when `n·g < h` for every natural `n`. Two comparison rules
//! are available for staircase classes `[b] = [b_1, ..., b_{2m}]`:
//!
//! * first entry: `b_1 > b'_1` gives `[b] ≪ [b']`;
//! * second entry: `b_1 = b'_1` and `b_2 > b'_2` gives `[b] ≫ [b']`.
//!
//! Anything those rules do not decide is reported as [`CompareResult::Unknown`].
//! Torus-knot classes split off copies of `[1, n, n, 1]` from the front and
//! back of their staircase, leaving a core that is carried as a symbolic
//! remainder `O` with `|O| ≪ bound`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::knot_algebra::{Atom, KnotExpression};
use crate::staircase::{staircase_from_semigroup, torus_staircase, Staircase};

/// The class `[b_1, ..., b_{2m}]` of `St(b)`; the empty vector is the zero class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BracketClass {
    b: Vec<i64>,
}

impl BracketClass {
    pub fn new(b: Vec<i64>) -> Result<Self> {
        Ok(Staircase::new(b)?.into())
    }

    pub fn zero() -> Self {
        BracketClass { b: Vec::new() }
    }

    /// `[1, n, n, 1]`.
    pub fn pattern(n: i64) -> Self {
        BracketClass { b: vec![1, n, n, 1] }
    }

    pub fn steps(&self) -> &[i64] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_empty()
    }
}

impl From<Staircase> for BracketClass {
    fn from(st: Staircase) -> Self {
        BracketClass { b: st.steps().to_vec() }
    }
}

impl fmt::Display for BracketClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.b.iter().map(i64::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CompareResult {
    MuchLess,
    MuchGreater,
    Equal,
    Unknown,
}

impl CompareResult {
    pub fn flip(self) -> Self {
        match self {
            CompareResult::MuchLess => CompareResult::MuchGreater,
            CompareResult::MuchGreater => CompareResult::MuchLess,
            other => other,
        }
    }
}

impl fmt::Display for CompareResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompareResult::MuchLess => "<<",
            CompareResult::MuchGreater => ">>",
            CompareResult::Equal => "==",
            CompareResult::Unknown => "?",
        })
    }
}

/// Name of the rule that decides a bracket comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Identity,
    FirstEntry,
    SecondEntry,
    Undecided,
}

/// Splits `b = k·[1, n, n, 1] + [core]`: strips the longest run of `(1, n)`
/// pairs from the front together with the mirrored `(n, 1)` pairs from the
/// back. Every core entry must be at most `n`.
pub fn split_prefix(b: &BracketClass, n: i64) -> Result<(i64, BracketClass)> {
    if n < 1 {
        return Err(Error::Precondition(format!("split base must be positive, got {n}")));
    }
    let s = &b.b;
    let mut k = 0;
    while 4 * (k + 1) <= s.len() && s[2 * k] == 1 && s[2 * k + 1] == n {
        k += 1;
    }
    let core = s[2 * k..s.len() - 2 * k].to_vec();
    if let Some(&entry) = core.iter().find(|&&x| x > n) {
        return Err(Error::SplitInapplicable { entry, bound: n });
    }
    Ok((k as i64, BracketClass { b: core }))
}

/// Compares two single classes, returning the verdict and the rule used.
pub fn compare_brackets_with_rule(x: &BracketClass, y: &BracketClass) -> (CompareResult, Rule) {
    if x == y {
        return (CompareResult::Equal, Rule::Identity);
    }
    let (a, b) = (&x.b, &y.b);
    if a.is_empty() || b.is_empty() {
        return (CompareResult::Unknown, Rule::Undecided);
    }
    if a[0] != b[0] {
        let r = if a[0] > b[0] { CompareResult::MuchLess } else { CompareResult::MuchGreater };
        return (r, Rule::FirstEntry);
    }
    if a[1] != b[1] {
        let r = if a[1] > b[1] { CompareResult::MuchGreater } else { CompareResult::MuchLess };
        return (r, Rule::SecondEntry);
    }
    (CompareResult::Unknown, Rule::Undecided)
}

pub fn compare_brackets(x: &BracketClass, y: &BracketClass) -> CompareResult {
    compare_brackets_with_rule(x, y).0
}

/// An unknown class `O` known only through `|O| ≪ bound`, together with the
/// formal combination of split cores it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remainder {
    pub bound: BracketClass,
    pub parts: BTreeMap<BracketClass, i64>,
}

/// `Σ c_i [b_i] + O`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassExpr {
    terms: BTreeMap<BracketClass, i64>,
    remainder: Option<Remainder>,
}

fn add_into(map: &mut BTreeMap<BracketClass, i64>, class: &BracketClass, coeff: i64) {
    if coeff == 0 || class.is_zero() {
        return;
    }
    let c = map.entry(class.clone()).or_insert(0);
    *c += coeff;
    if *c == 0 {
        map.remove(class);
    }
}

impl ClassExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(class: BracketClass, coeff: i64) -> Self {
        let mut e = Self::default();
        add_into(&mut e.terms, &class, coeff);
        e
    }

    pub fn with_remainder(mut self, core: BracketClass, bound: BracketClass) -> Result<Self> {
        if core.is_zero() {
            return Ok(self);
        }
        let mut parts = BTreeMap::new();
        add_into(&mut parts, &core, 1);
        let r = ClassExpr { terms: BTreeMap::new(), remainder: Some(Remainder { bound, parts }) };
        self = self.add(&r)?;
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BracketClass, i64)> + '_ {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn remainder(&self) -> Option<&Remainder> {
        self.remainder.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.remainder.is_none()
    }

    pub fn coefficient(&self, class: &BracketClass) -> i64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn scale(&self, n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let scale_map = |m: &BTreeMap<BracketClass, i64>| m.iter().map(|(b, &c)| (b.clone(), n * c)).collect();
        ClassExpr {
            terms: scale_map(&self.terms),
            remainder: self
                .remainder
                .as_ref()
                .map(|r| Remainder { bound: r.bound.clone(), parts: scale_map(&r.parts) }),
        }
    }

    /// Sum of two expressions. Remainders merge under the larger of the two
    /// bounds, which must be comparable.
    pub fn add(&self, other: &ClassExpr) -> Result<Self> {
        let mut terms = self.terms.clone();
        for (b, c) in other.terms() {
            add_into(&mut terms, b, c);
        }
        let remainder = match (&self.remainder, &other.remainder) {
            (None, r) | (r, None) => r.clone(),
            (Some(a), Some(b)) => {
                let bound = match compare_brackets(&a.bound, &b.bound) {
                    CompareResult::MuchLess => b.bound.clone(),
                    CompareResult::MuchGreater | CompareResult::Equal => a.bound.clone(),
                    CompareResult::Unknown => {
                        return Err(Error::Precondition(format!(
                            "remainder bounds {} and {} are not comparable",
                            a.bound, b.bound
                        )))
                    }
                };
                let mut parts = a.parts.clone();
                for (p, &c) in &b.parts {
                    add_into(&mut parts, p, c);
                }
                (!parts.is_empty()).then_some(Remainder { bound, parts })
            }
        };
        Ok(ClassExpr { terms, remainder })
    }

    /// The term `D` with every other term `≪ D` and remainder bound `≪ D` or
    /// equal to `D`, if there is one.
    pub fn dominant(&self) -> Option<(&BracketClass, i64)> {
        self.terms().find(|&(d, _)| {
            self.terms.keys().all(|b| b == d || compare_brackets(b, d) == CompareResult::MuchLess)
                && self.remainder.as_ref().is_none_or(|r| {
                    matches!(compare_brackets(&r.bound, d), CompareResult::MuchLess | CompareResult::Equal)
                })
        })
    }

    pub fn to_json(&self) -> Value {
        let map = |m: &BTreeMap<BracketClass, i64>| {
            m.iter().map(|(b, c)| json!({"class": b, "coeff": c})).collect::<Vec<_>>()
        };
        json!({
            "terms": map(&self.terms),
            "remainder": self.remainder.as_ref().map(|r| json!({"bound": r.bound, "parts": map(&r.parts)})),
        })
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.terms().map(|(b, c)| format!("{c}{b}")).collect();
        if let Some(r) = &self.remainder {
            parts.push(format!("O(|O| << {})", r.bound));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn compare_with_rule(x: &ClassExpr, y: &ClassExpr) -> (CompareResult, Rule) {
    if x == y {
        return (CompareResult::Equal, Rule::Identity);
    }
    match (x.dominant(), y.dominant()) {
        (Some((dx, cx)), Some((dy, cy))) if cx > 0 && cy > 0 => match compare_brackets_with_rule(dx, dy) {
            (r @ (CompareResult::MuchLess | CompareResult::MuchGreater), rule) => (r, rule),
            _ => (CompareResult::Unknown, Rule::Undecided),
        },
        _ => (CompareResult::Unknown, Rule::Undecided),
    }
}

/// Compares two classes through their positive dominant terms.
pub fn compare(x: &ClassExpr, y: &ClassExpr) -> CompareResult {
    compare_with_rule(x, y).0
}

/// `[[T(p, q)]] = k[1, p-1, p-1, 1] + O` with `|O| ≪ [1, r, r, 1]`, where
/// `q = kp + r`. For `p = 2` the class is the exact all-ones bracket.
pub fn torus_class(p: i64, q: i64) -> Result<ClassExpr> {
    let st = torus_staircase(p, q)?;
    let (p, q) = (p.min(q), p.max(q));
    if p == 1 {
        return Ok(ClassExpr::zero());
    }
    let b = BracketClass::from(st);
    if p == 2 {
        return Ok(ClassExpr::term(b, 1));
    }
    let (k, core) = split_prefix(&b, p - 1)?;
    let r = q.mod_floor(&p);
    ClassExpr::term(BracketClass::pattern(p - 1), k).with_remainder(core, BracketClass::pattern(r))
}

fn atom_class(atom: &Atom) -> Result<ClassExpr> {
    match *atom {
        Atom::Torus { p, q } => torus_class(p, q),
        Atom::Cable { .. } => Ok(ClassExpr::term(staircase_from_semigroup(&atom.semigroup())?.into(), 1)),
    }
}

/// `Σ c·[[atom]]` over the terms of `e`.
pub fn class_of_expression(e: &KnotExpression) -> Result<ClassExpr> {
    e.terms()
        .try_fold(ClassExpr::zero(), |acc, (a, c)| acc.add(&atom_class(&a)?.scale(c)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub index: usize,
    pub left: String,
    pub right: String,
    pub left_dominant: Option<BracketClass>,
    pub right_dominant: Option<BracketClass>,
    pub result: CompareResult,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub steps: Vec<ChainStep>,
    pub certified: bool,
    /// First index `i` for which `g_i ≪ g_{i+1}` could not be established.
    pub failing_index: Option<usize>,
    pub conclusion: String,
}

impl ChainCertificate {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

/// Attempts to certify `g_1 ≪ g_2 ≪ ... ≪ g_n`.
pub fn dominance_chain(exprs: &[ClassExpr]) -> ChainCertificate {
    let mut steps = Vec::new();
    let mut failing_index = None;
    for (i, w) in exprs.windows(2).enumerate() {
        let (result, rule) = compare_with_rule(&w[0], &w[1]);
        steps.push(ChainStep {
            index: i,
            left: w[0].to_string(),
            right: w[1].to_string(),
            left_dominant: w[0].dominant().map(|(d, _)| d.clone()),
            right_dominant: w[1].dominant().map(|(d, _)| d.clone()),
            result,
            rule,
        });
        if result != CompareResult::MuchLess && failing_index.is_none() {
            failing_index = Some(i);
        }
    }
    let certified = failing_index.is_none();
    let conclusion = if certified {
        format!("strict chain of {} classes; a strictly <<-increasing sequence is linearly independent", exprs.len())
    } else {
        "unknown".to_string()
    };
    ChainCertificate { steps, certified, failing_index, conclusion }
}
