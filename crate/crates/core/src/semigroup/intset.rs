use std::fmt;

/// A subset of the integers that is a finite set with optional infinite tails.
///
/// `lower = Some(l)` adds every integer `<= l`, `upper = Some(u)` adds every
/// integer `>= u`. Values are always canonical: explicit members lie strictly
/// between the tails and never touch them, so structural equality is set
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSet {
    lower: Option<i64>,
    members: Vec<i64>,
    upper: Option<i64>,
}

impl IntSet {
    pub fn new(lower: Option<i64>, members: impl IntoIterator<Item = i64>, upper: Option<i64>) -> Self {
        let mut members: Vec<i64> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let mut set = IntSet { lower, members, upper };
        set.canonicalize();
        set
    }

    pub fn finite(members: impl IntoIterator<Item = i64>) -> Self {
        Self::new(None, members, None)
    }

    /// `members ∪ [start, ∞)`.
    pub fn with_upper_tail(members: impl IntoIterator<Item = i64>, start: i64) -> Self {
        Self::new(None, members, Some(start))
    }

    /// `(-∞, end] ∪ members`.
    pub fn with_lower_tail(end: i64, members: impl IntoIterator<Item = i64>) -> Self {
        Self::new(Some(end), members, None)
    }

    pub fn integers() -> Self {
        IntSet { lower: Some(-1), members: Vec::new(), upper: Some(0) }
    }

    fn canonicalize(&mut self) {
        if let (Some(l), Some(u)) = (self.lower, self.upper) {
            if l + 1 >= u {
                *self = Self::integers();
                return;
            }
        }
        if let Some(u) = self.upper {
            self.members.retain(|&m| m < u);
            let mut u = u;
            while self.members.last() == Some(&(u - 1)) {
                self.members.pop();
                u -= 1;
            }
            self.upper = Some(u);
        }
        if let Some(l) = self.lower {
            self.members.retain(|&m| m > l);
            let mut l = l;
            let mut skip = 0;
            while self.members.get(skip) == Some(&(l + 1)) {
                skip += 1;
                l += 1;
            }
            self.members.drain(..skip);
            self.lower = Some(l);
        }
        if let (Some(l), Some(u)) = (self.lower, self.upper) {
            if l + 1 >= u {
                *self = Self::integers();
            }
        }
    }

    pub fn lower_tail(&self) -> Option<i64> {
        self.lower
    }

    pub fn upper_tail(&self) -> Option<i64> {
        self.upper
    }

    /// Explicit members strictly between the tails, sorted.
    pub fn explicit(&self) -> &[i64] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_none() && self.upper.is_none() && self.members.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lower.is_some_and(|l| n <= l)
            || self.upper.is_some_and(|u| n >= u)
            || self.members.binary_search(&n).is_ok()
    }

    /// `b + A`.
    pub fn translate(&self, b: i64) -> Self {
        Self::new(
            self.lower.map(|l| l + b),
            self.members.iter().map(|m| m + b),
            self.upper.map(|u| u + b),
        )
    }

    /// `b - A`.
    pub fn reflect(&self, b: i64) -> Self {
        Self::new(
            self.upper.map(|u| b - u),
            self.members.iter().map(|m| b - m),
            self.lower.map(|l| b - l),
        )
    }

    /// `A ∩ [lo, hi]`, where `None` leaves that side unbounded.
    pub fn restrict(&self, lo: Option<i64>, hi: Option<i64>) -> Self {
        let in_range = |n: i64| lo.is_none_or(|lo| n >= lo) && hi.is_none_or(|hi| n <= hi);
        let mut members: Vec<i64> = self.members.iter().copied().filter(|&m| in_range(m)).collect();
        let mut lower = None;
        let mut upper = None;
        if let Some(l) = self.lower {
            match lo {
                None => lower = Some(hi.map_or(l, |hi| l.min(hi))),
                Some(lo) => members.extend(lo..=hi.map_or(l, |hi| l.min(hi))),
            }
        }
        if let Some(u) = self.upper {
            match hi {
                None => upper = Some(lo.map_or(u, |lo| u.max(lo))),
                Some(hi) => members.extend(lo.map_or(u, |lo| u.max(lo))..=hi),
            }
        }
        Self::new(lower, members, upper)
    }

    /// The points that bound gap runs: the largest element of the lower
    /// tail, every explicit member, and the first element of the upper tail.
    pub(crate) fn anchors(&self) -> impl Iterator<Item = i64> + '_ {
        self.lower.into_iter().chain(self.members.iter().copied()).chain(self.upper)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(l) = self.lower {
            parts.push(format!("Z<={l}"));
        }
        if !self.members.is_empty() || parts.is_empty() && self.upper.is_none() {
            let body: Vec<String> = self.members.iter().map(i64::to_string).collect();
            parts.push(format!("{{{}}}", body.join(",")));
        }
        if let Some(u) = self.upper {
            parts.push(format!("Z>={u}"));
        }
        write!(f, "{}", parts.join(" ∪ "))
    }
}
