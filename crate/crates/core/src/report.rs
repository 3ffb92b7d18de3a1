use std::fmt;

/// One failed instance of an axiom or diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub kind: String,
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(
        kind: impl Into<String>,
        at: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Violation { kind: kind.into(), at: at.into(), lhs: lhs.into(), rhs: rhs.into() }
    }
}

/// Machine-readable line: `KIND@POINT lhs=CELL rhs=CELL`.
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{} lhs={} rhs={}", self.kind, self.at, self.lhs, self.rhs)
    }
}

/// Ordered collection of violations; empty means every checked instance holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
    limit: Option<usize>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// A report that stops accepting entries after `limit` violations.
    pub fn with_limit(limit: usize) -> Self {
        Report { violations: Vec::new(), limit: Some(limit) }
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn full(&self) -> bool {
        matches!(self.limit, Some(n) if self.violations.len() >= n)
    }

    pub fn push(&mut self, v: Violation) {
        if !self.full() {
            self.violations.push(v);
        }
    }

    pub fn add(
        &mut self,
        kind: impl Into<String>,
        at: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.push(Violation::new(kind, at, lhs, rhs));
    }

    pub fn extend(&mut self, other: Report) {
        for v in other.violations {
            self.push(v);
        }
    }

    /// Every violation whose kind equals `kind`.
    pub fn of_kind<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.kind == kind)
    }

    pub fn lines(&self) -> Vec<String> {
        self.violations.iter().map(|v| v.to_string()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}
