use std::fmt;

use crate::error::{CoreError, Result};

pub const HEADER: &str = "twofun";
pub const VERSION: u32 = 1;

/// `  key words = value tokens`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: Vec<String>,
    pub values: Vec<String>,
    pub line: usize,
}

impl Entry {
    pub fn new(key: &[&str], values: Vec<String>) -> Self {
        Entry { key: key.iter().map(|s| s.to_string()).collect(), values, line: 0 }
    }
}

/// `kind name` followed by indented entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub kind: String,
    pub name: String,
    pub entries: Vec<Entry>,
    pub line: usize,
}

impl Section {
    pub fn new(kind: &str, name: &str) -> Self {
        Section { kind: kind.into(), name: name.into(), entries: Vec::new(), line: 0 }
    }

    pub fn push(&mut self, key: &[&str], values: Vec<String>) {
        self.entries.push(Entry::new(key, values));
    }

    pub fn push1(&mut self, key: &[&str], value: impl Into<String>) {
        self.entries.push(Entry::new(key, vec![value.into()]));
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> CoreError {
        CoreError::Parse { line: if line == 0 { self.line } else { line }, column: 1, msg: format!("{} `{}`: {}", self.kind, self.name, msg.into()) }
    }

    /// Every entry whose key starts with `head`, in order.
    pub fn with_head<'a>(&'a self, head: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.key.first().map(String::as_str) == Some(head))
    }

    pub fn get(&self, key: &[&str]) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key.iter().map(String::as_str).eq(key.iter().copied()))
    }

    pub fn values(&self, key: &[&str]) -> Result<&[String]> {
        self.get(key).map(|e| e.values.as_slice()).ok_or_else(|| self.err(0, format!("missing entry `{}`", key.join(" "))))
    }

    pub fn single(&self, key: &[&str]) -> Result<&str> {
        let e = self.get(key).ok_or_else(|| self.err(0, format!("missing entry `{}`", key.join(" "))))?;
        match e.values.as_slice() {
            [v] => Ok(v),
            _ => Err(self.err(e.line, format!("`{}` takes exactly one value", key.join(" ")))),
        }
    }

    pub fn entry_error(&self, e: &Entry, msg: impl Into<String>) -> CoreError {
        self.err(e.line, msg)
    }
}

/// A versioned list of sections.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub sections: Vec<Section>,
}

fn perr(line: usize, column: usize, msg: impl Into<String>) -> CoreError {
    CoreError::Parse { line, column, msg: msg.into() }
}

impl Document {
    /// Parses the text form; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        let (n, first) = lines.next().ok_or_else(|| perr(1, 1, "empty document; expected `twofun 1`"))?;
        let mut head = first.split_whitespace();
        if head.next() != Some(HEADER) {
            return Err(perr(n, 1, "expected the header `twofun <version>`"));
        }
        match head.next().map(str::parse::<u32>) {
            Some(Ok(VERSION)) if head.next().is_none() => {}
            Some(Ok(v)) if head.next().is_none() => return Err(perr(n, 8, format!("unsupported version {v}"))),
            _ => return Err(perr(n, 8, "malformed version")),
        }
        let mut doc = Document::default();
        for (n, line) in lines {
            if line.starts_with(char::is_whitespace) {
                let sec = doc.sections.last_mut().ok_or_else(|| perr(n, 1, "entry outside a section"))?;
                let body = line.trim_start();
                let col = line.len() - body.len() + 1;
                let mut toks = body.split_whitespace();
                let mut key = Vec::new();
                loop {
                    match toks.next() {
                        Some("=") => break,
                        Some(t) => key.push(t.to_string()),
                        None => return Err(perr(n, col, "expected `key = values`")),
                    }
                }
                if key.is_empty() {
                    return Err(perr(n, col, "empty key"));
                }
                sec.entries.push(Entry { key, values: toks.map(str::to_string).collect(), line: n });
            } else {
                let toks: Vec<&str> = line.split_whitespace().collect();
                match toks.as_slice() {
                    [kind, name] => doc.sections.push(Section { kind: kind.to_string(), name: name.to_string(), entries: Vec::new(), line: n }),
                    _ => return Err(perr(n, 1, "expected a section header `kind name`")),
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for s in &doc.sections {
            if !seen.insert(&s.name) {
                return Err(perr(s.line, 1, format!("duplicate name `{}`", s.name)));
            }
        }
        Ok(doc)
    }

    pub fn find(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }
}

/// The canonical text form: header, a blank line before each section, two-space entries.
impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER} {VERSION}")?;
        for s in &self.sections {
            writeln!(f)?;
            writeln!(f, "{} {}", s.kind, s.name)?;
            for e in &s.entries {
                write!(f, "  {} =", e.key.join(" "))?;
                for v in &e.values {
                    write!(f, " {v}")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
