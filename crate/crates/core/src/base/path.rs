use std::fmt;

use crate::error::{CoreError, Result};

use super::computad::Computad;

/// An edge traversed forwards (`2e`) or backwards (`2e+1`).
pub type Letter = usize;

pub fn letter(edge: usize, inverse: bool) -> Letter {
    2 * edge + usize::from(inverse)
}
pub fn edge_of(l: Letter) -> usize {
    l / 2
}
pub fn is_inverse(l: Letter) -> bool {
    l % 2 == 1
}
pub fn inv_letter(l: Letter) -> Letter {
    l ^ 1
}

/// Freely reduces a letter sequence.
pub fn reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&inv_letter(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| w[1] != inv_letter(w[0]))
}

pub fn inverse_word(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|&l| inv_letter(l)).collect()
}

/// A reduced edge word starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTerm {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl PathTerm {
    pub fn empty(start: usize) -> Self {
        PathTerm { start, letters: Vec::new() }
    }

    /// Reduces `letters` and checks that they chain from `start`.
    pub fn new(cx: &Computad, start: usize, letters: &[Letter]) -> Result<Self> {
        cx.walk(start, letters)?;
        Ok(PathTerm { start, letters: reduce(letters) })
    }

    pub fn edge(cx: &Computad, e: usize) -> Self {
        PathTerm { start: cx.edges[e].src, letters: vec![letter(e, false)] }
    }

    pub fn end(&self, cx: &Computad) -> usize {
        cx.walk(self.start, &self.letters).expect("well-typed path")
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// `self` followed by `next`.
    pub fn then(&self, cx: &Computad, next: &PathTerm) -> Result<Self> {
        if self.end(cx) != next.start {
            return Err(CoreError::typing(
                format!("{}·{}", cx.word_label(&self.letters), cx.word_label(&next.letters)),
                "paths not composable",
            ));
        }
        let mut l = self.letters.clone();
        l.extend_from_slice(&next.letters);
        Ok(PathTerm { start: self.start, letters: reduce(&l) })
    }

    pub fn inverse(&self, cx: &Computad) -> Self {
        PathTerm { start: self.end(cx), letters: inverse_word(&self.letters) }
    }

    pub fn display<'a>(&'a self, cx: &'a Computad) -> impl fmt::Display + 'a {
        DisplayPath { p: self, cx }
    }
}

struct DisplayPath<'a> {
    p: &'a PathTerm,
    cx: &'a Computad,
}

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.letters.is_empty() {
            write!(f, "id[{}]", self.cx.vertices[self.p.start])
        } else {
            write!(f, "{}", self.cx.word_label(&self.p.letters))
        }
    }
}

/// One rewrite `p·S·q ⇝ p·T·q` by a face or its inverse, followed by free reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigonStep {
    pub prefix: Vec<Letter>,
    pub face: usize,
    pub inverse: bool,
    pub suffix: Vec<Letter>,
}

impl BigonStep {
    pub fn rewrite<'a>(&self, cx: &'a Computad) -> (&'a [Letter], &'a [Letter]) {
        let f = &cx.faces[self.face];
        if self.inverse {
            (&f.tgt.letters, &f.src.letters)
        } else {
            (&f.src.letters, &f.tgt.letters)
        }
    }

    fn concat(&self, mid: &[Letter]) -> Vec<Letter> {
        let mut w = self.prefix.clone();
        w.extend_from_slice(mid);
        w.extend_from_slice(&self.suffix);
        w
    }

    pub fn source(&self, cx: &Computad) -> Vec<Letter> {
        reduce(&self.concat(self.rewrite(cx).0))
    }

    pub fn target(&self, cx: &Computad) -> Vec<Letter> {
        reduce(&self.concat(self.rewrite(cx).1))
    }

    pub fn reversed(&self) -> Self {
        BigonStep { inverse: !self.inverse, ..self.clone() }
    }

    /// The rewrite window when both sides are literal concatenations.
    fn window(&self, cx: &Computad) -> Option<(usize, usize, usize)> {
        let (s, t) = self.rewrite(cx);
        (is_reduced(&self.concat(s)) && is_reduced(&self.concat(t))).then(|| {
            let p = self.prefix.len();
            (p, s.len(), t.len())
        })
    }
}

/// A sequence of rewrite steps starting at the reduced word `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigonTerm {
    pub source: PathTerm,
    pub steps: Vec<BigonStep>,
}

impl BigonTerm {
    pub fn identity(p: PathTerm) -> Self {
        BigonTerm { source: p, steps: Vec::new() }
    }

    /// The face generator `Σ: S ⇒ T` itself.
    pub fn face(cx: &Computad, face: usize) -> Self {
        let f = &cx.faces[face];
        BigonTerm {
            source: f.src.clone(),
            steps: vec![BigonStep { prefix: Vec::new(), face, inverse: false, suffix: Vec::new() }],
        }
    }

    pub fn new(cx: &Computad, source: PathTerm, steps: Vec<BigonStep>) -> Result<Self> {
        let b = BigonTerm { source, steps };
        b.typecheck(cx)?;
        Ok(b)
    }

    /// Every step must rewrite the current word.
    pub fn typecheck(&self, cx: &Computad) -> Result<()> {
        cx.walk(self.source.start, &self.source.letters)?;
        let mut cur = self.source.letters.clone();
        for (i, s) in self.steps.iter().enumerate() {
            if s.face >= cx.faces.len() {
                return Err(CoreError::typing(format!("step {i}"), "unknown face"));
            }
            let f = &cx.faces[s.face];
            let fs = if s.inverse { f.tgt.start } else { f.src.start };
            if cx.walk(self.source.start, &s.prefix).ok() != Some(fs) {
                return Err(CoreError::typing(format!("step {i}"), "prefix does not reach the face"));
            }
            if s.source(cx) != cur {
                return Err(CoreError::typing(
                    format!("step {i}"),
                    format!("expected source {}, found {}", cx.word_label(&cur), cx.word_label(&s.source(cx))),
                ));
            }
            cur = s.target(cx);
        }
        Ok(())
    }

    pub fn target(&self, cx: &Computad) -> PathTerm {
        match self.steps.last() {
            Some(s) => PathTerm { start: self.source.start, letters: s.target(cx) },
            None => self.source.clone(),
        }
    }

    /// `self` then `next`.
    pub fn vcomp(&self, cx: &Computad, next: &BigonTerm) -> Result<Self> {
        if self.target(cx) != next.source {
            return Err(CoreError::typing("bigon vcomp", "target and source differ"));
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Ok(BigonTerm { source: self.source.clone(), steps })
    }

    /// Horizontal composite: `self` on the first path, `next` on the following one.
    pub fn hcomp(&self, cx: &Computad, next: &BigonTerm) -> Result<Self> {
        let source = self.source.then(cx, &next.source)?;
        let w2 = &next.source.letters;
        let w1t = self.target(cx).letters;
        let mut steps: Vec<BigonStep> = self
            .steps
            .iter()
            .map(|s| {
                let mut q = s.suffix.clone();
                q.extend_from_slice(w2);
                BigonStep { suffix: reduce(&q), ..s.clone() }
            })
            .collect();
        steps.extend(next.steps.iter().map(|s| {
            let mut p = w1t.clone();
            p.extend_from_slice(&s.prefix);
            BigonStep { prefix: reduce(&p), ..s.clone() }
        }));
        Ok(BigonTerm { source, steps })
    }

    pub fn whisker(&self, cx: &Computad, left: &PathTerm, right: &PathTerm) -> Result<Self> {
        BigonTerm::identity(left.clone()).hcomp(cx, self)?.hcomp(cx, &BigonTerm::identity(right.clone()))
    }

    pub fn inverse(&self, cx: &Computad) -> Self {
        BigonTerm { source: self.target(cx), steps: self.steps.iter().rev().map(|s| s.reversed()).collect() }
    }

    /// Cancels adjacent inverse steps and sorts independent adjacent steps leftmost first.
    pub fn normal_form(&self, cx: &Computad) -> Self {
        let mut steps = self.steps.clone();
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < steps.len() {
                if steps[i + 1] == steps[i].reversed() {
                    steps.drain(i..i + 2);
                    changed = true;
                    i = i.saturating_sub(1);
                    continue;
                }
                if let Some((a, b)) = swap_if_right_of(cx, &steps[i], &steps[i + 1]) {
                    steps[i] = a;
                    steps[i + 1] = b;
                    changed = true;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        BigonTerm { source: self.source.clone(), steps }
    }

    /// Equality modulo exchange and cancellation of inverse steps.
    pub fn equivalent(&self, cx: &Computad, other: &BigonTerm) -> bool {
        self.source == other.source && self.normal_form(cx).steps == other.normal_form(cx).steps
    }
}

/// If `s2` (applied after `s1`) acts strictly left of `s1`'s window, returns the exchanged pair.
pub fn swap_if_right_of(cx: &Computad, s1: &BigonStep, s2: &BigonStep) -> Option<(BigonStep, BigonStep)> {
    let (p1, _, _) = s1.window(cx)?;
    let (p2, s2len, _) = s2.window(cx)?;
    // Intermediate word: s1's target window sits at [p1, p1+t1), s2's source window at [p2, p2+s2len).
    if p2 + s2len > p1 {
        return None;
    }
    let (src1, _) = s1.rewrite(cx);
    let (_, tgt2) = s2.rewrite(cx);
    // Word = A X B Y C with X = s2's window (left), Y = s1's target (right).
    let a = &s2.prefix[..];
    let b: Vec<Letter> = s1.prefix[p2 + s2len..].to_vec();
    let c = &s1.suffix[..];
    let mut new2_suffix = b.clone();
    new2_suffix.extend_from_slice(src1);
    new2_suffix.extend_from_slice(c);
    let first = BigonStep { prefix: a.to_vec(), face: s2.face, inverse: s2.inverse, suffix: new2_suffix };
    let mut new1_prefix = a.to_vec();
    new1_prefix.extend_from_slice(tgt2);
    new1_prefix.extend_from_slice(&b);
    let second = BigonStep { prefix: new1_prefix, face: s1.face, inverse: s1.inverse, suffix: c.to_vec() };
    first.window(cx)?;
    second.window(cx)?;
    Some((first, second))
}

impl BigonTerm {
    pub fn display<'a>(&'a self, cx: &'a Computad) -> impl fmt::Display + 'a {
        DisplayBigon { b: self, cx }
    }
}

struct DisplayBigon<'a> {
    b: &'a BigonTerm,
    cx: &'a Computad,
}

impl fmt::Display for DisplayBigon<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.steps.is_empty() {
            return write!(f, "id2[{}]", self.b.source.display(self.cx));
        }
        for (i, s) in self.b.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let name = &self.cx.faces[s.face].label;
            write!(
                f,
                "{}<{}{}>{}",
                self.cx.word_label(&s.prefix),
                name,
                if s.inverse { "^-1" } else { "" },
                self.cx.word_label(&s.suffix)
            )?;
        }
        Ok(())
    }
}
