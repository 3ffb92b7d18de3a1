use std::collections::BTreeSet;

use crate::error::{CoreError, Result};

use super::computad::Computad;
use super::path::{inverse_word, BigonTerm, PathTerm};

/// The free strict 2-groupoid on a computad, enumerated lazily.
///
/// 1-cells are reduced words and 2-cells are bigon terms up to exchange of independent
/// steps and cancellation of inverse steps.
#[derive(Debug, Clone, Copy)]
pub struct FreePath2Groupoid<'a> {
    pub cx: &'a Computad,
}

pub fn free_path_2groupoid(cx: &Computad) -> Result<FreePath2Groupoid<'_>> {
    cx.validate()?;
    Ok(FreePath2Groupoid { cx })
}

impl<'a> FreePath2Groupoid<'a> {
    pub fn id1(&self, x: usize) -> PathTerm {
        PathTerm::empty(x)
    }

    /// `q∘p`, with `p` traversed first.
    pub fn compose1(&self, p: &PathTerm, q: &PathTerm) -> Result<PathTerm> {
        p.then(self.cx, q)
    }

    pub fn inverse1(&self, p: &PathTerm) -> PathTerm {
        PathTerm { start: p.end(self.cx), letters: inverse_word(&p.letters) }
    }

    pub fn id2(&self, p: &PathTerm) -> BigonTerm {
        BigonTerm::identity(p.clone())
    }

    /// `b•a` in normal form.
    pub fn vcomp(&self, b: &BigonTerm, a: &BigonTerm) -> Result<BigonTerm> {
        Ok(a.vcomp(self.cx, b)?.normal_form(self.cx))
    }

    /// `b∘a` in normal form, with `a` on the first-traversed path.
    pub fn hcomp(&self, b: &BigonTerm, a: &BigonTerm) -> Result<BigonTerm> {
        Ok(a.hcomp(self.cx, b)?.normal_form(self.cx))
    }

    pub fn inverse2(&self, a: &BigonTerm) -> BigonTerm {
        a.inverse(self.cx).normal_form(self.cx)
    }

    /// Distinct 2-cells `src ⇒ tgt` realised by at most `max_steps` literal rewrite steps, in
    /// normal form and sorted.
    pub fn bigons_between(&self, src: &PathTerm, tgt: &PathTerm, max_steps: usize) -> Result<Vec<BigonTerm>> {
        if src.start != tgt.start || src.end(self.cx) != tgt.end(self.cx) {
            return Err(CoreError::typing("bigons_between", "paths are not co-terminal"));
        }
        let mut out = BTreeSet::new();
        let mut frontier = vec![BigonTerm::identity(src.clone())];
        for depth in 0..=max_steps {
            let mut next = Vec::new();
            for b in &frontier {
                let cur = b.target(self.cx);
                if cur == *tgt {
                    out.insert(b.normal_form(self.cx));
                }
                if depth == max_steps {
                    continue;
                }
                for s in self.cx.literal_steps(&cur.letters) {
                    let mut steps = b.steps.clone();
                    steps.push(s);
                    next.push(BigonTerm { source: b.source.clone(), steps });
                }
            }
            frontier = next;
        }
        Ok(out.into_iter().collect())
    }
}
