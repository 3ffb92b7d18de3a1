use crate::base::path::{edge_of, inv_letter, is_inverse, letter};
use crate::base::PathTerm;
use crate::error::{CoreError, Result};

use super::term::{Atom, CTerm1, CTerm2, Codescent};

/// Rewrites a 1-term in place while accumulating the 2-term that performs the rewrites.
pub struct Rewriter<'c, 'a> {
    cd: &'c Codescent<'a>,
    pub cur: CTerm1,
    pub acc: CTerm2,
}

impl<'c, 'a> Rewriter<'c, 'a> {
    pub fn new(cd: &'c Codescent<'a>, l: CTerm1) -> Self {
        Rewriter { cd, acc: CTerm2::Id(l.clone()), cur: l }
    }

    /// The vertex of `Y` before atom `pos`.
    pub fn vertex_at(&self, pos: usize) -> usize {
        if pos == 0 {
            self.cur.start
        } else {
            self.cd.atom_tgt(&self.cur.atoms[pos - 1])
        }
    }

    /// Replaces `atoms[pos..pos+len]` by the target of `cell`, whose source must match.
    pub fn apply(&mut self, pos: usize, len: usize, cell: CTerm2) -> Result<()> {
        let (src, tgt) = self.cd.boundary(&cell)?;
        let at = self.vertex_at(pos);
        if src.start != at || src.atoms[..] != self.cur.atoms[pos..pos + len] {
            return Err(CoreError::typing(
                format!("rewrite at {pos}"),
                format!("{} does not match {}", self.cd.show1(&src), self.cd.show1(&self.cur)),
            ));
        }
        let prefix = CTerm1 { start: self.cur.start, atoms: self.cur.atoms[..pos].to_vec() };
        let suffix_start = if pos + len < self.cur.atoms.len() { self.cd.atom_src(&self.cur.atoms[pos + len]) } else { at };
        let suffix = CTerm1 { start: suffix_start, atoms: self.cur.atoms[pos + len..].to_vec() };
        let whiskered = self.cd.whisker(&prefix, cell, &suffix);
        self.acc = CTerm2::v(std::mem::replace(&mut self.acc, CTerm2::Id(CTerm1::id(0))), whiskered);
        self.cur.atoms.splice(pos..pos + len, tgt.atoms);
        Ok(())
    }

    pub fn finish(self) -> (CTerm1, CTerm2) {
        (self.cur, self.acc)
    }
}

impl<'a> Codescent<'a> {
    fn jump_only(&self, l: &CTerm1) -> Result<usize> {
        let mut base = None;
        for a in &l.atoms {
            match a {
                Atom::Jump(al) => {
                    let (_, _, x) = self.split2(*al);
                    if base.is_some_and(|b| b != x) {
                        return Err(CoreError::typing(self.show1(l), "jumps over different base points"));
                    }
                    base = Some(x);
                }
                Atom::Path(_) => return Err(CoreError::typing(self.show1(l), "not a jump word")),
            }
        }
        Ok(base.unwrap_or_else(|| self.split(l.start).1))
    }

    /// `w ⇒ [(u₀,u_m)]`: cancels adjacent inverse jumps, then folds from the left.
    pub fn fold_jumps(&self, w: &CTerm1) -> Result<CTerm2> {
        let x = self.jump_only(w)?;
        let mut rw = Rewriter::new(self, w.clone());
        let patch = |a: &Atom| match a {
            Atom::Jump(al) => {
                let (i, j, _) = self.split2(*al);
                (i, j)
            }
            Atom::Path(_) => unreachable!(),
        };
        while let Some(k) = (0..rw.cur.atoms.len().saturating_sub(1)).find(|&k| {
            let (u, v) = patch(&rw.cur.atoms[k]);
            patch(&rw.cur.atoms[k + 1]) == (v, u)
        }) {
            let (u, v) = patch(&rw.cur.atoms[k]);
            rw.apply(k, 2, CTerm2::Xi { point: self.triple(u, v, u, x), inv: false })?;
            rw.apply(k, 1, CTerm2::DeltaA { point: self.pt(u, x), inv: true })?;
        }
        while rw.cur.atoms.len() >= 2 {
            let (u0, u1) = patch(&rw.cur.atoms[0]);
            let (_, u2) = patch(&rw.cur.atoms[1]);
            rw.apply(0, 2, CTerm2::Xi { point: self.triple(u0, u1, u2, x), inv: false })?;
        }
        if rw.cur.atoms.is_empty() {
            rw.apply(0, 0, CTerm2::DeltaA { point: w.start, inv: false })?;
        }
        Ok(rw.acc)
    }

    /// The unique 2-morphism between two jump words with the same endpoints, as the direct
    /// fold of the source followed by the inverse fold of the target.
    pub fn normalize_jump_hom(&self, src: &CTerm1, tgt: &CTerm1) -> Result<CTerm2> {
        let (xs, xt) = (self.jump_only(src)?, self.jump_only(tgt)?);
        if xs != xt || src.start != tgt.start || self.end(src)? != self.end(tgt)? {
            return Err(CoreError::typing(
                format!("{} ⇒ {}", self.show1(src), self.show1(tgt)),
                "jump words do not share endpoints",
            ));
        }
        if src == tgt {
            return Ok(CTerm2::Id(src.clone()));
        }
        Ok(CTerm2::v(self.fold_jumps(src)?, self.fold_jumps(tgt)?.inverse(self.y())))
    }

    /// As [`Codescent::normalize_jump_hom`], routed through the point over the smallest patch.
    pub fn normalize_jump_hom_via_hub(&self, src: &CTerm1, tgt: &CTerm1) -> Result<CTerm2> {
        let x = self.jump_only(src)?;
        if self.jump_only(tgt)? != x || src.start != tgt.start || self.end(src)? != self.end(tgt)? {
            return Err(CoreError::typing(
                format!("{} ⇒ {}", self.show1(src), self.show1(tgt)),
                "jump words do not share endpoints",
            ));
        }
        let hub = self.tower.cover.patches_with_vertex(x)[0];
        let (u0, um) = (self.split(src.start).0, self.split(self.end(src)?).0);
        let split = CTerm2::Xi { point: self.triple(u0, hub, um, x), inv: true };
        let to_hub = |w: &CTerm1| -> Result<CTerm2> { Ok(CTerm2::v(self.fold_jumps(w)?, split.clone())) };
        Ok(CTerm2::v(to_hub(src)?, to_hub(tgt)?.inverse(self.y())))
    }

    /// The smallest patch containing base edge `e`.
    pub fn hub_patch(&self, e: usize) -> usize {
        self.tower.cover.patches_with_edge(e)[0]
    }

    /// The single-letter path atom of base letter `l` in patch `i`.
    pub fn letter_atom(&self, i: usize, l: usize) -> Atom {
        let y = self.tower.space(1);
        let e = y.edge(&[i], edge_of(l)).expect("edge in patch");
        let yl = letter(e, is_inverse(l));
        Atom::Path(PathTerm { start: self.pt(i, self.base().letter_src(l)), letters: vec![yl] })
    }

    /// The lift of a reduced base path from `a` to `b`: one atom per letter in its hub
    /// patch and direct jumps between, omitted when trivial.
    pub fn hub_lift(&self, a: usize, gamma: &PathTerm, b: usize) -> CTerm1 {
        let m = self.base();
        let (mut cur, x) = self.split(a);
        let mut atoms = Vec::new();
        let mut at = x;
        for &l in &gamma.letters {
            let h = self.hub_patch(edge_of(l));
            atoms.extend(self.jump_atoms(cur, h, at));
            atoms.push(self.letter_atom(h, l));
            cur = h;
            at = m.letter_tgt(l);
        }
        let (j, _) = self.split(b);
        atoms.extend(self.jump_atoms(cur, j, at));
        CTerm1 { start: a, atoms }
    }

    fn block_to_direct(&self, rw: &mut Rewriter, pos: usize, len: usize) -> Result<()> {
        let from = rw.vertex_at(pos);
        let to = if len == 0 { from } else { self.atom_tgt(&rw.cur.atoms[pos + len - 1]) };
        let (p, x) = self.split(from);
        let (q, _) = self.split(to);
        let block = CTerm1 { start: from, atoms: rw.cur.atoms[pos..pos + len].to_vec() };
        let target = CTerm1 { start: from, atoms: self.jump_atoms(p, q, x) };
        if block != target {
            let cell = self.normalize_jump_hom(&block, &target)?;
            rw.apply(pos, len, cell)?;
        }
        Ok(())
    }

    fn base_letter(&self, a: &Atom) -> Option<usize> {
        match a {
            Atom::Path(p) if p.letters.len() == 1 => Some(self.proj.letter(p.letters[0])),
            _ => None,
        }
    }

    /// `L ⇒ hub_lift(L)` for any well-typed 1-term.
    pub fn normalize_lift(&self, l: &CTerm1) -> Result<CTerm2> {
        let end = self.end(l)?;
        let target = self.hub_lift(l.start, &self.project1(l), end);
        let mut rw = Rewriter::new(self, l.clone());
        // Single-letter path atoms only.
        let mut k = 0;
        while k < rw.cur.atoms.len() {
            match rw.cur.atoms[k].clone() {
                Atom::Path(p) if p.letters.is_empty() => {
                    rw.apply(k, 1, CTerm2::UStar { point: p.start, inv: false })?;
                }
                Atom::Path(p) if p.letters.len() >= 2 => {
                    let y = self.y();
                    let first = PathTerm { start: p.start, letters: p.letters[..1].to_vec() };
                    let second = PathTerm { start: first.end(y), letters: p.letters[1..].to_vec() };
                    rw.apply(k, 1, CTerm2::CStar { first, second, inv: true })?;
                }
                _ => k += 1,
            }
        }
        // Cancel backtracks, leftmost first.
        loop {
            let paths: Vec<usize> = (0..rw.cur.atoms.len()).filter(|&k| matches!(rw.cur.atoms[k], Atom::Path(_))).collect();
            let found = paths.windows(2).find(|w| {
                let (l1, l2) = (self.base_letter(&rw.cur.atoms[w[0]]), self.base_letter(&rw.cur.atoms[w[1]]));
                l1.is_some() && l2 == l1.map(inv_letter)
            });
            let Some(w) = found else { break };
            let (p, q) = (w[0], w[1]);
            let i = self.split(self.atom_src(&rw.cur.atoms[p])).0;
            let k = self.split(self.atom_src(&rw.cur.atoms[q])).0;
            self.block_to_direct(&mut rw, p + 1, q - p - 1)?;
            let (lp, x) = {
                let bl = self.base_letter(&rw.cur.atoms[p]).expect("letter");
                (bl, self.base().letter_src(bl))
            };
            let (ap, aq) = if i == k {
                (p, p + 1)
            } else {
                let theta = self.theta_letter(i, k, lp);
                rw.apply(p, 2, CTerm2::Theta { path: theta, inv: false })?;
                (p + 1, p + 2)
            };
            let (Atom::Path(first), Atom::Path(second)) = (rw.cur.atoms[ap].clone(), rw.cur.atoms[aq].clone()) else {
                return Err(CoreError::typing("backtrack", "expected two path atoms"));
            };
            rw.apply(ap, 2, CTerm2::CStar { first, second, inv: false })?;
            rw.apply(ap, 1, CTerm2::UStar { point: self.pt(k, x), inv: false })?;
        }
        // Move letters to their hub patches.
        let mut k = 0;
        while k < rw.cur.atoms.len() {
            if let Some(l) = self.base_letter(&rw.cur.atoms[k]) {
                let i = self.split(self.atom_src(&rw.cur.atoms[k])).0;
                let h = self.hub_patch(edge_of(l));
                if i != h {
                    let x = self.base().letter_src(l);
                    rw.apply(k, 0, CTerm2::DeltaA { point: self.pt(i, x), inv: false })?;
                    rw.apply(k, 1, CTerm2::Xi { point: self.triple(i, h, i, x), inv: true })?;
                    rw.apply(k + 1, 2, CTerm2::Theta { path: self.theta_letter(h, i, l), inv: true })?;
                    k += 2;
                }
            }
            k += 1;
        }
        // Direct jump blocks.
        let mut pos = 0;
        loop {
            let mut len = 0;
            while pos + len < rw.cur.atoms.len() && matches!(rw.cur.atoms[pos + len], Atom::Jump(_)) {
                len += 1;
            }
            self.block_to_direct(&mut rw, pos, len)?;
            while pos < rw.cur.atoms.len() && matches!(rw.cur.atoms[pos], Atom::Jump(_)) {
                pos += 1;
            }
            if pos >= rw.cur.atoms.len() {
                break;
            }
            pos += 1;
        }
        let (cur, acc) = rw.finish();
        if cur != target {
            return Err(CoreError::invariant(
                "normalization reaches the hub lift",
                format!("{} vs {}", self.show1(&cur), self.show1(&target)),
            ));
        }
        Ok(acc)
    }

    /// The one-letter path in `Y^[2]` over base letter `l` at patches `(i, k)`.
    pub fn theta_letter(&self, i: usize, k: usize, l: usize) -> PathTerm {
        let y2 = self.tower.space(2);
        let e = y2.edge(&[i, k], edge_of(l)).expect("edge in both patches");
        PathTerm { start: self.jump(i, k, self.base().letter_src(l)), letters: vec![letter(e, is_inverse(l))] }
    }

    /// The canonical 2-isomorphism between two lifts of the same base path.
    pub fn canonical_2cell(&self, l1: &CTerm1, l2: &CTerm1) -> Result<CTerm2> {
        let (e1, e2) = (self.end(l1)?, self.end(l2)?);
        if l1.start != l2.start || e1 != e2 || self.project1(l1) != self.project1(l2) {
            return Err(CoreError::typing(
                format!("{} ⇒ {}", self.show1(l1), self.show1(l2)),
                "lifts differ in endpoints or projection",
            ));
        }
        if l1 == l2 {
            return Ok(CTerm2::Id(l1.clone()));
        }
        Ok(CTerm2::v(self.normalize_lift(l1)?, self.normalize_lift(l2)?.inverse(self.y())))
    }
}
