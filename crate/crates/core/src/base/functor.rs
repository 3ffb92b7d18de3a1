use crate::error::{CoreError, Result};
use crate::report::Report;
use crate::twocat::{ObjId, TwoCategoryTable, TwoFunctorData, C1, C2};

use super::cellmap::CellMap;
use super::computad::Computad;
use super::path::{inv_letter, reduce, BigonStep, BigonTerm, Letter, PathTerm};

/// Inverse of an invertible 1-cell in a strict table.
pub fn inverse1(t: &TwoCategoryTable, f: C1) -> Option<C1> {
    let (x, y) = (t.src1(f), t.tgt1(f));
    t.hom1(y, x).find(|&g| t.comp1(g, f) == Some(t.id1(x)) && t.comp1(f, g) == Some(t.id1(y)))
}

/// A 2-functor from the free path 2-groupoid of a computad into a strict table.
///
/// Data is stored letterwise: `one[ℓ]` for every letter, `kappa[ℓ]: F(ℓ⁻¹)∘F(ℓ) ⇒ id`,
/// `face[Σ]: F(S) ⇒ F(T)` and `unitor[x]: F(id_x) = id ⇒ id`. The image of a word is
/// the product of its letter images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFunctor {
    pub obj: Vec<ObjId>,
    pub one: Vec<C1>,
    pub kappa: Vec<C2>,
    pub face: Vec<C2>,
    pub unitor: Vec<C2>,
}

fn concat(a: &[Letter], b: &[Letter], c: &[Letter]) -> Vec<Letter> {
    let mut w = Vec::with_capacity(a.len() + b.len() + c.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w.extend_from_slice(c);
    w
}

impl PathFunctor {
    /// A strict functor from edge and face images; inverse letters go to inverse 1-cells.
    pub fn strict(cx: &Computad, t: &TwoCategoryTable, obj: Vec<ObjId>, edge: &[C1], face: Vec<C2>) -> Result<Self> {
        let mut one = Vec::with_capacity(cx.n_letters());
        for (e, &f) in edge.iter().enumerate() {
            let g = inverse1(t, f).ok_or_else(|| {
                CoreError::Capability(format!("image {} of edge {} is not invertible", t.one_label(f), cx.edges[e].label))
            })?;
            one.push(f);
            one.push(g);
        }
        let kappa = (0..cx.n_letters()).map(|l| t.id2_obj(obj[cx.letter_src(l)])).collect();
        let unitor = obj.iter().map(|&x| t.id2_obj(x)).collect();
        let fu = PathFunctor { obj, one, kappa, face, unitor };
        fu.typecheck(cx, t)?;
        Ok(fu)
    }

    /// Everything to the identity cells of `x`.
    pub fn constant(cx: &Computad, t: &TwoCategoryTable, x: ObjId) -> Self {
        PathFunctor {
            obj: vec![x; cx.vertices.len()],
            one: vec![t.id1(x); cx.n_letters()],
            kappa: vec![t.id2_obj(x); cx.n_letters()],
            face: vec![t.id2_obj(x); cx.faces.len()],
            unitor: vec![t.id2_obj(x); cx.vertices.len()],
        }
    }

    pub fn typecheck(&self, cx: &Computad, t: &TwoCategoryTable) -> Result<()> {
        if self.obj.len() != cx.vertices.len()
            || self.one.len() != cx.n_letters()
            || self.kappa.len() != cx.n_letters()
            || self.face.len() != cx.faces.len()
            || self.unitor.len() != cx.vertices.len()
        {
            return Err(CoreError::typing(format!("functor on {}", cx.name), "table sizes do not match the computad"));
        }
        for l in 0..cx.n_letters() {
            let f = self.one[l];
            let (x, y) = (self.obj[cx.letter_src(l)], self.obj[cx.letter_tgt(l)]);
            if f >= t.n1() || t.src1(f) != x || t.tgt1(f) != y {
                return Err(CoreError::typing(format!("F({})", cx.letter_label(l)), "endpoints not preserved"));
            }
        }
        for l in 0..cx.n_letters() {
            let k = self.kappa[l];
            let src = t.comp1(self.one[inv_letter(l)], self.one[l]);
            if k >= t.n2() || Some(t.src2(k)) != src || t.tgt2(k) != t.id1(self.obj[cx.letter_src(l)]) {
                return Err(CoreError::typing(format!("κ({})", cx.letter_label(l)), "must be F(ℓ⁻¹)∘F(ℓ) ⇒ id"));
            }
        }
        for (fi, f) in cx.faces.iter().enumerate() {
            let a = self.face[fi];
            let s = self.word(cx, t, f.src.start, &f.src.letters)?;
            let tt = self.word(cx, t, f.tgt.start, &f.tgt.letters)?;
            if a >= t.n2() || t.src2(a) != s || t.tgt2(a) != tt {
                return Err(CoreError::typing(format!("F({})", f.label), "must be F(S) ⇒ F(T)"));
            }
        }
        for (x, &u) in self.unitor.iter().enumerate() {
            let id = t.id1(self.obj[x]);
            if u >= t.n2() || t.src2(u) != id || t.tgt2(u) != id {
                return Err(CoreError::typing(format!("u({})", cx.vertices[x]), "must be id ⇒ id"));
            }
        }
        Ok(())
    }

    /// `F` of an arbitrary (not necessarily reduced) letter sequence.
    pub fn word(&self, _cx: &Computad, t: &TwoCategoryTable, start: usize, letters: &[Letter]) -> Result<C1> {
        let cells: Vec<C1> = letters.iter().map(|&l| self.one[l]).collect();
        t.path1(self.obj[start], &cells)
    }

    pub fn path(&self, cx: &Computad, t: &TwoCategoryTable, p: &PathTerm) -> Result<C1> {
        self.word(cx, t, p.start, &p.letters)
    }

    /// `F(w) ⇒ F(reduce(w))`, cancelling the leftmost adjacent inverse pair each time.
    pub fn red(&self, cx: &Computad, t: &TwoCategoryTable, start: usize, letters: &[Letter]) -> Result<C2> {
        let mut w = letters.to_vec();
        let mut acc = t.id2(self.word(cx, t, start, &w)?);
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i + 1] == inv_letter(w[i])) {
            let at = cx.walk(start, &w[..i])?;
            let cell = t.hpath(&[
                t.id2(self.word(cx, t, start, &w[..i])?),
                self.kappa[w[i]],
                t.id2(self.word(cx, t, at, &w[i + 2..])?),
            ])?;
            acc = t.v(cell, acc)?;
            w.drain(i..i + 2);
        }
        Ok(acc)
    }

    /// `c_{w1,w2}: F(w2)∘F(w1) ⇒ F(w2∘w1)`.
    pub fn compositor(&self, cx: &Computad, t: &TwoCategoryTable, w1: &PathTerm, w2: &PathTerm) -> Result<C2> {
        if w1.is_empty() {
            return t.wl(self.path(cx, t, w2)?, self.unitor[w1.start]);
        }
        if w2.is_empty() {
            return t.wr(self.unitor[w2.start], self.path(cx, t, w1)?);
        }
        self.red(cx, t, w1.start, &concat(&w1.letters, &w2.letters, &[]))
    }

    /// `F` of one rewrite step applied to a word starting at `start`.
    pub fn step(&self, cx: &Computad, t: &TwoCategoryTable, start: usize, s: &BigonStep) -> Result<C2> {
        let (sw, tw) = s.rewrite(cx);
        let x = cx.walk(start, &s.prefix)?;
        let y = cx.walk(x, sw)?;
        let face = if s.inverse { t.inv(self.face[s.face])? } else { self.face[s.face] };
        let mid = t.hpath(&[
            t.id2(self.word(cx, t, start, &s.prefix)?),
            face,
            t.id2(self.word(cx, t, y, &s.suffix)?),
        ])?;
        let into = t.inv(self.red(cx, t, start, &concat(&s.prefix, sw, &s.suffix))?)?;
        let out = self.red(cx, t, start, &concat(&s.prefix, tw, &s.suffix))?;
        t.vpath(&[into, mid, out])
    }

    pub fn bigon(&self, cx: &Computad, t: &TwoCategoryTable, b: &BigonTerm) -> Result<C2> {
        let mut acc = t.id2(self.path(cx, t, &b.source)?);
        for s in &b.steps {
            acc = t.v(self.step(cx, t, b.source.start, s)?, acc)?;
        }
        Ok(acc)
    }

    /// `m^*F = F∘m_*`.
    pub fn pullback(&self, cx_from: &Computad, m: &CellMap) -> Self {
        PathFunctor {
            obj: m.vert.iter().map(|&v| self.obj[v]).collect(),
            one: (0..cx_from.n_letters()).map(|l| self.one[m.letter(l)]).collect(),
            kappa: (0..cx_from.n_letters()).map(|l| self.kappa[m.letter(l)]).collect(),
            face: m.face.iter().map(|&f| self.face[f]).collect(),
            unitor: m.vert.iter().map(|&v| self.unitor[v]).collect(),
        }
    }

    /// `i∘F` for a strict functor `i`.
    pub fn post(&self, i: &TwoFunctorData, gr: &TwoCategoryTable, t: &TwoCategoryTable) -> Result<Self> {
        require_strict_functor(i, gr, t)?;
        Ok(PathFunctor {
            obj: self.obj.iter().map(|&x| i.map0[x]).collect(),
            one: self.one.iter().map(|&f| i.map1[f]).collect(),
            kappa: self.kappa.iter().map(|&a| i.map2[a]).collect(),
            face: self.face.iter().map(|&a| i.map2[a]).collect(),
            unitor: self.unitor.iter().map(|&a| i.map2[a]).collect(),
        })
    }

    /// Strict unitors and strict cancellations.
    pub fn is_normalized(&self, cx: &Computad, t: &TwoCategoryTable) -> bool {
        (0..cx.vertices.len()).all(|x| t.is_identity2(self.unitor[x]) && t.src2(self.unitor[x]) == t.id1(self.obj[x]))
            && (0..cx.n_letters()).all(|l| t.is_identity2(self.kappa[l]))
    }
}

/// Identity compositors and unitors, as required for post-composition.
pub fn require_strict_functor(i: &TwoFunctorData, gr: &TwoCategoryTable, t: &TwoCategoryTable) -> Result<()> {
    i.typecheck(gr, t)?;
    let n1 = gr.n1();
    for (k, &c) in i.compositor.iter().enumerate() {
        if c != crate::twocat::NONE && !t.is_identity2(c) {
            return Err(CoreError::Capability(format!(
                "the functor i has a non-identity compositor at ({},{})",
                gr.one_label(k / n1),
                gr.one_label(k % n1)
            )));
        }
    }
    if i.unitor.iter().any(|&u| !t.is_identity2(u)) {
        return Err(CoreError::Capability("the functor i has a non-identity unitor".into()));
    }
    Ok(())
}

/// A pseudonatural transformation between path functors, stored per vertex and letter.
///
/// `comp1[ℓ]: ρ(y)∘F₁(ℓ) ⇒ F₂(ℓ)∘ρ(x)` for `ℓ: x → y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathTransformation {
    pub comp0: Vec<C1>,
    pub comp1: Vec<C2>,
}

impl PathTransformation {
    pub fn identity(f: &PathFunctor, t: &TwoCategoryTable) -> Self {
        PathTransformation {
            comp0: f.obj.iter().map(|&x| t.id1(x)).collect(),
            comp1: f.one.iter().map(|&g| t.id2(g)).collect(),
        }
    }

    pub fn typecheck(&self, f1: &PathFunctor, f2: &PathFunctor, cx: &Computad, t: &TwoCategoryTable) -> Result<()> {
        if self.comp0.len() != cx.vertices.len() || self.comp1.len() != cx.n_letters() {
            return Err(CoreError::typing("transformation", "component counts do not match the computad"));
        }
        for x in 0..cx.vertices.len() {
            let r = self.comp0[x];
            if r >= t.n1() || t.src1(r) != f1.obj[x] || t.tgt1(r) != f2.obj[x] {
                return Err(CoreError::typing(format!("ρ({})", cx.vertices[x]), "must be F₁(x) → F₂(x)"));
            }
        }
        for l in 0..cx.n_letters() {
            let (x, y) = (cx.letter_src(l), cx.letter_tgt(l));
            let a = self.comp1[l];
            let src = t.comp1(self.comp0[y], f1.one[l]);
            let tgt = t.comp1(f2.one[l], self.comp0[x]);
            if a >= t.n2() || Some(t.src2(a)) != src || Some(t.tgt2(a)) != tgt {
                return Err(CoreError::typing(format!("ρ({})", cx.letter_label(l)), "must be ρ(y)∘F₁ℓ ⇒ F₂ℓ∘ρ(x)"));
            }
        }
        Ok(())
    }

    /// `ρ(w)` for a word, pasting letter squares; the empty word uses the unitors.
    pub fn word(
        &self,
        f1: &PathFunctor,
        f2: &PathFunctor,
        cx: &Computad,
        t: &TwoCategoryTable,
        start: usize,
        letters: &[Letter],
    ) -> Result<C2> {
        let rx = self.comp0[start];
        if letters.is_empty() {
            return t.v(t.wr(t.inv(f2.unitor[start])?, rx)?, t.wl(rx, f1.unitor[start])?);
        }
        let mut acc = self.comp1[letters[0]];
        for k in 1..letters.len() {
            let l = letters[k];
            let a1 = f1.word(cx, t, start, &letters[..k])?;
            acc = t.v(t.wl(f2.one[l], acc)?, t.wr(self.comp1[l], a1)?)?;
        }
        Ok(acc)
    }

    pub fn path(&self, f1: &PathFunctor, f2: &PathFunctor, cx: &Computad, t: &TwoCategoryTable, p: &PathTerm) -> Result<C2> {
        self.word(f1, f2, cx, t, p.start, &p.letters)
    }

    /// `σ∘ρ` in a strict target.
    pub fn compose(sigma: &PathTransformation, rho: &PathTransformation, f2: &PathFunctor, cx: &Computad, t: &TwoCategoryTable) -> Result<Self> {
        let comp0 = (0..cx.vertices.len()).map(|x| t.c1(sigma.comp0[x], rho.comp0[x])).collect::<Result<Vec<_>>>()?;
        let comp1 = (0..cx.n_letters())
            .map(|l| {
                let (x, y) = (cx.letter_src(l), cx.letter_tgt(l));
                let _ = f2;
                t.v(t.wr(sigma.comp1[l], rho.comp0[x])?, t.wl(sigma.comp0[y], rho.comp1[l])?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PathTransformation { comp0, comp1 })
    }

    /// The inverse transformation when every `ρ(x)` is an invertible 1-cell.
    pub fn strict_inverse(&self, cx: &Computad, t: &TwoCategoryTable) -> Result<Self> {
        let comp0 = self
            .comp0
            .iter()
            .map(|&r| inverse1(t, r).ok_or_else(|| CoreError::Capability(format!("component {} is not invertible", t.one_label(r)))))
            .collect::<Result<Vec<_>>>()?;
        let comp1 = (0..cx.n_letters())
            .map(|l| {
                let (x, y) = (cx.letter_src(l), cx.letter_tgt(l));
                t.wl(comp0[y], t.wr(t.inv(self.comp1[l])?, comp0[x])?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PathTransformation { comp0, comp1 })
    }

    pub fn pullback(&self, cx_from: &Computad, m: &CellMap) -> Self {
        PathTransformation {
            comp0: m.vert.iter().map(|&v| self.comp0[v]).collect(),
            comp1: (0..cx_from.n_letters()).map(|l| self.comp1[m.letter(l)]).collect(),
        }
    }

    pub fn post(&self, i: &TwoFunctorData) -> Self {
        PathTransformation {
            comp0: self.comp0.iter().map(|&f| i.map1[f]).collect(),
            comp1: self.comp1.iter().map(|&a| i.map2[a]).collect(),
        }
    }
}

/// A modification between path transformations, one 2-cell per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathModification {
    pub comp: Vec<C2>,
}

impl PathModification {
    pub fn identity(rho: &PathTransformation, t: &TwoCategoryTable) -> Self {
        PathModification { comp: rho.comp0.iter().map(|&f| t.id2(f)).collect() }
    }

    pub fn pullback(&self, m: &CellMap) -> Self {
        PathModification { comp: m.vert.iter().map(|&v| self.comp[v]).collect() }
    }

    pub fn typecheck(&self, rho1: &PathTransformation, rho2: &PathTransformation, cx: &Computad, t: &TwoCategoryTable) -> Result<()> {
        if self.comp.len() != cx.vertices.len() {
            return Err(CoreError::typing("modification", "component count does not match the computad"));
        }
        for x in 0..cx.vertices.len() {
            let c = self.comp[x];
            if c >= t.n2() || t.src2(c) != rho1.comp0[x] || t.tgt2(c) != rho2.comp0[x] {
                return Err(CoreError::typing(format!("A({})", cx.vertices[x]), "must be ρ₁(x) ⇒ ρ₂(x)"));
            }
        }
        Ok(())
    }

    pub fn vcomp(&self, next: &PathModification, t: &TwoCategoryTable) -> Result<Self> {
        Ok(PathModification { comp: self.comp.iter().zip(&next.comp).map(|(&a, &b)| t.v(b, a)).collect::<Result<_>>()? })
    }

    pub fn inverse(&self, t: &TwoCategoryTable) -> Result<Self> {
        Ok(PathModification { comp: self.comp.iter().map(|&a| t.inv(a)).collect::<Result<_>>()? })
    }
}

fn label2(t: &TwoCategoryTable, a: Result<C2>) -> String {
    match a {
        Ok(a) => t.two_label(a).to_string(),
        Err(_) => "undefined".into(),
    }
}

fn compare(r: &mut Report, t: &TwoCategoryTable, kind: &str, at: impl FnOnce() -> String, lhs: Result<C2>, rhs: Result<C2>) {
    match (&lhs, &rhs) {
        (Ok(a), Ok(b)) if a == b => {}
        _ => r.add(kind, at(), label2(t, lhs), label2(t, rhs)),
    }
}

/// Single face steps, whiskered by at most `whisker` letters on either side.
pub fn whiskered_faces(cx: &Computad, whisker: usize) -> Vec<BigonTerm> {
    let mut out = Vec::new();
    for (fi, f) in cx.faces.iter().enumerate() {
        let y = f.src.end(cx);
        for inverse in [false, true] {
            for p in (0..cx.vertices.len()).flat_map(|v| cx.words_from(v, whisker)) {
                if p.end(cx) != f.src.start {
                    continue;
                }
                for q in cx.words_from(y, whisker) {
                    let s = BigonStep { prefix: p.letters.clone(), face: fi, inverse, suffix: q.letters.clone() };
                    let source = PathTerm { start: p.start, letters: s.source(cx) };
                    out.push(BigonTerm { source, steps: vec![s] });
                }
            }
        }
    }
    out
}

/// Every violated instance of (F1)–(F4) on words of length at most `max_len` and on faces
/// whiskered by at most one letter.
pub fn check_path_functor(f: &PathFunctor, cx: &Computad, t: &TwoCategoryTable, max_len: usize) -> Result<Report> {
    f.typecheck(cx, t)?;
    let mut r = Report::new();
    for l in 0..cx.n_letters() {
        if t.inv2(f.kappa[l]).is_none() {
            r.add("invertible", format!("κ({})", cx.letter_label(l)), t.two_label(f.kappa[l]), "no inverse");
        }
    }
    for (fi, face) in cx.faces.iter().enumerate() {
        if t.inv2(f.face[fi]).is_none() {
            r.add("invertible", face.label.clone(), t.two_label(f.face[fi]), "no inverse");
        }
    }
    for x in 0..cx.vertices.len() {
        if t.inv2(f.unitor[x]).is_none() {
            r.add("invertible", format!("u({})", cx.vertices[x]), t.two_label(f.unitor[x]), "no inverse");
        }
    }
    let wl = |w: &PathTerm| cx.word_label(&w.letters);
    // (F3) on triples, (F4) on pairs with an identity.
    for x in 0..cx.vertices.len() {
        for w1 in cx.words_from(x, max_len) {
            let y = w1.end(cx);
            let idx = PathTerm::empty(x);
            let idy = PathTerm::empty(y);
            let fw1 = f.path(cx, t, &w1)?;
            compare(&mut r, t, "(F4)", || format!("l {}", wl(&w1)), f.compositor(cx, t, &idx, &w1), t.wl(fw1, f.unitor[x]));
            compare(&mut r, t, "(F4)", || format!("r {}", wl(&w1)), f.compositor(cx, t, &w1, &idy), t.wr(f.unitor[y], fw1));
            for w2 in cx.words_from(y, max_len) {
                let z = w2.end(cx);
                let w12 = w1.then(cx, &w2)?;
                for w3 in cx.words_from(z, max_len) {
                    let w23 = w2.then(cx, &w3)?;
                    let lhs = (|| {
                        let c23 = f.compositor(cx, t, &w2, &w3)?;
                        t.v(f.compositor(cx, t, &w1, &w23)?, t.wr(c23, fw1)?)
                    })();
                    let rhs = (|| {
                        let c12 = f.compositor(cx, t, &w1, &w2)?;
                        t.v(f.compositor(cx, t, &w12, &w3)?, t.wl(f.path(cx, t, &w3)?, c12)?)
                    })();
                    compare(&mut r, t, "(F3)", || format!("{},{},{}", wl(&w1), wl(&w2), wl(&w3)), lhs, rhs);
                }
            }
        }
    }
    // (F1) and (F2) on identities of short words and singly whiskered faces.
    let mut cells: Vec<BigonTerm> = (0..cx.vertices.len())
        .flat_map(|v| cx.words_from(v, 1))
        .map(BigonTerm::identity)
        .collect();
    cells.extend(whiskered_faces(cx, 1));
    for a in &cells {
        let ay = a.source.end(cx);
        for b in cells.iter().filter(|b| b.source.start == ay) {
            let ab = a.hcomp(cx, b)?;
            let fab = f.bigon(cx, t, &ab);
            compare(&mut r, t, "(F1)", || ab.display(cx).to_string(), f.bigon(cx, t, &ab.normal_form(cx)), fab.clone());
            let lhs = (|| t.v(fab.clone()?, f.compositor(cx, t, &a.source, &b.source)?))();
            let rhs = (|| {
                let h = t.h(f.bigon(cx, t, b)?, f.bigon(cx, t, a)?)?;
                t.v(f.compositor(cx, t, &a.target(cx), &b.target(cx))?, h)
            })();
            compare(&mut r, t, "(F2)", || format!("{}∘{}", b.display(cx), a.display(cx)), lhs, rhs);
        }
    }
    Ok(r)
}

/// Every violated (T1) instance on word pairs (lengths ≤ `max_len` and ≤ 1), every (T2)
/// instance on singly whiskered faces, the unit diagram, and non-invertible components.
pub fn check_path_transformation(
    rho: &PathTransformation,
    f1: &PathFunctor,
    f2: &PathFunctor,
    cx: &Computad,
    t: &TwoCategoryTable,
    max_len: usize,
) -> Result<Report> {
    rho.typecheck(f1, f2, cx, t)?;
    let mut r = Report::new();
    for l in 0..cx.n_letters() {
        if t.inv2(rho.comp1[l]).is_none() {
            r.add("invertible", format!("ρ({})", cx.letter_label(l)), t.two_label(rho.comp1[l]), "no inverse");
        }
    }
    let wl = |w: &PathTerm| cx.word_label(&w.letters);
    for x in 0..cx.vertices.len() {
        let rx = rho.comp0[x];
        let lhs = (|| t.v(t.wr(f2.unitor[x], rx)?, rho.word(f1, f2, cx, t, x, &[])?))();
        compare(&mut r, t, "unit", || cx.vertices[x].clone(), lhs, t.wl(rx, f1.unitor[x]));
        for w1 in cx.words_from(x, max_len) {
            let y = w1.end(cx);
            for w2 in cx.words_from(y, 1) {
                let z = w2.end(cx);
                let w12 = w1.then(cx, &w2)?;
                let lhs = (|| {
                    let c1 = f1.compositor(cx, t, &w1, &w2)?;
                    t.v(rho.path(f1, f2, cx, t, &w12)?, t.wl(rho.comp0[z], c1)?)
                })();
                let rhs = (|| {
                    let p = t.v(
                        t.wl(f2.path(cx, t, &w2)?, rho.path(f1, f2, cx, t, &w1)?)?,
                        t.wr(rho.path(f1, f2, cx, t, &w2)?, f1.path(cx, t, &w1)?)?,
                    )?;
                    t.v(t.wr(f2.compositor(cx, t, &w1, &w2)?, rx)?, p)
                })();
                compare(&mut r, t, "(T1)", || format!("f={},g={}", wl(&w1), wl(&w2)), lhs, rhs);
            }
        }
    }
    for b in whiskered_faces(cx, 1) {
        let (x, y) = (b.source.start, b.source.end(cx));
        let tgt = b.target(cx);
        let lhs = (|| t.v(rho.path(f1, f2, cx, t, &tgt)?, t.wl(rho.comp0[y], f1.bigon(cx, t, &b)?)?))();
        let rhs = (|| t.v(t.wr(f2.bigon(cx, t, &b)?, rho.comp0[x])?, rho.path(f1, f2, cx, t, &b.source)?))();
        compare(&mut r, t, "(T2)", || b.display(cx).to_string(), lhs, rhs);
    }
    Ok(r)
}

/// Every letter at which the modification square fails.
#[allow(clippy::too_many_arguments)]
pub fn check_path_modification(
    a: &PathModification,
    rho1: &PathTransformation,
    rho2: &PathTransformation,
    f1: &PathFunctor,
    f2: &PathFunctor,
    cx: &Computad,
    t: &TwoCategoryTable,
) -> Result<Report> {
    a.typecheck(rho1, rho2, cx, t)?;
    let mut r = Report::new();
    for l in 0..cx.n_letters() {
        let (x, y) = (cx.letter_src(l), cx.letter_tgt(l));
        let lhs = (|| t.v(rho2.comp1[l], t.wr(a.comp[y], f1.one[l])?))();
        let rhs = (|| t.v(t.wl(f2.one[l], a.comp[x])?, rho1.comp1[l]))();
        compare(
            &mut r,
            t,
            "modification",
            || format!("{}:{}→{}", cx.letter_label(l), cx.vertices[x], cx.vertices[y]),
            lhs,
            rhs,
        );
    }
    Ok(r)
}

/// `reduce` on a path term's letters, for callers holding raw words.
pub fn reduced(p: &PathTerm) -> PathTerm {
    PathTerm { start: p.start, letters: reduce(&p.letters) }
}
