use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base::path::{edge_of, inv_letter, is_inverse, Letter};
use crate::base::{BigonTerm, PathTerm};
use crate::error::{CoreError, Result};

use super::term::{Atom, CTerm1, CTerm2, Codescent};

/// Patch choices for lifting base cells: `chi0` per vertex, `chi1` per edge, `chi2` per face,
/// and optional explicit lifts of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SectionChoice {
    pub chi0: Vec<usize>,
    pub chi1: Vec<usize>,
    pub chi2: Vec<usize>,
    pub overrides: BTreeMap<usize, CTerm1>,
}

impl SectionChoice {
    /// Smallest patch everywhere.
    pub fn smallest(cd: &Codescent) -> Self {
        let m = cd.base();
        let cover = &cd.tower.cover;
        SectionChoice {
            chi0: (0..m.vertices.len()).map(|v| cover.patches_with_vertex(v)[0]).collect(),
            chi1: (0..m.edges.len()).map(|e| cover.patches_with_edge(e)[0]).collect(),
            chi2: (0..m.faces.len()).map(|f| cover.patches_with_face(f)[0]).collect(),
            overrides: BTreeMap::new(),
        }
    }

    /// Largest patch everywhere.
    pub fn largest(cd: &Codescent) -> Self {
        let m = cd.base();
        let cover = &cd.tower.cover;
        let last = |v: Vec<usize>| *v.last().expect("covered");
        SectionChoice {
            chi0: (0..m.vertices.len()).map(|v| last(cover.patches_with_vertex(v))).collect(),
            chi1: (0..m.edges.len()).map(|e| last(cover.patches_with_edge(e))).collect(),
            chi2: (0..m.faces.len()).map(|f| last(cover.patches_with_face(f))).collect(),
            overrides: BTreeMap::new(),
        }
    }

    /// Uniformly random admissible patches.
    pub fn random(cd: &Codescent, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = cd.base();
        let cover = &cd.tower.cover;
        let mut pick = |v: Vec<usize>| v[rng.gen_range(0..v.len())];
        SectionChoice {
            chi0: (0..m.vertices.len()).map(|v| pick(cover.patches_with_vertex(v))).collect(),
            chi1: (0..m.edges.len()).map(|e| pick(cover.patches_with_edge(e))).collect(),
            chi2: (0..m.faces.len()).map(|f| pick(cover.patches_with_face(f))).collect(),
            overrides: BTreeMap::new(),
        }
    }

    pub fn validate(&self, cd: &Codescent) -> Result<()> {
        let m = cd.base();
        let cover = &cd.tower.cover;
        if self.chi0.len() != m.vertices.len() || self.chi1.len() != m.edges.len() || self.chi2.len() != m.faces.len() {
            return Err(CoreError::Validation("section choice sizes do not match the base".into()));
        }
        let bad = |what: &str, name: &str| Err(CoreError::Validation(format!("{what} `{name}` is not in its chosen patch")));
        for (v, &i) in self.chi0.iter().enumerate() {
            if i >= cover.patches.len() || !cover.patches[i].has_vertex(v) {
                return bad("vertex", &m.vertices[v]);
            }
        }
        for (e, &i) in self.chi1.iter().enumerate() {
            if i >= cover.patches.len() || !cover.patches[i].has_edge(e) {
                return bad("edge", &m.edges[e].label);
            }
        }
        for (f, &i) in self.chi2.iter().enumerate() {
            if i >= cover.patches.len() || !cover.patches[i].has_face(f) {
                return bad("face", &m.faces[f].label);
            }
        }
        for (&e, l) in &self.overrides {
            let edge = m.edges.get(e).ok_or_else(|| CoreError::Validation(format!("override for unknown edge {e}")))?;
            let name = &edge.label;
            if l.start != cd.pt(self.chi0[edge.src], edge.src) || cd.end(l)? != cd.pt(self.chi0[edge.tgt], edge.tgt) {
                return Err(CoreError::Validation(format!("override for `{name}` has wrong endpoints")));
            }
            let literal: Vec<Letter> = l
                .atoms
                .iter()
                .flat_map(|a| match a {
                    Atom::Path(p) => cd.proj.word(&p.letters),
                    Atom::Jump(_) => Vec::new(),
                })
                .collect();
            let paths = l.atoms.iter().filter(|a| matches!(a, Atom::Path(_))).count();
            if literal != vec![crate::base::path::letter(e, false)] || paths != 1 {
                return Err(CoreError::Validation(format!("override for `{name}` must contain exactly the edge once")));
            }
        }
        Ok(())
    }
}

/// The section 2-functor `s: P₂(M) → Π₂^π(M)` for a choice of lifts.
#[derive(Debug, Clone)]
pub struct Section<'c, 'a> {
    pub cd: &'c Codescent<'a>,
    pub choice: SectionChoice,
}

impl<'c, 'a> Section<'c, 'a> {
    pub fn new(cd: &'c Codescent<'a>, choice: SectionChoice) -> Result<Self> {
        choice.validate(cd)?;
        Ok(Section { cd, choice })
    }

    /// `s(x) = (χ₀(x), x)`.
    pub fn obj(&self, x: usize) -> usize {
        self.cd.pt(self.choice.chi0[x], x)
    }

    fn edge_lift(&self, e: usize) -> CTerm1 {
        if let Some(l) = self.choice.overrides.get(&e) {
            return l.clone();
        }
        let cd = self.cd;
        let m = cd.base();
        let edge = &m.edges[e];
        let c = self.choice.chi1[e];
        let mut atoms = cd.jump_atoms(self.choice.chi0[edge.src], c, edge.src);
        atoms.push(cd.letter_atom(c, crate::base::path::letter(e, false)));
        atoms.extend(cd.jump_atoms(c, self.choice.chi0[edge.tgt], edge.tgt));
        CTerm1 { start: self.obj(edge.src), atoms }
    }

    /// `s(ℓ)`, with `s(e⁻¹) = s(e)⁻¹`.
    pub fn letter(&self, l: Letter) -> CTerm1 {
        let lift = self.edge_lift(edge_of(l));
        if is_inverse(l) {
            self.cd.inverse1(&lift).expect("well-typed lift")
        } else {
            lift
        }
    }

    /// `s` on a letter sequence: concatenation of letter lifts.
    pub fn word(&self, start: usize, letters: &[Letter]) -> CTerm1 {
        let mut out = CTerm1::id(self.obj(start));
        for &l in letters {
            out.atoms.extend(self.letter(l).atoms);
        }
        out
    }

    pub fn path(&self, p: &PathTerm) -> CTerm1 {
        self.word(p.start, &p.letters)
    }

    /// The face lift through patch `χ₂(Σ)`: `[jump, S, jump] ⇒ [jump, T, jump]` framed by
    /// canonical 2-cells.
    pub fn face(&self, f: usize) -> Result<CTerm2> {
        let cd = self.cd;
        let m = cd.base();
        let face = &m.faces[f];
        let c = self.choice.chi2[f];
        let (x, y) = (face.src.start, face.src.end(m));
        let (cx, cy) = (self.choice.chi0[x], self.choice.chi0[y]);
        let lift_in = |p: &PathTerm| cd.tower.lift_path(c, p).expect("face boundary in patch");
        let framed = |p: &PathTerm| {
            let mut atoms = cd.jump_atoms(cx, c, x);
            atoms.push(Atom::Path(lift_in(p)));
            atoms.extend(cd.jump_atoms(c, cy, y));
            CTerm1 { start: self.obj(x), atoms }
        };
        let (a, b) = (framed(&face.src), framed(&face.tgt));
        let yf = cd.tower.space(1).face(&[c], f).expect("face in patch");
        let bigon = CTerm2::Bigon(BigonTerm::face(cd.y(), yf));
        let pre = CTerm1 { start: self.obj(x), atoms: cd.jump_atoms(cx, c, x) };
        let post = CTerm1 { start: cd.pt(c, y), atoms: cd.jump_atoms(c, cy, y) };
        let middle = cd.whisker(&pre, bigon, &post);
        let into = cd.canonical_2cell(&self.path(&face.src), &a)?;
        let out = cd.canonical_2cell(&b, &self.path(&face.tgt))?;
        Ok(CTerm2::v(CTerm2::v(into, middle), out))
    }

    /// `s(ℓ) * s(ℓ⁻¹) ⇒ id*`.
    pub fn cancel(&self, l: Letter) -> Result<CTerm2> {
        let x = self.cd.base().letter_src(l);
        let both = self.word(x, &[l, inv_letter(l)]);
        self.cd.canonical_2cell(&both, &CTerm1::id(self.obj(x)))
    }

    /// `s(w₂) * s(w₁) ⇒ s(reduce(w₁w₂))`.
    pub fn compositor(&self, w1: &PathTerm, w2: &PathTerm) -> Result<CTerm2> {
        let m = self.cd.base();
        let whole = w1.then(m, w2)?;
        let cat = self.cd.concat(&self.path(w1), &self.path(w2));
        self.cd.canonical_2cell(&cat, &self.path(&whole))
    }

    /// `ζ(a): s(x) → a`, the jump into the patch of `a`.
    pub fn zeta(&self, a: usize) -> CTerm1 {
        let (i, x) = self.cd.split(a);
        CTerm1 { start: self.obj(x), atoms: self.cd.jump_atoms(self.choice.chi0[x], i, x) }
    }

    /// `ξ(a): a → s(x)`.
    pub fn xi(&self, a: usize) -> CTerm1 {
        let (i, x) = self.cd.split(a);
        CTerm1 { start: a, atoms: self.cd.jump_atoms(i, self.choice.chi0[x], x) }
    }

    /// `ζ(γ): [s(πγ), ζ(b)] ⇒ [ζ(a), γ]` for a path `γ: a → b` in `Y`.
    pub fn zeta_path(&self, gamma: &PathTerm) -> Result<CTerm2> {
        let cd = self.cd;
        let b = gamma.end(cd.y());
        let src = cd.concat(&self.path(&cd.proj.path(gamma)), &self.zeta(b));
        let mut tgt = self.zeta(gamma.start);
        tgt.atoms.push(Atom::Path(gamma.clone()));
        cd.canonical_2cell(&src, &tgt)
    }

    /// `ξ(γ): [γ, ξ(b)] ⇒ [ξ(a), s(πγ)]`.
    pub fn xi_path(&self, gamma: &PathTerm) -> Result<CTerm2> {
        let cd = self.cd;
        let b = gamma.end(cd.y());
        let src = CTerm1 { start: gamma.start, atoms: vec![Atom::Path(gamma.clone())] };
        let src = cd.concat(&src, &self.xi(b));
        let tgt = cd.concat(&self.xi(gamma.start), &self.path(&cd.proj.path(gamma)));
        cd.canonical_2cell(&src, &tgt)
    }

    /// `i_ζ(a): [ζ(a), ξ(a)] ⇒ []`.
    pub fn i_zeta(&self, a: usize) -> Result<CTerm2> {
        let w = self.cd.concat(&self.zeta(a), &self.xi(a));
        self.cd.normalize_jump_hom(&w, &CTerm1::id(w.start))
    }

    /// `j_ζ(a): [] ⇒ [ξ(a), ζ(a)]`.
    pub fn j_zeta(&self, a: usize) -> Result<CTerm2> {
        let w = self.cd.concat(&self.xi(a), &self.zeta(a));
        self.cd.normalize_jump_hom(&CTerm1::id(a), &w)
    }
}
