use std::fmt;

use crate::base::path::{inverse_word, reduce};
use crate::base::{BigonTerm, CellMap, Computad, FiberTower, PathTerm};
use crate::error::{CoreError, Result};

/// A basic 1-morphism: a path inside `Y` or a jump `(i,j,x) ∈ Y^[2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Path(PathTerm),
    Jump(usize),
}

/// A formal composite of basic 1-morphisms in traversal order.
///
/// The empty list is the formal identity at `start`. A `Path` atom on the empty word is
/// the image of an identity path, which differs from the formal identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CTerm1 {
    pub start: usize,
    pub atoms: Vec<Atom>,
}

impl CTerm1 {
    pub fn id(start: usize) -> Self {
        CTerm1 { start, atoms: Vec::new() }
    }

    pub fn path(p: PathTerm) -> Self {
        CTerm1 { start: p.start, atoms: vec![Atom::Path(p)] }
    }

    pub fn is_id(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// Formal 2-morphisms over the basic generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CTerm2 {
    Id(CTerm1),
    /// A bigon in `Y`: `[γ] ⇒ [γ′]`.
    Bigon(BigonTerm),
    /// For a path `Θ: α → α′` in `Y^[2]`: `[π₁Θ, α′] ⇒ [α, π₂Θ]`.
    Theta { path: PathTerm, inv: bool },
    /// For `Ξ ∈ Y^[3]`: `[π₁₂Ξ, π₂₃Ξ] ⇒ [π₁₃Ξ]`.
    Xi { point: usize, inv: bool },
    /// For `a ∈ Y`: `[] ⇒ [(a,a)]`.
    DeltaA { point: usize, inv: bool },
    /// An associator or unifier, typed as the identity on the flattened word.
    Coherence(CTerm1),
    /// `[id_a] ⇒ []`.
    UStar { point: usize, inv: bool },
    /// `[γ₁, γ₂] ⇒ [γ₂∘γ₁]`.
    CStar { first: PathTerm, second: PathTerm, inv: bool },
    /// `first` then `second`.
    V(Box<CTerm2>, Box<CTerm2>),
    /// `first` on the first-traversed part, `second` after it.
    H(Box<CTerm2>, Box<CTerm2>),
}

impl CTerm2 {
    pub fn v(first: CTerm2, second: CTerm2) -> Self {
        match (&first, &second) {
            (CTerm2::Id(_), _) => second,
            (_, CTerm2::Id(_)) => first,
            _ => CTerm2::V(Box::new(first), Box::new(second)),
        }
    }

    pub fn h(first: CTerm2, second: CTerm2) -> Self {
        CTerm2::H(Box::new(first), Box::new(second))
    }

    /// Vertical composite of a non-empty list in application order.
    pub fn vpath(cells: Vec<CTerm2>, start: CTerm1) -> Self {
        cells.into_iter().fold(CTerm2::Id(start), CTerm2::v)
    }

    /// Structural inverse.
    pub fn inverse(&self, cx: &Computad) -> Self {
        match self {
            CTerm2::Id(l) => CTerm2::Id(l.clone()),
            CTerm2::Bigon(b) => CTerm2::Bigon(b.inverse(cx)),
            CTerm2::Theta { path, inv } => CTerm2::Theta { path: path.clone(), inv: !inv },
            CTerm2::Xi { point, inv } => CTerm2::Xi { point: *point, inv: !inv },
            CTerm2::DeltaA { point, inv } => CTerm2::DeltaA { point: *point, inv: !inv },
            CTerm2::Coherence(l) => CTerm2::Coherence(l.clone()),
            CTerm2::UStar { point, inv } => CTerm2::UStar { point: *point, inv: !inv },
            CTerm2::CStar { first, second, inv } => CTerm2::CStar { first: first.clone(), second: second.clone(), inv: !inv },
            CTerm2::V(a, b) => CTerm2::V(Box::new(b.inverse(cx)), Box::new(a.inverse(cx))),
            CTerm2::H(a, b) => CTerm2::H(Box::new(a.inverse(cx)), Box::new(b.inverse(cx))),
        }
    }

    /// Kinds of generator occurring in the term, for audits.
    pub fn visit(&self, f: &mut impl FnMut(&CTerm2)) {
        match self {
            CTerm2::V(a, b) | CTerm2::H(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => f(self),
        }
    }
}

/// The fibre tower of a cover together with the maps used by codescent terms.
#[derive(Debug, Clone)]
pub struct Codescent<'a> {
    pub tower: &'a FiberTower,
    /// `Y^[2] → Y` by the first and second index.
    pub pi1: CellMap,
    pub pi2: CellMap,
    /// `Y → M`.
    pub proj: CellMap,
}

impl<'a> Codescent<'a> {
    pub fn new(tower: &'a FiberTower) -> Self {
        Codescent {
            pi1: tower.index_map(2, &[0]).expect("π₁"),
            pi2: tower.index_map(2, &[1]).expect("π₂"),
            proj: tower.to_base(1),
            tower,
        }
    }

    pub fn base(&self) -> &Computad {
        self.tower.base()
    }
    pub fn y(&self) -> &Computad {
        &self.tower.space(1).cx
    }
    pub fn y2(&self) -> &Computad {
        &self.tower.space(2).cx
    }
    pub fn y3(&self) -> &Computad {
        &self.tower.space(3).cx
    }

    /// `(i, x) ∈ Y`.
    pub fn pt(&self, i: usize, x: usize) -> usize {
        self.tower.pt(&[i], x)
    }
    /// `(i, j, x) ∈ Y^[2]`.
    pub fn jump(&self, i: usize, j: usize, x: usize) -> usize {
        self.tower.pt(&[i, j], x)
    }
    /// `(i, j, k, x) ∈ Y^[3]`.
    pub fn triple(&self, i: usize, j: usize, k: usize, x: usize) -> usize {
        self.tower.pt(&[i, j, k], x)
    }

    /// Patch index and base vertex of a point of `Y`.
    pub fn split(&self, a: usize) -> (usize, usize) {
        let (t, x) = self.tower.space(1).vpoint(a);
        (t[0], x)
    }
    /// `(i, j, x)` of a point of `Y^[2]`.
    pub fn split2(&self, alpha: usize) -> (usize, usize, usize) {
        let (t, x) = self.tower.space(2).vpoint(alpha);
        (t[0], t[1], x)
    }
    /// `(i, j, k, x)` of a point of `Y^[3]`.
    pub fn split3(&self, xi: usize) -> (usize, usize, usize, usize) {
        let (t, x) = self.tower.space(3).vpoint(xi);
        (t[0], t[1], t[2], x)
    }

    /// `s` followed by the jump to patch `j`, omitted when trivial.
    pub fn jump_atoms(&self, i: usize, j: usize, x: usize) -> Vec<Atom> {
        if i == j {
            Vec::new()
        } else {
            vec![Atom::Jump(self.jump(i, j, x))]
        }
    }

    pub fn atom_src(&self, a: &Atom) -> usize {
        match a {
            Atom::Path(p) => p.start,
            Atom::Jump(al) => {
                let (i, _, x) = self.split2(*al);
                self.pt(i, x)
            }
        }
    }

    pub fn atom_tgt(&self, a: &Atom) -> usize {
        match a {
            Atom::Path(p) => p.end(self.y()),
            Atom::Jump(al) => {
                let (_, j, x) = self.split2(*al);
                self.pt(j, x)
            }
        }
    }

    pub fn inverse_atom(&self, a: &Atom) -> Atom {
        match a {
            Atom::Path(p) => Atom::Path(PathTerm { start: p.end(self.y()), letters: inverse_word(&p.letters) }),
            Atom::Jump(al) => {
                let (i, j, x) = self.split2(*al);
                Atom::Jump(self.jump(j, i, x))
            }
        }
    }

    /// The endpoint of a well-typed term.
    pub fn end(&self, l: &CTerm1) -> Result<usize> {
        let mut at = l.start;
        for (k, a) in l.atoms.iter().enumerate() {
            if let Atom::Path(p) = a {
                self.y().walk(p.start, &p.letters).map_err(|_| CoreError::typing(format!("atom {k}"), "path not well typed"))?;
                if !crate::base::path::is_reduced(&p.letters) {
                    return Err(CoreError::typing(format!("atom {k}"), "path not reduced"));
                }
            }
            if self.atom_src(a) != at {
                return Err(CoreError::typing(
                    format!("atom {k} of {}", self.show1(l)),
                    format!("starts at {}, expected {}", self.y().vertices[self.atom_src(a)], self.y().vertices[at]),
                ));
            }
            at = self.atom_tgt(a);
        }
        Ok(at)
    }

    pub fn concat(&self, a: &CTerm1, b: &CTerm1) -> CTerm1 {
        let mut atoms = a.atoms.clone();
        atoms.extend(b.atoms.iter().cloned());
        CTerm1 { start: a.start, atoms }
    }

    /// The weak inverse: reversed atoms, each inverted.
    pub fn inverse1(&self, l: &CTerm1) -> Result<CTerm1> {
        let end = self.end(l)?;
        Ok(CTerm1 { start: end, atoms: l.atoms.iter().rev().map(|a| self.inverse_atom(a)).collect() })
    }

    /// `p̄` on 1-morphisms: the reduced base word.
    pub fn project1(&self, l: &CTerm1) -> PathTerm {
        let (_, x) = self.split(l.start);
        let mut w = Vec::new();
        for a in &l.atoms {
            if let Atom::Path(p) = a {
                w.extend(self.proj.word(&p.letters));
            }
        }
        PathTerm { start: x, letters: reduce(&w) }
    }

    /// Source and target of a 2-term, checking every composition.
    pub fn boundary(&self, c: &CTerm2) -> Result<(CTerm1, CTerm1)> {
        let y = self.y();
        Ok(match c {
            CTerm2::Id(l) | CTerm2::Coherence(l) => {
                self.end(l)?;
                (l.clone(), l.clone())
            }
            CTerm2::Bigon(b) => {
                b.typecheck(y)?;
                (CTerm1::path(b.source.clone()), CTerm1::path(b.target(y)))
            }
            CTerm2::Theta { path, inv } => {
                let y2 = self.y2();
                let end = y2.walk(path.start, &path.letters)?;
                let (p1, p2) = (self.pi1.path(path), self.pi2.path(path));
                let src = CTerm1 { start: p1.start, atoms: vec![Atom::Path(p1), Atom::Jump(end)] };
                let tgt = CTerm1 { start: self.atom_src(&Atom::Jump(path.start)), atoms: vec![Atom::Jump(path.start), Atom::Path(p2)] };
                flip(src, tgt, *inv)
            }
            CTerm2::Xi { point, inv } => {
                let (i, j, k, x) = self.split3(*point);
                let src = CTerm1 { start: self.pt(i, x), atoms: vec![Atom::Jump(self.jump(i, j, x)), Atom::Jump(self.jump(j, k, x))] };
                let tgt = CTerm1 { start: self.pt(i, x), atoms: vec![Atom::Jump(self.jump(i, k, x))] };
                flip(src, tgt, *inv)
            }
            CTerm2::DeltaA { point, inv } => {
                let (i, x) = self.split(*point);
                flip(CTerm1::id(*point), CTerm1 { start: *point, atoms: vec![Atom::Jump(self.jump(i, i, x))] }, *inv)
            }
            CTerm2::UStar { point, inv } => flip(CTerm1::path(PathTerm::empty(*point)), CTerm1::id(*point), *inv),
            CTerm2::CStar { first, second, inv } => {
                let whole = first.then(y, second)?;
                let src = CTerm1 { start: first.start, atoms: vec![Atom::Path(first.clone()), Atom::Path(second.clone())] };
                flip(src, CTerm1::path(whole), *inv)
            }
            CTerm2::V(a, b) => {
                let (s1, t1) = self.boundary(a)?;
                let (s2, t2) = self.boundary(b)?;
                if t1 != s2 {
                    return Err(CoreError::typing(
                        "vertical composite",
                        format!("{} then {}", self.show1(&t1), self.show1(&s2)),
                    ));
                }
                (s1, t2)
            }
            CTerm2::H(a, b) => {
                let (s1, t1) = self.boundary(a)?;
                let (s2, t2) = self.boundary(b)?;
                let e = self.end(&s1)?;
                if e != s2.start {
                    return Err(CoreError::typing("horizontal composite", "endpoints do not match"));
                }
                (self.concat(&s1, &s2), self.concat(&t1, &t2))
            }
        })
    }

    /// `cell` with identity context on either side.
    pub fn whisker(&self, prefix: &CTerm1, cell: CTerm2, suffix: &CTerm1) -> CTerm2 {
        let mut out = cell;
        if !prefix.is_id() {
            out = CTerm2::h(CTerm2::Id(prefix.clone()), out);
        }
        if !suffix.is_id() {
            out = CTerm2::h(out, CTerm2::Id(suffix.clone()));
        }
        out
    }

    /// `p̄` on 2-morphisms, in normal form.
    pub fn project2(&self, c: &CTerm2) -> Result<BigonTerm> {
        let m = self.base();
        Ok(match c {
            CTerm2::Bigon(b) => self.proj.bigon(b).normal_form(m),
            CTerm2::V(a, b) => self.project2(a)?.vcomp(m, &self.project2(b)?)?.normal_form(m),
            CTerm2::H(a, b) => self.project2(a)?.hcomp(m, &self.project2(b)?)?.normal_form(m),
            other => {
                let (s, _) = self.boundary(other)?;
                BigonTerm::identity(self.project1(&s))
            }
        })
    }

    pub fn show_atom(&self, a: &Atom) -> String {
        let m = self.base();
        match a {
            Atom::Path(p) => {
                let (i, x) = self.split(p.start);
                format!("P({i},{},{})", m.vertices[x], m.word_label(&self.proj.word(&p.letters)))
            }
            Atom::Jump(al) => {
                let (i, j, x) = self.split2(*al);
                format!("J({i},{j},{})", m.vertices[x])
            }
        }
    }

    /// `P(i,v,word) ; J(i,j,v) ; …`, or `I(i,v)` for a formal identity.
    pub fn show1(&self, l: &CTerm1) -> String {
        if l.atoms.is_empty() {
            let (i, x) = self.split(l.start);
            return format!("I({i},{})", self.base().vertices[x]);
        }
        l.atoms.iter().map(|a| self.show_atom(a)).collect::<Vec<_>>().join(" ; ")
    }

    pub fn show2(&self, c: &CTerm2) -> String {
        let y = self.y();
        let inv = |b: bool| if b { "⁻¹" } else { "" };
        match c {
            CTerm2::Id(l) => format!("id[{}]", self.show1(l)),
            CTerm2::Coherence(l) => format!("coh[{}]", self.show1(l)),
            CTerm2::Bigon(b) => format!("Σ[{}]", b.display(y)),
            CTerm2::Theta { path, inv: i } => format!("Θ{}[{}]", inv(*i), path.display(self.y2())),
            CTerm2::Xi { point, inv: i } => format!("Ξ{}[{}]", inv(*i), self.y3().vertices[*point]),
            CTerm2::DeltaA { point, inv: i } => format!("Δ{}[{}]", inv(*i), y.vertices[*point]),
            CTerm2::UStar { point, inv: i } => format!("u*{}[{}]", inv(*i), y.vertices[*point]),
            CTerm2::CStar { first, second, inv: i } => {
                format!("c*{}[{},{}]", inv(*i), first.display(y), second.display(y))
            }
            CTerm2::V(a, b) => format!("({} • {})", self.show2(b), self.show2(a)),
            CTerm2::H(a, b) => format!("({} ∘ {})", self.show2(b), self.show2(a)),
        }
    }
}

fn flip(src: CTerm1, tgt: CTerm1, inv: bool) -> (CTerm1, CTerm1) {
    if inv {
        (tgt, src)
    } else {
        (src, tgt)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Path(p) => write!(f, "P{}:{:?}", p.start, p.letters),
            Atom::Jump(a) => write!(f, "J{a}"),
        }
    }
}
