use crate::base::{PathFunctor, PathModification, PathTerm, PathTransformation};
use crate::codescent::{Atom, CTerm1, CTerm2, Section};
use crate::descent::{check_descent_object, DescentContext, DescentObject, DescentOneMor, DescentPairing, DescentTwoMor};
use crate::error::{CoreError, Result};
use crate::twocat::{EquivalenceBundle, C2};

use super::trivialized::TrivializedFunctor;

/// `R` of a descent object with its section: evaluates lifts and their cells in `T`.
pub struct Reconstruction<'s, 'd, 'a> {
    pub cx: &'d DescentContext<'a>,
    pub section: &'s Section<'s, 'a>,
    pub r: DescentPairing<'d, 'a>,
}

impl<'s, 'd, 'a> Reconstruction<'s, 'd, 'a> {
    pub fn new(cx: &'d DescentContext<'a>, d: &'d DescentObject, section: &'s Section<'s, 'a>) -> Result<Self> {
        Ok(Reconstruction { cx, section, r: DescentPairing::new(cx, d)? })
    }

    pub fn eval1(&self, l: &CTerm1) -> Result<usize> {
        self.section.cd.eval1(&self.r, l)
    }

    pub fn eval2(&self, c: &CTerm2) -> Result<C2> {
        self.section.cd.eval2(&self.r, c)
    }

    /// `F = R∘s` with identity unitors.
    pub fn functor(&self) -> Result<PathFunctor> {
        let s = self.section;
        let m = self.cx.y(0);
        let t = self.cx.t;
        let obj: Vec<usize> = (0..m.vertices.len()).map(|x| self.r.triv_i.obj[s.obj(x)]).collect();
        let one = (0..m.n_letters()).map(|l| self.eval1(&s.letter(l))).collect::<Result<_>>()?;
        let kappa = (0..m.n_letters()).map(|l| self.eval2(&s.cancel(l)?)).collect::<Result<_>>()?;
        let face = (0..m.faces.len()).map(|f| self.eval2(&s.face(f)?)).collect::<Result<_>>()?;
        let unitor = obj.iter().map(|&x| t.id2_obj(x)).collect();
        let f = PathFunctor { obj, one, kappa, face, unitor };
        f.typecheck(m, t)?;
        Ok(f)
    }

    /// The trivialization of `R∘s` by `t(a) = R(ζ(a))` and `t̄(a) = R(ξ(a))`.
    pub fn trivialization(&self) -> Result<EquivalenceBundle<PathTransformation, PathModification>> {
        let s = self.section;
        let y = self.cx.y(1);
        let n = y.vertices.len();
        let letter = |l: usize| PathTerm { start: y.letter_src(l), letters: vec![l] };
        let forward = PathTransformation {
            comp0: (0..n).map(|a| self.eval1(&s.zeta(a))).collect::<Result<_>>()?,
            comp1: (0..y.n_letters()).map(|l| self.eval2(&s.zeta_path(&letter(l))?)).collect::<Result<_>>()?,
        };
        let inverse = PathTransformation {
            comp0: (0..n).map(|a| self.eval1(&s.xi(a))).collect::<Result<_>>()?,
            comp1: (0..y.n_letters()).map(|l| self.eval2(&s.xi_path(&letter(l))?)).collect::<Result<_>>()?,
        };
        let i = PathModification { comp: (0..n).map(|a| self.eval2(&s.i_zeta(a)?)).collect::<Result<_>>()? };
        let j = PathModification { comp: (0..n).map(|a| self.eval2(&s.j_zeta(a)?)).collect::<Result<_>>()? };
        Ok(EquivalenceBundle { forward, inverse, i, j })
    }
}

/// `Rec(D) = R∘s` with the trivialization built from `ζ`.
pub fn reconstruct(d: &DescentObject, cx: &DescentContext, section: &Section) -> Result<TrivializedFunctor> {
    let report = check_descent_object(d, cx)?;
    if !report.is_empty() {
        return Err(CoreError::Validation(format!("descent object: {}", report.lines().join("; "))));
    }
    let rec = Reconstruction::new(cx, d, section)?;
    Ok(TrivializedFunctor { f: rec.functor()?, triv: d.triv.clone(), t: rec.trivialization()? })
}

/// `R(m)` at a 1-morphism term: `h(b)∘R(l) ⇒ R′(l)∘h(a)`, pasting `h` squares on paths
/// and `ε` on jumps.
pub fn pairing_r_1mor(m: &DescentOneMor, r1: &DescentPairing, r2: &DescentPairing, l: &CTerm1) -> Result<C2> {
    let cx = r1.cx;
    let (t, y) = (cx.t, cx.y(1));
    let mut cur = t.id2(m.h.comp0[l.start]);
    let mut prefix = t.id1(r1.triv_i.obj[l.start]);
    for a in &l.atoms {
        let (piece, f1, f2) = match a {
            Atom::Path(p) => (m.h.path(&r1.triv_i, &r2.triv_i, y, t, p)?, r1.triv_i.path(y, t, p)?, r2.triv_i.path(y, t, p)?),
            Atom::Jump(al) => (m.eps.comp[*al], r1.d.g.comp0[*al], r2.d.g.comp0[*al]),
        };
        cur = t.v(t.wl(f2, cur)?, t.wr(piece, prefix)?)?;
        prefix = t.c1(f1, prefix)?;
    }
    Ok(cur)
}

/// `Rec(m) = R(m)∘s`.
pub fn reconstruct_1mor(m: &DescentOneMor, d: &DescentObject, d2: &DescentObject, cx: &DescentContext, section: &Section) -> Result<PathTransformation> {
    let (r1, r2) = (DescentPairing::new(cx, d)?, DescentPairing::new(cx, d2)?);
    let base = cx.y(0);
    Ok(PathTransformation {
        comp0: (0..base.vertices.len()).map(|x| m.h.comp0[section.obj(x)]).collect(),
        comp1: (0..base.n_letters()).map(|l| pairing_r_1mor(m, &r1, &r2, &section.letter(l))).collect::<Result<_>>()?,
    })
}

/// `Rec(E)(x) = E(s(x))`.
pub fn reconstruct_2mor(e: &DescentTwoMor, cx: &DescentContext, section: &Section) -> PathModification {
    PathModification { comp: (0..cx.y(0).vertices.len()).map(|x| e.e.comp[section.obj(x)]).collect() }
}
