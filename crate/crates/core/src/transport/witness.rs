use crate::base::path::reduce;
use crate::base::{PathModification, PathTransformation};
use crate::codescent::{Atom, CTerm1, Section};
use crate::descent::{DescentContext, DescentObject, DescentOneMor};
use crate::error::{CoreError, Result};

use super::reconstruct::Reconstruction;
use super::trivialized::TrivializedFunctor;

/// `ρ: Ex(Rec(D)) → D`: identity `h` and `ε(α) = R([ξ(a), ζ(b)] ⇒ [α])`.
pub fn rho(d: &DescentObject, cx: &DescentContext, section: &Section) -> Result<DescentOneMor> {
    let rec = Reconstruction::new(cx, d, section)?;
    let cd = section.cd;
    let h = PathTransformation::identity(&rec.r.triv_i, cx.t);
    let eps = (0..cx.y(2).vertices.len())
        .map(|al| {
            let (i, j, x) = cd.split2(al);
            let (a, b) = (cd.pt(i, x), cd.pt(j, x));
            let src = cd.concat(&section.xi(a), &section.zeta(b));
            let tgt = CTerm1 { start: a, atoms: vec![Atom::Jump(al)] };
            rec.eval2(&cd.normalize_jump_hom(&src, &tgt)?)
        })
        .collect::<Result<_>>()?;
    Ok(DescentOneMor { h, eps: PathModification { comp: eps } })
}

/// `η: F → Rec(Ex(TF))` with `η(x) = t(s(x))`, pasting `t` squares on path atoms of the
/// lifts and `i_t⁻¹` on jumps.
pub fn eta(tf: &TrivializedFunctor, d: &DescentObject, cx: &DescentContext, section: &Section) -> Result<PathTransformation> {
    let rec = Reconstruction::new(cx, d, section)?;
    let t = cx.t;
    let (m, y) = (cx.y(0), cx.y(1));
    let pf = tf.pulled(cx);
    let proj = &section.cd.proj;
    let b = &tf.t;
    let comp0: Vec<usize> = (0..m.vertices.len()).map(|x| b.forward.comp0[section.obj(x)]).collect();
    let mut comp1 = Vec::with_capacity(m.n_letters());
    for l in 0..m.n_letters() {
        let x = m.letter_src(l);
        let lift = section.letter(l);
        let mut cur = t.id2(comp0[x]);
        let mut word = Vec::new();
        for a in &lift.atoms {
            let (piece, image) = match a {
                Atom::Path(p) => (b.forward.path(&pf, &rec.r.triv_i, y, t, p)?, rec.r.triv_i.path(y, t, p)?),
                Atom::Jump(al) => {
                    let (i, j, x) = section.cd.split2(*al);
                    let (ai, aj) = (section.cd.pt(i, x), section.cd.pt(j, x));
                    (t.wl(b.forward.comp0[aj], t.inv(b.i.comp[ai])?)?, d.g.comp0[*al])
                }
            };
            let before = tf.f.word(m, t, x, &word)?;
            cur = t.v(t.wl(image, cur)?, t.wr(piece, before)?)?;
            if let Atom::Path(p) = a {
                word.extend(proj.word(&p.letters));
            }
        }
        if word != [l] {
            if reduce(&word) != [l] {
                return Err(CoreError::typing(format!("s({})", m.letter_label(l)), "lift does not project to the letter"));
            }
            let red = tf.f.red(m, t, x, &word)?;
            cur = t.v(cur, t.wl(comp0[m.letter_tgt(l)], t.inv(red)?)?)?;
        }
        comp1.push(cur);
    }
    Ok(PathTransformation { comp0, comp1 })
}

/// The comparison `Rec_{s₁}(D) → Rec_{s₂}(D)`: components `R(jump from s₁(x) to s₂(x))`
/// and canonical cells on letters.
pub fn choice_comparison(d: &DescentObject, cx: &DescentContext, s1: &Section, s2: &Section) -> Result<PathTransformation> {
    let rec = Reconstruction::new(cx, d, s1)?;
    let cd = s1.cd;
    let m = cx.y(0);
    let jumps = |x: usize| CTerm1 { start: s1.obj(x), atoms: cd.jump_atoms(s1.choice.chi0[x], s2.choice.chi0[x], x) };
    let comp0 = (0..m.vertices.len()).map(|x| rec.eval1(&jumps(x))).collect::<Result<_>>()?;
    let comp1 = (0..m.n_letters())
        .map(|l| {
            let (x, y) = (m.letter_src(l), m.letter_tgt(l));
            let src = cd.concat(&s1.letter(l), &jumps(y));
            let tgt = cd.concat(&jumps(x), &s2.letter(l));
            rec.eval2(&cd.canonical_2cell(&src, &tgt)?)
        })
        .collect::<Result<_>>()?;
    Ok(PathTransformation { comp0, comp1 })
}
