use crate::base::{inverse1, PathFunctor, PathModification, PathTransformation};
use crate::error::{CoreError, Result};
use crate::twocat::{TwoCategoryTable, C1, C2};

use super::context::DescentContext;
use super::morphism::DescentOneMor;
use super::object::DescentObject;

fn conj(t: &TwoCategoryTable, left: C1, a: C2, right: C1) -> Result<C2> {
    t.wl(left, t.wr(a, right)?)
}

/// Conjugates `D` by invertible 1-cells `k(a)` of `Gr`, one per point of `Y`, and returns
/// the conjugate with the 1-morphism `(i∘k, id): D → D′`.
pub fn gauge(d: &DescentObject, k: &[C1], cx: &DescentContext) -> Result<(DescentObject, DescentOneMor)> {
    let (gr, t) = (cx.gr, cx.t);
    let (y1, y2) = (cx.y(1), cx.y(2));
    if k.len() != y1.vertices.len() {
        return Err(CoreError::typing("gauge", "one 1-cell per point of Y"));
    }
    let kinv = k
        .iter()
        .map(|&c| inverse1(gr, c).ok_or_else(|| CoreError::Capability(format!("gauge cell {} is not invertible", gr.one_label(c)))))
        .collect::<Result<Vec<_>>>()?;
    let tr = &d.triv;
    let triv = PathFunctor {
        obj: k.iter().map(|&c| gr.tgt1(c)).collect(),
        one: (0..y1.n_letters())
            .map(|l| gr.path1(gr.src1(kinv[y1.letter_src(l)]), &[kinv[y1.letter_src(l)], tr.one[l], k[y1.letter_tgt(l)]]))
            .collect::<Result<_>>()?,
        kappa: (0..y1.n_letters()).map(|l| conj(gr, k[y1.letter_src(l)], tr.kappa[l], kinv[y1.letter_src(l)])).collect::<Result<_>>()?,
        face: y1
            .faces
            .iter()
            .zip(&tr.face)
            .map(|(f, &a)| conj(gr, k[f.src.end(y1)], a, kinv[f.src.start]))
            .collect::<Result<_>>()?,
        unitor: (0..y1.vertices.len()).map(|x| conj(gr, k[x], tr.unitor[x], kinv[x])).collect::<Result<_>>()?,
    };
    let ki: Vec<C1> = k.iter().map(|&c| cx.i.map1[c]).collect();
    let kii: Vec<C1> = kinv.iter().map(|&c| cx.i.map1[c]).collect();
    let at2 = |alpha: usize| {
        let (tu, x) = cx.split(2, alpha);
        (cx.pt(&[tu[0]], x), cx.pt(&[tu[1]], x))
    };
    let g = PathTransformation {
        comp0: (0..y2.vertices.len())
            .map(|alpha| {
                let (a, b) = at2(alpha);
                t.path1(t.src1(kii[a]), &[kii[a], d.g.comp0[alpha], ki[b]])
            })
            .collect::<Result<_>>()?,
        comp1: (0..y2.n_letters())
            .map(|l| {
                let (a, _) = at2(y2.letter_src(l));
                let (_, b) = at2(y2.letter_tgt(l));
                conj(t, ki[b], d.g.comp1[l], kii[a])
            })
            .collect::<Result<_>>()?,
    };
    let psi = PathModification {
        comp: (0..y1.vertices.len()).map(|a| conj(t, ki[a], d.psi.comp[a], kii[a])).collect::<Result<_>>()?,
    };
    let y3 = cx.tower.space(3);
    let f = PathModification {
        comp: y3
            .vertex_points
            .iter()
            .enumerate()
            .map(|(n, (tu, x))| conj(t, ki[cx.pt(&[tu[2]], *x)], d.f.comp[n], kii[cx.pt(&[tu[0]], *x)]))
            .collect::<Result<_>>()?,
    };
    let d2 = DescentObject { triv, g, psi, f };
    let ti2 = cx.post(&d2.triv)?;
    let h = PathTransformation {
        comp0: ki.clone(),
        comp1: (0..y1.n_letters()).map(|l| t.id2(t.c1(ti2.one[l], ki[y1.letter_src(l)]).expect("typed"))).collect(),
    };
    let eps = PathModification {
        comp: (0..y2.vertices.len())
            .map(|alpha| {
                let (_, b) = at2(alpha);
                Ok(t.id2(t.c1(ki[b], d.g.comp0[alpha])?))
            })
            .collect::<Result<_>>()?,
    };
    Ok((d2, DescentOneMor { h, eps }))
}
