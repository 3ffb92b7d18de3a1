use crate::base::{PathModification, PathTransformation};
use crate::descent::{DescentContext, DescentObject, DescentOneMor, DescentTwoMor};
use crate::error::Result;

use super::trivialized::TrivializedFunctor;

/// `Ex(TF)`: `g = π₂*t∘π₁*t̄`, `ψ = j_t`, `f(i,j,k) = t_k∘i_t(j)∘t̄_i`.
pub fn extract(tf: &TrivializedFunctor, cx: &DescentContext) -> Result<DescentObject> {
    tf.validate(cx)?;
    extract_unchecked(tf, cx)
}

/// `Ex(TF)` without validating `TF` first.
pub fn extract_unchecked(tf: &TrivializedFunctor, cx: &DescentContext) -> Result<DescentObject> {
    let t = cx.t;
    let (y2, y3) = (cx.y(2), cx.y(3));
    let b = &tf.t;
    let t2 = b.forward.pullback(y2, &cx.p2);
    let tb1 = b.inverse.pullback(y2, &cx.p1);
    let g = PathTransformation::compose(&t2, &tb1, &tf.triv, y2, t)?;
    let f = (0..y3.vertices.len())
        .map(|p| {
            let (tu, x) = cx.split(3, p);
            let (i, j, k) = (cx.pt(&tu[..1], x), cx.pt(&tu[1..2], x), cx.pt(&tu[2..], x));
            t.hpath(&[t.id2(b.inverse.comp0[i]), b.i.comp[j], t.id2(b.forward.comp0[k])])
        })
        .collect::<Result<_>>()?;
    Ok(DescentObject { triv: tf.triv.clone(), g, psi: b.j.clone(), f: PathModification { comp: f } })
}

/// `Ex(A)` for a transformation `A: F → F′`: `h = t′∘π*A∘t̄` and `ε` built from `i_t` and `i_{t′}⁻¹`.
pub fn extract_1mor(a: &PathTransformation, tf: &TrivializedFunctor, tf2: &TrivializedFunctor, cx: &DescentContext) -> Result<DescentOneMor> {
    let t = cx.t;
    let (y, y2) = (cx.y(1), cx.y(2));
    let pa = a.pullback(y, &cx.tower.to_base(1));
    let inner = PathTransformation::compose(&pa, &tf.t.inverse, &tf2.pulled(cx), y, t)?;
    let h = PathTransformation::compose(&tf2.t.forward, &inner, &tf2.triv, y, t)?;
    let eps = (0..y2.vertices.len())
        .map(|p| {
            let (tu, x) = cx.split(2, p);
            let (i, j) = (cx.pt(&tu[..1], x), cx.pt(&tu[1..], x));
            let ax = t.id2(a.comp0[x]);
            let (tbi, tj2) = (t.id2(tf.t.inverse.comp0[i]), t.id2(tf2.t.forward.comp0[j]));
            let cancel = t.hpath(&[tbi, tf.t.i.comp[j], ax, tj2])?;
            let insert = t.hpath(&[tbi, ax, t.inv(tf2.t.i.comp[i])?, tj2])?;
            t.v(insert, cancel)
        })
        .collect::<Result<_>>()?;
    Ok(DescentOneMor { h, eps: PathModification { comp: eps } })
}

/// `Ex(B)` for a modification `B: A₁ ⇒ A₂`: `E(a) = t′_a∘B(x)∘t̄_a`.
pub fn extract_2mor(b: &PathModification, tf: &TrivializedFunctor, tf2: &TrivializedFunctor, cx: &DescentContext) -> Result<DescentTwoMor> {
    let t = cx.t;
    let proj = cx.tower.to_base(1);
    let e = (0..cx.y(1).vertices.len())
        .map(|p| t.wl(tf2.t.forward.comp0[p], t.wr(b.comp[proj.vert[p]], tf.t.inverse.comp0[p])?))
        .collect::<Result<_>>()?;
    Ok(DescentTwoMor { e: PathModification { comp: e } })
}

/// `Ex(A₂)∘Ex(A₁) ⇒ Ex(A₂∘A₁)`, cancelling `t̄′∘t′` with `i_{t′}`.
pub fn extraction_compositor(
    a1: &PathTransformation,
    a2: &PathTransformation,
    tf1: &TrivializedFunctor,
    tf2: &TrivializedFunctor,
    tf3: &TrivializedFunctor,
    cx: &DescentContext,
) -> Result<DescentTwoMor> {
    let t = cx.t;
    let proj = cx.tower.to_base(1);
    let e = (0..cx.y(1).vertices.len())
        .map(|p| {
            let x = proj.vert[p];
            t.hpath(&[
                t.id2(tf1.t.inverse.comp0[p]),
                t.id2(a1.comp0[x]),
                tf2.t.i.comp[p],
                t.id2(a2.comp0[x]),
                t.id2(tf3.t.forward.comp0[p]),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(DescentTwoMor { e: PathModification { comp: e } })
}

/// `u_F = j_t⁻¹: Ex(id_F) ⇒ id`.
pub fn extraction_unitor(tf: &TrivializedFunctor, cx: &DescentContext) -> Result<DescentTwoMor> {
    Ok(DescentTwoMor { e: tf.t.j.inverse(cx.t)? })
}
