use crate::base::{check_path_functor, check_path_modification, check_path_transformation, PathFunctor, PathModification, PathTransformation};
use crate::error::Result;
use crate::report::Report;
use crate::twocat::{ObjId, TwoCategoryTable, C1, C2};

use super::context::DescentContext;

/// A descent object `(triv, g, ψ, f)`.
///
/// `triv` is a functor `P₂(Y) → Gr`; `g: π₁*triv_i → π₂*triv_i` over `Y^[2]`;
/// `ψ(a): id ⇒ g(a,a)` over `Y`; `f(Ξ): g(j,k)∘g(i,j) ⇒ g(i,k)` over `Y^[3]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentObject {
    pub triv: PathFunctor,
    pub g: PathTransformation,
    pub psi: PathModification,
    pub f: PathModification,
}

pub(crate) fn label2(t: &TwoCategoryTable, a: &Result<C2>) -> String {
    match a {
        Ok(a) => t.two_label(*a).to_string(),
        Err(_) => "undefined".into(),
    }
}

pub(crate) fn compare(r: &mut Report, t: &TwoCategoryTable, kind: &str, at: impl FnOnce() -> String, lhs: Result<C2>, rhs: Result<C2>) {
    match (&lhs, &rhs) {
        (Ok(a), Ok(b)) if a == b => {}
        _ => r.add(kind, at(), label2(t, &lhs), label2(t, &rhs)),
    }
}

pub(crate) fn prefix(mut r: Report, what: &str) -> Report {
    for v in &mut r.violations {
        v.at = format!("{what} {}", v.at);
    }
    r
}

impl DescentObject {
    /// Constant `triv` at an object of `Gr` with identity `g`, `ψ` and `f`.
    pub fn trivial(cx: &DescentContext, x: ObjId) -> Result<Self> {
        Self::pulled_back(cx, &PathFunctor::constant(cx.y(0), cx.gr, x))
    }

    /// `triv = π*F` for a functor `F: P₂(M) → Gr`, glued by identities.
    pub fn pulled_back(cx: &DescentContext, global: &PathFunctor) -> Result<Self> {
        let triv = global.pullback(cx.y(1), &cx.tower.to_base(1));
        let ti = cx.post(&triv)?;
        let g = PathTransformation::identity(&ti.pullback(cx.y(2), &cx.p1), cx.t);
        let psi = PathModification::identity(&PathTransformation::identity(&ti, cx.t), cx.t);
        let f = PathModification::identity(&g.pullback(cx.y(3), &cx.p13), cx.t);
        Ok(DescentObject { triv, g, psi, f })
    }

    /// `π_k*triv_i` over `Y^[2]` for `k = 1, 2`.
    pub fn sides(&self, cx: &DescentContext) -> Result<(PathFunctor, PathFunctor)> {
        let ti = cx.post(&self.triv)?;
        Ok((ti.pullback(cx.y(2), &cx.p1), ti.pullback(cx.y(2), &cx.p2)))
    }

    /// `π₂₃*g ∘ π₁₂*g` and `π₁₃*g` over `Y^[3]`, with the outer functors.
    pub fn triple_sides(&self, cx: &DescentContext) -> Result<(PathTransformation, PathTransformation, PathFunctor, PathFunctor)> {
        let ti = cx.post(&self.triv)?;
        let y3 = cx.y(3);
        let (f1, f3) = (ti.pullback(y3, &cx.q1), ti.pullback(y3, &cx.q3));
        let g12 = self.g.pullback(y3, &cx.p12);
        let g23 = self.g.pullback(y3, &cx.p23);
        let comp = PathTransformation::compose(&g23, &g12, &f3, y3, cx.t)?;
        Ok((comp, self.g.pullback(y3, &cx.p13), f1, f3))
    }

    pub fn g_at(&self, cx: &DescentContext, i: usize, j: usize, x: usize) -> C1 {
        self.g.comp0[cx.pt(&[i, j], x)]
    }

    pub fn f_at(&self, cx: &DescentContext, i: usize, j: usize, k: usize, x: usize) -> C2 {
        self.f.comp[cx.pt(&[i, j, k], x)]
    }

    pub fn psi_at(&self, cx: &DescentContext, i: usize, x: usize) -> C2 {
        self.psi.comp[cx.pt(&[i], x)]
    }
}

/// Every failing instance of the functor, transformation and modification axioms, the
/// invertibility requirements, and diagrams (2) and (3).
pub fn check_descent_object(d: &DescentObject, cx: &DescentContext) -> Result<Report> {
    let t = cx.t;
    let (y1, y2, y3) = (cx.y(1), cx.y(2), cx.y(3));
    let mut r = Report::new();
    d.triv.typecheck(y1, cx.gr)?;
    r.extend(prefix(check_path_functor(&d.triv, y1, cx.gr, cx.max_len)?, "triv"));
    let ti = cx.post(&d.triv)?;
    let (f1, f2) = d.sides(cx)?;
    r.extend(prefix(check_path_transformation(&d.g, &f1, &f2, y2, t, cx.max_len)?, "g"));
    let dg = d.g.pullback(y1, &cx.diag);
    r.extend(prefix(check_path_modification(&d.psi, &PathTransformation::identity(&ti, t), &dg, &ti, &ti, y1, t)?, "ψ"));
    let (comp, g13, g1, g3) = d.triple_sides(cx)?;
    r.extend(prefix(check_path_modification(&d.f, &comp, &g13, &g1, &g3, y3, t)?, "f"));
    for (a, &c) in d.psi.comp.iter().enumerate() {
        if t.inv2(c).is_none() {
            r.add("invertible", format!("ψ({})", y1.vertices[a]), t.two_label(c), "no inverse");
        }
    }
    for (a, &c) in d.f.comp.iter().enumerate() {
        if t.inv2(c).is_none() {
            r.add("invertible", format!("f({})", y3.vertices[a]), t.two_label(c), "no inverse");
        }
    }
    for alpha in 0..y2.vertices.len() {
        let (tu, x) = cx.split(2, alpha);
        let (i, j) = (tu[0], tu[1]);
        let g = d.g.comp0[alpha];
        let at = || format!("α={}", y2.vertices[alpha]);
        let lhs = (|| t.v(d.f_at(cx, i, j, j, x), t.wr(d.psi_at(cx, j, x), g)?))();
        compare(&mut r, t, "(2)", at, lhs, Ok(t.id2(g)));
        let lhs = (|| t.v(d.f_at(cx, i, i, j, x), t.wl(g, d.psi_at(cx, i, x))?))();
        compare(&mut r, t, "(2)", || format!("α={},l", y2.vertices[alpha]), lhs, Ok(t.id2(g)));
    }
    let y4 = cx.tower.space(4);
    for (n, (tu, x)) in y4.vertex_points.iter().enumerate() {
        let (i, j, k, l, x) = (tu[0], tu[1], tu[2], tu[3], *x);
        let lhs = (|| t.v(d.f_at(cx, i, k, l, x), t.wl(d.g_at(cx, k, l, x), d.f_at(cx, i, j, k, x))?))();
        let rhs = (|| t.v(d.f_at(cx, i, j, l, x), t.wr(d.f_at(cx, j, k, l, x), d.g_at(cx, i, j, x))?))();
        compare(&mut r, t, "(3)", || format!("Ψ={}", y4.cx.vertices[n]), lhs, rhs);
    }
    Ok(r)
}

/// Unit-type data are strict identities: `Δ*g = id`, `g∘Δ₂₁*g = id`, `ψ = id`, `Δ₁₂₁*f = id`.
pub fn is_normalized(d: &DescentObject, cx: &DescentContext) -> bool {
    let t = cx.t;
    let y1 = cx.y(1);
    let y2 = cx.y(2);
    let Ok(ti) = cx.post(&d.triv) else { return false };
    let dg = d.g.pullback(y1, &cx.diag);
    if dg != PathTransformation::identity(&ti, t) {
        return false;
    }
    if !d.psi.comp.iter().all(|&c| t.is_identity2(c)) {
        return false;
    }
    let f1 = ti.pullback(y2, &cx.p1);
    let swapped = d.g.pullback(y2, &cx.swap);
    match PathTransformation::compose(&swapped, &d.g, &f1, y2, t) {
        Ok(c) if c == PathTransformation::identity(&f1, t) => {}
        _ => return false,
    }
    d.f.pullback(&cx.d121).comp.iter().all(|&c| t.is_identity2(c))
}
