use crate::base::{check_path_modification, check_path_transformation, PathFunctor, PathModification, PathTransformation};
use crate::error::{CoreError, Result};
use crate::report::Report;

use super::context::DescentContext;
use super::object::{compare, prefix, DescentObject};

/// A descent 1-morphism `(h, ε)`: `h: triv_i → triv′_i` over `Y` and
/// `ε(α): h(j)∘g(α) ⇒ g′(α)∘h(i)` over `Y^[2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentOneMor {
    pub h: PathTransformation,
    pub eps: PathModification,
}

/// A descent 2-morphism: a modification `E: h₁ ⇒ h₂` over `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentTwoMor {
    pub e: PathModification,
}

/// `π₂*h∘g` and `g′∘π₁*h`, the source and target of `ε`.
fn eps_sides(
    m: &DescentOneMor,
    d: &DescentObject,
    d2: &DescentObject,
    cx: &DescentContext,
) -> Result<(PathTransformation, PathTransformation, PathFunctor, PathFunctor)> {
    let y2 = cx.y(2);
    let (f1, _) = d.sides(cx)?;
    let (_, f2) = d2.sides(cx)?;
    let h1 = m.h.pullback(y2, &cx.p1);
    let h2 = m.h.pullback(y2, &cx.p2);
    let src = PathTransformation::compose(&h2, &d.g, &f2, y2, cx.t)?;
    let tgt = PathTransformation::compose(&d2.g, &h1, &f2, y2, cx.t)?;
    Ok((src, tgt, f1, f2))
}

impl DescentOneMor {
    /// `h = id` and `ε = id`.
    pub fn identity(d: &DescentObject, cx: &DescentContext) -> Result<Self> {
        let ti = cx.post(&d.triv)?;
        let h = PathTransformation::identity(&ti, cx.t);
        let eps = PathModification::identity(&d.g, cx.t);
        Ok(DescentOneMor { h, eps })
    }

    pub fn h_at(&self, cx: &DescentContext, i: usize, x: usize) -> usize {
        self.h.comp0[cx.pt(&[i], x)]
    }

    pub fn eps_at(&self, cx: &DescentContext, i: usize, j: usize, x: usize) -> usize {
        self.eps.comp[cx.pt(&[i, j], x)]
    }
}

/// Every failing instance of the axioms of `h` and `ε`, invertibility of `ε`, and
/// diagrams (4) and (5).
pub fn check_descent_1mor(m: &DescentOneMor, d: &DescentObject, d2: &DescentObject, cx: &DescentContext) -> Result<Report> {
    let t = cx.t;
    let (y1, y2, y3) = (cx.y(1), cx.y(2), cx.y(3));
    let mut r = Report::new();
    let (ti, ti2) = (cx.post(&d.triv)?, cx.post(&d2.triv)?);
    r.extend(prefix(check_path_transformation(&m.h, &ti, &ti2, y1, t, cx.max_len)?, "h"));
    let (src, tgt, f1, f2) = eps_sides(m, d, d2, cx)?;
    r.extend(prefix(check_path_modification(&m.eps, &src, &tgt, &f1, &f2, y2, t)?, "ε"));
    for (a, &c) in m.eps.comp.iter().enumerate() {
        if t.inv2(c).is_none() {
            r.add("invertible", format!("ε({})", y2.vertices[a]), t.two_label(c), "no inverse");
        }
    }
    for a in 0..y1.vertices.len() {
        let (tu, x) = cx.split(1, a);
        let i = tu[0];
        let h = m.h.comp0[a];
        let lhs = (|| t.v(m.eps_at(cx, i, i, x), t.wl(h, d.psi.comp[a])?))();
        let rhs = t.wr(d2.psi.comp[a], h);
        compare(&mut r, t, "(4)", || format!("a={}", y1.vertices[a]), lhs, rhs);
    }
    for xi in 0..y3.vertices.len() {
        let (tu, x) = cx.split(3, xi);
        let (i, j, k) = (tu[0], tu[1], tu[2]);
        let lhs = (|| t.v(m.eps_at(cx, i, k, x), t.wl(m.h_at(cx, k, x), d.f_at(cx, i, j, k, x))?))();
        let rhs = (|| {
            let a = t.wr(m.eps_at(cx, j, k, x), d.g_at(cx, i, j, x))?;
            let b = t.wl(d2.g_at(cx, j, k, x), m.eps_at(cx, i, j, x))?;
            let c = t.wr(d2.f_at(cx, i, j, k, x), m.h_at(cx, i, x))?;
            t.vpath(&[a, b, c])
        })();
        compare(&mut r, t, "(5)", || format!("Ξ={}", y3.vertices[xi]), lhs, rhs);
    }
    Ok(r)
}

/// The modification axiom for `E` and diagram (6) at every point of `Y^[2]`.
pub fn check_descent_2mor(
    e: &DescentTwoMor,
    m1: &DescentOneMor,
    m2: &DescentOneMor,
    d: &DescentObject,
    d2: &DescentObject,
    cx: &DescentContext,
) -> Result<Report> {
    let t = cx.t;
    let (y1, y2) = (cx.y(1), cx.y(2));
    let (ti, ti2) = (cx.post(&d.triv)?, cx.post(&d2.triv)?);
    let mut r = prefix(check_path_modification(&e.e, &m1.h, &m2.h, &ti, &ti2, y1, t)?, "E");
    for alpha in 0..y2.vertices.len() {
        let (tu, x) = cx.split(2, alpha);
        let (i, j) = (tu[0], tu[1]);
        let (ei, ej) = (e.e.comp[cx.pt(&[i], x)], e.e.comp[cx.pt(&[j], x)]);
        let lhs = (|| t.v(m2.eps.comp[alpha], t.wr(ej, d.g.comp0[alpha])?))();
        let rhs = (|| t.v(t.wl(d2.g.comp0[alpha], ei)?, m1.eps.comp[alpha]))();
        compare(&mut r, t, "(6)", || format!("α={}", y2.vertices[alpha]), lhs, rhs);
    }
    Ok(r)
}

/// `m₂₃∘m₁₂`: `h = h₂₃∘h₁₂`, `ε = (ε₂₃ h₁₂(i)) • (h₂₃(j) ε₁₂)`.
pub fn compose_descent(m12: &DescentOneMor, m23: &DescentOneMor, d3: &DescentObject, cx: &DescentContext) -> Result<DescentOneMor> {
    let t = cx.t;
    let (y1, y2) = (cx.y(1), cx.y(2));
    if m12.h.comp0.len() != m23.h.comp0.len() {
        return Err(CoreError::typing("compose_descent", "1-morphisms over different covers"));
    }
    for (a, (&h1, &h2)) in m12.h.comp0.iter().zip(&m23.h.comp0).enumerate() {
        if t.tgt1(h1) != t.src1(h2) {
            return Err(CoreError::typing(format!("compose_descent at {}", y1.vertices[a]), "h components not composable"));
        }
    }
    let ti3 = cx.post(&d3.triv)?;
    let h = PathTransformation::compose(&m23.h, &m12.h, &ti3, y1, t)?;
    let comp = (0..y2.vertices.len())
        .map(|alpha| {
            let (tu, x) = cx.split(2, alpha);
            let (i, j) = (tu[0], tu[1]);
            t.v(t.wr(m23.eps.comp[alpha], m12.h_at(cx, i, x))?, t.wl(m23.h_at(cx, j, x), m12.eps.comp[alpha])?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DescentOneMor { h, eps: PathModification { comp } })
}

impl DescentTwoMor {
    pub fn identity(m: &DescentOneMor, cx: &DescentContext) -> Self {
        DescentTwoMor { e: PathModification::identity(&m.h, cx.t) }
    }

    /// Vertical composite `next • self`.
    pub fn vcomp(&self, next: &DescentTwoMor, cx: &DescentContext) -> Result<Self> {
        Ok(DescentTwoMor { e: self.e.vcomp(&next.e, cx.t)? })
    }
}

/// `V(D) = triv`.
pub fn forget_v(d: &DescentObject) -> &PathFunctor {
    &d.triv
}

/// `V(h, ε) = h`.
pub fn forget_v_1mor(m: &DescentOneMor) -> &PathTransformation {
    &m.h
}
