use crate::error::{CoreError, Result};
use crate::report::Report;

use super::check::zigzags_hold;
use super::functor::TwoFunctorData;
use super::table::{TwoCategoryTable, C1, C2};

/// `comp1[f] = ρ(f): ρ(Y)∘F₁(f) ⇒ F₂(f)∘ρ(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PseudoNatData {
    pub comp0: Vec<C1>,
    pub comp1: Vec<C2>,
}

/// `comp[x] = 𝒜(X): ρ₁(X) ⇒ ρ₂(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModificationData {
    pub comp: Vec<C2>,
}

/// A 1-cell (or transformation) with a chosen weak inverse and the two witnesses
/// `i: inverse∘forward ⇒ id` and `j: id ⇒ forward∘inverse`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceBundle<P, M> {
    pub forward: P,
    pub inverse: P,
    pub i: M,
    pub j: M,
}

pub type CellEquivalence = EquivalenceBundle<C1, C2>;

/// Both zigzag identities for a bundle of cells in one table.
pub fn check_weak_inverse(f: C1, bundle: &CellEquivalence, c: &TwoCategoryTable) -> bool {
    bundle.forward == f && zigzags_hold(c, f, bundle.inverse, bundle.i, bundle.j)
}

impl PseudoNatData {
    /// `id_F` with components `l⁻¹_{Ff} • r_{Ff}`.
    pub fn identity(fd: &TwoFunctorData, s: &TwoCategoryTable, t: &TwoCategoryTable) -> Result<Self> {
        let comp0: Vec<C1> = fd.map0.iter().map(|&x| t.id1(x)).collect();
        let comp1 = (0..s.n1())
            .map(|f| {
                let ff = fd.map1[f];
                let l = t.lunit(ff).ok_or_else(|| CoreError::typing("identity", "missing unifier"))?;
                let r = t.runit(ff).ok_or_else(|| CoreError::typing("identity", "missing unifier"))?;
                t.v(t.inv(l)?, r)
            })
            .collect::<Result<_>>()?;
        Ok(PseudoNatData { comp0, comp1 })
    }

    /// `(σ∘ρ)(f) = a • (σ(f)∘id) • a⁻¹ • (id∘ρ(f)) • a`, reducing to
    /// `(σ(f)∘ρ(X))•(σ(Y)∘ρ(f))` in a strict target.
    pub fn compose(
        sigma: &PseudoNatData,
        rho: &PseudoNatData,
        f1: &TwoFunctorData,
        f2: &TwoFunctorData,
        f3: &TwoFunctorData,
        s: &TwoCategoryTable,
        t: &TwoCategoryTable,
    ) -> Result<Self> {
        let comp0 = (0..s.n0()).map(|x| t.c1(sigma.comp0[x], rho.comp0[x])).collect::<Result<Vec<_>>>()?;
        let miss = || CoreError::typing("compose", "missing associator");
        let comp1 = (0..s.n1())
            .map(|f| {
                let (x, y) = (s.src1(f), s.tgt1(f));
                let (rx, ry, sx, sy) = (rho.comp0[x], rho.comp0[y], sigma.comp0[x], sigma.comp0[y]);
                let f1f = f1.map1[f];
                let f2f = f2.map1[f];
                let f3f = f3.map1[f];
                let a1 = t.assoc(f1f, ry, sy).ok_or_else(miss)?;
                let w1 = t.wl(sy, rho.comp1[f])?;
                let a2 = t.inv(t.assoc(rx, f2f, sy).ok_or_else(miss)?)?;
                let w2 = t.wr(sigma.comp1[f], rx)?;
                let a3 = t.assoc(rx, sx, f3f).ok_or_else(miss)?;
                t.vpath(&[a1, w1, a2, w2, a3])
            })
            .collect::<Result<_>>()?;
        Ok(PseudoNatData { comp0, comp1 })
    }

    pub fn typecheck(
        &self,
        f1: &TwoFunctorData,
        f2: &TwoFunctorData,
        s: &TwoCategoryTable,
        t: &TwoCategoryTable,
    ) -> Result<()> {
        if self.comp0.len() != s.n0() || self.comp1.len() != s.n1() {
            return Err(CoreError::typing("transformation", "component counts do not match the source"));
        }
        for x in 0..s.n0() {
            let r = self.comp0[x];
            if r >= t.n1() || t.src1(r) != f1.map0[x] || t.tgt1(r) != f2.map0[x] {
                return Err(CoreError::typing(format!("ρ({})", s.obj_label(x)), "must be F₁(X) → F₂(X)"));
            }
        }
        for f in 0..s.n1() {
            let (x, y) = (s.src1(f), s.tgt1(f));
            let a = self.comp1[f];
            let src = t.comp1(self.comp0[y], f1.map1[f]);
            let tgt = t.comp1(f2.map1[f], self.comp0[x]);
            if a >= t.n2() || Some(t.src2(a)) != src || Some(t.tgt2(a)) != tgt {
                return Err(CoreError::typing(format!("ρ({})", s.one_label(f)), "must be ρ(Y)∘F₁f ⇒ F₂f∘ρ(X)"));
            }
        }
        Ok(())
    }
}

/// Every violated (T1), (T2) and unit-compatibility instance, plus non-invertible components.
pub fn check_pseudonatural(
    rho: &PseudoNatData,
    f1: &TwoFunctorData,
    f2: &TwoFunctorData,
    s: &TwoCategoryTable,
    t: &TwoCategoryTable,
) -> Result<Report> {
    rho.typecheck(f1, f2, s, t)?;
    let mut r = Report::new();
    let push = |r: &mut Report, kind: &str, at: String, l: Option<C2>, rr: Option<C2>| match (l, rr) {
        (Some(l), Some(rr)) if l == rr => {}
        (l, rr) => r.add(kind, at, l.map_or("undefined", |x| t.two_label(x)), rr.map_or("undefined", |x| t.two_label(x))),
    };
    for f in 0..s.n1() {
        if t.inv2(rho.comp1[f]).is_none() {
            r.add("invertible", format!("ρ({})", s.one_label(f)), t.two_label(rho.comp1[f]), "no inverse");
        }
    }
    let n1 = s.n1();
    for f in 0..n1 {
        for g in 0..n1 {
            if s.tgt1(f) != s.src1(g) {
                continue;
            }
            let (x, y, z) = (s.src1(f), s.tgt1(f), s.tgt1(g));
            let (rx, ry, rz) = (rho.comp0[x], rho.comp0[y], rho.comp0[z]);
            let (f1f, f1g, f2f, f2g) = (f1.map1[f], f1.map1[g], f2.map1[f], f2.map1[g]);
            let lhs = (|| {
                let gf = s.comp1(g, f)?;
                t.vert(rho.comp1[gf], t.horiz(t.id2(rz), f1.comp(s, f, g)?)?)
            })();
            let rhs = (|| {
                let steps = [
                    t.inv2(t.assoc(f1f, f1g, rz)?)?,
                    t.horiz(rho.comp1[g], t.id2(f1f))?,
                    t.assoc(f1f, ry, f2g)?,
                    t.horiz(t.id2(f2g), rho.comp1[f])?,
                    t.inv2(t.assoc(rx, f2f, f2g)?)?,
                    t.horiz(f2.comp(s, f, g)?, t.id2(rx))?,
                ];
                t.vpath(&steps).ok()
            })();
            push(&mut r, "(T1)", format!("f={},g={}", s.one_label(f), s.one_label(g)), lhs, rhs);
        }
    }
    for phi in 0..s.n2() {
        let (f, f2c) = (s.src2(phi), s.tgt2(phi));
        let (x, y) = (s.src1(f), s.tgt1(f));
        let lhs = t.horiz(t.id2(rho.comp0[y]), f1.map2[phi]).and_then(|w| t.vert(rho.comp1[f2c], w));
        let rhs = t.horiz(f2.map2[phi], t.id2(rho.comp0[x])).and_then(|w| t.vert(w, rho.comp1[f]));
        push(&mut r, "(T2)", s.two_label(phi).to_string(), lhs, rhs);
    }
    for x in 0..s.n0() {
        let rx = rho.comp0[x];
        let lhs = t.horiz(f2.unitor[x], t.id2(rx)).and_then(|w| t.vert(w, rho.comp1[s.id1(x)]));
        let rhs = (|| {
            let w = t.horiz(t.id2(rx), f1.unitor[x])?;
            t.vert(t.inv2(t.runit(rx)?)?, t.vert(t.lunit(rx)?, w)?)
        })();
        push(&mut r, "unit", s.obj_label(x).to_string(), lhs, rhs);
    }
    Ok(r)
}

impl ModificationData {
    pub fn identity(rho: &PseudoNatData, t: &TwoCategoryTable) -> Self {
        ModificationData { comp: rho.comp0.iter().map(|&f| t.id2(f)).collect() }
    }
}

/// Every 1-cell at which the modification square fails.
#[allow(clippy::too_many_arguments)]
pub fn check_modification(
    a: &ModificationData,
    rho1: &PseudoNatData,
    rho2: &PseudoNatData,
    f1: &TwoFunctorData,
    f2: &TwoFunctorData,
    s: &TwoCategoryTable,
    t: &TwoCategoryTable,
) -> Result<Report> {
    if a.comp.len() != s.n0() {
        return Err(CoreError::typing("modification", "component count does not match the source"));
    }
    for x in 0..s.n0() {
        let c = a.comp[x];
        if c >= t.n2() || t.src2(c) != rho1.comp0[x] || t.tgt2(c) != rho2.comp0[x] {
            return Err(CoreError::typing(format!("A({})", s.obj_label(x)), "must be ρ₁(X) ⇒ ρ₂(X)"));
        }
    }
    let mut r = Report::new();
    for f in 0..s.n1() {
        let (x, y) = (s.src1(f), s.tgt1(f));
        let lhs = t.horiz(a.comp[y], t.id2(f1.map1[f])).and_then(|w| t.vert(rho2.comp1[f], w));
        let rhs = t.horiz(t.id2(f2.map1[f]), a.comp[x]).and_then(|w| t.vert(w, rho1.comp1[f]));
        if lhs != rhs || lhs.is_none() {
            r.add(
                "modification",
                format!("{}:{}→{}", s.one_label(f), s.obj_label(x), s.obj_label(y)),
                lhs.map_or("undefined", |c| t.two_label(c)),
                rhs.map_or("undefined", |c| t.two_label(c)),
            );
        }
    }
    Ok(r)
}
