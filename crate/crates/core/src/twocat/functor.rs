use crate::error::{CoreError, Result};
use crate::report::Report;

use super::table::{ObjId, TwoCategoryTable, C1, C2, NONE};

/// A 2-functor between finite tables.
///
/// `compositor[f*n1+g] = c_{f,g}: F(g)∘F(f) ⇒ F(g∘f)` for composable `f, g` and `NONE`
/// elsewhere; `unitor[x] = u_X: F(id_X) ⇒ id_{F(X)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFunctorData {
    pub map0: Vec<ObjId>,
    pub map1: Vec<C1>,
    pub map2: Vec<C2>,
    pub compositor: Vec<C2>,
    pub unitor: Vec<C2>,
}

impl TwoFunctorData {
    pub fn identity(c: &TwoCategoryTable) -> Self {
        let n1 = c.n1();
        let mut compositor = vec![NONE; n1 * n1];
        for f in 0..n1 {
            for g in 0..n1 {
                if let Some(gf) = c.comp1(g, f) {
                    // id∘id on 1-cells: c_{f,g} = id_{g∘f}
                    compositor[f * n1 + g] = c.id2(gf);
                }
            }
        }
        TwoFunctorData {
            map0: (0..c.n0()).collect(),
            map1: (0..n1).collect(),
            map2: (0..c.n2()).collect(),
            compositor,
            unitor: (0..c.n0()).map(|x| c.id2_obj(x)).collect(),
        }
    }

    /// Everything to the identity cells of `x`, with identity structure cells.
    pub fn constant(s: &TwoCategoryTable, t: &TwoCategoryTable, x: ObjId) -> Self {
        let n1 = s.n1();
        let u = t.id2_obj(x);
        let mut compositor = vec![NONE; n1 * n1];
        for f in 0..n1 {
            for g in 0..n1 {
                if s.comp1(g, f).is_some() {
                    compositor[f * n1 + g] = u;
                }
            }
        }
        TwoFunctorData {
            map0: vec![x; s.n0()],
            map1: vec![t.id1(x); n1],
            map2: vec![u; s.n2()],
            compositor,
            unitor: vec![u; s.n0()],
        }
    }

    pub fn comp(&self, s: &TwoCategoryTable, f: C1, g: C1) -> Option<C2> {
        let v = self.compositor[f * s.n1() + g];
        (v != NONE).then_some(v)
    }

    /// Endpoint compatibility of all maps and of the structure cells.
    pub fn typecheck(&self, s: &TwoCategoryTable, t: &TwoCategoryTable) -> Result<()> {
        let err = |at: String, msg: &str| Err(CoreError::typing(at, msg));
        if self.map0.len() != s.n0() || self.map1.len() != s.n1() || self.map2.len() != s.n2() {
            return err("functor".into(), "map sizes do not match the source");
        }
        if self.compositor.len() != s.n1() * s.n1() || self.unitor.len() != s.n0() {
            return err("functor".into(), "structure table sizes do not match the source");
        }
        if self.map0.iter().any(|&x| x >= t.n0())
            || self.map1.iter().any(|&f| f >= t.n1())
            || self.map2.iter().any(|&a| a >= t.n2())
        {
            return err("functor".into(), "image outside the target");
        }
        for f in 0..s.n1() {
            let ff = self.map1[f];
            if t.src1(ff) != self.map0[s.src1(f)] || t.tgt1(ff) != self.map0[s.tgt1(f)] {
                return err(format!("F({})", s.one_label(f)), "endpoints not preserved");
            }
        }
        for a in 0..s.n2() {
            let fa = self.map2[a];
            if t.src2(fa) != self.map1[s.src2(a)] || t.tgt2(fa) != self.map1[s.tgt2(a)] {
                return err(format!("F({})", s.two_label(a)), "boundary not preserved");
            }
        }
        for f in 0..s.n1() {
            for g in 0..s.n1() {
                let e = self.compositor[f * s.n1() + g];
                match s.comp1(g, f) {
                    Some(gf) => {
                        let src = t.comp1(self.map1[g], self.map1[f]);
                        if e >= t.n2() || Some(t.src2(e)) != src || t.tgt2(e) != self.map1[gf] {
                            return err(
                                format!("c({},{})", s.one_label(f), s.one_label(g)),
                                "compositor must be F(g)∘F(f) ⇒ F(g∘f)",
                            );
                        }
                    }
                    None if e != NONE => {
                        return err(format!("c({},{})", s.one_label(f), s.one_label(g)), "compositor on non-composable pair")
                    }
                    None => {}
                }
            }
        }
        for x in 0..s.n0() {
            let u = self.unitor[x];
            if u >= t.n2() || t.src2(u) != self.map1[s.id1(x)] || t.tgt2(u) != t.id1(self.map0[x]) {
                return err(format!("u({})", s.obj_label(x)), "unitor must be F(id) ⇒ id");
            }
        }
        Ok(())
    }
}

/// Every violated instance of (F1)–(F4) and every non-invertible structure cell.
pub fn check_two_functor(fd: &TwoFunctorData, s: &TwoCategoryTable, t: &TwoCategoryTable) -> Result<Report> {
    fd.typecheck(s, t)?;
    let mut r = Report::new();
    let m = |a: C2| fd.map2[a];
    let eq = |r: &mut Report, kind: &str, at: &dyn Fn() -> String, l: Option<C2>, rr: Option<C2>| {
        if let (Some(l), Some(rr)) = (l, rr) {
            if l != rr {
                r.add(kind, at(), t.two_label(l), t.two_label(rr));
            }
        } else {
            r.add(kind, at(), "undefined", "undefined");
        }
    };
    for a in 0..s.n2() {
        for b in 0..s.n2() {
            if let Some(ba) = s.vert(b, a) {
                eq(
                    &mut r,
                    "(F1)",
                    &|| format!("{}•{}", s.two_label(b), s.two_label(a)),
                    Some(m(ba)),
                    t.vert(m(b), m(a)),
                );
            }
        }
    }
    for f in 0..s.n1() {
        if m(s.id2(f)) != t.id2(fd.map1[f]) {
            r.add("(F1)", format!("id {}", s.one_label(f)), t.two_label(m(s.id2(f))), t.two_label(t.id2(fd.map1[f])));
        }
    }
    for phi in 0..s.n2() {
        for psi in 0..s.n2() {
            let (f, g) = (s.src2(phi), s.src2(psi));
            if s.tgt1(f) != s.src1(g) {
                continue;
            }
            let (f2, g2) = (s.tgt2(phi), s.tgt2(psi));
            let lhs = t.horiz(m(psi), m(phi)).zip(fd.comp(s, f2, g2)).and_then(|(h, c)| t.vert(c, h));
            let rhs = s.horiz(psi, phi).zip(fd.comp(s, f, g)).and_then(|(h, c)| t.vert(m(h), c));
            eq(&mut r, "(F2)", &|| format!("{}∘{}", s.two_label(psi), s.two_label(phi)), lhs, rhs);
        }
    }
    let n1 = s.n1();
    for f in 0..n1 {
        for g in 0..n1 {
            if s.tgt1(f) != s.src1(g) {
                continue;
            }
            for h in 0..n1 {
                if s.tgt1(g) != s.src1(h) {
                    continue;
                }
                let (ff, fg, fh) = (fd.map1[f], fd.map1[g], fd.map1[h]);
                let lhs = (|| {
                    let hg = s.comp1(h, g)?;
                    let x = t.horiz(fd.comp(s, g, h)?, t.id2(ff))?;
                    let y = t.vert(fd.comp(s, f, hg)?, x)?;
                    t.vert(m(s.assoc(f, g, h)?), y)
                })();
                let rhs = (|| {
                    let gf = s.comp1(g, f)?;
                    let x = t.vert(t.horiz(t.id2(fh), fd.comp(s, f, g)?)?, t.assoc(ff, fg, fh)?)?;
                    t.vert(fd.comp(s, gf, h)?, x)
                })();
                eq(
                    &mut r,
                    "(F3)",
                    &|| format!("{},{},{}", s.one_label(f), s.one_label(g), s.one_label(h)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    for f in 0..n1 {
        let (x, y) = (s.src1(f), s.tgt1(f));
        let ff = fd.map1[f];
        let lhs = (|| t.vert(m(s.lunit(f)?), fd.comp(s, s.id1(x), f)?))();
        let rhs = (|| t.vert(t.lunit(ff)?, t.horiz(t.id2(ff), fd.unitor[x])?))();
        eq(&mut r, "(F4)", &|| format!("l {}", s.one_label(f)), lhs, rhs);
        let lhs = (|| t.vert(m(s.runit(f)?), fd.comp(s, f, s.id1(y))?))();
        let rhs = (|| t.vert(t.runit(ff)?, t.horiz(fd.unitor[y], t.id2(ff))?))();
        eq(&mut r, "(F4)", &|| format!("r {}", s.one_label(f)), lhs, rhs);
    }
    for (i, &c) in fd.compositor.iter().enumerate() {
        if c != NONE && t.inv2(c).is_none() {
            r.add("invertible", format!("c({},{})", s.one_label(i / n1), s.one_label(i % n1)), t.two_label(c), "no inverse");
        }
    }
    for (x, &u) in fd.unitor.iter().enumerate() {
        if t.inv2(u).is_none() {
            r.add("invertible", format!("u({})", s.obj_label(x)), t.two_label(u), "no inverse");
        }
    }
    Ok(r)
}

/// Identities are preserved strictly, including composites that equal an identity.
pub fn check_normalized_two_functor(fd: &TwoFunctorData, s: &TwoCategoryTable, t: &TwoCategoryTable) -> bool {
    for x in 0..s.n0() {
        let fx = fd.map0[x];
        if fd.map1[s.id1(x)] != t.id1(fx) || fd.unitor[x] != t.id2_obj(fx) {
            return false;
        }
    }
    for f in 0..s.n1() {
        for g in 0..s.n1() {
            if s.comp1(g, f) == Some(s.id1(s.src1(f))) && s.tgt1(g) == s.src1(f) {
                let x = fd.map0[s.src1(f)];
                if t.comp1(fd.map1[g], fd.map1[f]) != Some(t.id1(x)) || fd.comp(s, f, g) != Some(t.id2_obj(x)) {
                    return false;
                }
            }
        }
    }
    true
}
