use crate::report::Report;

use super::table::{TwoCategoryTable, C1, C2, NONE};

/// Every violated instance of the 2-category axioms, plus table typing errors.
pub fn check_two_category(c: &TwoCategoryTable) -> Report {
    let mut ck = Checker { c, r: Report::new() };
    ck.typing();
    ck.units();
    ck.interchange_all();
    ck.vertical_assoc();
    ck.assoc_naturality();
    ck.coherence();
    ck.strictness();
    ck.r
}

/// Stops after `limit` violations. Instances rich in identities are visited first,
/// so a single corrupted entry is usually found after a few thousand lookups.
pub fn check_two_category_bounded(c: &TwoCategoryTable, limit: usize) -> Report {
    let mut ck = Checker { c, r: Report::with_limit(limit) };
    ck.typing();
    ck.units();
    ck.interchange_quick();
    ck.interchange_all();
    ck.vertical_assoc();
    ck.assoc_naturality();
    ck.coherence();
    ck.strictness();
    ck.r
}

struct Checker<'a> {
    c: &'a TwoCategoryTable,
    r: Report,
}

/// A composable pair `second • first` with its stored composite.
#[derive(Clone, Copy)]
struct VPair {
    first: C2,
    second: C2,
    comp: C2,
}

impl<'a> Checker<'a> {
    fn l2(&self, a: C2) -> String {
        self.c.two_label(a).to_string()
    }

    fn eq(&mut self, kind: &str, at: impl FnOnce() -> String, lhs: Option<C2>, rhs: Option<C2>) {
        if let (Some(l), Some(r)) = (lhs, rhs) {
            if l != r {
                let (ls, rs) = (self.l2(l), self.l2(r));
                self.r.add(kind, at(), ls, rs);
            }
        }
    }

    fn bad_typing(&mut self, at: String, got: String, want: String) {
        self.r.add("typing", at, got, want);
    }

    fn typing(&mut self) {
        let c = self.c;
        let (n0, n1, n2) = (c.n0(), c.n1(), c.n2());
        for (f, cell) in c.one_cells.iter().enumerate() {
            if cell.src >= n0 || cell.tgt >= n0 {
                self.bad_typing(format!("1-cell {}", c.one_label(f)), "endpoint".into(), "object".into());
            }
        }
        for (a, cell) in c.two_cells.iter().enumerate() {
            let ok = cell.src < n1
                && cell.tgt < n1
                && c.src1(cell.src) == c.src1(cell.tgt)
                && c.tgt1(cell.src) == c.tgt1(cell.tgt);
            if !ok {
                self.bad_typing(format!("2-cell {}", c.two_label(a)), "boundary".into(), "parallel 1-cells".into());
            }
        }
        if self.r.full() {
            return;
        }
        for x in 0..n0 {
            let i = c.identity1[x];
            if i >= n1 || c.src1(i) != x || c.tgt1(i) != x {
                self.bad_typing(format!("identity1 {}", c.obj_label(x)), c.one_label(i).into(), "endomorphism".into());
            }
        }
        for f in 0..n1 {
            let i = c.identity2[f];
            if i >= n2 || c.src2(i) != f || c.tgt2(i) != f {
                self.bad_typing(format!("identity2 {}", c.one_label(f)), c.two_label(i).into(), "endomorphism".into());
            }
        }
        if self.r.full() {
            return;
        }
        for g in 0..n1 {
            for f in 0..n1 {
                let e = c.compose1[g * n1 + f];
                let want = c.tgt1(f) == c.src1(g);
                let at = || format!("compose1({},{})", c.one_label(g), c.one_label(f));
                if want != (e != NONE) {
                    self.bad_typing(at(), c.one_label(e).into(), if want { "defined" } else { "undefined" }.into());
                } else if want && (e >= n1 || c.src1(e) != c.src1(f) || c.tgt1(e) != c.tgt1(g)) {
                    self.bad_typing(at(), c.one_label(e).into(), "endpoints".into());
                }
            }
            if self.r.full() {
                return;
            }
        }
        for b in 0..n2 {
            for a in 0..n2 {
                let e = c.vcomp[b * n2 + a];
                let want = c.tgt2(a) == c.src2(b);
                if want != (e != NONE) || (want && (e >= n2 || c.src2(e) != c.src2(a) || c.tgt2(e) != c.tgt2(b))) {
                    self.bad_typing(
                        format!("vcomp({},{})", c.two_label(b), c.two_label(a)),
                        c.two_label(e).into(),
                        if want { "typed composite" } else { "undefined" }.into(),
                    );
                }
            }
            if self.r.full() {
                return;
            }
        }
        for b in 0..n2 {
            for a in 0..n2 {
                let e = c.hcomp[b * n2 + a];
                let (fa, fb) = (c.src2(a), c.src2(b));
                let want = c.tgt1(fa) == c.src1(fb);
                let ok = if want {
                    e < n2
                        && Some(c.src2(e)) == c.comp1(fb, fa)
                        && Some(c.tgt2(e)) == c.comp1(c.tgt2(b), c.tgt2(a))
                } else {
                    e == NONE
                };
                if !ok {
                    self.bad_typing(
                        format!("hcomp({},{})", c.two_label(b), c.two_label(a)),
                        c.two_label(e).into(),
                        if want { "typed composite" } else { "undefined" }.into(),
                    );
                }
            }
            if self.r.full() {
                return;
            }
        }
        for f in 0..n1 {
            for g in 0..n1 {
                for h in 0..n1 {
                    let e = c.associator[(f * n1 + g) * n1 + h];
                    let want = c.tgt1(f) == c.src1(g) && c.tgt1(g) == c.src1(h);
                    let ok = if want {
                        let s = c.comp1(h, g).and_then(|hg| c.comp1(hg, f));
                        let t = c.comp1(g, f).and_then(|gf| c.comp1(h, gf));
                        e < n2 && Some(c.src2(e)) == s && Some(c.tgt2(e)) == t
                    } else {
                        e == NONE
                    };
                    if !ok {
                        self.bad_typing(
                            format!("associator({},{},{})", c.one_label(f), c.one_label(g), c.one_label(h)),
                            c.two_label(e).into(),
                            "(h∘g)∘f ⇒ h∘(g∘f)".into(),
                        );
                    }
                }
            }
        }
        for f in 0..n1 {
            let (x, y) = (c.src1(f), c.tgt1(f));
            let l = c.left_unifier[f];
            if l >= n2 || Some(c.src2(l)) != c.comp1(f, c.id1(x)) || c.tgt2(l) != f {
                self.bad_typing(format!("left_unifier({})", c.one_label(f)), c.two_label(l).into(), "f∘id ⇒ f".into());
            }
            let r = c.right_unifier[f];
            if r >= n2 || Some(c.src2(r)) != c.comp1(c.id1(y), f) || c.tgt2(r) != f {
                self.bad_typing(format!("right_unifier({})", c.one_label(f)), c.two_label(r).into(), "id∘f ⇒ f".into());
            }
        }
        for a in 0..n2 {
            let i = c.inverse2[a];
            if i != NONE && (i >= n2 || c.src2(i) != c.tgt2(a) || c.tgt2(i) != c.src2(a)) {
                self.bad_typing(format!("inverse2({})", c.two_label(a)), c.two_label(i).into(), "reversed boundary".into());
            }
        }
    }

    /// (C2): vertical units, identity interchange and the triangle.
    fn units(&mut self) {
        let c = self.c;
        for a in 0..c.n2() {
            let (s, t) = (c.src2(a), c.tgt2(a));
            self.eq("(C2)", || format!("{}•id", c.two_label(a)), c.vert(a, c.id2(s)), Some(a));
            self.eq("(C2)", || format!("id•{}", c.two_label(a)), c.vert(c.id2(t), a), Some(a));
            if self.r.full() {
                return;
            }
        }
        for f in 0..c.n1() {
            for g in 0..c.n1() {
                if c.tgt1(f) != c.src1(g) {
                    continue;
                }
                let at = || format!("g={},f={}", c.one_label(g), c.one_label(f));
                self.eq("(C2)", at, c.horiz(c.id2(g), c.id2(f)), c.comp1(g, f).map(|gf| c.id2(gf)));
                let y = c.tgt1(f);
                let lhs = c
                    .assoc(f, c.id1(y), g)
                    .zip(c.comp1(c.id1(y), f).and_then(|_| c.runit(f)))
                    .and_then(|(a, r)| c.horiz(c.id2(g), r).and_then(|w| c.vert(w, a)));
                let rhs = c.lunit(g).and_then(|l| c.horiz(l, c.id2(f)));
                self.eq("(C2)", || format!("triangle g={},f={}", c.one_label(g), c.one_label(f)), lhs, rhs);
            }
            if self.r.full() {
                return;
            }
        }
    }

    fn vpairs(&self) -> Vec<VPair> {
        let c = self.c;
        let mut out = Vec::new();
        for a in 0..c.n2() {
            for b in 0..c.n2() {
                if c.tgt2(a) == c.src2(b) {
                    if let Some(comp) = c.vert(b, a) {
                        out.push(VPair { first: a, second: b, comp });
                    }
                }
            }
        }
        out
    }

    fn interchange_at(&mut self, psi: VPair, phi: VPair) {
        let c = self.c;
        if c.tgt1(c.src2(phi.first)) != c.src1(c.src2(psi.first)) {
            return;
        }
        let lhs = c.horiz(psi.comp, phi.comp);
        let rhs = c
            .horiz(psi.second, phi.second)
            .zip(c.horiz(psi.first, phi.first))
            .and_then(|(top, bot)| c.vert(top, bot));
        self.eq(
            "(C3)",
            || {
                format!(
                    "ψ=({},{}),φ=({},{})",
                    c.two_label(psi.second),
                    c.two_label(psi.first),
                    c.two_label(phi.second),
                    c.two_label(phi.first)
                )
            },
            lhs,
            rhs,
        );
    }

    /// Interchange instances in which identities isolate one table entry.
    fn interchange_quick(&mut self) {
        let c = self.c;
        let pairs = self.vpairs();
        let idid: Vec<VPair> =
            pairs.iter().copied().filter(|p| c.is_identity2(p.first) && c.is_identity2(p.second)).collect();
        let id_first: Vec<VPair> = pairs.iter().copied().filter(|p| c.is_identity2(p.first)).collect();
        let id_second: Vec<VPair> = pairs.iter().copied().filter(|p| c.is_identity2(p.second)).collect();
        for &i in &idid {
            for &p in &pairs {
                self.interchange_at(p, i);
                self.interchange_at(i, p);
            }
            if self.r.full() {
                return;
            }
        }
        for &psi in &id_first {
            for &phi in &id_second {
                self.interchange_at(psi, phi);
                self.interchange_at(phi, psi);
            }
            if self.r.full() {
                return;
            }
        }
    }

    /// (C3): (ψ₁•ψ₂)∘(φ₁•φ₂) = (ψ₁∘φ₁)•(ψ₂∘φ₂).
    fn interchange_all(&mut self) {
        let pairs = self.vpairs();
        for &psi in &pairs {
            for &phi in &pairs {
                self.interchange_at(psi, phi);
            }
            if self.r.full() {
                return;
            }
        }
    }

    /// (C1): vertical associativity.
    fn vertical_assoc(&mut self) {
        let c = self.c;
        let pairs = self.vpairs();
        for p in &pairs {
            for cc in 0..c.n2() {
                if c.src2(cc) != c.tgt2(p.second) {
                    continue;
                }
                let lhs = c.vert(cc, p.second).and_then(|cb| c.vert(cb, p.first));
                let rhs = c.vert(cc, p.comp);
                self.eq(
                    "(C1)",
                    || format!("({}•{})•{}", c.two_label(cc), c.two_label(p.second), c.two_label(p.first)),
                    lhs,
                    rhs,
                );
            }
            if self.r.full() {
                return;
            }
        }
    }

    /// (C1): naturality of the associator in all three arguments.
    fn assoc_naturality(&mut self) {
        let c = self.c;
        let n2 = c.n2();
        for phi in 0..n2 {
            let f = c.src2(phi);
            for psi in 0..n2 {
                let g = c.src2(psi);
                if c.tgt1(f) != c.src1(g) {
                    continue;
                }
                for chi in 0..n2 {
                    let h = c.src2(chi);
                    if c.tgt1(g) != c.src1(h) {
                        continue;
                    }
                    let (f2, g2, h2) = (c.tgt2(phi), c.tgt2(psi), c.tgt2(chi));
                    let lhs = c
                        .horiz(chi, psi)
                        .and_then(|cp| c.horiz(cp, phi))
                        .zip(c.assoc(f2, g2, h2))
                        .and_then(|(x, a)| c.vert(a, x));
                    let rhs = c
                        .horiz(psi, phi)
                        .and_then(|pp| c.horiz(chi, pp))
                        .zip(c.assoc(f, g, h))
                        .and_then(|(x, a)| c.vert(x, a));
                    self.eq(
                        "(C1)",
                        || format!("assoc-nat({},{},{})", c.two_label(phi), c.two_label(psi), c.two_label(chi)),
                        lhs,
                        rhs,
                    );
                }
            }
            if self.r.full() {
                return;
            }
        }
    }

    /// (C4): invertibility, unifier naturality and the pentagon.
    fn coherence(&mut self) {
        let c = self.c;
        let (n1, n2) = (c.n1(), c.n2());
        for a in 0..n2 {
            if let Some(i) = c.inv2(a) {
                let at = || format!("inverse {}", c.two_label(a));
                self.eq("(C4)", at, c.vert(i, a), Some(c.id2(c.src2(a))));
                self.eq("(C4)", at, c.vert(a, i), Some(c.id2(c.tgt2(a))));
            }
        }
        let mut structural: Vec<C2> = c.left_unifier.iter().chain(&c.right_unifier).copied().collect();
        structural.extend(c.associator.iter().copied().filter(|&a| a != NONE));
        structural.sort_unstable();
        structural.dedup();
        for a in structural {
            if a < n2 && c.inv2(a).is_none() {
                self.r.add("(C4)", format!("invertible {}", c.two_label(a)), c.two_label(a), "no inverse");
            }
        }
        for phi in 0..n2 {
            let (f, f2) = (c.src2(phi), c.tgt2(phi));
            let (x, y) = (c.src1(f), c.tgt1(f));
            let lhs = c.horiz(phi, c.id2(c.id1(x))).zip(c.lunit(f2)).and_then(|(w, l)| c.vert(l, w));
            let rhs = c.lunit(f).and_then(|l| c.vert(phi, l));
            self.eq("(C4)", || format!("l-nat {}", c.two_label(phi)), lhs, rhs);
            let lhs = c.horiz(c.id2(c.id1(y)), phi).zip(c.runit(f2)).and_then(|(w, r)| c.vert(r, w));
            let rhs = c.runit(f).and_then(|r| c.vert(phi, r));
            self.eq("(C4)", || format!("r-nat {}", c.two_label(phi)), lhs, rhs);
        }
        if self.r.full() {
            return;
        }
        for f in 0..n1 {
            for g in 0..n1 {
                if c.tgt1(f) != c.src1(g) {
                    continue;
                }
                for h in 0..n1 {
                    if c.tgt1(g) != c.src1(h) {
                        continue;
                    }
                    for k in 0..n1 {
                        if c.tgt1(h) != c.src1(k) {
                            continue;
                        }
                        let lhs = (|| {
                            let gf = c.comp1(g, f)?;
                            let kh = c.comp1(k, h)?;
                            c.vert(c.assoc(gf, h, k)?, c.assoc(f, g, kh)?)
                        })();
                        let rhs = (|| {
                            let hg = c.comp1(h, g)?;
                            let top = c.horiz(c.id2(k), c.assoc(f, g, h)?)?;
                            let mid = c.assoc(f, hg, k)?;
                            let bot = c.horiz(c.assoc(g, h, k)?, c.id2(f))?;
                            c.vert(top, c.vert(mid, bot)?)
                        })();
                        self.eq(
                            "(C4)",
                            || {
                                format!(
                                    "pentagon({},{},{},{})",
                                    c.one_label(f),
                                    c.one_label(g),
                                    c.one_label(h),
                                    c.one_label(k)
                                )
                            },
                            lhs,
                            rhs,
                        );
                    }
                }
            }
            if self.r.full() {
                return;
            }
        }
    }

    fn strictness(&mut self) {
        let c = self.c;
        if !c.strict {
            return;
        }
        let n1 = c.n1();
        for f in 0..n1 {
            let (x, y) = (c.src1(f), c.tgt1(f));
            if c.comp1(f, c.id1(x)) != Some(f) || c.comp1(c.id1(y), f) != Some(f) {
                self.r.add("strict", format!("unit {}", c.one_label(f)), c.one_label(f), "id-composite differs");
            }
            if c.lunit(f) != Some(c.id2(f)) {
                self.r.add("strict", format!("l {}", c.one_label(f)), c.two_label(c.left_unifier[f]), c.two_label(c.id2(f)));
            }
            if c.runit(f) != Some(c.id2(f)) {
                self.r.add("strict", format!("r {}", c.one_label(f)), c.two_label(c.right_unifier[f]), c.two_label(c.id2(f)));
            }
        }
        for f in 0..n1 {
            for g in 0..n1 {
                if c.tgt1(f) != c.src1(g) {
                    continue;
                }
                for h in 0..n1 {
                    if c.tgt1(g) != c.src1(h) {
                        continue;
                    }
                    let l = c.comp1(h, g).and_then(|hg| c.comp1(hg, f));
                    let r = c.comp1(g, f).and_then(|gf| c.comp1(h, gf));
                    let at = || format!("assoc({},{},{})", c.one_label(f), c.one_label(g), c.one_label(h));
                    if l != r {
                        self.r.add("strict", at(), c.one_label(l.unwrap_or(NONE)), c.one_label(r.unwrap_or(NONE)));
                    } else if let Some(t) = l {
                        if c.assoc(f, g, h) != Some(c.id2(t)) {
                            self.r.add("strict", at(), c.two_label(c.associator[(f * n1 + g) * n1 + h]), c.two_label(c.id2(t)));
                        }
                    }
                }
            }
            if self.r.full() {
                return;
            }
        }
    }
}

/// True iff `f` and its candidate inverse `g` with `i: g∘f ⇒ id`, `j: id ⇒ f∘g`
/// satisfy both zigzag identities.
pub fn zigzags_hold(c: &TwoCategoryTable, f: C1, g: C1, i: C2, j: C2) -> bool {
    (|| -> Option<bool> {
        let (x, y) = (c.src1(f), c.tgt1(f));
        if c.src1(g) != y || c.tgt1(g) != x {
            return Some(false);
        }
        let gf = c.comp1(g, f)?;
        let fg = c.comp1(f, g)?;
        if c.src2(i) != gf || c.tgt2(i) != c.id1(x) || c.src2(j) != c.id1(y) || c.tgt2(j) != fg {
            return Some(false);
        }
        let ji = c.inv2(j)?;
        // r_f • (j⁻¹∘id_f) = l_f • (id_f∘i) • a_{f,g,f}
        let z1l = c.vert(c.runit(f)?, c.horiz(ji, c.id2(f))?)?;
        let z1r = c.vert(c.lunit(f)?, c.vert(c.horiz(c.id2(f), i)?, c.assoc(f, g, f)?)?)?;
        // r_g • (i∘id_g) = l_g • (id_g∘j⁻¹) • a_{g,f,g}
        let z2l = c.vert(c.runit(g)?, c.horiz(i, c.id2(g))?)?;
        let z2r = c.vert(c.lunit(g)?, c.vert(c.horiz(c.id2(g), ji)?, c.assoc(g, f, g)?)?)?;
        Some(z1l == z1r && z2l == z2r)
    })()
    .unwrap_or(false)
}
