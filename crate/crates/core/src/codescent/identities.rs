use crate::base::PathTerm;
use crate::error::Result;

use super::term::{Atom, CTerm1, CTerm2, Codescent};

/// Both sides of one instance of an imposed identification.
#[derive(Debug, Clone)]
pub struct Identification {
    pub kind: &'static str,
    pub at: String,
    pub lhs: CTerm2,
    pub rhs: CTerm2,
}

impl<'a> Codescent<'a> {
    fn jterm(&self, alpha: usize) -> CTerm1 {
        CTerm1 { start: self.atom_src(&Atom::Jump(alpha)), atoms: vec![Atom::Jump(alpha)] }
    }

    /// Instances of (V1) at every point of `Y^[4]`.
    pub fn identities_v1(&self) -> Vec<Identification> {
        let y4 = self.tower.space(4);
        y4.vertex_points
            .iter()
            .enumerate()
            .map(|(n, (t, x))| {
                let (i, j, k, l, x) = (t[0], t[1], t[2], t[3], *x);
                let xi = |a, b, c| CTerm2::Xi { point: self.triple(a, b, c, x), inv: false };
                let lhs = CTerm2::v(CTerm2::h(xi(i, j, k), CTerm2::Id(self.jterm(self.jump(k, l, x)))), xi(i, k, l));
                let rhs = CTerm2::v(CTerm2::h(CTerm2::Id(self.jterm(self.jump(i, j, x))), xi(j, k, l)), xi(i, j, l));
                Identification { kind: "(V1)", at: format!("Ψ={}", y4.cx.vertices[n]), lhs, rhs }
            })
            .collect()
    }

    /// Both unit triangles of (V2) at every point of `Y^[2]`.
    pub fn identities_v2(&self) -> Vec<Identification> {
        let y2 = self.tower.space(2);
        let mut out = Vec::new();
        for alpha in 0..y2.cx.vertices.len() {
            let (i, j, x) = self.split2(alpha);
            let ja = self.jterm(alpha);
            let at = format!("α={}", y2.cx.vertices[alpha]);
            let right = CTerm2::v(
                CTerm2::h(CTerm2::Id(ja.clone()), CTerm2::DeltaA { point: self.pt(j, x), inv: false }),
                CTerm2::Xi { point: self.triple(i, j, j, x), inv: false },
            );
            out.push(Identification { kind: "(V2)", at: format!("{at},r"), lhs: right, rhs: CTerm2::Coherence(ja.clone()) });
            let left = CTerm2::v(
                CTerm2::h(CTerm2::DeltaA { point: self.pt(i, x), inv: false }, CTerm2::Id(ja.clone())),
                CTerm2::Xi { point: self.triple(i, i, j, x), inv: false },
            );
            out.push(Identification { kind: "(V2)", at: format!("{at},l"), lhs: left, rhs: CTerm2::Coherence(ja) });
        }
        out
    }

    /// (T1) for composable letter pairs and (T2) at every face of `Y^[2]`.
    pub fn identities_iii(&self) -> Result<Vec<Identification>> {
        let y2 = self.y2();
        let mut out = Vec::new();
        for (fi, face) in y2.faces.iter().enumerate() {
            let (s, t) = (&face.src, &face.tgt);
            let (alpha, alpha2) = (s.start, s.end(y2));
            let sig1 = CTerm2::Bigon(crate::base::BigonTerm::face(self.y(), self.pi1.face[fi]));
            let sig2 = CTerm2::Bigon(crate::base::BigonTerm::face(self.y(), self.pi2.face[fi]));
            let lhs = CTerm2::v(CTerm2::h(sig1, CTerm2::Id(self.jterm(alpha2))), CTerm2::Theta { path: t.clone(), inv: false });
            let rhs = CTerm2::v(CTerm2::Theta { path: s.clone(), inv: false }, CTerm2::h(CTerm2::Id(self.jterm(alpha)), sig2));
            out.push(Identification { kind: "(III)", at: format!("T2 {}", face.label), lhs, rhs });
        }
        for a in 0..y2.vertices.len() {
            for l1 in y2.letters_from(a) {
                let b = y2.letter_tgt(l1);
                for l2 in y2.letters_from(b).filter(|&l2| l2 != (l1 ^ 1)) {
                    let t1 = PathTerm { start: a, letters: vec![l1] };
                    let t2 = PathTerm { start: b, letters: vec![l2] };
                    let c = y2.letter_tgt(l2);
                    let t12 = t1.then(y2, &t2)?;
                    let (p1a, p1b) = (self.pi1.path(&t1), self.pi1.path(&t2));
                    let (p2a, p2b) = (self.pi2.path(&t1), self.pi2.path(&t2));
                    let lhs = CTerm2::v(
                        CTerm2::h(CTerm2::CStar { first: p1a.clone(), second: p1b, inv: false }, CTerm2::Id(self.jterm(c))),
                        CTerm2::Theta { path: t12, inv: false },
                    );
                    let rhs = CTerm2::vpath(
                        vec![
                            CTerm2::h(CTerm2::Id(CTerm1::path(p1a)), CTerm2::Theta { path: t2, inv: false }),
                            CTerm2::h(CTerm2::Theta { path: t1, inv: false }, CTerm2::Id(CTerm1::path(p2b.clone()))),
                            CTerm2::h(CTerm2::Id(self.jterm(a)), CTerm2::CStar { first: p2a, second: p2b, inv: false }),
                        ],
                        CTerm1::id(0),
                    );
                    out.push(Identification {
                        kind: "(III)",
                        at: format!("T1 {}", y2.word_label(&[l1, l2])),
                        lhs,
                        rhs,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Modification squares for the (1c) cells at every letter of `Y^[3]` and for the (1d)
    /// cells at every letter of `Y`.
    pub fn identities_iv(&self) -> Vec<Identification> {
        let y3 = self.tower.space(3);
        let m = self.base();
        let mut out = Vec::new();
        for l in 0..y3.cx.n_letters() {
            let (tup, e) = &y3.edge_points[l / 2];
            let (i, j, k) = (tup[0], tup[1], tup[2]);
            let bl = crate::base::path::letter(*e, l % 2 == 1);
            let (x, y) = (m.letter_src(bl), m.letter_tgt(bl));
            let at_i = CTerm1 { start: self.pt(i, x), atoms: vec![self.letter_atom(i, bl)] };
            let at_k = CTerm1 { start: self.pt(k, x), atoms: vec![self.letter_atom(k, bl)] };
            let xi = |p| CTerm2::Xi { point: self.triple(i, j, k, p), inv: false };
            let lhs = CTerm2::v(CTerm2::h(CTerm2::Id(at_i), xi(y)), CTerm2::Theta { path: self.theta_letter(i, k, bl), inv: false });
            let composite = CTerm2::v(
                CTerm2::h(CTerm2::Theta { path: self.theta_letter(i, j, bl), inv: false }, CTerm2::Id(self.jterm(self.jump(j, k, y)))),
                CTerm2::h(CTerm2::Id(self.jterm(self.jump(i, j, x))), CTerm2::Theta { path: self.theta_letter(j, k, bl), inv: false }),
            );
            let rhs = CTerm2::v(composite, CTerm2::h(xi(x), CTerm2::Id(at_k)));
            out.push(Identification { kind: "(IV)", at: format!("Ξ {}", y3.cx.letter_label(l)), lhs, rhs });
        }
        let y = self.tower.space(1);
        for l in 0..y.cx.n_letters() {
            let (tup, e) = &y.edge_points[l / 2];
            let i = tup[0];
            let bl = crate::base::path::letter(*e, l % 2 == 1);
            let (x, yv) = (m.letter_src(bl), m.letter_tgt(bl));
            let g = CTerm1 { start: self.pt(i, x), atoms: vec![self.letter_atom(i, bl)] };
            let lhs = CTerm2::v(
                CTerm2::h(CTerm2::Id(g.clone()), CTerm2::DeltaA { point: self.pt(i, yv), inv: false }),
                CTerm2::Theta { path: self.theta_letter(i, i, bl), inv: false },
            );
            let rhs = CTerm2::h(CTerm2::DeltaA { point: self.pt(i, x), inv: false }, CTerm2::Id(g));
            out.push(Identification { kind: "(IV)", at: format!("Δ {}", y.cx.letter_label(l)), lhs, rhs });
        }
        out
    }
}
