use crate::error::{CoreError, Result};
use crate::twocat::{OneCell, TwoCategoryTable, TwoCell};

use super::group::FiniteGroup;

/// `t: H → G` with a left action of `G` on `H`; `act[g*|H|+h] = g▷h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    pub name: String,
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    pub t: Vec<usize>,
    pub act: Vec<usize>,
}

impl CrossedModule {
    pub fn new(name: impl Into<String>, g: FiniteGroup, h: FiniteGroup, t: Vec<usize>, act: Vec<usize>) -> Result<Self> {
        let cm = CrossedModule { name: name.into(), g, h, t, act };
        cm.validate()?;
        Ok(cm)
    }

    /// The identity `H → H` with trivial action when `H` is abelian.
    pub fn identity_trivial(h: FiniteGroup) -> Result<Self> {
        let n = h.order();
        let t = (0..n).collect();
        let act = (0..n * n).map(|k| k % n).collect();
        Self::new(format!("id({})", h.name), h.clone(), h, t, act)
    }

    /// `t: H → G` with trivial action.
    pub fn with_trivial_action(g: FiniteGroup, h: FiniteGroup, t: Vec<usize>) -> Result<Self> {
        let nh = h.order();
        let act = (0..g.order() * nh).map(|k| k % nh).collect();
        Self::new(format!("{}->{}", h.name, g.name), g, h, t, act)
    }

    /// `1 → G`: a 2-group with only identity 2-cells.
    pub fn discrete(g: FiniteGroup) -> Self {
        let act = vec![0; g.order()];
        let t = vec![g.identity];
        CrossedModule { name: format!("1->{}", g.name), g, h: FiniteGroup::trivial(), t, act }
    }

    /// `S3×Z2 → S3` projecting onto the first factor, acting by conjugation there.
    pub fn nonabelian_example() -> Self {
        let s3 = FiniteGroup::symmetric3();
        let h = FiniteGroup::product(&s3, &FiniteGroup::cyclic(2));
        let t = (0..h.order()).map(|k| k / 2).collect();
        let mut act = vec![0; s3.order() * h.order()];
        for g in 0..s3.order() {
            for k in 0..h.order() {
                let (s, z) = (k / 2, k % 2);
                let conj = s3.m(s3.m(g, s), s3.inv(g));
                act[g * h.order() + k] = conj * 2 + z;
            }
        }
        CrossedModule::new("S3xZ2->S3", s3, h, t, act).expect("bundled crossed module")
    }

    pub fn a(&self, g: usize, h: usize) -> usize {
        self.act[g * self.h.order() + h]
    }

    /// Homomorphism, action, equivariance and Peiffer identities.
    pub fn validate(&self) -> Result<()> {
        let (g, h) = (&self.g, &self.h);
        let (ng, nh) = (g.order(), h.order());
        if self.t.len() != nh || self.act.len() != ng * nh {
            return Err(CoreError::Validation(format!("crossed module `{}`: table sizes", self.name)));
        }
        if self.t.iter().any(|&x| x >= ng) || self.act.iter().any(|&x| x >= nh) {
            return Err(CoreError::Validation(format!("crossed module `{}`: entries out of range", self.name)));
        }
        let hl = |x: usize| &h.labels[x];
        let gl = |x: usize| &g.labels[x];
        for a in 0..nh {
            for b in 0..nh {
                if self.t[h.m(a, b)] != g.m(self.t[a], self.t[b]) {
                    return Err(CoreError::invariant("t(h·h′) = t(h)·t(h′)", format!("(h,h′)=({},{})", hl(a), hl(b))));
                }
            }
        }
        for x in 0..ng {
            for a in 0..nh {
                for b in 0..nh {
                    if self.a(x, h.m(a, b)) != h.m(self.a(x, a), self.a(x, b)) {
                        return Err(CoreError::invariant(
                            "g▷(h·h′) = (g▷h)·(g▷h′)",
                            format!("(g,h,h′)=({},{},{})", gl(x), hl(a), hl(b)),
                        ));
                    }
                }
            }
        }
        for a in 0..nh {
            if self.a(g.identity, a) != a {
                return Err(CoreError::invariant("e▷h = h", format!("h={}", hl(a))));
            }
            for x in 0..ng {
                for y in 0..ng {
                    if self.a(g.m(x, y), a) != self.a(x, self.a(y, a)) {
                        return Err(CoreError::invariant(
                            "(g·g′)▷h = g▷(g′▷h)",
                            format!("(g,g′,h)=({},{},{})", gl(x), gl(y), hl(a)),
                        ));
                    }
                }
            }
        }
        for x in 0..ng {
            for a in 0..nh {
                if self.t[self.a(x, a)] != g.m(g.m(x, self.t[a]), g.inv(x)) {
                    return Err(CoreError::invariant("t(g▷h) = g·t(h)·g⁻¹", format!("(g,h)=({},{})", gl(x), hl(a))));
                }
            }
        }
        for a in 0..nh {
            for b in 0..nh {
                if self.a(self.t[a], b) != h.m(h.m(a, b), h.inv(a)) {
                    return Err(CoreError::invariant("t(h)▷h′ = h·h′·h⁻¹", format!("(h,h′)=({},{})", hl(a), hl(b))));
                }
            }
        }
        Ok(())
    }

    /// 2-cell `(g,h): g ⇒ t(h)·g` has index `g*|H|+h`.
    pub fn cell(&self, g: usize, h: usize) -> usize {
        g * self.h.order() + h
    }
}

/// Every crossed module structure on `t: H → G` with its action.
pub fn enumerate_crossed_modules(g: &FiniteGroup, h: &FiniteGroup) -> Vec<CrossedModule> {
    let auts = h.automorphisms();
    let nh = h.order();
    // Represent Aut(H) as a group so that actions are homomorphisms G → Aut(H).
    let na = auts.len();
    let mut mul = vec![0; na * na];
    for a in 0..na {
        for b in 0..na {
            let comp: Vec<usize> = (0..nh).map(|x| auts[a][auts[b][x]]).collect();
            mul[a * na + b] = auts.iter().position(|p| *p == comp).expect("automorphisms closed");
        }
    }
    let aut_group = FiniteGroup::from_table("Aut", (0..na).map(|i| i.to_string()).collect(), mul).expect("Aut(H)");
    let actions = g.homomorphisms_to(&aut_group);
    let ts = h.homomorphisms_to(g);
    let mut out = Vec::new();
    for t in &ts {
        for phi in &actions {
            let act: Vec<usize> = (0..g.order() * nh).map(|k| auts[phi[k / nh]][k % nh]).collect();
            let name = format!("{}->{}#{}", h.name, g.name, out.len());
            let cm = CrossedModule { name, g: g.clone(), h: h.clone(), t: t.clone(), act };
            if cm.validate().is_ok() {
                out.push(cm);
            }
        }
    }
    out
}

/// The strict 2-group: one object, 1-cells `G`, 2-cells `(g,h): g ⇒ t(h)·g`.
pub fn two_group_from_crossed_module(cm: &CrossedModule) -> Result<TwoCategoryTable> {
    cm.validate()?;
    let (g, h) = (&cm.g, &cm.h);
    let (ng, nh) = (g.order(), h.order());
    let one_cells = (0..ng).map(|x| OneCell { label: g.labels[x].clone(), src: 0, tgt: 0 }).collect();
    let mut two_cells = Vec::with_capacity(ng * nh);
    for x in 0..ng {
        for a in 0..nh {
            two_cells.push(TwoCell {
                label: format!("{}|{}", g.labels[x], h.labels[a]),
                src: x,
                tgt: g.m(cm.t[a], x),
            });
        }
    }
    let mut c = TwoCategoryTable::skeleton(cm.name.clone(), vec!["*".into()], one_cells, two_cells);
    c.strict = true;
    c.identity1[0] = g.identity;
    for x in 0..ng {
        c.identity2[x] = cm.cell(x, h.identity);
        c.left_unifier[x] = cm.cell(x, h.identity);
        c.right_unifier[x] = cm.cell(x, h.identity);
        for y in 0..ng {
            c.set_comp1(y, x, g.m(y, x));
            for z in 0..ng {
                c.set_assoc(x, y, z, cm.cell(g.m(z, g.m(y, x)), h.identity));
            }
        }
    }
    for x1 in 0..ng {
        for a1 in 0..nh {
            let c1 = cm.cell(x1, a1);
            let y1 = g.m(cm.t[a1], x1);
            c.inverse2[c1] = cm.cell(y1, h.inv(a1));
            for a2 in 0..nh {
                c.set_vert(cm.cell(y1, a2), c1, cm.cell(x1, h.m(a2, a1)));
            }
            for x2 in 0..ng {
                for a2 in 0..nh {
                    c.set_horiz(cm.cell(x2, a2), c1, cm.cell(g.m(x2, x1), h.m(a2, cm.a(x2, a1))));
                }
            }
        }
    }
    Ok(c)
}
