use crate::error::{CoreError, Result};
use crate::twocat::{check_two_category, OneCell, TwoCategoryTable, TwoCell, NONE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub label: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite monoidal category.
///
/// `compose[g*m+f] = g∘f`, `tensor_obj[x*n+y] = x⊗y`, `tensor_mor[a*m+b] = a⊗b`,
/// `alpha[(x*n+y)*n+z]: (x⊗y)⊗z → x⊗(y⊗z)`, `lambda[x]: x⊗I → x`, `rho[x]: I⊗x → x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalTable {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub compose: Vec<usize>,
    pub identity: Vec<usize>,
    pub tensor_obj: Vec<usize>,
    pub tensor_mor: Vec<usize>,
    pub unit: usize,
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub rho: Vec<usize>,
}

impl MonoidalTable {
    pub fn n_obj(&self) -> usize {
        self.objects.len()
    }
    pub fn n_mor(&self) -> usize {
        self.morphisms.len()
    }
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        let v = self.compose[g * self.n_mor() + f];
        (v != NONE).then_some(v)
    }
    pub fn tobj(&self, x: usize, y: usize) -> usize {
        self.tensor_obj[x * self.n_obj() + y]
    }
    pub fn tmor(&self, a: usize, b: usize) -> usize {
        self.tensor_mor[a * self.n_mor() + b]
    }
    pub fn alpha_at(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.n_obj();
        self.alpha[(x * n + y) * n + z]
    }

    /// Category axioms and functoriality of the tensor; coherence is checked by [`delooping`].
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.n_obj(), self.n_mor());
        let bad = |msg: String| Err(CoreError::Validation(format!("monoidal table `{}`: {msg}", self.name)));
        if self.compose.len() != m * m
            || self.identity.len() != n
            || self.tensor_obj.len() != n * n
            || self.tensor_mor.len() != m * m
            || self.alpha.len() != n * n * n
            || self.lambda.len() != n
            || self.rho.len() != n
            || self.unit >= n
        {
            return bad("table sizes".into());
        }
        if self.morphisms.iter().any(|f| f.src >= n || f.tgt >= n)
            || self.tensor_obj.iter().any(|&x| x >= n)
            || self.tensor_mor.iter().any(|&x| x >= m)
            || self.identity.iter().chain(&self.alpha).chain(&self.lambda).chain(&self.rho).any(|&x| x >= m)
        {
            return bad("entries out of range".into());
        }
        let mo = &self.morphisms;
        for g in 0..m {
            for f in 0..m {
                let e = self.compose[g * m + f];
                if mo[f].tgt == mo[g].src {
                    if e >= m || mo[e].src != mo[f].src || mo[e].tgt != mo[g].tgt {
                        return bad(format!("composite {}∘{}", mo[g].label, mo[f].label));
                    }
                } else if e != NONE {
                    return bad(format!("composite {}∘{} should be undefined", mo[g].label, mo[f].label));
                }
            }
        }
        for x in 0..n {
            let i = self.identity[x];
            if mo[i].src != x || mo[i].tgt != x {
                return bad(format!("identity of {}", self.objects[x]));
            }
        }
        for f in 0..m {
            if self.comp(f, self.identity[mo[f].src]) != Some(f) || self.comp(self.identity[mo[f].tgt], f) != Some(f) {
                return bad(format!("unit law at {}", mo[f].label));
            }
            for g in 0..m {
                for h in 0..m {
                    let l = self.comp(h, g).and_then(|hg| self.comp(hg, f));
                    let r = self.comp(g, f).and_then(|gf| self.comp(h, gf));
                    if l != r {
                        return bad(format!("associativity at {},{},{}", mo[f].label, mo[g].label, mo[h].label));
                    }
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let t = self.tmor(a, b);
                if mo[t].src != self.tobj(mo[a].src, mo[b].src) || mo[t].tgt != self.tobj(mo[a].tgt, mo[b].tgt) {
                    return bad(format!("tensor of {} and {}", mo[a].label, mo[b].label));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.tmor(self.identity[x], self.identity[y]) != self.identity[self.tobj(x, y)] {
                    return bad(format!("tensor of identities at {},{}", self.objects[x], self.objects[y]));
                }
            }
        }
        Ok(())
    }

    /// Strict when tensoring is associative and unital on the nose with identity coherence maps.
    pub fn is_strict(&self) -> bool {
        let n = self.n_obj();
        let id = |x: usize| self.identity[x];
        (0..n).all(|x| {
            self.tobj(x, self.unit) == x
                && self.tobj(self.unit, x) == x
                && self.lambda[x] == id(x)
                && self.rho[x] == id(x)
                && (0..n).all(|y| {
                    (0..n).all(|z| {
                        let l = self.tobj(self.tobj(x, y), z);
                        l == self.tobj(x, self.tobj(y, z)) && self.alpha_at(x, y, z) == id(l)
                    })
                })
        })
    }

    /// The discrete monoidal category on a finite monoid.
    pub fn discrete_monoid(name: &str, labels: Vec<String>, mul: Vec<usize>, unit: usize) -> Self {
        let n = labels.len();
        let morphisms = labels.iter().enumerate().map(|(i, l)| Morphism { label: format!("id_{l}"), src: i, tgt: i }).collect();
        let mut compose = vec![NONE; n * n];
        for i in 0..n {
            compose[i * n + i] = i;
        }
        let alpha = (0..n * n * n).map(|k| mul[mul[(k / (n * n)) * n + (k / n) % n] * n + k % n]).collect();
        MonoidalTable {
            name: name.into(),
            objects: labels,
            morphisms,
            compose,
            identity: (0..n).collect(),
            tensor_obj: mul.clone(),
            tensor_mor: mul,
            unit,
            alpha,
            lambda: (0..n).collect(),
            rho: (0..n).collect(),
        }
    }

    /// Reads a one-object 2-category as a monoidal category with `x⊗y = x∘y`.
    pub fn from_one_object(c: &TwoCategoryTable) -> Result<Self> {
        if c.n0() != 1 {
            return Err(CoreError::Validation(format!("`{}` has more than one object", c.name)));
        }
        let n = c.n1();
        let n3 = n * n * n;
        let mut alpha = vec![0; n3];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // α_{x,y,z} = a_{z,y,x}
                    alpha[(x * n + y) * n + z] = c.assoc(z, y, x).unwrap_or(NONE);
                }
            }
        }
        let t = MonoidalTable {
            name: c.name.clone(),
            objects: c.one_cells.iter().map(|o| o.label.clone()).collect(),
            morphisms: c.two_cells.iter().map(|a| Morphism { label: a.label.clone(), src: a.src, tgt: a.tgt }).collect(),
            compose: c.vcomp.clone(),
            identity: c.identity2.clone(),
            tensor_obj: c.compose1.clone(),
            tensor_mor: c.hcomp.clone(),
            unit: c.id1(0),
            alpha,
            lambda: c.left_unifier.clone(),
            rho: c.right_unifier.clone(),
        };
        t.validate()?;
        Ok(t)
    }

    /// Objects `0 ≤ 1` with `⊗ = max` and unit `0`.
    pub fn poset_max() -> Self {
        let objects = vec!["0".to_string(), "1".to_string()];
        // morphisms: id0, id1, le (0 → 1)
        let morphisms = vec![
            Morphism { label: "id0".into(), src: 0, tgt: 0 },
            Morphism { label: "id1".into(), src: 1, tgt: 1 },
            Morphism { label: "le".into(), src: 0, tgt: 1 },
        ];
        let arrow = |s: usize, t: usize| match (s, t) {
            (0, 0) => 0,
            (1, 1) => 1,
            _ => 2,
        };
        let mut compose = vec![NONE; 9];
        for g in 0..3 {
            for f in 0..3 {
                if morphisms[f].tgt == morphisms[g].src {
                    compose[g * 3 + f] = arrow(morphisms[f].src, morphisms[g].tgt);
                }
            }
        }
        let mut tensor_mor = vec![0; 9];
        for a in 0..3 {
            for b in 0..3 {
                let (ma, mb) = (&morphisms[a], &morphisms[b]);
                tensor_mor[a * 3 + b] = arrow(ma.src.max(mb.src), ma.tgt.max(mb.tgt));
            }
        }
        let tensor_obj = vec![0, 1, 1, 1];
        let alpha = (0..8).map(|k: usize| usize::from(k != 0)).collect();
        MonoidalTable {
            name: "poset-max".into(),
            objects,
            morphisms,
            compose,
            identity: vec![0, 1],
            tensor_obj,
            tensor_mor,
            unit: 0,
            alpha,
            lambda: vec![0, 1],
            rho: vec![0, 1],
        }
    }

    /// Matrices over F₂ between spaces of dimension 0 and 1, tensored by Kronecker product.
    pub fn f2_matrices() -> Self {
        // (src dim, tgt dim, entry): dims are 0 or 1; a 1×1 matrix has one bit.
        let mats: Vec<(usize, usize, u8)> = vec![(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)];
        let labels = ["e00", "z01", "z10", "z11", "one"];
        let morphisms: Vec<Morphism> = mats
            .iter()
            .zip(labels)
            .map(|(&(s, t, _), l)| Morphism { label: l.into(), src: s, tgt: t })
            .collect();
        let find = |s: usize, t: usize, v: u8| mats.iter().position(|&m| m == (s, t, if s * t == 1 { v } else { 0 })).unwrap();
        let m = mats.len();
        let mut compose = vec![NONE; m * m];
        let mut tensor_mor = vec![0; m * m];
        for g in 0..m {
            for f in 0..m {
                let (fs, ft, fv) = mats[f];
                let (gs, gt, gv) = mats[g];
                if ft == gs {
                    // product of matrices; an inner dimension 0 gives zero
                    let v = if ft == 1 { fv & gv } else { 0 };
                    compose[g * m + f] = find(fs, gt, v);
                }
                tensor_mor[g * m + f] = find(gs * fs, gt * ft, gv & fv);
            }
        }
        MonoidalTable {
            name: "F2-mat".into(),
            objects: vec!["0".into(), "1".into()],
            morphisms,
            compose,
            identity: vec![0, 4],
            tensor_obj: vec![0, 0, 0, 1],
            tensor_mor,
            unit: 1,
            alpha: (0..8).map(|k: usize| if k == 7 { 4 } else { 0 }).collect(),
            lambda: vec![0, 4],
            rho: vec![0, 4],
        }
    }

    /// Objects `Z₂`, automorphisms `±1`, associator `(-1)^{xyz}`; a weak example.
    pub fn twisted_z2() -> Self {
        // morphism index = 2*object + sign bit
        let objects = vec!["0".to_string(), "1".to_string()];
        let morphisms = (0..4)
            .map(|k| Morphism { label: format!("{}{}", if k % 2 == 0 { "+" } else { "-" }, k / 2), src: k / 2, tgt: k / 2 })
            .collect();
        let mut compose = vec![NONE; 16];
        let mut tensor_mor = vec![0; 16];
        for g in 0..4 {
            for f in 0..4 {
                if g / 2 == f / 2 {
                    compose[g * 4 + f] = 2 * (f / 2) + ((g % 2) ^ (f % 2));
                }
                tensor_mor[g * 4 + f] = 2 * ((g / 2 + f / 2) % 2) + ((g % 2) ^ (f % 2));
            }
        }
        let mut alpha = vec![0; 8];
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    alpha[(x * 2 + y) * 2 + z] = 2 * ((x + y + z) % 2) + (x * y * z);
                }
            }
        }
        MonoidalTable {
            name: "Z2-twisted".into(),
            objects,
            morphisms,
            compose,
            identity: vec![0, 2],
            tensor_obj: vec![0, 1, 1, 0],
            tensor_mor,
            unit: 0,
            alpha,
            lambda: vec![0, 2],
            rho: vec![0, 2],
        }
    }
}

/// One object, 1-cells the objects of `m`, 2-cells its morphisms, `g∘f = g⊗f`.
pub fn delooping(m: &MonoidalTable) -> Result<TwoCategoryTable> {
    m.validate()?;
    let n = m.n_obj();
    let one_cells = m.objects.iter().map(|o| OneCell { label: o.clone(), src: 0, tgt: 0 }).collect();
    let two_cells = m.morphisms.iter().map(|f| TwoCell { label: f.label.clone(), src: f.src, tgt: f.tgt }).collect();
    let mut c = TwoCategoryTable::skeleton(format!("B({})", m.name), vec!["*".into()], one_cells, two_cells);
    c.compose1 = m.tensor_obj.clone();
    c.vcomp = m.compose.clone();
    c.hcomp = m.tensor_mor.clone();
    c.identity1[0] = m.unit;
    c.identity2 = m.identity.clone();
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                c.set_assoc(f, g, h, m.alpha_at(h, g, f));
            }
        }
    }
    c.left_unifier = m.lambda.clone();
    c.right_unifier = m.rho.clone();
    c.strict = m.is_strict();
    c.fill_inverses();
    let report = check_two_category(&c);
    if let Some(v) = report.violations.first() {
        return Err(CoreError::invariant(format!("coherence {}", v.kind), v.at.clone()));
    }
    Ok(c)
}

/// One object, one 1-cell, one 2-cell.
pub fn trivial_2groupoid() -> TwoCategoryTable {
    let mut c = TwoCategoryTable::skeleton(
        "trivial",
        vec!["*".into()],
        vec![OneCell { label: "id".into(), src: 0, tgt: 0 }],
        vec![TwoCell { label: "id".into(), src: 0, tgt: 0 }],
    );
    c.strict = true;
    c.compose1[0] = 0;
    c.vcomp[0] = 0;
    c.hcomp[0] = 0;
    c.identity1[0] = 0;
    c.identity2[0] = 0;
    c.associator[0] = 0;
    c.left_unifier[0] = 0;
    c.right_unifier[0] = 0;
    c.inverse2[0] = 0;
    c
}
