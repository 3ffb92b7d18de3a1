use std::collections::HashMap;

use crate::error::{CoreError, Result};

pub type ObjId = usize;
pub type C1 = usize;
pub type C2 = usize;

/// Marker for an undefined table entry.
pub const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneCell {
    pub label: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoCell {
    pub label: String,
    pub src: C1,
    pub tgt: C1,
}

/// A finite 2-category stored as dense composition tables.
///
/// Index conventions: `compose1[g*n1+f] = g∘f` (f first), `vcomp[b*n2+a] = b•a`
/// (a first), `hcomp[b*n2+a] = b∘a`, `associator[(f*n1+g)*n1+h] = a_{f,g,h}` of type
/// `(h∘g)∘f ⇒ h∘(g∘f)`, `left_unifier[f] = l_f: f∘id ⇒ f`,
/// `right_unifier[f] = r_f: id∘f ⇒ f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCategoryTable {
    pub name: String,
    pub objects: Vec<String>,
    pub one_cells: Vec<OneCell>,
    pub two_cells: Vec<TwoCell>,
    pub compose1: Vec<C1>,
    pub vcomp: Vec<C2>,
    pub hcomp: Vec<C2>,
    pub identity1: Vec<C1>,
    pub identity2: Vec<C2>,
    pub associator: Vec<C2>,
    pub left_unifier: Vec<C2>,
    pub right_unifier: Vec<C2>,
    pub inverse2: Vec<C2>,
    pub strict: bool,
}

fn lookup(v: usize) -> Option<usize> {
    (v != NONE).then_some(v)
}

impl TwoCategoryTable {
    /// Cells without any composition data; every table entry starts undefined.
    pub fn skeleton(
        name: impl Into<String>,
        objects: Vec<String>,
        one_cells: Vec<OneCell>,
        two_cells: Vec<TwoCell>,
    ) -> Self {
        let (n0, n1, n2) = (objects.len(), one_cells.len(), two_cells.len());
        TwoCategoryTable {
            name: name.into(),
            objects,
            one_cells,
            two_cells,
            compose1: vec![NONE; n1 * n1],
            vcomp: vec![NONE; n2 * n2],
            hcomp: vec![NONE; n2 * n2],
            identity1: vec![NONE; n0],
            identity2: vec![NONE; n1],
            associator: vec![NONE; n1 * n1 * n1],
            left_unifier: vec![NONE; n1],
            right_unifier: vec![NONE; n1],
            inverse2: vec![NONE; n2],
            strict: false,
        }
    }

    pub fn n0(&self) -> usize {
        self.objects.len()
    }
    pub fn n1(&self) -> usize {
        self.one_cells.len()
    }
    pub fn n2(&self) -> usize {
        self.two_cells.len()
    }

    pub fn src1(&self, f: C1) -> ObjId {
        self.one_cells[f].src
    }
    pub fn tgt1(&self, f: C1) -> ObjId {
        self.one_cells[f].tgt
    }
    pub fn src2(&self, a: C2) -> C1 {
        self.two_cells[a].src
    }
    pub fn tgt2(&self, a: C2) -> C1 {
        self.two_cells[a].tgt
    }

    pub fn comp1(&self, g: C1, f: C1) -> Option<C1> {
        lookup(self.compose1[g * self.n1() + f])
    }
    pub fn vert(&self, b: C2, a: C2) -> Option<C2> {
        lookup(self.vcomp[b * self.n2() + a])
    }
    pub fn horiz(&self, b: C2, a: C2) -> Option<C2> {
        lookup(self.hcomp[b * self.n2() + a])
    }
    pub fn id1(&self, x: ObjId) -> C1 {
        self.identity1[x]
    }
    pub fn id2(&self, f: C1) -> C2 {
        self.identity2[f]
    }
    pub fn assoc(&self, f: C1, g: C1, h: C1) -> Option<C2> {
        let n = self.n1();
        lookup(self.associator[(f * n + g) * n + h])
    }
    pub fn lunit(&self, f: C1) -> Option<C2> {
        lookup(self.left_unifier[f])
    }
    pub fn runit(&self, f: C1) -> Option<C2> {
        lookup(self.right_unifier[f])
    }
    pub fn inv2(&self, a: C2) -> Option<C2> {
        lookup(self.inverse2[a])
    }

    pub fn set_comp1(&mut self, g: C1, f: C1, r: C1) {
        let n = self.n1();
        self.compose1[g * n + f] = r;
    }
    pub fn set_vert(&mut self, b: C2, a: C2, r: C2) {
        let n = self.n2();
        self.vcomp[b * n + a] = r;
    }
    pub fn set_horiz(&mut self, b: C2, a: C2, r: C2) {
        let n = self.n2();
        self.hcomp[b * n + a] = r;
    }
    pub fn set_assoc(&mut self, f: C1, g: C1, h: C1, r: C2) {
        let n = self.n1();
        self.associator[(f * n + g) * n + h] = r;
    }

    pub fn is_identity2(&self, a: C2) -> bool {
        self.identity2[self.src2(a)] == a
    }

    pub fn obj_label(&self, x: ObjId) -> &str {
        if x == NONE { "⊥" } else { self.objects[x].as_str() }
    }
    pub fn one_label(&self, f: C1) -> &str {
        if f == NONE { "⊥" } else { self.one_cells[f].label.as_str() }
    }
    pub fn two_label(&self, a: C2) -> &str {
        if a == NONE { "⊥" } else { self.two_cells[a].label.as_str() }
    }

    pub fn find_object(&self, label: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == label)
    }
    pub fn find_one(&self, label: &str) -> Option<C1> {
        self.one_cells.iter().position(|c| c.label == label)
    }
    pub fn find_two(&self, label: &str) -> Option<C2> {
        self.two_cells.iter().position(|c| c.label == label)
    }

    /// Label lookup tables for bulk parsing.
    pub fn label_index(&self) -> LabelIndex {
        LabelIndex {
            objects: self.objects.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect(),
            one: self.one_cells.iter().enumerate().map(|(i, c)| (c.label.clone(), i)).collect(),
            two: self.two_cells.iter().enumerate().map(|(i, c)| (c.label.clone(), i)).collect(),
        }
    }

    /// Fills `inverse2` by search over vertical composites.
    pub fn fill_inverses(&mut self) {
        for a in 0..self.n2() {
            if self.inverse2[a] != NONE {
                continue;
            }
            let (s, t) = (self.src2(a), self.tgt2(a));
            for b in 0..self.n2() {
                if self.src2(b) != t || self.tgt2(b) != s {
                    continue;
                }
                if self.vert(b, a) == Some(self.id2(s)) && self.vert(a, b) == Some(self.id2(t)) {
                    self.inverse2[a] = b;
                    break;
                }
            }
        }
    }

    /// Every 2-cell with the given source and target.
    pub fn hom2(&self, s: C1, t: C1) -> impl Iterator<Item = C2> + '_ {
        (0..self.n2()).filter(move |&a| self.src2(a) == s && self.tgt2(a) == t)
    }

    /// Every 1-cell with the given endpoints.
    pub fn hom1(&self, x: ObjId, y: ObjId) -> impl Iterator<Item = C1> + '_ {
        (0..self.n1()).filter(move |&f| self.src1(f) == x && self.tgt1(f) == y)
    }

    // Typed composition helpers. They fail with a typing error naming the cells.

    pub fn c1(&self, g: C1, f: C1) -> Result<C1> {
        if f == NONE || g == NONE {
            return Err(CoreError::typing("compose1", "undefined operand"));
        }
        self.comp1(g, f).ok_or_else(|| {
            CoreError::typing(
                format!("{}∘{}", self.one_label(g), self.one_label(f)),
                "1-cells not composable",
            )
        })
    }

    pub fn v(&self, b: C2, a: C2) -> Result<C2> {
        if a == NONE || b == NONE {
            return Err(CoreError::typing("vcomp", "undefined operand"));
        }
        self.vert(b, a).ok_or_else(|| {
            CoreError::typing(
                format!("{}•{}", self.two_label(b), self.two_label(a)),
                format!(
                    "2-cells not vertically composable: {} ⇒ {} then {} ⇒ {}",
                    self.one_label(self.src2(a)),
                    self.one_label(self.tgt2(a)),
                    self.one_label(self.src2(b)),
                    self.one_label(self.tgt2(b))
                ),
            )
        })
    }

    pub fn h(&self, b: C2, a: C2) -> Result<C2> {
        if a == NONE || b == NONE {
            return Err(CoreError::typing("hcomp", "undefined operand"));
        }
        self.horiz(b, a).ok_or_else(|| {
            CoreError::typing(
                format!("{}∘{}", self.two_label(b), self.two_label(a)),
                "2-cells not horizontally composable",
            )
        })
    }

    pub fn inv(&self, a: C2) -> Result<C2> {
        if a == NONE {
            return Err(CoreError::typing("inverse", "undefined operand"));
        }
        self.inv2(a)
            .ok_or_else(|| CoreError::typing(self.two_label(a).to_string(), "2-cell has no inverse"))
    }

    /// `g ∘ a` for a 1-cell `g` after the 2-cell `a`.
    pub fn wl(&self, g: C1, a: C2) -> Result<C2> {
        self.h(self.id2(g), a)
    }

    /// `a ∘ f` for a 1-cell `f` before the 2-cell `a`.
    pub fn wr(&self, a: C2, f: C1) -> Result<C2> {
        self.h(a, self.id2(f))
    }

    /// Composite of 1-cells listed in traversal order, starting at `x`.
    pub fn path1(&self, x: ObjId, cells: &[C1]) -> Result<C1> {
        let mut acc = self.id1(x);
        for &f in cells {
            acc = self.c1(f, acc)?;
        }
        Ok(acc)
    }

    /// Vertical composite of 2-cells listed in application order.
    pub fn vpath(&self, cells: &[C2]) -> Result<C2> {
        let mut it = cells.iter();
        let mut acc = *it.next().ok_or_else(|| CoreError::typing("vpath", "empty"))?;
        for &a in it {
            acc = self.v(a, acc)?;
        }
        Ok(acc)
    }

    /// Horizontal composite of 2-cells listed in traversal order (first cell applied first).
    pub fn hpath(&self, cells: &[C2]) -> Result<C2> {
        let mut it = cells.iter();
        let mut acc = *it.next().ok_or_else(|| CoreError::typing("hpath", "empty"))?;
        for &a in it {
            acc = self.h(a, acc)?;
        }
        Ok(acc)
    }

    /// Identity 2-cell of the identity 1-cell at `x`.
    pub fn id2_obj(&self, x: ObjId) -> C2 {
        self.id2(self.id1(x))
    }

    pub fn require_strict(&self, what: &str) -> Result<()> {
        if self.strict {
            Ok(())
        } else {
            Err(CoreError::Capability(format!("{what} requires a strict target, `{}` is weak", self.name)))
        }
    }
}

/// Label to id maps for a table.
#[derive(Debug, Clone, Default)]
pub struct LabelIndex {
    pub objects: HashMap<String, ObjId>,
    pub one: HashMap<String, C1>,
    pub two: HashMap<String, C2>,
}

impl LabelIndex {
    pub fn object(&self, l: &str) -> Result<ObjId> {
        self.objects.get(l).copied().ok_or_else(|| CoreError::Unknown(l.to_string()))
    }
    pub fn one(&self, l: &str) -> Result<C1> {
        self.one.get(l).copied().ok_or_else(|| CoreError::Unknown(l.to_string()))
    }
    pub fn two(&self, l: &str) -> Result<C2> {
        self.two.get(l).copied().ok_or_else(|| CoreError::Unknown(l.to_string()))
    }
}
