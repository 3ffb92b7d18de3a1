use crate::base::functor::require_strict_functor;
use crate::base::{CellMap, Computad, FiberTower, PathFunctor};
use crate::error::Result;
use crate::twocat::{ObjId, TwoCategoryTable, TwoFunctorData, C2};

/// The fixed data descent objects live over: a fibre tower, the structure 2-groupoid `Gr`,
/// the strict target `T` and a strict functor `i: Gr → T`.
#[derive(Debug, Clone)]
pub struct DescentContext<'a> {
    pub tower: &'a FiberTower,
    pub gr: &'a TwoCategoryTable,
    pub t: &'a TwoCategoryTable,
    pub i: &'a TwoFunctorData,
    /// Longest word used by the functor and transformation checkers.
    pub max_len: usize,
    /// `Y^[2] → Y` by each index.
    pub p1: CellMap,
    pub p2: CellMap,
    /// `Y^[3] → Y^[2]`.
    pub p12: CellMap,
    pub p23: CellMap,
    pub p13: CellMap,
    /// `Y^[3] → Y` by each index.
    pub q1: CellMap,
    pub q3: CellMap,
    /// `Δ: Y → Y^[2]`.
    pub diag: CellMap,
    /// `Y^[2] → Y^[2]` exchanging the indices.
    pub swap: CellMap,
    /// `Δ₁₂₁: Y^[2] → Y^[3]`.
    pub d121: CellMap,
}

impl<'a> DescentContext<'a> {
    pub fn new(tower: &'a FiberTower, gr: &'a TwoCategoryTable, t: &'a TwoCategoryTable, i: &'a TwoFunctorData) -> Result<Self> {
        t.require_strict("descent target")?;
        require_strict_functor(i, gr, t)?;
        Ok(DescentContext {
            tower,
            gr,
            t,
            i,
            max_len: 2,
            p1: tower.index_map(2, &[0])?,
            p2: tower.index_map(2, &[1])?,
            p12: tower.index_map(3, &[0, 1])?,
            p23: tower.index_map(3, &[1, 2])?,
            p13: tower.index_map(3, &[0, 2])?,
            q1: tower.index_map(3, &[0])?,
            q3: tower.index_map(3, &[2])?,
            diag: tower.index_map(1, &[0, 0])?,
            swap: tower.index_map(2, &[1, 0])?,
            d121: tower.index_map(2, &[0, 1, 0])?,
        })
    }

    pub fn y(&self, k: usize) -> &Computad {
        &self.tower.space(k).cx
    }

    /// Index of the point `(t, x)` of `Y^[|t|]`.
    pub fn pt(&self, t: &[usize], x: usize) -> usize {
        self.tower.pt(t, x)
    }

    /// `(tuple, base vertex)` of a point of `Y^[k]`.
    pub fn split(&self, k: usize, p: usize) -> (&[usize], usize) {
        let (t, x) = &self.tower.space(k).vertex_points[p];
        (t, *x)
    }

    pub fn label(&self, k: usize, p: usize) -> &str {
        &self.tower.space(k).cx.vertices[p]
    }

    /// `triv_i = i∘triv`.
    pub fn post(&self, triv: &PathFunctor) -> Result<PathFunctor> {
        triv.post(self.i, self.gr, self.t)
    }

    pub fn id2_at(&self, x: ObjId) -> C2 {
        self.t.id2_obj(x)
    }
}
