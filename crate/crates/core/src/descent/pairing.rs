use crate::base::{BigonTerm, PathFunctor, PathTerm};
use crate::codescent::Pairing;
use crate::error::Result;
use crate::twocat::{ObjId, TwoCategoryTable, C1, C2};

use super::context::DescentContext;
use super::object::DescentObject;

/// The functor `R: Π₂^π(M) → T` of a descent object, on generators.
#[derive(Debug, Clone)]
pub struct DescentPairing<'d, 'a> {
    pub cx: &'d DescentContext<'a>,
    pub d: &'d DescentObject,
    pub triv_i: PathFunctor,
    f1: PathFunctor,
    f2: PathFunctor,
}

impl<'d, 'a> DescentPairing<'d, 'a> {
    pub fn new(cx: &'d DescentContext<'a>, d: &'d DescentObject) -> Result<Self> {
        let triv_i = cx.post(&d.triv)?;
        let (f1, f2) = d.sides(cx)?;
        Ok(DescentPairing { cx, d, triv_i, f1, f2 })
    }
}

impl Pairing for DescentPairing<'_, '_> {
    fn table(&self) -> &TwoCategoryTable {
        self.cx.t
    }
    fn point(&self, a: usize) -> ObjId {
        self.triv_i.obj[a]
    }
    fn path(&self, p: &PathTerm) -> Result<C1> {
        self.triv_i.path(self.cx.y(1), self.cx.t, p)
    }
    fn jump(&self, alpha: usize) -> C1 {
        self.d.g.comp0[alpha]
    }
    fn bigon(&self, b: &BigonTerm) -> Result<C2> {
        self.triv_i.bigon(self.cx.y(1), self.cx.t, b)
    }
    fn theta(&self, path: &PathTerm) -> Result<C2> {
        self.d.g.path(&self.f1, &self.f2, self.cx.y(2), self.cx.t, path)
    }
    fn xi(&self, point: usize) -> C2 {
        self.d.f.comp[point]
    }
    fn delta(&self, a: usize) -> C2 {
        self.d.psi.comp[a]
    }
    fn unitor(&self, a: usize) -> C2 {
        self.triv_i.unitor[a]
    }
    fn compositor(&self, first: &PathTerm, second: &PathTerm) -> Result<C2> {
        self.triv_i.compositor(self.cx.y(1), self.cx.t, first, second)
    }
}
