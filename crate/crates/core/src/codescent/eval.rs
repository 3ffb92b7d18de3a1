use crate::base::{BigonTerm, PathTerm};
use crate::error::Result;
use crate::twocat::{ObjId, TwoCategoryTable, C1, C2};

use super::term::{Atom, CTerm1, CTerm2, Codescent};

/// Values of the basic generators in a strict target; evaluation extends them to all terms.
pub trait Pairing {
    fn table(&self) -> &TwoCategoryTable;
    fn point(&self, a: usize) -> ObjId;
    fn path(&self, p: &PathTerm) -> Result<C1>;
    fn jump(&self, alpha: usize) -> C1;
    fn bigon(&self, b: &BigonTerm) -> Result<C2>;
    /// Component of the transformation at a path `Θ` in `Y^[2]`.
    fn theta(&self, path: &PathTerm) -> Result<C2>;
    fn xi(&self, point: usize) -> C2;
    fn delta(&self, a: usize) -> C2;
    /// Image of `u*_a: [id_a] ⇒ []`.
    fn unitor(&self, a: usize) -> C2;
    /// Image of `c*_{γ₁,γ₂}: [γ₁, γ₂] ⇒ [γ₂∘γ₁]`.
    fn compositor(&self, first: &PathTerm, second: &PathTerm) -> Result<C2>;
}

fn maybe_inv(t: &TwoCategoryTable, a: C2, inv: bool) -> Result<C2> {
    if inv {
        t.inv(a)
    } else {
        Ok(a)
    }
}

impl<'a> Codescent<'a> {
    pub fn eval1(&self, r: &dyn Pairing, l: &CTerm1) -> Result<C1> {
        let t = r.table();
        let mut acc = t.id1(r.point(l.start));
        for a in &l.atoms {
            let f = match a {
                Atom::Path(p) => r.path(p)?,
                Atom::Jump(al) => r.jump(*al),
            };
            acc = t.c1(f, acc)?;
        }
        Ok(acc)
    }

    pub fn eval2(&self, r: &dyn Pairing, c: &CTerm2) -> Result<C2> {
        let t = r.table();
        match c {
            CTerm2::Id(l) | CTerm2::Coherence(l) => Ok(t.id2(self.eval1(r, l)?)),
            CTerm2::Bigon(b) => r.bigon(b),
            CTerm2::Theta { path, inv } => maybe_inv(t, r.theta(path)?, *inv),
            CTerm2::Xi { point, inv } => maybe_inv(t, r.xi(*point), *inv),
            CTerm2::DeltaA { point, inv } => maybe_inv(t, r.delta(*point), *inv),
            CTerm2::UStar { point, inv } => maybe_inv(t, r.unitor(*point), *inv),
            CTerm2::CStar { first, second, inv } => maybe_inv(t, r.compositor(first, second)?, *inv),
            CTerm2::V(a, b) => t.v(self.eval2(r, b)?, self.eval2(r, a)?),
            CTerm2::H(a, b) => t.h(self.eval2(r, b)?, self.eval2(r, a)?),
        }
    }
}
