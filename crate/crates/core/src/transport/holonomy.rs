use crate::base::path::reduce;
use crate::base::{BigonTerm, Computad, PathFunctor, PathTerm};
use crate::error::Result;
use crate::twocat::{Cell, TwoCategoryTable};

/// A path (1-holonomy) or a bigon (surface holonomy) in the base; the basepoint is the
/// start vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransportQuery {
    Path(PathTerm),
    Bigon(BigonTerm),
}

/// `F` on the reduced path, or on the bigon.
pub fn holonomy(f: &PathFunctor, base: &Computad, t: &TwoCategoryTable, q: &TransportQuery) -> Result<Cell> {
    match q {
        TransportQuery::Path(p) => {
            PathTerm::new(base, p.start, &p.letters)?;
            let r = PathTerm { start: p.start, letters: reduce(&p.letters) };
            Ok(Cell::One(f.path(base, t, &r)?))
        }
        TransportQuery::Bigon(b) => {
            b.typecheck(base)?;
            Ok(Cell::Two(f.bigon(base, t, b)?))
        }
    }
}
