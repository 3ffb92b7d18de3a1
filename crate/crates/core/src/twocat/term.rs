use std::fmt;

use crate::error::{CoreError, Result};

use super::table::{ObjId, TwoCategoryTable, C1, C2};

/// A formal composite of cells with explicit bracketing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    One(C1),
    Two(C2),
    Id1(ObjId),
    Id2(Box<Term>),
    /// `Comp1(g, f)` is `g∘f` on 1-cells.
    Comp1(Box<Term>, Box<Term>),
    /// `VComp(b, a)` is `b•a`.
    VComp(Box<Term>, Box<Term>),
    /// `HComp(b, a)` is `b∘a` on 2-cells.
    HComp(Box<Term>, Box<Term>),
    Assoc(Box<Term>, Box<Term>, Box<Term>),
    LUnit(Box<Term>),
    RUnit(Box<Term>),
    Inv(Box<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    One(C1),
    Two(C2),
}

impl Term {
    pub fn comp1(g: Term, f: Term) -> Term {
        Term::Comp1(Box::new(g), Box::new(f))
    }
    pub fn vcomp(b: Term, a: Term) -> Term {
        Term::VComp(Box::new(b), Box::new(a))
    }
    pub fn hcomp(b: Term, a: Term) -> Term {
        Term::HComp(Box::new(b), Box::new(a))
    }
    pub fn id2(f: Term) -> Term {
        Term::Id2(Box::new(f))
    }
    pub fn assoc(f: Term, g: Term, h: Term) -> Term {
        Term::Assoc(Box::new(f), Box::new(g), Box::new(h))
    }
    pub fn lunit(f: Term) -> Term {
        Term::LUnit(Box::new(f))
    }
    pub fn runit(f: Term) -> Term {
        Term::RUnit(Box::new(f))
    }
    pub fn inv(a: Term) -> Term {
        Term::Inv(Box::new(a))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::One(c) => write!(f, "1:{c}"),
            Term::Two(c) => write!(f, "2:{c}"),
            Term::Id1(x) => write!(f, "id({x})"),
            Term::Id2(t) => write!(f, "id2({t})"),
            Term::Comp1(g, h) | Term::HComp(g, h) => write!(f, "({g}∘{h})"),
            Term::VComp(b, a) => write!(f, "({b}•{a})"),
            Term::Assoc(a, b, c) => write!(f, "a({a},{b},{c})"),
            Term::LUnit(t) => write!(f, "l({t})"),
            Term::RUnit(t) => write!(f, "r({t})"),
            Term::Inv(t) => write!(f, "inv({t})"),
        }
    }
}

/// Folds `term` through the tables of `c`, respecting its bracketing literally.
///
/// Typing errors name the offending node as a path from the root, e.g. `root.0.1`.
pub fn evaluate_term(c: &TwoCategoryTable, term: &Term) -> Result<Cell> {
    eval(c, term, "root")
}

fn eval(c: &TwoCategoryTable, t: &Term, at: &str) -> Result<Cell> {
    let child = |i: usize| format!("{at}.{i}");
    let one = |t: &Term, path: String| -> Result<C1> {
        match eval(c, t, &path)? {
            Cell::One(f) => Ok(f),
            Cell::Two(_) => Err(CoreError::typing(path, "expected a 1-cell")),
        }
    };
    let two = |t: &Term, path: String| -> Result<C2> {
        match eval(c, t, &path)? {
            Cell::Two(a) => Ok(a),
            Cell::One(_) => Err(CoreError::typing(path, "expected a 2-cell")),
        }
    };
    let fail = |msg: &str| CoreError::typing(at, msg);
    Ok(match t {
        Term::One(f) if *f < c.n1() => Cell::One(*f),
        Term::Two(a) if *a < c.n2() => Cell::Two(*a),
        Term::Id1(x) if *x < c.n0() => Cell::One(c.id1(*x)),
        Term::One(_) | Term::Two(_) | Term::Id1(_) => return Err(fail("unknown cell")),
        Term::Id2(f) => Cell::Two(c.id2(one(f, child(0))?)),
        Term::Comp1(g, f) => {
            let (g, f) = (one(g, child(0))?, one(f, child(1))?);
            Cell::One(c.comp1(g, f).ok_or_else(|| fail("1-cells not composable"))?)
        }
        Term::VComp(b, a) => {
            let (b, a) = (two(b, child(0))?, two(a, child(1))?);
            Cell::Two(c.vert(b, a).ok_or_else(|| fail("2-cells not vertically composable"))?)
        }
        Term::HComp(b, a) => {
            let (b, a) = (two(b, child(0))?, two(a, child(1))?);
            Cell::Two(c.horiz(b, a).ok_or_else(|| fail("2-cells not horizontally composable"))?)
        }
        Term::Assoc(f, g, h) => {
            let (f, g, h) = (one(f, child(0))?, one(g, child(1))?, one(h, child(2))?);
            Cell::Two(c.assoc(f, g, h).ok_or_else(|| fail("associator arguments not composable"))?)
        }
        Term::LUnit(f) => Cell::Two(c.lunit(one(f, child(0))?).ok_or_else(|| fail("no left unifier"))?),
        Term::RUnit(f) => Cell::Two(c.runit(one(f, child(0))?).ok_or_else(|| fail("no right unifier"))?),
        Term::Inv(a) => Cell::Two(c.inv2(two(a, child(0))?).ok_or_else(|| fail("2-cell not invertible"))?),
    })
}
