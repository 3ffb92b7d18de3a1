use crate::base::{build_fiber_spaces, CellMap, Computad, CoverSpec, FiberTower, Patch};
use crate::error::{CoreError, Result};
use crate::twocat::{TwoCategoryTable, TwoFunctorData};

use super::context::DescentContext;
use super::morphism::{compose_descent, DescentOneMor, DescentTwoMor};
use super::object::DescentObject;

/// A refinement `ξ: Y₁ → Y₂` over the base, given by sending each patch of the finer
/// cover into a patch of the coarser one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Refinement {
    pub patch_map: Vec<usize>,
}

fn contained(a: &Patch, b: &Patch) -> bool {
    a.vertices.is_subset(&b.vertices) && a.edges.is_subset(&b.edges) && a.faces.is_subset(&b.faces)
}

impl Refinement {
    pub fn new(from: &CoverSpec, to: &CoverSpec, patch_map: Vec<usize>) -> Result<Self> {
        if patch_map.len() != from.patches.len() {
            return Err(CoreError::Validation("refinement needs one target per patch".into()));
        }
        for (p, &q) in patch_map.iter().enumerate() {
            if q >= to.patches.len() || !contained(&from.patches[p], &to.patches[q]) {
                return Err(CoreError::Validation(format!("patch {p} of `{}` is not inside patch {q} of `{}`", from.name, to.name)));
            }
        }
        Ok(Refinement { patch_map })
    }

    pub fn identity(cover: &CoverSpec) -> Self {
        Refinement { patch_map: (0..cover.patches.len()).collect() }
    }

    /// `next∘self`.
    pub fn then(&self, next: &Refinement) -> Refinement {
        Refinement { patch_map: self.patch_map.iter().map(|&q| next.patch_map[q]).collect() }
    }

    /// `ξ^[k]: Y₁^[k] → Y₂^[k]`.
    pub fn induced(&self, from: &FiberTower, to: &FiberTower, k: usize) -> CellMap {
        let (a, b) = (from.space(k), to.space(k));
        let map = |t: &[usize]| t.iter().map(|&p| self.patch_map[p]).collect::<Vec<_>>();
        CellMap {
            vert: a.vertex_points.iter().map(|(t, v)| b.vertex(&map(t), *v).expect("refined vertex")).collect(),
            edge: a.edge_points.iter().map(|(t, e)| b.edge(&map(t), *e).expect("refined edge")).collect(),
            face: a.face_points.iter().map(|(t, f)| b.face(&map(t), *f).expect("refined face")).collect(),
        }
    }
}

/// Pullback of every component table along `ξ`.
pub fn restrict(xi: &Refinement, from: &FiberTower, to: &FiberTower, d: &DescentObject) -> DescentObject {
    let (m1, m2, m3) = (xi.induced(from, to, 1), xi.induced(from, to, 2), xi.induced(from, to, 3));
    DescentObject {
        triv: d.triv.pullback(&from.space(1).cx, &m1),
        g: d.g.pullback(&from.space(2).cx, &m2),
        psi: d.psi.pullback(&m1),
        f: d.f.pullback(&m3),
    }
}

pub fn restrict_1mor(xi: &Refinement, from: &FiberTower, to: &FiberTower, m: &DescentOneMor) -> DescentOneMor {
    DescentOneMor { h: m.h.pullback(&from.space(1).cx, &xi.induced(from, to, 1)), eps: m.eps.pullback(&xi.induced(from, to, 2)) }
}

pub fn restrict_2mor(xi: &Refinement, from: &FiberTower, to: &FiberTower, e: &DescentTwoMor) -> DescentTwoMor {
    DescentTwoMor { e: e.e.pullback(&xi.induced(from, to, 1)) }
}

fn intersect(a: &Patch, b: &Patch) -> Patch {
    Patch {
        vertices: a.vertices.intersection(&b.vertices).copied().collect(),
        edges: a.edges.intersection(&b.edges).copied().collect(),
        faces: a.faces.intersection(&b.faces).copied().collect(),
    }
}

/// The cover by nonempty intersections `U_p ∩ V_q` whose images agree under every pair of
/// patch maps in `agree`, with its two legs.
pub fn fibre_product(
    base: &Computad,
    a: &CoverSpec,
    b: &CoverSpec,
    agree: &[(&Refinement, &Refinement)],
) -> Result<(CoverSpec, Refinement, Refinement)> {
    let mut patches = Vec::new();
    let (mut la, mut lb) = (Vec::new(), Vec::new());
    for (p, pa) in a.patches.iter().enumerate() {
        for (q, pb) in b.patches.iter().enumerate() {
            if agree.iter().any(|(x, y)| x.patch_map[p] != y.patch_map[q]) {
                continue;
            }
            let c = intersect(pa, pb);
            if c.vertices.is_empty() {
                continue;
            }
            patches.push(c);
            la.push(p);
            lb.push(q);
        }
    }
    let cover = CoverSpec::new(base, format!("{}×{}", a.name, b.name), patches)?;
    Ok((cover, Refinement { patch_map: la }, Refinement { patch_map: lb }))
}

/// An object of the limit 2-category: a cover with a descent object over it.
#[derive(Debug, Clone)]
pub struct LimitObject {
    pub tower: FiberTower,
    pub d: DescentObject,
}

/// A 1-morphism: a common refinement `Z` with legs to both covers and a descent 1-morphism
/// between the restrictions.
#[derive(Debug, Clone)]
pub struct LimitOneMor {
    pub tower: FiberTower,
    pub leg1: Refinement,
    pub leg2: Refinement,
    pub m: DescentOneMor,
}

/// A representative 2-morphism: a refinement `W` of both 1-morphism covers and a descent
/// 2-morphism over it.
#[derive(Debug, Clone)]
pub struct LimitTwoMor {
    pub tower: FiberTower,
    pub leg1: Refinement,
    pub leg2: Refinement,
    pub e: DescentTwoMor,
}

/// Structure data shared by every cover.
#[derive(Debug, Clone, Copy)]
pub struct Structure<'a> {
    pub gr: &'a TwoCategoryTable,
    pub t: &'a TwoCategoryTable,
    pub i: &'a TwoFunctorData,
}

impl<'a> Structure<'a> {
    pub fn context<'b>(&self, tower: &'b FiberTower) -> Result<DescentContext<'b>>
    where
        'a: 'b,
    {
        DescentContext::new(tower, self.gr, self.t, self.i)
    }
}

fn legs_onto(leg: &Refinement, to: &CoverSpec) -> Result<()> {
    let mut hit = vec![false; to.patches.len()];
    for &q in &leg.patch_map {
        hit[q] = true;
    }
    if hit.iter().all(|&h| h) {
        Ok(())
    } else {
        Err(CoreError::Validation("refinement leg misses a patch".into()))
    }
}

impl LimitOneMor {
    /// Restriction of a descent 1-morphism over a common cover.
    pub fn over_same(tower: &FiberTower, m: DescentOneMor) -> Self {
        let id = Refinement::identity(&tower.cover);
        LimitOneMor { tower: tower.clone(), leg1: id.clone(), leg2: id, m }
    }
}

/// Composition through `Z₁₃ = Z₁₂ ×_{Y₂} Z₂₃`.
pub fn limit_compose(m12: &LimitOneMor, m23: &LimitOneMor, o2: &LimitObject, o3: &LimitObject, s: Structure) -> Result<LimitOneMor> {
    legs_onto(&m12.leg2, &o2.tower.cover)?;
    let base = m12.tower.base();
    let (cover, p, q) = fibre_product(base, &m12.tower.cover, &m23.tower.cover, &[(&m12.leg2, &m23.leg1)])?;
    let tower = build_fiber_spaces(base, &cover)?;
    let a = restrict_1mor(&p, &tower, &m12.tower, &m12.m);
    let b = restrict_1mor(&q, &tower, &m23.tower, &m23.m);
    let leg1 = p.then(&m12.leg1);
    let leg2 = q.then(&m23.leg2);
    let d3 = restrict(&leg2, &tower, &o3.tower, &o3.d);
    let m = {
        let cx = s.context(&tower)?;
        compose_descent(&a, &b, &d3, &cx)?
    };
    Ok(LimitOneMor { tower, leg1, leg2, m })
}

/// Equality of two representatives after pulling both back to `W₁ ×_{Z×Z′} W₂`.
pub fn limit_eq(t1: &LimitTwoMor, t2: &LimitTwoMor) -> Result<bool> {
    let base = t1.tower.base();
    let (cover, p, q) = fibre_product(base, &t1.tower.cover, &t2.tower.cover, &[(&t1.leg1, &t2.leg1), (&t1.leg2, &t2.leg2)])?;
    let tower = build_fiber_spaces(base, &cover)?;
    let e1 = restrict_2mor(&p, &tower, &t1.tower, &t1.e);
    let e2 = restrict_2mor(&q, &tower, &t2.tower, &t2.e);
    Ok(e1 == e2)
}

/// The common refinement of two covers by pairwise intersections.
pub fn common_refinement(base: &Computad, a: &CoverSpec, b: &CoverSpec) -> Result<(FiberTower, Refinement, Refinement)> {
    let (cover, p, q) = fibre_product(base, a, b, &[])?;
    Ok((build_fiber_spaces(base, &cover)?, p, q))
}
