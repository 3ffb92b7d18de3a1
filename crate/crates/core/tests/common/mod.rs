#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twofun_core::base::*;
use twofun_core::instances::CrossedModule;
use twofun_core::twocat::TwoCategoryTable;

pub fn random_strict_functor(cx: &Computad, cm: &CrossedModule, t: &TwoCategoryTable, seed: u64) -> PathFunctor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = &cm.g;
    let edge: Vec<usize> = (0..cx.edges.len()).map(|_| rng.gen_range(0..g.order())).collect();
    let word = |w: &[usize]| {
        w.iter().fold(g.identity, |acc, &l| {
            let x = if l % 2 == 0 { edge[l / 2] } else { g.inv(edge[l / 2]) };
            g.m(x, acc)
        })
    };
    let face = cx
        .faces
        .iter()
        .map(|f| {
            let (gs, gt) = (word(&f.src.letters), word(&f.tgt.letters));
            let need = g.m(gt, g.inv(gs));
            let hs: Vec<usize> = (0..cm.h.order()).filter(|&h| cm.t[h] == need).collect();
            cm.cell(gs, hs[rng.gen_range(0..hs.len())])
        })
        .collect();
    PathFunctor::strict(cx, t, vec![0; cx.vertices.len()], &edge, face).unwrap()
}


/// Random invertible 1-cells of a one-object 2-group, one per point of `Y`.
pub fn random_gauge(n: usize, cm: &CrossedModule, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(0..cm.g.order())).collect()
}

/// `f(i,j,k) · b(j,k)·b(i,j)·b(i,k)⁻¹` for central kernel labels `b(i,j)` with `b(i,i) = 1`.
pub fn twist_central(
    d: &twofun_core::descent::DescentObject,
    cx: &twofun_core::descent::DescentContext,
    cm: &CrossedModule,
    b: &dyn Fn(usize, usize) -> usize,
) -> twofun_core::descent::DescentObject {
    let h = &cm.h;
    let nh = h.order();
    let mut out = d.clone();
    for (n, (tu, _)) in cx.tower.space(3).vertex_points.iter().enumerate() {
        let (i, j, k) = (tu[0], tu[1], tu[2]);
        let c = h.m(h.m(b(j, k), b(i, j)), h.inv(b(i, k)));
        let cell = d.f.comp[n];
        out.f.comp[n] = (cell / nh) * nh + h.m(c, cell % nh);
    }
    out
}

pub fn two_patch_point() -> (Computad, CoverSpec) {
    let cx = Computad::point();
    let p = Patch::closure(&cx, &[0], &[], &[]);
    let cover = CoverSpec::new(&cx, "two", vec![p.clone(), p]).unwrap();
    (cx, cover)
}

pub fn strict_pair(t: &TwoCategoryTable) -> twofun_core::twocat::TwoFunctorData {
    twofun_core::twocat::TwoFunctorData::identity(t)
}

pub fn nonabelian() -> (CrossedModule, TwoCategoryTable) {
    let cm = CrossedModule::nonabelian_example();
    let t = twofun_core::instances::two_group_from_crossed_module(&cm).unwrap();
    (cm, t)
}

/// Central kernel label `(e, 1)` of the nonabelian example.
pub fn central(cm: &CrossedModule) -> usize {
    (0..cm.h.order()).find(|&h| h != cm.h.identity && cm.t[h] == cm.g.identity).unwrap()
}

pub fn generic_object(cx: &twofun_core::descent::DescentContext, cm: &CrossedModule, seed: u64) -> twofun_core::descent::DescentObject {
    let m = cx.y(0);
    let global = random_strict_functor(m, cm, cx.gr, seed);
    let d = twofun_core::descent::DescentObject::pulled_back(cx, &global).unwrap();
    let k = random_gauge(cx.y(1).vertices.len(), cm, seed ^ 0x5a5a);
    let (d, _) = twofun_core::descent::gauge(&d, &k, cx).unwrap();
    let c = central(cm);
    twist_central(&d, cx, cm, &|i, j| if i < j && (i + j + seed as usize) % 2 == 0 { c } else { cm.h.identity })
}

