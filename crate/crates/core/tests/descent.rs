use std::collections::BTreeSet;

use proptest::prelude::*;

use twofun_core::base::*;
use twofun_core::codescent::{Codescent, Identification};
use twofun_core::descent::*;
use twofun_core::instances::{enumerate_crossed_modules, two_group_from_crossed_module, CrossedModule, FiniteGroup};
use twofun_core::twocat::TwoFunctorData;

mod common;
use common::*;

#[test]
fn trivial_object_passes_and_is_normalized() {
    let (_, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::octahedron();
    let tower = build_fiber_spaces(&cx, &CoverSpec::octahedron_wedges(&cx)).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let d = DescentObject::trivial(&ctx, 0).unwrap();
    assert!(check_descent_object(&d, &ctx).unwrap().is_empty());
    assert!(is_normalized(&d, &ctx));
    assert_eq!(forget_v(&d), &PathFunctor::constant(ctx.y(1), &t, 0));
}

#[test]
fn nontrivial_psi_is_not_normalized() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::c6();
    let tower = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let mut d = DescentObject::trivial(&ctx, 0).unwrap();
    d.psi.comp[0] = cm.cell(cm.g.identity, central(&cm));
    assert!(!is_normalized(&d, &ctx));
}

#[test]
fn gauged_and_twisted_objects_pass() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let bases = [
        (Computad::c6(), CoverSpec::c6_arcs(&Computad::c6())),
        (Computad::grid(3, 3, true), CoverSpec::torus_blocks(&Computad::grid(3, 3, true))),
    ];
    for (cx, cover) in bases {
        let tower = build_fiber_spaces(&cx, &cover).unwrap();
        let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        for seed in 0..4 {
            let d = generic_object(&ctx, &cm, seed);
            let r = check_descent_object(&d, &ctx).unwrap();
            assert!(r.is_empty(), "{}: {r}", cx.name);
            let k = random_gauge(ctx.y(1).vertices.len(), &cm, seed + 100);
            let (d2, m) = gauge(&d, &k, &ctx).unwrap();
            assert!(check_descent_object(&d2, &ctx).unwrap().is_empty());
            let r = check_descent_1mor(&m, &d, &d2, &ctx).unwrap();
            assert!(r.is_empty(), "{r}");
            let id = DescentOneMor::identity(&d, &ctx).unwrap();
            assert!(check_descent_1mor(&id, &d, &d, &ctx).unwrap().is_empty());
        }
    }
}

#[test]
fn weak_target_is_refused() {
    let m = twofun_core::instances::MonoidalTable::twisted_z2();
    let t = twofun_core::instances::delooping(&m).unwrap();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::point();
    let tower = build_fiber_spaces(&cx, &CoverSpec::single(&cx)).unwrap();
    if !t.strict {
        assert!(DescentContext::new(&tower, &t, &t, &i).is_err());
    }
}

// Nonabelian cocycle conditions in group arithmetic, independent of the table checkers.
struct Labels {
    g: Vec<usize>,
    psi: Vec<usize>,
    f: Vec<usize>,
}

fn cocycle_ok(cm: &CrossedModule, n: usize, l: &Labels) -> bool {
    let (g, h) = (&cm.g, &cm.h);
    let gi = |i: usize, j: usize| l.g[i * n + j];
    let fi = |i: usize, j: usize, k: usize| l.f[(i * n + j) * n + k];
    for i in 0..n {
        if cm.t[l.psi[i]] != gi(i, i) {
            return false;
        }
        for j in 0..n {
            for k in 0..n {
                if g.m(cm.t[fi(i, j, k)], g.m(gi(j, k), gi(i, j))) != gi(i, k) {
                    return false;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if h.m(fi(i, j, j), l.psi[j]) != h.identity || h.m(fi(i, i, j), cm.a(gi(i, j), l.psi[i])) != h.identity {
                return false;
            }
            for k in 0..n {
                for m in 0..n {
                    let lhs = h.m(fi(i, k, m), cm.a(gi(k, m), fi(i, j, k)));
                    let rhs = h.m(fi(i, j, m), fi(j, k, m));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn object_from_labels(ctx: &DescentContext, cm: &CrossedModule, n: usize, l: &Labels) -> DescentObject {
    let mut d = DescentObject::trivial(ctx, 0).unwrap();
    for i in 0..n {
        d.psi.comp[ctx.pt(&[i], 0)] = cm.cell(cm.g.identity, l.psi[i]);
        for j in 0..n {
            d.g.comp0[ctx.pt(&[i, j], 0)] = l.g[i * n + j];
            for k in 0..n {
                let src = cm.g.m(l.g[j * n + k], l.g[i * n + j]);
                d.f.comp[ctx.pt(&[i, j, k], 0)] = cm.cell(src, l.f[(i * n + j) * n + k]);
            }
        }
    }
    d
}

fn passes(ctx: &DescentContext, d: &DescentObject) -> bool {
    matches!(check_descent_object(d, ctx), Ok(r) if r.is_empty())
}

fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = x % base;
            x /= base;
            d
        })
        .collect()
}

#[test]
fn cocycle_pass_set_matches_brute_force_exhaustively() {
    let cm = CrossedModule::identity_trivial(FiniteGroup::cyclic(2)).unwrap();
    let t = two_group_from_crossed_module(&cm).unwrap();
    let i = TwoFunctorData::identity(&t);
    let (cx, cover) = two_patch_point();
    let tower = build_fiber_spaces(&cx, &cover).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let n = 2;
    let (mut agree, mut pass) = (0, 0);
    for code in 0..(1usize << (4 + 2 + 8)) {
        let bits = digits(code, 2, 14);
        let l = Labels { g: bits[..4].to_vec(), psi: bits[4..6].to_vec(), f: bits[6..].to_vec() };
        let oracle = cocycle_ok(&cm, n, &l);
        let d = object_from_labels(&ctx, &cm, n, &l);
        assert_eq!(passes(&ctx, &d), oracle, "g={:?} ψ={:?} f={:?}", l.g, l.psi, l.f);
        agree += 1;
        pass += usize::from(oracle);
    }
    assert_eq!(agree, 1 << 14);
    assert!(pass > 0);
}

#[test]
fn nonabelian_cocycle_pass_set_matches_brute_force() {
    // Klein four acting on itself by a swap, with a nontrivial boundary map.
    let k4 = FiniteGroup::klein();
    let cm = enumerate_crossed_modules(&k4, &k4)
        .into_iter()
        .find(|c| (0..4).any(|h| c.t[h] != c.g.identity) && (0..4).any(|h| (0..4).any(|g| c.a(g, h) != h)))
        .expect("a crossed module with nontrivial t and action");
    let t = two_group_from_crossed_module(&cm).unwrap();
    let i = TwoFunctorData::identity(&t);
    let (cx, cover) = two_patch_point();
    let tower = build_fiber_spaces(&cx, &cover).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let n = 2;
    let preimages = |g: usize| (0..4).filter(|&h| cm.t[h] == g).collect::<Vec<_>>();
    let mut checked = 0;
    let mut pass = 0;
    let ng = cm.g.order();
    for gcode in 0..ng.pow(4) {
        let g = digits(gcode, ng, 4);
        let psi_opts: Vec<Vec<usize>> = (0..n).map(|a| preimages(g[a * n + a])).collect();
        let f_opts: Vec<Vec<usize>> = (0..8)
            .map(|c| {
                let (i, j, k) = (c / 4, (c / 2) % 2, c % 2);
                let need = cm.g.m(g[i * n + k], cm.g.inv(cm.g.m(g[j * n + k], g[i * n + j])));
                preimages(need)
            })
            .collect();
        let total_psi: usize = psi_opts.iter().map(Vec::len).product();
        let total_f: usize = f_opts.iter().map(Vec::len).product();
        for pc in 0..total_psi {
            let mut rem = pc;
            let psi: Vec<usize> = psi_opts.iter().map(|o| { let v = o[rem % o.len()]; rem /= o.len(); v }).collect();
            for fc in 0..total_f {
                let mut rem = fc;
                let f: Vec<usize> = f_opts.iter().map(|o| { let v = o[rem % o.len()]; rem /= o.len(); v }).collect();
                let l = Labels { g: g.clone(), psi: psi.clone(), f };
                let oracle = cocycle_ok(&cm, n, &l);
                assert_eq!(passes(&ctx, &object_from_labels(&ctx, &cm, n, &l)), oracle);
                checked += 1;
                pass += usize::from(oracle);
            }
        }
    }
    assert!(checked > 1000 && pass > 0, "{checked} {pass}");
}

#[test]
fn corrupted_f_is_reported_at_each_incident_quadruple() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let (cx, cover) = two_patch_point();
    let tower = build_fiber_spaces(&cx, &cover).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let d = generic_object(&ctx, &cm, 3);
    assert!(check_descent_object(&d, &ctx).unwrap().is_empty());
    let n = 2;
    let g = |i: usize, j: usize| d.g.comp0[ctx.pt(&[i, j], 0)];
    let mut fl: Vec<usize> = (0..8).map(|c| d.f.comp[ctx.pt(&[c / 4, (c / 2) % 2, c % 2], 0)] % cm.h.order()).collect();
    let target = ctx.pt(&[0, 1, 1], 0);
    let mut bad = d.clone();
    bad.f.comp[target] = cm.cell(cm.g.m(g(1, 1), g(0, 1)), cm.h.m(central(&cm), fl[3]));
    fl[3] = cm.h.m(central(&cm), fl[3]);
    let r = check_descent_object(&bad, &ctx).unwrap();
    let got: BTreeSet<String> = r.of_kind("(3)").map(|v| v.at.clone()).collect();
    let mut expected = BTreeSet::new();
    let h = &cm.h;
    for q in 0..16 {
        let [a, b, c, e] = [q / 8, (q / 4) % 2, (q / 2) % 2, q % 2];
        let fi = |i: usize, j: usize, k: usize| fl[(i * n + j) * n + k];
        let lhs = h.m(fi(a, c, e), cm.a(g(c, e), fi(a, b, c)));
        let rhs = h.m(fi(a, b, e), fi(b, c, e));
        if lhs != rhs {
            expected.insert(format!("Ψ={}", ctx.label(4, ctx.pt(&[a, b, c, e], 0))));
        }
    }
    assert!(!expected.is_empty());
    assert_eq!(got, expected);
}

#[test]
fn composition_is_unital_and_associative() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::c6();
    let tower = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let n = ctx.y(1).vertices.len();
    for seed in 0..10 {
        let d0 = generic_object(&ctx, &cm, seed);
        let (d1, m1) = gauge(&d0, &random_gauge(n, &cm, seed + 1), &ctx).unwrap();
        let (d2, m2) = gauge(&d1, &random_gauge(n, &cm, seed + 2), &ctx).unwrap();
        let (d3, m3) = gauge(&d2, &random_gauge(n, &cm, seed + 3), &ctx).unwrap();
        let m12 = compose_descent(&m1, &m2, &d2, &ctx).unwrap();
        assert!(check_descent_1mor(&m12, &d0, &d2, &ctx).unwrap().is_empty());
        let left = compose_descent(&m12, &m3, &d3, &ctx).unwrap();
        let right = compose_descent(&m1, &compose_descent(&m2, &m3, &d3, &ctx).unwrap(), &d3, &ctx).unwrap();
        assert_eq!(left, right);
        let id0 = DescentOneMor::identity(&d0, &ctx).unwrap();
        let id1 = DescentOneMor::identity(&d1, &ctx).unwrap();
        assert_eq!(compose_descent(&id0, &m1, &d1, &ctx).unwrap(), m1);
        assert_eq!(compose_descent(&m1, &id1, &d1, &ctx).unwrap(), m1);
        assert_eq!(forget_v_1mor(&m12), &PathTransformation::compose(&m2.h, &m1.h, &ctx.post(&d2.triv).unwrap(), ctx.y(1), &t).unwrap());
    }
}

#[test]
fn two_morphism_mutation_is_reported_where_it_breaks_six() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::c6();
    let tower = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let d = generic_object(&ctx, &cm, 9);
    let (d2, m) = gauge(&d, &random_gauge(ctx.y(1).vertices.len(), &cm, 10), &ctx).unwrap();
    let id = DescentTwoMor::identity(&m, &ctx);
    assert!(check_descent_2mor(&id, &m, &m, &d, &d2, &ctx).unwrap().is_empty());
    let c = central(&cm);
    let mut everywhere = id.clone();
    for (a, cell) in everywhere.e.comp.iter_mut().enumerate() {
        *cell = cm.cell(m.h.comp0[a], c);
    }
    assert!(check_descent_2mor(&everywhere, &m, &m, &d, &d2, &ctx).unwrap().is_empty());
    let bad_pt = ctx.pt(&[1], 0);
    let mut once = id.clone();
    once.e.comp[bad_pt] = cm.cell(m.h.comp0[bad_pt], c);
    let r = check_descent_2mor(&once, &m, &m, &d, &d2, &ctx).unwrap();
    let got: BTreeSet<String> = r.of_kind("(6)").map(|v| v.at.clone()).collect();
    let expected: BTreeSet<String> = (0..ctx.y(2).vertices.len())
        .filter(|&al| {
            let (tu, x) = ctx.split(2, al);
            (ctx.pt(&[tu[0]], x) == bad_pt) != (ctx.pt(&[tu[1]], x) == bad_pt)
        })
        .map(|al| format!("α={}", ctx.label(2, al)))
        .collect();
    assert!(!expected.is_empty());
    assert_eq!(got, expected);
}

fn three_levels() -> (Computad, FiberTower, FiberTower, FiberTower, Refinement, Refinement) {
    let cx = Computad::c6();
    let coarse = build_fiber_spaces(&cx, &CoverSpec::single(&cx)).unwrap();
    let mid = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
    let (fine, leg, _) = common_refinement(&cx, &mid.cover, &mid.cover).unwrap();
    let to_coarse = Refinement::new(&mid.cover, &coarse.cover, vec![0; mid.cover.patches.len()]).unwrap();
    Refinement::new(&fine.cover, &mid.cover, leg.patch_map.clone()).unwrap();
    (cx, fine, mid, coarse, leg, to_coarse)
}

#[test]
fn restriction_is_functorial_and_keeps_passing() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let (_, fine, mid, coarse, xi, xi2) = three_levels();
    let cc = DescentContext::new(&coarse, &t, &t, &i).unwrap();
    let cm_ctx = DescentContext::new(&mid, &t, &t, &i).unwrap();
    let cf = DescentContext::new(&fine, &t, &t, &i).unwrap();
    for seed in 0..20 {
        let d = generic_object(&cc, &cm, seed);
        assert!(check_descent_object(&d, &cc).unwrap().is_empty());
        let via = restrict(&xi, &fine, &mid, &restrict(&xi2, &mid, &coarse, &d));
        let direct = restrict(&xi.then(&xi2), &fine, &coarse, &d);
        assert_eq!(via, direct);
        let dm = generic_object(&cm_ctx, &cm, seed);
        let r = restrict(&xi, &fine, &mid, &dm);
        assert!(check_descent_object(&r, &cf).unwrap().is_empty(), "seed {seed}");
        assert_eq!(forget_v(&r), &forget_v(&dm).pullback(cf.y(1), &xi.induced(&fine, &mid, 1)));
        assert_eq!(restrict(&Refinement::identity(&mid.cover), &mid, &mid, &dm), dm);
    }
}

#[test]
fn limit_composition_over_a_common_refinement_passes() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let s = Structure { gr: &t, t: &t, i: &i };
    let cx = Computad::c6();
    let mid = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
    let ctx = DescentContext::new(&mid, &t, &t, &i).unwrap();
    let n = ctx.y(1).vertices.len();
    let (z, l1, l2) = common_refinement(&cx, &mid.cover, &mid.cover).unwrap();
    for seed in 0..10 {
        let d0 = generic_object(&ctx, &cm, seed);
        let (d1, m1) = gauge(&d0, &random_gauge(n, &cm, seed + 7), &ctx).unwrap();
        let (d2, m2) = gauge(&d1, &random_gauge(n, &cm, seed + 8), &ctx).unwrap();
        let o1 = LimitObject { tower: mid.clone(), d: d1.clone() };
        let o2 = LimitObject { tower: mid.clone(), d: d2.clone() };
        let same = limit_compose(&LimitOneMor::over_same(&mid, m1.clone()), &LimitOneMor::over_same(&mid, m2.clone()), &o1, &o2, s).unwrap();
        let direct = compose_descent(&m1, &m2, &d2, &ctx).unwrap();
        let cz = DescentContext::new(&same.tower, &t, &t, &i).unwrap();
        let d0z = restrict(&same.leg1, &same.tower, &mid, &d0);
        let d2z = restrict(&same.leg2, &same.tower, &mid, &d2);
        assert!(check_descent_1mor(&same.m, &d0z, &d2z, &cz).unwrap().is_empty());
        assert_eq!(restrict_1mor(&Refinement::identity(&mid.cover), &mid, &mid, &direct), direct);
        // Legs through the pairwise refinement.
        let a = LimitOneMor { tower: z.clone(), leg1: l1.clone(), leg2: l1.clone(), m: restrict_1mor(&l1, &z, &mid, &m1) };
        let b = LimitOneMor { tower: z.clone(), leg1: l2.clone(), leg2: l2.clone(), m: restrict_1mor(&l2, &z, &mid, &m2) };
        let ab = limit_compose(&a, &b, &o1, &o2, s).unwrap();
        let cab = DescentContext::new(&ab.tower, &t, &t, &i).unwrap();
        let src = restrict(&ab.leg1, &ab.tower, &mid, &d0);
        let tgt = restrict(&ab.leg2, &ab.tower, &mid, &d2);
        assert!(check_descent_1mor(&ab.m, &src, &tgt, &cab).unwrap().is_empty(), "seed {seed}");
    }
}

#[test]
fn limit_representatives_related_by_refinement_are_equal() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::c6();
    let mid = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
    let ctx = DescentContext::new(&mid, &t, &t, &i).unwrap();
    let d = generic_object(&ctx, &cm, 1);
    let (_, m) = gauge(&d, &random_gauge(ctx.y(1).vertices.len(), &cm, 2), &ctx).unwrap();
    let c = central(&cm);
    let e = DescentTwoMor { e: PathModification { comp: m.h.comp0.iter().map(|&k| cm.cell(k, c)).collect() } };
    let id = Refinement::identity(&mid.cover);
    let t1 = LimitTwoMor { tower: mid.clone(), leg1: id.clone(), leg2: id.clone(), e: e.clone() };
    let (w, leg, _) = common_refinement(&cx, &mid.cover, &mid.cover).unwrap();
    let t2 = LimitTwoMor { tower: w.clone(), leg1: leg.clone(), leg2: leg.clone(), e: restrict_2mor(&leg, &w, &mid, &e) };
    assert!(limit_eq(&t1, &t2).unwrap());
    let t3 = LimitTwoMor { e: DescentTwoMor::identity(&m, &ctx), ..t1.clone() };
    assert!(!limit_eq(&t1, &t3).unwrap());
}

fn evaluate_all(ids: &[Identification], cd: &Codescent, r: &DescentPairing) -> Vec<String> {
    ids.iter()
        .filter(|id| cd.eval2(r, &id.lhs).unwrap() != cd.eval2(r, &id.rhs).unwrap())
        .map(|id| format!("{} {}", id.kind, id.at))
        .collect()
}

#[test]
fn identifications_hold_under_the_pairing() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (cx, cover) in [
        (Computad::c6(), CoverSpec::c6_arcs(&Computad::c6())),
        (Computad::grid(3, 3, true), CoverSpec::torus_blocks(&Computad::grid(3, 3, true))),
    ] {
        let tower = build_fiber_spaces(&cx, &cover).unwrap();
        let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let cd = Codescent::new(&tower);
        let mut ids = cd.identities_v1();
        ids.extend(cd.identities_v2());
        ids.extend(cd.identities_iii().unwrap());
        ids.extend(cd.identities_iv());
        for seed in 0..3 {
            let d = generic_object(&ctx, &cm, seed);
            let r = DescentPairing::new(&ctx, &d).unwrap();
            let bad = evaluate_all(&ids, &cd, &r);
            assert!(bad.is_empty(), "{}: {:?}", cx.name, &bad[..bad.len().min(5)]);
        }
    }
}

#[test]
fn jump_normalization_matches_brute_force_pasting() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let cx = Computad::point();
    let p = Patch::closure(&cx, &[0], &[], &[]);
    let cover = CoverSpec::new(&cx, "three", vec![p.clone(), p.clone(), p]).unwrap();
    let tower = build_fiber_spaces(&cx, &cover).unwrap();
    let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let cd = Codescent::new(&tower);
    let d = generic_object(&ctx, &cm, 4);
    assert!(check_descent_object(&d, &ctx).unwrap().is_empty());
    let r = DescentPairing::new(&ctx, &d).unwrap();
    // Fold a jump word left to right with f, using ψ for the empty word.
    let brute = |w: &[usize]| -> usize {
        if w.len() == 1 {
            return t.id2(t.id1(0));
        }
        let g = |a: usize, b: usize| d.g_at(&ctx, a, b, 0);
        let mut acc = t.id2(g(w[0], w[1]));
        for k in 2..w.len() {
            let step = t.wl(g(w[k - 1], w[k]), acc).unwrap();
            let f = d.f_at(&ctx, w[0], w[k - 1], w[k], 0);
            acc = t.v(f, step).unwrap();
        }
        acc
    };
    let word = |w: &[usize]| {
        let mut l = twofun_core::codescent::CTerm1::id(cd.pt(w[0], 0));
        for pair in w.windows(2) {
            l.atoms.push(twofun_core::codescent::Atom::Jump(cd.jump(pair[0], pair[1], 0)));
        }
        l
    };
    let mut checked = 0;
    for len in 2..=4 {
        for code in 0..3usize.pow(len as u32) {
            let w = digits(code, 3, len);
            let src = word(&w);
            let direct = word(&[w[0], w[len - 1]]);
            let c = cd.normalize_jump_hom(&src, &direct).unwrap();
            assert_eq!(cd.eval2(&r, &c).unwrap(), brute(&w), "{w:?}");
            let hub = cd.normalize_jump_hom_via_hub(&src, &direct).unwrap();
            assert_eq!(cd.eval2(&r, &hub).unwrap(), brute(&w), "hub {w:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 9 + 27 + 81);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn gauging_back_is_the_inverse(seed in any::<u64>()) {
        let (cm, t) = nonabelian();
        let i = TwoFunctorData::identity(&t);
        let cx = Computad::c6();
        let tower = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
        let ctx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let d = generic_object(&ctx, &cm, seed);
        let k = random_gauge(ctx.y(1).vertices.len(), &cm, seed.wrapping_add(1));
        let (d2, m) = gauge(&d, &k, &ctx).unwrap();
        let kinv: Vec<usize> = k.iter().map(|&x| cm.g.inv(x)).collect();
        let (d3, m2) = gauge(&d2, &kinv, &ctx).unwrap();
        prop_assert_eq!(&d3, &d);
        let round = compose_descent(&m, &m2, &d3, &ctx).unwrap();
        prop_assert_eq!(round, DescentOneMor::identity(&d, &ctx).unwrap());
    }
}
