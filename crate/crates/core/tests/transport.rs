use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twofun_core::base::*;
use twofun_core::codescent::{Codescent, Section, SectionChoice};
use twofun_core::descent::*;
use twofun_core::instances::CrossedModule;
use twofun_core::transport::*;
use twofun_core::twocat::{Cell, TwoCategoryTable, TwoFunctorData};

mod common;
use common::*;

fn bases() -> Vec<(Computad, CoverSpec)> {
    let c6 = Computad::c6();
    let torus = Computad::grid(3, 3, true);
    let oct = Computad::octahedron();
    vec![
        (c6.clone(), CoverSpec::c6_arcs(&c6)),
        (torus.clone(), CoverSpec::torus_blocks(&torus)),
        (oct.clone(), CoverSpec::octahedron_wedges(&oct)),
    ]
}

fn assert_invertible(t: &TwoCategoryTable, cells: &[usize]) {
    assert!(cells.iter().all(|&a| t.inv2(a).is_some()));
}

/// `F′ = k∘F∘k⁻¹` on a one-object 2-group with `A: F → F′` having identity squares.
fn conjugate(f: &PathFunctor, m: &Computad, t: &TwoCategoryTable, k: &[usize]) -> (PathFunctor, PathTransformation) {
    let kinv: Vec<usize> = k.iter().map(|&g| inverse1(t, g).unwrap()).collect();
    let mut f2 = f.clone();
    for l in 0..m.n_letters() {
        let (x, y) = (m.letter_src(l), m.letter_tgt(l));
        f2.one[l] = t.path1(0, &[kinv[x], f.one[l], k[y]]).unwrap();
    }
    for (fi, fc) in m.faces.iter().enumerate() {
        let (x, y) = (fc.src.start, fc.src.end(m));
        f2.face[fi] = t.wl(k[y], t.wr(f.face[fi], kinv[x]).unwrap()).unwrap();
    }
    let comp1 = (0..m.n_letters()).map(|l| t.id2(t.c1(k[m.letter_tgt(l)], f.one[l]).unwrap())).collect();
    (f2, PathTransformation { comp0: k.to_vec(), comp1 })
}

fn central_cell(cm: &CrossedModule) -> usize {
    cm.cell(cm.g.identity, central(cm))
}

#[test]
fn identity_bundle_extracts_to_pullback() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (m, cover) in bases() {
        let tower = build_fiber_spaces(&m, &cover).unwrap();
        let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let f = random_strict_functor(&m, &cm, &t, 3);
        let tf = TrivializedFunctor::identity_bundle(&cx, f.clone()).unwrap();
        let d = extract(&tf, &cx).unwrap();
        assert_eq!(d, DescentObject::pulled_back(&cx, &f).unwrap());
    }
}

#[test]
fn random_trivializations_validate_and_extract() {
    let (_, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (m, cover) in bases() {
        let tower = build_fiber_spaces(&m, &cover).unwrap();
        let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        for seed in 0..5 {
            let tf = random_trivialized(&cx, seed).unwrap();
            let r = tf.check(&cx).unwrap();
            assert!(r.is_empty(), "{}: {r}", m.name);
            let d = extract(&tf, &cx).unwrap();
            let r = check_descent_object(&d, &cx).unwrap();
            assert!(r.is_empty(), "{}: {r}", m.name);
            let y = cx.y(1);
            for a in 0..y.vertices.len() {
                let gaa = d.g.comp0[cx.diag.vert[a]];
                assert_eq!(gaa, t.c1(tf.t.forward.comp0[a], tf.t.inverse.comp0[a]).unwrap());
            }
        }
    }
}

#[test]
fn extracted_morphisms_pass() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let (m, cover) = bases().remove(1);
    let tower = build_fiber_spaces(&m, &cover).unwrap();
    let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let z = central_cell(&cm);
    for seed in 0..4 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f1 = random_functor(&m, &t, &mut rng).unwrap();
        let (f2, a) = conjugate(&f1, &m, &t, &random_gauge(m.vertices.len(), &cm, seed + 7));
        let (f3, a2) = conjugate(&f2, &m, &t, &random_gauge(m.vertices.len(), &cm, seed + 8));
        assert!(check_path_transformation(&a, &f1, &f2, &m, &t, 2).unwrap().is_empty());
        let tf1 = random_trivialization(&cx, f1.clone(), &mut rng).unwrap();
        let tf2 = random_trivialization(&cx, f2.clone(), &mut rng).unwrap();
        let tf3 = random_trivialization(&cx, f3.clone(), &mut rng).unwrap();
        let (d1, d2, d3) = (extract(&tf1, &cx).unwrap(), extract(&tf2, &cx).unwrap(), extract(&tf3, &cx).unwrap());
        let m12 = extract_1mor(&a, &tf1, &tf2, &cx).unwrap();
        let r = check_descent_1mor(&m12, &d1, &d2, &cx).unwrap();
        assert!(r.is_empty(), "{r}");
        let m23 = extract_1mor(&a2, &tf2, &tf3, &cx).unwrap();
        assert!(check_descent_1mor(&m23, &d2, &d3, &cx).unwrap().is_empty());

        // A central modification A ⇒ A extracts to a descent 2-morphism.
        let b = PathModification { comp: a.comp0.iter().map(|&k| t.wl(k, z).unwrap()).collect() };
        assert!(check_path_modification(&b, &a, &a, &f1, &f2, &m, &t).unwrap().is_empty());
        let e = extract_2mor(&b, &tf1, &tf2, &cx).unwrap();
        let r = check_descent_2mor(&e, &m12, &m12, &d1, &d2, &cx).unwrap();
        assert!(r.is_empty(), "{r}");
        let id = PathModification::identity(&a, &t);
        assert_eq!(extract_2mor(&id, &tf1, &tf2, &cx).unwrap(), DescentTwoMor::identity(&m12, &cx));

        let a13 = PathTransformation::compose(&a2, &a, &f3, &m, &t).unwrap();
        let m13 = extract_1mor(&a13, &tf1, &tf3, &cx).unwrap();
        let comp = compose_descent(&m12, &m23, &d3, &cx).unwrap();
        let c = extraction_compositor(&a, &a2, &tf1, &tf2, &tf3, &cx).unwrap();
        let r = check_descent_2mor(&c, &comp, &m13, &d1, &d3, &cx).unwrap();
        assert!(r.is_empty(), "{r}");

        let ida = PathTransformation::identity(&f1, &t);
        let exid = extract_1mor(&ida, &tf1, &tf1, &cx).unwrap();
        let u = extraction_unitor(&tf1, &cx).unwrap();
        assert_eq!(u.e, tf1.t.j.inverse(&t).unwrap());
        let r = check_descent_2mor(&u, &exid, &DescentOneMor::identity(&d1, &cx).unwrap(), &d1, &d1, &cx).unwrap();
        assert!(r.is_empty(), "{r}");
    }
}

#[test]
fn identity_transformation_with_same_bundle_extracts_to_t_tbar() {
    let (_, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let (m, cover) = bases().remove(0);
    let tower = build_fiber_spaces(&m, &cover).unwrap();
    let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let tf = random_trivialized(&cx, 11).unwrap();
    let ex = extract_1mor(&PathTransformation::identity(&tf.f, &t), &tf, &tf, &cx).unwrap();
    for a in 0..cx.y(1).vertices.len() {
        assert_eq!(ex.h.comp0[a], t.c1(tf.t.forward.comp0[a], tf.t.inverse.comp0[a]).unwrap());
    }
}

fn choices(cd: &Codescent) -> Vec<SectionChoice> {
    vec![SectionChoice::smallest(cd), SectionChoice::largest(cd), SectionChoice::random(cd, 5)]
}

#[test]
fn reconstruction_is_trivialized_and_rho_passes() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (m, cover) in bases() {
        let tower = build_fiber_spaces(&m, &cover).unwrap();
        let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let cd = Codescent::new(&tower);
        for seed in 0..2 {
            let d = generic_object(&cx, &cm, seed);
            for ch in choices(&cd) {
                let s = Section::new(&cd, ch).unwrap();
                let tf = reconstruct(&d, &cx, &s).unwrap();
                let r = tf.check(&cx).unwrap();
                assert!(r.is_empty(), "{}: {r}", m.name);
                let ex = extract(&tf, &cx).unwrap();
                let rh = rho(&d, &cx, &s).unwrap();
                let r = check_descent_1mor(&rh, &ex, &d, &cx).unwrap();
                assert!(r.is_empty(), "{}: {r}", m.name);
                assert_eq!(forget_v_1mor(&rh), &PathTransformation::identity(&cx.post(&d.triv).unwrap(), &t));
                assert_invertible(&t, &rh.eps.comp);
            }
        }
    }
}

#[test]
fn eta_is_an_equivalence() {
    let (_, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (m, cover) in bases() {
        let tower = build_fiber_spaces(&m, &cover).unwrap();
        let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let cd = Codescent::new(&tower);
        for seed in 0..3 {
            let tf = random_trivialized(&cx, 40 + seed).unwrap();
            let d = extract(&tf, &cx).unwrap();
            let s = Section::new(&cd, SectionChoice::random(&cd, seed)).unwrap();
            let rec = reconstruct(&d, &cx, &s).unwrap();
            let e = eta(&tf, &d, &cx, &s).unwrap();
            let r = check_path_transformation(&e, &tf.f, &rec.f, &m, &t, 2).unwrap();
            assert!(r.is_empty(), "{}: {r}", m.name);
            assert!(e.comp0.iter().all(|&g| inverse1(&t, g).is_some()));
        }
    }
}

#[test]
fn eta_of_identity_bundle_on_one_patch_is_identity() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let m = Computad::c6();
    let tower = build_fiber_spaces(&m, &CoverSpec::single(&m)).unwrap();
    let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let cd = Codescent::new(&tower);
    let f = random_strict_functor(&m, &cm, &t, 2);
    let tf = TrivializedFunctor::identity_bundle(&cx, f.clone()).unwrap();
    let d = extract(&tf, &cx).unwrap();
    let s = Section::new(&cd, SectionChoice::smallest(&cd)).unwrap();
    assert_eq!(eta(&tf, &d, &cx, &s).unwrap(), PathTransformation::identity(&f, &t));
    assert_eq!(reconstruct(&d, &cx, &s).unwrap().f, f);
}

#[test]
fn normalized_objects_reconstruct_to_normalized_functors() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (m, cover) in bases() {
        let tower = build_fiber_spaces(&m, &cover).unwrap();
        let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let cd = Codescent::new(&tower);
        let d = DescentObject::pulled_back(&cx, &random_strict_functor(&m, &cm, &t, 9)).unwrap();
        assert!(is_normalized(&d, &cx));
        for ch in choices(&cd) {
            let s = Section::new(&cd, ch).unwrap();
            let tf = reconstruct(&d, &cx, &s).unwrap();
            assert!(tf.f.is_normalized(&m, &t), "{}", m.name);
        }
    }
}

#[test]
fn choice_comparison_is_pseudonatural() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    for (m, cover) in bases() {
        let tower = build_fiber_spaces(&m, &cover).unwrap();
        let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
        let cd = Codescent::new(&tower);
        let d = generic_object(&cx, &cm, 4);
        let s1 = Section::new(&cd, SectionChoice::smallest(&cd)).unwrap();
        let s2 = Section::new(&cd, SectionChoice::largest(&cd)).unwrap();
        let (r1, r2) = (reconstruct(&d, &cx, &s1).unwrap(), reconstruct(&d, &cx, &s2).unwrap());
        let k = choice_comparison(&d, &cx, &s1, &s2).unwrap();
        let r = check_path_transformation(&k, &r1.f, &r2.f, &m, &t, 2).unwrap();
        assert!(r.is_empty(), "{}: {r}", m.name);
        assert!(k.comp0.iter().all(|&g| inverse1(&t, g).is_some()));
        assert_eq!(choice_comparison(&d, &cx, &s1, &s1).unwrap(), PathTransformation::identity(&r1.f, &t));
    }
}

#[test]
fn reconstructed_morphisms_are_strictly_functorial() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let (m, cover) = bases().remove(1);
    let tower = build_fiber_spaces(&m, &cover).unwrap();
    let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let cd = Codescent::new(&tower);
    let s = Section::new(&cd, SectionChoice::random(&cd, 1)).unwrap();
    let d1 = generic_object(&cx, &cm, 1);
    let n = cx.y(1).vertices.len();
    let (d2, m12) = gauge(&d1, &random_gauge(n, &cm, 2), &cx).unwrap();
    let (d3, m23) = gauge(&d2, &random_gauge(n, &cm, 3), &cx).unwrap();
    let (f1, f2, f3) = (
        reconstruct(&d1, &cx, &s).unwrap().f,
        reconstruct(&d2, &cx, &s).unwrap().f,
        reconstruct(&d3, &cx, &s).unwrap().f,
    );
    let r12 = reconstruct_1mor(&m12, &d1, &d2, &cx, &s).unwrap();
    let r23 = reconstruct_1mor(&m23, &d2, &d3, &cx, &s).unwrap();
    assert!(check_path_transformation(&r12, &f1, &f2, &m, &t, 2).unwrap().is_empty());
    let m13 = compose_descent(&m12, &m23, &d3, &cx).unwrap();
    let r13 = reconstruct_1mor(&m13, &d1, &d3, &cx, &s).unwrap();
    assert_eq!(r13, PathTransformation::compose(&r23, &r12, &f3, &m, &t).unwrap());
    let id = DescentOneMor::identity(&d1, &cx).unwrap();
    assert_eq!(reconstruct_1mor(&id, &d1, &d1, &cx, &s).unwrap(), PathTransformation::identity(&f1, &t));
    let e = DescentTwoMor::identity(&m12, &cx);
    assert_eq!(reconstruct_2mor(&e, &cx, &s), PathModification::identity(&r12, &t));
}

#[test]
fn holonomy_of_paths_and_faces() {
    let (cm, t) = nonabelian();
    let m = Computad::grid(3, 3, true);
    let f = random_strict_functor(&m, &cm, &t, 5);
    let e = &m.edges[0];
    let id = TransportQuery::Path(PathTerm::empty(e.src));
    assert_eq!(holonomy(&f, &m, &t, &id).unwrap(), Cell::One(t.id1(0)));
    let back = TransportQuery::Path(PathTerm { start: e.src, letters: vec![0, 1] });
    assert_eq!(holonomy(&f, &m, &t, &back).unwrap(), Cell::One(t.id1(0)));
    for fi in 0..m.faces.len() {
        let q = TransportQuery::Bigon(BigonTerm::face(&m, fi));
        assert_eq!(holonomy(&f, &m, &t, &q).unwrap(), Cell::Two(f.face[fi]));
    }
    let bad = TransportQuery::Path(PathTerm { start: e.tgt, letters: vec![0] });
    assert!(holonomy(&f, &m, &t, &bad).is_err());
}

#[test]
fn mutations_are_detected() {
    let (cm, t) = nonabelian();
    let i = TwoFunctorData::identity(&t);
    let (m, cover) = bases().remove(1);
    let tower = build_fiber_spaces(&m, &cover).unwrap();
    let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let cd = Codescent::new(&tower);
    let z = central_cell(&cm);
    let mut nontrivial = 0;
    for seed in 0..8 {
        let tf = random_trivialized(&cx, seed).unwrap();
        let d = extract(&tf, &cx).unwrap();
        if !is_normalized(&d, &cx) {
            nontrivial += 1;
        }
        let mut bad = tf.clone();
        bad.t.i.comp[0] = t.v(z, bad.t.i.comp[0]).unwrap();
        assert!(!bad.check(&cx).unwrap().is_empty());
        let mut bad = tf.clone();
        bad.t.forward.comp1[0] = t.v(t.wl(bad.triv.one[0], t.wl(bad.t.forward.comp0[0], z).unwrap()).unwrap(), bad.t.forward.comp1[0]).unwrap();
        assert!(!bad.check(&cx).unwrap().is_empty());
        let s = Section::new(&cd, SectionChoice::smallest(&cd)).unwrap();
        let rec = reconstruct(&d, &cx, &s).unwrap();
        let mut e = eta(&tf, &d, &cx, &s).unwrap();
        e.comp1[2] = t.v(t.wl(rec.f.one[2], t.wl(e.comp0[m.letter_src(2)], z).unwrap()).unwrap(), e.comp1[2]).unwrap();
        assert!(!check_path_transformation(&e, &tf.f, &rec.f, &m, &t, 2).unwrap().is_empty());
        let ex = extract(&rec, &cx).unwrap();
        let mut rh = rho(&d, &cx, &s).unwrap();
        assert!(check_descent_1mor(&rh, &ex, &d, &cx).unwrap().is_empty());
        rh.eps.comp[0] = t.v(rh.eps.comp[0], t.wl(rh.h.comp0[0], t.wl(d.g.comp0[0], z).unwrap()).unwrap()).unwrap();
        assert!(!check_descent_1mor(&rh, &ex, &d, &cx).unwrap().is_empty());
    }
    assert!(nontrivial > 0);
}
