use std::collections::{BTreeMap, HashMap};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twofun_core::base::path::{inv_letter, letter, reduce};
use twofun_core::base::*;
use twofun_core::instances::{two_group_from_crossed_module, CrossedModule};

mod common;
use common::random_strict_functor;

#[test]
fn one_patch_cover_gives_copies_of_the_base() {
    let cx = Computad::grid(2, 2, false);
    let tower = build_fiber_spaces(&cx, &CoverSpec::single(&cx)).unwrap();
    for k in 1..=MAX_FIBER {
        let y = &tower.space(k).cx;
        assert_eq!(y.vertices.len(), cx.vertices.len());
        assert_eq!(y.edges.len(), cx.edges.len());
        assert_eq!(y.faces.len(), cx.faces.len());
        let pi = tower.to_base(k);
        assert_eq!(pi, CellMap::identity(&cx));
        for j in 0..k {
            assert_eq!(tower.index_map(k, &[j]).unwrap(), CellMap::identity(&tower.space(1).cx));
        }
    }
}

#[test]
fn c6_double_overlaps_match_a_direct_count() {
    let cx = Computad::c6();
    let cover = CoverSpec::c6_arcs(&cx);
    let tower = build_fiber_spaces(&cx, &cover).unwrap();
    let mut expected = 0;
    for v in 0..cx.vertices.len() {
        for i in 0..cover.patches.len() {
            for j in 0..cover.patches.len() {
                if cover.patches[i].has_vertex(v) && cover.patches[j].has_vertex(v) {
                    expected += 1;
                }
            }
        }
    }
    assert_eq!(tower.space(2).cx.vertices.len(), expected);
    assert_eq!(expected, 5 + 5 + 2 * 4);
    tower.space(2).cx.validate().unwrap();
}

#[test]
fn cover_missing_a_cell_names_it() {
    let cx = Computad::c6();
    let p = Patch::closure(&cx, &[], &[0, 1, 2], &[]);
    let err = CoverSpec::new(&cx, "short", vec![p]).unwrap_err();
    assert!(err.to_string().contains("v4") || err.to_string().contains("e3"), "{err}");
}

#[test]
fn degenerate_diagonal_identities() {
    let cx = Computad::octahedron();
    let tower = build_fiber_spaces(&cx, &CoverSpec::octahedron_wedges(&cx)).unwrap();
    let id2 = CellMap::identity(&tower.space(2).cx);
    let d121 = tower.index_map(2, &[0, 1, 0]).unwrap();
    assert_eq!(tower.index_map(3, &[0, 1]).unwrap().after(&d121), id2);
    let lhs = tower.index_map(3, &[0, 2]).unwrap().after(&d121);
    let rhs = tower.index_map(1, &[0, 0]).unwrap().after(&tower.index_map(2, &[0]).unwrap());
    assert_eq!(lhs, rhs);
    let delta = tower.index_map(1, &[0, 0]).unwrap();
    for j in 0..2 {
        assert_eq!(tower.index_map(2, &[j]).unwrap().after(&delta), CellMap::identity(&tower.space(1).cx));
    }
}

#[test]
fn induced_functors_compose_on_generators() {
    let cx = Computad::octahedron();
    let tower = build_fiber_spaces(&cx, &CoverSpec::octahedron_wedges(&cx)).unwrap();
    let f = tower.index_map(3, &[2, 0]).unwrap();
    let g = tower.index_map(2, &[1]).unwrap();
    let gf = g.after(&f);
    assert_eq!(gf, tower.index_map(3, &[0]).unwrap());
    let y3 = &tower.space(3).cx;
    for e in 0..y3.edges.len() {
        let p = PathTerm::edge(y3, e);
        assert_eq!(gf.path(&p), g.path(&f.path(&p)));
    }
    for s in 0..y3.faces.len() {
        let b = BigonTerm::face(y3, s);
        assert_eq!(gf.bigon(&b), g.bigon(&f.bigon(&b)));
    }
    let id = CellMap::identity(y3);
    for s in 0..y3.faces.len() {
        let b = BigonTerm::face(y3, s);
        assert_eq!(id.bigon(&b), b);
    }
}

#[test]
fn projection_after_patch_inclusion_is_inclusion() {
    let cx = Computad::grid(3, 3, true);
    let cover = CoverSpec::torus_blocks(&cx);
    let tower = build_fiber_spaces(&cx, &cover).unwrap();
    let pi = tower.to_base(1);
    for (i, patch) in cover.patches.iter().enumerate() {
        for e in (0..cx.edges.len()).filter(|&e| patch.has_edge(e)) {
            for inv in [false, true] {
                let p = PathTerm::new(&cx, if inv { cx.edges[e].tgt } else { cx.edges[e].src }, &[letter(e, inv)]).unwrap();
                let lifted = tower.lift_path(i, &p).unwrap();
                assert_eq!(pi.path(&lifted), p);
            }
        }
    }
    assert!(tower.lift_path(0, &PathTerm::edge(&cx, cx.find_edge("h22").unwrap())).is_none());
}

#[test]
fn free_reduction_and_exchange_examples() {
    let cx = Computad::grid(2, 2, false);
    let fr = free_path_2groupoid(&cx).unwrap();
    let p = PathTerm::new(&cx, 0, &[letter(cx.find_edge("h00").unwrap(), false)]).unwrap();
    assert_eq!(fr.compose1(&p, &fr.inverse1(&p)).unwrap(), fr.id1(0));
    let w = PathTerm::new(&cx, 0, &cx.parse_word("h00.u10.h11.u21").unwrap()).unwrap();
    let steps: Vec<BigonStep> = cx.literal_steps(&w.letters).into_iter().filter(|s| !s.inverse).collect();
    assert_eq!(steps.len(), 2);
    let a = BigonTerm::new(&cx, w.clone(), vec![steps[0].clone()]).unwrap();
    let b = BigonTerm::new(&cx, w.clone(), vec![steps[1].clone()]).unwrap();
    let ab = a.vcomp(&cx, &BigonTerm::new(&cx, a.target(&cx), cx.literal_steps(&a.target(&cx).letters).into_iter().filter(|s| s.face == steps[1].face).collect()).unwrap()).unwrap();
    let ba = b.vcomp(&cx, &BigonTerm::new(&cx, b.target(&cx), cx.literal_steps(&b.target(&cx).letters).into_iter().filter(|s| s.face == steps[0].face).collect()).unwrap()).unwrap();
    assert_ne!(ab, ba);
    assert!(ab.equivalent(&cx, &ba));
    assert_eq!(ab.normal_form(&cx), ba.normal_form(&cx));
}

/// Every bigon `S ⇒ T` with at most four literal steps, with equivalence computed by
/// closing under adjacent swaps and cancellations inside the bounded set.
fn brute_force_classes(cx: &Computad, src: &PathTerm, tgt: &PathTerm, max_steps: usize) -> usize {
    let mut seqs: Vec<BigonTerm> = Vec::new();
    let mut frontier = vec![BigonTerm::identity(src.clone())];
    for depth in 0..=max_steps {
        let mut next = Vec::new();
        for b in &frontier {
            seqs.push(b.clone());
            if depth < max_steps {
                for s in cx.literal_steps(&b.target(cx).letters) {
                    let mut steps = b.steps.clone();
                    steps.push(s);
                    next.push(BigonTerm { source: b.source.clone(), steps });
                }
            }
        }
        frontier = next;
    }
    let index: HashMap<BigonTerm, usize> = seqs.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let mut parent: Vec<usize> = (0..seqs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, b) in seqs.iter().enumerate() {
        for k in 0..b.steps.len().saturating_sub(1) {
            let mut related = Vec::new();
            if b.steps[k + 1] == b.steps[k].reversed() {
                let mut st = b.steps.clone();
                st.drain(k..k + 2);
                related.push(st);
            }
            if let Some((x, y)) = path::swap_if_right_of(cx, &b.steps[k], &b.steps[k + 1]) {
                let mut st = b.steps.clone();
                st[k] = x;
                st[k + 1] = y;
                related.push(st);
            }
            for st in related {
                if let Some(&j) = index.get(&BigonTerm { source: b.source.clone(), steps: st }) {
                    let (a, c) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = c;
                }
            }
        }
    }
    let mut classes = BTreeMap::new();
    for (i, b) in seqs.iter().enumerate() {
        if b.target(cx) == *tgt {
            let r = find(&mut parent, i);
            classes.insert(r, ());
        }
    }
    classes.len()
}

#[test]
fn grid_bigon_count_matches_brute_force_closure() {
    let cx = Computad::grid(2, 2, false);
    let fr = free_path_2groupoid(&cx).unwrap();
    let src = PathTerm::new(&cx, 0, &cx.parse_word("h00.h10.u20.u21").unwrap()).unwrap();
    let tgt = PathTerm::new(&cx, 0, &cx.parse_word("u00.u01.h02.h12").unwrap()).unwrap();
    let ours = fr.bigons_between(&src, &tgt, 4).unwrap();
    let oracle = brute_force_classes(&cx, &src, &tgt, 4);
    assert_eq!(ours.len(), oracle);
    assert!(oracle >= 1);
    let again = fr.bigons_between(&src, &tgt, 4).unwrap();
    assert_eq!(ours, again);
    let mid = PathTerm::new(&cx, 0, &cx.parse_word("u00.h01.h11.u21").unwrap()).unwrap();
    assert_eq!(fr.bigons_between(&src, &mid, 2).unwrap().len(), brute_force_classes(&cx, &src, &mid, 2));
}

fn random_bigon(cx: &Computad, start_word: &PathTerm, len: usize, rng: &mut ChaCha8Rng) -> BigonTerm {
    let mut b = BigonTerm::identity(start_word.clone());
    for _ in 0..len {
        let steps = cx.literal_steps(&b.target(cx).letters);
        if steps.is_empty() {
            break;
        }
        b.steps.push(steps[rng.gen_range(0..steps.len())].clone());
    }
    b
}

/// One maximal run of the sorting rewrite with random choice of redex.
fn random_sort_run(cx: &Computad, b: &BigonTerm, rng: &mut ChaCha8Rng) -> BigonTerm {
    let mut steps = b.steps.clone();
    loop {
        let mut redexes = Vec::new();
        for k in 0..steps.len().saturating_sub(1) {
            if steps[k + 1] == steps[k].reversed() {
                redexes.push((k, true));
            } else if path::swap_if_right_of(cx, &steps[k], &steps[k + 1]).is_some() {
                redexes.push((k, false));
            }
        }
        if redexes.is_empty() {
            return BigonTerm { source: b.source.clone(), steps };
        }
        let (k, cancel) = redexes[rng.gen_range(0..redexes.len())];
        if cancel {
            steps.drain(k..k + 2);
        } else {
            let (x, y) = path::swap_if_right_of(cx, &steps[k], &steps[k + 1]).unwrap();
            steps[k] = x;
            steps[k + 1] = y;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_confluent(seed in any::<u64>(), len in 0usize..6) {
        let cx = Computad::grid(3, 2, false);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = PathTerm::new(&cx, 0, &cx.parse_word("h00.h10.h20.u30.u31").unwrap()).unwrap();
        let b = random_bigon(&cx, &w, len, &mut rng);
        let r1 = random_sort_run(&cx, &b, &mut rng);
        let r2 = random_sort_run(&cx, &b, &mut rng);
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(r1, b.normal_form(&cx));
    }

    #[test]
    fn free_groupoid_interchange_and_inverses(seed in any::<u64>()) {
        let cx = Computad::grid(2, 2, false);
        let fr = free_path_2groupoid(&cx).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w1 = PathTerm::new(&cx, 0, &cx.parse_word("h00.u10").unwrap()).unwrap();
        let w2 = PathTerm::new(&cx, 4, &cx.parse_word("h11.u21").unwrap()).unwrap();
        let a = random_bigon(&cx, &w1, 1, &mut rng);
        let a2 = random_bigon(&cx, &a.target(&cx), 1, &mut rng);
        let b = random_bigon(&cx, &w2, 1, &mut rng);
        let b2 = random_bigon(&cx, &b.target(&cx), 1, &mut rng);
        let lhs = fr.hcomp(&fr.vcomp(&b2, &b).unwrap(), &fr.vcomp(&a2, &a).unwrap()).unwrap();
        let rhs = fr.vcomp(&fr.hcomp(&b2, &a2).unwrap(), &fr.hcomp(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let inv = fr.vcomp(&fr.inverse2(&a), &a).unwrap();
        prop_assert_eq!(inv, fr.id2(&w1));
    }

    #[test]
    fn index_maps_compose_like_position_maps(
        psi in proptest::collection::vec(0usize..3, 1..=3),
        phi_raw in proptest::collection::vec(0usize..3, 0..=3),
    ) {
        let cx = Computad::c6();
        let tower = build_fiber_spaces(&cx, &CoverSpec::c6_arcs(&cx)).unwrap();
        let k = psi.len();
        let phi: Vec<usize> = phi_raw.iter().map(|&i| i % k).collect();
        let m = 3;
        let first = tower.index_map(m, &psi).unwrap();
        let second = tower.index_map(k, &phi).unwrap();
        first.typecheck(&tower.space(m).cx, &tower.space(k).cx).unwrap();
        let composed: Vec<usize> = phi.iter().map(|&j| psi[j]).collect();
        prop_assert_eq!(second.after(&first), tower.index_map(m, &composed).unwrap());
    }
}

#[test]
fn strict_functor_passes_and_corruptions_are_reported() {
    let cm = CrossedModule::nonabelian_example();
    let t = two_group_from_crossed_module(&cm).unwrap();
    let cx = Computad::grid(2, 2, false);
    for seed in 0..4 {
        let f = random_strict_functor(&cx, &cm, &t, seed);
        let r = check_path_functor(&f, &cx, &t, 1).unwrap();
        assert!(r.is_empty(), "{r}");
        let id = PathTransformation::identity(&f, &t);
        assert!(check_path_transformation(&id, &f, &f, &cx, &t, 2).unwrap().is_empty());
        let m = PathModification::identity(&id, &t);
        assert!(check_path_modification(&m, &id, &id, &f, &f, &cx, &t).unwrap().is_empty());
    }
    let f = random_strict_functor(&cx, &cm, &t, 9);
    let mut bad = f.clone();
    let l = letter(0, false);
    let x = f.one[l];
    // (g, k) with k a nontrivial central element keeps the boundary id ⇒ id
    let k = (0..cm.h.order()).find(|&h| cm.t[h] == cm.g.identity && h != cm.h.identity).unwrap();
    bad.kappa[l] = cm.cell(cm.g.identity, k);
    let _ = x;
    let r = check_path_functor(&bad, &cx, &t, 1).unwrap();
    assert!(!r.is_empty());
    assert!(r.violations.iter().any(|v| v.kind == "(F3)" || v.kind == "(F2)"));
}

#[test]
fn functor_images_respect_reduction() {
    let cm = CrossedModule::nonabelian_example();
    let t = two_group_from_crossed_module(&cm).unwrap();
    let cx = Computad::grid(2, 2, false);
    let f = random_strict_functor(&cx, &cm, &t, 3);
    for w in cx.words_from(0, 3) {
        let mut ext = w.letters.clone();
        if let Some(&l) = w.letters.last() {
            ext.push(inv_letter(l));
            ext.push(l);
        }
        let red = f.red(&cx, &t, 0, &ext).unwrap();
        assert_eq!(t.src2(red), f.word(&cx, &t, 0, &ext).unwrap());
        assert_eq!(t.tgt2(red), f.word(&cx, &t, 0, &reduce(&ext)).unwrap());
    }
}

#[test]
fn pullback_of_transformations_along_projections_typechecks() {
    let cm = CrossedModule::nonabelian_example();
    let t = two_group_from_crossed_module(&cm).unwrap();
    let cx = Computad::grid(3, 3, true);
    let tower = build_fiber_spaces(&cx, &CoverSpec::torus_blocks(&cx)).unwrap();
    let f = random_strict_functor(&cx, &cm, &t, 5);
    let pi = tower.to_base(2);
    let y2 = &tower.space(2).cx;
    let pf = f.pullback(y2, &pi);
    pf.typecheck(y2, &t).unwrap();
    let rho = PathTransformation::identity(&f, &t).pullback(y2, &pi);
    rho.typecheck(&pf, &pf, y2, &t).unwrap();
}
