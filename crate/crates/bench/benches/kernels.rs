use criterion::{criterion_group, criterion_main, Criterion};
use twofun_core::base::{build_fiber_spaces, Computad, CoverSpec};
use twofun_core::codescent::{Codescent, Section, SectionChoice};
use twofun_core::descent::{check_descent_object, DescentContext};
use twofun_core::instances::{two_group_from_crossed_module, CrossedModule};
use twofun_core::transport::{extract, random_trivialized, reconstruct};
use twofun_core::twocat::{check_two_category, TwoFunctorData};

fn kernels(c: &mut Criterion) {
    let t = two_group_from_crossed_module(&CrossedModule::nonabelian_example()).unwrap();
    c.bench_function("check_two_category nonabelian", |b| b.iter(|| check_two_category(&t)));

    let i = TwoFunctorData::identity(&t);
    let m = Computad::octahedron();
    let cover = CoverSpec::octahedron_wedges(&m);
    let tower = build_fiber_spaces(&m, &cover).unwrap();
    let cx = DescentContext::new(&tower, &t, &t, &i).unwrap();
    let cd = Codescent::new(&tower);
    let tf = random_trivialized(&cx, 1).unwrap();
    let d = extract(&tf, &cx).unwrap();
    let s = Section::new(&cd, SectionChoice::smallest(&cd)).unwrap();

    c.bench_function("extract octahedron", |b| b.iter(|| extract(&tf, &cx).unwrap()));
    c.bench_function("check_descent_object octahedron", |b| b.iter(|| check_descent_object(&d, &cx).unwrap()));
    c.bench_function("reconstruct octahedron", |b| b.iter(|| reconstruct(&d, &cx, &s).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = kernels
}
criterion_main!(benches);
