use crate::base::path::letter;
use crate::base::{build_fiber_spaces, BigonTerm, Computad, CoverSpec, PathTerm};
use crate::codescent::{Codescent, SectionChoice};
use crate::descent::{DescentObject, Refinement};
use crate::error::{CoreError, Result};
use crate::instances::{two_group_from_crossed_module, CrossedModule, FiniteGroup};
use crate::transport::{extract, random_trivialized, TransportQuery};

use super::workspace::{Artifact, CoverArt, FunctorSpec, Target, TargetSpec, Workspace};

/// Names accepted by [`example`].
pub const EXAMPLES: [&str; 3] = ["c6", "torus", "octahedron"];

fn renamed_group(g: &FiniteGroup, name: &str) -> FiniteGroup {
    let mut g = g.clone();
    g.name = name.into();
    g
}

/// A bundled workspace on one of the standard bases with the nonabelian 2-group:
/// the target, a cover, two section choices, a random trivialized functor `F`,
/// its extracted descent object `D`, the single-patch cover `whole` with the refinement
/// `into-whole`, the pulled-back global object `G` over it and two transport queries.
pub fn example(name: &str, seed: u64) -> Result<Workspace> {
    let (mut cx, cover) = match name {
        "c6" => {
            let cx = Computad::c6();
            let c = CoverSpec::c6_arcs(&cx);
            (cx, c)
        }
        "torus" => {
            let cx = Computad::grid(3, 3, true);
            let c = CoverSpec::torus_blocks(&cx);
            (cx, c)
        }
        "octahedron" => {
            let cx = Computad::octahedron();
            let c = CoverSpec::octahedron_wedges(&cx);
            (cx, c)
        }
        other => return Err(CoreError::Unknown(format!("example `{other}`; expected one of {}", EXAMPLES.join(", ")))),
    };
    cx.name = "M".into();
    let mut cover = CoverSpec::new(&cx, "U", cover.patches)?;
    cover.name = "U".into();

    let base = CrossedModule::nonabelian_example();
    let (g, h) = (renamed_group(&base.g, "S3"), renamed_group(&base.h, "S3xZ2"));
    let cm = CrossedModule::new("cm", g.clone(), h.clone(), base.t.clone(), base.act.clone())?;
    let mut table = two_group_from_crossed_module(&cm)?;
    table.name = "T".into();

    let tower = build_fiber_spaces(&cx, &cover)?;
    let cd = Codescent::new(&tower);
    let (smallest, largest) = (SectionChoice::smallest(&cd), SectionChoice::largest(&cd));

    let path = match cx.faces.first() {
        Some(f) => f.src.then(&cx, &f.tgt.inverse(&cx))?,
        None => {
            let all: Vec<_> = (0..cx.edges.len()).map(|e| letter(e, false)).collect();
            PathTerm::new(&cx, 0, &all).unwrap_or(PathTerm::empty(0))
        }
    };

    let mut ws = Workspace::default();
    ws.insert("S3", Artifact::Group(g))?;
    ws.insert("S3xZ2", Artifact::Group(h))?;
    ws.insert("cm", Artifact::Crossed(cm))?;
    ws.insert("T", Artifact::Target(Target { spec: TargetSpec::Crossed("cm".into()), table }))?;
    ws.insert("M", Artifact::Computad(cx.clone()))?;
    ws.insert("U", Artifact::Cover(CoverArt { base: "M".into(), cover, tower }))?;
    ws.insert("smallest", Artifact::Choice { cover: "U".into(), choice: smallest })?;
    ws.insert("largest", Artifact::Choice { cover: "U".into(), choice: largest })?;

    let frame = ws.frame("U", "T", "T", FunctorSpec::Identity)?;
    let (tf, d) = {
        let dcx = ws.context(&frame)?;
        let tf = random_trivialized(&dcx, seed)?;
        let d = extract(&tf, &dcx)?;
        (tf, d)
    };
    let (whole, whole_tower) = {
        let c = CoverSpec { name: "whole".into(), ..CoverSpec::single(&cx) };
        let tw = build_fiber_spaces(&cx, &c)?;
        (c, tw)
    };
    let into = Refinement::new(&ws.cover("U")?.cover, &whole, vec![0; ws.cover("U")?.cover.patches.len()])?;
    ws.insert("whole", Artifact::Cover(CoverArt { base: "M".into(), cover: whole, tower: whole_tower }))?;
    let whole_choice = SectionChoice::smallest(&Codescent::new(&ws.cover("whole")?.tower));
    ws.insert("whole-choice", Artifact::Choice { cover: "whole".into(), choice: whole_choice })?;
    ws.insert("into-whole", Artifact::Refinement { from: "U".into(), to: "whole".into(), r: into })?;
    let global_frame = ws.frame("whole", "T", "T", FunctorSpec::Identity)?;
    let global = DescentObject::pulled_back(&ws.context(&global_frame)?, &tf.f)?;
    ws.insert("F", Artifact::Trivialized { frame: frame.clone(), tf })?;
    ws.insert("D", Artifact::Descent { frame, d })?;
    ws.insert("G", Artifact::Descent { frame: global_frame, d: global })?;
    ws.insert("loop", Artifact::Query { base: "M".into(), q: TransportQuery::Path(path) })?;
    if !cx.faces.is_empty() {
        ws.insert("face0", Artifact::Query { base: "M".into(), q: TransportQuery::Bigon(BigonTerm::face(&cx, 0)) })?;
    }
    Ok(ws)
}
