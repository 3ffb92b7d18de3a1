use std::collections::HashMap;
use std::fmt;

use crate::base::path::letter;
use crate::base::{build_fiber_spaces, BigonStep, BigonTerm, Computad, CoverSpec, Edge, Face, FiberTower, Patch, PathFunctor, PathModification, PathTerm, PathTransformation};
use crate::codescent::{Codescent, Section as LiftSection, SectionChoice};
use crate::descent::{DescentContext, DescentObject, DescentOneMor, Refinement};
use crate::error::{CoreError, Result};
use crate::instances::{delooping, trivial_2groupoid, two_group_from_crossed_module, CrossedModule, FiniteGroup, MonoidalTable, Morphism};
use crate::transport::{TransportQuery, TrivializedFunctor};
use crate::twocat::{EquivalenceBundle, TwoCategoryTable, TwoFunctorData, NONE};

use super::doc::{Document, Section};

/// How a target table is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSpec {
    Crossed(String),
    Delooping(String),
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Target {
    pub spec: TargetSpec,
    pub table: TwoCategoryTable,
}

/// The functor `i: Gr → T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctorSpec {
    Identity,
    /// Everything to the identities of the first object.
    Unit,
}

/// Cover, structure 2-groupoid, target and `i` shared by descent data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub cover: String,
    pub gr: String,
    pub target: String,
    pub i: FunctorSpec,
    pub i_data: TwoFunctorData,
}

#[derive(Debug, Clone)]
pub struct CoverArt {
    pub base: String,
    pub cover: CoverSpec,
    pub tower: FiberTower,
}

impl PartialEq for CoverArt {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.cover == other.cover
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Artifact {
    Group(FiniteGroup),
    Crossed(CrossedModule),
    Monoidal(MonoidalTable),
    Target(Target),
    Computad(Computad),
    Cover(CoverArt),
    Choice { cover: String, choice: SectionChoice },
    Descent { frame: Frame, d: DescentObject },
    Trivialized { frame: Frame, tf: TrivializedFunctor },
    Refinement { from: String, to: String, r: Refinement },
    Query { base: String, q: TransportQuery },
    DescentMor { frame: Frame, source: String, target: String, m: DescentOneMor },
    Transformation { source: String, target: String, a: PathTransformation },
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Group(_) => "group",
            Artifact::Crossed(_) => "crossed",
            Artifact::Monoidal(_) => "monoidal",
            Artifact::Target(_) => "target",
            Artifact::Computad(_) => "computad",
            Artifact::Cover(_) => "cover",
            Artifact::Choice { .. } => "choice",
            Artifact::Descent { .. } => "descent",
            Artifact::Trivialized { .. } => "trivialized",
            Artifact::Refinement { .. } => "refinement",
            Artifact::Query { .. } => "query",
            Artifact::DescentMor { .. } => "descent-1mor",
            Artifact::Transformation { .. } => "transformation",
        }
    }
}

/// A named bank of artifacts; later sections may refer to earlier ones.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Workspace {
    pub items: Vec<(String, Artifact)>,
}

fn unknown(what: &str, name: &str) -> CoreError {
    CoreError::Unknown(format!("{what} `{name}`"))
}

fn index_of(labels: &[String]) -> HashMap<&str, usize> {
    labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}

fn letter_labels(cx: &Computad) -> Vec<String> {
    (0..cx.n_letters()).map(|l| cx.letter_label(l)).collect()
}

fn face_labels(cx: &Computad) -> Vec<String> {
    cx.faces.iter().map(|f| f.label.clone()).collect()
}

fn lookup(map: &HashMap<&str, usize>, sec: &Section, e: &super::doc::Entry, v: &str) -> Result<usize> {
    map.get(v).copied().ok_or_else(|| sec.entry_error(e, format!("unknown label `{v}`")))
}

/// Entries `key.. LABEL = value`, exactly one per label, in label order.
fn read_table(sec: &Section, key: &[&str], labels: &[String], parse: &dyn Fn(&str) -> Result<usize>) -> Result<Vec<usize>> {
    let idx = index_of(labels);
    let mut out = vec![None; labels.len()];
    for e in &sec.entries {
        if e.key.len() != key.len() + 1 || !e.key.iter().zip(key).all(|(a, b)| a == b) {
            continue;
        }
        let at = lookup(&idx, sec, e, &e.key[key.len()])?;
        if out[at].is_some() {
            return Err(sec.entry_error(e, format!("duplicate entry for `{}`", labels[at])));
        }
        let [v] = e.values.as_slice() else {
            return Err(sec.entry_error(e, "expected exactly one value"));
        };
        out[at] = Some(parse(v).map_err(|err| sec.entry_error(e, err.to_string()))?);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| sec.entry_error(&super::doc::Entry::new(&[], vec![]), format!("missing `{} {}`", key.join(" "), labels[i]))))
        .collect()
}

fn write_table(sec: &mut Section, key: &[&str], labels: &[String], values: impl IntoIterator<Item = String>) {
    for (l, v) in labels.iter().zip(values) {
        let mut k: Vec<&str> = key.to_vec();
        k.push(l);
        sec.push(&k, vec![v]);
    }
}

fn words(vals: &[String]) -> Vec<String> {
    vals.to_vec()
}

/// Labels of one row against an index, with `-` for undefined.
fn row(map: &HashMap<&str, usize>, sec: &Section, e: &super::doc::Entry, len: usize) -> Result<Vec<usize>> {
    if e.values.len() != len {
        return Err(sec.entry_error(e, format!("expected {len} values, found {}", e.values.len())));
    }
    e.values.iter().map(|v| if v == "-" { Ok(NONE) } else { lookup(map, sec, e, v) }).collect()
}

/// Rows `head LABEL = ...` in label order.
fn rows(sec: &Section, head: &str, row_labels: &[String], map: &HashMap<&str, usize>, len: usize) -> Result<Vec<usize>> {
    let ridx = index_of(row_labels);
    let mut out = vec![None; row_labels.len()];
    for e in sec.with_head(head) {
        if e.key.len() != 2 {
            return Err(sec.entry_error(e, format!("expected `{head} <label> = ...`")));
        }
        let r = lookup(&ridx, sec, e, &e.key[1])?;
        if out[r].is_some() {
            return Err(sec.entry_error(e, "duplicate row"));
        }
        out[r] = Some(row(map, sec, e, len)?);
    }
    let mut flat = Vec::with_capacity(row_labels.len() * len);
    for (i, r) in out.into_iter().enumerate() {
        flat.extend(r.ok_or_else(|| CoreError::Parse { line: sec.line, column: 1, msg: format!("{} `{}`: missing row `{head} {}`", sec.kind, sec.name, row_labels[i]) })?);
    }
    Ok(flat)
}

fn write_rows(sec: &mut Section, head: &str, row_labels: &[String], labels: &[String], flat: &[usize]) {
    let len = labels.len();
    for (r, rl) in row_labels.iter().enumerate() {
        let vals = flat[r * len..(r + 1) * len].iter().map(|&v| if v == NONE { "-".to_string() } else { labels[v].clone() }).collect();
        sec.push(&[head, rl], vals);
    }
}

fn parse_index(s: &str, bound: usize) -> Result<usize> {
    let v: usize = s.parse().map_err(|_| CoreError::Validation(format!("`{s}` is not an index")))?;
    if v >= bound {
        return Err(CoreError::Validation(format!("index {v} out of range")));
    }
    Ok(v)
}

struct Labels {
    obj: Vec<String>,
    one: Vec<String>,
    two: Vec<String>,
}

fn table_labels(t: &TwoCategoryTable) -> Labels {
    Labels {
        obj: t.objects.clone(),
        one: t.one_cells.iter().map(|c| c.label.clone()).collect(),
        two: t.two_cells.iter().map(|c| c.label.clone()).collect(),
    }
}

fn read_functor(sec: &Section, head: &str, cx: &Computad, t: &TwoCategoryTable) -> Result<PathFunctor> {
    let ix = t.label_index();
    let (o, c1, c2) = (|s: &str| ix.object(s), |s: &str| ix.one(s), |s: &str| ix.two(s));
    let letters = letter_labels(cx);
    let f = PathFunctor {
        obj: read_table(sec, &[head, "obj"], &cx.vertices, &o)?,
        one: read_table(sec, &[head, "one"], &letters, &c1)?,
        kappa: read_table(sec, &[head, "kappa"], &letters, &c2)?,
        face: read_table(sec, &[head, "face"], &face_labels(cx), &c2)?,
        unitor: read_table(sec, &[head, "unitor"], &cx.vertices, &c2)?,
    };
    f.typecheck(cx, t).map_err(|e| CoreError::Parse { line: sec.line, column: 1, msg: format!("{} `{}`: {e}", sec.kind, sec.name) })?;
    Ok(f)
}

fn write_functor(sec: &mut Section, head: &str, cx: &Computad, t: &TwoCategoryTable, f: &PathFunctor) {
    let lb = table_labels(t);
    let letters = letter_labels(cx);
    write_table(sec, &[head, "obj"], &cx.vertices, f.obj.iter().map(|&x| lb.obj[x].clone()));
    write_table(sec, &[head, "one"], &letters, f.one.iter().map(|&x| lb.one[x].clone()));
    write_table(sec, &[head, "kappa"], &letters, f.kappa.iter().map(|&x| lb.two[x].clone()));
    write_table(sec, &[head, "face"], &face_labels(cx), f.face.iter().map(|&x| lb.two[x].clone()));
    write_table(sec, &[head, "unitor"], &cx.vertices, f.unitor.iter().map(|&x| lb.two[x].clone()));
}

fn read_transformation(sec: &Section, head: &str, cx: &Computad, t: &TwoCategoryTable) -> Result<PathTransformation> {
    let ix = t.label_index();
    Ok(PathTransformation {
        comp0: read_table(sec, &[head, "comp0"], &cx.vertices, &|s| ix.one(s))?,
        comp1: read_table(sec, &[head, "comp1"], &letter_labels(cx), &|s| ix.two(s))?,
    })
}

fn write_transformation(sec: &mut Section, head: &str, cx: &Computad, t: &TwoCategoryTable, a: &PathTransformation) {
    let lb = table_labels(t);
    write_table(sec, &[head, "comp0"], &cx.vertices, a.comp0.iter().map(|&x| lb.one[x].clone()));
    write_table(sec, &[head, "comp1"], &letter_labels(cx), a.comp1.iter().map(|&x| lb.two[x].clone()));
}

fn read_modification(sec: &Section, head: &str, cx: &Computad, t: &TwoCategoryTable) -> Result<PathModification> {
    let ix = t.label_index();
    Ok(PathModification { comp: read_table(sec, &[head], &cx.vertices, &|s| ix.two(s))? })
}

fn write_modification(sec: &mut Section, head: &str, cx: &Computad, t: &TwoCategoryTable, a: &PathModification) {
    let lb = table_labels(t);
    write_table(sec, &[head], &cx.vertices, a.comp.iter().map(|&x| lb.two[x].clone()));
}

fn parse_path(cx: &Computad, start: &str, word: &str) -> Result<PathTerm> {
    let s = cx.find_vertex(start).ok_or_else(|| unknown("vertex", start))?;
    PathTerm::new(cx, s, &cx.parse_word(word)?)
}

fn show_step(cx: &Computad, s: &BigonStep) -> String {
    let face = &cx.faces[s.face].label;
    format!("{}/{}{}/{}", cx.word_label(&s.prefix), if s.inverse { "~" } else { "" }, face, cx.word_label(&s.suffix))
}

fn parse_step(cx: &Computad, s: &str) -> Result<BigonStep> {
    let parts: Vec<&str> = s.split('/').collect();
    let [p, f, q] = parts.as_slice() else {
        return Err(CoreError::Validation(format!("step `{s}` is not `prefix/face/suffix`")));
    };
    let (name, inverse) = match f.strip_prefix('~') {
        Some(n) => (n, true),
        None => (*f, false),
    };
    let face = cx.find_face(name).ok_or_else(|| unknown("face", name))?;
    Ok(BigonStep { prefix: cx.parse_word(p)?, face, inverse, suffix: cx.parse_word(q)? })
}

impl Workspace {
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_document(&Document::parse(text)?)
    }

    pub fn from_document(doc: &Document) -> Result<Self> {
        let mut ws = Workspace::default();
        for sec in &doc.sections {
            let art = ws.load(sec)?;
            ws.items.push((sec.name.clone(), art));
        }
        Ok(ws)
    }

    pub fn get(&self, name: &str) -> Option<&Artifact> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }

    pub fn insert(&mut self, name: &str, art: Artifact) -> Result<()> {
        if self.get(name).is_some() {
            return Err(CoreError::Validation(format!("name `{name}` already in use")));
        }
        if let Artifact::Choice { choice, .. } = &art {
            if !choice.overrides.is_empty() {
                return Err(CoreError::Capability(format!("choice `{name}` has edge overrides, which the format cannot store")));
            }
        }
        self.items.push((name.to_string(), art));
        Ok(())
    }

    /// Names of every artifact of the given kind, in order.
    pub fn names_of(&self, kind: &str) -> Vec<String> {
        self.items.iter().filter(|(_, a)| a.kind() == kind).map(|(n, _)| n.clone()).collect()
    }

    pub fn group(&self, name: &str) -> Result<&FiniteGroup> {
        match self.get(name) {
            Some(Artifact::Group(g)) => Ok(g),
            _ => Err(unknown("group", name)),
        }
    }

    pub fn crossed(&self, name: &str) -> Result<&CrossedModule> {
        match self.get(name) {
            Some(Artifact::Crossed(c)) => Ok(c),
            _ => Err(unknown("crossed module", name)),
        }
    }

    pub fn monoidal(&self, name: &str) -> Result<&MonoidalTable> {
        match self.get(name) {
            Some(Artifact::Monoidal(m)) => Ok(m),
            _ => Err(unknown("monoidal table", name)),
        }
    }

    pub fn table(&self, name: &str) -> Result<&TwoCategoryTable> {
        match self.get(name) {
            Some(Artifact::Target(t)) => Ok(&t.table),
            _ => Err(unknown("target", name)),
        }
    }

    pub fn computad(&self, name: &str) -> Result<&Computad> {
        match self.get(name) {
            Some(Artifact::Computad(c)) => Ok(c),
            _ => Err(unknown("computad", name)),
        }
    }

    pub fn cover(&self, name: &str) -> Result<&CoverArt> {
        match self.get(name) {
            Some(Artifact::Cover(c)) => Ok(c),
            _ => Err(unknown("cover", name)),
        }
    }

    pub fn descent(&self, name: &str) -> Result<(&Frame, &DescentObject)> {
        match self.get(name) {
            Some(Artifact::Descent { frame, d }) => Ok((frame, d)),
            _ => Err(unknown("descent object", name)),
        }
    }

    pub fn trivialized(&self, name: &str) -> Result<(&Frame, &TrivializedFunctor)> {
        match self.get(name) {
            Some(Artifact::Trivialized { frame, tf }) => Ok((frame, tf)),
            _ => Err(unknown("trivialized functor", name)),
        }
    }

    pub fn choice(&self, name: &str) -> Result<(&str, &SectionChoice)> {
        match self.get(name) {
            Some(Artifact::Choice { cover, choice }) => Ok((cover, choice)),
            _ => Err(unknown("choice", name)),
        }
    }

    pub fn context<'w>(&'w self, frame: &'w Frame) -> Result<DescentContext<'w>> {
        let tower = &self.cover(&frame.cover)?.tower;
        DescentContext::new(tower, self.table(&frame.gr)?, self.table(&frame.target)?, &frame.i_data)
    }

    /// A frame with the `i` data built from its tables.
    pub fn frame(&self, cover: &str, gr: &str, target: &str, i: FunctorSpec) -> Result<Frame> {
        self.cover(cover)?;
        let (g, t) = (self.table(gr)?, self.table(target)?);
        let i_data = match i {
            FunctorSpec::Identity => {
                if g != t {
                    return Err(CoreError::Validation(format!("`i = identity` needs gr = target, found `{gr}` and `{target}`")));
                }
                TwoFunctorData::identity(t)
            }
            FunctorSpec::Unit => TwoFunctorData::constant(g, t, 0),
        };
        Ok(Frame { cover: cover.into(), gr: gr.into(), target: target.into(), i, i_data })
    }

    fn load_frame(&self, sec: &Section) -> Result<Frame> {
        let i = match sec.single(&["i"])? {
            "identity" => FunctorSpec::Identity,
            "unit" => FunctorSpec::Unit,
            other => return Err(CoreError::Validation(format!("unknown functor `{other}`; expected identity or unit"))),
        };
        self.frame(sec.single(&["cover"])?, sec.single(&["gr"])?, sec.single(&["target"])?, i)
    }

    fn load(&self, sec: &Section) -> Result<Artifact> {
        let name = sec.name.as_str();
        Ok(match sec.kind.as_str() {
            "group" => {
                let labels = words(sec.values(&["elements"])?);
                let n = labels.len();
                let idx = index_of(&labels);
                let mul = rows(sec, "mul", &labels, &idx, n)?;
                if mul.contains(&NONE) {
                    return Err(CoreError::Validation(format!("group `{name}`: undefined product")));
                }
                Artifact::Group(FiniteGroup::from_table(name, labels.clone(), mul)?)
            }
            "crossed" => {
                let g = self.group(sec.single(&["g"])?)?.clone();
                let h = self.group(sec.single(&["h"])?)?.clone();
                let (gi, hi) = (index_of(&g.labels), index_of(&h.labels));
                let te = sec.get(&["t"]).ok_or_else(|| CoreError::Validation(format!("crossed `{name}`: missing t")))?;
                let t = row(&gi, sec, te, h.order())?;
                let act = rows(sec, "act", &g.labels, &hi, h.order())?;
                Artifact::Crossed(CrossedModule::new(name, g, h, t, act)?)
            }
            "monoidal" => Artifact::Monoidal(self.load_monoidal(sec)?),
            "target" => {
                let v = sec.values(&["kind"])?;
                let spec = match v.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
                    ["crossed", c] => TargetSpec::Crossed(c.to_string()),
                    ["delooping", m] => TargetSpec::Delooping(m.to_string()),
                    ["trivial"] => TargetSpec::Trivial,
                    _ => return Err(CoreError::Validation(format!("target `{name}`: kind must be `crossed X`, `delooping X` or `trivial`"))),
                };
                let mut table = match &spec {
                    TargetSpec::Crossed(c) => two_group_from_crossed_module(self.crossed(c)?)?,
                    TargetSpec::Delooping(m) => delooping(self.monoidal(m)?)?,
                    TargetSpec::Trivial => trivial_2groupoid(),
                };
                table.name = name.to_string();
                Artifact::Target(Target { spec, table })
            }
            "computad" => {
                let vertices = words(sec.values(&["vertices"])?);
                let vi = index_of(&vertices);
                let mut edges = Vec::new();
                for e in sec.with_head("edge") {
                    let ([_, label], [s, t]) = (e.key.as_slice(), e.values.as_slice()) else {
                        return Err(sec.entry_error(e, "expected `edge <label> = <src> <tgt>`"));
                    };
                    edges.push(Edge { label: label.clone(), src: lookup(&vi, sec, e, s)?, tgt: lookup(&vi, sec, e, t)? });
                }
                let partial = Computad { name: name.into(), vertices: vertices.clone(), edges: edges.clone(), faces: Vec::new() };
                let mut faces = Vec::new();
                for e in sec.with_head("face") {
                    let ([_, label], [start, s, t]) = (e.key.as_slice(), e.values.as_slice()) else {
                        return Err(sec.entry_error(e, "expected `face <label> = <start> <source word> <target word>`"));
                    };
                    let src = parse_path(&partial, start, s).map_err(|err| sec.entry_error(e, err.to_string()))?;
                    let tgt = parse_path(&partial, start, t).map_err(|err| sec.entry_error(e, err.to_string()))?;
                    faces.push(Face { label: label.clone(), src, tgt });
                }
                Artifact::Computad(Computad::new(name, vertices, edges, faces)?)
            }
            "cover" => {
                let base_name = sec.single(&["base"])?;
                let cx = self.computad(base_name)?;
                let (vi, el, fl) = (index_of(&cx.vertices), cx.edges.iter().map(|e| e.label.clone()).collect::<Vec<_>>(), face_labels(cx));
                let (ei, fi) = (index_of(&el), index_of(&fl));
                let mut patches: Vec<Patch> = Vec::new();
                for e in sec.with_head("patch") {
                    let [_, idx, what] = e.key.as_slice() else {
                        return Err(sec.entry_error(e, "expected `patch <n> vertices|edges|faces = ...`"));
                    };
                    let p = parse_index(idx, patches.len() + 1).map_err(|err| sec.entry_error(e, err.to_string()))?;
                    if p == patches.len() {
                        patches.push(Patch::default());
                    }
                    let (map, set) = match what.as_str() {
                        "vertices" => (&vi, &mut patches[p].vertices),
                        "edges" => (&ei, &mut patches[p].edges),
                        "faces" => (&fi, &mut patches[p].faces),
                        _ => return Err(sec.entry_error(e, "expected vertices, edges or faces")),
                    };
                    for v in &e.values {
                        set.insert(lookup(map, sec, e, v)?);
                    }
                }
                let cover = CoverSpec::new(cx, name, patches)?;
                let tower = build_fiber_spaces(cx, &cover)?;
                Artifact::Cover(CoverArt { base: base_name.into(), cover, tower })
            }
            "choice" => {
                let cover = sec.single(&["cover"])?;
                let art = self.cover(cover)?;
                let n = art.cover.patches.len();
                let read = |k: &str| -> Result<Vec<usize>> { sec.values(&[k])?.iter().map(|s| parse_index(s, n)).collect() };
                let choice = SectionChoice { chi0: read("chi0")?, chi1: read("chi1")?, chi2: read("chi2")?, overrides: Default::default() };
                let cd = Codescent::new(&art.tower);
                LiftSection::new(&cd, choice.clone())?;
                Artifact::Choice { cover: cover.into(), choice }
            }
            "descent" => {
                let frame = self.load_frame(sec)?;
                let cx = self.context(&frame)?;
                let d = DescentObject {
                    triv: read_functor(sec, "triv", cx.y(1), cx.gr)?,
                    g: read_transformation(sec, "g", cx.y(2), cx.t)?,
                    psi: read_modification(sec, "psi", cx.y(1), cx.t)?,
                    f: read_modification(sec, "f", cx.y(3), cx.t)?,
                };
                let (f1, f2) = d.sides(&cx)?;
                d.g.typecheck(&f1, &f2, cx.y(2), cx.t)?;
                Artifact::Descent { frame, d }
            }
            "trivialized" => {
                let frame = self.load_frame(sec)?;
                let cx = self.context(&frame)?;
                let y = cx.y(1);
                let tf = TrivializedFunctor {
                    f: read_functor(sec, "F", cx.y(0), cx.t)?,
                    triv: read_functor(sec, "triv", y, cx.gr)?,
                    t: EquivalenceBundle {
                        forward: read_transformation(sec, "t", y, cx.t)?,
                        inverse: read_transformation(sec, "tbar", y, cx.t)?,
                        i: read_modification(sec, "it", y, cx.t)?,
                        j: read_modification(sec, "jt", y, cx.t)?,
                    },
                };
                let (pf, ti) = (tf.pulled(&cx), cx.post(&tf.triv)?);
                tf.t.forward.typecheck(&pf, &ti, y, cx.t)?;
                tf.t.inverse.typecheck(&ti, &pf, y, cx.t)?;
                Artifact::Trivialized { frame, tf }
            }
            "refinement" => {
                let (from, to) = (sec.single(&["from"])?, sec.single(&["to"])?);
                let (a, b) = (self.cover(from)?, self.cover(to)?);
                if a.base != b.base {
                    return Err(CoreError::Validation(format!("refinement `{name}`: covers of different bases")));
                }
                let map = sec.values(&["map"])?.iter().map(|s| parse_index(s, b.cover.patches.len())).collect::<Result<_>>()?;
                Artifact::Refinement { from: from.into(), to: to.into(), r: Refinement::new(&a.cover, &b.cover, map)? }
            }
            "query" => {
                let base = sec.single(&["base"])?;
                let cx = self.computad(base)?;
                let q = if let Some(e) = sec.get(&["path"]) {
                    let [start, word] = e.values.as_slice() else {
                        return Err(sec.entry_error(e, "expected `path = <start> <word>`"));
                    };
                    TransportQuery::Path(parse_path(cx, start, word)?)
                } else if let Some(e) = sec.get(&["bigon"]) {
                    let [start, word, steps @ ..] = e.values.as_slice() else {
                        return Err(sec.entry_error(e, "expected `bigon = <start> <word> <steps>..`"));
                    };
                    let steps = steps.iter().map(|s| parse_step(cx, s)).collect::<Result<_>>()?;
                    TransportQuery::Bigon(BigonTerm::new(cx, parse_path(cx, start, word)?, steps)?)
                } else if let Some(e) = sec.get(&["face"]) {
                    let [f] = e.values.as_slice() else {
                        return Err(sec.entry_error(e, "expected `face = <label>`"));
                    };
                    TransportQuery::Bigon(BigonTerm::face(cx, cx.find_face(f).ok_or_else(|| unknown("face", f))?))
                } else {
                    return Err(CoreError::Validation(format!("query `{name}` needs path, bigon or face")));
                };
                Artifact::Query { base: base.into(), q }
            }
            "descent-1mor" => {
                let frame = self.load_frame(sec)?;
                let (source, target) = (sec.single(&["from"])?, sec.single(&["to"])?);
                self.descent(source)?;
                self.descent(target)?;
                let cx = self.context(&frame)?;
                let m = DescentOneMor { h: read_transformation(sec, "h", cx.y(1), cx.t)?, eps: read_modification(sec, "eps", cx.y(2), cx.t)? };
                Artifact::DescentMor { frame, source: source.into(), target: target.into(), m }
            }
            "transformation" => {
                let (source, target) = (sec.single(&["from"])?, sec.single(&["to"])?);
                let (frame, _) = self.trivialized(source)?;
                self.trivialized(target)?;
                let base = self.computad(&self.cover(&frame.cover)?.base)?;
                let a = read_transformation(sec, "a", base, self.table(&frame.target)?)?;
                Artifact::Transformation { source: source.into(), target: target.into(), a }
            }
            other => return Err(CoreError::Parse { line: sec.line, column: 1, msg: format!("unknown section kind `{other}`") }),
        })
    }

    fn load_monoidal(&self, sec: &Section) -> Result<MonoidalTable> {
        let objects = words(sec.values(&["objects"])?);
        let oi = index_of(&objects);
        let mut morphisms = Vec::new();
        for e in sec.with_head("morphism") {
            let ([_, label], [s, t]) = (e.key.as_slice(), e.values.as_slice()) else {
                return Err(sec.entry_error(e, "expected `morphism <label> = <src> <tgt>`"));
            };
            morphisms.push(Morphism { label: label.clone(), src: lookup(&oi, sec, e, s)?, tgt: lookup(&oi, sec, e, t)? });
        }
        let ml: Vec<String> = morphisms.iter().map(|m| m.label.clone()).collect();
        let mi = index_of(&ml);
        let (n, m) = (objects.len(), ml.len());
        let list = |k: &str, map: &HashMap<&str, usize>, len: usize| -> Result<Vec<usize>> {
            let e = sec.get(&[k]).ok_or_else(|| CoreError::Validation(format!("monoidal `{}`: missing {k}", sec.name)))?;
            row(map, sec, e, len)
        };
        let mt = MonoidalTable {
            name: sec.name.clone(),
            compose: rows(sec, "compose", &ml, &mi, m)?,
            identity: list("identity", &mi, n)?,
            tensor_obj: rows(sec, "tensor", &objects, &oi, n)?,
            tensor_mor: rows(sec, "tensor-mor", &ml, &mi, m)?,
            unit: lookup(&oi, sec, sec.get(&["unit"]).ok_or_else(|| CoreError::Validation("missing unit".into()))?, sec.single(&["unit"])?)?,
            alpha: list("alpha", &mi, n * n * n)?,
            lambda: list("lambda", &mi, n)?,
            rho: list("rho", &mi, n)?,
            objects,
            morphisms,
        };
        mt.validate()?;
        Ok(mt)
    }

    pub fn to_document(&self) -> Document {
        let mut doc = Document::default();
        for (name, art) in &self.items {
            doc.sections.push(self.section(name, art));
        }
        doc
    }

    fn frame_entries(sec: &mut Section, frame: &Frame) {
        sec.push1(&["cover"], frame.cover.clone());
        sec.push1(&["gr"], frame.gr.clone());
        sec.push1(&["target"], frame.target.clone());
        sec.push1(&["i"], match frame.i {
            FunctorSpec::Identity => "identity",
            FunctorSpec::Unit => "unit",
        });
    }

    fn section(&self, name: &str, art: &Artifact) -> Section {
        let mut sec = Section::new(art.kind(), name);
        match art {
            Artifact::Group(g) => {
                sec.push(&["elements"], g.labels.clone());
                write_rows(&mut sec, "mul", &g.labels, &g.labels, &g.mul);
            }
            Artifact::Crossed(c) => {
                let gname = self.items.iter().find(|(_, a)| matches!(a, Artifact::Group(x) if *x == c.g)).map(|(n, _)| n.clone()).unwrap_or(c.g.name.clone());
                let hname = self.items.iter().find(|(_, a)| matches!(a, Artifact::Group(x) if *x == c.h)).map(|(n, _)| n.clone()).unwrap_or(c.h.name.clone());
                sec.push1(&["g"], gname);
                sec.push1(&["h"], hname);
                sec.push(&["t"], c.t.iter().map(|&x| c.g.labels[x].clone()).collect());
                write_rows(&mut sec, "act", &c.g.labels, &c.h.labels, &c.act);
            }
            Artifact::Monoidal(m) => {
                let ml: Vec<String> = m.morphisms.iter().map(|x| x.label.clone()).collect();
                sec.push(&["objects"], m.objects.clone());
                for x in &m.morphisms {
                    sec.push(&["morphism", &x.label], vec![m.objects[x.src].clone(), m.objects[x.tgt].clone()]);
                }
                write_rows(&mut sec, "compose", &ml, &ml, &m.compose);
                sec.push(&["identity"], m.identity.iter().map(|&x| ml[x].clone()).collect());
                write_rows(&mut sec, "tensor", &m.objects, &m.objects, &m.tensor_obj);
                write_rows(&mut sec, "tensor-mor", &ml, &ml, &m.tensor_mor);
                sec.push1(&["unit"], m.objects[m.unit].clone());
                for (k, v) in [("alpha", &m.alpha), ("lambda", &m.lambda), ("rho", &m.rho)] {
                    sec.push(&[k], v.iter().map(|&x| ml[x].clone()).collect());
                }
            }
            Artifact::Target(t) => match &t.spec {
                TargetSpec::Crossed(c) => sec.push(&["kind"], vec!["crossed".into(), c.clone()]),
                TargetSpec::Delooping(m) => sec.push(&["kind"], vec!["delooping".into(), m.clone()]),
                TargetSpec::Trivial => sec.push1(&["kind"], "trivial"),
            },
            Artifact::Computad(cx) => {
                sec.push(&["vertices"], cx.vertices.clone());
                for e in &cx.edges {
                    sec.push(&["edge", &e.label], vec![cx.vertices[e.src].clone(), cx.vertices[e.tgt].clone()]);
                }
                for f in &cx.faces {
                    sec.push(&["face", &f.label], vec![cx.vertices[f.src.start].clone(), cx.word_label(&f.src.letters), cx.word_label(&f.tgt.letters)]);
                }
            }
            Artifact::Cover(c) => {
                let cx = self.computad(&c.base).expect("cover base is loaded");
                sec.push1(&["base"], c.base.clone());
                for (i, p) in c.cover.patches.iter().enumerate() {
                    let i = i.to_string();
                    sec.push(&["patch", &i, "vertices"], p.vertices.iter().map(|&v| cx.vertices[v].clone()).collect());
                    sec.push(&["patch", &i, "edges"], p.edges.iter().map(|&e| cx.edges[e].label.clone()).collect());
                    sec.push(&["patch", &i, "faces"], p.faces.iter().map(|&f| cx.faces[f].label.clone()).collect());
                }
            }
            Artifact::Choice { cover, choice } => {
                sec.push1(&["cover"], cover.clone());
                for (k, v) in [("chi0", &choice.chi0), ("chi1", &choice.chi1), ("chi2", &choice.chi2)] {
                    sec.push(&[k], v.iter().map(|x| x.to_string()).collect());
                }
            }
            Artifact::Descent { frame, d } => {
                Self::frame_entries(&mut sec, frame);
                let cx = self.context(frame).expect("frames are validated on load");
                write_functor(&mut sec, "triv", cx.y(1), cx.gr, &d.triv);
                write_transformation(&mut sec, "g", cx.y(2), cx.t, &d.g);
                write_modification(&mut sec, "psi", cx.y(1), cx.t, &d.psi);
                write_modification(&mut sec, "f", cx.y(3), cx.t, &d.f);
            }
            Artifact::Trivialized { frame, tf } => {
                Self::frame_entries(&mut sec, frame);
                let cx = self.context(frame).expect("frames are validated on load");
                let y = cx.y(1);
                write_functor(&mut sec, "F", cx.y(0), cx.t, &tf.f);
                write_functor(&mut sec, "triv", y, cx.gr, &tf.triv);
                write_transformation(&mut sec, "t", y, cx.t, &tf.t.forward);
                write_transformation(&mut sec, "tbar", y, cx.t, &tf.t.inverse);
                write_modification(&mut sec, "it", y, cx.t, &tf.t.i);
                write_modification(&mut sec, "jt", y, cx.t, &tf.t.j);
            }
            Artifact::Refinement { from, to, r } => {
                sec.push1(&["from"], from.clone());
                sec.push1(&["to"], to.clone());
                sec.push(&["map"], r.patch_map.iter().map(|x| x.to_string()).collect());
            }
            Artifact::Query { base, q } => {
                let cx = self.computad(base).expect("query base is loaded");
                sec.push1(&["base"], base.clone());
                match q {
                    TransportQuery::Path(p) => sec.push(&["path"], vec![cx.vertices[p.start].clone(), cx.word_label(&p.letters)]),
                    TransportQuery::Bigon(b) => {
                        let mut v = vec![cx.vertices[b.source.start].clone(), cx.word_label(&b.source.letters)];
                        v.extend(b.steps.iter().map(|s| show_step(cx, s)));
                        sec.push(&["bigon"], v);
                    }
                }
            }
            Artifact::DescentMor { frame, source, target, m } => {
                Self::frame_entries(&mut sec, frame);
                sec.push1(&["from"], source.clone());
                sec.push1(&["to"], target.clone());
                let cx = self.context(frame).expect("frames are validated on load");
                write_transformation(&mut sec, "h", cx.y(1), cx.t, &m.h);
                write_modification(&mut sec, "eps", cx.y(2), cx.t, &m.eps);
            }
            Artifact::Transformation { source, target, a } => {
                sec.push1(&["from"], source.clone());
                sec.push1(&["to"], target.clone());
                let (frame, _) = self.trivialized(source).expect("source is loaded");
                let base = self.computad(&self.cover(&frame.cover).expect("cover").base).expect("base");
                write_transformation(&mut sec, "a", base, self.table(&frame.target).expect("target"), a);
            }
        }
        sec
    }
}

impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_document())
    }
}

/// Letter index from a label such as `~e3@0,1`.
pub fn find_letter(cx: &Computad, label: &str) -> Option<usize> {
    let (name, inv) = match label.strip_prefix('~') {
        Some(n) => (n, true),
        None => (label, false),
    };
    cx.find_edge(name).map(|e| letter(e, inv))
}
