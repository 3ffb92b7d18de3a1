//! Command-line front end over the text workspace format.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use twofun_core::base::{check_path_transformation, inverse1, PathTransformation};
use twofun_core::codescent::{Codescent, Section as LiftSection};
use twofun_core::descent::{check_descent_1mor, check_descent_object, forget_v_1mor, is_normalized, restrict};
use twofun_core::format::{example, Artifact, FunctorSpec, Workspace, EXAMPLES};
use twofun_core::transport::{eta, extract, extract_1mor, holonomy, reconstruct, rho};
use twofun_core::twocat::{check_two_category, check_two_functor, Cell, TwoCategoryTable};
use twofun_core::{CoreError, Report};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Violations = 1,
    Invalid = 2,
}

#[derive(Debug, Parser)]
#[command(name = "twofun", version, about = "Descent data, extraction and reconstruction of 2-functors on finite data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input workspace document.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Output document; standard output when absent.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Report file; standard output when absent.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// `ρ: Ex(Rec(D)) → D` for a descent object.
    ExRec,
    /// `η: F → Rec(Ex(F))` for a trivialized functor.
    RecEx,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the checkers on every descent object, trivialized functor and morphism.
    Validate {
        #[command(flatten)]
        io: Io,
        /// Only this artifact.
        #[arg(long)]
        name: Option<String>,
    },
    /// Extract descent data from a trivialized functor or a transformation between two.
    Extract {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        name: Option<String>,
        /// Name of the new artifact; `ex-NAME` by default.
        #[arg(long = "as")]
        as_name: Option<String>,
    },
    /// Reconstruct a trivialized functor from a descent object and a section choice.
    Reconstruct {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        choice: Option<String>,
        /// Name of the new artifact; `rec-NAME` by default.
        #[arg(long = "as")]
        as_name: Option<String>,
    },
    /// Build and check the round-trip witness.
    Roundtrip {
        direction: Direction,
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        choice: Option<String>,
    },
    /// Evaluate transport queries in a trivialized functor or a reconstructed descent object.
    Holonomy {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        name: Option<String>,
        /// Only this query.
        #[arg(long)]
        query: Option<String>,
        /// Section choice for descent objects.
        #[arg(long)]
        choice: Option<String>,
    },
    /// Restrict a descent object along a refinement.
    Refine {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        refinement: Option<String>,
        /// Name of the new artifact; `NAME-REFINEMENT` by default.
        #[arg(long = "as")]
        as_name: Option<String>,
    },
    /// Check the 2-category axioms of every target and the functor axioms of every `i`.
    Axioms {
        #[command(flatten)]
        io: Io,
    },
    /// Print a bundled example workspace.
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXAMPLES))]
        which: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// Text destined for the output document and for the report.
#[derive(Debug, Default)]
pub struct Output {
    pub document: Option<String>,
    pub report: String,
    pub status: Option<Status>,
}

impl Output {
    fn section(&mut self, title: &str, r: &Report) {
        writeln!(self.report, "# {title}: {}", if r.is_empty() { "ok".to_string() } else { format!("{} violations", r.len()) }).unwrap();
        self.report.push_str(&r.to_string());
        if !r.is_empty() {
            self.status = Some(Status::Violations);
        }
    }

    fn note(&mut self, line: impl AsRef<str>) {
        writeln!(self.report, "# {}", line.as_ref()).unwrap();
    }

    fn fail(&mut self, kind: &str, at: &str, lhs: &str, rhs: &str) {
        writeln!(self.report, "{kind}@{at} lhs={lhs} rhs={rhs}").unwrap();
        self.status = Some(Status::Violations);
    }
}

fn load(path: &Path) -> Result<Workspace> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Workspace::parse(&text).with_context(|| format!("loading {}", path.display()))
}

/// The named artifact of `kind`, or the only one when no name is given.
fn pick(ws: &Workspace, kinds: &[&str], name: Option<&str>) -> Result<String> {
    if let Some(n) = name {
        let art = ws.get(n).ok_or_else(|| CoreError::Unknown(n.to_string()))?;
        if !kinds.contains(&art.kind()) {
            bail!("`{n}` is a {}, expected {}", art.kind(), kinds.join(" or "));
        }
        return Ok(n.to_string());
    }
    let all: Vec<String> = kinds.iter().flat_map(|k| ws.names_of(k)).collect();
    match all.as_slice() {
        [one] => Ok(one.clone()),
        [] => bail!("no {} in the workspace", kinds.join(" or ")),
        _ => bail!("several candidates ({}); pass --name", all.join(", ")),
    }
}

fn pick_choice(ws: &Workspace, cover: &str, name: Option<&str>) -> Result<String> {
    if let Some(n) = name {
        let (c, _) = ws.choice(n)?;
        if c != cover {
            bail!("choice `{n}` is over `{c}`, expected `{cover}`");
        }
        return Ok(n.to_string());
    }
    ws.names_of("choice")
        .into_iter()
        .find(|n| ws.choice(n).map(|(c, _)| c == cover).unwrap_or(false))
        .ok_or_else(|| anyhow!("no section choice over `{cover}`; pass --choice"))
}

fn fresh(ws: &Workspace, name: Option<String>, default: String) -> Result<String> {
    let n = name.unwrap_or(default);
    if ws.get(&n).is_some() {
        bail!("name `{n}` already in use; pass --as");
    }
    Ok(n)
}

fn invertible_1(t: &TwoCategoryTable, cells: &[usize]) -> Option<usize> {
    cells.iter().position(|&g| inverse1(t, g).is_none())
}

fn invertible_2(t: &TwoCategoryTable, cells: &[usize]) -> Option<usize> {
    cells.iter().position(|&a| t.inv2(a).is_none())
}

fn validate_one(ws: &Workspace, name: &str, out: &mut Output) -> Result<()> {
    match ws.get(name).expect("picked from the workspace") {
        Artifact::Descent { frame, d } => {
            let cx = ws.context(frame)?;
            out.section(&format!("descent {name}"), &check_descent_object(d, &cx)?);
            out.note(format!("descent {name} normalized: {}", is_normalized(d, &cx)));
        }
        Artifact::Trivialized { frame, tf } => {
            let cx = ws.context(frame)?;
            out.section(&format!("trivialized {name}"), &tf.check(&cx)?);
        }
        Artifact::DescentMor { frame, source, target, m } => {
            let cx = ws.context(frame)?;
            let (_, d1) = ws.descent(source)?;
            let (_, d2) = ws.descent(target)?;
            out.section(&format!("descent-1mor {name}"), &check_descent_1mor(m, d1, d2, &cx)?);
        }
        Artifact::Transformation { source, target, a } => {
            let (frame, f1) = ws.trivialized(source)?;
            let (_, f2) = ws.trivialized(target)?;
            let cx = ws.context(frame)?;
            let r = check_path_transformation(a, &f1.f, &f2.f, cx.y(0), cx.t, cx.max_len)?;
            out.section(&format!("transformation {name}"), &r);
            if let Some(v) = invertible_1(cx.t, &a.comp0) {
                out.fail("invertible", &cx.y(0).vertices[v], &cx.t.one_label(a.comp0[v]), "no inverse");
            }
        }
        _ => {}
    }
    Ok(())
}

const CHECKABLE: [&str; 4] = ["descent", "trivialized", "descent-1mor", "transformation"];

fn cmd_validate(ws: &Workspace, name: Option<&str>, out: &mut Output) -> Result<()> {
    let names = match name {
        Some(_) => vec![pick(ws, &CHECKABLE, name)?],
        None => ws.items.iter().filter(|(_, a)| CHECKABLE.contains(&a.kind())).map(|(n, _)| n.clone()).collect(),
    };
    for n in names {
        validate_one(ws, &n, out)?;
    }
    Ok(())
}

fn cmd_extract(mut ws: Workspace, name: Option<&str>, as_name: Option<String>, out: &mut Output) -> Result<()> {
    let src = pick(&ws, &["trivialized", "transformation"], name)?;
    let new = fresh(&ws, as_name, format!("ex-{src}"))?;
    let mut extra = Vec::new();
    let art = match ws.get(&src).expect("picked") {
        Artifact::Trivialized { frame, tf } => {
            let cx = ws.context(frame)?;
            Artifact::Descent { frame: frame.clone(), d: extract(tf, &cx)? }
        }
        Artifact::Transformation { source, target, a } => {
            let (frame, f1) = ws.trivialized(source)?;
            let (_, f2) = ws.trivialized(target)?;
            let cx = ws.context(frame)?;
            let m = extract_1mor(a, f1, f2, &cx)?;
            let (ds, dt) = (format!("ex-{source}"), format!("ex-{target}"));
            for (n, f) in [(&ds, f1), (&dt, f2)] {
                if ws.get(n).is_none() {
                    extra.push((n.clone(), Artifact::Descent { frame: frame.clone(), d: extract(f, &cx)? }));
                }
            }
            Artifact::DescentMor { frame: frame.clone(), source: ds, target: dt, m }
        }
        _ => unreachable!(),
    };
    for (n, a) in extra {
        ws.insert(&n, a)?;
    }
    ws.insert(&new, art)?;
    out.note(format!("extracted {src} as {new}"));
    validate_one(&ws, &new, out)?;
    out.document = Some(ws.to_string());
    Ok(())
}

fn cmd_reconstruct(mut ws: Workspace, name: Option<&str>, choice: Option<&str>, as_name: Option<String>, out: &mut Output) -> Result<()> {
    let src = pick(&ws, &["descent"], name)?;
    let new = fresh(&ws, as_name, format!("rec-{src}"))?;
    let (frame, d) = ws.descent(&src)?;
    let ch = pick_choice(&ws, &frame.cover, choice)?;
    let tf = {
        let cx = ws.context(frame)?;
        let cd = Codescent::new(cx.tower);
        let s = LiftSection::new(&cd, ws.choice(&ch)?.1.clone())?;
        out.note(format!("reconstructed {src} with choice {ch} as {new}"));
        out.note(format!("descent {src} normalized: {}", is_normalized(d, &cx)));
        let tf = reconstruct(d, &cx, &s)?;
        out.note(format!("functor {new} normalized: {}", tf.f.is_normalized(cx.y(0), cx.t)));
        tf
    };
    let frame = frame.clone();
    ws.insert(&new, Artifact::Trivialized { frame, tf })?;
    validate_one(&ws, &new, out)?;
    out.document = Some(ws.to_string());
    Ok(())
}

fn cmd_roundtrip(mut ws: Workspace, dir: Direction, name: Option<&str>, choice: Option<&str>, out: &mut Output) -> Result<()> {
    match dir {
        Direction::ExRec => {
            let src = pick(&ws, &["descent"], name)?;
            let (rec_n, ex_n, rho_n) = (format!("rec-{src}"), format!("ex-rec-{src}"), format!("rho-{src}"));
            for n in [&rec_n, &ex_n, &rho_n] {
                fresh(&ws, None, n.clone())?;
            }
            let (frame, d) = ws.descent(&src)?;
            let ch = pick_choice(&ws, &frame.cover, choice)?;
            let frame = frame.clone();
            let (tf, ex, m) = {
                let cx = ws.context(&frame)?;
                let cd = Codescent::new(cx.tower);
                let s = LiftSection::new(&cd, ws.choice(&ch)?.1.clone())?;
                let tf = reconstruct(d, &cx, &s)?;
                let ex = extract(&tf, &cx)?;
                let m = rho(d, &cx, &s)?;
                out.note(format!("rho: {ex_n} -> {src} with choice {ch}"));
                out.section("rho", &check_descent_1mor(&m, &ex, d, &cx)?);
                if let Some(p) = invertible_2(cx.t, &m.eps.comp) {
                    out.fail("invertible", cx.label(2, p), &cx.t.two_label(m.eps.comp[p]), "no inverse");
                }
                let id = PathTransformation::identity(&cx.post(&d.triv)?, cx.t);
                if forget_v_1mor(&m) != &id {
                    out.fail("V(rho)", "Y", "not identity", "identity");
                } else {
                    out.note("V(rho) = identity");
                }
                (tf, ex, m)
            };
            ws.insert(&rec_n, Artifact::Trivialized { frame: frame.clone(), tf })?;
            ws.insert(&ex_n, Artifact::Descent { frame: frame.clone(), d: ex })?;
            ws.insert(&rho_n, Artifact::DescentMor { frame, source: ex_n, target: src, m })?;
        }
        Direction::RecEx => {
            let src = pick(&ws, &["trivialized"], name)?;
            let (ex_n, rec_n, eta_n) = (format!("ex-{src}"), format!("rec-ex-{src}"), format!("eta-{src}"));
            for n in [&ex_n, &rec_n, &eta_n] {
                fresh(&ws, None, n.clone())?;
            }
            let (frame, tf) = ws.trivialized(&src)?;
            let ch = pick_choice(&ws, &frame.cover, choice)?;
            let frame = frame.clone();
            let (d, rec, e) = {
                let cx = ws.context(&frame)?;
                let cd = Codescent::new(cx.tower);
                let s = LiftSection::new(&cd, ws.choice(&ch)?.1.clone())?;
                let d = extract(tf, &cx)?;
                let rec = reconstruct(&d, &cx, &s)?;
                let e = eta(tf, &d, &cx, &s)?;
                out.note(format!("eta: {src} -> {rec_n} with choice {ch}"));
                out.section("eta", &check_path_transformation(&e, &tf.f, &rec.f, cx.y(0), cx.t, cx.max_len)?);
                if let Some(v) = invertible_1(cx.t, &e.comp0) {
                    out.fail("invertible", &cx.y(0).vertices[v], &cx.t.one_label(e.comp0[v]), "no inverse");
                }
                (d, rec, e)
            };
            ws.insert(&ex_n, Artifact::Descent { frame: frame.clone(), d })?;
            ws.insert(&rec_n, Artifact::Trivialized { frame, tf: rec })?;
            ws.insert(&eta_n, Artifact::Transformation { source: src, target: rec_n, a: e })?;
        }
    }
    out.document = Some(ws.to_string());
    Ok(())
}

fn show(t: &TwoCategoryTable, c: Cell) -> String {
    match c {
        Cell::One(f) => t.one_label(f).to_string(),
        Cell::Two(a) => t.two_label(a).to_string(),
    }
}

fn cmd_holonomy(ws: &Workspace, name: Option<&str>, query: Option<&str>, choice: Option<&str>, out: &mut Output) -> Result<()> {
    let src = pick(ws, &["trivialized", "descent"], name)?;
    let (frame, f) = match ws.get(&src).expect("picked") {
        Artifact::Trivialized { frame, tf } => (frame, tf.f.clone()),
        Artifact::Descent { frame, d } => {
            let ch = pick_choice(ws, &frame.cover, choice)?;
            let cx = ws.context(frame)?;
            let cd = Codescent::new(cx.tower);
            let s = LiftSection::new(&cd, ws.choice(&ch)?.1.clone())?;
            out.note(format!("{src} reconstructed with choice {ch}"));
            (frame, reconstruct(d, &cx, &s)?.f)
        }
        _ => unreachable!(),
    };
    let base_name = &ws.cover(&frame.cover)?.base;
    let base = ws.computad(base_name)?;
    let t = ws.table(&frame.target)?;
    let queries: Vec<String> = match query {
        Some(q) => vec![q.to_string()],
        None => ws.items.iter().filter(|(_, a)| matches!(a, Artifact::Query { base: b, .. } if b == base_name)).map(|(n, _)| n.clone()).collect(),
    };
    if queries.is_empty() {
        bail!("no queries over `{base_name}`");
    }
    for qn in queries {
        let Some(Artifact::Query { base: b, q }) = ws.get(&qn) else {
            bail!(CoreError::Unknown(format!("query `{qn}`")));
        };
        if b != base_name {
            bail!("query `{qn}` is over `{b}`, not `{base_name}`");
        }
        writeln!(out.report, "{qn} = {}", show(t, holonomy(&f, base, t, q)?)).unwrap();
    }
    Ok(())
}

fn cmd_refine(mut ws: Workspace, name: Option<&str>, refinement: Option<&str>, as_name: Option<String>, out: &mut Output) -> Result<()> {
    let src = pick(&ws, &["descent"], name)?;
    let rn = pick(&ws, &["refinement"], refinement)?;
    let new = fresh(&ws, as_name, format!("{src}-{rn}"))?;
    let Some(Artifact::Refinement { from, to, r }) = ws.get(&rn) else { unreachable!() };
    let (frame, d) = ws.descent(&src)?;
    if &frame.cover != to {
        bail!("refinement `{rn}` ends at `{to}` but `{src}` lives over `{}`", frame.cover);
    }
    let restricted = restrict(r, &ws.cover(from)?.tower, &ws.cover(to)?.tower, d);
    let frame = ws.frame(from, &frame.gr, &frame.target, frame.i)?;
    ws.insert(&new, Artifact::Descent { frame, d: restricted })?;
    out.note(format!("restricted {src} along {rn} as {new}"));
    validate_one(&ws, &new, out)?;
    out.document = Some(ws.to_string());
    Ok(())
}

fn cmd_axioms(ws: &Workspace, out: &mut Output) -> Result<()> {
    for n in ws.names_of("target") {
        out.section(&format!("target {n}"), &check_two_category(ws.table(&n)?));
    }
    let mut seen = Vec::new();
    for (_, a) in &ws.items {
        let frame = match a {
            Artifact::Descent { frame, .. } | Artifact::Trivialized { frame, .. } | Artifact::DescentMor { frame, .. } => frame,
            _ => continue,
        };
        let key = (frame.gr.clone(), frame.target.clone(), frame.i);
        if seen.contains(&key) {
            continue;
        }
        let r = check_two_functor(&frame.i_data, ws.table(&frame.gr)?, ws.table(&frame.target)?)?;
        let kind = match frame.i {
            FunctorSpec::Identity => "identity",
            FunctorSpec::Unit => "unit",
        };
        out.section(&format!("functor i: {} -> {} ({kind})", frame.gr, frame.target), &r);
        seen.push(key);
    }
    Ok(())
}

/// Runs one command; errors are parse, typing or reference failures.
pub fn run(cli: Cli) -> Result<(Output, Option<PathBuf>, Option<PathBuf>)> {
    let mut out = Output::default();
    let (out_path, report_path) = match cli.command {
        Command::Example { which, seed, out: path } => {
            out.document = Some(example(&which, seed)?.to_string());
            (path, None)
        }
        Command::Validate { io, name } => {
            cmd_validate(&load(&io.input)?, name.as_deref(), &mut out)?;
            (io.out, io.report)
        }
        Command::Extract { io, name, as_name } => {
            cmd_extract(load(&io.input)?, name.as_deref(), as_name, &mut out)?;
            (io.out, io.report)
        }
        Command::Reconstruct { io, name, choice, as_name } => {
            cmd_reconstruct(load(&io.input)?, name.as_deref(), choice.as_deref(), as_name, &mut out)?;
            (io.out, io.report)
        }
        Command::Roundtrip { direction, io, name, choice } => {
            cmd_roundtrip(load(&io.input)?, direction, name.as_deref(), choice.as_deref(), &mut out)?;
            (io.out, io.report)
        }
        Command::Holonomy { io, name, query, choice } => {
            cmd_holonomy(&load(&io.input)?, name.as_deref(), query.as_deref(), choice.as_deref(), &mut out)?;
            (io.out, io.report)
        }
        Command::Refine { io, name, refinement, as_name } => {
            cmd_refine(load(&io.input)?, name.as_deref(), refinement.as_deref(), as_name, &mut out)?;
            (io.out, io.report)
        }
        Command::Axioms { io } => {
            cmd_axioms(&load(&io.input)?, &mut out)?;
            (io.out, io.report)
        }
    };
    Ok((out, out_path, report_path))
}

/// Runs and writes the outputs; returns the exit status.
pub fn main_with(cli: Cli) -> Status {
    let (out, out_path, report_path) = match run(cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Status::Invalid;
        }
    };
    let mut stdout = String::new();
    if let Some(doc) = &out.document {
        match &out_path {
            Some(p) => {
                if let Err(e) = std::fs::write(p, doc) {
                    eprintln!("error: writing {}: {e}", p.display());
                    return Status::Invalid;
                }
            }
            None => stdout.push_str(doc),
        }
    }
    match &report_path {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &out.report) {
                eprintln!("error: writing {}: {e}", p.display());
                return Status::Invalid;
            }
        }
        None => stdout.push_str(&out.report),
    }
    print!("{stdout}");
    out.status.unwrap_or(Status::Ok)
}
