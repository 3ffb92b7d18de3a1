use std::collections::HashMap;

use crate::error::{CoreError, Result};

use super::cellmap::CellMap;
use super::computad::{Computad, Edge, Face};
use super::cover::CoverSpec;
use super::path::{edge_of, is_inverse, letter, PathTerm};

/// The k-fold fibre product `Y^[k]`: cells `(i₁,…,i_k, c)` with `c` in every `U_{i_j}`.
///
/// For `k = 0` this is the base itself.
#[derive(Debug, Clone)]
pub struct FiberSpace {
    pub k: usize,
    pub cx: Computad,
    pub vertex_points: Vec<(Vec<usize>, usize)>,
    pub edge_points: Vec<(Vec<usize>, usize)>,
    pub face_points: Vec<(Vec<usize>, usize)>,
    vertex_index: HashMap<(Vec<usize>, usize), usize>,
    edge_index: HashMap<(Vec<usize>, usize), usize>,
    face_index: HashMap<(Vec<usize>, usize), usize>,
}

fn tuples(options: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |&o| {
                    let mut t2 = t.clone();
                    t2.push(o);
                    t2
                })
            })
            .collect();
    }
    out
}

fn tuple_label(t: &[usize]) -> String {
    t.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl FiberSpace {
    pub fn build(base: &Computad, cover: &CoverSpec, k: usize) -> Self {
        let mut vertex_points = Vec::new();
        let mut edge_points = Vec::new();
        let mut face_points = Vec::new();
        for v in 0..base.vertices.len() {
            let opts = if k == 0 { vec![] } else { cover.patches_with_vertex(v) };
            for t in tuples(&opts, k) {
                vertex_points.push((t, v));
            }
        }
        for e in 0..base.edges.len() {
            let opts = if k == 0 { vec![] } else { cover.patches_with_edge(e) };
            for t in tuples(&opts, k) {
                edge_points.push((t, e));
            }
        }
        for f in 0..base.faces.len() {
            let opts = if k == 0 { vec![] } else { cover.patches_with_face(f) };
            for t in tuples(&opts, k) {
                face_points.push((t, f));
            }
        }
        let index = |pts: &[(Vec<usize>, usize)]| pts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let vertex_index: HashMap<_, _> = index(&vertex_points);
        let edge_index: HashMap<_, _> = index(&edge_points);
        let face_index: HashMap<_, _> = index(&face_points);

        let label = |t: &[usize], name: &str| if k == 0 { name.to_string() } else { format!("{name}@{}", tuple_label(t)) };
        let vertices = vertex_points.iter().map(|(t, v)| label(t, &base.vertices[*v])).collect();
        let edges = edge_points
            .iter()
            .map(|(t, e)| {
                let be = &base.edges[*e];
                Edge { label: label(t, &be.label), src: vertex_index[&(t.clone(), be.src)], tgt: vertex_index[&(t.clone(), be.tgt)] }
            })
            .collect();
        let lift = |t: &Vec<usize>, p: &PathTerm| PathTerm {
            start: vertex_index[&(t.clone(), p.start)],
            letters: p
                .letters
                .iter()
                .map(|&l| letter(edge_index[&(t.clone(), edge_of(l))], is_inverse(l)))
                .collect(),
        };
        let faces = face_points
            .iter()
            .map(|(t, f)| {
                let bf = &base.faces[*f];
                Face { label: label(t, &bf.label), src: lift(t, &bf.src), tgt: lift(t, &bf.tgt) }
            })
            .collect();
        let cx = Computad {
            name: if k == 0 { base.name.clone() } else { format!("{}[{k}]", base.name) },
            vertices,
            edges,
            faces,
        };
        FiberSpace { k, cx, vertex_points, edge_points, face_points, vertex_index, edge_index, face_index }
    }

    pub fn vertex(&self, tuple: &[usize], v: usize) -> Option<usize> {
        self.vertex_index.get(&(tuple.to_vec(), v)).copied()
    }
    pub fn edge(&self, tuple: &[usize], e: usize) -> Option<usize> {
        self.edge_index.get(&(tuple.to_vec(), e)).copied()
    }
    pub fn face(&self, tuple: &[usize], f: usize) -> Option<usize> {
        self.face_index.get(&(tuple.to_vec(), f)).copied()
    }

    /// Base cell and patch tuple of a vertex.
    pub fn vpoint(&self, v: usize) -> (&[usize], usize) {
        let (t, b) = &self.vertex_points[v];
        (t, *b)
    }
}

/// `M = Y^[0]` together with `Y^[1..=4]`.
#[derive(Debug, Clone)]
pub struct FiberTower {
    pub cover: CoverSpec,
    pub spaces: Vec<FiberSpace>,
}

pub const MAX_FIBER: usize = 4;

/// Builds `Y^[k]` for `k ≤ 4`.
pub fn build_fiber_spaces(base: &Computad, cover: &CoverSpec) -> Result<FiberTower> {
    base.validate()?;
    cover.validate(base)?;
    let spaces = (0..=MAX_FIBER).map(|k| FiberSpace::build(base, cover, k)).collect();
    Ok(FiberTower { cover: cover.clone(), spaces })
}

impl FiberTower {
    pub fn base(&self) -> &Computad {
        &self.spaces[0].cx
    }

    pub fn space(&self, k: usize) -> &FiberSpace {
        &self.spaces[k]
    }

    /// The cell map `Y^[k] → Y^[phi.len()]` picking tuple positions `phi` (0-based).
    pub fn index_map(&self, k: usize, phi: &[usize]) -> Result<CellMap> {
        if k > MAX_FIBER || phi.len() > MAX_FIBER || phi.iter().any(|&i| i >= k) {
            return Err(CoreError::typing(format!("index map {k}→{:?}", phi), "positions out of range"));
        }
        let (from, to) = (&self.spaces[k], &self.spaces[phi.len()]);
        let pick = |t: &[usize]| phi.iter().map(|&i| t[i]).collect::<Vec<_>>();
        let vert = from.vertex_points.iter().map(|(t, v)| to.vertex(&pick(t), *v).expect("vertex image")).collect();
        let edge = from.edge_points.iter().map(|(t, e)| to.edge(&pick(t), *e).expect("edge image")).collect();
        let face = from.face_points.iter().map(|(t, f)| to.face(&pick(t), *f).expect("face image")).collect();
        Ok(CellMap { vert, edge, face })
    }

    /// `π: Y^[k] → M`.
    pub fn to_base(&self, k: usize) -> CellMap {
        self.index_map(k, &[]).expect("projection to the base")
    }

    /// `Y^[k]` vertex over base vertex `v` with tuple `t`, panicking on a mismatch.
    pub fn pt(&self, t: &[usize], v: usize) -> usize {
        self.spaces[t.len()].vertex(t, v).unwrap_or_else(|| panic!("no point {:?} over vertex {v}", t))
    }

    /// Converts a patch-local base path to a path in `Y` for patch `i`.
    pub fn lift_path(&self, i: usize, p: &PathTerm) -> Option<PathTerm> {
        let y = &self.spaces[1];
        Some(PathTerm {
            start: y.vertex(&[i], p.start)?,
            letters: p
                .letters
                .iter()
                .map(|&l| y.edge(&[i], edge_of(l)).map(|e| letter(e, is_inverse(l))))
                .collect::<Option<Vec<_>>>()?,
        })
    }
}
