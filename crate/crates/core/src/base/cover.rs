use std::collections::BTreeSet;

use crate::error::{CoreError, Result};

use super::computad::Computad;
use super::path::edge_of;

/// A subset of cells closed under taking boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Patch {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<usize>,
    pub faces: BTreeSet<usize>,
}

impl Patch {
    /// The smallest patch containing the given cells.
    pub fn closure(cx: &Computad, vertices: &[usize], edges: &[usize], faces: &[usize]) -> Self {
        let mut p = Patch {
            vertices: vertices.iter().copied().collect(),
            edges: edges.iter().copied().collect(),
            faces: faces.iter().copied().collect(),
        };
        for &f in faces {
            let face = &cx.faces[f];
            for &l in face.src.letters.iter().chain(&face.tgt.letters) {
                p.edges.insert(edge_of(l));
            }
            p.vertices.insert(face.src.start);
        }
        for &e in &p.edges.clone() {
            p.vertices.insert(cx.edges[e].src);
            p.vertices.insert(cx.edges[e].tgt);
        }
        p
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
    pub fn has_edge(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }
    pub fn has_face(&self, f: usize) -> bool {
        self.faces.contains(&f)
    }
}

/// A finite cover of a computad by patches; `Y` is their disjoint union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    pub name: String,
    pub patches: Vec<Patch>,
}

impl CoverSpec {
    pub fn new(cx: &Computad, name: impl Into<String>, patches: Vec<Patch>) -> Result<Self> {
        let c = CoverSpec { name: name.into(), patches };
        c.validate(cx)?;
        Ok(c)
    }

    /// Closure under boundaries and coverage of every cell.
    pub fn validate(&self, cx: &Computad) -> Result<()> {
        if self.patches.is_empty() {
            return Err(CoreError::Validation("cover has no patches".into()));
        }
        for (i, p) in self.patches.iter().enumerate() {
            let out = |what: String| Err(CoreError::Validation(format!("patch {i} is not closed: {what}")));
            if p.vertices.iter().any(|&v| v >= cx.vertices.len())
                || p.edges.iter().any(|&e| e >= cx.edges.len())
                || p.faces.iter().any(|&f| f >= cx.faces.len())
            {
                return Err(CoreError::Validation(format!("patch {i} names an unknown cell")));
            }
            for &e in &p.edges {
                let ed = &cx.edges[e];
                if !p.has_vertex(ed.src) || !p.has_vertex(ed.tgt) {
                    return out(format!("edge `{}` lacks an endpoint", ed.label));
                }
            }
            for &f in &p.faces {
                let face = &cx.faces[f];
                if face.src.letters.iter().chain(&face.tgt.letters).any(|&l| !p.has_edge(edge_of(l)))
                    || !p.has_vertex(face.src.start)
                {
                    return out(format!("face `{}` lacks a boundary edge", face.label));
                }
            }
        }
        for (v, name) in cx.vertices.iter().enumerate() {
            if !self.patches.iter().any(|p| p.has_vertex(v)) {
                return Err(CoreError::Validation(format!("cover misses vertex `{name}`")));
            }
        }
        for (e, ed) in cx.edges.iter().enumerate() {
            if !self.patches.iter().any(|p| p.has_edge(e)) {
                return Err(CoreError::Validation(format!("cover misses edge `{}`", ed.label)));
            }
        }
        for (f, face) in cx.faces.iter().enumerate() {
            if !self.patches.iter().any(|p| p.has_face(f)) {
                return Err(CoreError::Validation(format!("cover misses face `{}`", face.label)));
            }
        }
        Ok(())
    }

    pub fn patches_with_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.patches.len()).filter(|&i| self.patches[i].has_vertex(v)).collect()
    }
    pub fn patches_with_edge(&self, e: usize) -> Vec<usize> {
        (0..self.patches.len()).filter(|&i| self.patches[i].has_edge(e)).collect()
    }
    pub fn patches_with_face(&self, f: usize) -> Vec<usize> {
        (0..self.patches.len()).filter(|&i| self.patches[i].has_face(f)).collect()
    }

    /// The whole computad as one patch.
    pub fn single(cx: &Computad) -> Self {
        let all: Vec<usize> = (0..cx.faces.len()).collect();
        let ev: Vec<usize> = (0..cx.edges.len()).collect();
        let vv: Vec<usize> = (0..cx.vertices.len()).collect();
        CoverSpec { name: "single".into(), patches: vec![Patch::closure(cx, &vv, &ev, &all)] }
    }

    /// Two arcs of the hexagon: `v0..v4` and `v3..v1` through `v5`.
    pub fn c6_arcs(cx: &Computad) -> Self {
        let a = Patch::closure(cx, &[], &[0, 1, 2, 3], &[]);
        let b = Patch::closure(cx, &[], &[3, 4, 5, 0], &[]);
        CoverSpec::new(cx, "arcs", vec![a, b]).expect("C6 arcs")
    }

    /// Four 2×2 blocks of faces of the 3×3 torus, anchored at (0,0), (1,0), (0,1), (1,1).
    pub fn torus_blocks(cx: &Computad) -> Self {
        let face = |i: usize, j: usize| cx.find_face(&format!("F{}{}", i % 3, j % 3)).expect("torus face");
        let patches = [(0, 0), (1, 0), (0, 1), (1, 1)]
            .iter()
            .map(|&(a, b)| {
                let fs = [face(a, b), face(a + 1, b), face(a, b + 1), face(a + 1, b + 1)];
                Patch::closure(cx, &[], &[], &fs)
            })
            .collect();
        CoverSpec::new(cx, "blocks", patches).expect("torus blocks")
    }

    /// Patch `k` of the octahedron holds the faces `Uk, Lk, U(k+1), L(k+1)`.
    pub fn octahedron_wedges(cx: &Computad) -> Self {
        let f = |n: &str| cx.find_face(n).expect("octahedron face");
        let patches = (0..4)
            .map(|k| {
                let k1 = (k + 1) % 4;
                let fs = [f(&format!("U{k}")), f(&format!("L{k}")), f(&format!("U{k1}")), f(&format!("L{k1}"))];
                Patch::closure(cx, &[], &[], &fs)
            })
            .collect();
        CoverSpec::new(cx, "wedges", patches).expect("octahedron wedges")
    }
}
