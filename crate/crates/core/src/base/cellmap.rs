use crate::error::{CoreError, Result};

use super::computad::Computad;
use super::path::{edge_of, is_inverse, letter, BigonStep, BigonTerm, Letter, PathTerm};

/// A cellular map sending vertices, edges and faces to cells of the same dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellMap {
    pub vert: Vec<usize>,
    pub edge: Vec<usize>,
    pub face: Vec<usize>,
}

impl CellMap {
    pub fn identity(cx: &Computad) -> Self {
        CellMap {
            vert: (0..cx.vertices.len()).collect(),
            edge: (0..cx.edges.len()).collect(),
            face: (0..cx.faces.len()).collect(),
        }
    }

    /// Checks that boundaries are carried to boundaries.
    pub fn typecheck(&self, from: &Computad, to: &Computad) -> Result<()> {
        if self.vert.len() != from.vertices.len() || self.edge.len() != from.edges.len() || self.face.len() != from.faces.len() {
            return Err(CoreError::typing("cell map", "sizes do not match the source"));
        }
        for (e, ed) in from.edges.iter().enumerate() {
            let img = self.edge[e];
            if img >= to.edges.len() || to.edges[img].src != self.vert[ed.src] || to.edges[img].tgt != self.vert[ed.tgt] {
                return Err(CoreError::typing(format!("edge {}", ed.label), "non-cellular image"));
            }
        }
        for (f, face) in from.faces.iter().enumerate() {
            let img = self.face[f];
            if img >= to.faces.len() {
                return Err(CoreError::typing(format!("face {}", face.label), "unknown image"));
            }
            let tf = &to.faces[img];
            if self.path(&face.src) != tf.src || self.path(&face.tgt) != tf.tgt {
                return Err(CoreError::typing(format!("face {}", face.label), "non-cellular image"));
            }
        }
        Ok(())
    }

    pub fn letter(&self, l: Letter) -> Letter {
        letter(self.edge[edge_of(l)], is_inverse(l))
    }

    pub fn word(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter().map(|&l| self.letter(l)).collect()
    }

    /// `f_*` on 1-cells; edges go to edges so reduced words stay reduced.
    pub fn path(&self, p: &PathTerm) -> PathTerm {
        PathTerm { start: self.vert[p.start], letters: self.word(&p.letters) }
    }

    /// `f_*` on 2-cells, step by step.
    pub fn bigon(&self, b: &BigonTerm) -> BigonTerm {
        BigonTerm {
            source: self.path(&b.source),
            steps: b
                .steps
                .iter()
                .map(|s| BigonStep {
                    prefix: self.word(&s.prefix),
                    face: self.face[s.face],
                    inverse: s.inverse,
                    suffix: self.word(&s.suffix),
                })
                .collect(),
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &CellMap) -> CellMap {
        CellMap {
            vert: first.vert.iter().map(|&v| self.vert[v]).collect(),
            edge: first.edge.iter().map(|&e| self.edge[e]).collect(),
            face: first.face.iter().map(|&f| self.face[f]).collect(),
        }
    }
}
