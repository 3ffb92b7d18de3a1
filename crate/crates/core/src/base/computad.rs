use crate::error::{CoreError, Result};

use super::path::{edge_of, is_inverse, is_reduced, letter, Letter, PathTerm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub src: usize,
    pub tgt: usize,
}

/// A combinatorial bigon `src ⇒ tgt` between co-terminal reduced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub label: String,
    pub src: PathTerm,
    pub tgt: PathTerm,
}

/// Vertices, directed edges and bigon faces generating a free 2-groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Computad {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

impl Computad {
    pub fn new(name: impl Into<String>, vertices: Vec<String>, edges: Vec<Edge>, faces: Vec<Face>) -> Result<Self> {
        let cx = Computad { name: name.into(), vertices, edges, faces };
        cx.validate()?;
        Ok(cx)
    }

    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        for e in &self.edges {
            if e.src >= nv || e.tgt >= nv {
                return Err(CoreError::Validation(format!("edge `{}` has an unknown endpoint", e.label)));
            }
        }
        for f in &self.faces {
            let bad = |m: &str| Err(CoreError::Validation(format!("face `{}`: {m}", f.label)));
            if !is_reduced(&f.src.letters) || !is_reduced(&f.tgt.letters) {
                return bad("boundary words must be reduced");
            }
            let s_end = self.walk(f.src.start, &f.src.letters);
            let t_end = self.walk(f.tgt.start, &f.tgt.letters);
            match (s_end, t_end) {
                (Ok(a), Ok(b)) if a == b && f.src.start == f.tgt.start => {}
                (Ok(_), Ok(_)) => return bad("boundary words are not co-terminal"),
                _ => return bad("boundary word is ill-typed"),
            }
        }
        Ok(())
    }

    pub fn letter_src(&self, l: Letter) -> usize {
        let e = &self.edges[edge_of(l)];
        if is_inverse(l) { e.tgt } else { e.src }
    }

    pub fn letter_tgt(&self, l: Letter) -> usize {
        let e = &self.edges[edge_of(l)];
        if is_inverse(l) { e.src } else { e.tgt }
    }

    pub fn n_letters(&self) -> usize {
        2 * self.edges.len()
    }

    /// End vertex of the walk, or a typing error at the first break.
    pub fn walk(&self, start: usize, letters: &[Letter]) -> Result<usize> {
        if start >= self.vertices.len() {
            return Err(CoreError::typing("path", "unknown start vertex"));
        }
        let mut at = start;
        for (i, &l) in letters.iter().enumerate() {
            if edge_of(l) >= self.edges.len() {
                return Err(CoreError::typing(format!("letter {i}"), "unknown edge"));
            }
            if self.letter_src(l) != at {
                return Err(CoreError::typing(
                    format!("letter {i} ({})", self.letter_label(l)),
                    format!("does not start at {}", self.vertices[at]),
                ));
            }
            at = self.letter_tgt(l);
        }
        Ok(at)
    }

    pub fn letter_label(&self, l: Letter) -> String {
        let name = &self.edges[edge_of(l)].label;
        if is_inverse(l) { format!("~{name}") } else { name.clone() }
    }

    /// `e1.~e2.e3`, or `1` for the empty word.
    pub fn word_label(&self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "1".into();
        }
        letters.iter().map(|&l| self.letter_label(l)).collect::<Vec<_>>().join(".")
    }

    pub fn find_vertex(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }
    pub fn find_edge(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }
    pub fn find_face(&self, label: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.label == label)
    }

    /// Parses `e1.~e2` (or `1`) into letters.
    pub fn parse_word(&self, s: &str) -> Result<Vec<Letter>> {
        if s == "1" {
            return Ok(Vec::new());
        }
        s.split('.')
            .map(|tok| {
                let (name, inv) = match tok.strip_prefix('~') {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                self.find_edge(name).map(|e| letter(e, inv)).ok_or_else(|| CoreError::Unknown(name.to_string()))
            })
            .collect()
    }

    /// Letters leaving `v`.
    pub fn letters_from(&self, v: usize) -> impl Iterator<Item = Letter> + '_ {
        (0..self.n_letters()).filter(move |&l| self.letter_src(l) == v)
    }

    /// All reduced words from `v` of length at most `max_len`, shortest first.
    pub fn words_from(&self, v: usize, max_len: usize) -> Vec<PathTerm> {
        let mut out = vec![PathTerm::empty(v)];
        let mut frontier = vec![(Vec::<Letter>::new(), v)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (w, at) in &frontier {
                for l in self.letters_from(*at) {
                    if w.last() == Some(&(l ^ 1)) {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2.push(l);
                    out.push(PathTerm { start: v, letters: w2.clone() });
                    next.push((w2, self.letter_tgt(l)));
                }
            }
            frontier = next;
        }
        out
    }

    /// Every literal occurrence of a face boundary in `word`, as rewrite steps.
    pub fn literal_steps(&self, word: &[Letter]) -> Vec<super::path::BigonStep> {
        let mut out = Vec::new();
        for (fi, f) in self.faces.iter().enumerate() {
            for (inverse, pat) in [(false, &f.src.letters), (true, &f.tgt.letters)] {
                if pat.is_empty() {
                    continue;
                }
                for i in 0..word.len().saturating_sub(pat.len() - 1) {
                    if word[i..i + pat.len()] == pat[..] {
                        out.push(super::path::BigonStep {
                            prefix: word[..i].to_vec(),
                            face: fi,
                            inverse,
                            suffix: word[i + pat.len()..].to_vec(),
                        });
                    }
                }
            }
        }
        out
    }

    /// A single vertex.
    pub fn point() -> Self {
        Computad { name: "point".into(), vertices: vec!["p".into()], edges: Vec::new(), faces: Vec::new() }
    }

    /// The hexagon circle `v0 → v1 → … → v5 → v0`.
    pub fn c6() -> Self {
        let vertices = (0..6).map(|i| format!("v{i}")).collect();
        let edges = (0..6).map(|i| Edge { label: format!("e{i}"), src: i, tgt: (i + 1) % 6 }).collect();
        Computad::new("C6", vertices, edges, Vec::new()).expect("C6")
    }

    /// An `n×m` square grid; periodic in both directions when `torus`.
    ///
    /// Vertex `(i,j)` is `v{i}{j}`, `h{i}{j}: (i,j) → (i+1,j)`, `u{i}{j}: (i,j) → (i,j+1)`,
    /// and face `F{i}{j}: h{i}{j}.u{i+1}{j} ⇒ u{i}{j}.h{i}{j+1}`.
    pub fn grid(n: usize, m: usize, torus: bool) -> Self {
        let (nv, mv) = if torus { (n, m) } else { (n + 1, m + 1) };
        let vid = |i: usize, j: usize| (i % nv) * mv + (j % mv);
        let vertices = (0..nv * mv).map(|k| format!("v{}{}", k / mv, k % mv)).collect();
        let mut edges = Vec::new();
        let mut h = vec![usize::MAX; nv * mv];
        let mut u = vec![usize::MAX; nv * mv];
        for i in 0..nv {
            for j in 0..mv {
                if torus || i < n {
                    h[vid(i, j)] = edges.len();
                    edges.push(Edge { label: format!("h{i}{j}"), src: vid(i, j), tgt: vid(i + 1, j) });
                }
                if torus || j < m {
                    u[vid(i, j)] = edges.len();
                    edges.push(Edge { label: format!("u{i}{j}"), src: vid(i, j), tgt: vid(i, j + 1) });
                }
            }
        }
        let mut faces = Vec::new();
        for i in 0..n {
            for j in 0..m {
                let w = |a: usize, b: usize| vec![letter(a, false), letter(b, false)];
                faces.push(Face {
                    label: format!("F{i}{j}"),
                    src: PathTerm { start: vid(i, j), letters: w(h[vid(i, j)], u[vid(i + 1, j)]) },
                    tgt: PathTerm { start: vid(i, j), letters: w(u[vid(i, j)], h[vid(i, j + 1)]) },
                });
            }
        }
        let name = if torus { format!("torus{n}x{m}") } else { format!("grid{n}x{m}") };
        Computad::new(name, vertices, edges, faces).expect("grid")
    }

    /// The octahedron sphere: poles `N`, `S`, equator `E0..E3`.
    ///
    /// Edges `a{k}: N → Ek`, `b{k}: Ek → S`, `c{k}: Ek → E{k+1}`; faces
    /// `U{k}: a{k}.c{k} ⇒ a{k+1}` and `L{k}: c{k}.b{k+1} ⇒ b{k}`.
    pub fn octahedron() -> Self {
        let mut vertices = vec!["N".to_string(), "S".to_string()];
        vertices.extend((0..4).map(|k| format!("E{k}")));
        let e = |k: usize| 2 + (k % 4);
        let mut edges = Vec::new();
        for k in 0..4 {
            edges.push(Edge { label: format!("a{k}"), src: 0, tgt: e(k) });
        }
        for k in 0..4 {
            edges.push(Edge { label: format!("b{k}"), src: e(k), tgt: 1 });
        }
        for k in 0..4 {
            edges.push(Edge { label: format!("c{k}"), src: e(k), tgt: e(k + 1) });
        }
        let (a, b, c) = (|k: usize| letter(k % 4, false), |k: usize| letter(4 + k % 4, false), |k: usize| letter(8 + k % 4, false));
        let mut faces = Vec::new();
        for k in 0..4 {
            faces.push(Face {
                label: format!("U{k}"),
                src: PathTerm { start: 0, letters: vec![a(k), c(k)] },
                tgt: PathTerm { start: 0, letters: vec![a(k + 1)] },
            });
        }
        for k in 0..4 {
            faces.push(Face {
                label: format!("L{k}"),
                src: PathTerm { start: e(k), letters: vec![c(k), b(k + 1)] },
                tgt: PathTerm { start: e(k), letters: vec![b(k)] },
            });
        }
        Computad::new("octahedron", vertices, edges, faces).expect("octahedron")
    }
}
