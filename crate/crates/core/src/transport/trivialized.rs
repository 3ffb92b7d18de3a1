use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base::{
    check_path_functor, check_path_modification, check_path_transformation, inverse1, PathFunctor, PathModification, PathTransformation,
};
use crate::descent::DescentContext;
use crate::error::{CoreError, Result};
use crate::report::Report;
use crate::twocat::{EquivalenceBundle, TwoCategoryTable, C1, C2};

/// The trivialization bundle: `t: π*F → triv_i`, `t̄`, `i_t: t̄∘t ⇒ id`, `j_t: id ⇒ t∘t̄`.
pub type TransformationBundle = EquivalenceBundle<PathTransformation, PathModification>;

/// A functor `F: P₂(M) → T` with a local trivialization `(triv, t)` over `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivializedFunctor {
    pub f: PathFunctor,
    pub triv: PathFunctor,
    pub t: TransformationBundle,
}

fn prefixed(mut r: Report, what: &str) -> Report {
    for v in &mut r.violations {
        v.at = format!("{what} {}", v.at);
    }
    r
}

impl TrivializedFunctor {
    /// `π*F`.
    pub fn pulled(&self, cx: &DescentContext) -> PathFunctor {
        self.f.pullback(cx.y(1), &cx.tower.to_base(1))
    }

    /// Functor, transformation and modification axioms, invertibility and both zigzags.
    pub fn check(&self, cx: &DescentContext) -> Result<Report> {
        let t = cx.t;
        let (m, y) = (cx.y(0), cx.y(1));
        let mut r = prefixed(check_path_functor(&self.f, m, t, cx.max_len)?, "F");
        r.extend(prefixed(check_path_functor(&self.triv, y, cx.gr, cx.max_len)?, "triv"));
        let pf = self.pulled(cx);
        let ti = cx.post(&self.triv)?;
        let b = &self.t;
        r.extend(prefixed(check_path_transformation(&b.forward, &pf, &ti, y, t, cx.max_len)?, "t"));
        r.extend(prefixed(check_path_transformation(&b.inverse, &ti, &pf, y, t, cx.max_len)?, "t̄"));
        let tt = PathTransformation::compose(&b.inverse, &b.forward, &pf, y, t)?;
        let tbt = PathTransformation::compose(&b.forward, &b.inverse, &ti, y, t)?;
        r.extend(prefixed(check_path_modification(&b.i, &tt, &PathTransformation::identity(&pf, t), &pf, &pf, y, t)?, "i_t"));
        r.extend(prefixed(check_path_modification(&b.j, &PathTransformation::identity(&ti, t), &tbt, &ti, &ti, y, t)?, "j_t"));
        for a in 0..y.vertices.len() {
            let (f, g) = (b.forward.comp0[a], b.inverse.comp0[a]);
            let (i, j) = (b.i.comp[a], b.j.comp[a]);
            if !crate::twocat::zigzags_hold(t, f, g, i, j) {
                r.add("zigzag", format!("t({})", y.vertices[a]), t.one_label(f), t.one_label(g));
            }
        }
        Ok(r)
    }

    pub fn validate(&self, cx: &DescentContext) -> Result<()> {
        let r = self.check(cx)?;
        if r.is_empty() {
            Ok(())
        } else {
            Err(CoreError::Validation(format!("trivialized functor: {}", r.lines().join("; "))))
        }
    }

    /// `F` pulled back with `triv = π*F` and identity bundle, for `i` the identity.
    pub fn identity_bundle(cx: &DescentContext, f: PathFunctor) -> Result<Self> {
        let triv = f.pullback(cx.y(1), &cx.tower.to_base(1));
        let ti = cx.post(&triv)?;
        let id = PathTransformation::identity(&ti, cx.t);
        let m = PathModification::identity(&id, cx.t);
        Ok(TrivializedFunctor { f, triv, t: EquivalenceBundle { forward: id.clone(), inverse: id, i: m.clone(), j: m } })
    }
}

/// Identity 2-cells of `id_X` natural in every 1-cell, for one-object tables.
fn central_units(t: &TwoCategoryTable) -> Vec<C2> {
    if t.n0() != 1 {
        return vec![t.id2_obj(0)];
    }
    let u = t.id1(0);
    t.hom2(u, u)
        .filter(|&z| t.inv2(z).is_some() && (0..t.n1()).all(|f| t.wl(f, z).ok() == t.wr(z, f).ok()))
        .collect()
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, v: &[T]) -> Option<T> {
    if v.is_empty() {
        None
    } else {
        Some(v[rng.gen_range(0..v.len())])
    }
}

fn invertible_ones(t: &TwoCategoryTable) -> Vec<C1> {
    (0..t.n1()).filter(|&f| inverse1(t, f).is_some()).collect()
}

/// A random strict functor on the base: random invertible edge images and random face cells,
/// retrying edges until every face has a filler.
pub fn random_functor(cx: &crate::base::Computad, t: &TwoCategoryTable, rng: &mut ChaCha8Rng) -> Result<PathFunctor> {
    let inv = invertible_ones(t);
    for _ in 0..64 {
        let obj: Vec<usize> = (0..cx.vertices.len()).map(|_| rng.gen_range(0..t.n0())).collect();
        let mut edge = Vec::with_capacity(cx.edges.len());
        for e in &cx.edges {
            let options: Vec<C1> = inv.iter().copied().filter(|&f| t.src1(f) == obj[e.src] && t.tgt1(f) == obj[e.tgt]).collect();
            match pick(rng, &options) {
                Some(f) => edge.push(f),
                None => break,
            }
        }
        if edge.len() != cx.edges.len() {
            continue;
        }
        let mut proto = PathFunctor::constant(cx, t, obj[0]);
        proto.obj = obj.clone();
        proto.one = edge.iter().flat_map(|&f| [f, inverse1(t, f).expect("invertible")]).collect();
        let mut face = Vec::with_capacity(cx.faces.len());
        for fc in &cx.faces {
            let (s, g) = (proto.path(cx, t, &fc.src)?, proto.path(cx, t, &fc.tgt)?);
            let fill: Vec<C2> = t.hom2(s, g).filter(|&a| t.inv2(a).is_some()).collect();
            match pick(rng, &fill) {
                Some(a) => face.push(a),
                None => break,
            }
        }
        if face.len() == cx.faces.len() {
            return PathFunctor::strict(cx, t, obj, &edge, face);
        }
    }
    Err(CoreError::Capability(format!("no random functor with face fillers into `{}`", t.name)))
}

/// A random trivialized functor with `Gr = T` and `i` the identity: random strict `F`,
/// random invertible `t(a)`, random `triv` on edges with random invertible squares, `triv`
/// on faces forced by naturality, and `i_t` twisted by a random central unit per patch.
pub fn random_trivialized(cx: &DescentContext, seed: u64) -> Result<TrivializedFunctor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_functor(cx.y(0), cx.t, &mut rng)?;
    random_trivialization(cx, f, &mut rng)
}

/// A random trivialization of a given strict functor, as in [`random_trivialized`].
pub fn random_trivialization(cx: &DescentContext, f: PathFunctor, rng: &mut ChaCha8Rng) -> Result<TrivializedFunctor> {
    let t = cx.t;
    if cx.gr != cx.t || cx.i != &crate::twocat::TwoFunctorData::identity(cx.t) {
        return Err(CoreError::Capability("random trivializations need Gr = T and i = id".into()));
    }
    let y = cx.y(1);
    let proj = cx.tower.to_base(1);
    let pf = f.pullback(y, &proj);
    let inv = invertible_ones(t);
    let tc: Vec<C1> = (0..y.vertices.len())
        .map(|a| {
            let opts: Vec<C1> = inv.iter().copied().filter(|&g| t.src1(g) == pf.obj[a]).collect();
            pick(rng, &opts).expect("identity is invertible")
        })
        .collect();
    let tinv: Vec<C1> = tc.iter().map(|&g| inverse1(t, g).expect("invertible")).collect();
    let obj: Vec<usize> = tc.iter().map(|&g| t.tgt1(g)).collect();
    let mut one = vec![0; y.n_letters()];
    let mut comp1 = vec![0; y.n_letters()];
    for (e, ed) in y.edges.iter().enumerate() {
        let (l, lb) = (2 * e, 2 * e + 1);
        let (a, b) = (ed.src, ed.tgt);
        let src = t.c1(tc[b], pf.one[l])?;
        let mut options = Vec::new();
        for g in inv.iter().copied().filter(|&g| t.src1(g) == obj[a] && t.tgt1(g) == obj[b]) {
            let tgt = t.c1(g, tc[a])?;
            options.extend(t.hom2(src, tgt).filter(|&c| t.inv2(c).is_some()).map(|c| (g, c)));
        }
        let (g, c) = pick(rng, &options).ok_or_else(|| CoreError::Capability("no square for a trivialization edge".into()))?;
        let gb = inverse1(t, g).expect("invertible");
        one[l] = g;
        one[lb] = gb;
        comp1[l] = c;
        // The square for e⁻¹ is the mate of the square for e.
        comp1[lb] = t.inv(t.wl(gb, t.wr(c, pf.one[lb])?)?)?;
    }
    let mut triv = PathFunctor::constant(y, t, 0);
    triv.obj = obj.clone();
    triv.one = one;
    triv.kappa = (0..y.n_letters()).map(|l| t.id2_obj(obj[y.letter_src(l)])).collect();
    triv.unitor = obj.iter().map(|&x| t.id2_obj(x)).collect();
    let forward = PathTransformation { comp0: tc.clone(), comp1 };
    let mut faces = Vec::with_capacity(y.faces.len());
    for (fi, fc) in y.faces.iter().enumerate() {
        let (x, z) = (fc.src.start, fc.src.end(y));
        let rs = forward.path(&pf, &triv, y, t, &fc.src)?;
        let rt = forward.path(&pf, &triv, y, t, &fc.tgt)?;
        let side = t.vpath(&[t.inv(rs)?, t.wl(tc[z], pf.face[fi])?, rt])?;
        faces.push(t.wr(side, tinv[x])?);
    }
    triv.face = faces;
    let inverse = forward.strict_inverse(y, t)?;
    let units = central_units(t);
    let per_patch: Vec<C2> = (0..cx.tower.cover.patches.len()).map(|_| pick(rng, &units).expect("identity unit")).collect();
    let i = PathModification {
        comp: (0..y.vertices.len())
            .map(|a| if t.n0() == 1 { per_patch[cx.split(1, a).0[0]] } else { t.id2(t.id1(pf.obj[a])) })
            .collect(),
    };
    let j = PathModification {
        comp: (0..y.vertices.len())
            .map(|a| t.wr(t.inv(t.wl(tc[a], i.comp[a])?)?, tinv[a]))
            .collect::<Result<_>>()?,
    };
    Ok(TrivializedFunctor { f, triv, t: EquivalenceBundle { forward, inverse, i, j } })
}
