use std::cell::Cell;
use std::collections::HashMap;

use crate::error::{CoreError, Result};

use super::functor::{check_two_functor, TwoFunctorData};
use super::pseudonat::{check_modification, check_pseudonatural, ModificationData, PseudoNatData};
use super::table::{OneCell, TwoCategoryTable, TwoCell, C1, C2, NONE};

/// The 2-category of 2-functors `S → T`, pseudonatural transformations and
/// modifications, fully enumerated.
#[derive(Debug, Clone)]
pub struct FunctorCategory {
    pub table: TwoCategoryTable,
    pub functors: Vec<TwoFunctorData>,
    pub transformations: Vec<PseudoNatData>,
    pub modifications: Vec<ModificationData>,
}

/// Default cap on the number of candidate assignments visited.
pub const DEFAULT_BUDGET: usize = 2_000_000;

struct Budget {
    left: Cell<usize>,
}

impl Budget {
    fn tick(&self) -> Result<()> {
        let left = self.left.get();
        if left == 0 {
            return Err(CoreError::Capability("functor 2-category enumeration exceeds its budget".into()));
        }
        self.left.set(left - 1);
        Ok(())
    }
}

/// Calls `visit` on every element of the product of `choices`.
fn product(choices: &[Vec<usize>], budget: &Budget, visit: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; choices.len()];
    let mut cur: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    loop {
        budget.tick()?;
        visit(&cur)?;
        let mut k = 0;
        loop {
            if k == choices.len() {
                return Ok(());
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                cur[k] = choices[k][idx[k]];
                break;
            }
            idx[k] = 0;
            cur[k] = choices[k][0];
            k += 1;
        }
    }
}

fn enumerate_functors(s: &TwoCategoryTable, t: &TwoCategoryTable, budget: &Budget) -> Result<Vec<TwoFunctorData>> {
    let mut out = Vec::new();
    let obj_choices: Vec<Vec<usize>> = (0..s.n0()).map(|_| (0..t.n0()).collect()).collect();
    let n1 = s.n1();
    product(&obj_choices, budget, &mut |map0| {
        let map0 = map0.to_vec();
        let one_choices: Vec<Vec<usize>> =
            (0..n1).map(|f| t.hom1(map0[s.src1(f)], map0[s.tgt1(f)]).collect()).collect();
        let mut found = Vec::new();
        product(&one_choices, budget, &mut |map1| {
            let map1 = map1.to_vec();
            let two_choices: Vec<Vec<usize>> = (0..s.n2())
                .map(|a| {
                    if s.is_identity2(a) {
                        vec![t.id2(map1[s.src2(a)])]
                    } else {
                        t.hom2(map1[s.src2(a)], map1[s.tgt2(a)]).collect()
                    }
                })
                .collect();
            let pairs: Vec<(C1, C1)> = (0..n1)
                .flat_map(|f| (0..n1).map(move |g| (f, g)))
                .filter(|&(f, g)| s.comp1(g, f).is_some())
                .collect();
            let mut structure: Vec<Vec<usize>> = pairs
                .iter()
                .map(|&(f, g)| {
                    let gf = s.comp1(g, f).unwrap();
                    match t.comp1(map1[g], map1[f]) {
                        Some(src) => t.hom2(src, map1[gf]).filter(|&c| t.inv2(c).is_some()).collect(),
                        None => Vec::new(),
                    }
                })
                .collect();
            structure.extend(
                (0..s.n0()).map(|x| t.hom2(map1[s.id1(x)], t.id1(map0[x])).filter(|&c| t.inv2(c).is_some()).collect()),
            );
            product(&two_choices, budget, &mut |map2| {
                product(&structure, budget, &mut |st| {
                    let mut compositor = vec![NONE; n1 * n1];
                    for (k, &(f, g)) in pairs.iter().enumerate() {
                        compositor[f * n1 + g] = st[k];
                    }
                    let fd = TwoFunctorData {
                        map0: map0.clone(),
                        map1: map1.clone(),
                        map2: map2.to_vec(),
                        compositor,
                        unitor: st[pairs.len()..].to_vec(),
                    };
                    if check_two_functor(&fd, s, t)?.is_empty() {
                        found.push(fd);
                    }
                    Ok(())
                })?;
                Ok(())
            })?;
            Ok(())
        })?;
        out.extend(found);
        Ok(())
    })?;
    Ok(out)
}

/// Enumerates the functor 2-category `Funct(S, T)`.
///
/// `S` must be strict; the enumeration fails with a capability error once more than
/// `budget` candidate assignments have been visited.
pub fn functor_2category(s: &TwoCategoryTable, t: &TwoCategoryTable, budget: usize) -> Result<FunctorCategory> {
    s.require_strict("functor_2category source")?;
    let budget = Budget { left: Cell::new(budget) };
    let functors = enumerate_functors(s, t, &budget)?;

    let mut transformations: Vec<PseudoNatData> = Vec::new();
    let mut trans_ends: Vec<(usize, usize)> = Vec::new();
    for (i, fa) in functors.iter().enumerate() {
        for (j, fb) in functors.iter().enumerate() {
            let c0: Vec<Vec<usize>> = (0..s.n0()).map(|x| t.hom1(fa.map0[x], fb.map0[x]).collect()).collect();
            let mut found = Vec::new();
            product(&c0, &budget, &mut |comp0| {
                let c1: Vec<Vec<usize>> = (0..s.n1())
                    .map(|f| {
                        let (x, y) = (s.src1(f), s.tgt1(f));
                        match (t.comp1(comp0[y], fa.map1[f]), t.comp1(fb.map1[f], comp0[x])) {
                            (Some(a), Some(b)) => t.hom2(a, b).filter(|&c| t.inv2(c).is_some()).collect(),
                            _ => Vec::new(),
                        }
                    })
                    .collect();
                product(&c1, &budget, &mut |comp1| {
                    let rho = PseudoNatData { comp0: comp0.to_vec(), comp1: comp1.to_vec() };
                    if check_pseudonatural(&rho, fa, fb, s, t)?.is_empty() {
                        found.push(rho);
                    }
                    Ok(())
                })
            })?;
            for rho in found {
                transformations.push(rho);
                trans_ends.push((i, j));
            }
        }
    }

    let mut modifications: Vec<ModificationData> = Vec::new();
    let mut mod_ends: Vec<(usize, usize)> = Vec::new();
    for (p, rp) in transformations.iter().enumerate() {
        for (q, rq) in transformations.iter().enumerate() {
            if trans_ends[p] != trans_ends[q] {
                continue;
            }
            let (fa, fb) = (&functors[trans_ends[p].0], &functors[trans_ends[p].1]);
            let choices: Vec<Vec<usize>> = (0..s.n0()).map(|x| t.hom2(rp.comp0[x], rq.comp0[x]).collect()).collect();
            let mut found = Vec::new();
            product(&choices, &budget, &mut |comp| {
                let m = ModificationData { comp: comp.to_vec() };
                if check_modification(&m, rp, rq, fa, fb, s, t)?.is_empty() {
                    found.push(m);
                }
                Ok(())
            })?;
            for m in found {
                modifications.push(m);
                mod_ends.push((p, q));
            }
        }
    }

    let objects: Vec<String> = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let one_cells: Vec<OneCell> = trans_ends
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| OneCell { label: format!("ρ{k}"), src: a, tgt: b })
        .collect();
    let two_cells: Vec<TwoCell> = mod_ends
        .iter()
        .enumerate()
        .map(|(k, &(p, q))| TwoCell { label: format!("A{k}"), src: p, tgt: q })
        .collect();
    let mut table = TwoCategoryTable::skeleton(format!("Funct({},{})", s.name, t.name), objects, one_cells, two_cells);
    table.strict = t.strict;

    let trans_index: HashMap<(usize, usize, &PseudoNatData), usize> =
        transformations.iter().enumerate().map(|(k, r)| ((trans_ends[k].0, trans_ends[k].1, r), k)).collect();
    let mod_index: HashMap<(usize, usize, &ModificationData), usize> =
        modifications.iter().enumerate().map(|(k, m)| ((mod_ends[k].0, mod_ends[k].1, m), k)).collect();
    let missing = |what: &str| CoreError::Invariant {
        identity: format!("closure of Funct under {what}"),
        witness: "composite not among enumerated cells".into(),
    };
    let find_mod = |p: usize, q: usize, comp: Vec<C2>| -> Result<usize> {
        mod_index.get(&(p, q, &ModificationData { comp })).copied().ok_or_else(|| missing("modifications"))
    };

    for (i, fd) in functors.iter().enumerate() {
        let id = PseudoNatData::identity(fd, s, t)?;
        table.identity1[i] = *trans_index.get(&(i, i, &id)).ok_or_else(|| missing("identities"))?;
    }
    let nt = transformations.len();
    for p in 0..nt {
        for q in 0..nt {
            if trans_ends[p].1 != trans_ends[q].0 {
                continue;
            }
            let (a, b, c) = (trans_ends[p].0, trans_ends[p].1, trans_ends[q].1);
            let comp = PseudoNatData::compose(
                &transformations[q],
                &transformations[p],
                &functors[a],
                &functors[b],
                &functors[c],
                s,
                t,
            )?;
            let k = *trans_index.get(&(a, c, &comp)).ok_or_else(|| missing("composition"))?;
            table.set_comp1(q, p, k);
        }
    }
    for p in 0..nt {
        let comp = transformations[p].comp0.iter().map(|&f| t.id2(f)).collect();
        table.identity2[p] = find_mod(p, p, comp)?;
    }
    let nm = modifications.len();
    for a in 0..nm {
        for b in 0..nm {
            let (pa, qa) = mod_ends[a];
            let (pb, qb) = mod_ends[b];
            if qa == pb {
                let comp = (0..s.n0())
                    .map(|x| t.v(modifications[b].comp[x], modifications[a].comp[x]))
                    .collect::<Result<Vec<_>>>()?;
                table.set_vert(b, a, find_mod(pa, qb, comp)?);
            }
            if trans_ends[pa].1 == trans_ends[pb].0 {
                let comp = (0..s.n0())
                    .map(|x| t.h(modifications[b].comp[x], modifications[a].comp[x]))
                    .collect::<Result<Vec<_>>>()?;
                let src = table.comp1(pb, pa).ok_or_else(|| missing("composition"))?;
                let tgt = table.comp1(qb, qa).ok_or_else(|| missing("composition"))?;
                table.set_horiz(b, a, find_mod(src, tgt, comp)?);
            }
        }
    }
    for f in 0..nt {
        for g in 0..nt {
            for h in 0..nt {
                let (Some(hg), Some(gf)) = (table.comp1(h, g), table.comp1(g, f)) else { continue };
                let (Some(src), Some(tgt)) = (table.comp1(hg, f), table.comp1(h, gf)) else { continue };
                let comp = (0..s.n0())
                    .map(|x| {
                        t.assoc(transformations[f].comp0[x], transformations[g].comp0[x], transformations[h].comp0[x])
                            .ok_or_else(|| missing("associators"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                table.set_assoc(f, g, h, find_mod(src, tgt, comp)?);
            }
        }
    }
    for f in 0..nt {
        let (a, b) = trans_ends[f];
        let fl = table.comp1(f, table.id1(a)).ok_or_else(|| missing("units"))?;
        let fr = table.comp1(table.id1(b), f).ok_or_else(|| missing("units"))?;
        let cl = transformations[f].comp0.iter().map(|&r| t.lunit(r).unwrap_or(NONE)).collect();
        let cr = transformations[f].comp0.iter().map(|&r| t.runit(r).unwrap_or(NONE)).collect();
        table.left_unifier[f] = find_mod(fl, f, cl)?;
        table.right_unifier[f] = find_mod(fr, f, cr)?;
    }
    table.fill_inverses();
    Ok(FunctorCategory { table, functors, transformations, modifications })
}
