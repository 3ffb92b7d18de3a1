use std::collections::VecDeque;

use crate::error::{CoreError, Result};

/// A finite group given by its Cayley table; `mul[a*n+b] = a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub mul: Vec<usize>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the group axioms and derives identity and inverses.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, mul: Vec<usize>) -> Result<Self> {
        let name = name.into();
        let n = labels.len();
        if n == 0 || mul.len() != n * n || mul.iter().any(|&x| x >= n) {
            return Err(CoreError::Validation(format!("group `{name}`: malformed Cayley table")));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| CoreError::invariant("identity element", format!("group `{name}`")))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(CoreError::invariant(
                            "associativity",
                            format!("({},{},{})", labels[a], labels[b], labels[c]),
                        ));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| m(a, b) == identity)
                    .ok_or_else(|| CoreError::invariant("inverses", labels[a].clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { name, labels, mul, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_table(format!("Z{n}"), labels, mul).expect("cyclic group")
    }

    pub fn klein() -> Self {
        let mut g = Self::product(&Self::cyclic(2), &Self::cyclic(2));
        g.name = "Z2xZ2".into();
        g
    }

    /// The symmetric group on three letters, with `r = (012)` and `s = (01)`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = {
            let r = [1, 2, 0];
            let s = [1, 0, 2];
            let e = [0, 1, 2];
            let comp = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
            let r2 = comp(r, r);
            vec![e, r, r2, s, comp(r, s), comp(r2, s)]
        };
        let labels: Vec<String> = ["e", "r", "r2", "s", "rs", "r2s"].iter().map(|s| s.to_string()).collect();
        let n = perms.len();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = perms[a];
                let q = perms[b];
                let c = [p[q[0]], p[q[1]], p[q[2]]];
                mul[a * n + b] = perms.iter().position(|&x| x == c).unwrap();
            }
        }
        Self::from_table("S3", labels, mul).expect("S3")
    }

    /// Direct product; element `(a,b)` has index `a*|B|+b`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let labels = (0..n).map(|k| format!("{}.{}", a.labels[k / nb], b.labels[k % nb])).collect();
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[x * n + y] = a.m(x / nb, y / nb) * nb + b.m(x % nb, y % nb);
            }
        }
        Self::from_table(format!("{}x{}", a.name, b.name), labels, mul).expect("product group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.m(a, b) == self.m(b, a)))
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// A small generating set found greedily.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closure = vec![self.identity];
        for a in 0..self.order() {
            if !closure.contains(&a) {
                gens.push(a);
                closure = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.m(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    pub fn is_hom_to(&self, other: &FiniteGroup, map: &[usize]) -> bool {
        let n = self.order();
        map.len() == n
            && (0..n).all(|a| (0..n).all(|b| map[self.m(a, b)] == other.m(map[a], map[b])))
    }

    /// Every homomorphism into `other`, as element maps.
    pub fn homomorphisms_to(&self, other: &FiniteGroup) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let k = gens.len();
        let mut out = Vec::new();
        let mut images = vec![0usize; k];
        loop {
            if let Some(map) = self.extend(other, &gens, &images) {
                out.push(map);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                images[i] += 1;
                if images[i] < other.order() {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
        }
    }

    fn extend(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.m(x, g);
                let v = other.m(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = v;
                    queue.push_back(y);
                } else if map[y] != v {
                    return None;
                }
            }
        }
        self.is_hom_to(other, &map).then_some(map)
    }

    /// Every automorphism, as element permutations.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.homomorphisms_to(self)
            .into_iter()
            .filter(|m| {
                let mut seen = vec![false; m.len()];
                m.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            })
            .collect()
    }
}
