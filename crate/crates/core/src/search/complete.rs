//! Recovering `(g3, g4, g5)` from `p = g1 g2`.
//!
//! With `g5 = g1 g2 g3 g4` and `g4` a transposition, `g1 g2 g3 = g5 g4`, so
//! `g3 = p^-1 g5 g4`. We run over ordered pairs of transpositions
//! `(g5, g4)` and keep those where `p^-1 g5 g4` has the wanted type. The
//! type of `p^-1 g5` is read off `p^-1`'s cycles (a transposition splits or
//! merges cycles), and `g4` is only searched for when that type is one
//! split or merge away from the target.

use crate::partition::Partition;
use crate::perm::union_find::UnionFind;
use crate::perm::Permutation;
use crate::search::case::SearchCase;

/// Cycle structure of a permutation given by images.
struct Cycles {
    id: Vec<usize>,
    pos: Vec<usize>,
    len: Vec<usize>,
}

impl Cycles {
    fn of(images: &[usize]) -> Self {
        let n = images.len();
        let mut c = Cycles {
            id: vec![usize::MAX; n],
            pos: vec![0; n],
            len: Vec::new(),
        };
        for s in 0..n {
            if c.id[s] != usize::MAX {
                continue;
            }
            let k = c.len.len();
            let mut x = s;
            let mut i = 0;
            while c.id[x] == usize::MAX {
                c.id[x] = k;
                c.pos[x] = i;
                i += 1;
                x = images[x];
            }
            c.len.push(i);
        }
        c
    }

    /// Cycle lengths after right multiplication by `(u v)`: one split or merge.
    fn effect(&self, u: usize, v: usize) -> Effect {
        let (cu, cv) = (self.id[u], self.id[v]);
        if cu == cv {
            let l = self.len[cu];
            let d = (self.pos[v] + l - self.pos[u]) % l;
            Effect::Split { whole: l, part: d }
        } else {
            Effect::Merge {
                a: self.len[cu],
                b: self.len[cv],
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Effect {
    Split { whole: usize, part: usize },
    Merge { a: usize, b: usize },
}

impl Effect {
    /// `(length, change in multiplicity)` entries.
    fn deltas(self) -> [(usize, i32); 3] {
        match self {
            Effect::Split { whole, part } => [(whole, -1), (part, 1), (whole - part, 1)],
            Effect::Merge { a, b } => [(a, -1), (b, -1), (a + b, 1)],
        }
    }
}

/// Signed multiplicity difference `current - target`, with the sum of
/// absolute values kept up to date.
struct TypeDiff {
    diff: Vec<i32>,
    abs: i32,
}

impl TypeDiff {
    fn add(&mut self, len: usize, by: i32) {
        let old = self.diff[len];
        self.diff[len] = old + by;
        self.abs += (old + by).abs() - old.abs();
    }
}

/// Transposition pairs `(g5, g4)` (0-based, `u < v`) such that
/// `p^-1 g5 g4` has type `target`, in increasing order.
pub(crate) fn completion_pairs(p: &[usize], target: &Partition) -> Vec<((usize, usize), (usize, usize))> {
    let n = p.len();
    let mut q = vec![0; n];
    for (x, &y) in p.iter().enumerate() {
        q[y] = x;
    }
    let cq = Cycles::of(&q);
    let mut td = TypeDiff {
        diff: vec![0; n + 1],
        abs: 0,
    };
    for &l in &cq.len {
        td.add(l, 1);
    }
    for &t in target.parts() {
        td.add(t as usize, -1);
    }
    // Each transposition moves the difference by at most 3.
    if td.abs > 6 {
        return Vec::new();
    }
    let mut support: Vec<usize> = (1..=n).filter(|&l| td.diff[l] != 0).collect();
    let base_len = support.len();

    let mut out = Vec::new();
    let mut q1 = q.clone();
    for u in 0..n {
        for v in u + 1..n {
            let eff = cq.effect(u, v);
            let deltas = eff.deltas();
            for &(l, c) in &deltas {
                td.add(l, c);
            }
            if td.abs == 3 {
                support.truncate(base_len);
                support.extend(deltas.iter().map(|&(l, _)| l));
                support.sort_unstable();
                support.dedup();
                if let Some(second) = second_step(&td.diff, &support) {
                    // q1 = q (u v)
                    q1.copy_from_slice(&q);
                    for x in [p[u], p[v]] {
                        q1[x] = if q[x] == u { v } else { u };
                    }
                    let c1 = Cycles::of(&q1);
                    let mut g4s = Vec::new();
                    for x in 0..n {
                        for y in x + 1..n {
                            let e = c1.effect(x, y);
                            let hit = match (second, e) {
                                (Effect::Split { whole, part }, Effect::Split { whole: w, part: d }) => {
                                    w == whole && (d == part || d == whole - part)
                                }
                                (Effect::Merge { a, b }, Effect::Merge { a: x1, b: y1 }) => {
                                    (x1, y1) == (a, b) || (x1, y1) == (b, a)
                                }
                                _ => false,
                            };
                            if hit {
                                g4s.push((x, y));
                            }
                        }
                    }
                    out.extend(g4s.into_iter().map(|g4| ((u, v), g4)));
                }
            }
            for &(l, c) in &deltas {
                td.add(l, -c);
            }
        }
    }
    out
}

/// The single split or merge turning the current type into the target, read
/// off a difference with absolute sum 3.
fn second_step(diff: &[i32], support: &[usize]) -> Option<Effect> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &l in support {
        let d = diff[l];
        for _ in 0..d.max(0) {
            plus.push(l);
        }
        for _ in 0..(-d).max(0) {
            minus.push(l);
        }
    }
    match (plus.as_slice(), minus.as_slice()) {
        // current has an L the target lacks, target has d and L - d
        (&[whole], &[a, b]) if a + b == whole => Some(Effect::Split { whole, part: a }),
        (&[a, b], &[whole]) if a + b == whole => Some(Effect::Merge { a, b }),
        _ => None,
    }
}

/// Union-find over the orbits of `<g1, g2>`, used to test transitivity of
/// `<g1, g2, g4, g5>` (which equals `<g1, g2, g3, g4>`).
pub(crate) struct OrbitMerger {
    orbit_of: Vec<usize>,
    count: usize,
}

impl OrbitMerger {
    pub(crate) fn new(g1: &[usize], g2: &[usize]) -> Self {
        let n = g1.len();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            uf.union(x, g1[x]);
            uf.union(x, g2[x]);
        }
        let classes = uf.classes();
        let mut orbit_of = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                orbit_of[x] = i;
            }
        }
        OrbitMerger {
            orbit_of,
            count: classes.len(),
        }
    }

    pub(crate) fn orbit_count(&self) -> usize {
        self.count
    }

    pub(crate) fn transitive_with(&self, t1: (usize, usize), t2: (usize, usize)) -> bool {
        match self.count {
            1 => true,
            2 | 3 => {
                let mut uf = UnionFind::new(self.count);
                uf.union(self.orbit_of[t1.0], self.orbit_of[t1.1]);
                uf.union(self.orbit_of[t2.0], self.orbit_of[t2.1]);
                uf.class_size(0) == self.count
            }
            _ => false,
        }
    }
}

/// Builds `(g3, g4, g5)` from `p = g1 g2` and the two transpositions.
pub(crate) fn assemble(p: &Permutation, g5: (usize, usize), g4: (usize, usize)) -> (Permutation, Permutation, Permutation) {
    let n = p.degree();
    let t5 = Permutation::transposition(n, g5.0, g5.1);
    let t4 = Permutation::transposition(n, g4.0, g4.1);
    let g3 = Permutation::product_all([&p.inverse(), &t5, &t4]).expect("equal degrees");
    (g3, t4, t5)
}

/// All `(g3, g4, g5)` with `g3` of the case's type, `g4`, `g5` transpositions
/// and `g1 g2 g3 g4 = g5`, transitive or not. Empty when the product type of
/// `g1 g2` is not allowed.
pub fn complete_pair(
    g1: &Permutation,
    g2: &Permutation,
    case: &SearchCase,
) -> Vec<(Permutation, Permutation, Permutation)> {
    let Ok(p) = g1.product(g2) else {
        return Vec::new();
    };
    if p.degree() != case.degree || !case.allowed_product_types.contains(&p.cycle_type()) {
        return Vec::new();
    }
    completion_pairs(p.images(), &case.g3_type)
        .into_iter()
        .map(|(g5, g4)| assemble(&p, g5, g4))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{is_transitive, standard_regular};
    use crate::search::case::CaseId;
    use std::collections::BTreeSet;

    fn e6_first() -> Permutation {
        Permutation::parse_cycles(
            24,
            "(1,4)(2,7)(3,10)(5,12)(6,8)(9,13)(11,16)(14,19)(15,22)(17,24)(18,20)(21,23)",
        )
        .unwrap()
    }

    // Oracle: run over every t of support type 1^n, 3 1^(n-3), 2^2 1^(n-4),
    // set g3 = p^-1 t, keep the right g3 types, then factor t = g5 g4 into
    // transpositions in all ways.
    fn brute_completions(p: &Permutation, target: &Partition) -> BTreeSet<(Permutation, Permutation, Permutation)> {
        let n = p.degree();
        let q = p.inverse();
        let mut ts = vec![Permutation::identity(n)];
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    ts.push(Permutation::from_cycles(n, &[vec![a, b, c]]).unwrap());
                    ts.push(Permutation::from_cycles(n, &[vec![a, c, b]]).unwrap());
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in a + 1..n {
                    for d in c + 1..n {
                        if c == b || d == b {
                            continue;
                        }
                        // each double transposition once: a smallest, (a b) first
                        ts.push(Permutation::from_cycles(n, &[vec![a, b], vec![c, d]]).unwrap());
                    }
                }
            }
        }
        let transpositions: Vec<Permutation> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| Permutation::transposition(n, a, b)))
            .collect();
        let mut out = BTreeSet::new();
        for t in ts {
            let g3 = q.product(&t).unwrap();
            if &g3.cycle_type() != target {
                continue;
            }
            for g5 in &transpositions {
                let g4 = g5.product(&t).unwrap();
                if g4.support_size() == 2 {
                    out.insert((g3.clone(), g4, g5.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn matches_small_support_scan_at_24() {
        let case = SearchCase::new(CaseId::E6);
        let g2 = standard_regular(24, 3);
        let g1 = e6_first();
        let fast: BTreeSet<_> = complete_pair(&g1, &g2, &case).into_iter().collect();
        let p = g1.product(&g2).unwrap();
        let brute = brute_completions(&p, &case.g3_type);
        assert!(!fast.is_empty());
        assert_eq!(fast, brute);
        for (g3, g4, g5) in &fast {
            assert_eq!(Permutation::product_all([&g1, &g2, g3, g4]).unwrap(), *g5);
        }
        let transitive = fast
            .iter()
            .filter(|(g3, g4, _)| is_transitive(&[g1.clone(), g2.clone(), g3.clone(), g4.clone()]).unwrap())
            .count();
        assert!(transitive > 0);
    }

    #[test]
    fn other_product_types_match_scan() {
        // Random-ish involutions whose product lands in the allowed list.
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let case = SearchCase::new(CaseId::E6);
        let g2 = standard_regular(24, 3);
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let mut checked = 0;
        for _ in 0..20000 {
            let mut pts: Vec<usize> = (0..24).collect();
            pts.shuffle(&mut rng);
            let pairs: Vec<(usize, usize)> = pts.chunks(2).map(|c| (c[0], c[1])).collect();
            let g1 = Permutation::from_pairs(24, &pairs).unwrap();
            let p = g1.product(&g2).unwrap();
            if !case.allowed_product_types.contains(&p.cycle_type()) {
                continue;
            }
            let fast: BTreeSet<_> = complete_pair(&g1, &g2, &case).into_iter().collect();
            assert_eq!(fast, brute_completions(&p, &case.g3_type));
            checked += 1;
            if checked == 3 {
                break;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn disallowed_type_has_no_completion() {
        let case = SearchCase::new(CaseId::E6);
        let g2 = standard_regular(24, 3);
        let g1 = Permutation::from_pairs(24, &(0..12).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>()).unwrap();
        assert!(!case.allowed_product_types.contains(&g1.product(&g2).unwrap().cycle_type()));
        assert!(complete_pair(&g1, &g2, &case).is_empty());
    }

    #[test]
    fn orbit_merger() {
        let g1 = Permutation::parse_cycles(6, "(1,2)(3,4)(5,6)").unwrap();
        let id = Permutation::identity(6);
        let m = OrbitMerger::new(g1.images(), id.images());
        assert_eq!(m.orbit_count(), 3);
        assert!(m.transitive_with((0, 2), (3, 4)));
        assert!(!m.transitive_with((0, 2), (1, 3)));
    }
}
