//! The partial product `g1° g2` of an initial string of pairs and the
//! pruning test that compares its components with the target cycle types.
//!
//! For a placed pair `(a, b)` the map is defined at `a` and `b`:
//! `a -> g2(b)` and `b -> g2(a)`. Its components are finished cycles of
//! `g1 g2` or paths that will end up inside one cycle.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::perm::{Permutation, PrefixFilter};

/// Component census of the partial product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialGraph {
    /// Lengths of finished cycles, ascending.
    pub closed_cycles: Vec<u32>,
    /// Vertex counts of open paths, ascending.
    pub open_paths: Vec<u32>,
    /// Points on no edge yet.
    pub untouched: u32,
}

impl PartialGraph {
    pub fn degree(&self) -> u32 {
        self.closed_cycles.iter().sum::<u32>() + self.open_paths.iter().sum::<u32>() + self.untouched
    }
}

/// Census of `g1° g2` for 0-based disjoint pairs.
pub fn partial_components(g1_prefix: &[(usize, usize)], g2: &Permutation) -> Result<PartialGraph, Error> {
    let n = g2.degree();
    let mut next = vec![usize::MAX; n];
    let mut has_pred = vec![false; n];
    let mut used = vec![false; n];
    for &(a, b) in g1_prefix {
        if a >= n || b >= n {
            return Err(Error::InvalidArgument(format!("pair ({}, {}) outside 1..{n}", a + 1, b + 1)));
        }
        for x in [a, b] {
            if used[x] {
                return Err(Error::OverlappingPair(x + 1));
            }
            used[x] = true;
        }
        if a == b {
            return Err(Error::OverlappingPair(a + 1));
        }
        next[a] = g2.apply(b);
        next[b] = g2.apply(a);
        has_pred[next[a]] = true;
        has_pred[next[b]] = true;
    }
    let mut seen = vec![false; n];
    let mut pg = PartialGraph::default();
    for start in 0..n {
        if has_pred[start] || next[start] == usize::MAX {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while x != usize::MAX {
            seen[x] = true;
            len += 1;
            x = next[x];
        }
        pg.open_paths.push(len);
    }
    for start in 0..n {
        if seen[start] || next[start] == usize::MAX {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = next[x];
        }
        pg.closed_cycles.push(len);
    }
    pg.untouched = seen.iter().filter(|&&s| !s).count() as u32;
    pg.closed_cycles.sort_unstable();
    pg.open_paths.sort_unstable();
    Ok(pg)
}

/// Longest cycle length the packing tables handle.
pub(crate) const MAX_PART: usize = 31;

type Hist = [u8; MAX_PART + 1];

fn histogram(values: impl IntoIterator<Item = u32>) -> Option<Hist> {
    let mut h = [0u8; MAX_PART + 1];
    for v in values {
        *h.get_mut(v as usize)? += 1;
    }
    Some(h)
}

/// Can paths (given by length histogram) be distributed among cycles with the
/// given capacities, each cycle taking paths of total length at most its own?
/// Exact: largest path first, tried in each distinct capacity that fits,
/// smallest first.
fn pack(open: &mut Hist, caps: &mut Hist, mut largest: usize) -> bool {
    while largest > 0 && open[largest] == 0 {
        largest -= 1;
    }
    if largest == 0 {
        return true;
    }
    open[largest] -= 1;
    let mut ok = false;
    for c in largest..=MAX_PART {
        if caps[c] == 0 {
            continue;
        }
        caps[c] -= 1;
        caps[c - largest] += 1;
        ok = pack(open, caps, largest);
        caps[c - largest] -= 1;
        caps[c] += 1;
        if ok {
            break;
        }
    }
    open[largest] += 1;
    ok
}

/// An allowed type prepared for the packing test.
#[derive(Clone, Debug)]
pub(crate) struct TargetType {
    hist: Hist,
    max_part: usize,
}

impl TargetType {
    pub(crate) fn new(t: &Partition) -> Option<Self> {
        Some(TargetType {
            hist: histogram(t.parts().iter().copied())?,
            max_part: t.max_part() as usize,
        })
    }

    fn admits(&self, closed: &Hist, open: &Hist, max_closed: usize, max_open: usize) -> bool {
        if max_closed > self.max_part || max_open > self.max_part {
            return false;
        }
        let mut caps = self.hist;
        for len in 1..=max_closed {
            if closed[len] > caps[len] {
                return false;
            }
            caps[len] -= closed[len];
        }
        caps[0] = 0;
        let mut open = *open;
        pack(&mut open, &mut caps, max_open)
    }
}

fn prepare(allowed: &[Partition]) -> Option<Vec<TargetType>> {
    allowed.iter().map(TargetType::new).collect()
}

/// Whether some allowed type is still reachable: the finished cycles occur in
/// it, and the open paths fit into its remaining cycles. Never rejects a
/// prefix that extends to an involution with an allowed product type.
pub fn feasible(pg: &PartialGraph, allowed: &[Partition]) -> bool {
    let degree_ok = |t: &Partition| t.degree() == pg.degree();
    let allowed: Vec<Partition> = allowed.iter().filter(|t| degree_ok(t)).cloned().collect();
    let Some(targets) = prepare(&allowed) else {
        return feasible_slow(pg, &allowed);
    };
    let (Some(closed), Some(open)) = (
        histogram(pg.closed_cycles.iter().copied()),
        histogram(pg.open_paths.iter().copied()),
    ) else {
        // Some component is longer than every table-sized part.
        return feasible_slow(pg, &allowed);
    };
    let max_closed = pg.closed_cycles.iter().max().copied().unwrap_or(0) as usize;
    let max_open = pg.open_paths.iter().max().copied().unwrap_or(0) as usize;
    targets.iter().any(|t| t.admits(&closed, &open, max_closed, max_open))
}

/// Same test without table-size limits (for unusually long parts).
fn feasible_slow(pg: &PartialGraph, allowed: &[Partition]) -> bool {
    fn place(paths: &[u32], caps: &mut Vec<u32>) -> bool {
        let Some((&s, rest)) = paths.split_first() else {
            return true;
        };
        let mut tried = Vec::new();
        for i in 0..caps.len() {
            let c = caps[i];
            if c < s || tried.contains(&c) {
                continue;
            }
            tried.push(c);
            caps[i] -= s;
            let ok = place(rest, caps);
            caps[i] += s;
            if ok {
                return true;
            }
        }
        false
    }
    let mut paths = pg.open_paths.clone();
    paths.sort_unstable_by(|a, b| b.cmp(a));
    allowed.iter().any(|t| {
        let mut caps = t.parts().to_vec();
        for c in &pg.closed_cycles {
            match caps.iter().position(|x| x == c) {
                Some(i) => {
                    caps.swap_remove(i);
                }
                None => return false,
            }
        }
        caps.sort_unstable();
        place(&paths, &mut caps)
    })
}

const MAX_DEGREE: usize = 128;

/// Per-depth state of [`GraphFilter`]. Only path endpoints keep valid
/// `other`/`len` entries.
#[derive(Clone, Copy)]
struct GraphState {
    /// For a path endpoint (or a lone point), the opposite endpoint.
    other: [u8; MAX_DEGREE],
    /// Vertex count of the path ending at an endpoint.
    len: [u8; MAX_DEGREE],
    closed: Hist,
    open: Hist,
    max_closed: u8,
}

/// Incremental [`partial_components`] + [`feasible`] as a prefix filter for
/// the involution tree.
pub struct GraphFilter {
    g2: Vec<usize>,
    targets: Vec<TargetType>,
    max_part: usize,
    stack: Vec<GraphState>,
    /// Prefixes tested and rejected.
    pub rejected: u64,
}

impl GraphFilter {
    /// `None` if the degree or a part is beyond the filter's fixed tables.
    pub fn new(g2: &Permutation, allowed: &[Partition]) -> Option<Self> {
        let n = g2.degree();
        if n > MAX_DEGREE {
            return None;
        }
        let targets = prepare(allowed)?;
        let max_part = targets.iter().map(|t| t.max_part).max().unwrap_or(0);
        let mut root = GraphState {
            other: [0; MAX_DEGREE],
            len: [1; MAX_DEGREE],
            closed: [0; MAX_PART + 1],
            open: [0; MAX_PART + 1],
            max_closed: 0,
        };
        for x in 0..n {
            root.other[x] = x as u8;
        }
        Some(GraphFilter {
            g2: g2.images().to_vec(),
            targets,
            max_part,
            stack: vec![root],
            rejected: 0,
        })
    }

    /// Adds the edge `x -> y`; `x` ends a path, `y` starts one. `false` if a
    /// component got longer than every allowed part.
    fn add_edge(&self, st: &mut GraphState, x: usize, y: usize) -> bool {
        let s = st.other[x] as usize;
        let lx = st.len[x] as usize;
        if lx > 1 {
            st.open[lx] -= 1;
        }
        if s == y {
            if lx > self.max_part {
                return false;
            }
            st.closed[lx] += 1;
            st.max_closed = st.max_closed.max(lx as u8);
            return true;
        }
        let e = st.other[y] as usize;
        let ly = st.len[y] as usize;
        if ly > 1 {
            st.open[ly] -= 1;
        }
        let l = lx + ly;
        if l > self.max_part {
            return false;
        }
        st.open[l] += 1;
        st.other[s] = e as u8;
        st.other[e] = s as u8;
        st.len[s] = l as u8;
        st.len[e] = l as u8;
        true
    }
}

impl PrefixFilter for GraphFilter {
    fn push(&mut self, a: usize, b: usize) -> bool {
        let mut st = *self.stack.last().unwrap();
        let ok = self.add_edge(&mut st, a, self.g2[b]) && self.add_edge(&mut st, b, self.g2[a]) && {
            let max_open = (1..=self.max_part).rev().find(|&l| st.open[l] > 0).unwrap_or(0);
            let max_closed = st.max_closed as usize;
            self.targets
                .iter()
                .any(|t| t.admits(&st.closed, &st.open, max_closed, max_open))
        };
        if !ok {
            self.rejected += 1;
        }
        self.stack.push(st);
        ok
    }

    fn pop(&mut self) {
        self.stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{standard_regular, InvolutionTree};
    use crate::search::case::{allowed_product_types, CaseId};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn one_based(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
        pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
    }

    fn figure_prefix() -> Vec<(usize, usize)> {
        one_based(&[(1, 4), (2, 5), (3, 7), (6, 10), (8, 12), (9, 13), (11, 16), (14, 18)])
    }

    #[test]
    fn figure_census() {
        let g2 = standard_regular(120, 3);
        let pg = partial_components(&figure_prefix(), &g2).unwrap();
        assert_eq!(pg.closed_cycles, vec![4]);
        assert_eq!(pg.open_paths, vec![2, 12]);
        assert_eq!(pg.untouched, 120 - 18);
        assert!(!feasible(&pg, &allowed_product_types(CaseId::E8)));
    }

    #[test]
    fn empty_and_full_prefixes() {
        let g2 = standard_regular(24, 3);
        let pg = partial_components(&[], &g2).unwrap();
        assert_eq!(pg, PartialGraph { untouched: 24, ..Default::default() });
        assert!(feasible(&pg, &allowed_product_types(CaseId::E6)));

        let g1 = Permutation::parse_cycles(
            24,
            "(1,4)(2,7)(3,10)(5,12)(6,8)(9,13)(11,16)(14,19)(15,22)(17,24)(18,20)(21,23)",
        )
        .unwrap();
        let pg = partial_components(&g1.pairs(), &g2).unwrap();
        let ct = g1.product(&g2).unwrap().cycle_type();
        assert!(pg.open_paths.is_empty());
        assert_eq!(pg.untouched, 0);
        assert_eq!(pg.closed_cycles, ct.parts().iter().rev().copied().collect::<Vec<_>>());
        assert_eq!(ct.to_string(), "3^4 6^2");
    }

    #[test]
    fn overlapping_pairs_are_errors() {
        let g2 = standard_regular(6, 3);
        assert!(matches!(
            partial_components(&[(0, 1), (1, 2)], &g2),
            Err(Error::OverlappingPair(2))
        ));
    }

    #[test]
    fn single_closed_cycles_against_e8() {
        let e8 = allowed_product_types(CaseId::E8);
        let with_closed = |c: u32| PartialGraph {
            closed_cycles: vec![c],
            open_paths: vec![],
            untouched: 120 - c,
        };
        assert!(feasible(&with_closed(7), &e8));
        assert!(!feasible(&with_closed(11), &e8));
        // only 3 5^22 7 carries a 7
        let only: Vec<_> = e8.iter().filter(|t| t.multiplicity(7) > 0).collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].to_string(), "3 5^22 7");
    }

    // Independent oracle: try every assignment of paths to parts.
    fn brute_feasible(pg: &PartialGraph, allowed: &[Partition]) -> bool {
        fn assign(paths: &[u32], caps: &mut [u32]) -> bool {
            let Some((&s, rest)) = paths.split_first() else { return true };
            for i in 0..caps.len() {
                if caps[i] >= s {
                    caps[i] -= s;
                    let ok = assign(rest, caps);
                    caps[i] += s;
                    if ok {
                        return true;
                    }
                }
            }
            false
        }
        allowed.iter().any(|t| {
            let mut caps = t.parts().to_vec();
            for c in &pg.closed_cycles {
                let Some(i) = caps.iter().position(|x| x == c) else { return false };
                caps.remove(i);
            }
            assign(&pg.open_paths, &mut caps)
        })
    }

    proptest! {
        #[test]
        fn packing_matches_brute_force(
            closed in proptest::collection::vec(1u32..12, 0..4),
            open in proptest::collection::vec(2u32..12, 0..7),
            which in 0usize..3,
        ) {
            let id = CaseId::ALL[which];
            let n = id.degree() as u32;
            let used: u32 = closed.iter().sum::<u32>() + open.iter().sum::<u32>();
            prop_assume!(used <= n);
            let pg = PartialGraph { closed_cycles: closed, open_paths: open, untouched: n - used };
            let allowed = allowed_product_types(id);
            prop_assert_eq!(feasible(&pg, &allowed), brute_feasible(&pg, &allowed));
            prop_assert_eq!(feasible_slow(&pg, &allowed), brute_feasible(&pg, &allowed));
        }
    }

    // Random walks down the involution tree: the incremental filter agrees
    // with the from-scratch census, and once rejected a prefix stays rejected.
    #[test]
    fn incremental_filter_matches_census() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for id in CaseId::ALL {
            let n = id.degree();
            let g2 = standard_regular(n, 3);
            let allowed = allowed_product_types(id);
            for _ in 0..200 {
                let mut tree = InvolutionTree::new(n);
                let mut filter = GraphFilter::new(&g2, &allowed).unwrap();
                let mut was_rejected = false;
                while !tree.is_complete() {
                    let a = tree.next_a().unwrap();
                    let cands = tree.candidates();
                    let b = cands[rng.gen_range(0..cands.len())];
                    tree.push(a, b);
                    let pg = partial_components(tree.pairs(), &g2).unwrap();
                    let slow = feasible(&pg, &allowed);
                    if was_rejected {
                        // the filter's state is only meaningful along accepted prefixes
                        assert!(!slow, "rejected prefix became feasible: {:?}", tree.pairs());
                        continue;
                    }
                    let fast = filter.push(a, b);
                    assert_eq!(fast, slow, "{:?}", tree.pairs());
                    was_rejected = !slow;
                }
            }
        }
    }
}
