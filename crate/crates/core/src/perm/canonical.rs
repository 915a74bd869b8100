//! Representatives of the orbits of the centralizer of
//! `g2 = (1,2,3)(4,5,6)...` on fixed-point-free involutions.
//!
//! An involution is built as a string of pairs `(a_1,b_1)(a_2,b_2)...` where
//! `a_{k+1}` is the smallest unused point. Let `xi` be the number of triples of
//! `g2` touched by `a_1..a_{k+1}, b_1..b_k` (triple `t` holds points
//! `3t+1, 3t+2, 3t+3`). Then `b_{k+1}` is either an unused point inside the
//! touched triples or the first point of the next triple, `3 xi + 1`.
//!
//! Untouched triples are interchangeable under the centralizer (`Z/3 wr S_k`),
//! so every orbit has a representative of this shape. Some orbits are hit more
//! than once.

/// Prefix callback for the involution tree. `push` is called after a pair is
/// appended and may veto the subtree; every `push` is matched by a `pop`.
pub trait PrefixFilter {
    fn push(&mut self, a: usize, b: usize) -> bool;
    fn pop(&mut self);
}

/// Accepts everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct AcceptAll;

impl PrefixFilter for AcceptAll {
    fn push(&mut self, _a: usize, _b: usize) -> bool {
        true
    }
    fn pop(&mut self) {}
}

/// Filter from a closure over the whole prefix.
pub struct PredicateFilter<F: FnMut(&[(usize, usize)]) -> bool> {
    pairs: Vec<(usize, usize)>,
    accept: F,
}

impl<F: FnMut(&[(usize, usize)]) -> bool> PredicateFilter<F> {
    pub fn new(accept: F) -> Self {
        PredicateFilter { pairs: Vec::new(), accept }
    }
}

impl<F: FnMut(&[(usize, usize)]) -> bool> PrefixFilter for PredicateFilter<F> {
    fn push(&mut self, a: usize, b: usize) -> bool {
        self.pairs.push((a, b));
        (self.accept)(&self.pairs)
    }
    fn pop(&mut self) {
        self.pairs.pop();
    }
}

const FREE: usize = usize::MAX;

/// Search state: the pairs placed so far (0-based) and the touched-triple count.
#[derive(Clone, Debug)]
pub struct InvolutionTree {
    n: usize,
    mate: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    xi_stack: Vec<usize>,
}

impl InvolutionTree {
    /// `n` must be a multiple of 6 (even, and a union of triples).
    pub fn new(n: usize) -> Self {
        assert!(n > 0 && n.is_multiple_of(6), "degree must be a positive multiple of 6");
        InvolutionTree {
            n,
            mate: vec![FREE; n],
            pairs: Vec::with_capacity(n / 2),
            xi_stack: vec![0],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_complete(&self) -> bool {
        2 * self.pairs.len() == self.n
    }

    fn xi(&self) -> usize {
        *self.xi_stack.last().unwrap()
    }

    /// Smallest unused point.
    pub fn next_a(&self) -> Option<usize> {
        let from = self.pairs.last().map_or(0, |&(a, _)| a + 1);
        (from..self.n).find(|&x| self.mate[x] == FREE)
    }

    /// Allowed partners for `next_a`, ascending.
    pub fn candidates(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_candidate(|b| out.push(b));
        out
    }

    #[inline]
    fn for_each_candidate(&self, mut f: impl FnMut(usize)) {
        let Some(a) = self.next_a() else { return };
        let xi = self.xi().max(a / 3 + 1);
        let limit = 3 * xi;
        for b in a + 1..limit.min(self.n) {
            if self.mate[b] == FREE {
                f(b);
            }
        }
        if limit < self.n {
            f(limit);
        }
    }

    /// Appends `(a, b)`; `a` must be `next_a()` and `b` one of the candidates.
    pub fn push(&mut self, a: usize, b: usize) {
        debug_assert_eq!(Some(a), self.next_a());
        debug_assert!(self.mate[a] == FREE && self.mate[b] == FREE && a != b);
        self.mate[a] = b;
        self.mate[b] = a;
        self.pairs.push((a, b));
        let xi = self.xi().max(a / 3 + 1).max(b / 3 + 1);
        self.xi_stack.push(xi);
    }

    pub fn pop(&mut self) {
        let (a, b) = self.pairs.pop().expect("pop on empty tree");
        self.mate[a] = FREE;
        self.mate[b] = FREE;
        self.xi_stack.pop();
    }

    /// Depth-first walk of the subtree below the current prefix, calling `emit`
    /// on every complete involution that survives `filter`.
    pub fn walk<P, E>(&mut self, filter: &mut P, emit: &mut E)
    where
        P: PrefixFilter + ?Sized,
        E: FnMut(&[(usize, usize)]) + ?Sized,
    {
        if self.is_complete() {
            emit(&self.pairs);
            return;
        }
        let a = self.next_a().expect("incomplete tree has a free point");
        let xi = self.xi().max(a / 3 + 1);
        let limit = 3 * xi;
        let mut b = a + 1;
        while b <= limit && b < self.n {
            if b == limit || self.mate[b] == FREE {
                self.push(a, b);
                if filter.push(a, b) {
                    self.walk(filter, emit);
                }
                filter.pop();
                self.pop();
            }
            b += 1;
        }
    }

    /// All surviving prefixes with `depth` pairs (or complete involutions, if
    /// shorter), in walk order.
    pub fn prefixes<P: PrefixFilter + ?Sized>(&mut self, depth: usize, filter: &mut P) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        self.collect_prefixes(depth, filter, &mut out);
        out
    }

    fn collect_prefixes<P: PrefixFilter + ?Sized>(
        &mut self,
        depth: usize,
        filter: &mut P,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if self.pairs.len() >= depth || self.is_complete() {
            out.push(self.pairs.clone());
            return;
        }
        for b in self.candidates() {
            let a = self.next_a().unwrap();
            self.push(a, b);
            if filter.push(a, b) {
                self.collect_prefixes(depth, filter, out);
            }
            filter.pop();
            self.pop();
        }
    }

    /// Replays a prefix produced by [`prefixes`](Self::prefixes) onto a fresh
    /// tree and filter. Returns `false` if the filter rejects any step (the
    /// caller must then discard the filter state).
    pub fn replay<P: PrefixFilter + ?Sized>(&mut self, prefix: &[(usize, usize)], filter: &mut P) -> bool {
        for &(a, b) in prefix {
            self.push(a, b);
            if !filter.push(a, b) {
                return false;
            }
        }
        true
    }
}

/// Streams canonical involutions of degree `n` (pairs `n/2`) as 0-based pair lists.
pub fn canonical_involutions<P, E>(n: usize, filter: &mut P, emit: &mut E)
where
    P: PrefixFilter + ?Sized,
    E: FnMut(&[(usize, usize)]) + ?Sized,
{
    InvolutionTree::new(n).walk(filter, emit);
}
