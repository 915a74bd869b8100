//! Disjoint sets over `0..n`, plus a variant that tracks the parity of each
//! point relative to its root (used to 2-colour points under "same side" /
//! "opposite side" constraints).

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns `true` if two classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn class_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }

    /// Classes as sorted point lists, ordered by smallest point.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = out.len();
                out.push(Vec::new());
            }
            out[index[r]].push(x);
        }
        out
    }
}

/// Union-find where each point carries a bit relative to its root.
#[derive(Clone, Debug)]
pub struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    pub fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    /// `(root, parity of x relative to root)`
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Requires `colour(a) xor colour(b) == differ`. Returns `false` on contradiction.
    pub fn relate(&mut self, a: usize, b: usize, differ: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == differ;
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ differ;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_union_find() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 5));
        assert!(!uf.union(0, 5));
        assert_eq!(uf.class_size(5), 3);
        assert_eq!(uf.classes(), vec![vec![0, 3, 5], vec![1], vec![2], vec![4]]);
    }

    #[test]
    fn parity_constraints() {
        let mut uf = ParityUnionFind::new(4);
        assert!(uf.relate(0, 1, true));
        assert!(uf.relate(1, 2, true));
        assert!(uf.relate(0, 2, false));
        assert!(!uf.relate(0, 2, true));
        assert!(uf.relate(3, 2, true));
        let colours: Vec<bool> = (0..4).map(|x| uf.find(x).1).collect();
        assert_eq!(colours[0], colours[2]);
        assert_ne!(colours[0], colours[1]);
        assert_ne!(colours[3], colours[2]);
    }
}
