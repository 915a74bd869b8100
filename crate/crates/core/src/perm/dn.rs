//! Two-block splitting for D_n-type monodromy: `g1, g2` of type `2^(2n)`,
//! `g3` of type `n^4`, `g4` and `g1 g2 g3 g4` transpositions, transitive on
//! `4n` points. Such tuples admit `X = Y ⊔ Z` with
//! `g1(Y) = g2(Y) = g3(Z) = g4(Z) = Z`.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::perm::group::orbits;
use crate::perm::union_find::ParityUnionFind;
use crate::perm::Permutation;

/// `Y` holds point 0; both halves sorted, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DnSplit {
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

impl DnSplit {
    /// The four set identities, checked point by point.
    pub fn check(&self, g1: &Permutation, g2: &Permutation, g3: &Permutation, g4: &Permutation) -> bool {
        let n = g1.degree();
        let mut in_z = vec![false; n];
        for &z in &self.z {
            in_z[z] = true;
        }
        if self.y.len() + self.z.len() != n || self.y.iter().any(|&y| in_z[y]) {
            return false;
        }
        let maps_into_z = |g: &Permutation, from: &[usize]| from.iter().all(|&x| in_z[g.apply(x)]);
        // images of equal-size sets: "into" is "onto"
        self.y.len() == self.z.len()
            && maps_into_z(g1, &self.y)
            && maps_into_z(g2, &self.y)
            && maps_into_z(g3, &self.z)
            && maps_into_z(g4, &self.z)
    }
}

/// Checks the hypotheses, then 2-colours the points so that `g1` and `g2`
/// swap colours and `g3`, `g4` keep them. `g1 g2` keeps colours, so each
/// `<g1 g2>`-orbit is monochrome and `g1` pairs it with an orbit of the other
/// colour. `Ok(None)` would mean the colouring is contradictory.
pub fn verify_dn_partition(
    g1: &Permutation,
    g2: &Permutation,
    g3: &Permutation,
    g4: &Permutation,
    n: usize,
) -> Result<Option<DnSplit>, Error> {
    let deg = 4 * n;
    let gens = [g1, g2, g3, g4];
    if let Some(g) = gens.iter().find(|g| g.degree() != deg) {
        return Err(Error::DegreeMismatch {
            left: deg,
            right: g.degree(),
        });
    }
    let n32 = n as u32;
    let invol = Partition::uniform(2, 2 * n32);
    let expect = |name: &str, g: &Permutation, t: &Partition| -> Result<(), Error> {
        let ct = g.cycle_type();
        if &ct != t {
            return Err(Error::Hypothesis(format!("{name} has type {ct}, expected {t}")));
        }
        Ok(())
    };
    expect("g1", g1, &invol)?;
    expect("g2", g2, &invol)?;
    expect("g3", g3, &Partition::uniform(n32, 4))?;
    let transp = Partition::transposition(deg as u32);
    expect("g4", g4, &transp)?;
    let g5 = Permutation::product_all([g1, g2, g3, g4])?;
    expect("g1 g2 g3 g4", &g5, &transp)?;
    let orbs = orbits(&[g1.clone(), g2.clone(), g3.clone(), g4.clone()])?;
    if orbs.len() != 1 {
        return Err(Error::Hypothesis(format!(
            "<g1,g2,g3,g4> is not transitive ({} orbits)",
            orbs.len()
        )));
    }

    let mut uf = ParityUnionFind::new(deg);
    for (g, differ) in [(g1, true), (g2, true), (g3, false), (g4, false)] {
        for x in 0..deg {
            if !uf.relate(x, g.apply(x), differ) {
                return Ok(None);
            }
        }
    }
    let base = uf.find(0).1;
    let (mut y, mut z) = (Vec::new(), Vec::new());
    for x in 0..deg {
        if uf.find(x).1 == base {
            y.push(x);
        } else {
            z.push(x);
        }
    }
    let split = DnSplit { y, z };
    Ok(split.check(g1, g2, g3, g4).then_some(split))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::standard_regular;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn hypothesis_errors() {
        let g3 = standard_regular(8, 2);
        let g1 = perm(8, "(1,3)(2,4)(5,7)(6,8)");
        // g4 not a transposition
        let err = verify_dn_partition(&g1, &g1, &g3, &perm(8, "(1,2,3)"), 2).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref m) if m.contains("g4")), "{err}");
        // wrong degree
        assert!(matches!(
            verify_dn_partition(&g1, &g1, &g3, &perm(12, "(1,2)"), 2),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn intransitive_tuple_is_rejected() {
        // Everything preserves {1..4} and {5..8}.
        let g1 = perm(8, "(1,2)(3,4)(5,6)(7,8)");
        let g2 = perm(8, "(1,3)(2,4)(5,7)(6,8)");
        let g3 = perm(8, "(1,4)(2,3)(5,8)(6,7)");
        let g4 = perm(8, "(1,2)");
        let g5 = Permutation::product_all([&g1, &g2, &g3, &g4]).unwrap();
        assert_eq!(g5.cycle_type(), Partition::transposition(8));
        let err = verify_dn_partition(&g1, &g2, &g3, &g4, 2).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref m) if m.contains("transitive")), "{err}");
    }

    #[test]
    fn split_check_is_pointwise() {
        let g = perm(4, "(1,3)(2,4)");
        let id = Permutation::identity(4);
        let good = DnSplit { y: vec![0, 1], z: vec![2, 3] };
        assert!(good.check(&g, &g, &id, &id));
        let bad = DnSplit { y: vec![0, 2], z: vec![1, 3] };
        assert!(!bad.check(&g, &g, &id, &id));
    }
}
