use std::collections::{HashSet, VecDeque};

use crate::error::Error;
use crate::perm::Permutation;
use crate::perm::union_find::UnionFind;

/// Default closure cap for [`group_order_small`].
pub const DEFAULT_ORDER_CAP: usize = 10_000;

fn check_degrees(gens: &[Permutation]) -> Result<usize, Error> {
    let n = gens
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?
        .degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: g.degree(),
        });
    }
    Ok(n)
}

/// Orbits of `<gens>`, each sorted, ordered by smallest point.
pub fn orbits(gens: &[Permutation]) -> Result<Vec<Vec<usize>>, Error> {
    let n = check_degrees(gens)?;
    let mut uf = UnionFind::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    Ok(uf.classes())
}

pub fn is_transitive(gens: &[Permutation]) -> Result<bool, Error> {
    Ok(orbits(gens)?.len() == 1)
}

/// Order of `<gens>` by breadth-first closure, or `None` once more than `cap`
/// elements have been found.
pub fn group_order_small(gens: &[Permutation], cap: usize) -> Result<Option<usize>, Error> {
    let n = check_degrees(gens)?;
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.product(g)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Ok(None);
                }
                queue.push_back(y);
            }
        }
    }
    Ok(Some(seen.len()))
}
