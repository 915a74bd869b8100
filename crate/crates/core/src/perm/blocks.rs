use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::group::orbits;
use crate::perm::union_find::UnionFind;
use crate::perm::Permutation;

/// A partition of `{0, .., n-1}` into blocks of one common size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct BlockSystem {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Blocks are sorted internally and ordered by smallest point.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let n: usize = blocks.iter().map(Vec::len).sum();
        let size = blocks.first().map_or(0, Vec::len);
        if size == 0 || blocks.iter().any(|b| b.len() != size) {
            return Err(Error::InvalidArgument("blocks must be nonempty and of equal size".into()));
        }
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                if x >= n || block_of[x] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "blocks do not partition 0..{n} (point {x})"
                    )));
                }
                block_of[x] = i;
            }
        }
        Ok(BlockSystem { block_of, blocks })
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Image of block `i` under `g`, if `g` maps it onto a block.
    fn image_block(&self, g: &Permutation, i: usize) -> Option<usize> {
        let target = self.block_of[g.apply(self.blocks[i][0])];
        self.blocks[i]
            .iter()
            .all(|&x| self.block_of[g.apply(x)] == target)
            .then_some(target)
    }

    pub fn preserved_by(&self, g: &Permutation) -> bool {
        g.degree() == self.degree() && (0..self.num_blocks()).all(|i| self.image_block(g, i).is_some())
    }

    /// `g` maps every block to itself.
    pub fn fixes_every_block(&self, g: &Permutation) -> bool {
        (0..g.degree()).all(|x| self.block_of[g.apply(x)] == self.block_of[x])
    }

    /// Blocks as 1-based point lists.
    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|x| x + 1).collect())
            .collect()
    }
}

impl From<BlockSystem> for Vec<Vec<usize>> {
    fn from(b: BlockSystem) -> Self {
        b.to_one_based()
    }
}

/// Serialized 1-based.
impl TryFrom<Vec<Vec<usize>>> for BlockSystem {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        let zero_based = blocks
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|x| x.checked_sub(1).ok_or_else(|| Error::Parse("points are 1-based".into())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        BlockSystem::new(zero_based)
    }
}

/// Smallest block system in which `a` and `b` share a block.
pub fn minimal_block_classes(gens: &[Permutation], a: usize, b: usize, size_limit: usize) -> Option<UnionFind> {
    let n = gens.first()?.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy) {
                if uf.class_size(gx) > size_limit {
                    return None;
                }
                queue.push((gx, gy));
            }
        }
    }
    Some(uf)
}

/// A system of blocks of size 2 preserved by `gens`, trying partners of point 0
/// in increasing order and returning the first that works.
pub fn pair_block_system(gens: &[Permutation]) -> Result<Option<BlockSystem>, Error> {
    let orbs = orbits(gens)?;
    if orbs.len() != 1 {
        return Err(Error::NotTransitive { orbits: orbs.len() });
    }
    let n = gens[0].degree();
    if !n.is_multiple_of(2) {
        return Ok(None);
    }
    for beta in 1..n {
        let Some(mut uf) = minimal_block_classes(gens, 0, beta, 2) else {
            continue;
        };
        let classes = uf.classes();
        if classes.iter().all(|c| c.len() == 2) {
            let bs = BlockSystem::new(classes)?;
            debug_assert!(gens.iter().all(|g| bs.preserved_by(g)));
            return Ok(Some(bs));
        }
    }
    Ok(None)
}

/// The permutations induced on block indices.
pub fn block_action(gens: &[Permutation], bs: &BlockSystem) -> Result<Vec<Permutation>, Error> {
    gens.iter()
        .enumerate()
        .map(|(gi, g)| {
            if g.degree() != bs.degree() {
                return Err(Error::DegreeMismatch {
                    left: bs.degree(),
                    right: g.degree(),
                });
            }
            let images = (0..bs.num_blocks())
                .map(|i| bs.image_block(g, i).ok_or(Error::BlockNotPreserved { generator: gi }))
                .collect::<Result<Vec<_>, _>>()?;
            Permutation::from_images(images)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::group::group_order_small;
    use crate::perm::standard_regular;
    use proptest::prelude::*;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn klein_four() {
        let gens = [perm(4, "(1,2)(3,4)"), perm(4, "(1,3)(2,4)")];
        let bs = pair_block_system(&gens).unwrap().unwrap();
        assert_eq!(bs.blocks(), &[vec![0, 1], vec![2, 3]]);
        let action = block_action(&gens, &bs).unwrap();
        assert!(action[0].is_identity());
        assert_eq!(action[1], perm(2, "(1,2)"));
    }

    #[test]
    fn symmetric_group_is_primitive() {
        for n in 4..9 {
            let gens = [standard_regular(n, n), Permutation::transposition(n, 0, 1)];
            assert_eq!(pair_block_system(&gens).unwrap(), None);
        }
        assert!(matches!(
            pair_block_system(&[perm(4, "(1,2)")]),
            Err(Error::NotTransitive { orbits: 3 })
        ));
    }

    #[test]
    fn action_basics() {
        let bs = BlockSystem::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        let a = block_action(&[Permutation::identity(4)], &bs).unwrap();
        assert!(a[0].is_identity());
        let a = block_action(&[perm(4, "(1,2)(3,4)")], &bs).unwrap();
        assert!(a[0].is_identity());
        assert!(matches!(
            block_action(&[perm(4, "(2,3)")], &bs),
            Err(Error::BlockNotPreserved { generator: 0 })
        ));
        assert!(BlockSystem::new(vec![vec![0, 1], vec![2]]).is_err());
        assert!(BlockSystem::new(vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn dihedral_octagon() {
        // D8 on 8 points has the antipodal pairs as blocks.
        let gens = [standard_regular(8, 8), perm(8, "(2,8)(3,7)(4,6)")];
        let bs = pair_block_system(&gens).unwrap().unwrap();
        for g in &gens {
            assert!(bs.preserved_by(g));
        }
        let action = block_action(&gens, &bs).unwrap();
        assert_eq!(group_order_small(&action, 100).unwrap(), Some(8));
        let json = serde_json::to_string(&bs).unwrap();
        assert_eq!(serde_json::from_str::<BlockSystem>(&json).unwrap(), bs);
    }

    // Wreath-product style generators on 2k points preserving {2i, 2i+1}.
    fn pair_preserving(k: usize, seed: u64) -> Permutation {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut blocks: Vec<usize> = (0..k).collect();
        blocks.shuffle(&mut rng);
        let mut images = vec![0; 2 * k];
        for (i, &b) in blocks.iter().enumerate() {
            let flip = rng.gen_bool(0.5) as usize;
            images[2 * i] = 2 * b + flip;
            images[2 * i + 1] = 2 * b + 1 - flip;
        }
        Permutation::from_images(images).unwrap()
    }

    proptest! {
        #[test]
        fn block_action_is_a_homomorphism(k in 1usize..12, s1 in any::<u64>(), s2 in any::<u64>()) {
            let g = pair_preserving(k, s1);
            let h = pair_preserving(k, s2);
            let bs = BlockSystem::new((0..k).map(|i| vec![2 * i, 2 * i + 1]).collect()).unwrap();
            let gh = g.product(&h).unwrap();
            let acts = block_action(&[g, h, gh], &bs).unwrap();
            prop_assert_eq!(acts[0].product(&acts[1]).unwrap(), acts[2].clone());
        }

        #[test]
        fn found_systems_are_valid(k in 2usize..10, s1 in any::<u64>(), s2 in any::<u64>()) {
            let gens = [pair_preserving(k, s1), pair_preserving(k, s2), standard_regular(2 * k, 2 * k)];
            if let Some(bs) = pair_block_system(&gens).unwrap() {
                prop_assert_eq!(bs.block_size(), 2);
                for g in &gens {
                    prop_assert!(bs.preserved_by(g));
                }
            }
        }
    }
}
