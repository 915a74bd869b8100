//! Transitive `(g1, g2, g3, g4)` on `4n` points of types `2^(2n)`, `2^(2n)`,
//! `n^4` and a transposition with `g1 g2 g3 g4` a transposition, for small `n`.
//!
//! `g3` is fixed to `(1,..,n)(n+1,..,2n)...`. For each ordered pair of
//! transpositions `(g5, g4)`, `s = g1 g2 = g5 g4 g3^-1` is determined; it is a
//! product of two fixed-point-free involutions only if its cycle lengths pair
//! up, and then `g1` runs over all fixed-point-free involutions with
//! `g2 = g1 s`.

use crate::error::Error;
use crate::perm::{is_transitive, standard_regular, Permutation};

fn pairs_up(p: &Permutation) -> bool {
    p.cycle_type().multiplicities().iter().all(|&(_, m)| m % 2 == 0)
}

fn fpf_involutions(n: usize) -> Vec<Permutation> {
    fn rec(mate: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some(a) = mate.iter().position(|&m| m == usize::MAX) else {
            out.push(Permutation::from_images(mate.clone()).expect("involution"));
            return;
        };
        for b in a + 1..mate.len() {
            if mate[b] == usize::MAX {
                mate[a] = b;
                mate[b] = a;
                rec(mate, out);
                mate[a] = usize::MAX;
                mate[b] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; n], &mut out);
    out
}

fn is_fpf_involution(p: &Permutation) -> bool {
    (0..p.degree()).all(|x| p.apply(x) != x && p.apply(p.apply(x)) == x)
}

/// All transitive tuples `[g1, g2, g3, g4]` with the fixed `g3`, in a
/// deterministic order.
pub fn dn_witness_search(n: usize) -> Result<Vec<[Permutation; 4]>, Error> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidArgument(format!("dn witness search needs n in 2..=3, got {n}")));
    }
    let d = 4 * n;
    let g3 = standard_regular(d, n);
    let g3_inv = g3.inverse();
    let involutions = fpf_involutions(d);
    let transpositions: Vec<Permutation> = (0..d)
        .flat_map(|a| (a + 1..d).map(move |b| Permutation::transposition(d, a, b)))
        .collect();
    let mut out = Vec::new();
    for g5 in &transpositions {
        for g4 in &transpositions {
            let s = Permutation::product_all([g5, g4, &g3_inv])?;
            if !pairs_up(&s) {
                continue;
            }
            for g1 in &involutions {
                let g2 = g1.product(&s)?;
                if !is_fpf_involution(&g2) {
                    continue;
                }
                let tuple = [g1.clone(), g2, g3.clone(), g4.clone()];
                if is_transitive(&tuple)? {
                    debug_assert_eq!(Permutation::product_all(tuple.iter())?, *g5);
                    out.push(tuple);
                }
            }
        }
    }
    Ok(out)
}
