//! Five elements of `S_10` of types `1^8 x`, `1^6 2^2`, `2^5`, `2^5`, `2^5`
//! with product 1.
//!
//! `h1` is fixed up to conjugacy. For each `h2`, `h3` the remainder
//! `u = h1 h2 h3` must equal `(h4 h5)^-1`, a product of two fixed-point-free
//! involutions, so every cycle length of `u` occurs an even number of times.
//! For each surviving `u`, `h4` runs over all fixed-point-free involutions
//! and `h5 = h4 u^-1` is checked.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::union_find::UnionFind;
use crate::perm::Permutation;

const N: usize = 10;
type P = [u8; N];

/// The type `1^8 x` of the first element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum XReading {
    /// `x = 2`: a transposition.
    Two,
    /// `x = 1^2`: the identity.
    Trivial,
}

impl XReading {
    pub const ALL: [XReading; 2] = [XReading::Two, XReading::Trivial];
}

impl fmt::Display for XReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XReading::Two => "2",
            XReading::Trivial => "trivial",
        })
    }
}

impl FromStr for XReading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "2" => Ok(XReading::Two),
            "trivial" | "1" => Ok(XReading::Trivial),
            _ => Err(Error::Parse(format!("x reading must be 2 or trivial, got {s:?}"))),
        }
    }
}

fn identity() -> P {
    std::array::from_fn(|i| i as u8)
}

/// Left to right: `x -> b(a(x))`.
fn mul(a: &P, b: &P) -> P {
    std::array::from_fn(|i| b[a[i] as usize])
}

fn inverse(a: &P) -> P {
    let mut out = [0; N];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn is_fpf_involution(a: &P) -> bool {
    (0..N).all(|i| a[i] as usize != i && a[a[i] as usize] as usize == i)
}

/// Every cycle length occurs an even number of times.
fn pairs_up(a: &P) -> bool {
    let mut seen = [false; N];
    let mut count = [0u8; N + 1];
    for s in 0..N {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = a[x] as usize;
        }
        count[len] += 1;
    }
    count.iter().all(|c| c % 2 == 0)
}

/// Involutions with exactly `k` transpositions.
fn involutions(k: usize) -> Vec<P> {
    fn rec(start: usize, left: usize, cur: &mut P, out: &mut Vec<P>) {
        if left == 0 {
            out.push(*cur);
            return;
        }
        for a in start..N {
            if cur[a] as usize != a {
                continue;
            }
            for b in a + 1..N {
                if cur[b] as usize != b {
                    continue;
                }
                cur.swap(a, b);
                rec(a + 1, left - 1, cur, out);
                cur.swap(a, b);
            }
        }
    }
    let mut out = Vec::new();
    rec(0, k, &mut identity(), &mut out);
    out
}

fn transitive(gens: &[P]) -> bool {
    let mut uf = UnionFind::new(N);
    let mut merges = 0;
    for g in gens {
        for (x, &y) in g.iter().enumerate() {
            if uf.union(x, y as usize) {
                merges += 1;
            }
        }
    }
    merges == N - 1
}

fn to_perm(a: &P) -> Permutation {
    Permutation::from_images(a.iter().map(|&x| x as usize).collect()).expect("valid by construction")
}

/// Visits every `(h1, .., h5)` with the stated types and product 1 (with
/// `h1` fixed); `transitive_only` drops intransitive ones.
fn scan(reading: XReading, transitive_only: bool, mut visit: impl FnMut(&[P; 5]) -> bool) {
    let mut h1 = identity();
    if reading == XReading::Two {
        h1.swap(0, 1);
    }
    let doubles = involutions(2);
    let fpf = involutions(5);
    for h2 in &doubles {
        let h12 = mul(&h1, h2);
        for h3 in &fpf {
            let u = mul(&h12, h3);
            if !pairs_up(&u) {
                continue;
            }
            let u_inv = inverse(&u);
            for h4 in &fpf {
                let h5 = mul(h4, &u_inv);
                if !is_fpf_involution(&h5) {
                    continue;
                }
                let tuple = [h1, *h2, *h3, *h4, h5];
                debug_assert_eq!(tuple.iter().fold(identity(), |acc, g| mul(&acc, g)), identity());
                if transitive_only && !transitive(&tuple) {
                    continue;
                }
                if !visit(&tuple) {
                    return;
                }
            }
        }
    }
}

/// All transitive solutions, with `h1` fixed to `(1,2)` or the identity.
pub fn s10_search(reading: XReading) -> Vec<[Permutation; 5]> {
    let mut out = Vec::new();
    scan(reading, true, |t| {
        out.push(std::array::from_fn(|i| to_perm(&t[i])));
        true
    });
    out
}

/// Number of solutions, optionally without the transitivity requirement.
pub fn s10_count(reading: XReading, transitive_only: bool) -> u64 {
    let mut n = 0;
    scan(reading, transitive_only, |_| {
        n += 1;
        true
    });
    n
}
