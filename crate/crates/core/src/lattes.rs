//! Lattès maps on a finite model of an elliptic curve.
//!
//! The curve enters only through its torsion: `E[N]` is modelled as
//! `(Z/N)^2`. A point of the line `P^1 = E/±1` is a class `{P, -P}`. The map
//! `<n>` is induced by multiplication by `n`; its branch points are the four
//! classes of 2-torsion points, and a point `Q` over them is ramified (index
//! 2) unless `Q` is itself 2-torsion, where the quotient map already ramifies.

use std::collections::BTreeMap;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::ramification::RamificationProfile;

/// A point of `(Z/N)^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorsionPoint {
    pub a: u32,
    pub b: u32,
    pub modulus: u32,
}

impl TorsionPoint {
    pub fn new(a: u32, b: u32, modulus: u32) -> Self {
        assert!(modulus > 0);
        TorsionPoint {
            a: a % modulus,
            b: b % modulus,
            modulus,
        }
    }

    pub fn zero(modulus: u32) -> Self {
        Self::new(0, 0, modulus)
    }

    pub fn scale(self, k: u32) -> Self {
        let n = self.modulus as u64;
        let k = k as u64;
        Self::new(((self.a as u64 * k) % n) as u32, ((self.b as u64 * k) % n) as u32, self.modulus)
    }

    pub fn is_two_torsion(self) -> bool {
        self.scale(2) == Self::zero(self.modulus)
    }

    /// All points of the model.
    pub fn all(modulus: u32) -> impl Iterator<Item = TorsionPoint> {
        (0..modulus).flat_map(move |a| (0..modulus).map(move |b| TorsionPoint::new(a, b, modulus)))
    }
}

impl Neg for TorsionPoint {
    type Output = Self;
    fn neg(self) -> Self {
        let n = self.modulus;
        Self::new((n - self.a) % n, (n - self.b) % n, n)
    }
}

impl Add for TorsionPoint {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        Self::new(self.a + other.a, self.b + other.b, self.modulus)
    }
}

/// The class `{P, -P}`, represented by the smaller coordinate pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointClass {
    pub representative: TorsionPoint,
}

impl PointClass {
    pub fn of(p: TorsionPoint) -> Self {
        PointClass {
            representative: p.min(-p),
        }
    }

    /// Number of points in the class (1 for 2-torsion).
    pub fn size(self) -> u32 {
        if self.representative.is_two_torsion() {
            1
        } else {
            2
        }
    }
}

/// Ramification of `<n>` over the four branch classes, in the order
/// `0, (1/2, 0), (0, 1/2), (1/2, 1/2)`.
pub fn lattes_profile(n: u32) -> Result<RamificationProfile, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Lattès degree needs n >= 2, got {n}")));
    }
    let modulus = 2 * n;
    let branch = [(0, 0), (n, 0), (0, n), (n, n)].map(|(a, b)| TorsionPoint::new(a, b, modulus));
    let types = branch
        .iter()
        .map(|&p| {
            let mut classes: BTreeMap<PointClass, u32> = BTreeMap::new();
            for q in TorsionPoint::all(modulus).filter(|q| q.scale(n) == p) {
                *classes.entry(PointClass::of(q)).or_default() += 1;
            }
            let indices = classes
                .into_iter()
                .map(|(c, count)| {
                    debug_assert_eq!(count, c.size());
                    // the quotient E -> P^1 is ramified exactly at 2-torsion
                    if c.size() == 1 {
                        1
                    } else {
                        2
                    }
                })
                .collect();
            Partition::new(indices)
        })
        .collect::<Result<Vec<_>, _>>()?;
    RamificationProfile::new(n * n, types)
}

/// Riemann–Hurwitz for `<n>`: the four branch classes carry all of the
/// `2 n^2 - 2` ramification of a degree `n^2` self-map of `P^1`.
pub fn verify_rh_accounting(n: u32) -> bool {
    lattes_profile(n).is_ok_and(|p| p.total_ram_degree() == 2 * n * n - 2)
}

/// Torsion model of the lifting step: for all `P, Q` in `E[lm]` (inside
/// `E[l^2 m^2]`) with `mP = lQ`, some `R` has `lR = P` and `mR = Q`, after
/// possibly replacing `Q` by `-Q`.
pub fn verify_sharpness(l: u32, m: u32) -> bool {
    sharpness_failures(l, m, 1).is_empty()
}

/// Pairs `(P, Q)` (in the small model) that do not lift, up to `limit` of them.
pub fn sharpness_failures(l: u32, m: u32, limit: usize) -> Vec<(TorsionPoint, TorsionPoint)> {
    let small = l * m;
    let big = small * small;
    let big_us = big as usize;
    // lifts[x * big + y]: some r has l r = x and m r = y (mod big)
    let mut lifts = vec![false; big_us * big_us];
    for r in 0..big as u64 {
        let x = (l as u64 * r) % big as u64;
        let y = (m as u64 * r) % big as u64;
        lifts[x as usize * big_us + y as usize] = true;
    }
    let liftable = |p: u32, q: u32| lifts[(p * small) as usize * big_us + (q * small) as usize];
    let mut out = Vec::new();
    for p in TorsionPoint::all(small) {
        let mp = p.scale(m);
        for q in TorsionPoint::all(small).filter(|q| q.scale(l) == mp) {
            let mq = -q;
            let direct = liftable(p.a, q.a) && liftable(p.b, q.b);
            let negated = liftable(p.a, mq.a) && liftable(p.b, mq.b);
            if !(direct || negated) {
                out.push((p, q));
                if out.len() >= limit {
                    return out;
                }
            }
        }
    }
    out
}
