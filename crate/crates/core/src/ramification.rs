//! Riemann–Hurwitz bookkeeping for a pair of covers `L`, `M` of the line and
//! the numerical scans that cut the possible local monodromy down to a short
//! list.
//!
//! Over a branch point with ramification types `e = (e_j)` for `L` and
//! `f = (f_k)` for `M`, the compositum picks up ramification
//!
//! ```text
//! E = sum_{j,k} gcd(e_j, f_k) * (lcm(e_j, f_k) / e_j - 1)   (over L)
//! F = sum_{j,k} gcd(e_j, f_k) * (lcm(e_j, f_k) / f_k - 1)   (over M)
//! ```
//!
//! and genus zero of the compositum forces `sum E = 2m - 2`, `sum F = 2l - 2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{partitions_of, Partition};

/// One partition of `degree` per branch point. Unramified points (`1^degree`)
/// are kept: they still contribute to `E` and `F` when the other cover ramifies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub struct RamificationProfile {
    degree: u32,
    branch_types: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct ProfileRepr {
    degree: u32,
    branch_types: Vec<Partition>,
}

impl TryFrom<ProfileRepr> for RamificationProfile {
    type Error = Error;
    fn try_from(r: ProfileRepr) -> Result<Self, Error> {
        RamificationProfile::new(r.degree, r.branch_types)
    }
}

impl From<RamificationProfile> for ProfileRepr {
    fn from(p: RamificationProfile) -> Self {
        ProfileRepr {
            degree: p.degree,
            branch_types: p.branch_types,
        }
    }
}

impl RamificationProfile {
    pub fn new(degree: u32, branch_types: Vec<Partition>) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::InvalidProfile("degree must be positive".into()));
        }
        if let Some(bad) = branch_types.iter().find(|p| p.degree() != degree) {
            return Err(Error::InvalidProfile(format!(
                "branch type {bad} has degree {}, expected {degree}",
                bad.degree()
            )));
        }
        Ok(RamificationProfile { degree, branch_types })
    }

    /// Builds a profile from a nonempty list, taking the degree from the first entry.
    pub fn from_types(branch_types: Vec<Partition>) -> Result<Self, Error> {
        let degree = branch_types
            .first()
            .ok_or_else(|| Error::InvalidProfile("empty profile".into()))?
            .degree();
        Self::new(degree, branch_types)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn branch_types(&self) -> &[Partition] {
        &self.branch_types
    }

    pub fn len(&self) -> usize {
        self.branch_types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branch_types.is_empty()
    }

    /// Sum over branch points of the ramification degree.
    pub fn total_ram_degree(&self) -> u32 {
        self.branch_types.iter().map(Partition::ram_degree).sum()
    }

    /// Number of branch points with nontrivial ramification.
    pub fn ramified_points(&self) -> usize {
        self.branch_types.iter().filter(|p| p.ram_degree() > 0).count()
    }
}

/// `(1^4 2, 1^4 2, 1^2 2^2, 2^3, 2^3)`
impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.branch_types.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Comma-separated partitions in exponent notation, optionally parenthesised.
impl FromStr for RamificationProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let types = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Partition>, _>>()?;
        Self::from_types(types)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(E, F)` for one branch point with ramification types `pl` (of `L`) and `pm` (of `M`).
pub fn pair_ram_degrees(pl: &Partition, pm: &Partition) -> (u32, u32) {
    let mut e_sum = 0;
    let mut f_sum = 0;
    for &e in pl.parts() {
        for &f in pm.parts() {
            let g = gcd(e, f);
            let l = e / g * f;
            e_sum += g * (l / e - 1);
            f_sum += g * (l / f - 1);
        }
    }
    (e_sum, f_sum)
}

/// `(sum E_i, sum F_i)` over aligned branch points.
pub fn profile_pair_ram_degrees(
    pl: &RamificationProfile,
    pm: &RamificationProfile,
) -> Result<(u32, u32), Error> {
    if pl.len() != pm.len() {
        return Err(Error::InvalidProfile(format!(
            "profiles have {} and {} branch points",
            pl.len(),
            pm.len()
        )));
    }
    Ok(pl
        .branch_types()
        .iter()
        .zip(pm.branch_types())
        .map(|(a, b)| pair_ram_degrees(a, b))
        .fold((0, 0), |(e, f), (de, df)| (e + de, f + df)))
}

/// Genus zero: total ramification equals `2 * degree - 2`.
pub fn check_riemann_hurwitz(profile: &RamificationProfile) -> bool {
    profile.total_ram_degree() + 2 == 2 * profile.degree()
}

/// Unless both types are homogeneous of one index, `max(E, F) >= 2` once both
/// degrees are at least 4, and `>= 3` once both are at least 7.
pub fn check_inhomo_bound(pl: &Partition, pm: &Partition) -> Result<bool, Error> {
    let (l, m) = (pl.degree(), pm.degree());
    if l < 4 || m < 4 {
        return Err(Error::InvalidArgument(format!(
            "degrees must be at least 4, got {l} and {m}"
        )));
    }
    if let (Some(r), Some(s)) = (pl.homogeneity_index(), pm.homogeneity_index()) {
        if r == s {
            return Ok(true);
        }
    }
    let (e, f) = pair_ram_degrees(pl, pm);
    let threshold = if l >= 7 && m >= 7 { 3 } else { 2 };
    Ok(e.max(f) >= threshold)
}

/// `(l, m, R1, R2, S1, S2, a1, a2, b1, b2)` for the first two branch points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConstraintTuple {
    pub l: u32,
    pub m: u32,
    pub r1: u32,
    pub r2: u32,
    pub s1: u32,
    pub s2: u32,
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
}

impl ConstraintTuple {
    pub fn as_array(&self) -> [u32; 10] {
        [
            self.l, self.m, self.r1, self.r2, self.s1, self.s2, self.a1, self.a2, self.b1, self.b2,
        ]
    }

    pub fn from_array(v: [u32; 10]) -> Self {
        let [l, m, r1, r2, s1, s2, a1, a2, b1, b2] = v;
        ConstraintTuple { l, m, r1, r2, s1, s2, a1, a2, b1, b2 }
    }

    /// The generic outcome: `R2 = 1`, `m <= l + 1` and `1 <= S1 + S2 <= 2`.
    pub fn is_generic(&self) -> bool {
        self.r2 == 1 && self.m <= self.l + 1 && (1..=2).contains(&(self.s1 + self.s2))
    }
}

impl fmt::Display for ConstraintTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.as_array().map(|x| x.to_string());
        write!(f, "({})", v.join(","))
    }
}

/// `a` and `R` compatible with `a + R <= degree <= a + 2R`, the left
/// inequality strict unless `R = 0`.
pub fn fixed_ram_compatible(fixed: u32, ram: u32, degree: u32) -> bool {
    if ram == 0 {
        fixed == degree
    } else {
        fixed + ram < degree && degree <= fixed + 2 * ram
    }
}

/// Bound on `S2` in the tuple scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum S2Bound {
    /// `S2 < m/3`
    #[default]
    Strict,
    /// `S2 <= m/3`
    Inclusive,
}

impl S2Bound {
    fn admits(self, s2: u32, m: u32) -> bool {
        match self {
            S2Bound::Strict => 3 * s2 < m,
            S2Bound::Inclusive => 3 * s2 <= m,
        }
    }
}

/// Range of `a` compatible with `R` in degree `d` (see [`fixed_ram_compatible`]).
fn fixed_range(ram: u32, degree: u32) -> std::ops::RangeInclusive<u32> {
    if ram == 0 {
        degree..=degree
    } else if ram + 1 > degree {
        #[allow(clippy::reversed_empty_ranges)]
        {
            1..=0
        }
    } else {
        degree.saturating_sub(2 * ram)..=degree - ram - 1
    }
}

/// Scans `R1 = 1`, `1 <= R2`, `S2 < m/3` (or `<=`), `(m+6)/2 <= l <= m`,
/// `7 <= m <= 31`, the fixed-point inequalities for both points,
/// `a1 S1 + a2 S2 <= 2m - 2` and `b1 R1 + b2 R2 <= 2l - 2`, keeping the tuples
/// that are not generic. Sorted lexicographically.
pub fn enumerate_exceptional_tuples(bound: S2Bound) -> Vec<ConstraintTuple> {
    let mut out = Vec::new();
    let r1 = 1;
    for m in 7..=31u32 {
        for l in (m + 6).div_ceil(2)..=m {
            for r2 in 1..=2 * l - 2 {
                for s1 in 0..=2 * m - 2 {
                    for s2 in (0..=2 * m - 2).filter(|&s| bound.admits(s, m)) {
                        for a1 in fixed_range(r1, l) {
                            for a2 in fixed_range(r2, l) {
                                if a1 * s1 + a2 * s2 > 2 * m - 2 {
                                    continue;
                                }
                                for b1 in fixed_range(s1, m) {
                                    for b2 in fixed_range(s2, m) {
                                        if b1 * r1 + b2 * r2 > 2 * l - 2 {
                                            continue;
                                        }
                                        let t = ConstraintTuple {
                                            l, m, r1, r2, s1, s2, a1, a2, b1, b2,
                                        };
                                        if !t.is_generic() {
                                            out.push(t);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The degree-six scan: ordered pairs of 5-tuples of partitions of 6, the
/// first tuple weakly increasing in the partition order with every entry
/// ramified (so at most 5 parts), and
/// `sum R <= 10`, `sum S <= 10`, `sum E <= 10`, `sum F <= 10`.
pub fn enumerate_degree6_pairs() -> Vec<(RamificationProfile, RamificationProfile)> {
    const POINTS: usize = 5;
    const BOUND: u32 = 10;
    let mut all = partitions_of(6, None);
    all.reverse(); // increasing order
    let first_choices: Vec<&Partition> = all
        .iter()
        .filter(|p| p.len() <= 5 && p.ram_degree() >= 1)
        .collect();

    let mut out = Vec::new();
    let mut first: Vec<&Partition> = Vec::with_capacity(POINTS);
    let mut second: Vec<&Partition> = Vec::with_capacity(POINTS);

    fn second_rec<'a>(
        first: &[&'a Partition],
        all: &'a [Partition],
        second: &mut Vec<&'a Partition>,
        (s_sum, e_sum, f_sum): (u32, u32, u32),
        out: &mut Vec<(RamificationProfile, RamificationProfile)>,
    ) {
        let i = second.len();
        if i == first.len() {
            let to_profile = |v: &[&Partition]| {
                RamificationProfile::new(6, v.iter().map(|&p| p.clone()).collect())
                    .expect("all partitions have degree 6")
            };
            out.push((to_profile(first), to_profile(second)));
            return;
        }
        for q in all {
            let (e, f) = pair_ram_degrees(first[i], q);
            let next = (s_sum + q.ram_degree(), e_sum + e, f_sum + f);
            if next.0 <= BOUND && next.1 <= BOUND && next.2 <= BOUND {
                second.push(q);
                second_rec(first, all, second, next, out);
                second.pop();
            }
        }
    }

    fn first_rec<'a>(
        start: usize,
        choices: &[&'a Partition],
        all: &'a [Partition],
        first: &mut Vec<&'a Partition>,
        second: &mut Vec<&'a Partition>,
        r_sum: u32,
        out: &mut Vec<(RamificationProfile, RamificationProfile)>,
    ) {
        if first.len() == POINTS {
            second_rec(first, all, second, (0, 0, 0), out);
            return;
        }
        for (idx, &p) in choices.iter().enumerate().skip(start) {
            if r_sum + p.ram_degree() > BOUND {
                continue;
            }
            first.push(p);
            first_rec(idx, choices, all, first, second, r_sum + p.ram_degree(), out);
            first.pop();
        }
    }

    first_rec(0, &first_choices, &all, &mut first, &mut second, 0, &mut out);
    out
}

/// All `2 <= r3 <= r4 <= r5 <= n_max` with `1/r3 + 1/r4 + 1/r5 > 1`.
pub fn solve_trivalent_dynkin(n_max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for r3 in 2..=n_max {
        for r4 in r3..=n_max {
            for r5 in r4..=n_max {
                // 1/r3 + 1/r4 + 1/r5 > 1, cleared of denominators
                if r4 * r5 + r3 * r5 + r3 * r4 > r3 * r4 * r5 {
                    out.push((r3, r4, r5));
                }
            }
        }
    }
    out
}

/// The four families of local monodromy pairs that survive the numerical
/// conditions when `L` ramifies over at least five points.
///
/// The families are listed as D_n, E6, E7, E8 (items 1 to 4 of the list);
/// elsewhere they are cited as items 2 to 5, the same four pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Parameter `n >= 2`, degree `4n`; its trivalent triple is `(2, 2, n)`.
    Dn(u32),
    E6,
    E7,
    E8,
}

impl Family {
    pub fn degree(&self) -> u32 {
        match *self {
            Family::Dn(n) => 4 * n,
            Family::E6 => 24,
            Family::E7 => 48,
            Family::E8 => 120,
        }
    }

    /// `(r3, r4, r5)`
    pub fn dynkin_triple(&self) -> (u32, u32, u32) {
        match *self {
            Family::Dn(n) => (2, 2, n),
            Family::E6 => (2, 3, 3),
            Family::E7 => (2, 3, 4),
            Family::E8 => (2, 3, 5),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dn(n) => write!(f, "dn:{n}"),
            Family::E6 => f.write_str("e6"),
            Family::E7 => f.write_str("e7"),
            Family::E8 => f.write_str("e8"),
        }
    }
}

/// `e6`, `e7`, `e8`, or `dn:N` / `dnN`.
impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "e6" => Ok(Family::E6),
            "e7" => Ok(Family::E7),
            "e8" => Ok(Family::E8),
            other => {
                let n = other
                    .strip_prefix("dn")
                    .map(|t| t.trim_start_matches([':', '=']))
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))?;
                Ok(Family::Dn(n))
            }
        }
    }
}

/// `(pi_L, pi_M)` for a family, six branch points each. Both covers have the
/// same degree.
pub fn family_profile(family: Family) -> Result<(RamificationProfile, RamificationProfile), Error> {
    if let Family::Dn(n) = family {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("D_n family needs n >= 2, got {n}")));
        }
    }
    let d = family.degree();
    let (r3, r4, r5) = family.dynkin_triple();
    let t = Partition::transposition(d);
    let one = Partition::trivial(d);
    let h = |r: u32| Partition::uniform(r, d / r);
    let pl = vec![t.clone(), t.clone(), h(r3), h(r4), h(r5), one.clone()];
    let pm = vec![t.clone(), one, h(r3), h(r4), h(r5), t];
    Ok((RamificationProfile::new(d, pl)?, RamificationProfile::new(d, pm)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn prof(s: &str) -> RamificationProfile {
        s.parse().unwrap()
    }

    // Independent form: gcd * lcm / e = f, so each term is f - gcd(e, f).
    fn ef_oracle(pl: &Partition, pm: &Partition) -> (u32, u32) {
        let mut e = 0;
        let mut f = 0;
        for &x in pl.parts() {
            for &y in pm.parts() {
                let g = (1..=x.min(y)).rev().find(|d| x % d == 0 && y % d == 0).unwrap();
                e += y - g;
                f += x - g;
            }
        }
        (e, f)
    }

    #[test]
    fn pair_degrees_examples() {
        assert_eq!(pair_ram_degrees(&p("2^2"), &p("2^2")), (0, 0));
        assert_eq!(pair_ram_degrees(&p("1^2"), &p("2")), (2, 0));
        assert_eq!(pair_ram_degrees(&p("2^3"), &p("3^2")), (12, 6));
        assert_eq!(pair_ram_degrees(&p("1^4 2"), &p("1^6")), (0, 6));
    }

    #[test]
    fn pair_degrees_agree_with_oracle_and_are_symmetric() {
        let parts: Vec<Partition> = (1..=8).flat_map(|n| partitions_of(n, None)).collect();
        for a in &parts {
            for b in &parts {
                let (e, f) = pair_ram_degrees(a, b);
                assert_eq!((e, f), ef_oracle(a, b));
                assert_eq!(pair_ram_degrees(b, a), (f, e));
                let divides = a.parts().iter().all(|&x| b.parts().iter().all(|&y| x % y == 0));
                assert_eq!(e == 0, divides, "{a} / {b}");
            }
        }
    }

    #[test]
    fn riemann_hurwitz_examples() {
        assert!(check_riemann_hurwitz(&prof("1^4 2, 1^4 2, 1^2 2^2, 2^3, 2^3")));
        assert!(check_riemann_hurwitz(&prof("1^6, 1^4 2, 2^3, 2^3, 2^3")));
        for n in 2..8 {
            let unram = RamificationProfile::new(n, vec![Partition::trivial(n); 5]).unwrap();
            assert!(!check_riemann_hurwitz(&unram));
        }
        let (e8_l, e8_m) = family_profile(Family::E8).unwrap();
        assert!(check_riemann_hurwitz(&e8_l));
        assert!(check_riemann_hurwitz(&e8_m));
    }

    #[test]
    fn profile_validation_and_json() {
        assert!(RamificationProfile::new(6, vec![p("1^4 2"), p("2^2")]).is_err());
        let pr = prof("(1^4 2, 2^3)");
        let json = serde_json::to_string(&pr).unwrap();
        assert_eq!(json, r#"{"degree":6,"branch_types":[[2,1,1,1,1],[2,2,2]]}"#);
        let back: RamificationProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pr);
        assert!(serde_json::from_str::<RamificationProfile>(
            r#"{"degree":5,"branch_types":[[2,1,1,1,1]]}"#
        )
        .is_err());
        assert_eq!(pr.to_string(), "(1^4 2, 2^3)");
    }

    #[test]
    fn inhomo_examples() {
        assert!(check_inhomo_bound(&p("2^3"), &p("3^2")).unwrap());
        assert!(check_inhomo_bound(&p("2^3"), &p("2^3")).unwrap());
        assert!(check_inhomo_bound(&p("1^2"), &p("2")).is_err());
    }

    #[test]
    fn inhomo_bound_holds_exhaustively() {
        for l in 4..=10 {
            for m in l..=10 {
                for a in partitions_of(l, None) {
                    for b in partitions_of(m, None) {
                        assert!(check_inhomo_bound(&a, &b).unwrap(), "{a} / {b}");
                        assert!(check_inhomo_bound(&b, &a).unwrap(), "{b} / {a}");
                    }
                }
            }
        }
    }

    #[test]
    fn dynkin_small() {
        let got = solve_trivalent_dynkin(5);
        assert_eq!(
            got,
            vec![(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 2, 5), (2, 3, 3), (2, 3, 4), (2, 3, 5)]
        );
        let big = solve_trivalent_dynkin(40);
        assert!(!big.contains(&(2, 3, 6)));
        assert!(!big.contains(&(3, 3, 3)));
        assert!(!big.contains(&(2, 4, 4)));
        assert_eq!(big.len(), 39 + 3);
    }

    #[test]
    fn family_identities() {
        let fams = (2..=9).map(Family::Dn).chain([Family::E6, Family::E7, Family::E8]);
        for fam in fams {
            let (pl, pm) = family_profile(fam).unwrap();
            let (l, m) = (pl.degree(), pm.degree());
            assert_eq!(pl.total_ram_degree(), 2 * l - 2, "{fam}");
            assert_eq!(pm.total_ram_degree(), 2 * m - 2, "{fam}");
            let (e, f) = profile_pair_ram_degrees(&pl, &pm).unwrap();
            assert_eq!((e, f), (2 * m - 2, 2 * l - 2), "{fam}");
            assert_eq!(pl.ramified_points(), 5);
            assert_eq!(pm.ramified_points(), 5);
        }
        let (d2l, _) = family_profile(Family::Dn(2)).unwrap();
        assert_eq!(d2l.degree(), 8);
        let (e6l, e6m) = family_profile(Family::E6).unwrap();
        assert_eq!(e6l, prof("1^22 2, 1^22 2, 2^12, 3^8, 3^8, 1^24"));
        assert_eq!(e6m, prof("1^22 2, 1^24, 2^12, 3^8, 3^8, 1^22 2"));
        let (e8l, _) = family_profile(Family::E8).unwrap();
        assert_eq!(e8l.branch_types()[4], p("5^24"));
        assert!(family_profile(Family::Dn(1)).is_err());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("e7".parse::<Family>().unwrap(), Family::E7);
        assert_eq!("dn:3".parse::<Family>().unwrap(), Family::Dn(3));
        assert_eq!("DN4".parse::<Family>().unwrap(), Family::Dn(4));
        assert!("f4".parse::<Family>().is_err());
    }

    #[test]
    fn dn2_sums_by_hand() {
        let (pl, pm) = family_profile(Family::Dn(2)).unwrap();
        let per_point: Vec<(u32, u32)> = pl
            .branch_types()
            .iter()
            .zip(pm.branch_types())
            .map(|(a, b)| ef_oracle(a, b))
            .collect();
        assert_eq!(per_point, vec![(6, 6), (0, 8), (0, 0), (0, 0), (0, 0), (8, 0)]);
        assert_eq!(profile_pair_ram_degrees(&pl, &pm).unwrap(), (14, 14));
    }

    // Literal scan of the whole box: no derived ranges.
    fn brute_tuples(bound: S2Bound) -> Vec<ConstraintTuple> {
        let mut out = Vec::new();
        for m in 7..=31u32 {
            for l in 1..=m {
                if 2 * l < m + 6 {
                    continue;
                }
                let r1 = 1;
                for r2 in 1..=2 * l - 2 {
                    for s1 in 0..=2 * m - 2 {
                        for s2 in 0..=2 * m - 2 {
                            if !bound.admits(s2, m) {
                                continue;
                            }
                            for a1 in 0..=l {
                                if !fixed_ram_compatible(a1, r1, l) {
                                    continue;
                                }
                                for a2 in 0..=l {
                                    if !fixed_ram_compatible(a2, r2, l)
                                        || a1 * s1 + a2 * s2 > 2 * m - 2
                                    {
                                        continue;
                                    }
                                    for b1 in 0..=m {
                                        if !fixed_ram_compatible(b1, s1, m) {
                                            continue;
                                        }
                                        for b2 in 0..=m {
                                            if !fixed_ram_compatible(b2, s2, m)
                                                || b1 * r1 + b2 * r2 > 2 * l - 2
                                            {
                                                continue;
                                            }
                                            let t = ConstraintTuple::from_array([
                                                l, m, r1, r2, s1, s2, a1, a2, b1, b2,
                                            ]);
                                            if !t.is_generic() {
                                                out.push(t);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn tuple_scan_matches_brute_force() {
        for bound in [S2Bound::Strict, S2Bound::Inclusive] {
            assert_eq!(enumerate_exceptional_tuples(bound), brute_tuples(bound));
        }
    }

    #[test]
    fn tuple_scan_contents() {
        let strict = enumerate_exceptional_tuples(S2Bound::Strict);
        let has = |v: &[ConstraintTuple], t: [u32; 10]| v.contains(&ConstraintTuple::from_array(t));
        assert!(has(&strict, [7, 7, 1, 2, 1, 2, 5, 3, 5, 3]));
        assert!(has(&strict, [10, 10, 1, 2, 0, 3, 8, 6, 10, 4]));
        assert!(strict.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(strict.len(), 8);
        let inclusive = enumerate_exceptional_tuples(S2Bound::Inclusive);
        assert_eq!(inclusive.len(), 10);
        assert!(has(&inclusive, [9, 9, 1, 3, 1, 3, 7, 3, 7, 3]));
        assert!(has(&inclusive, [9, 9, 1, 2, 0, 3, 7, 5, 9, 3]));
        // m <= b2 + 2 S2 fails for this one, so no scan can produce it.
        let t = ConstraintTuple::from_array([8, 10, 1, 1, 2, 1, 6, 6, 8, 6]);
        assert!(!fixed_ram_compatible(t.b2, t.s2, t.m));
    }

    #[test]
    fn degree6_scan() {
        let sols = enumerate_degree6_pairs();
        assert_eq!(sols.len(), 2);
        let pl = prof("1^4 2, 1^4 2, 1^2 2^2, 2^3, 2^3");
        assert!(sols.contains(&(pl.clone(), prof("1^6, 1^4 2, 2^3, 2^3, 2^3"))));
        assert!(sols.contains(&(pl, prof("1^4 2, 1^6, 2^3, 2^3, 2^3"))));
        for (a, b) in &sols {
            assert!(check_riemann_hurwitz(a) && check_riemann_hurwitz(b));
            assert_eq!(profile_pair_ram_degrees(a, b).unwrap(), (10, 10));
        }
    }
}
