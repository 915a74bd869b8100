use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseId {
    E6,
    E7,
    E8,
}

impl CaseId {
    pub const ALL: [CaseId; 3] = [CaseId::E6, CaseId::E7, CaseId::E8];

    pub fn degree(self) -> usize {
        match self {
            CaseId::E6 => 24,
            CaseId::E7 => 48,
            CaseId::E8 => 120,
        }
    }

    /// Cycle length of `g3`.
    pub fn g3_period(self) -> u32 {
        match self {
            CaseId::E6 => 3,
            CaseId::E7 => 4,
            CaseId::E8 => 5,
        }
    }

    /// Order of the induced action on pairs.
    pub fn expected_block_order(self) -> usize {
        match self {
            CaseId::E6 => 12,
            CaseId::E7 => 24,
            CaseId::E8 => 60,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseId::E6 => "e6",
            CaseId::E7 => "e7",
            CaseId::E8 => "e8",
        })
    }
}

impl FromStr for CaseId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "e6" => Ok(CaseId::E6),
            "e7" => Ok(CaseId::E7),
            "e8" => Ok(CaseId::E8),
            _ => Err(Error::Parse(format!("unknown case {s:?}"))),
        }
    }
}

fn parse_all(types: &[&str]) -> Vec<Partition> {
    types
        .iter()
        .map(|t| t.parse().expect("static partition literal"))
        .collect()
}

/// The possible cycle types of `g1 g2` when `g3` has the case's type and
/// `g4`, `g1 g2 g3 g4` are transpositions: every type reached from the `g3`
/// type by two splits or merges of cycles. Since each transposition changes
/// the number of cycles by one, the count keeps its parity.
pub fn allowed_product_types(case: CaseId) -> Vec<Partition> {
    match case {
        CaseId::E6 => parse_all(&[
            "3^4 6^2",
            "3^5 9",
            "1 2 3^5 6",
            "1 3^6 5",
            "2 3^6 4",
            "1^2 2^2 3^6",
            "1^3 3^7",
            "3^8",
        ]),
        CaseId::E7 => parse_all(&[
            "4^8 8^2",
            "4^9 12",
            "1 3 4^9 8",
            "2^2 4^9 8",
            "1 4^10 7",
            "2 4^10 6",
            "3 4^10 5",
            "1^2 3^2 4^10",
            "1 2^2 3 4^10",
            "2^4 4^10",
            "1^2 2 4^11",
            "4^12",
        ]),
        CaseId::E8 => parse_all(&[
            "5^20 10^2",
            "5^21 15",
            "1 4 5^21 10",
            "2 3 5^21 10",
            "1 5^22 9",
            "2 5^22 8",
            "3 5^22 7",
            "4 5^22 6",
            "1^2 4^2 5^22",
            "2^2 3^2 5^22",
            "1 2 3 4 5^22",
            "1^2 3 5^23",
            "1 2^2 5^23",
            "5^24",
        ]),
    }
}

/// Parameters of one of the three searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCase {
    pub id: CaseId,
    pub degree: usize,
    pub g1_type: Partition,
    pub g2_type: Partition,
    pub g3_type: Partition,
    /// Type of both `g4` and `g5 = g1 g2 g3 g4`.
    pub tail_type: Partition,
    pub allowed_product_types: Vec<Partition>,
}

impl SearchCase {
    pub fn new(id: CaseId) -> Self {
        let n = id.degree() as u32;
        let p = id.g3_period();
        let case = SearchCase {
            id,
            degree: n as usize,
            g1_type: Partition::uniform(2, n / 2),
            g2_type: Partition::uniform(3, n / 3),
            g3_type: Partition::uniform(p, n / p),
            tail_type: Partition::transposition(n),
            allowed_product_types: allowed_product_types(id),
        };
        debug_assert!(case.allowed_product_types.iter().all(|t| t.degree() == n));
        case
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use std::collections::BTreeSet;

    #[test]
    fn list_sizes_and_degrees() {
        for (id, size) in [(CaseId::E6, 8), (CaseId::E7, 12), (CaseId::E8, 14)] {
            let case = SearchCase::new(id);
            assert_eq!(case.allowed_product_types.len(), size);
            let distinct: BTreeSet<_> = case.allowed_product_types.iter().collect();
            assert_eq!(distinct.len(), size);
            for t in &case.allowed_product_types {
                assert_eq!(t.degree() as usize, case.degree);
            }
        }
        let e7 = allowed_product_types(CaseId::E7);
        assert_eq!(e7[0].to_string(), "4^8 8^2");
        assert_eq!(e7[11].to_string(), "4^12");
        let e8 = allowed_product_types(CaseId::E8);
        assert_eq!(e8[0].to_string(), "5^20 10^2");
        assert_eq!(e8[13].to_string(), "5^24");
    }

    // Types of c * t for c of the g3 type and t a product of two transpositions,
    // by explicit enumeration of t.
    fn brute_product_types(case: CaseId) -> BTreeSet<Partition> {
        let n = case.degree();
        let c = crate::perm::standard_regular(n, case.g3_period() as usize);
        let mut out = BTreeSet::new();
        for u in 0..n {
            for v in u + 1..n {
                let t1 = Permutation::transposition(n, u, v);
                let c1 = c.product(&t1).unwrap();
                for x in 0..n {
                    for y in x + 1..n {
                        let t2 = Permutation::transposition(n, x, y);
                        out.insert(c1.product(&t2).unwrap().cycle_type());
                    }
                }
            }
        }
        out
    }

    // Type-level route: a transposition splits a cycle of length L into d, L-d
    // or merges two cycles.
    fn type_level_product_types(case: CaseId) -> BTreeSet<Partition> {
        fn step(t: &Partition) -> Vec<Partition> {
            let parts = t.parts();
            let mut out = Vec::new();
            for i in 0..parts.len() {
                for d in 1..parts[i] {
                    let mut v = parts.to_vec();
                    v[i] = d;
                    v.push(parts[i] - d);
                    out.push(Partition::new(v).unwrap());
                }
                for j in i + 1..parts.len() {
                    let mut v = parts.to_vec();
                    v[i] += v[j];
                    v.remove(j);
                    out.push(Partition::new(v).unwrap());
                }
            }
            out
        }
        let n = case.degree() as u32;
        let start = Partition::uniform(case.g3_period(), n / case.g3_period());
        step(&start).iter().flat_map(step).collect()
    }

    #[test]
    fn lists_match_type_level_closure() {
        for id in CaseId::ALL {
            let expected: BTreeSet<Partition> = allowed_product_types(id).into_iter().collect();
            assert_eq!(type_level_product_types(id), expected, "{id}");
        }
    }

    #[test]
    fn e6_list_matches_explicit_products() {
        let expected: BTreeSet<Partition> = allowed_product_types(CaseId::E6).into_iter().collect();
        assert_eq!(brute_product_types(CaseId::E6), expected);
    }

    #[test]
    fn cycle_count_parity_is_kept() {
        for id in CaseId::ALL {
            let base = SearchCase::new(id).g3_type.len() % 2;
            for t in allowed_product_types(id) {
                assert_eq!(t.len() % 2, base, "{id}: {t}");
            }
            // types with an odd number of extra cycles never occur
            let odd: Partition = match id {
                CaseId::E6 => "1 2 3^7",
                CaseId::E7 => "1 3 4^11",
                CaseId::E8 => "1 4 5^23",
            }
            .parse()
            .unwrap();
            assert!(!allowed_product_types(id).contains(&odd));
        }
    }

    #[test]
    fn parse_case_ids() {
        assert_eq!("E8".parse::<CaseId>().unwrap(), CaseId::E8);
        assert!("e9".parse::<CaseId>().is_err());
        assert_eq!(CaseId::E7.to_string(), "e7");
    }
}
