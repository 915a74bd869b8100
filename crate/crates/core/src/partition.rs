//! Integer partitions, used both as ramification types over a branch point
//! and as cycle types of permutations.
//!
//! Parts are stored weakly decreasing. The derived order compares the degree
//! first and then the part sequences lexicographically, so within one degree
//! `1^6 < 1^4 2 < 1^2 2^2 < 2^3 < ... < 6`. [`partitions_of`] lists partitions
//! in the reverse of this order (graded reverse-lexicographic), starting from
//! the one-part partition `(n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    // Field order matters for the derived `Ord`.
    degree: u32,
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::Parse("partition must have at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let degree = parts.iter().sum();
        Ok(Partition { degree, parts })
    }

    /// `r^k`, e.g. `uniform(3, 8)` is `3^8`.
    pub fn uniform(part: u32, count: u32) -> Self {
        assert!(part > 0 && count > 0);
        Partition {
            degree: part * count,
            parts: vec![part; count as usize],
        }
    }

    /// The trivial type `1^n`.
    pub fn trivial(degree: u32) -> Self {
        Self::uniform(1, degree)
    }

    /// `1^(n-2) 2`, the cycle type of a transposition.
    pub fn transposition(degree: u32) -> Self {
        assert!(degree >= 2);
        let mut parts = vec![1; degree as usize - 1];
        parts[0] = 2;
        Partition { degree, parts }
    }

    /// Builds from `(part, multiplicity)` pairs; pairs with zero multiplicity are skipped.
    pub fn from_multiplicities(pairs: &[(u32, u32)]) -> Result<Self, Error> {
        let parts = pairs
            .iter()
            .flat_map(|&(part, mult)| std::iter::repeat_n(part, mult as usize))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Degree of the ramification divisor over the branch point: the sum of `e - 1`.
    pub fn ram_degree(&self) -> u32 {
        self.degree - self.parts.len() as u32
    }

    /// Number of parts equal to 1 (unramified points in the fibre, fixed points of a permutation).
    pub fn fixed_count(&self) -> u32 {
        self.parts.iter().rev().take_while(|&&p| p == 1).count() as u32
    }

    /// `Some(r)` when every part equals `r`.
    pub fn homogeneity_index(&self) -> Option<u32> {
        let first = *self.parts.first()?;
        self.parts.iter().all(|&p| p == first).then_some(first)
    }

    pub fn max_part(&self) -> u32 {
        self.parts[0]
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }

    /// `(part, multiplicity)` in increasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

/// Exponent notation in increasing part order, e.g. `1^4 2` or `5^20 10^2`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (part, mult)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
        }
        Ok(())
    }
}

fn parse_number(token: &str) -> Result<u32, Error> {
    let t = token.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| t.strip_prefix('{').and_then(|s| s.strip_suffix('}')))
        .unwrap_or(t);
    t.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number {token:?} in partition")))
}

/// Accepts exponent notation (`1^4 2`, `1^{22} 2`, `(10)^2`, `1·2·3^5·6`) or
/// comma-separated parts (`2,2,1,1`).
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.contains(',') {
            let parts = s
                .split(',')
                .map(parse_number)
                .collect::<Result<Vec<_>, _>>()?;
            return Partition::new(parts);
        }
        let mut parts = Vec::new();
        for token in s.split(|c: char| c.is_whitespace() || c == '·' || c == '*') {
            if token.is_empty() {
                continue;
            }
            match token.split_once('^') {
                Some((base, exp)) => {
                    let base = parse_number(base)?;
                    let exp = parse_number(exp)?;
                    parts.extend(std::iter::repeat_n(base, exp as usize));
                }
                None => parts.push(parse_number(token)?),
            }
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` (with at most `max_parts` parts when given), from `(n)` down to `1^n`.
pub fn partitions_of(n: u32, max_parts: Option<usize>) -> Vec<Partition> {
    assert!(n >= 1, "partitions_of requires n >= 1");
    let max_parts = max_parts.unwrap_or(n as usize);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    fn rec(rest: u32, cap: u32, max_parts: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                degree: current.iter().sum(),
                parts: current.clone(),
            });
            return;
        }
        if current.len() == max_parts {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            current.push(part);
            rec(rest - part, part, max_parts, current, out);
            current.pop();
        }
    }
    rec(n, n, max_parts, &mut current, &mut out);
    out
}
