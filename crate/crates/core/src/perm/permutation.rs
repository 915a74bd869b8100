use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partition::Partition;

/// A bijection of `{0, .., n-1}`. Points are 0-based internally and 1-based
/// in cycle notation.
///
/// Products apply left to right: `g.product(&h)` sends `x` to `h(g(x))`, so a
/// word `g1 g2 g3 g4` means "first `g1`, then `g2`, ...".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("image list {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 0-based cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(Error::NotAPermutation(format!(
                        "point {} repeated or out of range in cycles",
                        x + 1
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Fixed-point-free involution from 0-based disjoint pairs, or with fixed points
    /// when the pairs do not cover every point.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let cycles: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Self::from_cycles(n, &cycles)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a < n && b < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Parses 1-based cycle notation such as `(1,4)(2,7)(3,10)` on `n` points.
    /// `()` is the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self, Error> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = open[..close].trim();
            if !body.is_empty() {
                let cycle = body
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| match t.trim().parse::<usize>() {
                        Ok(x) if x >= 1 => Ok(x - 1),
                        _ => Err(Error::Parse(format!("bad point {t:?} in {s:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn product(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    /// Left-to-right product of a nonempty word.
    pub fn product_all<'a, I>(word: I) -> Result<Permutation, Error>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut it = word.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty product".into()))?
            .clone();
        it.try_fold(first, |acc, g| acc.product(g))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `h^-1 self h`
    pub fn conjugate_by(&self, h: &Permutation) -> Result<Permutation, Error> {
        h.inverse().product(self)?.product(h)
    }

    /// Cycles as 0-based point lists, each starting at its smallest point,
    /// ordered by that point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points. The identity on zero points has no type.
    pub fn cycle_type(&self) -> Partition {
        let lengths = self.cycles().iter().map(|c| c.len() as u32).collect();
        Partition::new(lengths).expect("nonempty permutation")
    }

    /// The 2-cycles of an involution, as 0-based `(smaller, larger)` pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i < x && self.images[x] == i)
            .map(|(i, &x)| (i, x))
            .collect()
    }

    /// Number of points moved.
    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i != x).count()
    }
}

/// 1-based cycle notation, fixed points omitted, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Serialized as `{"degree": n, "cycles": "(1,4)(2,7)..."}`.
impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Permutation", 2)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("cycles", &self.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            degree: usize,
            cycles: String,
        }
        let r = Repr::deserialize(deserializer)?;
        Permutation::parse_cycles(r.degree, &r.cycles).map_err(serde::de::Error::custom)
    }
}

/// `(degree, cycle string)` parsing, e.g. `"24:(1,2,3)(4,5,6)"`.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected DEGREE:CYCLES, got {s:?}")))?;
        let n = deg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?;
        Permutation::parse_cycles(n, cycles)
    }
}

/// `(1,2,3)(4,5,6)...` on `n` points, `n` divisible by `period`.
pub fn standard_regular(n: usize, period: usize) -> Permutation {
    assert!(period >= 1 && n.is_multiple_of(period));
    let cycles: Vec<Vec<usize>> = (0..n / period)
        .map(|b| (b * period..(b + 1) * period).collect())
        .collect();
    Permutation::from_cycles(n, &cycles).expect("disjoint blocks")
}
