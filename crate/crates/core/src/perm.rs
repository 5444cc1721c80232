//! Permutations of `{1, ..., n}`.
//!
//! Points are 1-based in every public method. Composition is left to right:
//! `a.compose(&b)` maps `p` to `b(a(p))`, so points are acted on from the
//! right as in `p^(ab) = (p^a)^b`.
//!
//! A permutation carries a declared degree, but two permutations that agree
//! after padding the smaller one with fixed points compare equal and hash the
//! same. Binary operations embed both operands into the larger degree.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::PermError;

/// Largest supported degree; images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// Even or odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection of `{1, ..., n}`.
#[derive(Clone)]
pub struct Permutation {
    // 0-based images: images[i] is the image of point i + 1, minus one.
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image list, `images[p - 1] = p^self`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(PermError::PointOutOfRange { point: img, degree: n });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(PermError::NotBijective(img));
            }
            out.push((img - 1) as u16);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut perm = Permutation::identity(degree);
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(PermError::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                perm.images[p - 1] = (q - 1) as u16;
            }
        }
        Ok(perm)
    }

    /// The transposition `(a, b)` on `degree` points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, PermError> {
        Self::from_cycles(degree, &[vec![a, b]])
    }

    /// Product of the given disjoint transpositions.
    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self, PermError> {
        let cycles: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Self::from_cycles(degree, &cycles)
    }


    pub(crate) fn raw(&self) -> &[u16] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `p`; points beyond the degree are fixed.
    pub fn image(&self, p: usize) -> usize {
        match self.images.get(p.wrapping_sub(1)) {
            Some(&q) => q as usize + 1,
            None => p,
        }
    }

    /// Pads with fixed points up to `degree` (never shrinks).
    pub fn embed(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        if degree > images.len() {
            images.extend(self.images.len() as u16..degree as u16);
        }
        Permutation { images }
    }

    /// Drops trailing fixed points beyond `degree`. Panics if a dropped point is moved.
    pub fn restrict_degree(&self, degree: usize) -> Permutation {
        assert!(
            self.images[degree.min(self.images.len())..]
                .iter()
                .enumerate()
                .all(|(i, &q)| q as usize == degree + i),
            "cannot restrict a permutation that moves points beyond {degree}"
        );
        Permutation {
            images: self.images[..degree.min(self.images.len())].to_vec(),
        }
    }

    /// `p -> other(self(p))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.images.get(i).copied().unwrap_or(i as u16);
            let b = other.images.get(a as usize).copied().unwrap_or(a);
            images.push(b);
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &q) in self.images.iter().enumerate() {
            images[q as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &q)| q as usize == i)
    }

    /// Non-identity and squares to the identity.
    pub fn is_involution(&self) -> bool {
        !self.is_identity()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, &q)| self.images[q as usize] as usize == i)
    }

    /// Nontrivial cycles in order of their least point, each starting at that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &q)| q as usize != i)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Least point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &q)| q as usize != i)
            .map(|(i, _)| i + 1)
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn parity(&self) -> Parity {
        let cycles = self.cycles();
        let moved: usize = cycles.iter().map(Vec::len).sum();
        // n - (#cycles including fixed points) = moved - #nontrivial cycles
        if (moved - cycles.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Conjugates by a point relabelling: the result maps `f(p)` to `f(self(p))`.
    pub fn relabel(&self, map: &[usize], degree: usize) -> Permutation {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &q) in self.images.iter().enumerate() {
            if q as usize != i {
                images[map[i] - 1] = (map[q as usize] - 1) as u16;
            }
        }
        Permutation { images }
    }

    // Length of the image vector with trailing fixed points removed.
    fn effective_len(&self) -> usize {
        let mut n = self.images.len();
        while n > 0 && self.images[n - 1] as usize == n - 1 {
            n -= 1;
        }
        n
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Parity of a product, `parity(ab) = parity(a) xor parity(b)`.
pub fn product_parity(a: &Permutation, b: &Permutation) -> Parity {
    a.parity().xor(b.parity())
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        let n = self.effective_len();
        n == other.effective_len() && self.images[..n] == other.images[..n]
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images[..self.effective_len()].hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.degree().max(other.degree());
        (0..n)
            .map(|i| self.image(i + 1))
            .cmp((0..n).map(|i| other.image(i + 1)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses cycle notation such as `(1,2)(3,4)`, ignoring whitespace.
///
/// The degree is the largest point mentioned (0 for `()`). Cycles need not
/// be disjoint; they are multiplied left to right.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Syntax(text.to_string()))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Syntax(text.to_string()))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let cycle = inner
                .split(',')
                .map(|s| s.parse::<usize>().map_err(|_| PermError::Syntax(text.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if cycle.contains(&0) {
                return Err(PermError::PointOutOfRange { point: 0, degree: 0 });
            }
            cycles.push(cycle);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

impl Permutation {
    /// Parses disjoint-cycle notation on `degree` points.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Self, PermError> {
        let cycles = parse_cycles(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        if max > degree {
            return Err(PermError::PointOutOfRange { point: max, degree });
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let degree = parse_cycles(s)?.iter().flatten().copied().max().unwrap_or(0);
        Permutation::parse_with_degree(s, degree)
    }
}
