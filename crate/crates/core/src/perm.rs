//! Permutations of `{0, …, m−1}` and lexicographic enumeration of S_m.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, …, m−1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Trusted constructor for image arrays produced internally.
    pub(crate) fn from_raw(images: Vec<u32>) -> Permutation {
        debug_assert!(
            Permutation::from_images(images.iter().map(|&x| x as usize).collect()).is_ok()
        );
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange(x));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    ///
    /// Panics on a degree mismatch; see [`Permutation::try_compose`].
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self ∘ h ∘ self⁻¹`, computed as `self(i) ↦ self(h(i))`.
    pub fn conjugate(&self, h: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &hi) in h.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[hi as usize];
        }
        Permutation { images }
    }

    /// Non-trivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = t.iter().sum();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Image of a point set, sorted.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// Rank of this permutation in the lexicographic order of S_m.
    pub fn lex_rank(&self) -> u128 {
        let m = self.degree();
        let mut rank = 0u128;
        for i in 0..m {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank += smaller as u128 * factorial(m - 1 - i);
        }
        rank
    }
}

pub fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// The permutation of the given lexicographic rank in S_m.
pub fn lex_unrank(m: usize, mut rank: u128) -> Permutation {
    let mut pool: Vec<u32> = (0..m as u32).collect();
    let mut images = Vec::with_capacity(m);
    for i in (0..m).rev() {
        let f = factorial(i);
        let digit = (rank / f) as usize;
        rank %= f;
        images.push(pool.remove(digit));
    }
    Permutation { images }
}

/// Advances to the next permutation in lexicographic order; false after the last.
pub fn next_lex(images: &mut [u32]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| images[i] < images[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
    images.swap(i, j);
    images[i + 1..].reverse();
    true
}

/// Permutations of S_m with lexicographic ranks in `start..end`, in order.
pub struct LexRange {
    current: Option<Vec<u32>>,
    remaining: u128,
}

impl LexRange {
    pub fn new(m: usize, start: u128, end: u128) -> LexRange {
        let end = end.min(factorial(m));
        if start >= end {
            return LexRange {
                current: None,
                remaining: 0,
            };
        }
        LexRange {
            current: Some(lex_unrank(m, start).images),
            remaining: end - start,
        }
    }

    /// All of S_m.
    pub fn all(m: usize) -> LexRange {
        LexRange::new(m, 0, factorial(m))
    }
}

impl Iterator for LexRange {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.current.as_mut()?;
        let out = Permutation {
            images: cur.clone(),
        };
        self.remaining -= 1;
        if self.remaining > 0 && !next_lex(cur) {
            self.remaining = 0;
        }
        Some(out)
    }
}

/// Splits `0..total` into `parts` contiguous, nearly equal ranges.
pub fn partition(total: u128, parts: usize) -> Vec<(u128, u128)> {
    let parts = parts.max(1) as u128;
    (0..parts)
        .map(|i| (total * i / parts, total * (i + 1) / parts))
        .filter(|(a, b)| a < b)
        .collect()
}
