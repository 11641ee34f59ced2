//! The point set of P_n(F_q) with a stable indexing.
//!
//! Points are stored by their canonical representative (first nonzero
//! coordinate equal to 1) and numbered in lexicographic order of coordinate
//! element indices. A dense table maps every nonzero vector of F_q^(n+1)
//! straight to the id of the point it spans.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg;
use crate::Limits;

/// `(p, k, n)`: how spaces are named in reports and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub p: u64,
    pub k: u32,
    pub n: usize,
}

#[derive(Debug, Clone)]
pub struct ProjSpace {
    field: Field,
    n: usize,
    coords: Vec<Elem>,
    // vector code -> point id, u32::MAX for the zero vector
    lookup: Vec<u32>,
}

fn point_count(q: u64, n: usize) -> Option<u64> {
    let total = q.checked_pow(n as u32 + 1)?;
    Some((total - 1) / (q - 1))
}

impl ProjSpace {
    pub fn new(field: Field, n: usize) -> Result<ProjSpace> {
        ProjSpace::with_limits(field, n, &Limits::default())
    }

    pub fn with_limits(field: Field, n: usize, limits: &Limits) -> Result<ProjSpace> {
        let q = field.order();
        let count = point_count(q as u64, n).unwrap_or(u64::MAX);
        if count > limits.points {
            return Err(Error::TooManyPoints {
                points: count,
                cap: limits.points,
            });
        }
        let width = n + 1;
        let total = q.pow(width as u32);
        let mut coords = Vec::with_capacity(count as usize * width);
        let mut lookup = vec![u32::MAX; total];
        let mut v = vec![Elem::ZERO; width];
        for code in 1..total {
            decode(code, q, &mut v);
            let lead = v.iter().position(|x| !x.is_zero()).unwrap();
            if v[lead] == Elem::ONE {
                let id = (coords.len() / width) as u32;
                coords.extend_from_slice(&v);
                lookup[code] = id;
            }
        }
        let mut space = ProjSpace {
            field,
            n,
            coords,
            lookup,
        };
        // fill in the non-canonical vectors
        let mut w = vec![Elem::ZERO; width];
        for code in 1..total {
            if space.lookup[code] != u32::MAX {
                continue;
            }
            decode(code, q, &mut w);
            space.normalize(&mut w);
            space.lookup[code] = space.lookup[encode(&w, q)];
        }
        debug_assert_eq!(space.len() as u64, count);
        Ok(space)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Projective dimension n.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> SpaceSpec {
        SpaceSpec {
            p: self.field.characteristic(),
            k: self.field.degree(),
            n: self.n,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len() / (self.n + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Canonical coordinates of a point.
    #[inline]
    pub fn coords(&self, id: usize) -> &[Elem] {
        let w = self.n + 1;
        &self.coords[id * w..(id + 1) * w]
    }

    /// Id of the point spanned by a nonzero vector.
    #[inline]
    pub fn point_of(&self, v: &[Elem]) -> Option<usize> {
        match self.lookup[encode(v, self.field.order())] {
            u32::MAX => None,
            id => Some(id as usize),
        }
    }

    fn normalize(&self, v: &mut [Elem]) {
        if let Some(&lead) = v.iter().find(|x| !x.is_zero()) {
            let inv = self.field.inv_nonzero(lead);
            for x in v.iter_mut() {
                *x = self.field.mul(inv, *x);
            }
        }
    }

    fn check_ids(&self, ids: &[usize]) -> Result<()> {
        if let Some(&bad) = ids.iter().find(|&&i| i >= self.len()) {
            return Err(Error::PointOutOfRange(bad));
        }
        for (i, a) in ids.iter().enumerate() {
            if ids[i + 1..].contains(a) {
                return Err(Error::DuplicatePoints);
            }
        }
        Ok(())
    }

    /// Whether three distinct points are collinear, by the rank of their
    /// coordinate matrix.
    pub fn collinear_rank(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        self.check_ids(&[a, b, c])?;
        let rows = [a, b, c].map(|i| self.coords(i).to_vec());
        Ok(linalg::rank(&self.field, &rows) <= 2)
    }

    /// Every point in the span of two distinct points, sorted by id.
    pub fn line_through(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        self.check_ids(&[a, b])?;
        let f = &self.field;
        let (u, v) = (self.coords(a), self.coords(b));
        let mut w = vec![Elem::ZERO; self.n + 1];
        let mut line: Vec<usize> = Vec::with_capacity(f.order() + 1);
        for s in f.elements() {
            for t in f.elements() {
                if s.is_zero() && t.is_zero() {
                    continue;
                }
                for i in 0..w.len() {
                    w[i] = f.add(f.mul(s, u[i]), f.mul(t, v[i]));
                }
                line.push(self.point_of(&w).unwrap());
            }
        }
        line.sort_unstable();
        line.dedup();
        Ok(line)
    }

    /// All lines as sorted point sets, in lexicographic order.
    pub fn lines(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len() * self.len()];
        let mut lines = Vec::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if seen[a * self.len() + b] {
                    continue;
                }
                let line = self.line_through(a, b).unwrap();
                for &x in &line {
                    for &y in &line {
                        seen[x * self.len() + y] = true;
                    }
                }
                lines.push(line);
            }
        }
        lines
    }

    /// Split along the hyperplane at infinity `x₀ = 0`.
    pub fn affine_patch(&self) -> Result<AffinePatch> {
        if self.n == 0 {
            return Err(Error::Dimension {
                needed: "n >= 1",
                actual: 0,
            });
        }
        let mut infinity = Vec::new();
        let mut affine = Vec::new();
        let mut position = vec![None; self.len()];
        for id in 0..self.len() {
            if self.coords(id)[0].is_zero() {
                infinity.push(id);
            } else {
                position[id] = Some(affine.len());
                affine.push(id);
            }
        }
        Ok(AffinePatch {
            space: self.clone(),
            infinity,
            affine,
            position,
        })
    }
}

fn encode(v: &[Elem], q: usize) -> usize {
    v.iter().fold(0usize, |acc, x| acc * q + x.index())
}

fn decode(mut code: usize, q: usize, out: &mut [Elem]) {
    for slot in out.iter_mut().rev() {
        *slot = Elem((code % q) as u32);
        code /= q;
    }
}

/// The complement of the hyperplane `x₀ = 0`.
///
/// Affine points are numbered `0..q^n` in the same relative order as their
/// projective ids; affine point `i` has coordinates `coords[1..]` of its
/// canonical representative `(1, x₁, …, x_n)`.
#[derive(Debug, Clone)]
pub struct AffinePatch {
    space: ProjSpace,
    infinity: Vec<usize>,
    affine: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl AffinePatch {
    pub fn space(&self) -> &ProjSpace {
        &self.space
    }

    /// Projective ids of the points at infinity.
    pub fn infinity(&self) -> &[usize] {
        &self.infinity
    }

    /// Projective ids of the affine points, indexed by affine id.
    pub fn affine_points(&self) -> &[usize] {
        &self.affine
    }

    pub fn len(&self) -> usize {
        self.affine.len()
    }

    pub fn is_empty(&self) -> bool {
        self.affine.is_empty()
    }

    pub fn is_at_infinity(&self, id: usize) -> bool {
        self.position[id].is_none()
    }

    /// Affine id of a projective point, if it is not at infinity.
    pub fn affine_id(&self, id: usize) -> Option<usize> {
        self.position[id]
    }

    /// Affine coordinates of an affine point.
    pub fn vector(&self, affine_id: usize) -> &[Elem] {
        &self.space.coords(self.affine[affine_id])[1..]
    }

    /// Affine id of the point with the given affine coordinates.
    pub fn affine_point_of(&self, v: &[Elem]) -> usize {
        let mut w = Vec::with_capacity(v.len() + 1);
        w.push(Elem::ONE);
        w.extend_from_slice(v);
        self.position[self.space.point_of(&w).unwrap()].unwrap()
    }
}
