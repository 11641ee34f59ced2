//! Semilinear maps and their projectivizations.
//!
//! A semilinear map is a pair `(A, h)` of an invertible matrix and a field
//! automorphism acting as `v ↦ A·h(v)`: the automorphism is applied to every
//! coordinate first, then the matrix. With that convention composition reads
//! `(A₁, h₁) ∘ (A₂, h₂) = (A₁·h₁(A₂), h₁∘h₂)`.

mod collineation;
mod line;

pub use collineation::{collineations, is_collineation, Incidence};
pub use line::{
    extract_field_aut, frobenius_power_of, translation_homothety, verify_lemma2, Lemma2Flags,
    LineChart, MotionKind,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldAut};
use crate::group::PermGroup;
use crate::linalg::{self, Matrix};
use crate::perm::{partition, Permutation};
use crate::space::ProjSpace;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemilinearMap {
    pub matrix: Matrix,
    pub aut: FieldAut,
}

/// Wire form: `{matrix: row-major element indices, frobenius_exponent}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemilinearSpec {
    pub matrix: Vec<u32>,
    pub frobenius_exponent: u32,
}

impl SemilinearMap {
    pub fn new(matrix: Matrix, aut: FieldAut) -> SemilinearMap {
        SemilinearMap { matrix, aut }
    }

    pub fn linear(matrix: Matrix) -> SemilinearMap {
        SemilinearMap::new(matrix, FieldAut::IDENTITY)
    }

    pub fn identity(dim: usize) -> SemilinearMap {
        SemilinearMap::linear(Matrix::identity(dim))
    }

    /// `v ↦ A·h(v)`.
    pub fn apply(&self, field: &Field, v: &[Elem], out: &mut [Elem]) {
        let hv: Vec<Elem> = v.iter().map(|&x| self.aut.apply(field, x)).collect();
        self.matrix.apply(field, &hv, out);
    }

    pub fn compose(&self, field: &Field, other: &SemilinearMap) -> SemilinearMap {
        let twisted = other.matrix.map_entries(field, self.aut);
        SemilinearMap {
            matrix: self.matrix.mul(field, &twisted),
            aut: self.aut.compose(other.aut, field),
        }
    }

    pub fn spec(&self) -> SemilinearSpec {
        SemilinearSpec {
            matrix: self.matrix.entries().iter().map(|e| e.0).collect(),
            frobenius_exponent: self.aut.exponent,
        }
    }
}

/// Free-function form of [`SemilinearMap::compose`].
pub fn compose_semilinear(field: &Field, f1: &SemilinearMap, f2: &SemilinearMap) -> SemilinearMap {
    f1.compose(field, f2)
}

/// Projectivization without the invertibility check.
pub(crate) fn projectivize_raw(space: &ProjSpace, matrix: &Matrix, aut: FieldAut) -> Permutation {
    let field = space.field();
    let width = space.dim() + 1;
    let mut hv = vec![Elem::ZERO; width];
    let mut w = vec![Elem::ZERO; width];
    let images = (0..space.len())
        .map(|id| {
            for (slot, &x) in hv.iter_mut().zip(space.coords(id)) {
                *slot = aut.apply(field, x);
            }
            matrix.apply(field, &hv, &mut w);
            space
                .point_of(&w)
                .expect("invertible matrix maps nonzero vectors to nonzero vectors")
                as u32
        })
        .collect();
    Permutation::from_raw(images)
}

/// The permutation of points induced by a semilinear map.
pub fn projectivize(space: &ProjSpace, f: &SemilinearMap) -> Result<Permutation> {
    if f.matrix.dim() != space.dim() + 1 {
        return Err(Error::MatrixShape {
            expected: space.dim() + 1,
            got: f.matrix.dim(),
        });
    }
    if f.aut.exponent >= space.field().degree() {
        return Err(Error::Internal(format!(
            "Frobenius exponent {} out of range",
            f.aut.exponent
        )));
    }
    if !f.matrix.is_invertible(space.field()) {
        return Err(Error::Singular);
    }
    Ok(projectivize_raw(space, &f.matrix, f.aut))
}

fn matrix_count(space: &ProjSpace, limits: &Limits) -> Result<u128> {
    let dim = space.dim() + 1;
    let q = space.field().order() as u128;
    let count = q
        .checked_pow((dim * dim) as u32)
        .filter(|&c| c <= limits.matrices)
        .ok_or(Error::MatrixCap {
            count: q.saturating_pow((dim * dim) as u32),
            cap: limits.matrices,
        })?;
    Ok(count)
}

/// Projectivizes every invertible matrix under every given automorphism.
/// Returns the deduplicated permutations and the number of invertible
/// matrices seen.
fn enumerate_projectivities(
    space: &ProjSpace,
    auts: &[FieldAut],
    limits: &Limits,
    parts: usize,
) -> Result<(Vec<Permutation>, u128)> {
    let total = matrix_count(space, limits)?;
    let dim = space.dim() + 1;
    let q = space.field().order();
    let chunks: Vec<(Vec<Permutation>, u128)> = partition(total, parts)
        .into_par_iter()
        .map(|(a, b)| {
            let mut perms = Vec::new();
            let mut invertible = 0u128;
            for idx in a..b {
                let m = Matrix::from_index(dim, q, idx);
                if !m.is_invertible(space.field()) {
                    continue;
                }
                invertible += 1;
                for &aut in auts {
                    perms.push(projectivize_raw(space, &m, aut));
                }
            }
            perms.sort_unstable();
            perms.dedup();
            (perms, invertible)
        })
        .collect();
    let invertible = chunks.iter().map(|c| c.1).sum();
    let mut all: Vec<Permutation> = chunks.into_iter().flat_map(|c| c.0).collect();
    all.sort_unstable();
    all.dedup();
    Ok((all, invertible))
}

/// |GL_{n+1}(q)|.
pub fn gl_order(q: u128, dim: usize) -> u128 {
    let qd = q.pow(dim as u32);
    (0..dim as u32).map(|i| qd - q.pow(i)).product()
}

/// PGL_{n+1}(q) acting on the points of P_n(F_q), by enumerating every
/// invertible matrix.
///
/// Asserts that exactly `q − 1` matrices (the scalar multiples) land on
/// each permutation.
pub fn pgl_group(space: &ProjSpace, limits: &Limits, parts: usize) -> Result<PermGroup> {
    let (perms, invertible) =
        enumerate_projectivities(space, &[FieldAut::IDENTITY], limits, parts)?;
    let q = space.field().order() as u128;
    if invertible != gl_order(q, space.dim() + 1) || invertible != perms.len() as u128 * (q - 1) {
        return Err(Error::Internal(format!(
            "{} invertible matrices gave {} projectivities",
            invertible,
            perms.len()
        )));
    }
    PermGroup::from_elements(space.len(), perms)
}

/// PΓL_{n+1}(q): projectivizations of every semilinear bijection.
pub fn pgammal_group(space: &ProjSpace, limits: &Limits, parts: usize) -> Result<PermGroup> {
    let auts = space.field().automorphisms()?;
    let (perms, invertible) = enumerate_projectivities(space, &auts, limits, parts)?;
    let q = space.field().order() as u128;
    let expected = invertible / (q - 1) * auts.len() as u128;
    if perms.len() as u128 != expected {
        return Err(Error::Internal(format!(
            "expected {expected} Staudt projectivities, found {}",
            perms.len()
        )));
    }
    PermGroup::from_elements(space.len(), perms)
}

/// Ids of the standard frame: the coordinate points followed by the
/// all-ones point.
pub fn standard_frame(space: &ProjSpace) -> Vec<usize> {
    let width = space.dim() + 1;
    let mut frame: Vec<usize> = (0..width)
        .map(|i| {
            let mut v = vec![Elem::ZERO; width];
            v[i] = Elem::ONE;
            space.point_of(&v).unwrap()
        })
        .collect();
    frame.push(space.point_of(&vec![Elem::ONE; width]).unwrap());
    frame
}

/// Finds a semilinear map whose projectivization is `phi`, or `None` when
/// `phi` is not a Staudt projectivity.
///
/// The frame images fix the columns of `A` up to scalars and the unit point
/// pins those scalars up to one global factor. Automorphisms fix every 0/1
/// coordinate, so `A` does not depend on the candidate automorphism; each
/// candidate is then checked against `phi` on every point.
pub fn decompose_staudt(space: &ProjSpace, phi: &Permutation) -> Result<Option<SemilinearMap>> {
    if phi.degree() != space.len() {
        return Err(Error::DegreeMismatch(phi.degree(), space.len()));
    }
    let field = space.field();
    let frame = standard_frame(space);
    let (unit, basis) = frame.split_last().unwrap();
    let columns: Vec<Vec<Elem>> = basis
        .iter()
        .map(|&e| space.coords(phi.apply(e)).to_vec())
        .collect();
    let image_matrix = Matrix::from_columns(&columns);
    let target = space.coords(phi.apply(*unit));
    let Some(scalars) = linalg::solve(field, &image_matrix, target) else {
        return Ok(None);
    };
    if scalars.iter().any(|c| c.is_zero()) {
        return Ok(None);
    }
    let matrix = image_matrix.mul(field, &Matrix::diagonal(&scalars));
    for aut in field.automorphisms()? {
        if projectivize_raw(space, &matrix, aut) == *phi {
            return Ok(Some(SemilinearMap::new(matrix, aut)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::LexRange;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn space(p: u64, k: u32, n: usize) -> ProjSpace {
        ProjSpace::new(Field::new(p, k).unwrap(), n).unwrap()
    }

    fn invertible_matrices(space: &ProjSpace) -> Vec<Matrix> {
        let dim = space.dim() + 1;
        let q = space.field().order();
        (0..(q as u128).pow((dim * dim) as u32))
            .map(|i| Matrix::from_index(dim, q, i))
            .filter(|m| m.is_invertible(space.field()))
            .collect()
    }

    fn all_maps(space: &ProjSpace) -> Vec<SemilinearMap> {
        let auts = space.field().automorphisms().unwrap();
        invertible_matrices(space)
            .into_iter()
            .flat_map(|m| auts.iter().map(move |&a| SemilinearMap::new(m.clone(), a)))
            .collect()
    }

    #[test]
    fn identity_projectivizes_to_identity() {
        let s = space(3, 2, 1);
        assert!(projectivize(&s, &SemilinearMap::identity(2))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn frobenius_on_gf4_line() {
        let s = space(2, 2, 1);
        let frob = SemilinearMap::new(Matrix::identity(2), FieldAut::new(1));
        let perm = projectivize(&s, &frob).unwrap();
        let id = |v: [u32; 2]| s.point_of(&v.map(Elem)).unwrap();
        assert_eq!(perm.apply(id([1, 2])), id([1, 3]));
        assert_eq!(perm.apply(id([1, 3])), id([1, 2]));
        for fixed in [[0, 1], [1, 0], [1, 1]] {
            assert_eq!(perm.apply(id(fixed)), id(fixed));
        }
    }

    #[test]
    fn diagonal_is_a_homothety() {
        let s = space(5, 1, 1);
        let perm = projectivize(
            &s,
            &SemilinearMap::linear(Matrix::diagonal(&[Elem(1), Elem(2)])),
        )
        .unwrap();
        // ids: 0 = (0,1) = P∞, 1 + λ = (1, λ) = P_λ
        assert_eq!(perm.fixed_points(), vec![0, 1]);
        assert_eq!(perm.apply(2), 3);
        assert_eq!(perm.apply(3), 5);
    }

    #[test]
    fn projectivize_errors() {
        let s = space(3, 1, 1);
        let singular = SemilinearMap::linear(Matrix::zero(2));
        assert_eq!(projectivize(&s, &singular), Err(Error::Singular));
        assert!(matches!(
            projectivize(&s, &SemilinearMap::identity(3)),
            Err(Error::MatrixShape { .. })
        ));
    }

    #[test]
    fn composition_laws() {
        let f = Field::new(2, 2).unwrap();
        let frob = SemilinearMap::new(Matrix::identity(2), FieldAut::new(1));
        assert_eq!(frob.compose(&f, &frob), SemilinearMap::identity(2));
        let g = SemilinearMap::new(Matrix::from_index(2, 4, 27), FieldAut::new(1));
        assert_eq!(g.compose(&f, &SemilinearMap::identity(2)), g);
    }

    #[test]
    fn projectivize_is_a_homomorphism_exhaustively() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let s = space(p, k, 1);
            let maps = all_maps(&s);
            let perms: Vec<Permutation> =
                maps.iter().map(|m| projectivize(&s, m).unwrap()).collect();
            for (f1, p1) in maps.iter().zip(&perms) {
                for (f2, p2) in maps.iter().zip(&perms) {
                    let lhs = projectivize(&s, &f1.compose(s.field(), f2)).unwrap();
                    assert_eq!(lhs, p1.compose(p2));
                }
            }
        }
    }

    #[test]
    fn projectivize_is_a_homomorphism_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, k, n) in [(3, 2, 1), (2, 3, 1), (2, 2, 2), (7, 1, 1)] {
            let s = space(p, k, n);
            let dim = n + 1;
            let q = s.field().order();
            let random_map = |rng: &mut ChaCha8Rng| loop {
                let m = Matrix::from_index(
                    dim,
                    q,
                    rng.gen_range(0..(q as u128).pow((dim * dim) as u32)),
                );
                if m.is_invertible(s.field()) {
                    return SemilinearMap::new(m, FieldAut::new(rng.gen_range(0..k)));
                }
            };
            for _ in 0..2_500 {
                let (f1, f2) = (random_map(&mut rng), random_map(&mut rng));
                let lhs = projectivize(&s, &f1.compose(s.field(), &f2)).unwrap();
                let rhs = projectivize(&s, &f1)
                    .unwrap()
                    .compose(&projectivize(&s, &f2).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn group_orders() {
        let limits = Limits::default();
        for (p, k, n, pgl, pgammal) in [
            (5, 1, 1, 120, 120),
            (2, 1, 2, 168, 168),
            (2, 2, 1, 60, 120),
            (2, 3, 1, 504, 1512),
            (3, 2, 1, 720, 1440),
        ] {
            let s = space(p, k, n);
            assert_eq!(pgl_group(&s, &limits, 2).unwrap().order(), pgl);
            assert_eq!(pgammal_group(&s, &limits, 3).unwrap().order(), pgammal);
        }
    }

    #[test]
    fn matrix_cap() {
        let s = space(3, 1, 2);
        let limits = Limits {
            matrices: 1000,
            ..Limits::default()
        };
        assert!(matches!(
            pgl_group(&s, &limits, 1),
            Err(Error::MatrixCap { .. })
        ));
    }

    #[test]
    fn decompose_round_trip() {
        let s = space(2, 2, 1);
        for f in all_maps(&s) {
            let perm = projectivize(&s, &f).unwrap();
            let g = decompose_staudt(&s, &perm).unwrap().expect("semilinear");
            assert_eq!(g.aut, f.aut);
            assert_eq!(
                g.matrix.normalized(s.field()),
                f.matrix.normalized(s.field())
            );
        }
    }

    #[test]
    fn decompose_detects_exactly_pgammal() {
        let limits = Limits::default();
        for (p, k, n) in [(2, 2, 1), (5, 1, 1), (2, 1, 2)] {
            let s = space(p, k, n);
            let pgammal = pgammal_group(&s, &limits, 1).unwrap();
            for g in LexRange::all(s.len()) {
                let decomposed = decompose_staudt(&s, &g).unwrap().is_some();
                assert_eq!(decomposed, pgammal.contains(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn seven_cycle_outside_pgl_is_not_semilinear() {
        let s = space(2, 1, 2);
        let pgl = pgl_group(&s, &Limits::default(), 1).unwrap();
        let outside = LexRange::all(7)
            .find(|g| g.cycle_type() == vec![7] && !pgl.contains(g))
            .unwrap();
        assert_eq!(decompose_staudt(&s, &outside).unwrap(), None);
        let inside = pgl
            .elements()
            .iter()
            .find(|g| g.cycle_type() == vec![7])
            .unwrap();
        assert!(decompose_staudt(&s, inside).unwrap().is_some());
    }
}
