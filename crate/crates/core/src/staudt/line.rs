//! Affine charts on the projective line and the recovery of a field
//! automorphism from a normalizing permutation.
//!
//! A chart is built from a projective reference `(P₀, P∞, P₁)`: pick
//! `e₀ ∈ P₀`, `e₁ ∈ P∞` scaled so that `e₀ + e₁ ∈ P₁`; then `P_λ = [e₀ + λe₁]`
//! and `P∞` is the one point with no affine coordinate. The standard chart
//! uses `P₀ = (1,0)`, `P∞ = (0,1)`, `P₁ = (1,1)`, so `P_λ = (1, λ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldAut};
use crate::linalg::{self, Matrix};
use crate::perm::Permutation;
use crate::space::{AffinePatch, ProjSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineChart {
    infinity: usize,
    // point id of P_λ, indexed by λ
    points: Vec<usize>,
    // affine coordinate of each point id
    coords: Vec<Option<Elem>>,
}

fn require_line(space: &ProjSpace) -> Result<()> {
    if space.dim() != 1 {
        return Err(Error::Dimension {
            needed: "n = 1",
            actual: space.dim(),
        });
    }
    Ok(())
}

impl LineChart {
    pub fn standard(space: &ProjSpace) -> Result<LineChart> {
        require_line(space)?;
        let id = |v: [Elem; 2]| space.point_of(&v).unwrap();
        LineChart::from_reference(
            space,
            id([Elem::ONE, Elem::ZERO]),
            id([Elem::ZERO, Elem::ONE]),
            id([Elem::ONE, Elem::ONE]),
        )
    }

    /// Chart for the reference `(origin, infinity, unit)`; the three points
    /// must be distinct.
    pub fn from_reference(
        space: &ProjSpace,
        origin: usize,
        infinity: usize,
        unit: usize,
    ) -> Result<LineChart> {
        require_line(space)?;
        if origin == infinity || origin == unit || infinity == unit {
            return Err(Error::DuplicatePoints);
        }
        let field = space.field();
        let v0 = space.coords(origin).to_vec();
        let v1 = space.coords(infinity).to_vec();
        let basis = Matrix::from_columns(&[v0.clone(), v1.clone()]);
        let c = linalg::solve(field, &basis, space.coords(unit))
            .ok_or_else(|| Error::Internal("reference points are dependent".into()))?;
        let e0: Vec<Elem> = v0.iter().map(|&x| field.mul(c[0], x)).collect();
        let e1: Vec<Elem> = v1.iter().map(|&x| field.mul(c[1], x)).collect();
        let mut coords = vec![None; space.len()];
        let points: Vec<usize> = field
            .elements()
            .map(|lambda| {
                let w = [
                    field.add(e0[0], field.mul(lambda, e1[0])),
                    field.add(e0[1], field.mul(lambda, e1[1])),
                ];
                let id = space.point_of(&w).unwrap();
                coords[id] = Some(lambda);
                id
            })
            .collect();
        Ok(LineChart {
            infinity,
            points,
            coords,
        })
    }

    pub fn infinity(&self) -> usize {
        self.infinity
    }

    /// Point id of `P_λ`.
    pub fn point(&self, lambda: Elem) -> usize {
        self.points[lambda.index()]
    }

    /// Affine coordinate of a point, `None` at infinity.
    pub fn coordinate(&self, id: usize) -> Option<Elem> {
        self.coords[id]
    }

    fn motion(&self, image: impl Fn(Elem) -> Elem) -> Permutation {
        let mut images = vec![0u32; self.coords.len()];
        images[self.infinity] = self.infinity as u32;
        for (lambda, &id) in self.points.iter().enumerate() {
            images[id] = self.points[image(Elem(lambda as u32)).index()] as u32;
        }
        Permutation::from_raw(images)
    }

    /// `τ_μ: P_λ ↦ P_{λ+μ}`, fixing infinity.
    pub fn translation(&self, space: &ProjSpace, mu: Elem) -> Permutation {
        let f = space.field();
        self.motion(|l| f.add(l, mu))
    }

    /// `σ_μ: P_λ ↦ P_{λμ}`, fixing `P₀` and infinity.
    pub fn homothety(&self, space: &ProjSpace, mu: Elem) -> Result<Permutation> {
        if mu.is_zero() {
            return Err(Error::ZeroRatio);
        }
        let f = space.field();
        Ok(self.motion(|l| f.mul(l, mu)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MotionKind {
    Translation,
    Homothety,
}

/// Translation or homothety of the standard affine line inside P₁.
pub fn translation_homothety(
    patch: &AffinePatch,
    kind: MotionKind,
    mu: Elem,
) -> Result<Permutation> {
    let space = patch.space();
    let chart = LineChart::standard(space)?;
    match kind {
        MotionKind::Translation => Ok(chart.translation(space, mu)),
        MotionKind::Homothety => chart.homothety(space, mu),
    }
}

/// The primed chart `(φ(P₀), φ(P∞), φ(P₁))` of a bijection of P₁.
fn primed_chart(space: &ProjSpace, standard: &LineChart, phi: &Permutation) -> Result<LineChart> {
    LineChart::from_reference(
        space,
        phi.apply(standard.point(Elem::ZERO)),
        phi.apply(standard.infinity()),
        phi.apply(standard.point(Elem::ONE)),
    )
}

/// Reads off `h` from `φ(P_λ) = P'_{h(λ)}`, where primes refer to the chart
/// of the image reference. Returns the value table indexed by λ.
pub fn extract_field_aut(space: &ProjSpace, phi: &Permutation) -> Result<Vec<Elem>> {
    require_line(space)?;
    if phi.degree() != space.len() {
        return Err(Error::DegreeMismatch(phi.degree(), space.len()));
    }
    let standard = LineChart::standard(space)?;
    let primed = primed_chart(space, &standard, phi)?;
    Ok(space
        .field()
        .elements()
        .map(|lambda| {
            primed
                .coordinate(phi.apply(standard.point(lambda)))
                .expect("φ maps affine points away from φ(P∞)")
        })
        .collect())
}

/// The Frobenius power whose value table is `table`, if any.
pub fn frobenius_power_of(space: &ProjSpace, table: &[Elem]) -> Result<Option<FieldAut>> {
    let field = space.field();
    Ok(field
        .automorphisms()?
        .into_iter()
        .find(|aut| aut.table(field) == table))
}

/// Outcome of the four checks that make `h` a field automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Flags {
    pub additive: bool,
    pub multiplicative: bool,
    pub translation_conjugation: bool,
    pub homothety_conjugation: bool,
}

impl Lemma2Flags {
    pub fn all(&self) -> bool {
        self.additive
            && self.multiplicative
            && self.translation_conjugation
            && self.homothety_conjugation
    }
}

/// Checks, for every μ (and every λ where it applies), that
/// `φτ_μφ⁻¹ = τ'_{h(μ)}`, `φσ_μφ⁻¹ = σ'_{h(μ)}`, and that `h` is additive
/// and multiplicative. Failures are reported as flags.
pub fn verify_lemma2(space: &ProjSpace, phi: &Permutation, h: &[Elem]) -> Result<Lemma2Flags> {
    require_line(space)?;
    let field = space.field();
    if h.len() != field.order() || phi.degree() != space.len() {
        return Err(Error::DegreeMismatch(phi.degree(), space.len()));
    }
    let standard = LineChart::standard(space)?;
    let primed = primed_chart(space, &standard, phi)?;

    let translation_conjugation = field.elements().all(|mu| {
        phi.conjugate(&standard.translation(space, mu)) == primed.translation(space, h[mu.index()])
    });
    let homothety_conjugation = field.nonzero().all(|mu| match h[mu.index()] {
        hm if hm.is_zero() => false,
        hm => {
            phi.conjugate(&standard.homothety(space, mu).unwrap())
                == primed.homothety(space, hm).unwrap()
        }
    });
    let additive = field.elements().all(|l| {
        field
            .elements()
            .all(|m| h[field.add(l, m).index()] == field.add(h[l.index()], h[m.index()]))
    });
    let multiplicative = field.elements().all(|l| {
        field
            .elements()
            .all(|m| h[field.mul(l, m).index()] == field.mul(h[l.index()], h[m.index()]))
    });
    Ok(Lemma2Flags {
        additive,
        multiplicative,
        translation_conjugation,
        homothety_conjugation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::perm::LexRange;
    use crate::staudt::{pgammal_group, pgl_group};
    use crate::Limits;

    fn line(p: u64, k: u32) -> ProjSpace {
        ProjSpace::new(Field::new(p, k).unwrap(), 1).unwrap()
    }

    #[test]
    fn translations_and_homotheties_over_gf5() {
        let s = line(5, 1);
        let patch = s.affine_patch().unwrap();
        // ids: 0 = P∞, 1 + λ = P_λ
        let t0 = translation_homothety(&patch, MotionKind::Translation, Elem(0)).unwrap();
        assert!(t0.is_identity());
        let t2 = translation_homothety(&patch, MotionKind::Translation, Elem(2)).unwrap();
        assert_eq!(t2.apply(1), 3);
        assert_eq!(t2.fixed_points(), vec![0]);
        let s2 = translation_homothety(&patch, MotionKind::Homothety, Elem(2)).unwrap();
        assert_eq!(s2.apply(2), 3);
        assert_eq!(s2.apply(3), 5);
        assert_eq!(s2.fixed_points(), vec![0, 1]);
        assert_eq!(
            translation_homothety(&patch, MotionKind::Homothety, Elem(0)),
            Err(Error::ZeroRatio)
        );
    }

    #[test]
    fn standard_chart_matches_coordinates() {
        let s = line(3, 2);
        let chart = LineChart::standard(&s).unwrap();
        for lambda in s.field().elements() {
            assert_eq!(s.coords(chart.point(lambda)), &[Elem::ONE, lambda]);
        }
        assert_eq!(s.coords(chart.infinity()), &[Elem::ZERO, Elem::ONE]);
    }

    #[test]
    fn extraction_of_known_maps() {
        let s = line(2, 2);
        assert_eq!(
            extract_field_aut(&s, &Permutation::identity(5)).unwrap(),
            vec![Elem(0), Elem(1), Elem(2), Elem(3)]
        );
        let frob = crate::staudt::projectivize(
            &s,
            &crate::staudt::SemilinearMap::new(Matrix::identity(2), FieldAut::new(1)),
        )
        .unwrap();
        let h = extract_field_aut(&s, &frob).unwrap();
        assert_eq!(h, FieldAut::new(1).table(s.field()));
        assert_eq!(frobenius_power_of(&s, &h).unwrap(), Some(FieldAut::new(1)));
    }

    #[test]
    fn homographies_of_gf5_give_identity() {
        let s = line(5, 1);
        let pgl = pgl_group(&s, &Limits::default(), 1).unwrap();
        let identity: Vec<Elem> = s.field().elements().collect();
        for g in pgl.elements() {
            assert_eq!(extract_field_aut(&s, g).unwrap(), identity);
            assert!(verify_lemma2(&s, g, &identity).unwrap().all());
        }
    }

    #[test]
    fn field_automorphism_read_off_over_gf9() {
        let s = line(3, 2);
        let pgammal = pgammal_group(&s, &Limits::default(), 1).unwrap();
        assert_eq!(pgammal.order(), 1440);
        for g in pgammal.elements() {
            let h = extract_field_aut(&s, g).unwrap();
            assert!(frobenius_power_of(&s, &h).unwrap().is_some());
            assert!(verify_lemma2(&s, g, &h).unwrap().all());
        }
    }

    #[test]
    fn non_normalizing_bijection_fails_a_flag() {
        let s = line(5, 1);
        let pgl = pgl_group(&s, &Limits::default(), 1).unwrap();
        let witness = LexRange::all(6).find(|g| !pgl.normalized_by(g)).unwrap();
        let h = extract_field_aut(&s, &witness).unwrap();
        assert!(!verify_lemma2(&s, &witness, &h).unwrap().all());
    }

    #[test]
    fn dimension_guard() {
        let plane = ProjSpace::new(Field::new(2, 1).unwrap(), 2).unwrap();
        assert!(matches!(
            extract_field_aut(&plane, &Permutation::identity(7)),
            Err(Error::Dimension { .. })
        ));
    }
}
