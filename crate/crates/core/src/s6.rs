//! The exotic automorphism of S₆ from the projective line over GF(5).
//!
//! PGL₂(F₅) has order 120 on the 6 points of P₁(F₅), so it has index 6 in
//! S₆; it is self-normalizing and therefore has exactly 6 conjugates
//! H₁, …, H₆. Conjugating those by any τ ∈ S₆ permutes them, which gives a
//! map F: S₆ → S₆. F(PGL₂(F₅)) fixes H₁ while PGL₂(F₅) itself fixes no
//! point, so F cannot be conjugation by an element of S₆.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{conjugates_in_order, PermGroup};
use crate::perm::{lex_unrank, partition, LexRange, Permutation};
use crate::space::ProjSpace;
use crate::staudt::pgl_group;
use crate::Limits;

const DEGREE: usize = 6;
const ORDER: usize = 720;

/// A conjugate of PGL₂(F₅): its label and the sorted lexicographic ranks of
/// its elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugateEntry {
    pub label: String,
    pub fingerprint: Vec<u16>,
}

/// `F(tau) = image`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub tau: Permutation,
    pub image: Permutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterFlags {
    pub is_homomorphism: bool,
    pub is_bijective: bool,
    pub fixes_stabilizer_image: bool,
    /// PGL₂(F₅) has no fixed point while its image fixes H₁.
    pub outer_by_fixed_points: bool,
    /// F differs from conjugation by every element of S₆.
    pub outer_by_exhaustion: bool,
    pub is_outer: bool,
}

impl OuterFlags {
    pub fn all(&self) -> bool {
        self.is_homomorphism && self.is_bijective && self.fixes_stabilizer_image && self.is_outer
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterWitness {
    pub points: usize,
    pub pgl_order: usize,
    pub index: usize,
    pub conjugate_count: usize,
    pub image_of_pgl_order: usize,
    pub pgl_orbit_of_point_0: Vec<usize>,
    /// Number of entries where F differs from an inner automorphism,
    /// minimized over all 720 of them.
    pub min_inner_disagreement: usize,
    pub transposition: Permutation,
    pub transposition_image: Permutation,
    pub transposition_image_cycle_type: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterAutReport {
    pub conjugates: Vec<ConjugateEntry>,
    pub table: Vec<TableEntry>,
    pub flags: OuterFlags,
    pub witness: OuterWitness,
    pub duration_ms: Option<u64>,
}

/// The induced permutation of conjugates: `i ↦ j` where `τHᵢτ⁻¹ = Hⱼ`.
pub fn induced_permutation(conjugates: &[PermGroup], tau: &Permutation) -> Result<Permutation> {
    let images = conjugates
        .iter()
        .map(|hi| {
            conjugates
                .iter()
                .position(|hj| {
                    hi.generators()
                        .iter()
                        .all(|x| hj.contains(&tau.conjugate(x)))
                })
                .ok_or_else(|| {
                    Error::Internal("conjugate set is not closed under conjugation".into())
                })
        })
        .collect::<Result<Vec<usize>>>()?;
    Permutation::from_images(images)
}

/// The 720-entry table of F indexed by lexicographic rank.
pub struct OuterAutomorphism {
    pub pgl: PermGroup,
    pub conjugates: Vec<PermGroup>,
    pub table: Vec<Permutation>,
}

impl OuterAutomorphism {
    /// Builds F with conjugates labeled by first encounter over the given
    /// scan order of S₆.
    pub fn with_order<I>(order: I) -> Result<OuterAutomorphism>
    where
        I: IntoIterator<Item = Permutation>,
    {
        let limits = Limits::default();
        let space = ProjSpace::new(Field::new(5, 1)?, 1)?;
        let pgl = pgl_group(&space, &limits, 1)?;
        let conjugates = conjugates_in_order(&pgl, order);
        if conjugates.len() != DEGREE {
            return Err(Error::Internal(format!(
                "found {} conjugates",
                conjugates.len()
            )));
        }
        let table = LexRange::all(DEGREE)
            .map(|tau| induced_permutation(&conjugates, &tau))
            .collect::<Result<Vec<_>>>()?;
        Ok(OuterAutomorphism {
            pgl,
            conjugates,
            table,
        })
    }

    /// Canonical labeling: first encounter over the lexicographic scan, so
    /// H₁ is PGL₂(F₅) itself.
    pub fn canonical() -> Result<OuterAutomorphism> {
        OuterAutomorphism::with_order(LexRange::all(DEGREE))
    }

    pub fn apply(&self, tau: &Permutation) -> &Permutation {
        &self.table[tau.lex_rank() as usize]
    }
}

fn rank(p: &Permutation) -> usize {
    p.lex_rank() as usize
}

/// Recomputes every flag from the table and the conjugate fingerprints.
pub fn verify_outer(report: &OuterAutReport, parts: usize) -> Result<(OuterFlags, OuterWitness)> {
    if report.table.len() != ORDER || report.conjugates.len() != DEGREE {
        return Err(Error::Internal(
            "report does not describe a map on S6".into(),
        ));
    }
    let s6: Vec<Permutation> = LexRange::all(DEGREE).collect();
    let mut table = vec![None; ORDER];
    for entry in &report.table {
        table[rank(&entry.tau)] = Some(entry.image.clone());
    }
    let table: Vec<Permutation> = table
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("table is missing entries".into()))?;
    let image_rank: Vec<usize> = table.iter().map(rank).collect();

    // (a) F(στ) = F(σ)F(τ) for all ordered pairs, split by rows
    let is_homomorphism = partition(ORDER as u128, parts)
        .into_par_iter()
        .all(|(a, b)| {
            (a as usize..b as usize).all(|i| {
                s6.iter().enumerate().all(|(j, tau)| {
                    let lhs = image_rank[rank(&s6[i].compose(tau))];
                    lhs == rank(&table[i].compose(&table[j]))
                })
            })
        });

    // (b) injective table, hence bijective
    let mut seen = vec![false; ORDER];
    for &r in &image_rank {
        seen[r] = true;
    }
    let is_bijective = seen.iter().all(|&x| x);

    // (c) F(PGL) = Stab(H₁)
    let pgl_elements: Vec<Permutation> = report.conjugates[0]
        .fingerprint
        .iter()
        .map(|&r| lex_unrank(DEGREE, r as u128))
        .collect();
    let pgl = PermGroup::from_elements(DEGREE, pgl_elements)?;
    let mut image_of_pgl: Vec<usize> = pgl.elements().iter().map(|g| image_rank[rank(g)]).collect();
    image_of_pgl.sort_unstable();
    image_of_pgl.dedup();
    let stabilizer: Vec<usize> = (0..ORDER).filter(|&r| s6[r].apply(0) == 0).collect();
    let fixes_stabilizer_image = image_of_pgl.len() == 120 && image_of_pgl == stabilizer;

    // (d1) PGL has no fixed point; its image fixes H₁
    let orbit = pgl.orbit(0);
    let outer_by_fixed_points =
        orbit.len() == DEGREE && image_of_pgl.iter().all(|&r| s6[r].apply(0) == 0);

    // (d2) F differs from every inner automorphism
    let min_inner_disagreement = s6
        .iter()
        .map(|g| {
            s6.iter()
                .zip(&image_rank)
                .filter(|(tau, &img)| rank(&g.conjugate(tau)) != img)
                .count()
        })
        .min()
        .unwrap();
    let outer_by_exhaustion = min_inner_disagreement > 0;

    let transposition = Permutation::from_cycles(DEGREE, &[&[0, 1]])?;
    let transposition_image = table[rank(&transposition)].clone();
    let flags = OuterFlags {
        is_homomorphism,
        is_bijective,
        fixes_stabilizer_image,
        outer_by_fixed_points,
        outer_by_exhaustion,
        is_outer: outer_by_fixed_points && outer_by_exhaustion,
    };
    let witness = OuterWitness {
        points: DEGREE,
        pgl_order: pgl.order(),
        index: ORDER / pgl.order(),
        conjugate_count: report.conjugates.len(),
        image_of_pgl_order: image_of_pgl.len(),
        pgl_orbit_of_point_0: orbit,
        min_inner_disagreement,
        transposition_image_cycle_type: transposition_image.cycle_type(),
        transposition,
        transposition_image,
    };
    Ok((flags, witness))
}

/// Builds F with the canonical labeling and verifies it.
pub fn build_outer_automorphism(parts: usize) -> Result<OuterAutReport> {
    let start = std::time::Instant::now();
    let outer = OuterAutomorphism::canonical()?;
    let conjugates = outer
        .conjugates
        .iter()
        .enumerate()
        .map(|(i, h)| ConjugateEntry {
            label: format!("H{}", i + 1),
            fingerprint: h.elements().iter().map(|g| g.lex_rank() as u16).collect(),
        })
        .collect();
    let table = LexRange::all(DEGREE)
        .zip(&outer.table)
        .map(|(tau, image)| TableEntry {
            tau,
            image: image.clone(),
        })
        .collect();
    let mut report = OuterAutReport {
        conjugates,
        table,
        flags: OuterFlags {
            is_homomorphism: false,
            is_bijective: false,
            fixes_stabilizer_image: false,
            outer_by_fixed_points: false,
            outer_by_exhaustion: false,
            is_outer: false,
        },
        witness: OuterWitness {
            points: 0,
            pgl_order: 0,
            index: 0,
            conjugate_count: 0,
            image_of_pgl_order: 0,
            pgl_orbit_of_point_0: Vec::new(),
            min_inner_disagreement: 0,
            transposition: Permutation::identity(DEGREE),
            transposition_image: Permutation::identity(DEGREE),
            transposition_image_cycle_type: Vec::new(),
        },
        duration_ms: None,
    };
    let (flags, witness) = verify_outer(&report, parts)?;
    report.flags = flags;
    report.witness = witness;
    report.duration_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// An element `g` with `other(τ) = g·F(τ)·g⁻¹` for every τ, if one exists.
pub fn relabeling_conjugator(
    canonical: &OuterAutomorphism,
    other: &OuterAutomorphism,
) -> Option<Permutation> {
    LexRange::all(DEGREE).find(|g| {
        canonical
            .table
            .iter()
            .zip(&other.table)
            .all(|(f, f2)| g.conjugate(f) == *f2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_labeling_starts_with_pgl() {
        let outer = OuterAutomorphism::canonical().unwrap();
        assert_eq!(outer.conjugates.len(), 6);
        assert_eq!(outer.conjugates[0], outer.pgl);
        assert!(outer.apply(&Permutation::identity(6)).is_identity());
    }

    #[test]
    fn report_flags_hold() {
        let report = build_outer_automorphism(2).unwrap();
        assert!(report.flags.all(), "{:?}", report.flags);
        assert_eq!(report.witness.index, 6);
        assert_eq!(report.witness.transposition_image_cycle_type, vec![2, 2, 2]);
    }

    #[test]
    fn kernel_is_trivial() {
        let outer = OuterAutomorphism::canonical().unwrap();
        let identities: Vec<usize> = (0..ORDER)
            .filter(|&r| outer.table[r].is_identity())
            .collect();
        assert_eq!(identities, vec![0]);
    }

    #[test]
    fn transpositions_change_class() {
        let outer = OuterAutomorphism::canonical().unwrap();
        for tau in LexRange::all(DEGREE).filter(|t| t.cycle_type() == vec![2, 1, 1, 1, 1]) {
            assert_eq!(outer.apply(&tau).cycle_type(), vec![2, 2, 2]);
        }
    }

    #[test]
    fn inner_automorphisms_preserve_cycle_type() {
        for g in LexRange::all(DEGREE).step_by(37) {
            for tau in LexRange::all(DEGREE).step_by(11) {
                assert_eq!(g.conjugate(&tau).cycle_type(), tau.cycle_type());
            }
        }
    }

    #[test]
    fn relabeling_changes_f_by_an_inner_automorphism() {
        let canonical = OuterAutomorphism::canonical().unwrap();
        let reversed: Vec<Permutation> = LexRange::all(DEGREE)
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        let other = OuterAutomorphism::with_order(reversed).unwrap();
        let mut a = canonical.conjugates.clone();
        let mut b = other.conjugates.clone();
        a.sort_by(|x, y| x.elements().cmp(y.elements()));
        b.sort_by(|x, y| x.elements().cmp(y.elements()));
        assert_eq!(a, b);
        assert!(relabeling_conjugator(&canonical, &other).is_some());
    }
}
