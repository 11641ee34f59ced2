//! Klein geometries `(X, G)` and the verification campaigns built on them.
//!
//! The automorphism group of `(X, G)` is the normalizer of `G` in the
//! symmetric group on `X`. The campaigns here compute that normalizer (or
//! probe it) and compare it with the group of Staudt projectivities.

use std::collections::HashSet;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{normalizer_brute, PermGroup};
use crate::perm::{factorial, partition, LexRange, Permutation};
use crate::report::{
    Flags, GeometryInfo, GeometryKind, Lemma1Report, Lemma2Report, Orders, SampleSummary, Strategy,
    VerificationReport, Witness,
};
use crate::space::{AffinePatch, ProjSpace};
use crate::staudt::{
    decompose_staudt, extract_field_aut, frobenius_power_of, gl_order, pgammal_group, pgl_group,
    verify_lemma2,
};
use crate::Limits;

#[derive(Debug, Clone)]
pub enum Points {
    Projective(ProjSpace),
    Affine(AffinePatch),
}

/// A point set together with a group acting on it.
#[derive(Debug, Clone)]
pub struct KleinGeometry {
    pub label: String,
    pub points: Points,
    pub group: PermGroup,
}

fn field_label(field: &Field) -> String {
    format!("F_{}", field.order())
}

pub fn projective_info(space: &ProjSpace) -> GeometryInfo {
    let (n, f) = (space.dim(), space.field());
    let group = format!("PGL({}, {})", n + 1, f.order());
    GeometryInfo {
        label: format!("P_{}({})", n, field_label(f)),
        kind: GeometryKind::Projective,
        space: space.spec(),
        field: f.spec(),
        degree: space.len(),
        group_convention: format!(
            "{group}: {d}x{d} invertible matrices modulo scalars acting on the {pts} points of P_{n}; \
             written PGl_{n} when indexed by the projective dimension",
            d = n + 1,
            pts = space.len()
        ),
        group,
    }
}

pub fn affine_info(patch: &AffinePatch) -> GeometryInfo {
    let space = patch.space();
    let (n, f) = (space.dim(), space.field());
    let group = format!("AGL({}, {})", n, f.order());
    GeometryInfo {
        label: format!("A_{}({})", n, field_label(f)),
        kind: GeometryKind::Affine,
        space: space.spec(),
        field: f.spec(),
        degree: patch.len(),
        group_convention: format!(
            "{group}: the stabilizer in PGL({}, {}) of the hyperplane x0 = 0, restricted to its {} affine \
             points; written Aff_{n}",
            n + 1,
            f.order(),
            patch.len()
        ),
        group,
    }
}

impl KleinGeometry {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn info(&self) -> GeometryInfo {
        match &self.points {
            Points::Projective(s) => projective_info(s),
            Points::Affine(p) => affine_info(p),
        }
    }

    pub fn projective_space(&self) -> Option<&ProjSpace> {
        match &self.points {
            Points::Projective(s) => Some(s),
            Points::Affine(_) => None,
        }
    }
}

/// `(P_n, PGL)`.
pub fn projective_geometry(
    field: Field,
    n: usize,
    limits: &Limits,
    parts: usize,
) -> Result<KleinGeometry> {
    let space = ProjSpace::with_limits(field, n, limits)?;
    let group = pgl_group(&space, limits, parts)?;
    Ok(KleinGeometry {
        label: projective_info(&space).label,
        points: Points::Projective(space),
        group,
    })
}

/// Restriction of a permutation of P_n preserving the hyperplane at infinity
/// to the affine points; `None` if the hyperplane is not preserved.
pub fn restrict_to_patch(patch: &AffinePatch, g: &Permutation) -> Option<Permutation> {
    if patch
        .infinity()
        .iter()
        .any(|&p| !patch.is_at_infinity(g.apply(p)))
    {
        return None;
    }
    let images = patch
        .affine_points()
        .iter()
        .map(|&p| patch.affine_id(g.apply(p)).unwrap())
        .collect();
    Some(Permutation::from_images(images).expect("restriction is a bijection"))
}

fn restricted_subgroup(patch: &AffinePatch, group: &PermGroup) -> Result<PermGroup> {
    let restricted: Vec<Permutation> = group
        .elements()
        .iter()
        .filter_map(|g| restrict_to_patch(patch, g))
        .collect();
    PermGroup::from_elements(patch.len(), restricted)
}

/// `(A_n, Aff_n)`: the hyperplane-preserving projectivities acting on the
/// affine points. Asserts `|Aff_n| = q^n · |GL_n(q)|`.
pub fn affine_geometry(
    field: Field,
    n: usize,
    limits: &Limits,
    parts: usize,
) -> Result<KleinGeometry> {
    let space = ProjSpace::with_limits(field, n, limits)?;
    let patch = space.affine_patch()?;
    let pgl = pgl_group(&space, limits, parts)?;
    let group = restricted_subgroup(&patch, &pgl)?;
    let q = space.field().order() as u128;
    let expected = q.pow(n as u32) * gl_order(q, n);
    if group.order() as u128 != expected {
        return Err(Error::Internal(format!(
            "affine group has order {}, expected {expected}",
            group.order()
        )));
    }
    Ok(KleinGeometry {
        label: affine_info(&patch).label,
        points: Points::Affine(patch),
        group,
    })
}

fn check_triple(geom: &KleinGeometry, ids: [usize; 3]) -> Result<()> {
    if let Some(&bad) = ids.iter().find(|&&i| i >= geom.degree()) {
        return Err(Error::PointOutOfRange(bad));
    }
    if ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2] {
        return Err(Error::DuplicatePoints);
    }
    Ok(())
}

/// `H_{P1,P2}(P3)`: images of `P3`, other than `P3` itself, under the
/// elements of G fixing `P1` and `P2`. Sorted.
pub fn h_set(geom: &KleinGeometry, p1: usize, p2: usize, p3: usize) -> Result<Vec<usize>> {
    check_triple(geom, [p1, p2, p3])?;
    let mut orbit = geom.group.stabilizer_orbit(&[p1, p2], p3);
    orbit.retain(|&x| x != p3);
    Ok(orbit)
}

/// Three distinct points are collinear iff their three H-sets coincide.
pub fn lemma1_collinear(geom: &KleinGeometry, p1: usize, p2: usize, p3: usize) -> Result<bool> {
    let a = h_set(geom, p1, p2, p3)?;
    let b = h_set(geom, p1, p3, p2)?;
    let c = h_set(geom, p2, p3, p1)?;
    Ok(a == b && b == c)
}

/// All H-sets of a geometry, computed with one stabilizer filter per
/// unordered pair.
pub struct HSetTable {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl HSetTable {
    pub fn new(geom: &KleinGeometry) -> HSetTable {
        let n = geom.degree();
        let mut sets = vec![Vec::new(); n * n * n];
        for a in 0..n {
            for b in a + 1..n {
                let stab = geom.group.pointwise_stabilizer(&[a, b]);
                for c in (0..n).filter(|&c| c != a && c != b) {
                    let mut orbit: Vec<usize> = stab
                        .iter()
                        .map(|g| g.apply(c))
                        .filter(|&x| x != c)
                        .collect();
                    orbit.sort_unstable();
                    orbit.dedup();
                    sets[(a * n + b) * n + c] = orbit.clone();
                    sets[(b * n + a) * n + c] = orbit;
                }
            }
        }
        HSetTable { n, sets }
    }

    pub fn get(&self, p1: usize, p2: usize, p3: usize) -> &[usize] {
        &self.sets[(p1 * self.n + p2) * self.n + p3]
    }

    pub fn collinear(&self, p1: usize, p2: usize, p3: usize) -> bool {
        let a = self.get(p1, p2, p3);
        a == self.get(p1, p3, p2) && a == self.get(p2, p3, p1)
    }
}

/// Compares the H-set criterion with the rank test on every unordered
/// triple of a projective geometry.
pub fn lemma1_campaign(geom: &KleinGeometry) -> Result<Lemma1Report> {
    let start = Instant::now();
    let space = geom.projective_space().ok_or(Error::Dimension {
        needed: "a projective geometry",
        actual: 0,
    })?;
    let table = HSetTable::new(geom);
    let n = geom.degree();
    let (mut triples, mut collinear, mut agreements) = (0, 0, 0);
    let mut disagreements = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples += 1;
                let by_rank = space.collinear_rank(a, b, c)?;
                collinear += by_rank as usize;
                if table.collinear(a, b, c) == by_rank {
                    agreements += 1;
                } else {
                    disagreements.push([a, b, c]);
                }
            }
        }
    }
    Ok(Lemma1Report {
        geometry: geom.info(),
        triples,
        collinear,
        agreements,
        passed: disagreements.is_empty(),
        disagreements,
        duration_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Order-independent 128-bit digest of a group's element set.
fn digest(group: &PermGroup) -> (u64, u64) {
    let mut a = DefaultHasher::new();
    let mut b = DefaultHasher::new();
    0xA5u8.hash(&mut b);
    for g in group.elements() {
        g.hash(&mut a);
        g.hash(&mut b);
    }
    (a.finish(), b.finish())
}

/// Size of the conjugacy class of `h` in S_m, by breadth-first search over
/// conjugation by a transposition and an m-cycle.
pub fn conjugate_count(h: &PermGroup) -> usize {
    let m = h.degree();
    if m < 2 {
        return 1;
    }
    let cycle: Vec<usize> = (0..m).collect();
    let gens = [
        Permutation::from_cycles(m, &[&[0, 1]]).unwrap(),
        Permutation::from_cycles(m, &[&cycle]).unwrap(),
    ];
    let mut seen = HashSet::from([digest(h)]);
    let mut frontier = vec![h.clone()];
    while let Some(k) = frontier.pop() {
        for g in &gens {
            let c = k.conjugate_by(g);
            if seen.insert(digest(&c)) {
                frontier.push(c);
            }
        }
    }
    seen.len()
}

/// Compares a brute-force normalizer with the claimed automorphism group.
fn compare_brute(
    structural: &PermGroup,
    claimed: &PermGroup,
    limits: &Limits,
    parts: usize,
) -> Result<(Orders, Flags, Vec<Witness>)> {
    let normalizer = normalizer_brute(structural, limits.factorial, parts)?;
    let conjugates = conjugate_count(structural);
    let mut witnesses = Vec::new();
    let mut first_missing = |from: &PermGroup, to: &PermGroup, flag: &str| -> bool {
        match from.elements().iter().find(|g| !to.contains(g)) {
            Some(g) => {
                witnesses.push(Witness {
                    flag: flag.into(),
                    permutation: g.clone(),
                });
                false
            }
            None => true,
        }
    };
    let flags = Flags {
        structural_in_normalizer: first_missing(
            structural,
            &normalizer,
            "structural_in_normalizer",
        ),
        claimed_in_normalizer: first_missing(claimed, &normalizer, "claimed_in_normalizer"),
        normalizer_in_claimed: first_missing(&normalizer, claimed, "normalizer_in_claimed"),
        orbit_stabilizer: Some(
            conjugates as u128 * normalizer.order() as u128 == factorial(structural.degree()),
        ),
    };
    let orders = Orders {
        structural: structural.order(),
        claimed: claimed.order(),
        normalizer: Some(normalizer.order()),
        conjugates: Some(conjugates),
    };
    Ok((orders, flags, witnesses))
}

/// How the normalizer side of a campaign is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Search {
    /// Scan all of S_m.
    Brute,
    /// Check the claimed group exhaustively, then probe uniformly random
    /// permutations.
    Sampled { samples: usize, seed: u64 },
}

/// The `i`-th sample of a seeded stream; independent of how the stream is
/// split between workers.
fn sample_permutation(base: &ChaCha8Rng, degree: usize, i: u64) -> Permutation {
    let mut rng = base.clone();
    rng.set_stream(i);
    let mut images: Vec<usize> = (0..degree).collect();
    images.shuffle(&mut rng);
    Permutation::from_images(images).unwrap()
}

/// Theorem check for `(P_n, PGL)`: the normalizer of PGL is PΓL.
pub fn automorphism_group(
    geom: &KleinGeometry,
    search: Search,
    limits: &Limits,
    parts: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let space = geom.projective_space().ok_or(Error::Dimension {
        needed: "a projective geometry",
        actual: 0,
    })?;
    let claimed = pgammal_group(space, limits, parts)?;
    let (orders, flags, witnesses, sampling, strategy) = match search {
        Search::Brute => {
            let (o, f, w) = compare_brute(&geom.group, &claimed, limits, parts)?;
            (o, f, w, None, Strategy::Brute)
        }
        Search::Sampled { samples, seed } => {
            let mut witnesses = Vec::new();
            let bad_claimed = claimed
                .elements()
                .iter()
                .find(|g| !geom.group.normalized_by(g));
            if let Some(g) = bad_claimed {
                witnesses.push(Witness {
                    flag: "claimed_in_normalizer".into(),
                    permutation: g.clone(),
                });
            }
            let base = ChaCha8Rng::seed_from_u64(seed);
            let degree = geom.degree();
            // (outside claimed, normalizing, decomposed, first counterexample)
            type Tally = (usize, usize, usize, Option<Permutation>);
            let tallies: Vec<Tally> = partition(samples as u128, parts)
                .into_par_iter()
                .map(|(a, b)| {
                    let mut t: Tally = (0, 0, 0, None);
                    for i in a..b {
                        let g = sample_permutation(&base, degree, i as u64);
                        t.0 += !claimed.contains(&g) as usize;
                        if geom.group.normalized_by(&g) {
                            t.1 += 1;
                            if decompose_staudt(space, &g).ok().flatten().is_some() {
                                t.2 += 1;
                            } else if t.3.is_none() {
                                t.3 = Some(g);
                            }
                        }
                    }
                    t
                })
                .collect();
            let summary = SampleSummary {
                seed,
                samples,
                outside_claimed: tallies.iter().map(|t| t.0).sum(),
                normalizing: tallies.iter().map(|t| t.1).sum(),
                decomposed: tallies.iter().map(|t| t.2).sum(),
            };
            if let Some(g) = tallies.into_iter().find_map(|t| t.3) {
                witnesses.push(Witness {
                    flag: "normalizer_in_claimed".into(),
                    permutation: g,
                });
            }
            let flags = Flags {
                structural_in_normalizer: geom
                    .group
                    .generators()
                    .iter()
                    .all(|g| geom.group.normalized_by(g)),
                claimed_in_normalizer: bad_claimed.is_none(),
                normalizer_in_claimed: summary.normalizing == summary.decomposed,
                orbit_stabilizer: None,
            };
            let orders = Orders {
                structural: geom.group.order(),
                claimed: claimed.order(),
                normalizer: None,
                conjugates: None,
            };
            (orders, flags, witnesses, Some(summary), Strategy::Sampled)
        }
    };
    let passed = flags.all();
    Ok(VerificationReport {
        geometry: geom.info(),
        strategy,
        orders,
        flags,
        sampling,
        excluded_case: None,
        asserted: true,
        passed,
        witnesses,
        duration_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Affine theorem check: the normalizer of Aff_n in the symmetric group on
/// the affine points equals the restriction of the hyperplane-preserving
/// part of PΓL. Over F_2 the theorem's hypothesis fails; the comparison is
/// still computed but not asserted.
pub fn verify_theorem_affine(
    field: Field,
    n: usize,
    limits: &Limits,
    parts: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let excluded =
        (field.order() == 2).then(|| "excluded case: the theorem assumes k != F_2".to_string());
    let geom = affine_geometry(field, n, limits, parts)?;
    let Points::Affine(patch) = &geom.points else {
        unreachable!()
    };
    let pgammal = pgammal_group(patch.space(), limits, parts)?;
    let claimed = restricted_subgroup(patch, &pgammal)?;
    let (orders, flags, witnesses) = compare_brute(&geom.group, &claimed, limits, parts)?;
    let passed = flags.all();
    Ok(VerificationReport {
        geometry: geom.info(),
        strategy: Strategy::Brute,
        orders,
        flags,
        sampling: None,
        asserted: excluded.is_none(),
        excluded_case: excluded,
        passed,
        witnesses,
        duration_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Runs the field-automorphism extraction and the four conjugation checks over
/// every element of PΓL₂(q), then looks for a bijection of P₁ that does not
/// normalize PGL (first in lexicographic order) and records its flags.
pub fn lemma2_campaign(field: Field, limits: &Limits, parts: usize) -> Result<Lemma2Report> {
    let start = Instant::now();
    let space = ProjSpace::with_limits(field, 1, limits)?;
    let pgl = pgl_group(&space, limits, parts)?;
    let pgammal = pgammal_group(&space, limits, parts)?;
    let (mut frobenius_powers, mut all_flags_true) = (0, 0);
    for g in pgammal.elements() {
        let h = extract_field_aut(&space, g)?;
        frobenius_powers += frobenius_power_of(&space, &h)?.is_some() as usize;
        all_flags_true += verify_lemma2(&space, g, &h)?.all() as usize;
    }
    let m = space.len();
    if factorial(m) > limits.factorial {
        return Err(Error::FactorialCap {
            candidates: factorial(m),
            cap: limits.factorial,
        });
    }
    let non_normalizer = LexRange::all(m).find(|g| !pgl.normalized_by(g));
    let non_normalizer_flags = match &non_normalizer {
        Some(g) => Some(verify_lemma2(&space, g, &extract_field_aut(&space, g)?)?),
        None => None,
    };
    let checked = pgammal.order();
    let passed = frobenius_powers == checked
        && all_flags_true == checked
        && non_normalizer_flags.is_none_or(|f| !f.all());
    Ok(Lemma2Report {
        geometry: projective_info(&space),
        checked,
        frobenius_powers,
        all_flags_true,
        non_normalizer_exists: non_normalizer.is_some(),
        non_normalizer,
        non_normalizer_flags,
        passed,
        duration_ms: Some(start.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proj(p: u64, k: u32, n: usize) -> KleinGeometry {
        projective_geometry(Field::new(p, k).unwrap(), n, &Limits::default(), 1).unwrap()
    }

    #[test]
    fn projective_geometry_orders() {
        for (p, k, n, deg, ord) in [(5, 1, 1, 6, 120), (2, 1, 2, 7, 168), (2, 2, 1, 5, 60)] {
            let g = proj(p, k, n);
            assert_eq!((g.degree(), g.group.order()), (deg, ord));
        }
    }

    #[test]
    fn affine_geometry_orders() {
        for (p, k, n, deg, ord) in [(2, 2, 1, 4, 12), (3, 1, 2, 9, 432), (5, 1, 1, 5, 20)] {
            let g = affine_geometry(Field::new(p, k).unwrap(), n, &Limits::default(), 1).unwrap();
            assert_eq!((g.degree(), g.group.order()), (deg, ord));
        }
    }

    #[test]
    fn h_sets_on_the_line_over_gf5() {
        let g = proj(5, 1, 1);
        // ids: 0 = P∞, 1 + λ = P_λ
        assert_eq!(h_set(&g, 1, 0, 2).unwrap(), vec![3, 4, 5]);
        assert_eq!(h_set(&g, 1, 1, 2), Err(Error::DuplicatePoints));
        assert_eq!(g.group.stabilizer_orbit(&[1, 0], 2), vec![2, 3, 4, 5]);
    }

    #[test]
    fn h_sets_on_the_fano_plane() {
        let g = proj(2, 1, 2);
        let s = g.projective_space().unwrap();
        let id = |v: [u32; 3]| s.point_of(&v.map(crate::field::Elem)).unwrap();
        let (e1, e2, e3) = (id([1, 0, 0]), id([0, 1, 0]), id([0, 0, 1]));
        let line = s.line_through(e1, e2).unwrap();
        let mut expected: Vec<usize> = (0..7).filter(|p| !line.contains(p) && *p != e3).collect();
        expected.sort();
        assert_eq!(h_set(&g, e1, e2, e3).unwrap(), expected);
        assert!(lemma1_collinear(&g, e1, e2, id([1, 1, 0])).unwrap());
        assert!(!lemma1_collinear(&g, e1, e2, e3).unwrap());
    }

    #[test]
    fn empty_h_set_when_stabilizer_fixes_the_third_point() {
        let trivial = PermGroup::generate(4, &[], 10).unwrap();
        let geom = KleinGeometry {
            label: "trivial".into(),
            points: Points::Projective(ProjSpace::new(Field::new(3, 1).unwrap(), 1).unwrap()),
            group: trivial,
        };
        assert!(h_set(&geom, 0, 1, 2).unwrap().is_empty());
    }

    #[test]
    fn h_set_collinearity_agrees_with_rank() {
        for (p, k, n, triples) in [(2, 1, 2, 35), (5, 1, 1, 20), (2, 2, 1, 10), (7, 1, 1, 56)] {
            let r = lemma1_campaign(&proj(p, k, n)).unwrap();
            assert_eq!(r.triples, triples);
            assert!(r.passed, "{:?}", r.disagreements);
        }
    }

    #[test]
    fn h_set_transport_on_fano() {
        let g = proj(2, 1, 2);
        let table = HSetTable::new(&g);
        for a in 0..7 {
            for b in (0..7).filter(|&b| b != a) {
                for c in (0..7).filter(|&c| c != a && c != b) {
                    assert_eq!(table.get(a, b, c), h_set(&g, a, b, c).unwrap());
                    for x in g.group.elements() {
                        assert_eq!(
                            x.image_of_set(table.get(a, b, c)),
                            table.get(x.apply(a), x.apply(b), x.apply(c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn normalizer_on_small_lines() {
        let limits = Limits::default();
        let r = automorphism_group(&proj(5, 1, 1), Search::Brute, &limits, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.orders.normalizer, Some(120));
        assert_eq!(r.orders.conjugates, Some(6));
        let r = automorphism_group(&proj(2, 2, 1), Search::Brute, &limits, 2).unwrap();
        assert!(r.passed);
        assert_eq!((r.orders.structural, r.orders.normalizer), (60, Some(120)));
    }

    #[test]
    fn sampled_strategy_is_seed_deterministic() {
        let limits = Limits::default();
        let g = proj(2, 1, 2);
        let a = automorphism_group(
            &g,
            Search::Sampled {
                samples: 500,
                seed: 3,
            },
            &limits,
            1,
        )
        .unwrap();
        let b = automorphism_group(
            &g,
            Search::Sampled {
                samples: 500,
                seed: 3,
            },
            &limits,
            4,
        )
        .unwrap();
        assert!(a.passed);
        assert_eq!(a.sampling, b.sampling);
        let s = a.sampling.unwrap();
        // |PGL₃(2)| / 7! = 1/30, so some samples land inside and all of those decompose
        assert!(s.normalizing > 0);
        assert_eq!(s.normalizing, s.decomposed);
        assert_eq!(s.samples - s.outside_claimed, s.normalizing);
    }

    #[test]
    fn affine_normalizer_cases() {
        let limits = Limits::default();
        let r = verify_theorem_affine(Field::new(2, 2).unwrap(), 1, &limits, 1).unwrap();
        assert!(r.passed && r.asserted);
        assert_eq!(
            (r.orders.structural, r.orders.normalizer, r.orders.claimed),
            (12, Some(24), 24)
        );
        let r = verify_theorem_affine(Field::new(5, 1).unwrap(), 1, &limits, 1).unwrap();
        assert_eq!(r.orders.normalizer, Some(20));
        let r = verify_theorem_affine(Field::new(2, 1).unwrap(), 2, &limits, 1).unwrap();
        assert!(!r.asserted && r.excluded_case.is_some() && r.ok());
    }

    #[test]
    fn conjugate_count_matches_scan() {
        let g = proj(5, 1, 1);
        assert_eq!(conjugate_count(&g.group), 6);
        let a = affine_geometry(Field::new(2, 2).unwrap(), 1, &Limits::default(), 1).unwrap();
        assert_eq!(conjugate_count(&a.group), 1);
    }
}
