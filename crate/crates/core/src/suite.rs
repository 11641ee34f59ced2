//! The full verification suite, one entry per acceptance criterion.
//!
//! Every expected order and count is pinned here; a criterion passes only on
//! exact equality.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{Field, FieldAut};
use crate::klein::{
    automorphism_group, lemma1_campaign, lemma2_campaign, projective_geometry,
    verify_theorem_affine, HSetTable, Search,
};
use crate::linalg::Matrix;
use crate::s6::build_outer_automorphism;
use crate::space::ProjSpace;
use crate::staudt::{collineations, decompose_staudt, pgl_group, projectivize, SemilinearMap};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: String,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub duration_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub quick: bool,
    pub criteria: Vec<CriterionOutcome>,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Shrink the sampled run to 10⁴ samples.
    pub quick: bool,
    pub parts: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            quick: false,
            parts: 1,
            seed: 0,
        }
    }
}

struct Recorder {
    id: u32,
    title: &'static str,
    checks: Vec<Check>,
    start: Instant,
}

impl Recorder {
    fn new(id: u32, title: &'static str) -> Recorder {
        Recorder {
            id,
            title,
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn finish(self) -> CriterionOutcome {
        CriterionOutcome {
            id: self.id,
            title: self.title.into(),
            passed: self.checks.iter().all(|c| c.passed),
            checks: self.checks,
            duration_ms: Some(self.start.elapsed().as_millis() as u64),
        }
    }
}

fn field(p: u64, k: u32) -> Result<Field> {
    Field::new(p, k)
}

pub fn s6_application(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(1, "outer automorphism of S6");
    let report = build_outer_automorphism(opts.parts)?;
    let w = &report.witness;
    let f = &report.flags;
    r.check(
        "six points",
        w.points == 6,
        format!("|P_1(F_5)| = {}", w.points),
    );
    r.check(
        "PGL order",
        w.pgl_order == 120,
        format!("|PGL(2,5)| = {}", w.pgl_order),
    );
    r.check(
        "index",
        w.index == 6,
        format!("[S6 : PGL(2,5)] = {}", w.index),
    );
    r.check(
        "conjugates",
        w.conjugate_count == 6,
        format!("{} conjugates", w.conjugate_count),
    );
    r.check(
        "homomorphism",
        f.is_homomorphism,
        "F(st) = F(s)F(t) on all 720^2 pairs",
    );
    r.check("bijective", f.is_bijective, "table is injective");
    r.check(
        "F(PGL) = Stab(H1)",
        f.fixes_stabilizer_image && w.image_of_pgl_order == 120,
        format!("|F(PGL)| = {}", w.image_of_pgl_order),
    );
    r.check(
        "outer (fixed points)",
        f.outer_by_fixed_points,
        format!("PGL orbit of point 0 = {:?}", w.pgl_orbit_of_point_0),
    );
    r.check(
        "outer (exhaustive)",
        f.outer_by_exhaustion,
        format!(
            "min disagreement with an inner automorphism = {}",
            w.min_inner_disagreement
        ),
    );
    Ok(r.finish())
}

pub fn projective_brute(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(2, "normalizer of PGL equals PGammaL (brute force)");
    let limits = Limits::default();
    let cases = [
        (5, 1, 1, 120, 120),
        (2, 2, 1, 60, 120),
        (7, 1, 1, 336, 336),
        (2, 1, 2, 168, 168),
        (2, 3, 1, 504, 1512),
        (3, 2, 1, 720, 1440),
    ];
    for (p, k, n, pgl, expected) in cases {
        let geom = projective_geometry(field(p, k)?, n, &limits, opts.parts)?;
        let rep = automorphism_group(&geom, Search::Brute, &limits, opts.parts)?;
        let ok = rep.passed
            && rep.orders.structural == pgl
            && rep.orders.normalizer == Some(expected)
            && rep.orders.claimed == expected;
        r.check(
            rep.geometry.label.clone(),
            ok,
            format!(
                "|N| = {:?}, |PGammaL| = {}, |PGL| = {}, conjugates = {:?}",
                rep.orders.normalizer,
                rep.orders.claimed,
                rep.orders.structural,
                rep.orders.conjugates
            ),
        );
    }
    Ok(r.finish())
}

pub fn projective_sampled(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(
        3,
        "PGammaL inside the normalizer of PGL(3,4), random probes outside",
    );
    let limits = Limits::default();
    let samples = if opts.quick { 10_000 } else { 100_000 };
    let geom = projective_geometry(field(2, 2)?, 2, &limits, opts.parts)?;
    let rep = automorphism_group(
        &geom,
        Search::Sampled {
            samples,
            seed: opts.seed,
        },
        &limits,
        opts.parts,
    )?;
    let s = rep.sampling.clone().unwrap();
    r.check(
        "PGammaL normalizes PGL",
        rep.flags.claimed_in_normalizer
            && rep.orders.claimed == 120_960
            && rep.orders.structural == 60_480,
        format!(
            "all {} elements of PGammaL(3,4) normalize PGL(3,4)",
            rep.orders.claimed
        ),
    );
    r.check(
        "random non-PGammaL permutations fail",
        s.outside_claimed == samples && s.normalizing == 0 && s.decomposed == 0,
        format!(
            "{} samples, {} outside PGammaL, {} normalizing, {} decomposed",
            s.samples, s.outside_claimed, s.normalizing, s.decomposed
        ),
    );
    Ok(r.finish())
}

pub fn collinearity(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(4, "H-set collinearity agrees with the rank test");
    let limits = Limits::default();
    for (p, k, n, triples, collinear) in [(2, 1, 2, 35, 7), (3, 1, 2, 286, 52), (5, 1, 1, 20, 20)] {
        let geom = projective_geometry(field(p, k)?, n, &limits, opts.parts)?;
        let rep = lemma1_campaign(&geom)?;
        r.check(
            rep.geometry.label.clone(),
            rep.passed
                && rep.triples == triples
                && rep.agreements == triples
                && rep.collinear == collinear,
            format!(
                "{}/{} agree, {} collinear, {} disagreements",
                rep.agreements,
                rep.triples,
                rep.collinear,
                rep.disagreements.len()
            ),
        );
    }
    Ok(r.finish())
}

pub fn field_automorphism(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(
        5,
        "field automorphism read off from normalizing permutations",
    );
    let limits = Limits::default();
    for (p, k, order) in [
        (2, 2, 120),
        (5, 1, 120),
        (7, 1, 336),
        (2, 3, 1512),
        (3, 2, 1440),
    ] {
        let rep = lemma2_campaign(field(p, k)?, &limits, opts.parts)?;
        // P_1(F_4) has 5 points and PGammaL(2,4) is all of S_5, so there is
        // no non-normalizing bijection to exhibit there.
        let negative = if rep.non_normalizer_exists {
            format!(
                "non-normalizer {:?} flags {:?}",
                rep.non_normalizer, rep.non_normalizer_flags
            )
        } else {
            "every bijection normalizes PGL (PGammaL is the full symmetric group)".into()
        };
        let vacuous_ok = rep.non_normalizer_exists
            || rep.checked == crate::perm::factorial(p.pow(k) as usize + 1) as usize;
        r.check(
            rep.geometry.label.clone(),
            rep.passed && rep.checked == order && vacuous_ok,
            format!(
                "{} elements, {} Frobenius powers, {} all-true; {}",
                rep.checked, rep.frobenius_powers, rep.all_flags_true, negative
            ),
        );
    }
    Ok(r.finish())
}

pub fn affine(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(
        6,
        "affine normalizer equals restricted Staudt projectivities",
    );
    let limits = Limits::default();
    for (p, k, n, structural, expected) in
        [(2, 2, 1, 12, 24), (3, 1, 2, 432, 432), (5, 1, 1, 20, 20)]
    {
        let rep = verify_theorem_affine(field(p, k)?, n, &limits, opts.parts)?;
        r.check(
            rep.geometry.label.clone(),
            rep.asserted
                && rep.passed
                && rep.orders.structural == structural
                && rep.orders.normalizer == Some(expected)
                && rep.orders.claimed == expected,
            format!(
                "|N| = {:?}, restricted |PGammaL| = {}, |Aff| = {}",
                rep.orders.normalizer, rep.orders.claimed, rep.orders.structural
            ),
        );
    }
    for n in [1, 2] {
        let rep = verify_theorem_affine(field(2, 1)?, n, &limits, opts.parts)?;
        r.check(
            format!("{} (excluded)", rep.geometry.label),
            !rep.asserted && rep.excluded_case.is_some(),
            format!(
                "reported only: |N| = {:?}, restricted |PGammaL| = {}, flags {:?}",
                rep.orders.normalizer, rep.orders.claimed, rep.flags
            ),
        );
    }
    Ok(r.finish())
}

pub fn artin(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(7, "collineations of the Fano plane are PGL(3,2)");
    let space = ProjSpace::new(field(2, 1)?, 2)?;
    let pgl = pgl_group(&space, &Limits::default(), opts.parts)?;
    let found = collineations(&space)?;
    r.check(
        "collineations = PGL(3,2)",
        found.len() == 168 && found == pgl.elements(),
        format!(
            "{} collineations, |PGL(3,2)| = {}",
            found.len(),
            pgl.order()
        ),
    );
    let mut decomposed = 0;
    for g in &found {
        decomposed += decompose_staudt(&space, g)?.is_some() as usize;
    }
    r.check(
        "every collineation is semilinear",
        decomposed == found.len(),
        format!("{decomposed}/{} decompose", found.len()),
    );
    Ok(r.finish())
}

fn homomorphism_law(space: &ProjSpace, pairs: Option<(usize, u64)>) -> Result<(usize, bool)> {
    let f = space.field();
    let dim = space.dim() + 1;
    let q = f.order();
    let total = (q as u128).pow((dim * dim) as u32);
    let auts = f.automorphisms()?;
    let check = |a: &SemilinearMap, b: &SemilinearMap| -> Result<bool> {
        let lhs = projectivize(space, &a.compose(f, b))?;
        Ok(lhs == projectivize(space, a)?.compose(&projectivize(space, b)?))
    };
    match pairs {
        None => {
            let maps: Vec<SemilinearMap> = (0..total)
                .map(|i| Matrix::from_index(dim, q, i))
                .filter(|m| m.is_invertible(f))
                .flat_map(|m| auts.iter().map(move |&h| SemilinearMap::new(m.clone(), h)))
                .collect();
            let mut ok = true;
            for a in &maps {
                for b in &maps {
                    ok &= check(a, b)?;
                }
            }
            Ok((maps.len() * maps.len(), ok))
        }
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let random = |rng: &mut ChaCha8Rng| loop {
                let m = Matrix::from_index(dim, q, rng.gen_range(0..total));
                if m.is_invertible(f) {
                    return SemilinearMap::new(m, FieldAut::new(rng.gen_range(0..f.degree())));
                }
            };
            let mut ok = true;
            for _ in 0..count {
                let (a, b) = (random(&mut rng), random(&mut rng));
                ok &= check(&a, &b)?;
            }
            Ok((count, ok))
        }
    }
}

pub fn structural(opts: &SuiteOptions) -> Result<CriterionOutcome> {
    let mut r = Recorder::new(8, "structural properties");
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let space = ProjSpace::new(field(p, k)?, 1)?;
        let (pairs, ok) = homomorphism_law(&space, None)?;
        r.check(
            format!(
                "projectivize homomorphism on P_1(F_{})",
                space.field().order()
            ),
            ok,
            format!("{pairs} pairs, exhaustive"),
        );
    }
    for (p, k, n) in [(3, 2, 1), (2, 3, 1), (7, 1, 1), (2, 2, 2)] {
        let space = ProjSpace::new(field(p, k)?, n)?;
        let (pairs, ok) = homomorphism_law(&space, Some((10_000, opts.seed)))?;
        r.check(
            format!(
                "projectivize homomorphism on P_{n}(F_{})",
                space.field().order()
            ),
            ok,
            format!("{pairs} random pairs"),
        );
    }

    let fano = projective_geometry(field(2, 1)?, 2, &Limits::default(), opts.parts)?;
    let table = HSetTable::new(&fano);
    let mut transported = 0usize;
    let mut ok = true;
    for g in fano.group.elements() {
        for a in 0..7 {
            for b in (0..7).filter(|&b| b != a) {
                for c in (0..7).filter(|&c| c != a && c != b) {
                    ok &= g.image_of_set(table.get(a, b, c))
                        == table.get(g.apply(a), g.apply(b), g.apply(c));
                    transported += 1;
                }
            }
        }
    }
    r.check(
        "H-set transport on P_2(F_2)",
        ok,
        format!("{transported} (g, triple) pairs"),
    );

    // orbit-stabilizer on every normalizer computed by the suite's brute runs
    let limits = Limits::default();
    let mut runs = Vec::new();
    for (p, k, n) in [
        (5, 1, 1),
        (2, 2, 1),
        (7, 1, 1),
        (2, 1, 2),
        (2, 3, 1),
        (3, 2, 1),
    ] {
        let geom = projective_geometry(field(p, k)?, n, &limits, opts.parts)?;
        runs.push(automorphism_group(
            &geom,
            Search::Brute,
            &limits,
            opts.parts,
        )?);
    }
    for (p, k, n) in [(2, 2, 1), (3, 1, 2), (5, 1, 1)] {
        runs.push(verify_theorem_affine(field(p, k)?, n, &limits, opts.parts)?);
    }
    for rep in &runs {
        r.check(
            format!("orbit-stabilizer on {}", rep.geometry.label),
            rep.flags.orbit_stabilizer == Some(true),
            format!(
                "{:?} conjugates x {:?} = {}!",
                rep.orders.conjugates, rep.orders.normalizer, rep.geometry.degree
            ),
        );
    }

    // byte stability: two fresh runs serialize identically once timings are dropped
    let render = || -> Result<String> {
        let geom = projective_geometry(field(2, 2)?, 1, &limits, opts.parts)?;
        let mut rep = automorphism_group(&geom, Search::Brute, &limits, opts.parts)?;
        rep.duration_ms = None;
        let mut outer = build_outer_automorphism(opts.parts)?;
        outer.duration_ms = None;
        Ok(serde_json::to_string_pretty(&rep).unwrap()
            + &serde_json::to_string_pretty(&outer).unwrap())
    };
    let (a, b) = (render()?, render()?);
    r.check(
        "report byte stability",
        a == b,
        format!("{} bytes, identical across two runs", a.len()),
    );
    Ok(r.finish())
}

/// Runs every criterion in order.
pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let criteria = vec![
        s6_application(opts)?,
        projective_brute(opts)?,
        projective_sampled(opts)?,
        collinearity(opts)?,
        field_automorphism(opts)?,
        affine(opts)?,
        artin(opts)?,
        structural(opts)?,
    ];
    Ok(SuiteReport {
        quick: opts.quick,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    })
}
