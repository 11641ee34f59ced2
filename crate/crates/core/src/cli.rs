//! Command-line front end. Each subcommand runs one campaign, prints a short
//! summary, and writes the structured report to `--out` when given.
//!
//! Exit codes: 0 when every asserted flag holds, 1 when one fails, 2 on
//! invalid input or an exceeded cap.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::PermGroup;
use crate::klein::{
    affine_geometry, affine_info, automorphism_group, lemma1_campaign, lemma2_campaign,
    projective_geometry, projective_info, verify_theorem_affine, Search,
};
use crate::report::{FieldReport, GroupReport, SpaceReport};
use crate::s6::build_outer_automorphism;
use crate::space::ProjSpace;
use crate::staudt::{pgammal_group, Incidence};
use crate::suite::{run_suite, SuiteOptions};
use crate::Limits;

#[derive(Debug, Parser)]
#[command(
    name = "kleingeo",
    version,
    about = "Automorphisms of Klein geometries over finite fields"
)]
pub struct Cli {
    /// Write the structured report (JSON) to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Keep wall-clock durations in the written report (breaks byte stability).
    #[arg(long, global = true)]
    timings: bool,
    /// Cap on the order of any group built by closure.
    #[arg(long, global = true, default_value_t = Limits::default().group_order)]
    max_order: usize,
    /// Cap on the number of permutations a symmetric-group scan may visit.
    #[arg(long, global = true, default_value_t = Limits::default().factorial)]
    max_factorial: u128,
    /// Worker threads; results are identical for every value.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for the sampled strategy.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupKind {
    Pgl,
    Pgammal,
    Aff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Brute,
    Sampled,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Addition, multiplication and Frobenius tables of GF(p^k).
    Field { p: u64, k: u32 },
    /// Point census of P_n(GF(p^k)).
    Space { p: u64, k: u32, n: usize },
    /// Order and generators of PGL, PGammaL or the affine group.
    Group {
        p: u64,
        k: u32,
        n: usize,
        #[arg(value_enum)]
        kind: GroupKind,
    },
    /// H-set collinearity against the rank test on every triple.
    Lemma1 { p: u64, k: u32, n: usize },
    /// Field automorphism extraction over PGammaL(2, q).
    Lemma2 { p: u64, k: u32 },
    /// Normalizer of PGL versus PGammaL.
    Theorem1 {
        p: u64,
        k: u32,
        n: usize,
        #[arg(long, value_enum, default_value = "brute")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Normalizer of the affine group versus restricted PGammaL.
    Affine { p: u64, k: u32, n: usize },
    /// The outer automorphism of S6 from PGL(2, 5).
    S6Outer,
    /// Every acceptance criterion.
    All {
        /// Use 10^4 samples instead of 10^5 for the sampled run.
        #[arg(long)]
        quick: bool,
    },
}

/// Something a subcommand produced: a report, whether it passed, and a
/// human summary.
struct Outcome {
    json: String,
    passed: bool,
    summary: String,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

/// Drops every `duration_ms` member so that reports are reproducible.
fn strip_timings(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("duration_ms");
            map.values_mut().for_each(strip_timings);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

fn finish<T: Serialize>(report: &T, passed: bool, summary: String, timings: bool) -> Outcome {
    let mut value = serde_json::to_value(report).expect("reports serialize");
    if !timings {
        strip_timings(&mut value);
    }
    Outcome {
        json: to_json(&value),
        passed,
        summary,
    }
}

fn field_report(field: &Field) -> Result<FieldReport> {
    let table = |op: &dyn Fn(crate::Elem, crate::Elem) -> crate::Elem| -> Vec<Vec<u32>> {
        field
            .elements()
            .map(|a| field.elements().map(|b| op(a, b).0).collect())
            .collect()
    };
    Ok(FieldReport {
        field: field.spec(),
        order: field.order(),
        automorphisms: field.automorphisms()?.iter().map(|a| a.exponent).collect(),
        addition: table(&|a, b| field.add(a, b)),
        multiplication: table(&|a, b| field.mul(a, b)),
        inverses: field
            .elements()
            .map(|a| field.inv(a).ok().map(|x| x.0))
            .collect(),
        frobenius: field
            .automorphisms()?
            .iter()
            .map(|aut| aut.table(field).iter().map(|x| x.0).collect())
            .collect(),
    })
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let limits = Limits {
        group_order: cli.max_order,
        factorial: cli.max_factorial,
        ..Limits::default()
    };
    let parts = cli.jobs.max(1);
    let t = cli.timings;
    let out = match &cli.command {
        Command::Field { p, k } => {
            let field = Field::with_cap(*p, *k, limits.field_order)?;
            let rep = field_report(&field)?;
            let summary = format!(
                "GF({}^{}) of order {} with modulus {:?} (low degree first); {} automorphism(s)",
                p,
                k,
                rep.order,
                rep.field.modulus,
                rep.automorphisms.len()
            );
            finish(&rep, true, summary, t)
        }
        Command::Space { p, k, n } => {
            let space =
                ProjSpace::with_limits(Field::with_cap(*p, *k, limits.field_order)?, *n, &limits)?;
            let line_count = (*n >= 1).then(|| Incidence::new(&space).lines().len());
            let (affine_points, at_infinity) = match space.affine_patch() {
                Ok(patch) => (patch.len(), patch.infinity().len()),
                Err(_) => (0, 0),
            };
            let rep = SpaceReport {
                space: space.spec(),
                field: space.field().spec(),
                points: (0..space.len())
                    .map(|i| space.coords(i).iter().map(|e| e.0).collect())
                    .collect(),
                point_count: space.len(),
                line_count,
                points_per_line: space.field().order() + 1,
                affine_points,
                points_at_infinity: at_infinity,
            };
            let summary = format!(
                "P_{}(F_{}): {} points, {} lines, {} affine + {} at infinity",
                n,
                space.field().order(),
                rep.point_count,
                line_count.map_or("-".into(), |l| l.to_string()),
                affine_points,
                at_infinity
            );
            finish(&rep, true, summary, t)
        }
        Command::Group { p, k, n, kind } => {
            let field = Field::with_cap(*p, *k, limits.field_order)?;
            let start = std::time::Instant::now();
            let (info, group): (_, PermGroup) = match kind {
                GroupKind::Pgl => {
                    let g = projective_geometry(field, *n, &limits, parts)?;
                    (g.info(), g.group)
                }
                GroupKind::Pgammal => {
                    let space = ProjSpace::with_limits(field, *n, &limits)?;
                    let mut info = projective_info(&space);
                    info.group = format!("PGammaL({}, {})", n + 1, space.field().order());
                    (info, pgammal_group(&space, &limits, parts)?)
                }
                GroupKind::Aff => {
                    let g = affine_geometry(field, *n, &limits, parts)?;
                    let crate::klein::Points::Affine(patch) = &g.points else {
                        unreachable!()
                    };
                    (affine_info(patch), g.group)
                }
            };
            let rep = GroupReport {
                geometry: info,
                group: group.summary(),
                duration_ms: Some(start.elapsed().as_millis() as u64),
            };
            let summary = format!(
                "{} on {} points: order {}, {} generators\n  {}",
                rep.geometry.group,
                rep.group.degree,
                rep.group.order,
                rep.group.generators.len(),
                rep.geometry.group_convention
            );
            finish(&rep, true, summary, t)
        }
        Command::Lemma1 { p, k, n } => {
            let geom = projective_geometry(
                Field::with_cap(*p, *k, limits.field_order)?,
                *n,
                &limits,
                parts,
            )?;
            let rep = lemma1_campaign(&geom)?;
            let summary = format!(
                "{}: {} triples checked, agreement {}/{} with the rank test, {} collinear",
                rep.geometry.label, rep.triples, rep.agreements, rep.triples, rep.collinear
            );
            finish(&rep, rep.passed, summary, t)
        }
        Command::Lemma2 { p, k } => {
            let rep =
                lemma2_campaign(Field::with_cap(*p, *k, limits.field_order)?, &limits, parts)?;
            let summary = format!(
                "{}: {} elements of PGammaL, {} give a Frobenius power, {} pass all four checks; \
                 non-normalizing witness: {}",
                rep.geometry.label,
                rep.checked,
                rep.frobenius_powers,
                rep.all_flags_true,
                match (&rep.non_normalizer, &rep.non_normalizer_flags) {
                    (Some(g), Some(f)) => format!("{g} with flags {f:?}"),
                    _ => "none exists".into(),
                }
            );
            finish(&rep, rep.passed, summary, t)
        }
        Command::Theorem1 {
            p,
            k,
            n,
            strategy,
            samples,
        } => {
            let geom = projective_geometry(
                Field::with_cap(*p, *k, limits.field_order)?,
                *n,
                &limits,
                parts,
            )?;
            let search = match strategy {
                StrategyArg::Brute => Search::Brute,
                StrategyArg::Sampled => Search::Sampled {
                    samples: *samples,
                    seed: cli.seed,
                },
            };
            let rep = automorphism_group(&geom, search, &limits, parts)?;
            let summary = format!(
                "{}: |PGL| = {}, |PGammaL| = {}, |N| = {}; {}",
                rep.geometry.label,
                rep.orders.structural,
                rep.orders.claimed,
                match (rep.orders.normalizer, &rep.sampling) {
                    (Some(x), _) => x.to_string(),
                    (None, Some(s)) => format!(
                        "not enumerated ({} samples, {} outside PGammaL, {} normalizing)",
                        s.samples, s.outside_claimed, s.normalizing
                    ),
                    (None, None) => "-".into(),
                },
                if rep.passed { "pass" } else { "FAIL" }
            );
            finish(&rep, rep.ok(), summary, t)
        }
        Command::Affine { p, k, n } => {
            let rep = verify_theorem_affine(
                Field::with_cap(*p, *k, limits.field_order)?,
                *n,
                &limits,
                parts,
            )?;
            let verdict = match (&rep.excluded_case, rep.passed) {
                (Some(reason), _) => reason.clone(),
                (None, true) => "pass".into(),
                (None, false) => "FAIL".into(),
            };
            let summary = format!(
                "{}: |Aff| = {}, restricted |PGammaL| = {}, |N| = {:?}; {}",
                rep.geometry.label,
                rep.orders.structural,
                rep.orders.claimed,
                rep.orders.normalizer,
                verdict
            );
            finish(&rep, rep.ok(), summary, t)
        }
        Command::S6Outer => {
            let rep = build_outer_automorphism(parts)?;
            let summary = format!(
                "F: S6 -> S6 from {} conjugates of PGL(2,5); flags {:?}; F((0 1)) = {} of cycle type {:?}",
                rep.conjugates.len(),
                rep.flags,
                rep.witness.transposition_image,
                rep.witness.transposition_image_cycle_type
            );
            finish(&rep, rep.flags.all(), summary, t)
        }
        Command::All { quick } => {
            let rep = run_suite(&SuiteOptions {
                quick: *quick,
                parts,
                seed: cli.seed,
            })?;
            let mut lines = Vec::new();
            for c in &rep.criteria {
                lines.push(format!(
                    "[{}] criterion {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.id,
                    c.title
                ));
                for check in &c.checks {
                    lines.push(format!(
                        "    {} {}: {}",
                        if check.passed { "ok  " } else { "FAIL" },
                        check.name,
                        check.detail
                    ));
                }
            }
            finish(&rep, rep.passed, lines.join("\n"), t)
        }
    };
    Ok(out)
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    run_with(std::env::args_os())
}

pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if cli.jobs > 1 {
        // ignore the error if a pool already exists (repeated in-process runs)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match execute(&cli) {
        Ok(outcome) => {
            println!("{}", outcome.summary);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &outcome.json) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e @ Error::Internal(_)) => {
            eprintln!("error: {e}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
