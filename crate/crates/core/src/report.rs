//! Serializable campaign reports.
//!
//! Field names here are frozen; `schema/report.schema.json` documents them.

use serde::{Deserialize, Serialize};

use crate::field::FieldSpec;
use crate::group::GroupSummary;
use crate::perm::Permutation;
use crate::space::SpaceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeometryKind {
    Projective,
    Affine,
}

/// Which geometry a report talks about.
///
/// `group_convention` spells out both names of the structural group: the
/// matrix-size name `PGL(n+1, q)` and the geometric name `PGl_n` used for
/// the group acting on `P_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryInfo {
    pub label: String,
    pub kind: GeometryKind,
    pub space: SpaceSpec,
    pub field: FieldSpec,
    pub degree: usize,
    pub group: String,
    pub group_convention: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orders {
    /// |G| of the structural group.
    pub structural: usize,
    /// Order of the group the theorem names as the automorphism group.
    pub claimed: usize,
    /// Order of the computed normalizer (brute strategy only).
    pub normalizer: Option<usize>,
    /// Number of conjugates of G in the symmetric group (brute strategy only).
    pub conjugates: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub structural_in_normalizer: bool,
    pub claimed_in_normalizer: bool,
    pub normalizer_in_claimed: bool,
    /// `|conjugates| · |N| = m!`; `None` when no normalizer was computed.
    pub orbit_stabilizer: Option<bool>,
}

impl Flags {
    pub fn all(&self) -> bool {
        self.structural_in_normalizer
            && self.claimed_in_normalizer
            && self.normalizer_in_claimed
            && self.orbit_stabilizer.unwrap_or(true)
    }
}

/// A permutation exhibiting why a flag is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub flag: String,
    pub permutation: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub seed: u64,
    pub samples: usize,
    /// Samples lying outside the claimed group.
    pub outside_claimed: usize,
    /// Samples that normalize G.
    pub normalizing: usize,
    /// Normalizing samples that decompose as semilinear maps.
    pub decomposed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Brute,
    Sampled,
}

/// Outcome of comparing the normalizer of a structural group with the group
/// a theorem claims it to be.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub geometry: GeometryInfo,
    pub strategy: Strategy,
    pub orders: Orders,
    pub flags: Flags,
    pub sampling: Option<SampleSummary>,
    /// Set when the theorem's hypothesis excludes this instance; the flags
    /// are then informational only.
    pub excluded_case: Option<String>,
    pub asserted: bool,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub duration_ms: Option<u64>,
}

impl VerificationReport {
    /// True when every asserted flag holds (excluded cases always pass).
    pub fn ok(&self) -> bool {
        !self.asserted || self.passed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub field: FieldSpec,
    pub order: usize,
    pub automorphisms: Vec<u32>,
    pub addition: Vec<Vec<u32>>,
    pub multiplication: Vec<Vec<u32>>,
    pub inverses: Vec<Option<u32>>,
    pub frobenius: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub space: SpaceSpec,
    pub field: FieldSpec,
    pub points: Vec<Vec<u32>>,
    pub point_count: usize,
    pub line_count: Option<usize>,
    pub points_per_line: usize,
    pub affine_points: usize,
    pub points_at_infinity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub geometry: GeometryInfo,
    pub group: GroupSummary,
    pub duration_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub geometry: GeometryInfo,
    pub triples: usize,
    pub collinear: usize,
    pub agreements: usize,
    pub disagreements: Vec<[usize; 3]>,
    pub passed: bool,
    pub duration_ms: Option<u64>,
}

/// One field-automorphism extraction run over a set of permutations of P₁.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Report {
    pub geometry: GeometryInfo,
    pub checked: usize,
    pub frobenius_powers: usize,
    pub all_flags_true: usize,
    /// Whether any bijection of the line fails to normalize PGL.
    pub non_normalizer_exists: bool,
    pub non_normalizer: Option<Permutation>,
    pub non_normalizer_flags: Option<crate::staudt::Lemma2Flags>,
    pub passed: bool,
    pub duration_ms: Option<u64>,
}
