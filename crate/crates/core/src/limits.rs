use serde::{Deserialize, Serialize};

/// Size guards for every exhaustive construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest admissible field order q = p^k.
    pub field_order: u64,
    /// Largest admissible number of projective points.
    pub points: u64,
    /// Largest group order produced by closure.
    pub group_order: usize,
    /// Largest number of permutations a symmetric-group scan may visit.
    pub factorial: u128,
    /// Largest number of matrices enumerated when building PGL or PΓL.
    pub matrices: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            field_order: 64,
            points: 1000,
            group_order: 1_000_000,
            factorial: 4_000_000,
            matrices: 10_000_000,
        }
    }
}
