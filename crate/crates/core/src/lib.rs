//! Klein geometries over finite fields, materialized as permutation groups.
//!
//! A Klein geometry is a pair `(X, G)` of a set and a group of its
//! bijections; its automorphisms are the normalizer of `G` in the symmetric
//! group on `X`. This crate builds the projective geometries
//! `(P_n(F_q), PGL)` and affine geometries `(A_n(F_q), AGL)` as explicit
//! permutation groups and checks by exhaustive computation that:
//!
//! * three points are collinear exactly when their H-sets agree ([`klein::lemma1_collinear`]);
//! * the normalizer of PGL is the group PΓL of Staudt projectivities
//!   ([`klein::automorphism_group`]);
//! * a permutation normalizing PGL on the projective line carries a field
//!   automorphism that can be read off point by point ([`staudt::extract_field_aut`]);
//! * the affine analogue holds away from F_2 ([`klein::verify_theorem_affine`]);
//! * conjugating the six conjugates of PGL₂(F₅) yields an outer
//!   automorphism of S₆ ([`s6::build_outer_automorphism`]).

pub mod cli;
pub mod error;
pub mod field;
pub mod group;
pub mod klein;
mod limits;
pub mod linalg;
pub mod perm;
pub mod report;
pub mod s6;
pub mod space;
pub mod staudt;
pub mod suite;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldAut};
pub use group::PermGroup;
pub use limits::Limits;
pub use perm::Permutation;
pub use space::{AffinePatch, ProjSpace};
