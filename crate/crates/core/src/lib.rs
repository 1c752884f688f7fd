//! Simple branched coverings of the disk, described by monodromy sequences of
//! transpositions, and the action of the braid group on them.
//!
//! Sheets are numbered from 1. Permutations compose left to right:
//! `(k)(s t) = ((k)s)t`.

pub mod braid;
pub mod cosets;
pub mod covering;
pub mod error;
pub mod hurwitz;
pub mod lift;
pub mod orbit;
pub mod perm;
pub mod restrict;

pub use braid::BraidWord;
pub use cosets::{
    default_max_cosets, explore_interval_generators, todd_coxeter, verify_disk_generators,
    CosetTable, GeneratorReport, IntervalExploration, Presentation,
};
pub use covering::{
    all_sequences, all_transpositions, canonical_target, Component, ComponentSignature,
    ComponentSurface, MonodromySequence, SurfaceInvariants,
};
pub use error::{Error, Result};
pub use hurwitz::{
    act, canonicalize, elementary_move, CanonicalizationResult, Direction, Move, MoveWord,
};
pub use lift::{
    curve_monodromy, disk_liftable_generators, interval_braid, interval_type, is_liftable,
    is_regular_curve, reference_alpha_monodromy, system_restriction, systems_liftable_equivalent,
    CurveRef, IntervalRef,
};
pub use orbit::{
    classify_all, default_cap, hurwitz_orbit, schreier_generators, sequence_count_bound,
    stabilizer_index, CoveringClass, OrbitTable,
};
pub use perm::{CycleType, Permutation, Transposition};
pub use restrict::{
    restrict, restricted_total_monodromy, restriction_signature, Base, RestrictionSpec,
};
