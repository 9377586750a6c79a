//! Hurwitz equivalence machinery for braid-group factorizations.
//!
//! The crate decides equality of braid words through their action on the
//! free group, enumerates Hurwitz orbits of factorizations with canonical
//! hashing, rewrites positive words by single relation applications, and
//! reduces frames of `B_3` to the standard frame by a descent on
//! conjugator length. The end product is an explicit, independently
//! replayable move sequence connecting any two frame factorizations of
//! `Δ_3²`.

pub mod action;
pub mod frames;
pub mod hurwitz;
pub mod reduction;
pub mod rewrite;
pub mod word;

pub use action::{act, act_letter, braids_equal, canonical_key, ActionImage, FreeLetter, FreeWord};
pub use frames::{delta_patterns, delta_squared, Frame, FrameError, HalfTwist};
pub use hurwitz::{
    apply_move, apply_sequence, find_path, orbit_bfs, Factorization, FactorizationKey,
    HurwitzError, HurwitzMove, MoveSequence, NotFoundReason, OrbitReport, PathSearch,
};
pub use reduction::{
    connect_factorizations, reduce_step, reduce_to_standard, Budgets, FrameReduction,
    ReductionError, ReductionStep, StepOutcome, TheoremCertificate,
};
pub use rewrite::{
    apply_relation_move, find_relation_path, neighbors, relation_path_to_hurwitz, PositiveWord,
    RelationKind, RelationMove, RelationPath, RewriteError,
};
pub use word::{free_reduce, BraidWord, Letter, StrandCount, WordError};
