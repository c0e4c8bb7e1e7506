//! Numerical semigroups containing `<a; b>` and sufficient criteria for a
//! Weierstrass semigroup to occur at most once on a smooth curve.

pub mod census;
pub mod cusp;
pub mod engine;
pub mod error;
pub mod params;
pub mod pencil;
pub mod semigroup;

pub use census::{
    brute_force_enumerate, census_classify, enumerate_containing, family_4_1, family_4_2,
    family_4_3, with_jobs, CensusRow, FamilyTag,
};
pub use cusp::{
    delta_closed, euclid_sequence, max_genus_with_cusp, CuspType, MultiplicitySequence,
};
pub use engine::{
    classify, classify_bounds, prop2_bound, CriterionOutcome, Fact, Mode, Rational, RuleId, Status,
    Verdict, VerdictKind,
};
pub use error::{Error, Result};
pub use params::{standing_hypotheses_check, HypothesesReport, TwoGenParams};
pub use pencil::{sharp_semigroup, trivial_new_nongaps, ws_of_q_full_genus, TrivialNewNonGaps};
pub use semigroup::NumericalSemigroup;
