//! Exhaustive enumeration at small orders, extremal rankings and the claim harness.

mod enumerate;
mod ranking;
mod sweep;
mod theorems;

pub use enumerate::{enumerate_scd, enumerate_scd_masks, MAX_ENUM_N};
pub use ranking::{extremal_ranking, Direction, Metric, RankEntry, Ranking, GROUPING_TOLERANCE};
pub use sweep::{ClassInfo, Sweep};
pub use theorems::{
    random_strong_digraph, verify_theorem, TheoremId, TheoremReport, Verdict, VerifyParams,
    MAX_FAMILY_N,
};
