//! Open-world belief functions.
//!
//! Mass assignments over the subsets of a finite frame, where the empty set
//! may carry mass (evidence pointing outside the frame) and the frame itself
//! may carry mass (suspended judgement). On top of that:
//!
//! * [`combine`]: Dempster's rule, Smets' conjunctive rule and PCR5, plus
//!   Bayesian conditioning for singleton bodies;
//! * [`measures`]: belief, plausibility, evidential entropy and conflict;
//! * [`imprecise`]: p-boxes and their interval-mass representation;
//! * [`frame`]: coarsening, refinement and hypertree tests.

pub mod bits;
pub mod combine;
pub mod error;
pub mod frame;
pub mod imprecise;
pub mod json;
pub mod mass;
pub mod measures;

pub use bits::BitSet;
pub use combine::{
    bayes_posterior, combine_all, dempster, parallel_reliability, pcr5, serial_reliability, smets, CombinationReport,
    Rule,
};
pub use error::{Error, Result};
pub use frame::{
    coarsen, graham_reduce, is_hypertree, refine, CoarseningMap, FocalSet, Frame, Hypergraph, RefinementMap,
};
pub use imprecise::{
    intervals_to_pbox, pbox_to_intervals, subadditivity_report, Interval, IntervalMassList, PBox, SingletonBounds,
    SubadditivityReport,
};
pub use mass::{weight_to_mass, BodyOfEvidence, WeightAssignment};
pub use measures::{
    belief, compare_hypotheses, conflict_level, entropy, plausibility, reframe_signal, Hypothesis, HypothesisSpace,
    Origin,
};
