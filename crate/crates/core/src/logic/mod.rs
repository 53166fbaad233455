//! Contexts, their Boolean blocks, pasting, and the truth-valuation engine.

mod admissibility;
mod block;
mod context;
mod truth;

pub use admissibility::{bivaluation_on, check_admissibility, Admissibility};
pub use block::{
    build_block, locate_pair, paste, BlockLattice, ContextCollection, Location, PastedLattice,
    MAX_CONTEXT_MEMBERS,
};
pub use context::{
    build_context, conjunction, invariant_check, ConjunctionMode, Context, Proposition,
};
pub use truth::{
    evaluate_counterfactual, evaluate_counterfactual_pasted, evaluate_counterfactual_unpasted,
    evaluate_factual, Evaluation, Mode, Rule, TruthValue, Valuation, OVERLAP_WARNING,
};
