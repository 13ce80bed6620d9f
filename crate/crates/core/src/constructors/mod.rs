//! Builders for the graph families and surgeries, with closed-form checks.

mod decorated;
mod family;
mod figures;
mod formulas;
mod graphspec;
mod surgery;

pub use decorated::{decorated_loop_enumerator, DecoratedLoops};
pub use family::FamilySpec;
pub use figures::{figure, FIGURES};
pub use formulas::{formula_sweep, proportional, validate_appendix, validate_doubling, validate_formula, FormulaReport, SWEEP_FAMILIES};
pub use graphspec::parse_graph_spec;
pub use surgery::{double, graft, permute_pumpkin_chain, replace_edges};
