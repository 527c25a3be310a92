//! A many-valued logic engine.
//!
//! Truth values range from Boolean through Kleene and Belnap up to n-valued
//! refined neutrosophic tuples `(T1..Tp, I1..Ir, F1..Fs)` whose components are
//! subintervals of `[0, 1]`. Neutrosophic values combine either slot-wise
//! through t-norm/t-conorm pairs or through priority products. Formulas in a
//! small DSL can be evaluated under any configured logic.

pub mod connectives;
pub mod error;
pub mod formula;
pub mod interval;
pub mod symbolic;
pub mod text;
pub mod tnorm;
pub mod value;

pub use connectives::{
    n_conorm, n_norm, negate, priority_and, priority_combine, priority_or, project_fuzzy,
    project_intuitionistic, Bound, IndeterminacyMode, PriorityOrder, PriorityProduct,
};
pub use error::{ConnectiveError, SymbolicError, ValueError};
pub use formula::{
    evaluate, parse, truth_table, Assignment, Engine, EvalError, Formula, LogicConfig, Value,
};
pub use interval::{UnitInterval, UnitSum};
pub use symbolic::{AbsRel, Belnap, CustomLogic, Kleene, SymbolAlphabet};
pub use tnorm::{complement, NormFamily};
pub use value::{ConstraintReport, DependencyGroups, RefinedValue, Signature, Slot, SlotKind};
