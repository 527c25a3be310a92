//! Propositional formulas over `~`, `&` and `|`, evaluated under any of the
//! supported logics.

mod ast;
mod eval;
mod parser;
mod table;

pub use ast::{and, constant, is_identifier, not, or, var, Formula, Literal, KNOWN_SYMBOLS};
pub use eval::{evaluate, Assignment, AssignmentError, Engine, EvalError, LogicConfig, Value};
pub use parser::{parse, parse_literal, ParseError};
pub use table::{truth_table, TruthTable, MAX_TABLE_ROWS};
