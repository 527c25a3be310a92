use std::collections::BTreeSet;
use std::fmt;

use crate::symbolic::{Belnap, Kleene};
use crate::value::RefinedValue;

/// Symbol names accepted after the `#` sigil.
pub const KNOWN_SYMBOLS: [&str; 10] = ["T", "F", "U", "C", "TA", "TR", "IA", "IR", "FA", "FR"];

/// A constant appearing in a formula or an assignment file.
#[derive(Debug, Clone, PartialEq)]
pub enum Literal {
    Bool(bool),
    /// A `#`-prefixed symbol, stored without the sigil.
    Symbol(String),
    Value(RefinedValue),
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Bool(b) => write!(f, "{b}"),
            Literal::Symbol(s) => write!(f, "#{s}"),
            Literal::Value(v) => write!(f, "{v}"),
        }
    }
}

impl From<bool> for Literal {
    fn from(b: bool) -> Self {
        Literal::Bool(b)
    }
}

impl From<RefinedValue> for Literal {
    fn from(v: RefinedValue) -> Self {
        Literal::Value(v)
    }
}

impl From<Kleene> for Literal {
    fn from(k: Kleene) -> Self {
        Literal::Symbol(k.symbol().to_string())
    }
}

impl From<Belnap> for Literal {
    fn from(b: Belnap) -> Self {
        Literal::Symbol(b.symbol().to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    Var(String),
    Const(Literal),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

pub fn var(name: &str) -> Formula {
    Formula::Var(name.to_string())
}

pub fn not(a: Formula) -> Formula {
    Formula::Not(Box::new(a))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn constant(lit: impl Into<Literal>) -> Formula {
    Formula::Const(lit.into())
}

/// Whether `name` is a legal variable name.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(name, "true" | "false")
}

impl Formula {
    /// Free variables in lexicographic order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Const(_) => {}
            Formula::Not(a) => a.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn uses_not(&self) -> bool {
        match self {
            Formula::Var(_) | Formula::Const(_) => false,
            Formula::Not(_) => true,
            Formula::And(a, b) | Formula::Or(a, b) => a.uses_not() || b.uses_not(),
        }
    }

    // `|` binds loosest, then `&`, then `~`.
    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Not(_) => 3,
            Formula::Var(_) | Formula::Const(_) => 4,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Prints with the fewest parentheses that preserve the tree shape. Binary
/// operators associate left, so a right operand of the same operator is
/// parenthesized.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Const(lit) => write!(f, "{lit}"),
            Formula::Not(a) => {
                f.write_str("~")?;
                a.write_child(f, 3)
            }
            Formula::And(a, b) => {
                a.write_child(f, 2)?;
                f.write_str(" & ")?;
                b.write_child(f, 3)
            }
            Formula::Or(a, b) => {
                a.write_child(f, 1)?;
                f.write_str(" | ")?;
                b.write_child(f, 2)
            }
        }
    }
}
