//! Evaluation of formulas under a configured logic.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::ast::{is_identifier, Formula, Literal};
use super::parser::{parse_literal, ParseError};
use crate::connectives::{
    n_conorm, n_norm, negate, priority_combine, Bound, IndeterminacyMode, PriorityOrder,
};
use crate::error::ConnectiveError;
use crate::symbolic::{AbsRel, Belnap, CustomLogic, Kleene};
use crate::tnorm::NormFamily;
use crate::value::{RefinedValue, Signature};

/// Connective class used for a neutrosophic evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Engine {
    Norm {
        family: NormFamily,
        mode: IndeterminacyMode,
    },
    Priority {
        and_order: PriorityOrder,
        or_order: PriorityOrder,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum LogicConfig {
    Boolean,
    Kleene,
    Belnap,
    Custom(CustomLogic),
    Neutrosophic { sig: Signature, engine: Engine },
}

impl LogicConfig {
    pub fn norm(sig: Signature, family: NormFamily, mode: IndeterminacyMode) -> Self {
        LogicConfig::Neutrosophic {
            sig,
            engine: Engine::Norm { family, mode },
        }
    }

    /// Priority engine using the preset chains for the given bounds.
    pub fn priority(sig: Signature, and_bound: Bound, or_bound: Bound) -> Self {
        LogicConfig::Neutrosophic {
            sig,
            engine: Engine::Priority {
                and_order: PriorityOrder::for_and(sig, and_bound),
                or_order: PriorityOrder::for_or(sig, or_bound),
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LogicConfig::Boolean => "boolean",
            LogicConfig::Kleene => "kleene",
            LogicConfig::Belnap => "belnap",
            LogicConfig::Custom(_) => "custom",
            LogicConfig::Neutrosophic { .. } => "neutrosophic",
        }
    }

    /// The value domain in truth-table order, or `None` for neutrosophic logics.
    pub fn domain(&self) -> Option<Vec<Value>> {
        match self {
            LogicConfig::Boolean => Some(vec![Value::Bool(true), Value::Bool(false)]),
            LogicConfig::Kleene => Some(Kleene::VALUES.into_iter().map(Value::Kleene).collect()),
            LogicConfig::Belnap => Some(Belnap::VALUES.into_iter().map(Value::Belnap).collect()),
            LogicConfig::Custom(logic) => Some(
                logic
                    .alphabet()
                    .symbols()
                    .iter()
                    .copied()
                    .map(Value::Symbol)
                    .collect(),
            ),
            LogicConfig::Neutrosophic { .. } => None,
        }
    }

    /// Interprets a literal as a value of this logic.
    pub fn resolve(&self, lit: &Literal) -> Result<Value, EvalError> {
        let mismatch = || EvalError::LiteralMismatch {
            literal: lit.to_string(),
            logic: self.name(),
        };
        match (self, lit) {
            (LogicConfig::Boolean, Literal::Bool(b)) => Ok(Value::Bool(*b)),
            (LogicConfig::Boolean, Literal::Symbol(s)) => match s.as_str() {
                "T" => Ok(Value::Bool(true)),
                "F" => Ok(Value::Bool(false)),
                _ => Err(mismatch()),
            },
            (LogicConfig::Kleene, Literal::Bool(b)) => Ok(Value::Kleene((*b).into())),
            (LogicConfig::Kleene, Literal::Symbol(s)) => Kleene::from_symbol(s)
                .map(Value::Kleene)
                .ok_or_else(mismatch),
            (LogicConfig::Belnap, Literal::Bool(b)) => Ok(Value::Belnap((*b).into())),
            (LogicConfig::Belnap, Literal::Symbol(s)) => Belnap::from_symbol(s)
                .map(Value::Belnap)
                .ok_or_else(mismatch),
            (LogicConfig::Custom(logic), Literal::Symbol(s)) => {
                let sym: AbsRel = s.parse().map_err(|_| mismatch())?;
                logic.alphabet().index_of(sym).ok_or_else(mismatch)?;
                Ok(Value::Symbol(sym))
            }
            (LogicConfig::Neutrosophic { sig, .. }, Literal::Bool(b)) => {
                Ok(Value::Refined(if *b {
                    RefinedValue::crisp_true(*sig)
                } else {
                    RefinedValue::crisp_false(*sig)
                }))
            }
            (LogicConfig::Neutrosophic { sig, .. }, Literal::Value(v)) => {
                if v.sig() != *sig {
                    return Err(EvalError::SignatureMismatch {
                        expected: *sig,
                        found: v.sig(),
                    });
                }
                Ok(Value::Refined(v.clone()))
            }
            _ => Err(mismatch()),
        }
    }
}

/// A truth value of any supported logic.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Bool(bool),
    Kleene(Kleene),
    Belnap(Belnap),
    Symbol(AbsRel),
    Refined(RefinedValue),
}

impl Value {
    /// Literal that resolves back to this value.
    pub fn to_literal(&self) -> Literal {
        match self {
            Value::Bool(b) => Literal::Bool(*b),
            Value::Kleene(k) => (*k).into(),
            Value::Belnap(b) => (*b).into(),
            Value::Symbol(s) => Literal::Symbol(s.name().to_string()),
            Value::Refined(v) => Literal::Value(v.clone()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),

    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch {
        expected: Signature,
        found: Signature,
    },

    #[error("negation needs p = s, signature is {0}")]
    UnsupportedNot(Signature),

    #[error("the priority engine requires scalar components")]
    IntervalUnsupported,

    #[error("literal `{literal}` is not a value of the {logic} logic")]
    LiteralMismatch {
        literal: String,
        logic: &'static str,
    },

    #[error("custom logic defines no `{0}` connective")]
    MissingConnective(&'static str),

    #[error("truth tables need a finite logic; neutrosophic values form an infinite domain")]
    InfiniteDomain,

    #[error("truth table with {rows} rows is too large")]
    TableTooLarge { rows: f64 },

    #[error(transparent)]
    Connective(ConnectiveError),
}

impl From<ConnectiveError> for EvalError {
    fn from(e: ConnectiveError) -> Self {
        match e {
            ConnectiveError::SignatureMismatch { left, right } => EvalError::SignatureMismatch {
                expected: left,
                found: right,
            },
            ConnectiveError::IntervalUnsupported => EvalError::IntervalUnsupported,
            ConnectiveError::AsymmetricSignature(sig) => EvalError::UnsupportedNot(sig),
            other => EvalError::Connective(other),
        }
    }
}

/// Variable bindings. Values are kept as literals and resolved against the
/// logic at evaluation time.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Assignment {
    bindings: BTreeMap<String, Literal>,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct AssignmentError {
    pub line: usize,
    pub message: String,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, value: impl Into<Literal>) -> &mut Self {
        self.bindings.insert(name.into(), value.into());
        self
    }

    pub fn with(mut self, name: impl Into<String>, value: impl Into<Literal>) -> Self {
        self.bind(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Literal> {
        self.bindings.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Literal)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Parses the assignment file format: one `name = value` per line, where
    /// value is `true`, `false`, `#SYM` or `NV(p,r,s)[...]`. Lines starting
    /// with `#` are comments, blank lines are skipped.
    pub fn parse(text: &str) -> Result<Assignment, AssignmentError> {
        let mut out = Assignment::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| AssignmentError { line, message };
            let (name, value) = trimmed
                .split_once('=')
                .ok_or_else(|| err("expected `name = value`".into()))?;
            let name = name.trim();
            if !is_identifier(name) {
                return Err(err(format!("`{name}` is not a valid variable name")));
            }
            let lit = parse_literal(value).map_err(|e: ParseError| err(e.to_string()))?;
            if out.bindings.insert(name.to_string(), lit).is_some() {
                return Err(err(format!("`{name}` is bound twice")));
            }
        }
        Ok(out)
    }
}

impl std::str::FromStr for Assignment {
    type Err = AssignmentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Assignment::parse(s)
    }
}

/// Evaluates `f` bottom-up with `env` supplying the free variables.
pub fn evaluate(f: &Formula, env: &Assignment, cfg: &LogicConfig) -> Result<Value, EvalError> {
    if let LogicConfig::Neutrosophic { sig, .. } = cfg {
        if sig.p() != sig.s() && f.uses_not() {
            return Err(EvalError::UnsupportedNot(*sig));
        }
    }
    let mut resolved = BTreeMap::new();
    for name in f.variables() {
        let lit = env
            .get(&name)
            .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
        resolved.insert(name, cfg.resolve(lit)?);
    }
    eval_with(f, &resolved, cfg)
}

pub(crate) fn eval_with(
    f: &Formula,
    vars: &BTreeMap<String, Value>,
    cfg: &LogicConfig,
) -> Result<Value, EvalError> {
    match f {
        Formula::Var(name) => vars
            .get(name)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(name.clone())),
        Formula::Const(lit) => cfg.resolve(lit),
        Formula::Not(a) => not(eval_with(a, vars, cfg)?, cfg),
        Formula::And(a, b) => binary(
            Op::And,
            eval_with(a, vars, cfg)?,
            eval_with(b, vars, cfg)?,
            cfg,
        ),
        Formula::Or(a, b) => binary(
            Op::Or,
            eval_with(a, vars, cfg)?,
            eval_with(b, vars, cfg)?,
            cfg,
        ),
    }
}

#[derive(Clone, Copy)]
enum Op {
    And,
    Or,
}

fn not(x: Value, cfg: &LogicConfig) -> Result<Value, EvalError> {
    match (x, cfg) {
        (Value::Bool(b), _) => Ok(Value::Bool(!b)),
        (Value::Kleene(k), _) => Ok(Value::Kleene(k.not())),
        (Value::Belnap(b), _) => Ok(Value::Belnap(b.not())),
        (Value::Symbol(s), LogicConfig::Custom(logic)) => logic
            .apply_unary("not", s)
            .map(Value::Symbol)
            .ok_or(EvalError::MissingConnective("not")),
        (Value::Refined(v), _) => Ok(Value::Refined(negate(&v)?)),
        (Value::Symbol(s), _) => Err(EvalError::LiteralMismatch {
            literal: format!("#{s}"),
            logic: cfg.name(),
        }),
    }
}

fn binary(op: Op, x: Value, y: Value, cfg: &LogicConfig) -> Result<Value, EvalError> {
    let out = match (x, y) {
        (Value::Bool(a), Value::Bool(b)) => Value::Bool(match op {
            Op::And => a && b,
            Op::Or => a || b,
        }),
        (Value::Kleene(a), Value::Kleene(b)) => Value::Kleene(match op {
            Op::And => a.and(b),
            Op::Or => a.or(b),
        }),
        (Value::Belnap(a), Value::Belnap(b)) => Value::Belnap(match op {
            Op::And => a.and(b),
            Op::Or => a.or(b),
        }),
        (Value::Symbol(a), Value::Symbol(b)) => {
            let LogicConfig::Custom(logic) = cfg else {
                unreachable!("symbols only resolve under a custom logic")
            };
            let name = match op {
                Op::And => "and",
                Op::Or => "or",
            };
            Value::Symbol(
                logic
                    .apply_binary(name, a, b)
                    .ok_or(EvalError::MissingConnective(name))?,
            )
        }
        (Value::Refined(a), Value::Refined(b)) => {
            let LogicConfig::Neutrosophic { engine, .. } = cfg else {
                unreachable!("refined values only resolve under a neutrosophic logic")
            };
            Value::Refined(refined_binary(op, &a, &b, engine)?)
        }
        _ => unreachable!("operands resolved under one logic share a value type"),
    };
    Ok(out)
}

fn refined_binary(
    op: Op,
    a: &RefinedValue,
    b: &RefinedValue,
    engine: &Engine,
) -> Result<RefinedValue, EvalError> {
    let out = match (engine, op) {
        (Engine::Norm { family, mode }, Op::And) => n_norm(a, b, *family, *mode)?,
        (Engine::Norm { family, mode }, Op::Or) => n_conorm(a, b, *family, *mode)?,
        (Engine::Priority { and_order, .. }, Op::And) => {
            priority_combine(a, b, and_order)?.to_value()?
        }
        (Engine::Priority { or_order, .. }, Op::Or) => {
            priority_combine(a, b, or_order)?.to_value()?
        }
    };
    Ok(out)
}
