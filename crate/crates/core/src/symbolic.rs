//! Finite symbol-valued logics: Kleene, Belnap and absolute-relative alphabets.
//!
//! Belnap conjunction is the fixed 4x4 table below. Negation (swap T/F, fix
//! U and C) and disjunction (De Morgan dual of conjunction) are the standard
//! companions; they are derived here, not tabulated.
//!
//! ```text
//!  and | F  U  C  T
//!  ----+-----------
//!   F  | F  F  F  F
//!   U  | F  U  F  U
//!   C  | F  F  C  C
//!   T  | F  U  C  T
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::SymbolicError;

/// Kleene's strong three-valued logic over `{0, 1/2, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kleene {
    False,
    Unknown,
    True,
}

impl Kleene {
    /// Enumeration order used by truth tables.
    pub const VALUES: [Kleene; 3] = [Kleene::False, Kleene::Unknown, Kleene::True];

    pub fn numeric(self) -> f64 {
        match self {
            Kleene::False => 0.0,
            Kleene::Unknown => 0.5,
            Kleene::True => 1.0,
        }
    }

    fn from_numeric(x: f64) -> Kleene {
        if x == 0.0 {
            Kleene::False
        } else if x == 1.0 {
            Kleene::True
        } else {
            debug_assert_eq!(x, 0.5);
            Kleene::Unknown
        }
    }

    pub fn and(self, other: Kleene) -> Kleene {
        Kleene::from_numeric(self.numeric().min(other.numeric()))
    }

    pub fn or(self, other: Kleene) -> Kleene {
        Kleene::from_numeric(self.numeric().max(other.numeric()))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Kleene {
        Kleene::from_numeric(1.0 - self.numeric())
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Kleene::False => "F",
            Kleene::Unknown => "U",
            Kleene::True => "T",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Kleene> {
        match s {
            "F" => Some(Kleene::False),
            "U" => Some(Kleene::Unknown),
            "T" => Some(Kleene::True),
            _ => None,
        }
    }
}

impl From<bool> for Kleene {
    fn from(b: bool) -> Self {
        if b {
            Kleene::True
        } else {
            Kleene::False
        }
    }
}

/// Belnap's four-valued logic: true, false, unknown (no information) and
/// contradiction (both).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Belnap {
    False,
    Unknown,
    Contradiction,
    True,
}

// Indexed by `Belnap::index` on both axes.
const BELNAP_AND: [[Belnap; 4]; 4] = {
    use Belnap::{Contradiction as C, False as F, True as T, Unknown as U};
    [[F, F, F, F], [F, U, F, U], [F, F, C, C], [F, U, C, T]]
};

impl Belnap {
    /// Enumeration order used by truth tables, matching the conjunction table.
    pub const VALUES: [Belnap; 4] = [
        Belnap::False,
        Belnap::Unknown,
        Belnap::Contradiction,
        Belnap::True,
    ];

    fn index(self) -> usize {
        match self {
            Belnap::False => 0,
            Belnap::Unknown => 1,
            Belnap::Contradiction => 2,
            Belnap::True => 3,
        }
    }

    pub fn and(self, other: Belnap) -> Belnap {
        BELNAP_AND[self.index()][other.index()]
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Belnap {
        match self {
            Belnap::True => Belnap::False,
            Belnap::False => Belnap::True,
            v => v,
        }
    }

    pub fn or(self, other: Belnap) -> Belnap {
        self.not().and(other.not()).not()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Belnap::False => "F",
            Belnap::Unknown => "U",
            Belnap::Contradiction => "C",
            Belnap::True => "T",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Belnap> {
        match s {
            "F" => Some(Belnap::False),
            "U" => Some(Belnap::Unknown),
            "C" => Some(Belnap::Contradiction),
            "T" => Some(Belnap::True),
            _ => None,
        }
    }
}

impl From<bool> for Belnap {
    fn from(b: bool) -> Self {
        if b {
            Belnap::True
        } else {
            Belnap::False
        }
    }
}

/// Absolute / relative truth, indeterminacy and falsity symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AbsRel {
    /// Truth in all possible worlds.
    TA,
    /// Truth in at least one world but not in all.
    TR,
    IA,
    IR,
    /// Falsity in all possible worlds.
    FA,
    FR,
}

impl AbsRel {
    pub const ALL: [AbsRel; 6] = [
        AbsRel::TA,
        AbsRel::TR,
        AbsRel::IA,
        AbsRel::IR,
        AbsRel::FA,
        AbsRel::FR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AbsRel::TA => "TA",
            AbsRel::TR => "TR",
            AbsRel::IA => "IA",
            AbsRel::IR => "IR",
            AbsRel::FA => "FA",
            AbsRel::FR => "FR",
        }
    }
}

impl fmt::Display for AbsRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AbsRel {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AbsRel::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| SymbolicError::BadSymbol(s.to_string()))
    }
}

/// An ordered set of 2 to 6 absolute-relative symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolAlphabet {
    symbols: Vec<AbsRel>,
}

impl SymbolAlphabet {
    pub fn new(symbols: Vec<AbsRel>) -> Result<Self, SymbolicError> {
        for (k, sym) in symbols.iter().enumerate() {
            if symbols[..k].contains(sym) {
                return Err(SymbolicError::Duplicate(sym.to_string()));
            }
        }
        if !(2..=6).contains(&symbols.len()) {
            return Err(SymbolicError::BadSize(symbols.len()));
        }
        Ok(SymbolAlphabet { symbols })
    }

    /// Builds an alphabet from symbol names such as `["TA", "TR", "FA", "FR"]`.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, SymbolicError> {
        let symbols = names
            .iter()
            .map(|n| n.as_ref().parse())
            .collect::<Result<Vec<AbsRel>, _>>()?;
        Self::new(symbols)
    }

    pub fn symbols(&self) -> &[AbsRel] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, sym: AbsRel) -> Option<usize> {
        self.symbols.iter().position(|&s| s == sym)
    }
}

/// A complete connective table over an alphabet, stored as symbol indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectiveTable {
    Unary(Vec<usize>),
    /// Row-major, `table[x * len + y]`.
    Binary(Vec<usize>),
}

impl ConnectiveTable {
    pub fn arity(&self) -> usize {
        match self {
            ConnectiveTable::Unary(_) => 1,
            ConnectiveTable::Binary(_) => 2,
        }
    }
}

/// A symbol-valued logic with user-supplied connective tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomLogic {
    alphabet: SymbolAlphabet,
    ops: BTreeMap<String, ConnectiveTable>,
}

impl CustomLogic {
    pub fn alphabet(&self) -> &SymbolAlphabet {
        &self.alphabet
    }

    pub fn op(&self, name: &str) -> Option<&ConnectiveTable> {
        self.ops.get(name)
    }

    pub fn op_names(&self) -> impl Iterator<Item = &str> {
        self.ops.keys().map(String::as_str)
    }

    pub fn apply_unary(&self, name: &str, x: AbsRel) -> Option<AbsRel> {
        match self.ops.get(name)? {
            ConnectiveTable::Unary(t) => Some(self.alphabet.symbols[t[self.alphabet.index_of(x)?]]),
            ConnectiveTable::Binary(_) => None,
        }
    }

    pub fn apply_binary(&self, name: &str, x: AbsRel, y: AbsRel) -> Option<AbsRel> {
        match self.ops.get(name)? {
            ConnectiveTable::Binary(t) => {
                let n = self.alphabet.len();
                let k = self.alphabet.index_of(x)? * n + self.alphabet.index_of(y)?;
                Some(self.alphabet.symbols[t[k]])
            }
            ConnectiveTable::Unary(_) => None,
        }
    }

    /// Loads a logic from the table file format:
    ///
    /// ```text
    /// symbols: TA TR FA FR
    /// op and arity 2
    /// TA TA -> TA
    /// ...
    /// op not arity 1
    /// TA -> FA
    /// ...
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored. Every table must
    /// be complete and closed over the alphabet.
    pub fn parse(text: &str) -> Result<CustomLogic, SymbolicError> {
        let err = |line: usize, message: String| SymbolicError::Table { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing `symbols:` line".into()))?;
        let names = header
            .strip_prefix("symbols:")
            .ok_or_else(|| err(line_no, "first line must be `symbols: S1 S2 ...`".into()))?;
        let names: Vec<&str> = names.split_whitespace().collect();
        let alphabet =
            SymbolAlphabet::from_names(&names).map_err(|e| err(line_no, e.to_string()))?;
        let n = alphabet.len();

        let lookup = |line: usize, name: &str| -> Result<usize, SymbolicError> {
            let sym: AbsRel = name
                .parse()
                .map_err(|e: SymbolicError| err(line, e.to_string()))?;
            alphabet
                .index_of(sym)
                .ok_or_else(|| err(line, format!("symbol `{name}` is not in the alphabet")))
        };

        struct Pending {
            name: String,
            arity: usize,
            line: usize,
            cells: Vec<Option<usize>>,
        }
        let mut ops = BTreeMap::new();
        let mut current: Option<Pending> = None;

        let finish = |p: Pending,
                      ops: &mut BTreeMap<String, ConnectiveTable>|
         -> Result<(), SymbolicError> {
            if let Some(missing) = p.cells.iter().position(Option::is_none) {
                let args = if p.arity == 1 {
                    alphabet.symbols[missing].to_string()
                } else {
                    format!(
                        "{} {}",
                        alphabet.symbols[missing / n],
                        alphabet.symbols[missing % n]
                    )
                };
                return Err(err(
                    p.line,
                    format!("table for `{}` has no entry for `{args}`", p.name),
                ));
            }
            let cells: Vec<usize> = p.cells.into_iter().map(Option::unwrap).collect();
            let table = if p.arity == 1 {
                ConnectiveTable::Unary(cells)
            } else {
                ConnectiveTable::Binary(cells)
            };
            if ops.insert(p.name.clone(), table).is_some() {
                return Err(err(
                    p.line,
                    format!("connective `{}` defined twice", p.name),
                ));
            }
            Ok(())
        };

        for (line_no, line) in lines {
            if let Some(rest) = line.strip_prefix("op ") {
                if let Some(p) = current.take() {
                    finish(p, &mut ops)?;
                }
                let words: Vec<&str> = rest.split_whitespace().collect();
                let arity = match words.as_slice() {
                    [_, "arity", "1"] => 1,
                    [_, "arity", "2"] => 2,
                    _ => return Err(err(line_no, "expected `op <name> arity <1|2>`".into())),
                };
                current = Some(Pending {
                    name: words[0].to_string(),
                    arity,
                    line: line_no,
                    cells: vec![None; n.pow(arity as u32)],
                });
                continue;
            }
            let p = current
                .as_mut()
                .ok_or_else(|| err(line_no, "table entry before any `op` line".into()))?;
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| err(line_no, "expected `<args> -> <result>`".into()))?;
            let args: Vec<&str> = lhs.split_whitespace().collect();
            if args.len() != p.arity {
                return Err(err(
                    line_no,
                    format!(
                        "`{}` takes {} argument(s), entry has {}",
                        p.name,
                        p.arity,
                        args.len()
                    ),
                ));
            }
            let mut key = 0;
            for a in &args {
                key = key * n + lookup(line_no, a)?;
            }
            let result = lookup(line_no, rhs.trim())?;
            if p.cells[key].replace(result).is_some() {
                return Err(err(
                    line_no,
                    format!("duplicate entry for `{}`", lhs.trim()),
                ));
            }
        }
        if let Some(p) = current.take() {
            finish(p, &mut ops)?;
        }
        Ok(CustomLogic { alphabet, ops })
    }
}

impl FromStr for CustomLogic {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CustomLogic::parse(s)
    }
}
