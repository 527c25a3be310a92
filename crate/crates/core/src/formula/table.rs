use std::collections::BTreeMap;
use std::fmt;

use super::ast::Formula;
use super::eval::{eval_with, EvalError, LogicConfig, Value};

/// Upper bound on the number of rows a truth table may have.
pub const MAX_TABLE_ROWS: usize = 1 << 20;

/// All assignments of a finite logic's values to a formula's variables, with
/// the formula's value for each.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthTable {
    pub formula: String,
    pub variables: Vec<String>,
    pub rows: Vec<(Vec<Value>, Value)>,
}

/// Enumerates every assignment over the free variables in lexicographic
/// variable order. The first variable varies slowest; each variable runs
/// through the logic's values in declaration order.
pub fn truth_table(f: &Formula, cfg: &LogicConfig) -> Result<TruthTable, EvalError> {
    let domain = cfg.domain().ok_or(EvalError::InfiniteDomain)?;
    let variables: Vec<String> = f.variables().into_iter().collect();
    let rows_needed = (domain.len() as f64).powi(variables.len() as i32);
    if rows_needed > MAX_TABLE_ROWS as f64 {
        return Err(EvalError::TableTooLarge { rows: rows_needed });
    }

    let mut rows = Vec::with_capacity(rows_needed as usize);
    let mut digits = vec![0usize; variables.len()];
    loop {
        let row: Vec<Value> = digits.iter().map(|&d| domain[d].clone()).collect();
        let env: BTreeMap<String, Value> =
            variables.iter().cloned().zip(row.iter().cloned()).collect();
        let result = eval_with(f, &env, cfg)?;
        rows.push((row, result));

        // odometer increment, last variable fastest
        let mut k = digits.len();
        loop {
            if k == 0 {
                return Ok(TruthTable {
                    formula: f.to_string(),
                    variables,
                    rows,
                });
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < domain.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|(inputs, out)| {
                inputs
                    .iter()
                    .chain(std::iter::once(out))
                    .map(Value::to_string)
                    .collect()
            })
            .collect();
        let headers: Vec<&str> = self
            .variables
            .iter()
            .map(String::as_str)
            .chain(std::iter::once(self.formula.as_str()))
            .collect();
        let widths: Vec<usize> = (0..headers.len())
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].len())
                    .chain(std::iter::once(headers[c].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let write_row = |f: &mut fmt::Formatter<'_>, row: &[&str]| -> fmt::Result {
            let last = row.len() - 1;
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c == last {
                    if last > 0 {
                        line.push_str("| ");
                    }
                    line.push_str(cell);
                } else {
                    line.push_str(&format!("{cell:<w$} ", w = widths[c]));
                }
            }
            writeln!(f, "{}", line.trim_end())
        };

        write_row(f, &headers)?;
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        let rule_refs: Vec<&str> = rule.iter().map(String::as_str).collect();
        write_row(f, &rule_refs)?;
        for row in &cells {
            let refs: Vec<&str> = row.iter().map(String::as_str).collect();
            write_row(f, &refs)?;
        }
        Ok(())
    }
}
