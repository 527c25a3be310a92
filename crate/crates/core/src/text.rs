//! Canonical text form of refined values: `NV(p,r,s)[t1,...,tp | i1,...,ir | f1,...,fs]`.
//!
//! A component is a decimal scalar (`0.35`) or an interval (`0.2..0.4`).
//! Whitespace is insignificant. Numbers print with at most 9 significant
//! digits and trailing zeros trimmed, so any value whose components carry at
//! most 9 decimal digits survives a print/parse cycle unchanged.

use crate::error::ValueError;
use crate::interval::UnitInterval;
use crate::value::{RefinedValue, Signature};

const SIGNIFICANT_DIGITS: usize = 9;

/// Formats a finite number as a plain decimal with at most 9 significant digits.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let mut digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }

    let point = exp + 1;
    let mut out = String::new();
    if x < 0.0 {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', point as usize - digits.len()));
    } else {
        let (int, frac) = digits.split_at(point as usize);
        out.push_str(int);
        out.push('.');
        out.push_str(frac);
    }
    out
}

/// Parses a full `NV(...)[...]` value; trailing input other than whitespace is an error.
pub fn parse_value(text: &str) -> Result<RefinedValue, ValueError> {
    let (value, used) = scan_value(text)?;
    let rest = &text[used..];
    if let Some(off) = rest.find(|c: char| !c.is_whitespace()) {
        return Err(syntax(text, used + off, "unexpected trailing input"));
    }
    Ok(value)
}

/// Scans one `NV(...)[...]` value from the start of `text` (leading whitespace
/// allowed) and returns it with the number of bytes consumed.
pub fn scan_value(text: &str) -> Result<(RefinedValue, usize), ValueError> {
    let mut cur = Cursor { text, pos: 0 };
    cur.skip_ws();
    cur.expect_str("NV")?;
    cur.skip_ws();
    cur.expect_char('(')?;
    let header_start = cur.pos;
    let close = cur
        .find_from(')')
        .ok_or_else(|| syntax(text, header_start, "missing `)` after signature"))?;
    let sig = parse_signature(text, header_start, &text[header_start..close])?;
    cur.pos = close + 1;
    cur.skip_ws();
    cur.expect_char('[')?;
    let body_start = cur.pos;
    let end = cur
        .find_from(']')
        .ok_or_else(|| syntax(text, body_start, "missing `]`"))?;
    let body = &text[body_start..end];

    let mut blocks = Vec::with_capacity(3);
    let mut offset = body_start;
    for part in body.split('|') {
        blocks.push((offset, part));
        offset += part.len() + 1;
    }
    if blocks.len() != 3 {
        return Err(syntax(
            text,
            body_start,
            &format!("expected 3 blocks separated by `|`, found {}", blocks.len()),
        ));
    }
    let mut parsed = Vec::with_capacity(3);
    for (start, block) in blocks {
        parsed.push(parse_block(text, start, block)?);
    }
    let f = parsed.pop().unwrap();
    let i = parsed.pop().unwrap();
    let t = parsed.pop().unwrap();
    let value = RefinedValue::new(sig, t, i, f)?;
    Ok((value, end + 1))
}

/// Renders a value in canonical text form.
pub fn print_value(v: &RefinedValue) -> String {
    v.to_string()
}

fn parse_signature(text: &str, start: usize, header: &str) -> Result<Signature, ValueError> {
    let nums: Vec<&str> = header.split(',').collect();
    if nums.len() != 3 {
        return Err(syntax(text, start, "signature must be `p,r,s`"));
    }
    let mut counts = [0usize; 3];
    for (slot, raw) in counts.iter_mut().zip(&nums) {
        *slot = raw.trim().parse().map_err(|_| {
            syntax(
                text,
                start,
                &format!("bad signature count `{}`", raw.trim()),
            )
        })?;
    }
    Signature::new(counts[0], counts[1], counts[2])
}

fn parse_block(text: &str, start: usize, block: &str) -> Result<Vec<UnitInterval>, ValueError> {
    let mut items: Vec<(usize, &str)> = Vec::new();
    let mut offset = start;
    for item in block.split(',') {
        items.push((offset, item));
        offset += item.len() + 1;
    }
    // A single trailing comma is tolerated: `[1,|1|0]`.
    if items.len() > 1 && items.last().is_some_and(|(_, s)| s.trim().is_empty()) {
        items.pop();
    }
    items
        .into_iter()
        .map(|(pos, item)| parse_component(text, pos, item))
        .collect()
}

fn parse_component(text: &str, pos: usize, item: &str) -> Result<UnitInterval, ValueError> {
    let trimmed = item.trim();
    let pos = pos + (item.len() - item.trim_start().len());
    if trimmed.is_empty() {
        return Err(syntax(text, pos, "empty component"));
    }
    let component = match trimmed.split_once("..") {
        Some((lo, hi)) => UnitInterval::new(number(text, pos, lo)?, number(text, pos, hi)?),
        None => UnitInterval::scalar(number(text, pos, trimmed)?),
    };
    component
}

fn number(text: &str, pos: usize, raw: &str) -> Result<f64, ValueError> {
    let raw = raw.trim();
    let ok = !raw.is_empty()
        && raw
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    match raw.parse::<f64>() {
        Ok(x) if ok && x.is_finite() => Ok(x),
        _ => Err(syntax(text, pos, &format!("bad number `{raw}`"))),
    }
}

fn syntax(text: &str, byte_pos: usize, message: &str) -> ValueError {
    let column = text[..byte_pos.min(text.len())].chars().count() + 1;
    ValueError::Syntax {
        column,
        message: message.to_string(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ValueError> {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(syntax(self.text, self.pos, &format!("expected `{s}`")))
        }
    }

    fn expect_char(&mut self, c: char) -> Result<(), ValueError> {
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(syntax(self.text, self.pos, &format!("expected `{c}`")))
        }
    }

    fn find_from(&self, c: char) -> Option<usize> {
        self.text[self.pos..].find(c).map(|i| i + self.pos)
    }
}
