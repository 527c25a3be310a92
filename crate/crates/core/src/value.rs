//! Refined truth values: signatures, component slots, the sum constraint and
//! normalization.
//!
//! A [`RefinedValue`] of signature `(p, r, s)` carries `p` truth components,
//! `r` indeterminacy components and `s` falsity components, each a
//! [`UnitInterval`]. Since each component is at most 1, the total mass never
//! exceeds `n = p + r + s`; only components declared dependent through
//! [`DependencyGroups`] are bounded jointly by 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ValueError;
use crate::interval::{UnitInterval, UnitSum};

/// Slack allowed when comparing a group sum against its bound of 1.
pub const GROUP_BOUND_TOLERANCE: f64 = 1e-12;

/// The refinement shape `(p, r, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    r: usize,
    s: usize,
}

impl Signature {
    /// The simple `(T, I, F)` triad.
    pub const TRIAD: Signature = Signature { p: 1, r: 1, s: 1 };
    /// Truth, unknown, contradiction, falsity.
    pub const FOUR_NUMERICAL: Signature = Signature { p: 1, r: 2, s: 1 };
    /// Indeterminacy split into unknown, contradiction and ignorance.
    pub const FIVE_NUMERICAL: Signature = Signature { p: 1, r: 3, s: 1 };
    /// Absolute/relative truth and falsity around three indeterminacies.
    pub const SEVEN_NUMERICAL: Signature = Signature { p: 2, r: 3, s: 2 };

    pub fn new(p: usize, r: usize, s: usize) -> Result<Self, ValueError> {
        if p == 0 || r == 0 || s == 0 {
            return Err(ValueError::BadSignature { p, r, s });
        }
        Ok(Signature { p, r, s })
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn s(&self) -> usize {
        self.s
    }

    /// Total number of component slots.
    #[inline]
    pub fn n(&self) -> usize {
        self.p + self.r + self.s
    }

    pub fn block_len(&self, kind: SlotKind) -> usize {
        match kind {
            SlotKind::Truth => self.p,
            SlotKind::Indeterminacy => self.r,
            SlotKind::Falsity => self.s,
        }
    }

    pub fn contains(&self, slot: Slot) -> bool {
        slot.index >= 1 && slot.index <= self.block_len(slot.kind)
    }

    /// Position of `slot` in the flat order `T1..Tp, I1..Ir, F1..Fs`.
    pub fn flat_index(&self, slot: Slot) -> Result<usize, ValueError> {
        if !self.contains(slot) {
            return Err(ValueError::SlotOutOfRange { slot, sig: *self });
        }
        let base = match slot.kind {
            SlotKind::Truth => 0,
            SlotKind::Indeterminacy => self.p,
            SlotKind::Falsity => self.p + self.r,
        };
        Ok(base + slot.index - 1)
    }

    /// Inverse of [`Signature::flat_index`].
    pub fn slot_at(&self, flat: usize) -> Option<Slot> {
        if flat < self.p {
            Some(Slot::truth(flat + 1))
        } else if flat < self.p + self.r {
            Some(Slot::indeterminacy(flat - self.p + 1))
        } else if flat < self.n() {
            Some(Slot::falsity(flat - self.p - self.r + 1))
        } else {
            None
        }
    }

    /// All slots in flat order.
    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        (0..self.n()).map(|k| self.slot_at(k).expect("in range"))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.r, self.s)
    }
}

impl FromStr for Signature {
    type Err = ValueError;

    /// Accepts `p,r,s`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let bad = || ValueError::Syntax {
            column: 1,
            message: format!("signature must be `p,r,s`, got `{s}`"),
        };
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut counts = [0usize; 3];
        for (c, raw) in counts.iter_mut().zip(parts) {
            *c = raw.parse().map_err(|_| bad())?;
        }
        Signature::new(counts[0], counts[1], counts[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotKind {
    Truth,
    Indeterminacy,
    Falsity,
}

impl SlotKind {
    pub fn letter(self) -> char {
        match self {
            SlotKind::Truth => 'T',
            SlotKind::Indeterminacy => 'I',
            SlotKind::Falsity => 'F',
        }
    }
}

/// One named component position, e.g. `T2` or `I3`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub kind: SlotKind,
    pub index: usize,
}

impl Slot {
    pub const fn truth(index: usize) -> Self {
        Slot {
            kind: SlotKind::Truth,
            index,
        }
    }

    pub const fn indeterminacy(index: usize) -> Self {
        Slot {
            kind: SlotKind::Indeterminacy,
            index,
        }
    }

    pub const fn falsity(index: usize) -> Self {
        Slot {
            kind: SlotKind::Falsity,
            index,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

impl FromStr for Slot {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ValueError::Syntax {
            column: 1,
            message: format!("bad slot name `{s}`, expected e.g. `T1`, `I2`, `F1`"),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('T' | 't') => SlotKind::Truth,
            Some('I' | 'i') => SlotKind::Indeterminacy,
            Some('F' | 'f') => SlotKind::Falsity,
            _ => return Err(bad()),
        };
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Slot { kind, index })
    }
}

/// A refined neutrosophic truth value `(T1..Tp, I1..Ir, F1..Fs)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinedValue {
    sig: Signature,
    t: Vec<UnitInterval>,
    i: Vec<UnitInterval>,
    f: Vec<UnitInterval>,
}

impl RefinedValue {
    /// Validates block lengths against `sig`.
    pub fn new(
        sig: Signature,
        t: Vec<UnitInterval>,
        i: Vec<UnitInterval>,
        f: Vec<UnitInterval>,
    ) -> Result<Self, ValueError> {
        for (block, expected, found) in [
            ('T', sig.p, t.len()),
            ('I', sig.r, i.len()),
            ('F', sig.s, f.len()),
        ] {
            if expected != found {
                return Err(ValueError::LengthMismatch {
                    sig,
                    block,
                    expected,
                    found,
                });
            }
        }
        Ok(RefinedValue { sig, t, i, f })
    }

    /// Builds a value from crisp components.
    pub fn from_scalars(
        sig: Signature,
        t: &[f64],
        i: &[f64],
        f: &[f64],
    ) -> Result<Self, ValueError> {
        let lift = |xs: &[f64]| -> Result<Vec<UnitInterval>, ValueError> {
            xs.iter().map(|&x| UnitInterval::scalar(x)).collect()
        };
        Self::new(sig, lift(t)?, lift(i)?, lift(f)?)
    }

    /// A crisp `(T, I, F)` triad.
    pub fn triad(t: f64, i: f64, f: f64) -> Result<Self, ValueError> {
        Self::from_scalars(Signature::TRIAD, &[t], &[i], &[f])
    }

    /// Classical truth: every `Tj = 1`, every `Ik = Fl = 0`.
    pub fn crisp_true(sig: Signature) -> Self {
        RefinedValue {
            sig,
            t: vec![UnitInterval::ONE; sig.p],
            i: vec![UnitInterval::ZERO; sig.r],
            f: vec![UnitInterval::ZERO; sig.s],
        }
    }

    /// Classical falsity: every `Fl = 1`, every `Tj = Ik = 0`.
    pub fn crisp_false(sig: Signature) -> Self {
        RefinedValue {
            sig,
            t: vec![UnitInterval::ZERO; sig.p],
            i: vec![UnitInterval::ZERO; sig.r],
            f: vec![UnitInterval::ONE; sig.s],
        }
    }

    /// Assembles a value from a flat component list whose length is `sig.n()`.
    pub(crate) fn from_flat(sig: Signature, flat: Vec<UnitInterval>) -> Self {
        debug_assert_eq!(flat.len(), sig.n());
        let mut t = flat;
        let mut i = t.split_off(sig.p);
        let f = i.split_off(sig.r);
        RefinedValue { sig, t, i, f }
    }

    #[inline]
    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn truth(&self) -> &[UnitInterval] {
        &self.t
    }

    pub fn indeterminacy(&self) -> &[UnitInterval] {
        &self.i
    }

    pub fn falsity(&self) -> &[UnitInterval] {
        &self.f
    }

    pub fn block(&self, kind: SlotKind) -> &[UnitInterval] {
        match kind {
            SlotKind::Truth => &self.t,
            SlotKind::Indeterminacy => &self.i,
            SlotKind::Falsity => &self.f,
        }
    }

    pub fn get(&self, slot: Slot) -> Option<UnitInterval> {
        self.block(slot.kind)
            .get(slot.index.checked_sub(1)?)
            .copied()
    }

    /// Components in flat order `T1..Tp, I1..Ir, F1..Fs`.
    pub fn components(&self) -> impl Iterator<Item = UnitInterval> + '_ {
        self.t.iter().chain(&self.i).chain(&self.f).copied()
    }

    pub fn is_scalar(&self) -> bool {
        self.components().all(|c| c.is_scalar())
    }

    /// Crisp components in flat order, or `None` if any component is a proper interval.
    pub fn scalars(&self) -> Option<Vec<f64>> {
        self.components().map(|c| c.as_scalar()).collect()
    }

    /// Endpoint-wise sum of all `n` components.
    pub fn total_sum(&self) -> UnitSum {
        self.components()
            .fold(UnitSum { lo: 0.0, hi: 0.0 }, |acc, c| UnitSum {
                lo: acc.lo + c.lo(),
                hi: acc.hi + c.hi(),
            })
    }

    /// Checks the global sum bound and the joint bound of each dependency group.
    pub fn check_constraint(
        &self,
        deps: &DependencyGroups,
    ) -> Result<ConstraintReport, ValueError> {
        deps.validate(self.sig)?;
        let sum = self.total_sum();
        let bound = self.sig.n();
        let groups = deps
            .groups()
            .iter()
            .map(|group| {
                let sum_hi: f64 = group
                    .iter()
                    .map(|&slot| self.get(slot).expect("validated slot").hi())
                    .sum();
                GroupCheck {
                    slots: group.iter().copied().collect(),
                    sum_hi,
                    pass: sum_hi <= 1.0 + GROUP_BOUND_TOLERANCE,
                }
            })
            .collect();
        Ok(ConstraintReport {
            sum,
            bound,
            global_pass: sum.lo >= 0.0 && sum.hi <= bound as f64 + GROUP_BOUND_TOLERANCE,
            groups,
            interval_valued: !self.is_scalar(),
        })
    }

    /// Rescales every component so that the total mass becomes `target`.
    ///
    /// The scale factor is `midpoint(total_sum) / target`, applied to both
    /// endpoints of each component, so proportions and interval order survive.
    pub fn normalize(&self, target: f64) -> Result<RefinedValue, ValueError> {
        if !(target.is_finite() && target > 0.0) {
            return Err(ValueError::InvalidTarget(target));
        }
        let mass = self.total_sum().midpoint();
        if mass <= 0.0 {
            return Err(ValueError::ZeroMass);
        }
        let scale = target / mass;
        let flat = self
            .components()
            .map(|c| {
                let (lo, hi) = (c.lo() * scale, c.hi() * scale);
                UnitInterval::new(lo, hi)
                    .map_err(|_| ValueError::NormalizedOutOfRange { value: hi })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RefinedValue::from_flat(self.sig, flat))
    }
}

impl fmt::Display for RefinedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NV({},{},{})[", self.sig.p, self.sig.r, self.sig.s)?;
        for (b, block) in [&self.t, &self.i, &self.f].into_iter().enumerate() {
            if b > 0 {
                f.write_str(" | ")?;
            }
            for (k, c) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
        }
        f.write_str("]")
    }
}

impl FromStr for RefinedValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::text::parse_value(s)
    }
}

/// Sets of mutually dependent component slots. Slots outside every group are
/// independent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DependencyGroups {
    groups: Vec<BTreeSet<Slot>>,
}

impl DependencyGroups {
    pub fn none() -> Self {
        Self::default()
    }

    /// Rejects empty groups and groups that share a slot.
    pub fn new(groups: Vec<Vec<Slot>>) -> Result<Self, ValueError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(groups.len());
        for group in groups {
            if group.is_empty() {
                return Err(ValueError::InvalidGroups("empty group".into()));
            }
            let mut set = BTreeSet::new();
            for slot in group {
                if !seen.insert(slot) {
                    return Err(ValueError::InvalidGroups(format!(
                        "slot {slot} appears twice"
                    )));
                }
                set.insert(slot);
            }
            out.push(set);
        }
        Ok(DependencyGroups { groups: out })
    }

    pub fn groups(&self) -> &[BTreeSet<Slot>] {
        &self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn validate(&self, sig: Signature) -> Result<(), ValueError> {
        for slot in self.groups.iter().flatten() {
            if !sig.contains(*slot) {
                return Err(ValueError::InvalidGroups(format!(
                    "slot {slot} is out of range for signature {sig}"
                )));
            }
        }
        Ok(())
    }
}

impl FromStr for DependencyGroups {
    type Err = ValueError;

    /// Parses `T2,I3` or several groups separated by `;`, e.g. `T2,I3;T1,F1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let groups = s
            .split(';')
            .filter(|g| !g.trim().is_empty())
            .map(|g| {
                g.split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<Slot>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        DependencyGroups::new(groups)
    }
}

/// The joint bound of one dependency group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupCheck {
    pub slots: Vec<Slot>,
    /// Sum of the upper endpoints of the group's components.
    pub sum_hi: f64,
    pub pass: bool,
}

/// Outcome of [`RefinedValue::check_constraint`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintReport {
    pub sum: UnitSum,
    pub bound: usize,
    pub global_pass: bool,
    pub groups: Vec<GroupCheck>,
    /// Set when some component is a proper interval; group sums then use
    /// upper endpoints, which is a conservative reading.
    pub interval_valued: bool,
}

impl ConstraintReport {
    pub fn all_pass(&self) -> bool {
        self.global_pass && self.groups.iter().all(|g| g.pass)
    }
}

impl fmt::Display for ConstraintReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::text::format_number;
        let verdict = |pass: bool| if pass { "pass" } else { "FAIL" };
        writeln!(
            f,
            "total sum {} {} {} (n = {}): {}",
            self.sum,
            if self.global_pass { "<=" } else { ">" },
            self.bound,
            self.bound,
            verdict(self.global_pass)
        )?;
        for g in &self.groups {
            let names: Vec<String> = g.slots.iter().map(Slot::to_string).collect();
            writeln!(
                f,
                "group {} sum {} {} 1: {}",
                names.join("+"),
                format_number(g.sum_hi),
                if g.pass { "<=" } else { ">" },
                verdict(g.pass)
            )?;
        }
        if self.interval_valued && !self.groups.is_empty() {
            writeln!(
                f,
                "note: group sums use upper endpoints of interval components"
            )?;
        }
        Ok(())
    }
}
