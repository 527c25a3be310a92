//! Connectives over refined values.
//!
//! Two independent classes are provided:
//!
//! * slot-wise **n-norm / n-conorm** built from a [`NormFamily`]. The n-norm
//!   takes the t-norm of truth slots and the t-conorm of falsity slots, the
//!   n-conorm does the opposite. Indeterminacy slots follow the
//!   [`IndeterminacyMode`].
//! * **priority products**: every cross product `x[a] * y[b]` is credited to
//!   whichever of `a`, `b` ranks higher in a [`PriorityOrder`]. With the chain
//!   `T < I < F` on a triad this gives
//!   `(TxTy, TxIy + TyIx + IxIy, TxFy + TyFx + IxFy + IyFx + FxFy)`.
//!
//! Neither class normalizes its output; call [`RefinedValue::normalize`] when
//! needed.

use std::fmt;
use std::str::FromStr;

use crate::error::{ConnectiveError, ValueError};
use crate::interval::UnitInterval;
use crate::tnorm::NormFamily;
use crate::value::{RefinedValue, Signature, Slot, SlotKind};

/// Masses above 1 by no more than this are treated as rounding noise.
pub const MASS_TOLERANCE: f64 = 1e-12;

/// How indeterminacy slots combine inside an n-norm or n-conorm.
///
/// For the n-norm, `Pessimistic` uses the t-conorm and `Optimistic` the
/// t-norm. For the n-conorm the roles flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndeterminacyMode {
    Pessimistic,
    Optimistic,
}

impl IndeterminacyMode {
    pub fn opposite(self) -> Self {
        match self {
            IndeterminacyMode::Pessimistic => IndeterminacyMode::Optimistic,
            IndeterminacyMode::Optimistic => IndeterminacyMode::Pessimistic,
        }
    }
}

impl FromStr for IndeterminacyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pessimistic" => Ok(IndeterminacyMode::Pessimistic),
            "optimistic" => Ok(IndeterminacyMode::Optimistic),
            _ => Err(format!(
                "unknown mode `{s}` (expected pessimistic or optimistic)"
            )),
        }
    }
}

/// Lower (pessimistic) or upper (optimistic) priority chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Lower,
    Upper,
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lower" => Ok(Bound::Lower),
            "upper" => Ok(Bound::Upper),
            _ => Err(format!("unknown bound `{s}` (expected lower or upper)")),
        }
    }
}

fn same_sig(x: &RefinedValue, y: &RefinedValue) -> Result<Signature, ConnectiveError> {
    if x.sig() != y.sig() {
        return Err(ConnectiveError::SignatureMismatch {
            left: x.sig(),
            right: y.sig(),
        });
    }
    Ok(x.sig())
}

fn slotwise(
    x: &RefinedValue,
    y: &RefinedValue,
    truth: impl Fn(UnitInterval, UnitInterval) -> UnitInterval,
    indet: impl Fn(UnitInterval, UnitInterval) -> UnitInterval,
    falsity: impl Fn(UnitInterval, UnitInterval) -> UnitInterval,
) -> Result<RefinedValue, ConnectiveError> {
    let sig = same_sig(x, y)?;
    let zip = |a: &[UnitInterval],
               b: &[UnitInterval],
               op: &dyn Fn(UnitInterval, UnitInterval) -> UnitInterval| {
        a.iter().zip(b).map(|(&p, &q)| op(p, q)).collect::<Vec<_>>()
    };
    let t = zip(x.truth(), y.truth(), &truth);
    let i = zip(x.indeterminacy(), y.indeterminacy(), &indet);
    let f = zip(x.falsity(), y.falsity(), &falsity);
    Ok(RefinedValue::new(sig, t, i, f).expect("slot-wise result keeps the signature"))
}

/// Neutrosophic conjunction: `(t-norm(Tj), I-combine(Ik), t-conorm(Fl))`.
pub fn n_norm(
    x: &RefinedValue,
    y: &RefinedValue,
    fam: NormFamily,
    mode: IndeterminacyMode,
) -> Result<RefinedValue, ConnectiveError> {
    slotwise(
        x,
        y,
        |a, b| fam.t_norm(a, b),
        |a, b| match mode {
            IndeterminacyMode::Pessimistic => fam.t_conorm(a, b),
            IndeterminacyMode::Optimistic => fam.t_norm(a, b),
        },
        |a, b| fam.t_conorm(a, b),
    )
}

/// Neutrosophic disjunction: `(t-conorm(Tj), I-combine(Ik), t-norm(Fl))`.
pub fn n_conorm(
    x: &RefinedValue,
    y: &RefinedValue,
    fam: NormFamily,
    mode: IndeterminacyMode,
) -> Result<RefinedValue, ConnectiveError> {
    slotwise(
        x,
        y,
        |a, b| fam.t_conorm(a, b),
        |a, b| match mode {
            IndeterminacyMode::Pessimistic => fam.t_norm(a, b),
            IndeterminacyMode::Optimistic => fam.t_conorm(a, b),
        },
        |a, b| fam.t_norm(a, b),
    )
}

/// Swaps the truth and falsity blocks, reversing each (`Tj <-> F(s+1-j)`).
/// Indeterminacy is unchanged. Requires `p = s`.
pub fn negate(v: &RefinedValue) -> Result<RefinedValue, ConnectiveError> {
    let sig = v.sig();
    if sig.p() != sig.s() {
        return Err(ConnectiveError::AsymmetricSignature(sig));
    }
    let t = v.falsity().iter().rev().copied().collect();
    let f = v.truth().iter().rev().copied().collect();
    Ok(RefinedValue::new(sig, t, v.indeterminacy().to_vec(), f).expect("p = s"))
}

/// Forces every indeterminacy slot to 0. The flag reports whether any
/// indeterminacy mass was discarded.
pub fn project_fuzzy(v: &RefinedValue) -> (RefinedValue, bool) {
    let lossy = v.indeterminacy().iter().any(|c| c.hi() > 0.0);
    let sig = v.sig();
    let projected = RefinedValue::new(
        sig,
        v.truth().to_vec(),
        vec![UnitInterval::ZERO; sig.r()],
        v.falsity().to_vec(),
    )
    .expect("same signature");
    (projected, lossy)
}

/// Merges all indeterminacy slots into one by summation, clamped to 1. The
/// result has signature `(p, 1, s)`; the flag reports whether clamping
/// happened. Interval components are summed endpoint-wise.
pub fn project_intuitionistic(v: &RefinedValue) -> (RefinedValue, bool) {
    let sig = v.sig();
    let (lo, hi) = v
        .indeterminacy()
        .iter()
        .fold((0.0, 0.0), |(lo, hi), c| (lo + c.lo(), hi + c.hi()));
    let clamped = hi > 1.0 + MASS_TOLERANCE;
    let merged = UnitInterval::clamped(lo, hi);
    let target = Signature::new(sig.p(), 1, sig.s()).expect("p, s already valid");
    let projected = RefinedValue::new(
        target,
        v.truth().to_vec(),
        vec![merged],
        v.falsity().to_vec(),
    )
    .expect("block lengths match");
    (projected, clamped)
}

/// A total order on the slots of a signature, listed from lowest to highest
/// priority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriorityOrder {
    sig: Signature,
    order: Vec<Slot>,
    // rank[flat index] = position in `order`
    rank: Vec<usize>,
}

impl PriorityOrder {
    pub fn new(sig: Signature, order: Vec<Slot>) -> Result<Self, ConnectiveError> {
        if order.len() != sig.n() {
            return Err(ConnectiveError::InvalidOrder(format!(
                "expected {} slots for signature {sig}, got {}",
                sig.n(),
                order.len()
            )));
        }
        let mut rank = vec![usize::MAX; sig.n()];
        for (pos, &slot) in order.iter().enumerate() {
            let flat = sig.flat_index(slot).map_err(|_| {
                ConnectiveError::InvalidOrder(format!("slot {slot} not in signature {sig}"))
            })?;
            if rank[flat] != usize::MAX {
                return Err(ConnectiveError::InvalidOrder(format!(
                    "slot {slot} listed twice"
                )));
            }
            rank[flat] = pos;
        }
        Ok(PriorityOrder { sig, order, rank })
    }

    /// Parses a chain such as `T1<I1<F1`. A chain written with `>` is read
    /// from highest to lowest, e.g. `T1>I1>F1`.
    pub fn parse(sig: Signature, text: &str) -> Result<Self, ConnectiveError> {
        let (sep, descending) = match (text.contains('<'), text.contains('>')) {
            (true, true) => {
                return Err(ConnectiveError::InvalidOrder("mixes `<` and `>`".into()));
            }
            (false, true) => ('>', true),
            _ => ('<', false),
        };
        let mut slots = text
            .split(sep)
            .map(|s| {
                s.parse::<Slot>()
                    .map_err(|e: ValueError| ConnectiveError::InvalidOrder(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if descending {
            slots.reverse();
        }
        Self::new(sig, slots)
    }

    fn from_blocks(sig: Signature, blocks: [SlotKind; 3], ascending_within: bool) -> Self {
        let mut order = Vec::with_capacity(sig.n());
        for kind in blocks {
            let len = sig.block_len(kind);
            let indices: Box<dyn Iterator<Item = usize>> = if ascending_within {
                Box::new(1..=len)
            } else {
                Box::new((1..=len).rev())
            };
            order.extend(indices.map(|index| Slot { kind, index }));
        }
        Self::new(sig, order).expect("block chain is a permutation")
    }

    /// `T1 < ... < Tp < I1 < ... < Ir < F1 < ... < Fs`: the conjunctive chain.
    pub fn and_default(sig: Signature) -> Self {
        use SlotKind::*;
        Self::from_blocks(sig, [Truth, Indeterminacy, Falsity], true)
    }

    /// `T1 > ... > Tp > I1 > ... > Ir > F1 > ... > Fs`: the disjunctive chain.
    pub fn or_default(sig: Signature) -> Self {
        use SlotKind::*;
        Self::from_blocks(sig, [Falsity, Indeterminacy, Truth], false)
    }

    /// `I < T < F`: the optimistic conjunctive chain.
    pub fn and_upper(sig: Signature) -> Self {
        use SlotKind::*;
        Self::from_blocks(sig, [Indeterminacy, Truth, Falsity], true)
    }

    /// `T > F > I`: the pessimistic disjunctive chain.
    pub fn or_lower(sig: Signature) -> Self {
        use SlotKind::*;
        Self::from_blocks(sig, [Indeterminacy, Falsity, Truth], false)
    }

    pub fn for_and(sig: Signature, bound: Bound) -> Self {
        match bound {
            Bound::Lower => Self::and_default(sig),
            Bound::Upper => Self::and_upper(sig),
        }
    }

    pub fn for_or(sig: Signature, bound: Bound) -> Self {
        match bound {
            Bound::Lower => Self::or_lower(sig),
            Bound::Upper => Self::or_default(sig),
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Slots from lowest to highest priority.
    pub fn slots(&self) -> &[Slot] {
        &self.order
    }

    /// Priority rank of the slot at flat index `flat`; larger wins.
    pub fn rank_of_flat(&self, flat: usize) -> usize {
        self.rank[flat]
    }
}

impl fmt::Display for PriorityOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.order.iter().map(Slot::to_string).collect();
        f.write_str(&names.join("<"))
    }
}

/// Raw slot masses produced by a priority product.
///
/// The masses sum to the product of the operands' total masses, so a slot can
/// exceed 1 when the operands are not normalized. [`PriorityProduct::to_value`]
/// converts back to a [`RefinedValue`] when every slot fits in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PriorityProduct {
    sig: Signature,
    masses: Vec<f64>,
}

impl PriorityProduct {
    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Masses in flat order `T1..Tp, I1..Ir, F1..Fs`.
    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn mass(&self, slot: Slot) -> Option<f64> {
        self.sig.flat_index(slot).ok().map(|k| self.masses[k])
    }

    pub fn truth(&self) -> &[f64] {
        &self.masses[..self.sig.p()]
    }

    pub fn indeterminacy(&self) -> &[f64] {
        &self.masses[self.sig.p()..self.sig.p() + self.sig.r()]
    }

    pub fn falsity(&self) -> &[f64] {
        &self.masses[self.sig.p() + self.sig.r()..]
    }

    pub fn total(&self) -> f64 {
        self.masses.iter().sum()
    }

    /// Same block swap as [`negate`].
    pub fn negate(&self) -> Result<PriorityProduct, ConnectiveError> {
        let sig = self.sig;
        if sig.p() != sig.s() {
            return Err(ConnectiveError::AsymmetricSignature(sig));
        }
        let mut masses = Vec::with_capacity(sig.n());
        masses.extend(self.falsity().iter().rev());
        masses.extend(self.indeterminacy());
        masses.extend(self.truth().iter().rev());
        Ok(PriorityProduct { sig, masses })
    }

    pub fn to_value(&self) -> Result<RefinedValue, ConnectiveError> {
        let flat = self
            .masses
            .iter()
            .enumerate()
            .map(|(k, &m)| {
                if m > 1.0 + MASS_TOLERANCE {
                    Err(ConnectiveError::MassOverflow {
                        slot: self.sig.slot_at(k).expect("in range"),
                        mass: m,
                    })
                } else {
                    Ok(UnitInterval::clamped(m, m))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RefinedValue::from_flat(self.sig, flat))
    }

    /// Rescales the masses to sum to `target` and converts to a value.
    pub fn normalized(&self, target: f64) -> Result<RefinedValue, ValueError> {
        if !(target.is_finite() && target > 0.0) {
            return Err(ValueError::InvalidTarget(target));
        }
        let total = self.total();
        if total <= 0.0 {
            return Err(ValueError::ZeroMass);
        }
        let flat = self
            .masses
            .iter()
            .map(|&m| UnitInterval::scalar((m * target / total).min(1.0)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RefinedValue::from_flat(self.sig, flat))
    }
}

/// Priority product: each cross term `x[a] * y[b]` goes to the higher-ranked
/// of the two slots.
pub fn priority_combine(
    x: &RefinedValue,
    y: &RefinedValue,
    ord: &PriorityOrder,
) -> Result<PriorityProduct, ConnectiveError> {
    let sig = same_sig(x, y)?;
    if ord.sig() != sig {
        return Err(ConnectiveError::InvalidOrder(format!(
            "order is for signature {}, operands have {sig}",
            ord.sig()
        )));
    }
    let xs = x.scalars().ok_or(ConnectiveError::IntervalUnsupported)?;
    let ys = y.scalars().ok_or(ConnectiveError::IntervalUnsupported)?;
    let mut masses = vec![0.0; sig.n()];
    for (a, &xa) in xs.iter().enumerate() {
        for (b, &yb) in ys.iter().enumerate() {
            let winner = if ord.rank_of_flat(a) >= ord.rank_of_flat(b) {
                a
            } else {
                b
            };
            masses[winner] += xa * yb;
        }
    }
    Ok(PriorityProduct { sig, masses })
}

/// Priority conjunction: `T < I < F` for [`Bound::Lower`], `I < T < F` for
/// [`Bound::Upper`], extended block-wise to refined signatures.
pub fn priority_and(
    x: &RefinedValue,
    y: &RefinedValue,
    bound: Bound,
) -> Result<PriorityProduct, ConnectiveError> {
    priority_combine(x, y, &PriorityOrder::for_and(x.sig(), bound))
}

/// Priority disjunction: `T > I > F` for [`Bound::Upper`], `T > F > I` for
/// [`Bound::Lower`].
pub fn priority_or(
    x: &RefinedValue,
    y: &RefinedValue,
    bound: Bound,
) -> Result<PriorityProduct, ConnectiveError> {
    priority_combine(x, y, &PriorityOrder::for_or(x.sig(), bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triad(t: f64, i: f64, f: f64) -> RefinedValue {
        RefinedValue::triad(t, i, f).unwrap()
    }

    fn scalars(v: &RefinedValue) -> Vec<f64> {
        v.scalars().unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64]) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < 1e-12, "{actual:?} != {expected:?}");
        }
    }

    // Independent oracle: enumerate all slot pairs and look up the winner by
    // position in an explicit chain.
    #[allow(clippy::needless_range_loop)]
    fn enumerate_pairs(x: &[f64], y: &[f64], chain: &[usize]) -> Vec<f64> {
        let pos = |k: usize| chain.iter().position(|&c| c == k).unwrap();
        let mut out = vec![0.0; x.len()];
        for a in 0..x.len() {
            for b in 0..y.len() {
                let c = if pos(a) > pos(b) { a } else { b };
                out[c] += x[a] * y[b];
            }
        }
        out
    }

    #[test]
    fn n_norm_examples() {
        let t = triad(1.0, 0.0, 0.0);
        let r = n_norm(&t, &t, NormFamily::MinMax, IndeterminacyMode::Pessimistic).unwrap();
        assert_close(&scalars(&r), &[1.0, 0.0, 0.0]);

        let x = triad(0.5, 0.3, 0.2);
        let y = triad(0.4, 0.4, 0.2);
        let r = n_norm(&x, &y, NormFamily::MinMax, IndeterminacyMode::Pessimistic).unwrap();
        let oracle = [0.5f64.min(0.4), 0.3f64.max(0.4), 0.2f64.max(0.2)];
        assert_close(&scalars(&r), &oracle);
        assert_close(&scalars(&r), &[0.4, 0.4, 0.2]);

        let sig = Signature::new(2, 1, 1).unwrap();
        let x = RefinedValue::from_scalars(sig, &[0.6, 0.8], &[0.5], &[0.1]).unwrap();
        let y = RefinedValue::from_scalars(sig, &[0.5, 0.9], &[0.2], &[0.3]).unwrap();
        let r = n_norm(
            &x,
            &y,
            NormFamily::ProductProbSum,
            IndeterminacyMode::Pessimistic,
        )
        .unwrap();
        assert_close(&scalars(&r), &[0.30, 0.72, 0.60, 0.37]);
    }

    #[test]
    fn n_conorm_examples() {
        let f = triad(0.0, 0.0, 1.0);
        let r = n_conorm(&f, &f, NormFamily::MinMax, IndeterminacyMode::Pessimistic).unwrap();
        assert_close(&scalars(&r), &[0.0, 0.0, 1.0]);

        let x = triad(0.5, 0.3, 0.2);
        let y = triad(0.4, 0.4, 0.2);
        let r = n_conorm(&x, &y, NormFamily::MinMax, IndeterminacyMode::Pessimistic).unwrap();
        assert_close(&scalars(&r), &[0.5, 0.3, 0.2]);
    }

    #[test]
    fn signature_mismatch() {
        let x = triad(0.5, 0.3, 0.2);
        let y = RefinedValue::crisp_true(Signature::new(2, 1, 1).unwrap());
        assert!(matches!(
            n_norm(&x, &y, NormFamily::MinMax, IndeterminacyMode::Optimistic),
            Err(ConnectiveError::SignatureMismatch { .. })
        ));
        assert!(matches!(
            priority_and(&x, &y, Bound::Lower),
            Err(ConnectiveError::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn priority_combine_examples() {
        let x = triad(0.5, 0.3, 0.2);
        let y = triad(0.4, 0.4, 0.2);
        let xs = [0.5, 0.3, 0.2];
        let ys = [0.4, 0.4, 0.2];

        let and = priority_combine(&x, &y, &PriorityOrder::and_default(Signature::TRIAD)).unwrap();
        let oracle = enumerate_pairs(&xs, &ys, &[0, 1, 2]);
        assert_close(and.masses(), &oracle);
        assert_close(and.masses(), &[0.20, 0.44, 0.36]);

        let or = priority_combine(&x, &y, &PriorityOrder::or_default(Signature::TRIAD)).unwrap();
        let oracle = enumerate_pairs(&xs, &ys, &[2, 1, 0]);
        assert_close(or.masses(), &oracle);
        assert_close(or.masses(), &[0.70, 0.26, 0.04]);

        let r = priority_combine(
            &triad(1.0, 0.0, 0.0),
            &triad(0.0, 0.0, 1.0),
            &PriorityOrder::and_default(Signature::TRIAD),
        )
        .unwrap();
        assert_close(r.masses(), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn priority_and_or_bounds() {
        let x = triad(0.5, 0.3, 0.2);
        let y = triad(0.4, 0.4, 0.2);
        let xs = [0.5, 0.3, 0.2];
        let ys = [0.4, 0.4, 0.2];

        assert_close(
            priority_and(&x, &y, Bound::Lower).unwrap().masses(),
            &[0.20, 0.44, 0.36],
        );
        let upper = priority_and(&x, &y, Bound::Upper).unwrap();
        assert_close(upper.masses(), &enumerate_pairs(&xs, &ys, &[1, 0, 2]));
        assert_close(upper.masses(), &[0.52, 0.12, 0.36]);
        let t = triad(1.0, 0.0, 0.0);
        assert_close(
            priority_and(&t, &t, Bound::Lower).unwrap().masses(),
            &[1.0, 0.0, 0.0],
        );

        assert_close(
            priority_or(&x, &y, Bound::Upper).unwrap().masses(),
            &[0.70, 0.26, 0.04],
        );
        let lower = priority_or(&x, &y, Bound::Lower).unwrap();
        assert_close(lower.masses(), &enumerate_pairs(&xs, &ys, &[1, 2, 0]));
        assert_close(lower.masses(), &[0.70, 0.12, 0.18]);
        let f = triad(0.0, 0.0, 1.0);
        assert_close(
            priority_or(&f, &f, Bound::Upper).unwrap().masses(),
            &[0.0, 0.0, 1.0],
        );
    }

    #[test]
    fn priority_rejects_intervals() {
        let x = RefinedValue::new(
            Signature::TRIAD,
            vec![UnitInterval::new(0.1, 0.2).unwrap()],
            vec![UnitInterval::ZERO],
            vec![UnitInterval::ZERO],
        )
        .unwrap();
        assert_eq!(
            priority_and(&x, &x, Bound::Lower),
            Err(ConnectiveError::IntervalUnsupported)
        );
    }

    #[test]
    fn refined_chains() {
        let sig = Signature::new(2, 3, 2).unwrap();
        assert_eq!(
            PriorityOrder::and_default(sig).to_string(),
            "T1<T2<I1<I2<I3<F1<F2"
        );
        assert_eq!(
            PriorityOrder::or_default(sig).to_string(),
            "F2<F1<I3<I2<I1<T2<T1"
        );
        assert_eq!(
            PriorityOrder::and_upper(sig).to_string(),
            "I1<I2<I3<T1<T2<F1<F2"
        );
        assert_eq!(
            PriorityOrder::or_lower(sig).to_string(),
            "I3<I2<I1<F2<F1<T2<T1"
        );
        let parsed = PriorityOrder::parse(sig, "T1>T2>I1>I2>I3>F1>F2").unwrap();
        assert_eq!(parsed, PriorityOrder::or_default(sig));
    }

    #[test]
    fn invalid_orders() {
        let sig = Signature::TRIAD;
        assert!(matches!(
            PriorityOrder::parse(sig, "T1<I1"),
            Err(ConnectiveError::InvalidOrder(_))
        ));
        assert!(matches!(
            PriorityOrder::parse(sig, "T1<T1<F1"),
            Err(ConnectiveError::InvalidOrder(_))
        ));
        assert!(matches!(
            PriorityOrder::parse(sig, "T1<I2<F1"),
            Err(ConnectiveError::InvalidOrder(_))
        ));
        assert!(matches!(
            PriorityOrder::parse(sig, "T1<I1>F1"),
            Err(ConnectiveError::InvalidOrder(_))
        ));
        let other = PriorityOrder::and_default(Signature::new(2, 1, 2).unwrap());
        let x = triad(0.1, 0.1, 0.1);
        assert!(matches!(
            priority_combine(&x, &x, &other),
            Err(ConnectiveError::InvalidOrder(_))
        ));
    }

    #[test]
    fn negate_examples() {
        let v = triad(0.7, 0.1, 0.2);
        assert_close(&scalars(&negate(&v).unwrap()), &[0.2, 0.1, 0.7]);

        let sig = Signature::new(2, 1, 2).unwrap();
        let v = RefinedValue::from_scalars(sig, &[0.1, 0.2], &[0.3], &[0.4, 0.5]).unwrap();
        let n = negate(&v).unwrap();
        assert_close(&scalars(&n), &[0.5, 0.4, 0.3, 0.2, 0.1]);
        assert_eq!(negate(&n).unwrap(), v);

        let v = RefinedValue::crisp_true(Signature::new(2, 1, 1).unwrap());
        assert!(matches!(
            negate(&v),
            Err(ConnectiveError::AsymmetricSignature(_))
        ));
    }

    #[test]
    fn projections() {
        let (p, lossy) = project_fuzzy(&triad(0.6, 0.3, 0.4));
        assert_close(&scalars(&p), &[0.6, 0.0, 0.4]);
        assert!(lossy);
        let v = triad(0.6, 0.0, 0.4);
        let (p, lossy) = project_fuzzy(&v);
        assert_eq!(p, v);
        assert!(!lossy);
        let sig = Signature::new(2, 2, 1).unwrap();
        let v = RefinedValue::from_scalars(sig, &[0.5; 2], &[0.5; 2], &[0.5]).unwrap();
        let (p, lossy) = project_fuzzy(&v);
        assert_close(&scalars(&p), &[0.5, 0.5, 0.0, 0.0, 0.5]);
        assert!(lossy);

        let sig = Signature::new(1, 2, 1).unwrap();
        let v = RefinedValue::from_scalars(sig, &[0.6], &[0.2, 0.3], &[0.4]).unwrap();
        let (p, clamped) = project_intuitionistic(&v);
        assert_eq!(p.sig(), Signature::TRIAD);
        assert_close(&scalars(&p), &[0.6, 0.5, 0.4]);
        assert!(!clamped);
        let v = RefinedValue::from_scalars(sig, &[0.6], &[0.8, 0.7], &[0.4]).unwrap();
        let (p, clamped) = project_intuitionistic(&v);
        assert_close(&scalars(&p), &[0.6, 1.0, 0.4]);
        assert!(clamped);
        let v = triad(0.6, 0.3, 0.4);
        assert_eq!(project_intuitionistic(&v), (v.clone(), false));
    }

    #[test]
    fn product_overflow_and_normalization() {
        let x = triad(1.0, 1.0, 1.0);
        let p = priority_and(&x, &x, Bound::Lower).unwrap();
        assert_close(p.masses(), &[1.0, 3.0, 5.0]);
        assert!(matches!(
            p.to_value(),
            Err(ConnectiveError::MassOverflow { .. })
        ));
        let n = p.normalized(1.0).unwrap();
        assert_close(&scalars(&n), &[1.0 / 9.0, 3.0 / 9.0, 5.0 / 9.0]);
    }
}
