mod common;

use common::*;
use nvlogic::{
    n_conorm, n_norm, negate, priority_and, priority_combine, priority_or, Bound,
    IndeterminacyMode, NormFamily, PriorityOrder, RefinedValue, Signature, Slot,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = NormFamily> {
    prop::sample::select(NormFamily::ALL.to_vec())
}

fn mode() -> impl Strategy<Value = IndeterminacyMode> {
    prop_oneof![
        Just(IndeterminacyMode::Pessimistic),
        Just(IndeterminacyMode::Optimistic)
    ]
}

fn permutation(sig: Signature) -> impl Strategy<Value = PriorityOrder> {
    Just(sig.slots().collect::<Vec<Slot>>())
        .prop_shuffle()
        .prop_map(move |slots| PriorityOrder::new(sig, slots).unwrap())
}

// Pair-enumeration oracle: each product goes to the slot that appears later
// in the low-to-high chain.
fn enumerate(x: &[f64], y: &[f64], sig: Signature, ord: &PriorityOrder) -> Vec<f64> {
    let chain: Vec<usize> = ord
        .slots()
        .iter()
        .map(|&s| sig.flat_index(s).unwrap())
        .collect();
    let pos = |k: usize| chain.iter().position(|&c| c == k).unwrap();
    let mut out = vec![0.0; x.len()];
    for a in 0..x.len() {
        for b in 0..y.len() {
            out[if pos(a) > pos(b) { a } else { b }] += x[a] * y[b];
        }
    }
    out
}

fn expand_and(x: &[f64], y: &[f64]) -> [f64; 3] {
    let (tx, ix, fx) = (x[0], x[1], x[2]);
    let (ty, iy, fy) = (y[0], y[1], y[2]);
    [
        tx * ty,
        tx * iy + ty * ix + ix * iy,
        tx * fy + ty * fx + ix * fy + iy * fx + fx * fy,
    ]
}

fn expand_or(x: &[f64], y: &[f64]) -> [f64; 3] {
    let (tx, ix, fx) = (x[0], x[1], x[2]);
    let (ty, iy, fy) = (y[0], y[1], y[2]);
    [
        tx * ty + tx * iy + ty * ix + tx * fy + ty * fx,
        ix * iy + ix * fy + iy * fx,
        fx * fy,
    ]
}

fn same_sig_pair() -> impl Strategy<Value = (RefinedValue, RefinedValue)> {
    signature().prop_flat_map(|sig| (interval_value(sig), interval_value(sig)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn combine_matches_enumeration(
        (x, y, ord) in signature().prop_flat_map(|sig| (scalar_value(sig), scalar_value(sig), permutation(sig)))
    ) {
        let got = priority_combine(&x, &y, &ord).unwrap();
        let want = enumerate(&scalars(&x), &scalars(&y), x.sig(), &ord);
        prop_assert!(max_abs_diff(got.masses(), &want) <= 1e-12);
    }

    #[test]
    fn combine_conserves_mass(
        (x, y, ord) in signature().prop_flat_map(|sig| (scalar_value(sig), scalar_value(sig), permutation(sig)))
    ) {
        let got = priority_combine(&x, &y, &ord).unwrap();
        let expected = x.total_sum().lo * y.total_sum().lo;
        prop_assert!((got.total() - expected).abs() <= 1e-12);
    }

    #[test]
    fn literal_expansions(x in triad(), y in triad()) {
        let (xs, ys) = (scalars(&x), scalars(&y));
        prop_assert!(max_abs_diff(priority_and(&x, &y, Bound::Lower).unwrap().masses(), &expand_and(&xs, &ys)) <= 1e-12);
        prop_assert!(max_abs_diff(priority_or(&x, &y, Bound::Upper).unwrap().masses(), &expand_or(&xs, &ys)) <= 1e-12);
    }

    #[test]
    fn priority_duality(x in triad(), y in triad()) {
        let lhs = priority_or(&x, &y, Bound::Upper).unwrap();
        let rhs = priority_and(&negate(&x).unwrap(), &negate(&y).unwrap(), Bound::Lower).unwrap().negate().unwrap();
        prop_assert!(max_abs_diff(lhs.masses(), rhs.masses()) <= 1e-12);
    }

    #[test]
    fn fuzzy_reduction(tx in unit(), ty in unit()) {
        let x = RefinedValue::triad(tx, 0.0, 1.0 - tx).unwrap();
        let y = RefinedValue::triad(ty, 0.0, 1.0 - ty).unwrap();
        let r = priority_and(&x, &y, Bound::Lower).unwrap();
        prop_assert!(max_abs_diff(r.masses(), &[tx * ty, 0.0, 1.0 - tx * ty]) <= 1e-12);
    }

    #[test]
    fn priority_is_commutative_and_associative(x in triad(), y in triad(), z in triad(), bound in prop_oneof![Just(Bound::Lower), Just(Bound::Upper)]) {
        for op in [priority_and, priority_or] {
            let xy = op(&x, &y, bound).unwrap();
            let yx = op(&y, &x, bound).unwrap();
            prop_assert!(max_abs_diff(xy.masses(), yx.masses()) <= 1e-12);
        }
        // associativity on raw masses, using operands scaled to unit mass so
        // intermediate results remain valid values
        if [&x, &y, &z].iter().all(|v| v.total_sum().lo > 1e-3) {
            let (x, y, z) = (x.normalize(1.0).unwrap(), y.normalize(1.0).unwrap(), z.normalize(1.0).unwrap());
            for op in [priority_and, priority_or] {
                let left = op(&op(&x, &y, bound).unwrap().to_value().unwrap(), &z, bound).unwrap();
                let right = op(&x, &op(&y, &z, bound).unwrap().to_value().unwrap(), bound).unwrap();
                prop_assert!(max_abs_diff(left.masses(), right.masses()) <= 1e-12);
            }
        }
    }

    #[test]
    fn norm_slot_law((x, y) in same_sig_pair(), fam in family(), m in mode()) {
        let and = n_norm(&x, &y, fam, m).unwrap();
        let or = n_conorm(&x, &y, fam, m).unwrap();
        for j in 0..x.sig().p() {
            prop_assert_eq!(and.truth()[j], fam.t_norm(x.truth()[j], y.truth()[j]));
            prop_assert_eq!(or.truth()[j], fam.t_conorm(x.truth()[j], y.truth()[j]));
        }
        for l in 0..x.sig().s() {
            prop_assert_eq!(and.falsity()[l], fam.t_conorm(x.falsity()[l], y.falsity()[l]));
            prop_assert_eq!(or.falsity()[l], fam.t_norm(x.falsity()[l], y.falsity()[l]));
        }
        for k in 0..x.sig().r() {
            let (a, b) = (x.indeterminacy()[k], y.indeterminacy()[k]);
            let (and_i, or_i) = match m {
                IndeterminacyMode::Pessimistic => (fam.t_conorm(a, b), fam.t_norm(a, b)),
                IndeterminacyMode::Optimistic => (fam.t_norm(a, b), fam.t_conorm(a, b)),
            };
            prop_assert_eq!(and.indeterminacy()[k], and_i);
            prop_assert_eq!(or.indeterminacy()[k], or_i);
        }
    }

    #[test]
    fn optimistic_indeterminacy_below_pessimistic((x, y) in same_sig_pair(), fam in family()) {
        let opt = n_norm(&x, &y, fam, IndeterminacyMode::Optimistic).unwrap();
        let pes = n_norm(&x, &y, fam, IndeterminacyMode::Pessimistic).unwrap();
        for (o, p) in opt.indeterminacy().iter().zip(pes.indeterminacy()) {
            prop_assert!(o.lo() <= p.lo() && o.hi() <= p.hi());
        }
    }

    #[test]
    fn norms_commute((x, y) in same_sig_pair(), fam in family(), m in mode()) {
        prop_assert_eq!(n_norm(&x, &y, fam, m).unwrap(), n_norm(&y, &x, fam, m).unwrap());
        prop_assert_eq!(n_conorm(&x, &y, fam, m).unwrap(), n_conorm(&y, &x, fam, m).unwrap());
    }

    #[test]
    fn raising_truth_never_lowers_result_truth((x, y) in same_sig_pair(), fam in family(), m in mode(), bump in 0.0..=1.0f64) {
        let raised_t: Vec<_> = x.truth().iter()
            .map(|c| nvlogic::UnitInterval::new(c.lo() + (1.0 - c.lo()) * bump, c.hi() + (1.0 - c.hi()) * bump).unwrap())
            .map(|c| nvlogic::UnitInterval::new(c.lo().min(c.hi()), c.hi()).unwrap())
            .collect();
        let raised = RefinedValue::new(x.sig(), raised_t, x.indeterminacy().to_vec(), x.falsity().to_vec()).unwrap();
        for op in [n_norm, n_conorm] {
            let before = op(&x, &y, fam, m).unwrap();
            let after = op(&raised, &y, fam, m).unwrap();
            for (b, a) in before.truth().iter().zip(after.truth()) {
                prop_assert!(a.lo() >= b.lo() && a.hi() >= b.hi());
            }
        }
    }

    #[test]
    fn conorm_is_dual_of_norm(x in interval_value(Signature::TRIAD), y in interval_value(Signature::TRIAD), fam in family(), m in mode()) {
        let lhs = n_conorm(&x, &y, fam, m).unwrap();
        let rhs = negate(&n_norm(&negate(&x).unwrap(), &negate(&y).unwrap(), fam, m.opposite()).unwrap()).unwrap();
        for (a, b) in lhs.components().zip(rhs.components()) {
            prop_assert!((a.lo() - b.lo()).abs() <= 1e-12 && (a.hi() - b.hi()).abs() <= 1e-12);
        }
    }

    #[test]
    fn negate_is_involution(v in (1usize..4, 1usize..4).prop_flat_map(|(p, r)| interval_value(Signature::new(p, r, p).unwrap()))) {
        prop_assert_eq!(negate(&negate(&v).unwrap()).unwrap(), v);
    }
}

#[test]
fn boolean_corners() {
    let t = RefinedValue::triad(1.0, 0.0, 0.0).unwrap();
    let f = RefinedValue::triad(0.0, 0.0, 1.0).unwrap();
    let as_bool = |v: &RefinedValue| -> bool {
        if *v == t {
            true
        } else if *v == f {
            false
        } else {
            panic!("not crisp: {v}")
        }
    };
    for (a, b) in [(true, true), (true, false), (false, true), (false, false)] {
        let (x, y) = (if a { &t } else { &f }, if b { &t } else { &f });
        for bound in [Bound::Lower, Bound::Upper] {
            assert_eq!(
                as_bool(&priority_and(x, y, bound).unwrap().to_value().unwrap()),
                a && b
            );
            assert_eq!(
                as_bool(&priority_or(x, y, bound).unwrap().to_value().unwrap()),
                a || b
            );
        }
        for fam in NormFamily::ALL {
            for m in [
                IndeterminacyMode::Pessimistic,
                IndeterminacyMode::Optimistic,
            ] {
                assert_eq!(as_bool(&n_norm(x, y, fam, m).unwrap()), a && b);
                assert_eq!(as_bool(&n_conorm(x, y, fam, m).unwrap()), a || b);
            }
        }
    }
}
