#![allow(dead_code)]

use nvlogic::{RefinedValue, Signature, UnitInterval};
use proptest::prelude::*;

pub fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => Just(0.0),
        1 => Just(1.0),
        8 => 0.0..=1.0f64,
    ]
}

pub fn interval() -> impl Strategy<Value = UnitInterval> {
    (unit(), unit()).prop_map(|(a, b)| UnitInterval::new(a.min(b), a.max(b)).unwrap())
}

pub fn signature() -> impl Strategy<Value = Signature> {
    (1usize..=3, 1usize..=3, 1usize..=3).prop_map(|(p, r, s)| Signature::new(p, r, s).unwrap())
}

pub fn scalar_value(sig: Signature) -> impl Strategy<Value = RefinedValue> {
    (
        prop::collection::vec(unit(), sig.p()),
        prop::collection::vec(unit(), sig.r()),
        prop::collection::vec(unit(), sig.s()),
    )
        .prop_map(move |(t, i, f)| RefinedValue::from_scalars(sig, &t, &i, &f).unwrap())
}

pub fn interval_value(sig: Signature) -> impl Strategy<Value = RefinedValue> {
    (
        prop::collection::vec(interval(), sig.p()),
        prop::collection::vec(interval(), sig.r()),
        prop::collection::vec(interval(), sig.s()),
    )
        .prop_map(move |(t, i, f)| RefinedValue::new(sig, t, i, f).unwrap())
}

pub fn triad() -> impl Strategy<Value = RefinedValue> {
    scalar_value(Signature::TRIAD)
}

pub fn scalars(v: &RefinedValue) -> Vec<f64> {
    v.scalars().expect("scalar value")
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
