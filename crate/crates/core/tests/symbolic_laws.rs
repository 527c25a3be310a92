use nvlogic::{Belnap, Kleene};

const KLEENE_AS_BELNAP: [(Kleene, Belnap); 3] = [
    (Kleene::True, Belnap::True),
    (Kleene::False, Belnap::False),
    (Kleene::Unknown, Belnap::Unknown),
];

// {T, F, C} embeds into Kleene with C playing the role of U.
const KLEENE_AS_BELNAP_C: [(Kleene, Belnap); 3] = [
    (Kleene::True, Belnap::True),
    (Kleene::False, Belnap::False),
    (Kleene::Unknown, Belnap::Contradiction),
];

fn check_restriction(map: &[(Kleene, Belnap); 3]) {
    let to_belnap = |k: Kleene| map.iter().find(|(a, _)| *a == k).unwrap().1;
    for &(ka, ba) in map {
        for &(kb, bb) in map {
            assert_eq!(ba.and(bb), to_belnap(ka.and(kb)), "{ba:?} and {bb:?}");
            assert_eq!(ba.or(bb), to_belnap(ka.or(kb)), "{ba:?} or {bb:?}");
        }
        assert_eq!(ba.not(), to_belnap(ka.not()));
    }
}

#[test]
fn belnap_restricted_to_unknown_is_kleene() {
    check_restriction(&KLEENE_AS_BELNAP);
}

#[test]
fn belnap_restricted_to_contradiction_is_kleene() {
    check_restriction(&KLEENE_AS_BELNAP_C);
}

#[test]
fn belnap_and_is_a_commutative_monoid_with_zero() {
    for x in Belnap::VALUES {
        assert_eq!(x.and(Belnap::True), x);
        assert_eq!(Belnap::True.and(x), x);
        assert_eq!(x.and(Belnap::False), Belnap::False);
        assert_eq!(x.and(x), x);
        for y in Belnap::VALUES {
            assert_eq!(x.and(y), y.and(x));
            for z in Belnap::VALUES {
                assert_eq!(x.and(y.and(z)), x.and(y).and(z));
            }
        }
    }
}

#[test]
fn belnap_negation_and_de_morgan() {
    for x in Belnap::VALUES {
        assert_eq!(x.not().not(), x);
        for y in Belnap::VALUES {
            assert_eq!(x.or(y), x.not().and(y.not()).not());
            assert_eq!(x.and(y), x.not().or(y.not()).not());
        }
    }
}

#[test]
fn boolean_embedding_is_closed_and_classical() {
    for a in [false, true] {
        assert_eq!(Belnap::from(a).not(), Belnap::from(!a));
        assert_eq!(Kleene::from(a).not(), Kleene::from(!a));
        for b in [false, true] {
            assert_eq!(Belnap::from(a).and(Belnap::from(b)), Belnap::from(a && b));
            assert_eq!(Belnap::from(a).or(Belnap::from(b)), Belnap::from(a || b));
            assert_eq!(Kleene::from(a).and(Kleene::from(b)), Kleene::from(a && b));
            assert_eq!(Kleene::from(a).or(Kleene::from(b)), Kleene::from(a || b));
        }
    }
}

#[test]
fn kleene_matches_numeric_min_max() {
    for x in Kleene::VALUES {
        assert_eq!(x.not().numeric(), 1.0 - x.numeric());
        for y in Kleene::VALUES {
            assert_eq!(x.and(y).numeric(), x.numeric().min(y.numeric()));
            assert_eq!(x.or(y).numeric(), x.numeric().max(y.numeric()));
        }
    }
}
