//! Randomized property tests: field axioms of the exact scalar domain, the
//! two conjugation involutions, and print/parse round-trips.

use num_bigint::BigInt;
use proptest::prelude::*;
use qg_core::hopf::{builtin, Builtin, Presentation, QPoly};
use qg_core::parse::{parse_element, parse_scalar};
use qg_core::scalar::{Involution, QScalar, ZPoly};

fn zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-6i64..=6, 0..5)
        .prop_map(|cs| ZPoly::new(cs.into_iter().map(BigInt::from).collect()))
}

fn nonzero_zpoly() -> impl Strategy<Value = ZPoly> {
    zpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qscalar() -> impl Strategy<Value = QScalar> {
    (zpoly(), nonzero_zpoly()).prop_map(|(n, d)| QScalar::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes_and_associates(a in qscalar(), b in qscalar(), c in qscalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_commutes_and_associates(a in qscalar(), b in qscalar(), c in qscalar()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributivity_and_identities(a in qscalar(), b in qscalar(), c in qscalar()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&QScalar::zero()), a.clone());
        prop_assert_eq!(a.mul(&QScalar::one()), a.clone());
        prop_assert_eq!(a.sub(&a), QScalar::zero());
    }

    #[test]
    fn inverses(a in qscalar()) {
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), QScalar::one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism(a in qscalar(), b in qscalar()) {
        for inv in [Involution::Identity, Involution::QInverse] {
            prop_assert_eq!(a.conjugate(inv).conjugate(inv), a.clone());
            prop_assert_eq!(
                a.add(&b).conjugate(inv),
                a.conjugate(inv).add(&b.conjugate(inv))
            );
            prop_assert_eq!(
                a.mul(&b).conjugate(inv),
                a.conjugate(inv).mul(&b.conjugate(inv))
            );
        }
        prop_assert_eq!(QScalar::q().conjugate(Involution::QInverse), QScalar::q_pow(-1));
    }

    #[test]
    fn scalar_print_parse_round_trip(a in qscalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }
}

fn slq2() -> &'static Presentation {
    static P: std::sync::OnceLock<Presentation> = std::sync::OnceLock::new();
    P.get_or_init(|| builtin(Builtin::Slq2).unwrap())
}

fn slq2_element() -> impl Strategy<Value = QPoly> {
    let words = slq2().rewrite().basis_words(3);
    prop::collection::vec(((0..words.len()), qscalar()), 0..4).prop_map(move |terms| {
        let mut p = QPoly::zero();
        for (i, c) in terms {
            p.add_term(words[i].clone(), c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn element_print_parse_round_trip_slq2(p in slq2_element()) {
        let pres = slq2();
        let text = pres.fmt_element(&p);
        prop_assert_eq!(parse_element(&text, pres).unwrap(), p);
    }
}
